"""Small simple graphs as rows of adjacency bitsets.

Vertices are 0-based integers; the vertex ``v_i`` of a family definition is
vertex ``i - 1`` here. One adjacency row fits a machine word because orders
are capped at 64.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from strengthlab.exceptions import EmptyGraphError, GraphError
from strengthlab.utils import full_mask, iter_bits, lowest_bit

__all__ = (
    'MAX_ORDER',
    'Graph',
    'Numbering',
    'from_edges',
    'empty',
    'complete',
    'complete_bipartite',
    'star',
    'path',
    'cycle',
    'build_fk',
    'complement',
    'disjoint_union',
    'disjoint_copies',
    'degree',
    'min_degree',
    'max_degree',
    'independence_number',
    'clique_number',
    'matching_number',
    'has_one_factor',
    'contains_subgraph',
    'SubgraphMatcher',
    'to_networkx',
)

MAX_ORDER = 64

# above this order matching_number defers to networkx
EXACT_MATCHING_ORDER = 12


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    :param order: Number of vertices, in [0, 64]
    :type order: int
    :param adj: ``adj[v]`` is the neighbourhood of ``v`` as a bit mask
    :type adj: Tuple[int, ...]
    """

    order: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        _check_order(self.order)

        if len(self.adj) != self.order:
            raise GraphError(
                f'Expected {self.order} adjacency rows, got {len(self.adj)}'
            )

        limit = full_mask(self.order)
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~limit:
                raise GraphError(f'Row {v} references vertices outside [0, {self.order})')
            if row >> v & 1:
                raise GraphError(f'Loop at vertex {v}')
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f'Adjacency is not symmetric at ({v}, {u})')

    @classmethod
    def _from_rows(cls, order: int, rows: Sequence[int]) -> 'Graph':
        # rows built by this package are symmetric and loop free already
        graph = object.__new__(cls)
        object.__setattr__(graph, 'order', order)
        object.__setattr__(graph, 'adj', tuple(rows))
        return graph

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def is_empty(self) -> bool:
        """True when the graph has no edges."""
        return not any(self.adj)

    def relabel(self, perm: Sequence[int]) -> 'Graph':
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError('Relabeling must be a permutation of the vertices')
        rows = [0] * self.order
        for v, row in enumerate(self.adj):
            image = 0
            for u in iter_bits(row):
                image |= 1 << perm[u]
            rows[perm[v]] = image
        return Graph._from_rows(self.order, rows)

    def add_edge(self, u: int, v: int) -> 'Graph':
        """The graph ``G + uv``."""
        _check_pair(self.order, u, v)
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(self.order, rows)

    def __repr__(self) -> str:
        return f'Graph(order={self.order}, edges={self.edges()})'


@dataclass(frozen=True)
class Numbering:
    """A bijection from vertices to ``[1, n]`` and the strength it induces.

    :param labels: ``labels[v]`` is the label of vertex ``v``
    :type labels: Tuple[int, ...]
    :param strength_value: Maximum edge label, None for an edgeless graph
    :type strength_value: Optional[int]
    """

    labels: Tuple[int, ...]
    strength_value: Optional[int]

    def __post_init__(self):
        if sorted(self.labels) != list(range(1, len(self.labels) + 1)):
            raise GraphError(
                f'Labels must be a permutation of [1, {len(self.labels)}], got {list(self.labels)}'
            )

    @classmethod
    def of(cls, graph: Graph, labels: Sequence[int]) -> 'Numbering':
        labels = tuple(labels)
        if len(labels) != graph.order:
            raise GraphError(
                f'Numbering has {len(labels)} labels for a graph of order {graph.order}'
            )
        value = max((labels[u] + labels[v] for u, v in graph.edges()), default=None)
        return cls(labels=labels, strength_value=value)


def _check_order(n: int) -> None:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f'Order must be in [0, {MAX_ORDER}], got {n}')


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f'Edge ({u}, {v}) has an endpoint outside [0, {n})')
    if u == v:
        raise GraphError(f'Loop edge at vertex {u}')


def _require_vertices(graph: Graph) -> None:
    if graph.order < 1:
        raise GraphError('Operation needs at least one vertex')


def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build the simple graph of order ``n`` with the given edges; duplicates collapse."""
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._from_rows(n, rows)


def empty(n: int) -> Graph:
    """The edgeless graph ``nK_1``."""
    _check_order(n)
    return Graph._from_rows(n, [0] * n)


def complete(n: int) -> Graph:
    _check_order(n)
    everyone = full_mask(n)
    return Graph._from_rows(n, [everyone & ~(1 << v) for v in range(n)])


def complete_bipartite(s: int, t: int) -> Graph:
    """``K_{s,t}`` with the side of size ``s`` on vertices ``0..s-1``."""
    if s < 0 or t < 0:
        raise GraphError('Part sizes must be non-negative')
    _check_order(s + t)
    left = full_mask(s)
    right = full_mask(s + t) & ~left
    return Graph._from_rows(s + t, [right] * s + [left] * t)


def star(k: int) -> Graph:
    """``K_{1,k-1}`` on ``k`` vertices, centre at vertex 0."""
    if k < 1:
        raise GraphError(f'A star needs at least one vertex, got {k}')
    return complete_bipartite(1, k - 1)


def path(n: int) -> Graph:
    _check_order(n)
    return from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f'A cycle needs at least three vertices, got {n}')
    _check_order(n)
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def build_fk(k: int) -> Graph:
    """The family member ``F_k``: ``v_i v_j`` for ``i <= k//2`` and ``i < j <= k + 1 - i``.

    ``F_1 = K_1``, ``F_2 = K_2``, ``F_3 = P_3`` and ``F_4 = K_{1,3} + e``. Every
    ``F_k`` is a subgraph of ``F_{k+1}`` under the identity map.
    """
    if k < 1:
        raise GraphError(f'F_k is defined for k >= 1, got {k}')
    _check_order(k)
    return from_edges(
        k,
        ((i - 1, j - 1) for i in range(1, k // 2 + 1) for j in range(i + 1, k + 2 - i)),
    )


def complement(graph: Graph) -> Graph:
    everyone = full_mask(graph.order)
    return Graph._from_rows(
        graph.order,
        [~row & everyone & ~(1 << v) for v, row in enumerate(graph.adj)],
    )


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Block-diagonal union; ``second``'s vertices follow ``first``'s."""
    n = first.order + second.order
    if n > MAX_ORDER:
        raise GraphError(f'Combined order {n} exceeds {MAX_ORDER}')
    shift = first.order
    return Graph._from_rows(n, list(first.adj) + [row << shift for row in second.adj])


def disjoint_copies(graph: Graph, copies: int) -> Graph:
    """``kH`` for ``k = copies``."""
    if copies < 0:
        raise GraphError('Number of copies must be non-negative')
    result = empty(0)
    for _ in range(copies):
        result = disjoint_union(result, graph)
    return result


def degree(graph: Graph, v: int) -> int:
    if not 0 <= v < graph.order:
        raise GraphError(f'Vertex {v} outside [0, {graph.order})')
    return graph.adj[v].bit_count()


def min_degree(graph: Graph) -> int:
    """``δ(G)``."""
    _require_vertices(graph)
    return min(graph.degrees())


def max_degree(graph: Graph) -> int:
    _require_vertices(graph)
    return max(graph.degrees())


def independence_number(graph: Graph) -> int:
    """``β(G)`` by branch and bound over candidate bitsets."""
    _require_vertices(graph)
    adj = graph.adj
    best = 0

    def search(candidates: int, size: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + candidates.bit_count() <= best:
            return

        pivot = min(iter_bits(candidates), key=lambda u: (adj[u] & candidates).bit_count())
        neighbours = adj[pivot] & candidates
        search(candidates & ~neighbours & ~(1 << pivot), size + 1)
        # a vertex of degree <= 1 always sits in some maximum independent set
        if neighbours.bit_count() > 1:
            search(candidates & ~(1 << pivot), size)

    search(full_mask(graph.order), 0)
    return best


def clique_number(graph: Graph) -> int:
    return independence_number(complement(graph))


def to_networkx(graph: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(graph.order))
    result.add_edges_from(graph.edges())
    return result


def matching_number(graph: Graph) -> int:
    """``β₁(G)``, the size of a maximum matching."""
    _require_vertices(graph)
    if graph.order > EXACT_MATCHING_ORDER:
        return len(nx.max_weight_matching(to_networkx(graph), maxcardinality=True))

    adj = graph.adj

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        v = lowest_bit(free)
        rest = free & ~(1 << v)
        result = best(rest)
        ceiling = free.bit_count() // 2
        for u in iter_bits(adj[v] & rest):
            result = max(result, 1 + best(rest & ~(1 << u)))
            if result == ceiling:
                break
        return result

    return best(full_mask(graph.order))


def has_one_factor(graph: Graph) -> bool:
    _require_vertices(graph)
    return graph.order % 2 == 0 and matching_number(graph) == graph.order // 2


class SubgraphMatcher:
    """Backtracking search for a copy of ``pattern`` inside host graphs.

    Pattern vertices are placed in descending pattern degree (ties by index);
    host candidates are tried in ascending index, so the first map found is
    the lexicographically first one under that order.
    """

    def __init__(self, pattern: Graph):
        self.pattern = pattern
        degrees = pattern.degrees()
        self.sequence = sorted(range(pattern.order), key=lambda v: (-degrees[v], v))
        position = {v: i for i, v in enumerate(self.sequence)}
        self.placed_neighbours = [
            [u for u in iter_bits(pattern.adj[v]) if position[u] < position[v]]
            for v in self.sequence
        ]
        self.required_degree = [degrees[v] for v in self.sequence]
        self.size = pattern.size

    def find(self, host: Graph) -> Optional[Tuple[int, ...]]:
        pattern = self.pattern
        if pattern.order > host.order or self.size > host.size:
            return None
        if pattern.order == 0:
            return ()

        host_degrees = host.degrees()
        eligible = [
            sum(1 << w for w in range(host.order) if host_degrees[w] >= need)
            for need in self.required_degree
        ]
        image = [0] * pattern.order
        sequence = self.sequence
        placed_neighbours = self.placed_neighbours
        rows = host.adj
        depth = len(sequence)

        def extend(i: int, used: int) -> bool:
            if i == depth:
                return True
            candidates = eligible[i] & ~used
            for u in placed_neighbours[i]:
                candidates &= rows[image[u]]
            v = sequence[i]
            while candidates:
                w = lowest_bit(candidates)
                candidates &= candidates - 1
                image[v] = w
                if extend(i + 1, used | 1 << w):
                    return True
            return False

        if extend(0, 0):
            return tuple(image)
        return None


@lru_cache(maxsize=256)
def _matcher_for(pattern: Graph) -> SubgraphMatcher:
    return SubgraphMatcher(pattern)


def contains_subgraph(host: Graph, pattern: Graph) -> Optional[Tuple[int, ...]]:
    """Return an injective map ``φ`` with ``φ[v]`` the host image of pattern vertex ``v``.

    Every pattern edge maps to a host edge. Returns None when no copy exists.
    """
    return _matcher_for(pattern).find(host)


def require_edges(graph: Graph, what: str = 'strength') -> None:
    if graph.is_empty():
        raise EmptyGraphError(f'{what} is undefined for an edgeless graph of order {graph.order}')
