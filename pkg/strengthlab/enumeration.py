"""Isomorphism-free enumeration of graphs by canonical augmentation.

Graphs of order ``n`` grow from ``K_1`` one vertex at a time. A child is kept
only when its newest vertex lies in the automorphism orbit of the vertex that
canonical labeling puts last, and children of one parent are deduplicated by
canonical form. Each isomorphism class is then reached exactly once, in an
order fixed by the augmentation masks, which makes the walk resumable from a
path of masks and splittable into hash-assigned shards.
"""

import hashlib
import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from strengthlab.config import CANONICAL_CEILING, ENUMERATION_CEILING
from strengthlab.exceptions import BudgetError, CursorError
from strengthlab.graph import Graph, complement, empty
from strengthlab.parsers import graph6_stream
from strengthlab.types import EnumPath, Visitor

__all__ = (
    'CURSOR_VERSION',
    'KNOWN_CLASS_COUNTS',
    'CanonicalForm',
    'EnumCursor',
    'GraphEnumerator',
    'canonical_form',
    'canonical_labeling',
    'is_isomorphic',
    'enumerate_graphs',
    'enumerate_partitioned',
    'cursor_save',
    'cursor_resume',
    'iter_graphs',
    'iter_graph6',
    'brute_force_classes',
    'complement_closure',
)

logger = logging.getLogger('strengthlab')

CURSOR_VERSION = 1

# OEIS A000088
KNOWN_CLASS_COUNTS = {
    1: 1,
    2: 2,
    3: 4,
    4: 11,
    5: 34,
    6: 156,
    7: 1044,
    8: 12346,
    9: 274668,
    10: 12005168,
    11: 1018997864,
    12: 165091172592,
}


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Upper-triangle bit string maximal over all vertex permutations.

    Bits are read column-major (``x(0,1), x(0,2), x(1,2), ...``) with the first
    pair as the most significant bit, so comparing ``bits`` compares strings.
    """

    order: int
    bits: int

    def to_graph(self) -> Graph:
        rows = [0] * self.order
        position = self.order * (self.order - 1) // 2
        for j in range(1, self.order):
            for i in range(j):
                position -= 1
                if self.bits >> position & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph._from_rows(self.order, rows)


@dataclass(frozen=True)
class EnumCursor:
    """Resumable position of one shard of a walk.

    ``path`` holds the augmentation masks leading to the last visited class;
    it is empty before the first visit.
    """

    order: int
    path: EnumPath = ()
    shard: int = 0
    shard_count: int = 1
    visited: int = 0
    done: bool = False
    version: int = CURSOR_VERSION

    def validate(self) -> None:
        if self.version != CURSOR_VERSION:
            raise CursorError(
                f'Cursor version {self.version} is not supported (expected {CURSOR_VERSION})'
            )
        if not 1 <= self.order <= ENUMERATION_CEILING:
            raise CursorError(f'Cursor order {self.order} is out of range')
        if not 0 <= self.shard < self.shard_count:
            raise CursorError(f'Cursor shard {self.shard} of {self.shard_count} is invalid')
        if self.visited < 0:
            raise CursorError('Cursor visit count is negative')
        if self.visited and len(self.path) != self.order - 1:
            raise CursorError(
                f'Cursor path has {len(self.path)} steps, expected {self.order - 1}'
            )
        if not self.visited and self.path:
            raise CursorError('Cursor has a path but no visits')
        for depth, mask in enumerate(self.path, start=1):
            if not 0 <= mask < 1 << depth:
                raise CursorError(f'Mask {mask} at depth {depth} is out of range')


def _refine(adj: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    """Split ordered cells by neighbour counts until the partition is equitable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: List[List[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((adj[v] & mask).bit_count() for mask in masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                changed = True
                for signature in sorted(groups):
                    refined.append(groups[signature])
            else:
                refined.append(cell)
        cells = refined
        if not changed:
            return cells


def _certificate(adj: Sequence[int], lab: Sequence[int]) -> int:
    bits = 0
    for j in range(1, len(lab)):
        row = adj[lab[j]]
        for i in range(j):
            bits = bits << 1 | (row >> lab[i] & 1)
    return bits


def _twin_representatives(adj: Sequence[int], cell: Sequence[int]) -> List[int]:
    # swapping twins is an automorphism fixing everything individualized so far
    kept: List[int] = []
    for v in cell:
        if not any(
            adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in kept
        ):
            kept.append(v)
    return kept


def _search(adj: Sequence[int], cells: List[List[int]]) -> Tuple[int, Tuple[int, ...]]:
    cells = _refine(adj, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        lab = tuple(cell[0] for cell in cells)
        return _certificate(adj, lab), lab

    best: Optional[Tuple[int, Tuple[int, ...]]] = None
    cell = cells[target]
    for v in _twin_representatives(adj, cell):
        branch = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1 :]
        outcome = _search(adj, branch)
        if best is None or outcome[0] > best[0]:
            best = outcome
    return best


def _check_canonical_order(graph: Graph) -> None:
    if graph.order > CANONICAL_CEILING:
        raise BudgetError(
            f'Canonical labeling supports order <= {CANONICAL_CEILING}, got {graph.order}'
        )


def canonical_labeling(
    graph: Graph, cells: Optional[List[List[int]]] = None
) -> Tuple[CanonicalForm, Tuple[int, ...]]:
    """Canonical form and a labeling ``lab`` with ``lab[p]`` the vertex at position ``p``.

    ``cells`` is an optional ordered vertex colouring the labeling must respect.
    """
    _check_canonical_order(graph)
    if graph.order == 0:
        return CanonicalForm(0, 0), ()
    start = cells if cells is not None else [list(range(graph.order))]
    bits, lab = _search(graph.adj, [list(cell) for cell in start])
    return CanonicalForm(graph.order, bits), lab


def canonical_form(graph: Graph) -> CanonicalForm:
    return canonical_labeling(graph)[0]


def is_isomorphic(first: Graph, second: Graph) -> bool:
    return first.order == second.order and canonical_form(first) == canonical_form(second)


def _same_orbit(graph: Graph, u: int, v: int) -> bool:
    others_u = [w for w in range(graph.order) if w != u]
    others_v = [w for w in range(graph.order) if w != v]
    return (
        canonical_labeling(graph, [[u], others_u])[0]
        == canonical_labeling(graph, [[v], others_v])[0]
    )


def _extend(graph: Graph, mask: int) -> Graph:
    new = graph.order
    rows = [row | (mask >> v & 1) << new for v, row in enumerate(graph.adj)]
    rows.append(mask)
    return Graph._from_rows(new + 1, rows)


def _accept(child: Graph) -> Optional[CanonicalForm]:
    """Canonical form of ``child`` when its newest vertex is canonical, else None."""
    form, lab = canonical_labeling(child)
    new = child.order - 1
    last = lab[-1]
    if last == new:
        return form
    if child.adj[last].bit_count() != child.adj[new].bit_count():
        return None
    return form if _same_orbit(child, last, new) else None


def _split_order(order: int) -> int:
    return order - 2 if order >= 4 else order


def shard_of(form: CanonicalForm, shard_count: int) -> int:
    """Stable shard assignment of a split-level class."""
    if shard_count == 1:
        return 0
    digest = hashlib.blake2b(f'{form.order}:{form.bits}'.encode(), digest_size=8).digest()
    return int.from_bytes(digest, 'big') % shard_count


def _check_order(order: int) -> None:
    if not 1 <= order <= ENUMERATION_CEILING:
        raise BudgetError(f'Enumeration supports order in [1, {ENUMERATION_CEILING}], got {order}')


@dataclass
class GraphEnumerator:
    """One shard of the canonical-augmentation walk for a fixed order.

    Iterating yields one representative per isomorphism class owned by the
    shard; ``path`` and ``visited`` track the last class yielded.
    """

    order: int
    shard: int = 0
    shard_count: int = 1
    path: EnumPath = ()
    visited: int = 0
    done: bool = False
    _resume: Optional[EnumPath] = field(default=None, repr=False)

    def __post_init__(self):
        _check_order(self.order)
        if self.shard_count < 1 or not 0 <= self.shard < self.shard_count:
            raise BudgetError(f'Invalid shard {self.shard} of {self.shard_count}')
        self.split_order = _split_order(self.order)

    @classmethod
    def from_cursor(cls, cursor: EnumCursor) -> 'GraphEnumerator':
        cursor.validate()
        enumerator = cls(
            order=cursor.order,
            shard=cursor.shard,
            shard_count=cursor.shard_count,
            path=tuple(cursor.path),
            visited=cursor.visited,
            done=cursor.done,
        )
        enumerator._resume = tuple(cursor.path) if cursor.visited else None
        return enumerator

    def cursor(self) -> EnumCursor:
        return EnumCursor(
            order=self.order,
            path=self.path,
            shard=self.shard,
            shard_count=self.shard_count,
            visited=self.visited,
            done=self.done,
        )

    def _owns(self, form: CanonicalForm) -> bool:
        return shard_of(form, self.shard_count) == self.shard

    def __iter__(self) -> Iterator[Graph]:
        if self.done:
            return
        root = empty(1)
        if self.split_order == 1 and not self._owns(canonical_form(root)):
            self.done = True
            return
        for graph, path in self._walk(root, (), self._resume):
            self.path = path
            self.visited += 1
            yield graph
        self.done = True

    def _walk(
        self, graph: Graph, path: EnumPath, resume: Optional[EnumPath]
    ) -> Iterator[Tuple[Graph, EnumPath]]:
        if graph.order == self.order:
            if resume is None:
                yield graph, path
            return

        seen: Set[CanonicalForm] = set()
        for mask in range(1 << graph.order):
            child = _extend(graph, mask)
            form = _accept(child)
            if form is None or form in seen:
                continue
            seen.add(form)

            child_resume = None
            if resume is not None:
                if mask < resume[0]:
                    continue
                if mask == resume[0]:
                    child_resume = resume[1:]

            if child.order == self.split_order and not self._owns(form):
                continue
            yield from self._walk(child, path + (mask,), child_resume)


def iter_graphs(order: int, shard: int = 0, shard_count: int = 1) -> Iterator[Graph]:
    yield from GraphEnumerator(order, shard, shard_count)


def iter_graph6(order: int, shard: int = 0, shard_count: int = 1) -> Iterator[bytes]:
    """Newline-delimited graph6 records of one representative per class."""
    yield from graph6_stream(iter_graphs(order, shard, shard_count))


def _drive(enumerator: GraphEnumerator, visitor: Visitor) -> int:
    count = 0
    for graph in enumerator:
        count += 1
        if visitor(graph) is False:
            break
    return count


def enumerate_graphs(order: int, visitor: Visitor) -> int:
    """Visit one graph per isomorphism class of the given order.

    The visitor may return False to stop; the return value is the number of
    classes visited.
    """
    return _drive(GraphEnumerator(order), visitor)


def enumerate_partitioned(order: int, shard: int, shard_count: int, visitor: Visitor) -> int:
    """Visit the classes owned by one shard; shards partition the classes."""
    return _drive(GraphEnumerator(order, shard, shard_count), visitor)


def cursor_save(state: GraphEnumerator) -> EnumCursor:
    return state.cursor()


def cursor_resume(cursor: EnumCursor, visitor: Visitor) -> int:
    """Continue a walk after the last class the cursor visited."""
    return _drive(GraphEnumerator.from_cursor(cursor), visitor)


def brute_force_classes(order: int) -> Set[CanonicalForm]:
    """Canonical forms of all ``2^C(n,2)`` labeled graphs, deduplicated."""
    if not 1 <= order <= 7:
        raise BudgetError(f'Brute-force dedup supports order in [1, 7], got {order}')
    pairs = list(itertools.combinations(range(order), 2))
    forms: Set[CanonicalForm] = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * order
        for index, (u, v) in enumerate(pairs):
            if mask >> index & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        forms.add(canonical_form(Graph._from_rows(order, rows)))
    logger.debug('Brute-force dedup at order %d found %d classes', order, len(forms))
    return forms


def complement_closure(order: int) -> bool:
    """True when complementation permutes the visited canonical forms."""
    visited: List[CanonicalForm] = []
    complements: List[CanonicalForm] = []

    def collect(graph: Graph) -> None:
        visited.append(canonical_form(graph))
        complements.append(canonical_form(complement(graph)))

    enumerate_graphs(order, collect)
    return sorted(visited) == sorted(complements) and len(set(visited)) == len(visited)
