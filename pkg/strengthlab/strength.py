"""Strength of graphs.

``str(G)`` is the least possible maximum edge label ``f(u) + f(v)`` over all
numberings ``f`` of a nonempty graph. Two independent routes compute it: an
exhaustive branch and bound over numberings, and the characterization
``str(G) = 2n - k*`` where ``k*`` is the largest ``k`` with ``F_k`` inside the
complement.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from strengthlab.config import DEFAULT_BUDGET, BudgetConfig
from strengthlab.exceptions import BudgetError, EmptyGraphError, GraphError
from strengthlab.graph import (
    Graph,
    Numbering,
    build_fk,
    complement,
    contains_subgraph,
    disjoint_union,
    empty,
    independence_number,
    min_degree,
    require_edges,
)
from strengthlab.types import StrengthMethod, WitnessSource

__all__ = (
    'StrengthResult',
    'strength_of_numbering',
    'strength_bruteforce',
    'max_fk_subgraph',
    'strength',
    'strength_value',
    'strength_pair',
    'fk_numbering',
    'strength_lower_bound',
    'strength_upper_bound_beta',
    'strength_isolated_invariance_check',
    'fk_biconditional_holds',
    'min_degree_characterization_holds',
    'strength_formula_complete',
    'strength_formula_complete_union',
    'strength_formula_complete_bipartite',
)

logger = logging.getLogger('strengthlab')


@dataclass(frozen=True)
class StrengthResult:
    """Exact strength together with a numbering attaining it.

    :param value: ``str(G)``
    :type value: int
    :param witness_numbering: Numbering whose strength equals ``value``
    :type witness_numbering: Numbering
    :param method: Route that produced ``value``
    :type method: StrengthMethod
    :param max_fk_in_complement: ``k*`` when the characterization was used
    :type max_fk_in_complement: Optional[int]
    :param witness_source: Whether the witness came from search or from the ``F_k`` embedding
    :type witness_source: WitnessSource
    """

    value: int
    witness_numbering: Numbering
    method: StrengthMethod
    max_fk_in_complement: Optional[int] = None
    witness_source: WitnessSource = 'search'

    def __post_init__(self):
        if self.witness_numbering.strength_value != self.value:
            raise ValueError(
                f'Witness numbering has strength {self.witness_numbering.strength_value}, '
                f'expected {self.value}'
            )


def strength_of_numbering(graph: Graph, numbering: Numbering) -> int:
    """``str_f(G)``: the maximum edge label under ``numbering``."""
    require_edges(graph)
    return Numbering.of(graph, numbering.labels).strength_value


def _non_isolated_lower_bound(graph: Graph) -> int:
    degrees = [d for d in graph.degrees() if d]
    return max(3, len(degrees) + min(degrees))


def _optimum(graph: Graph) -> int:
    """Minimum strength by assigning labels ``n, n-1, ...`` to vertices.

    Candidates for each label are tried in ascending degree so large labels
    land on sparse vertices first; twins are tried once per step.
    """
    n = graph.order
    adj = graph.adj
    degrees = graph.degrees()
    sequence = sorted(range(n), key=lambda v: (degrees[v], v))
    floor = _non_isolated_lower_bound(graph)
    labels = [0] * n
    incumbent = 2 * n

    def twins(u: int, v: int) -> bool:
        return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)

    def assign(label: int, unlabeled: int, current: int) -> bool:
        nonlocal incumbent
        if label == 0:
            incumbent = current
            return incumbent <= floor

        tried: List[int] = []
        for v in sequence:
            if not unlabeled >> v & 1 or any(twins(v, u) for u in tried):
                continue
            tried.append(v)

            peak = current
            neighbours = adj[v]
            for u in range(n):
                if neighbours >> u & 1 and labels[u]:
                    peak = max(peak, label + labels[u])
            if neighbours & unlabeled & ~(1 << v):
                peak = max(peak, label + 1)
            if peak >= incumbent:
                continue

            labels[v] = label
            if assign(label - 1, unlabeled & ~(1 << v), peak):
                labels[v] = 0
                return True
            labels[v] = 0
        return False

    assign(n, (1 << n) - 1, 0)
    return incumbent


def _lexicographic_witness(graph: Graph, bound: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically smallest label array with strength at most ``bound``."""
    n = graph.order
    adj = graph.adj
    labels = [0] * n

    def feasible_rest(first_open: int, remaining: List[int]) -> bool:
        caps = []
        for w in range(first_open, n):
            cap = n
            for u in range(first_open):
                if adj[w] >> u & 1:
                    cap = min(cap, bound - labels[u])
            caps.append(cap)
        caps.sort()
        return all(cap >= label for cap, label in zip(caps, remaining))

    def place(v: int, remaining: List[int]) -> bool:
        if v == n:
            return True
        for index, label in enumerate(remaining):
            if any(adj[v] >> u & 1 and label + labels[u] > bound for u in range(v)):
                continue
            labels[v] = label
            rest = remaining[:index] + remaining[index + 1 :]
            if feasible_rest(v + 1, rest) and place(v + 1, rest):
                return True
        labels[v] = 0
        return False

    if place(0, list(range(1, n + 1))):
        return tuple(labels)
    return None


def _check_bruteforce_budget(graph: Graph, budget: BudgetConfig) -> None:
    if graph.order > budget.max_bruteforce_order:
        raise BudgetError(
            f'Brute-force strength supports order <= {budget.max_bruteforce_order}, '
            f'got {graph.order}'
        )


def strength_bruteforce(graph: Graph, budget: BudgetConfig = DEFAULT_BUDGET) -> StrengthResult:
    """Exact strength by exhaustive branch and bound over all numberings."""
    require_edges(graph)
    _check_bruteforce_budget(graph, budget)
    value = _optimum(graph)
    labels = _lexicographic_witness(graph, value)
    return StrengthResult(
        value=value,
        witness_numbering=Numbering.of(graph, labels),
        method='brute-force',
    )


def max_fk_subgraph(host: Graph) -> int:
    """Largest ``k`` in ``[1, n]`` with ``F_k`` a subgraph of ``host``.

    Containment is monotone in ``k`` because ``F_k`` sits inside ``F_{k+1}``,
    so a binary search suffices.
    """
    if host.order < 1:
        raise GraphError('max_fk_subgraph needs at least one vertex')
    low, high = 1, host.order
    while low < high:
        middle = (low + high + 1) // 2
        if contains_subgraph(host, build_fk(middle)) is not None:
            low = middle
        else:
            high = middle - 1
    return low


def strength_value(graph: Graph) -> int:
    """``str(G)`` through the characterization, without a witness."""
    require_edges(graph)
    return 2 * graph.order - max_fk_subgraph(complement(graph))


def fk_numbering(graph: Graph, embedding: Sequence[int]) -> Numbering:
    """Numbering of strength at most ``2n - k`` from an embedding of ``F_k`` in the complement.

    ``embedding[i - 1]`` is the vertex playing ``v_i``; it receives label
    ``n + 1 - i``. Vertices outside the embedding receive ``1..n-k`` in index
    order. Pairs ``v_i v_j`` that are edges of ``G`` satisfy ``i + j >= k + 2``.
    """
    n = graph.order
    if len(set(embedding)) != len(embedding) or not all(0 <= v < n for v in embedding):
        raise GraphError(f'Embedding {list(embedding)} is not injective into [0, {n})')
    labels = [0] * n
    for i, v in enumerate(embedding, start=1):
        labels[v] = n + 1 - i
    next_label = 1
    for v in range(n):
        if not labels[v]:
            labels[v] = next_label
            next_label += 1
    return Numbering.of(graph, labels)


def strength(graph: Graph, budget: BudgetConfig = DEFAULT_BUDGET) -> StrengthResult:
    """Exact strength via ``str(G) = 2n - max{k : F_k ⊆ Ḡ}`` with a witness numbering.

    Up to the brute-force order the witness is the lexicographically smallest
    optimal numbering; above it the witness comes from the ``F_k`` embedding.
    """
    require_edges(graph)
    n = graph.order
    co = complement(graph)
    k = max_fk_subgraph(co)
    value = 2 * n - k

    if n <= budget.max_bruteforce_order:
        witness = Numbering.of(graph, _lexicographic_witness(graph, value))
        source: WitnessSource = 'search'
    else:
        embedding = contains_subgraph(co, build_fk(k))
        witness = fk_numbering(graph, embedding)
        source = 'characterization-derived'
        logger.debug('Witness for order %d derived from the F_%d embedding', n, k)

    return StrengthResult(
        value=value,
        witness_numbering=witness,
        method='fk-characterization',
        max_fk_in_complement=k,
        witness_source=source,
    )


def strength_pair(
    graph: Graph, budget: BudgetConfig = DEFAULT_BUDGET
) -> Tuple[Optional[StrengthResult], Optional[StrengthResult]]:
    """Strength of ``G`` and of ``Ḡ``; None for whichever side is edgeless."""
    co = complement(graph)
    first = None if graph.is_empty() else strength(graph, budget)
    second = None if co.is_empty() else strength(co, budget)
    return first, second


def strength_lower_bound(graph: Graph) -> int:
    """``n + δ(G)``, valid when there is no isolated vertex."""
    delta = min_degree(graph)
    if delta < 1:
        raise EmptyGraphError('Lower bound n + δ(G) needs δ(G) >= 1; isolated vertex present')
    return graph.order + delta


def strength_upper_bound_beta(graph: Graph) -> int:
    """``2n - β(G)``."""
    require_edges(graph)
    return 2 * graph.order - independence_number(graph)


def strength_isolated_invariance_check(
    graph: Graph, m: int, budget: BudgetConfig = DEFAULT_BUDGET
) -> bool:
    """Whether adding ``m`` isolated vertices leaves the brute-force strength unchanged.

    Stated for ``δ(G) >= 1``; a graph that already has isolated vertices is
    compared all the same.
    """
    padded = disjoint_union(graph, empty(m))
    return (
        strength_bruteforce(padded, budget).value == strength_bruteforce(graph, budget).value
    )


def fk_biconditional_holds(graph: Graph, value: Optional[int] = None) -> bool:
    """``str(G) <= 2n - k`` exactly when ``F_k ⊆ Ḡ``, for every ``k`` in ``[1, n]``.

    ``value`` defaults to the brute-force strength.
    """
    if value is None:
        value = strength_bruteforce(graph).value
    n = graph.order
    co = complement(graph)
    return all(
        (value <= 2 * n - k) == (contains_subgraph(co, build_fk(k)) is not None)
        for k in range(1, n + 1)
    )


def min_degree_characterization_holds(graph: Graph, value: Optional[int] = None) -> bool:
    """With ``δ(G) = n - k``: ``str(G) = 2n - k`` exactly when ``F_k ⊆ Ḡ``."""
    if value is None:
        value = strength_bruteforce(graph).value
    n = graph.order
    k = n - min_degree(graph)
    contained = contains_subgraph(complement(graph), build_fk(k)) is not None
    return (value == 2 * n - k) == contained


def strength_formula_complete(n: int) -> int:
    if n < 2:
        raise GraphError('K_n has edges only for n >= 2')
    return 2 * n - 1


def strength_formula_complete_union(s: int, t: int) -> int:
    """``str(K_s ∪ K_t) = 2(s + t) - 3`` for ``s, t >= 2``."""
    if min(s, t) < 2:
        raise GraphError('Formula holds for s, t >= 2')
    return 2 * (s + t) - 3


def strength_formula_complete_bipartite(s: int, t: int) -> int:
    """``str(K_{s,t}) = 2s + t`` for ``1 <= s <= t``."""
    s, t = min(s, t), max(s, t)
    if s < 1:
        raise GraphError('Formula holds for 1 <= s <= t')
    return 2 * s + t
