"""Generalized Ramsey numbers ``r(F_s, F_t)``.

Order ``n`` arrows ``(F_s, F_t)`` when every graph of order ``n`` contains
``F_s`` or has ``F_t`` in its complement. ``r(F_s, F_t)`` is the least such
``n``. Arrowing is decided exhaustively over isomorphism classes; the
closed forms and registries cover what desk-scale enumeration cannot reach.
"""

import dataclasses
import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from strengthlab.config import DEFAULT_BUDGET, BudgetConfig
from strengthlab.enumeration import GraphEnumerator, is_isomorphic
from strengthlab.exceptions import BudgetError, EmptyGraphError, GraphError, VerificationError
from strengthlab.graph import (
    Graph,
    build_fk,
    complement,
    complete,
    complete_bipartite,
    contains_subgraph,
    disjoint_copies,
    empty,
    has_one_factor,
    matching_number,
    min_degree,
)
from strengthlab.parsers import graph6_decode, graph6_encode
from strengthlab.services import ChunkResult, ChunkTask, Hit, SearchJob, ShardedSearchService
from strengthlab.types import RamseyStatus
from strengthlab.utils import iter_bits

__all__ = (
    'RamseyResult',
    'KnownRamseyRegistry',
    'KnownFkRegistry',
    'ArrowingJob',
    'arrows_fk',
    'ramsey_fk',
    'chvatal_fk_lower',
    'chvatal_tree_formula',
    'best_lower_bound',
    'ramsey_p3',
    'r_f3_formula',
    'r_f4_formula',
    'known_classical',
    'is_non_arrowing_witness',
    'lower_bound_witness',
    'describe_family',
    'small_ramsey_rows',
    'SMALL_RAMSEY_PAIRS',
)

logger = logging.getLogger('strengthlab')

# pairs (s, t) of the published table of small r(F_s, F_t)
SMALL_RAMSEY_PAIRS = (
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 3),
    (3, 4),
    (3, 5),
    (4, 4),
    (4, 5),
    (4, 6),
    (4, 7),
)


@dataclass(frozen=True)
class RamseyResult:
    """Exact value or interval for ``r(F_s, F_t)``.

    :param status: ``exact`` when every class at ``value`` was checked to arrow
    :type status: RamseyStatus
    :param witness: Non-arrowing graph of order ``value - 1`` (or ``lower - 1``)
    :type witness: Optional[Graph]
    :param work: Classes examined by the enumeration
    :type work: int
    :param reference: Published value for pairs left bounded
    :type reference: Optional[int]
    """

    s: int
    t: int
    status: RamseyStatus
    value: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    witness: Optional[Graph] = None
    work: int = 0
    reference: Optional[int] = None

    def __post_init__(self):
        if self.status == 'exact':
            if self.value is None:
                raise ValueError('An exact result needs a value')
            if self.witness is None or self.witness.order != self.value - 1:
                raise ValueError(f'An exact result needs a witness of order {self.value - 1}')
        elif self.lower is None:
            raise ValueError('A bounded result needs a lower bound')
        elif self.upper is not None and self.lower > self.upper:
            raise ValueError(f'Lower bound {self.lower} exceeds upper bound {self.upper}')


class KnownRamseyRegistry:
    """Classical ``r(s, t)`` values with symmetry normalization"""

    def __init__(self, values: Optional[Dict[Tuple[int, int], int]] = None):
        self.values: Dict[Tuple[int, int], int] = {
            (3, 3): 6,
            (3, 4): 9,
            (3, 5): 14,
            (3, 6): 18,
            (3, 7): 23,
            (3, 8): 28,
            (3, 9): 36,
            (4, 4): 18,
            (4, 5): 25,
        }
        if values:
            for (s, t), value in values.items():
                self.values[(min(s, t), max(s, t))] = value

    def get(self, s: int, t: int) -> Optional[int]:
        if s < 1 or t < 1:
            raise GraphError(f'r(s, t) needs s, t >= 1, got ({s}, {t})')
        s, t = min(s, t), max(s, t)
        if s == 1:
            return 1
        if s == 2:
            return t
        return self.values.get((s, t))

    def pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.values)


_CLASSICAL = KnownRamseyRegistry()


def known_classical(s: int, t: int) -> Optional[int]:
    """Known classical ``r(s, t)``, None when unknown."""
    return _CLASSICAL.get(s, t)


def _check_pair(s: int, t: int) -> None:
    if s < 2 or t < 2:
        raise GraphError(f'Family indices must be >= 2, got ({s}, {t})')


def chvatal_fk_lower(s: int, t: int) -> int:
    """``1 + (s - 1)⌊t/2⌋``, a lower bound on ``r(F_s, F_t)`` for ``2 <= s <= t``."""
    _check_pair(s, t)
    if s > t:
        raise GraphError(f'Arguments must satisfy s <= t, got ({s}, {t})')
    return 1 + (s - 1) * (t // 2)


def chvatal_tree_formula(s: int, t: int) -> int:
    """``r(T_s, K_t) = 1 + (s - 1)(t - 1)`` for a tree on ``s`` vertices."""
    if s < 2 or t < 2:
        raise GraphError(f'Tree and clique orders must be >= 2, got ({s}, {t})')
    return 1 + (s - 1) * (t - 1)


def r_f3_formula(t: int) -> int:
    """``r(F_3, F_t)``: ``t + 1`` for even ``t``, ``t`` for odd ``t``."""
    if t < 2:
        raise GraphError(f'r(F_3, F_t) needs t >= 2, got {t}')
    return t + 1 if t % 2 == 0 else t


def r_f4_formula(t: int) -> int:
    """``r(F_4, F_t) = 2t - 1``."""
    if t < 3:
        raise GraphError(f'r(F_4, F_t) needs t >= 3, got {t}')
    return 2 * t - 1


def ramsey_p3(graph: Graph) -> int:
    """``r(P_3, G)``: ``n`` when the complement has a 1-factor, else ``2n - 2β₁(Ḡ) - 1``."""
    n = graph.order
    if n < 2:
        raise GraphError(f'r(P_3, G) needs order >= 2, got {n}')
    if min_degree(graph) < 1:
        raise EmptyGraphError('r(P_3, G) formula needs a graph without isolated vertices')
    co = complement(graph)
    if has_one_factor(co):
        return n
    return 2 * n - 2 * matching_number(co) - 1


def is_non_arrowing_witness(graph: Graph, s: int, t: int) -> bool:
    """True when ``F_s ⊄ G`` and ``F_t ⊄ Ḡ``."""
    return (
        contains_subgraph(graph, build_fk(s)) is None
        and contains_subgraph(complement(graph), build_fk(t)) is None
    )


def _constructions(s: int, t: int) -> List[Graph]:
    candidates = [empty(t - 1)]
    if s == 4 <= t:
        candidates.append(complete_bipartite(t - 1, t - 1))
    if s >= 3:
        candidates.append(disjoint_copies(complete(s - 1), t // 2))
    return candidates


def lower_bound_witness(s: int, t: int) -> Graph:
    """Largest known non-arrowing construction for ``(F_s, F_t)``.

    ``(t-1)K_1`` always works; ``K_{t-1,t-1}`` works for ``s = 4 <= t``; and
    ``⌊t/2⌋K_{s-1}`` works for ``3 <= s <= t``.
    """
    _check_pair(s, t)
    if s > t:
        return complement(lower_bound_witness(t, s))
    return max(_constructions(s, t), key=lambda graph: graph.order)


def best_lower_bound(s: int, t: int) -> int:
    """Best lower bound on ``r(F_s, F_t)`` from the bound and the constructions.

    Equals one more than the order of ``lower_bound_witness``; computed from the
    orders alone so large pairs never build a graph.
    """
    _check_pair(s, t)
    low, high = min(s, t), max(s, t)
    bound = max(chvatal_fk_lower(low, high), high)
    if low == 4:
        bound = max(bound, 2 * high - 1)
    return bound


class KnownFkRegistry:
    """Exact values and intervals for ``r(F_s, F_t)``.

    Exact values come from the closed forms for ``s <= 4`` and from
    ``r(F_5, F_5) = 10``; the cited ``r(F_5, F_6) >= 13`` is a lower bound
    only. Every other pair falls back to ``[best_lower_bound, r(s, t)]``.
    """

    def __init__(self):
        self.exact_values: Dict[Tuple[int, int], int] = {(5, 5): 10}
        self.lower_values: Dict[Tuple[int, int], int] = {(5, 6): 13}

    def exact(self, s: int, t: int) -> Optional[int]:
        _check_pair(s, t)
        s, t = min(s, t), max(s, t)
        if s == 2:
            return t
        if s == 3:
            return r_f3_formula(t)
        if s == 4:
            return r_f4_formula(t)
        return self.exact_values.get((s, t))

    def interval(self, s: int, t: int) -> Tuple[int, Optional[int]]:
        """``(lower, upper)``; ``upper`` is None when unbounded by known data."""
        value = self.exact(s, t)
        if value is not None:
            return value, value
        s, t = min(s, t), max(s, t)
        lower = max(best_lower_bound(s, t), self.lower_values.get((s, t), 0))
        return lower, known_classical(s, t)


def _components(graph: Graph) -> List[int]:
    """Vertex masks of the connected components, by lowest vertex."""
    remaining = (1 << graph.order) - 1
    components = []
    while remaining:
        component = frontier = remaining & -remaining
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= graph.adj[v]
            frontier = reached & ~component
            component |= frontier
        components.append(component)
        remaining &= ~component
    return components


def _clique_union_name(graph: Graph) -> Optional[str]:
    sizes: Dict[int, int] = {}
    for component in _components(graph):
        b = component.bit_count()
        if any((graph.adj[v] & component).bit_count() != b - 1 for v in iter_bits(component)):
            return None
        sizes[b] = sizes.get(b, 0) + 1
    return ' ∪ '.join(
        f'K_{b}' if count == 1 else f'{count}K_{b}' for b, count in sorted(sizes.items())
    )


def describe_family(graph: Graph) -> Optional[str]:
    """Name of a standard family isomorphic to ``graph``, if any.

    Recognises unions of cliques (``K_n``, ``nK_1``, ``aK_b``, ``K_1 ∪ K_2``),
    complete bipartite graphs and ``F_n``.
    """
    n = graph.order
    if n == 0:
        return 'K_0'

    name = _clique_union_name(graph)
    if name is not None:
        return name

    for a in range(1, n // 2 + 1):
        if graph.size == a * (n - a) and is_isomorphic(graph, complete_bipartite(a, n - a)):
            return f'K_{{{a},{n - a}}}'

    if graph.size == build_fk(n).size and is_isomorphic(graph, build_fk(n)):
        return f'F_{n}'
    return None


def _arrows_graph(graph: Graph, s_pattern: Graph, t_pattern: Graph, s_first: bool) -> bool:
    if s_first:
        return (
            contains_subgraph(graph, s_pattern) is not None
            or contains_subgraph(complement(graph), t_pattern) is not None
        )
    return (
        contains_subgraph(complement(graph), t_pattern) is not None
        or contains_subgraph(graph, s_pattern) is not None
    )


def _scan_arrowing(task: ChunkTask) -> ChunkResult:
    s, t = task.params
    s_pattern, t_pattern = build_fk(s), build_fk(t)
    enumerator = GraphEnumerator.from_cursor(task.cursor)
    examined = 0
    for graph in enumerator:
        examined += 1
        if not _arrows_graph(graph, s_pattern, t_pattern, s <= t):
            hit = {'path': list(enumerator.path), 'graph6': graph6_encode(graph).decode('ascii')}
            # a shard's first counterexample is its smallest by path
            cursor = dataclasses.replace(enumerator.cursor(), done=True)
            return ChunkResult(cursor=cursor, examined=examined, hit=hit)
        if examined >= task.limit:
            break
    return ChunkResult(cursor=enumerator.cursor(), examined=examined)


class ArrowingJob(SearchJob):
    """Forall over classes of one order, reduced to the counterexample with the smallest path"""

    name = 'arrows'

    def __init__(self, order: int, s: int, t: int):
        super().__init__(order, (s, t))

    @property
    def scan_function(self):
        return _scan_arrowing

    def merge(self, best: Optional[Hit], hit: Hit) -> Hit:
        if best is None or hit['path'] < best['path']:
            return hit
        return best

    def wants(self, cursor, best: Optional[Hit]) -> bool:
        return best is None or list(cursor.path) < best['path']


def _check_enum_budget(n: int, budget: BudgetConfig) -> None:
    if not 1 <= n <= budget.max_enum_order:
        raise BudgetError(f'Arrowing checks support order in [1, {budget.max_enum_order}], got {n}')


def _arrowing_search(
    n: int, s: int, t: int, budget: BudgetConfig, service: Optional[ShardedSearchService]
) -> Tuple[bool, Optional[Graph], int]:
    _check_pair(s, t)
    _check_enum_budget(n, budget)
    service = service or ShardedSearchService()
    outcome = service.run(ArrowingJob(n, s, t))
    if outcome.best is None:
        return True, None, outcome.examined
    return False, graph6_decode(outcome.best['graph6']), outcome.examined


def arrows_fk(
    n: int,
    s: int,
    t: int,
    budget: BudgetConfig = DEFAULT_BUDGET,
    service: Optional[ShardedSearchService] = None,
) -> Tuple[bool, Optional[Graph]]:
    """Whether order ``n`` arrows ``(F_s, F_t)``; on False, the first counterexample.

    Counterexamples are ordered by enumeration path, so the one reported does
    not depend on sharding or worker count.
    """
    arrows, witness, _ = _arrowing_search(n, s, t, budget, service)
    return arrows, witness


def ramsey_fk(
    s: int,
    t: int,
    n_cap: int = 10,
    budget: BudgetConfig = DEFAULT_BUDGET,
    service: Optional[ShardedSearchService] = None,
) -> RamseyResult:
    """Smallest ``n <= n_cap`` arrowing ``(F_s, F_t)``, searched up from the best lower bound.

    When the cap is reached first the result is ``bounded``; it carries the
    published value as ``reference`` when one is known.
    """
    _check_pair(s, t)
    if n_cap > budget.max_enum_order:
        raise BudgetError(f'n_cap {n_cap} exceeds the enumeration budget {budget.max_enum_order}')

    swapped = s > t
    low, high = (t, s) if swapped else (s, t)
    started = time.monotonic()

    start = best_lower_bound(low, high)
    witness = lower_bound_witness(low, high)
    if not is_non_arrowing_witness(witness, low, high):
        raise VerificationError(f'Construction for ({low}, {high}) is not a non-arrowing witness')

    registry = KnownFkRegistry()
    reference = registry.exact(low, high)
    upper = known_classical(low, high)
    work = 0

    def orient(graph: Graph) -> Graph:
        return complement(graph) if swapped else graph

    for n in range(start, n_cap + 1):
        arrows, counterexample, examined = _arrowing_search(n, low, high, budget, service)
        work += examined
        logger.debug(f'r(F_{s}, F_{t}): order {n} arrows={arrows} after {examined} classes')
        if arrows:
            logger.info(
                f'r(F_{s}, F_{t}) = {n} ({work} classes, {time.monotonic() - started:.1f}s)'
            )
            return RamseyResult(
                s=s, t=t, status='exact', value=n, witness=orient(witness), work=work
            )
        witness = counterexample

    lower = max(start, n_cap + 1)
    logger.info(f'r(F_{s}, F_{t}) >= {lower}: cap {n_cap} reached')
    return RamseyResult(
        s=s,
        t=t,
        status='bounded',
        lower=lower,
        upper=upper,
        witness=orient(witness),
        work=work,
        reference=reference,
    )


def small_ramsey_rows(registry: Optional[KnownFkRegistry] = None) -> List[Dict[str, int]]:
    """Rows ``{s, t, value}`` of the published table of small ``r(F_s, F_t)``."""
    registry = registry or KnownFkRegistry()
    return [{'s': s, 't': t, 'value': registry.exact(s, t)} for s, t in SMALL_RAMSEY_PAIRS]
