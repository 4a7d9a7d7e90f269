"""``f(n) = max{str(G) + str(Ḡ)}`` over graphs of order ``n`` with ``G`` and ``Ḡ`` nonempty.

``f(n)`` is computed exactly by enumeration where that is feasible, through
``f(n) = 4n - min{s + t : r(F_s, F_t) > n} + 2`` from the Ramsey registries,
and bracketed by ``max{ρ_n, ρ'_n} <= f(n) <= 4n - σ_n`` everywhere else.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from strengthlab.config import DEFAULT_BUDGET, BudgetConfig
from strengthlab.enumeration import GraphEnumerator, canonical_form
from strengthlab.exceptions import BudgetError, GraphError, InsufficientDataError
from strengthlab.graph import Graph, complement
from strengthlab.parsers import graph6_decode, graph6_encode
from strengthlab.ramsey import KnownFkRegistry, arrows_fk, describe_family, known_classical
from strengthlab.services import ChunkResult, ChunkTask, Hit, SearchJob, ShardedSearchService
from strengthlab.strength import strength_value

__all__ = (
    'SIGMA_RANGE',
    'BoundsRow',
    'FMaxResult',
    'FValue',
    'SigmaRange',
    'rho',
    'rho_prime',
    'sigma',
    'sigma_witness',
    'sigma_ranges',
    'f_max',
    'f_via_ramsey',
    'bounds_table',
    'f_value_rows',
    'f_bracket',
    'lower_bound_two_holds',
    'witness_lower_bound_holds',
)

logger = logging.getLogger('strengthlab')

# orders for which the classical registry pins down σ_n
SIGMA_RANGE = (3, 35)


@dataclass(frozen=True)
class FMaxResult:
    n: int
    value: int
    witness: Tuple[Graph, Graph]
    work: int = 0


@dataclass(frozen=True)
class FValue:
    """``f(n)`` from Ramsey data: exact, or an interval.

    :param condition_holds: Whether some minimizing pair satisfies ``n >= max{s, t}``
    :type condition_holds: bool
    :param pairs: Minimizing pairs ``(s, t)`` with their ``r(F_s, F_t)`` intervals
    :type pairs: Tuple[Tuple[int, int, int, Optional[int]], ...]
    """

    n: int
    lower: int
    upper: int
    condition_holds: bool = True
    pairs: Tuple[Tuple[int, int, int, Optional[int]], ...] = ()

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None


@dataclass(frozen=True)
class BoundsRow:
    n: int
    rho: int
    rho_prime: int
    sigma: int
    upper: int
    f_exact: Optional[int] = None
    f_source: Optional[str] = None
    witness: Optional[Tuple[Graph, Graph]] = field(default=None, compare=False)

    def __post_init__(self):
        floor = max(self.rho, self.rho_prime)
        if floor > self.upper:
            raise ValueError(f'Row {self.n}: lower bound {floor} exceeds upper bound {self.upper}')
        if self.f_exact is not None and not floor <= self.f_exact <= self.upper:
            raise ValueError(f'Row {self.n}: f = {self.f_exact} outside [{floor}, {self.upper}]')


@dataclass(frozen=True)
class SigmaRange:
    n_from: int
    n_to: int
    sigma: int
    reason: Tuple[int, int, int]


def _check_order(n: int, least: int = 3) -> None:
    if n < least:
        raise GraphError(f'Order must be at least {least}, got {n}')


def rho(n: int) -> int:
    """``ρ_n = 3n + ⌊n/2⌋ - 3``."""
    _check_order(n)
    return 3 * n + n // 2 - 3


def _ceil_half_three_plus_root(n: int) -> int:
    # ⌈(3 + √(8n - 7)) / 2⌉ without floating point
    d = 8 * n - 7
    r = math.isqrt(d)
    if r * r == d:
        return (3 + r + 1) // 2
    return (3 + r) // 2 + 1


def rho_prime(n: int) -> int:
    """``ρ'_n = 4n - 2⌈(3 + √(8n - 7))/2⌉ + 2``, exact at perfect squares."""
    _check_order(n)
    return 4 * n - 2 * _ceil_half_three_plus_root(n) + 2


def _check_sigma_range(n: int) -> None:
    low, high = SIGMA_RANGE
    if not low <= n <= high:
        raise InsufficientDataError(
            f'Insufficient known Ramsey data: σ_n is determined only for n in [{low}, {high}], got {n}'
        )


def _sigma_search(n: int) -> Tuple[int, Tuple[int, int, int]]:
    _check_sigma_range(n)
    m = 2
    while True:
        found = []
        for a in range(1, m // 2 + 1):
            value = known_classical(a + 1, m - a + 1)
            if value is not None and value > n:
                found.append((value, a + 1, m - a + 1))
        if found:
            value, s, t = max(found)
            return m, (s, t, value)
        m += 1


def sigma(n: int) -> int:
    """``σ_n = min{a + b : r(a + 1, b + 1) > n}`` over known classical values."""
    return _sigma_search(n)[0]


def sigma_witness(n: int) -> Tuple[int, int, int]:
    """The pair ``(s, t, r(s, t))`` fixing ``σ_n``; the largest value wins ties."""
    return _sigma_search(n)[1]


def sigma_ranges() -> List[SigmaRange]:
    """Maximal runs of ``n`` sharing ``σ_n`` and its reason."""
    ranges: List[SigmaRange] = []
    low, high = SIGMA_RANGE
    for n in range(low, high + 1):
        m, reason = _sigma_search(n)
        if ranges and ranges[-1].sigma == m and ranges[-1].reason == reason:
            ranges[-1] = SigmaRange(ranges[-1].n_from, n, m, reason)
        else:
            ranges.append(SigmaRange(n, n, m, reason))
    return ranges


def f_bracket(n: int) -> Tuple[int, int]:
    """``(max{ρ_n, ρ'_n}, 4n - σ_n)``."""
    return max(rho(n), rho_prime(n)), 4 * n - sigma(n)


def lower_bound_two_holds(n: int) -> bool:
    """With ``s = ⌈(3 + √(8n - 7))/2⌉``: ``1 + (s - 1)⌊s/2⌋ > n`` and ``s <= n``."""
    _check_order(n, least=4)
    s = _ceil_half_three_plus_root(n)
    return 1 + (s - 1) * (s // 2) > n and s <= n


def _scan_fmax(task: ChunkTask) -> ChunkResult:
    enumerator = GraphEnumerator.from_cursor(task.cursor)
    examined = 0
    best: Optional[Hit] = None
    for graph in enumerator:
        examined += 1
        co = complement(graph)
        if not graph.is_empty() and not co.is_empty():
            form, coform = canonical_form(graph), canonical_form(co)
            # each complementary pair once, from its smaller member
            if form <= coform:
                value = strength_value(graph) + strength_value(co)
                if best is None or (value, -form.bits) > (best['value'], -best['bits']):
                    best = {
                        'value': value,
                        'bits': form.bits,
                        'graph6': graph6_encode(form.to_graph()).decode('ascii'),
                        'complement_graph6': graph6_encode(coform.to_graph()).decode('ascii'),
                    }
        if examined >= task.limit:
            break
    return ChunkResult(cursor=enumerator.cursor(), examined=examined, hit=best)


class FMaxJob(SearchJob):
    """Max-reduction of ``str(G) + str(Ḡ)``; ties go to the smallest canonical form"""

    name = 'fmax'

    @property
    def scan_function(self):
        return _scan_fmax

    def merge(self, best: Optional[Hit], hit: Hit) -> Hit:
        if best is None or (hit['value'], -hit['bits']) > (best['value'], -best['bits']):
            return hit
        return best


def f_max(
    n: int,
    budget: BudgetConfig = DEFAULT_BUDGET,
    service: Optional[ShardedSearchService] = None,
) -> FMaxResult:
    """``f(n)`` by enumerating every isomorphism class of order ``n``."""
    _check_order(n)
    if n > budget.max_fmax_order:
        raise BudgetError(f'f_max supports order <= {budget.max_fmax_order}, got {n}')

    service = service or ShardedSearchService()
    outcome = service.run(FMaxJob(n))
    best = outcome.best
    logger.debug(f'f({n}) = {best["value"]} after {outcome.examined} classes')
    return FMaxResult(
        n=n,
        value=best['value'],
        witness=(graph6_decode(best['graph6']), graph6_decode(best['complement_graph6'])),
        work=outcome.examined,
    )


def f_via_ramsey(n: int, registry: Optional[KnownFkRegistry] = None) -> FValue:
    """``f(n) = 4n - min{s + t : r(F_s, F_t) > n} + 2`` from known ``r(F_s, F_t)`` data.

    Pairs ``2 <= s <= t`` are scanned by increasing ``s + t``. The result is
    exact when every pair below the first certainly qualifying sum is known
    not to qualify and some minimizing pair has ``t <= n``. Uncertain pairs
    below it widen the result to an interval; a failed side condition yields
    the bracket ``[max{ρ_n, ρ'_n}, 4n - σ_n]`` with ``condition_holds`` False.
    """
    _check_order(n, least=4)
    registry = registry or KnownFkRegistry()

    first_uncertain: Optional[int] = None
    m = 4
    while True:
        qualifying = []
        for s in range(2, m // 2 + 1):
            t = m - s
            lower, upper = registry.interval(s, t)
            if lower > n:
                qualifying.append((s, t, lower, upper))
            elif upper is None or upper > n:
                if first_uncertain is None:
                    first_uncertain = m
        if qualifying:
            break
        m += 1

    pairs = tuple(qualifying)
    if not any(t <= n for _, t, _, _ in qualifying):
        low, high = f_bracket(n)
        logger.debug(f'f({n}): side condition fails at s + t = {m}; using the bracket')
        return FValue(n=n, lower=low, upper=high, condition_holds=False, pairs=pairs)

    lower = 4 * n - m + 2
    upper = lower if first_uncertain is None else 4 * n - first_uncertain + 2
    return FValue(n=n, lower=lower, upper=upper, pairs=pairs)


def _ramsey_reason(n: int, pairs) -> str:
    # pairs meeting t <= n with the smallest lower bound explain the minimum
    eligible = [pair for pair in pairs if pair[1] <= n]
    least = min(lower for _, _, lower, _ in eligible)
    parts = []
    for s, t, lower, upper in eligible:
        if lower != least:
            continue
        relation = '=' if upper == lower else '>='
        parts.append(f'r(F_{s}, F_{t}) {relation} {lower}')
    return ' and '.join(parts)


def f_value_rows(
    n_to: int = 12,
    budget: BudgetConfig = DEFAULT_BUDGET,
    service: Optional[ShardedSearchService] = None,
) -> List[Dict[str, object]]:
    """Small values of ``f(n)`` with the reason for each equality."""
    rows: List[Dict[str, object]] = []
    exact = f_max(3, budget, service)
    # the denser member first, as G
    first, second = sorted(exact.witness, key=lambda graph: -graph.size)
    rows.append(
        {
            'n': 3,
            'f': exact.value,
            'reason': f'G = {describe_family(first)} and complement = {describe_family(second)}',
        }
    )
    for n in range(4, n_to + 1):
        result = f_via_ramsey(n)
        if result.exact and result.condition_holds:
            rows.append({'n': n, 'f': result.value, 'reason': _ramsey_reason(n, result.pairs)})
        else:
            rows.append(
                {
                    'n': n,
                    'f': f'[{result.lower}, {result.upper}]',
                    'reason': 'bounds only',
                }
            )
    return rows


def bounds_table(
    n_from: int,
    n_to: int,
    budget: BudgetConfig = DEFAULT_BUDGET,
    service: Optional[ShardedSearchService] = None,
) -> List[BoundsRow]:
    """Rows ``(ρ_n, ρ'_n, σ_n, 4n - σ_n)`` with ``f(n)`` where it is known.

    ``f(n)`` comes from enumeration up to ``budget.fmax_table_order`` and from
    the Ramsey data when that is exact.
    """
    low, high = SIGMA_RANGE
    if not low <= n_from <= n_to <= high:
        raise InsufficientDataError(
            f'Bounds table covers {low} <= n_from <= n_to <= {high}, got [{n_from}, {n_to}]'
        )

    rows = []
    for n in range(n_from, n_to + 1):
        f_exact = None
        f_source = None
        witness = None
        if n <= budget.fmax_table_order:
            result = f_max(n, budget, service)
            f_exact, f_source, witness = result.value, 'enumeration', result.witness
        elif n >= 4:
            via = f_via_ramsey(n)
            if via.exact and via.condition_holds:
                f_exact, f_source = via.value, 'ramsey'

        s = sigma(n)
        rows.append(
            BoundsRow(
                n=n,
                rho=rho(n),
                rho_prime=rho_prime(n),
                sigma=s,
                upper=4 * n - s,
                f_exact=f_exact,
                f_source=f_source,
                witness=witness,
            )
        )
    return rows


def witness_lower_bound_holds(
    n: int,
    s: int,
    t: int,
    budget: BudgetConfig = DEFAULT_BUDGET,
    service: Optional[ShardedSearchService] = None,
) -> bool:
    """If order ``n >= max{s, t}`` does not arrow ``(F_s, F_t)``, the witness
    satisfies ``str(G) + str(Ḡ) >= 4n - (s + t) + 2``.

    Vacuously true when ``n`` arrows the pair.
    """
    if not (2 <= s <= n - 1 and 2 <= t <= n - 1):
        raise GraphError(f'Need s, t in [2, {n - 1}], got ({s}, {t})')
    arrows, witness = arrows_fk(n, s, t, budget, service)
    if arrows:
        return True
    total = strength_value(witness) + strength_value(complement(witness))
    return total >= 4 * n - (s + t) + 2
