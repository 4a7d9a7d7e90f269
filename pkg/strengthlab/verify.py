"""Verification suites re-deriving the published values and checking the
structural properties of strength over exhaustive graph classes."""

import dataclasses
import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Set, Tuple, Type

from strengthlab.bounds import (
    bounds_table,
    f_max,
    f_via_ramsey,
    lower_bound_two_holds,
    sigma_ranges,
    witness_lower_bound_holds,
)
from strengthlab.config import DEFAULT_BUDGET, BudgetConfig
from strengthlab.enumeration import (
    KNOWN_CLASS_COUNTS,
    CanonicalForm,
    brute_force_classes,
    canonical_form,
    complement_closure,
    enumerate_graphs,
    enumerate_partitioned,
    is_isomorphic,
)
from strengthlab.exceptions import BudgetError
from strengthlab.graph import (
    Graph,
    build_fk,
    complement,
    complete,
    complete_bipartite,
    disjoint_union,
    empty,
    matching_number,
    min_degree,
)
from strengthlab.models import VerifyReport
from strengthlab.ramsey import (
    SMALL_RAMSEY_PAIRS,
    KnownFkRegistry,
    chvatal_fk_lower,
    chvatal_tree_formula,
    is_non_arrowing_witness,
    known_classical,
    lower_bound_witness,
    r_f3_formula,
    ramsey_fk,
    ramsey_p3,
)
from strengthlab.services import ShardedSearchService
from strengthlab.strength import (
    fk_biconditional_holds,
    min_degree_characterization_holds,
    strength,
    strength_bruteforce,
    strength_formula_complete,
    strength_formula_complete_bipartite,
    strength_formula_complete_union,
    strength_isolated_invariance_check,
    strength_lower_bound,
    strength_upper_bound_beta,
)

PUBLISHED_F = {3: 7, 4: 11, 5: 14, 6: 18, 7: 21, 8: 25, 9: 28, 10: 32, 11: 35, 12: 39}

PUBLISHED_SIGMA_RANGES = (
    (3, 5, 4, (3, 3, 6)),
    (6, 8, 5, (3, 4, 9)),
    (9, 17, 6, (4, 4, 18)),
    (18, 24, 7, (4, 5, 25)),
    (25, 27, 9, (3, 8, 28)),
    (28, 35, 10, (3, 9, 36)),
)

# n: (ρ_n, ρ'_n, 4n - σ_n)
PUBLISHED_BOUNDS = {
    3: (7, 6, 8),
    4: (11, 10, 12),
    5: (14, 12, 16),
    6: (18, 16, 19),
    7: (21, 20, 23),
    8: (25, 22, 27),
    9: (28, 26, 30),
    10: (32, 30, 34),
    11: (35, 34, 38),
    12: (39, 36, 42),
    13: (42, 40, 46),
    14: (46, 44, 50),
    15: (49, 48, 54),
    16: (53, 52, 58),
    17: (56, 54, 62),
    18: (60, 58, 65),
    19: (63, 62, 69),
    20: (67, 66, 73),
    21: (70, 70, 77),
    22: (74, 74, 81),
    23: (77, 76, 85),
    24: (81, 80, 89),
    25: (84, 84, 91),
    26: (88, 88, 95),
    27: (91, 92, 99),
    28: (95, 96, 102),
    29: (98, 100, 106),
    30: (102, 102, 110),
    31: (105, 106, 114),
    32: (109, 110, 118),
    33: (112, 114, 122),
    34: (116, 118, 126),
    35: (119, 122, 130),
}


class CheckRecorder:
    """Counts assertions and keeps the failing ones"""

    def __init__(self, logger: logging.Logger):
        self.logger = logger
        self.checks = 0
        self.failures: List[str] = []
        self.details: Dict[str, int] = {}

    def check(self, condition: bool, message: str) -> bool:
        self.checks += 1
        if not condition:
            self.failures.append(message)
            self.logger.warning(f'FAILED: {message}')
        return condition

    def report(self, suite: str) -> VerifyReport:
        return VerifyReport(
            suite=suite,
            passed=not self.failures,
            checks=self.checks,
            failures=self.failures,
            details=self.details,
        )


def _classes(order: int) -> List[Graph]:
    graphs: List[Graph] = []
    enumerate_graphs(order, graphs.append)
    return graphs


class VerificationSuite(ABC):
    """One family of checks, bounded by ``max_order``"""

    name = 'suite'
    default_max_order = 6
    ceiling = 10

    def __init__(
        self,
        max_order: Optional[int] = None,
        budget: BudgetConfig = DEFAULT_BUDGET,
        service: Optional[ShardedSearchService] = None,
        logger: Optional[logging.Logger] = None,
    ):
        self.max_order = self.default_max_order if max_order is None else max_order
        if not 1 <= self.max_order <= self.ceiling:
            raise BudgetError(
                f'Suite {self.name} supports max order in [1, {self.ceiling}], got {self.max_order}'
            )
        self.budget = budget
        self.service = service
        self.logger = logger or logging.getLogger('strengthlab')

    def run(self) -> VerifyReport:
        self.logger.info(f'Running {self.name} checks up to order {self.max_order}')
        recorder = CheckRecorder(self.logger)
        self.collect(recorder)
        report = recorder.report(self.name)
        self.logger.info(
            f'{self.name}: {report.checks} checks, {len(report.failures)} failures'
        )
        return report

    @abstractmethod
    def collect(self, recorder: CheckRecorder) -> None:
        pass


class EnumerationSuite(VerificationSuite):
    """Class counts, the brute-force dedup oracle, complement closure and shard partitions"""

    name = 'enumeration'
    default_max_order = 7
    ceiling = 7

    # labeled-graph dedup and shard reruns stay cheap up to here
    oracle_order = 6

    def collect(self, recorder: CheckRecorder) -> None:
        for n in range(1, self.max_order + 1):
            forms: List[CanonicalForm] = []
            count = enumerate_graphs(n, lambda graph: forms.append(canonical_form(graph)))
            recorder.details[f'order_{n}'] = count
            recorder.check(
                count == KNOWN_CLASS_COUNTS[n],
                f'order {n}: {count} classes, expected {KNOWN_CLASS_COUNTS[n]}',
            )
            recorder.check(len(set(forms)) == count, f'order {n}: duplicate class visited')
            recorder.check(
                complement_closure(n),
                f'order {n}: complementation does not permute the classes',
            )

            if n <= self.oracle_order:
                recorder.check(
                    set(forms) == brute_force_classes(n),
                    f'order {n}: enumerated classes differ from the dedup oracle',
                )
                self._check_partition(recorder, n, set(forms))

    def _check_partition(self, recorder: CheckRecorder, n: int, expected: Set[CanonicalForm]):
        for shard_count in (2, 4):
            seen: List[CanonicalForm] = []
            for shard in range(shard_count):
                enumerate_partitioned(
                    n, shard, shard_count, lambda graph: seen.append(canonical_form(graph))
                )
            recorder.check(
                len(seen) == len(set(seen)) and set(seen) == expected,
                f'order {n}: {shard_count} shards do not partition the classes',
            )


class StrengthSuite(VerificationSuite):
    """Characterization against brute force, plus the closed-form strengths"""

    name = 'strength'
    default_max_order = 7
    ceiling = 8

    def collect(self, recorder: CheckRecorder) -> None:
        for n in range(2, self.max_order + 1):
            graphs = _classes(n)
            recorder.details[f'order_{n}'] = len(graphs)
            for graph in graphs:
                if graph.is_empty():
                    continue
                result = strength(graph, self.budget)
                oracle = strength_bruteforce(graph, self.budget)
                recorder.check(
                    result.value == oracle.value,
                    f'{graph!r}: characterization {result.value} != brute force {oracle.value}',
                )
                recorder.check(
                    3 <= result.value <= 2 * n - 1, f'{graph!r}: strength {result.value} out of range'
                )

        recorder.check(strength(complete_bipartite(1, 2)).value == 4, 'str(K_{1,2}) != 4')
        recorder.check(
            strength(disjoint_union(complete(1), complete(2))).value == 3, 'str(K_1 ∪ K_2) != 3'
        )
        for s in range(2, 6):
            for t in range(s, 6):
                union = disjoint_union(complete(s), complete(t))
                recorder.check(
                    strength(union).value == strength_formula_complete_union(s, t),
                    f'str(K_{s} ∪ K_{t}) != {strength_formula_complete_union(s, t)}',
                )
        for s in range(1, 6):
            for t in range(s, 6):
                recorder.check(
                    strength(complete_bipartite(s, t)).value
                    == strength_formula_complete_bipartite(s, t),
                    f'str(K_{{{s},{t}}}) != {strength_formula_complete_bipartite(s, t)}',
                )
        for n in range(2, 9):
            recorder.check(
                strength(complete(n)).value == strength_formula_complete(n),
                f'str(K_{n}) != {2 * n - 1}',
            )


class TheoremSuite(VerificationSuite):
    """Biconditionals, bounds and family identities over every class"""

    name = 'theorems'
    default_max_order = 6
    ceiling = 7

    def collect(self, recorder: CheckRecorder) -> None:
        for n in range(2, self.max_order + 1):
            graphs = _classes(n)
            recorder.details[f'order_{n}'] = len(graphs)
            attained = set()
            for graph in graphs:
                if graph.is_empty():
                    continue
                value = strength_bruteforce(graph, self.budget).value
                delta = min_degree(graph)
                recorder.check(
                    fk_biconditional_holds(graph, value),
                    f'{graph!r}: str <= 2n - k does not match F_k in the complement',
                )
                recorder.check(
                    min_degree_characterization_holds(graph, value),
                    f'{graph!r}: min-degree characterization fails',
                )
                recorder.check(
                    value <= strength_upper_bound_beta(graph),
                    f'{graph!r}: str {value} above 2n - β',
                )
                if delta >= 1:
                    recorder.check(
                        strength_lower_bound(graph) <= value, f'{graph!r}: str {value} below n + δ'
                    )
                    if value == n + delta:
                        attained.add(delta)
                    for m in range(1, 4):
                        if n + m > self.budget.max_bruteforce_order:
                            break
                        recorder.check(
                            strength_isolated_invariance_check(graph, m, self.budget),
                            f'{graph!r}: adding {m} isolated vertices changes the strength',
                        )
            missing = set(range(1, n)) - attained
            recorder.check(not missing, f'order {n}: no graph with δ = k and str = n + k for {missing}')

        self._check_families(recorder)

    def _check_families(self, recorder: CheckRecorder) -> None:
        for k in range(1, 21):
            fk = build_fk(k)
            recorder.check(
                fk.order == k and fk.size == (k // 2) * ((k + 1) // 2), f'F_{k} has wrong size'
            )
        for k in range(2, 13):
            recorder.check(
                is_isomorphic(complement(build_fk(k)), disjoint_union(build_fk(k - 1), empty(1))),
                f'complement of F_{k} is not F_{k - 1} ∪ K_1',
            )
        for t in range(2, 11):
            recorder.check(
                matching_number(complement(build_fk(t))) == (t - 1) // 2,
                f'matching number of the complement of F_{t} != {(t - 1) // 2}',
            )
        for t in range(2, 9):
            recorder.check(
                ramsey_p3(build_fk(t)) == r_f3_formula(t),
                f'r(P_3, F_{t}) = {ramsey_p3(build_fk(t))} != {r_f3_formula(t)}',
            )
        for s in range(2, 9):
            for t in range(s, 9):
                recorder.check(
                    chvatal_tree_formula(s, t // 2 + 1) == chvatal_fk_lower(s, t),
                    f'star bound for ({s}, {t}) disagrees with 1 + (s - 1)⌊t/2⌋',
                )
        for s in range(2, 8):
            for t in range(s, 8):
                recorder.check(
                    is_non_arrowing_witness(lower_bound_witness(s, t), s, t),
                    f'construction for ({s}, {t}) arrows',
                )
        for n in range(4, 36):
            recorder.check(lower_bound_two_holds(n), f'n = {n}: ρ\'_n inequalities fail')


class RamseySuite(VerificationSuite):
    """Small ``r(F_s, F_t)`` by exhaustive search, with bound and registry checks"""

    name = 'ramsey'
    default_max_order = 8
    ceiling = 10

    witness_order = 6

    def collect(self, recorder: CheckRecorder) -> None:
        if self.max_order > self.budget.max_enum_order:
            raise BudgetError(
                f'Max order {self.max_order} exceeds the enumeration budget {self.budget.max_enum_order}'
            )
        registry = KnownFkRegistry()
        resolved: List[Tuple[int, int, int]] = []
        for s, t in SMALL_RAMSEY_PAIRS:
            expected = registry.exact(s, t)
            if expected > self.max_order:
                continue
            result = ramsey_fk(s, t, self.max_order, self.budget, self.service)
            recorder.details[f'r_{s}_{t}'] = result.work
            if not recorder.check(
                result.status == 'exact' and result.value == expected,
                f'r(F_{s}, F_{t}) = {result.value or result.lower}, expected {expected}',
            ):
                continue
            resolved.append((s, t, result.value))
            recorder.check(
                is_non_arrowing_witness(result.witness, s, t),
                f'witness for r(F_{s}, F_{t}) arrows',
            )

        for s, t, value in resolved:
            recorder.check(
                chvatal_fk_lower(s, t) <= value, f'r(F_{s}, F_{t}) = {value} below 1 + (s - 1)⌊t/2⌋'
            )
            classical = known_classical(s, t)
            recorder.check(
                classical is None or value <= classical,
                f'r(F_{s}, F_{t}) = {value} above r({s}, {t}) = {classical}',
            )

        witness = lower_bound_witness(4, 7)
        recorder.check(
            witness.order == 12 and is_non_arrowing_witness(witness, 4, 7),
            'K_{6,6} does not certify r(F_4, F_7) > 12',
        )

        for n in range(4, min(self.witness_order, self.max_order) + 1):
            for s in range(2, n):
                for t in range(s, n):
                    recorder.check(
                        witness_lower_bound_holds(n, s, t, self.budget, self.service),
                        f'n = {n}: non-arrowing witness for ({s}, {t}) below 4n - (s + t) + 2',
                    )


class TablesSuite(VerificationSuite):
    """Published tables of f(n), σ_n and the bounds, recomputed"""

    name = 'tables'
    default_max_order = 5
    ceiling = 9

    def collect(self, recorder: CheckRecorder) -> None:
        computed = tuple(
            (r.n_from, r.n_to, r.sigma, r.reason) for r in sigma_ranges()
        )
        recorder.check(computed == PUBLISHED_SIGMA_RANGES, f'σ ranges {computed} differ')

        for row in bounds_table(3, 35, self._table_budget(), self.service):
            expected = PUBLISHED_BOUNDS[row.n]
            recorder.check(
                (row.rho, row.rho_prime, row.upper) == expected,
                f'n = {row.n}: ({row.rho}, {row.rho_prime}, {row.upper}) != {expected}',
            )

        for n in range(4, 13):
            result = f_via_ramsey(n)
            recorder.check(
                result.value == PUBLISHED_F[n],
                f'f({n}) via Ramsey data = {result.value}, expected {PUBLISHED_F[n]}',
            )

        if self.max_order > self.budget.max_fmax_order:
            raise BudgetError(
                f'Max order {self.max_order} exceeds the f_max budget {self.budget.max_fmax_order}'
            )
        for n in range(3, self.max_order + 1):
            exact = f_max(n, self.budget, self.service)
            recorder.details[f'fmax_{n}'] = exact.work
            recorder.check(
                exact.value == PUBLISHED_F[n], f'f({n}) = {exact.value}, expected {PUBLISHED_F[n]}'
            )
            if n >= 4:
                recorder.check(
                    exact.value == f_via_ramsey(n).value,
                    f'f({n}) by enumeration and via Ramsey data disagree',
                )

    def _table_budget(self) -> BudgetConfig:
        # f_max inside the bounds table is covered by the loop below
        return dataclasses.replace(self.budget, fmax_table_order=2)


SUITES: Dict[str, Type[VerificationSuite]] = {
    suite.name: suite
    for suite in (EnumerationSuite, StrengthSuite, TheoremSuite, RamseySuite, TablesSuite)
}


def run_suites(
    suite: str,
    max_order: Optional[int] = None,
    budget: BudgetConfig = DEFAULT_BUDGET,
    service: Optional[ShardedSearchService] = None,
    logger: Optional[logging.Logger] = None,
) -> List[VerifyReport]:
    """Run one suite by name, or every suite for ``all``."""
    if suite == 'all':
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f'Unknown suite: {suite}, expected one of all, {", ".join(SUITES)}')

    reports = []
    for name in names:
        order = max_order
        if order is not None and suite == 'all':
            # one cap for every suite, clipped to what each can afford
            order = min(order, SUITES[name].ceiling)
        reports.append(SUITES[name](order, budget, service, logger).run())
    return reports

