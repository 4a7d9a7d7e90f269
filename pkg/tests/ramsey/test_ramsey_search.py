import pytest

from strengthlab.config import BudgetConfig
from strengthlab.exceptions import BudgetError, GraphError
from strengthlab.graph import complement
from strengthlab.parsers import graph6_encode
from strengthlab.ramsey import (
    arrows_fk,
    describe_family,
    is_non_arrowing_witness,
    ramsey_fk,
)
from strengthlab.services import ShardedSearchService


@pytest.mark.parametrize(
    's,t,expected',
    [(2, 2, 2), (2, 3, 3), (2, 4, 4), (3, 3, 3), (3, 4, 5), (3, 5, 5), (4, 4, 7)],
)
def test_small_values_by_search(s, t, expected, service):
    result = ramsey_fk(s, t, n_cap=7, service=service)
    assert result.status == 'exact'
    assert result.value == expected
    assert result.witness.order == expected - 1
    assert is_non_arrowing_witness(result.witness, s, t)


def test_r44_witness_is_k33(service):
    result = ramsey_fk(4, 4, n_cap=7, service=service)
    assert describe_family(result.witness) == 'K_{3,3}'
    assert result.work == 1044


def test_swapped_pair_complements_the_witness(service):
    result = ramsey_fk(4, 3, n_cap=6, service=service)
    assert (result.s, result.t, result.value) == (4, 3, 5)
    assert is_non_arrowing_witness(result.witness, 4, 3)
    assert is_non_arrowing_witness(complement(result.witness), 3, 4)


def test_cap_below_lower_bound_is_bounded(service):
    result = ramsey_fk(4, 5, n_cap=8, service=service)
    assert result.status == 'bounded'
    assert result.value is None
    assert (result.lower, result.upper) == (9, 25)
    assert result.reference == 9
    assert describe_family(result.witness) == 'K_{4,4}'
    assert result.work == 0


def test_bounded_without_known_upper(service):
    result = ramsey_fk(5, 6, n_cap=8, service=service)
    assert result.status == 'bounded'
    assert result.lower == 13
    assert result.upper is None
    assert result.reference is None


def test_arrows_at_six_fails_for_f4(service):
    arrows, witness = arrows_fk(6, 4, 4, service=service)
    assert not arrows
    assert is_non_arrowing_witness(witness, 4, 4)
    assert describe_family(witness) in ('K_{3,3}', '2K_3')


def test_arrows_returns_no_witness_when_arrowing(service):
    assert arrows_fk(7, 4, 4, service=service) == (True, None)


def test_counterexample_does_not_depend_on_sharding(logger):
    witnesses = set()
    for shard_count in (1, 3, 8):
        service = ShardedSearchService(shard_count=shard_count, chunk_size=7, logger=logger)
        arrows, witness = arrows_fk(6, 3, 6, service=service)
        assert not arrows
        witnesses.add(graph6_encode(witness))
    assert len(witnesses) == 1


def test_counterexample_does_not_depend_on_workers(logger):
    single = ShardedSearchService(workers=1, shard_count=4, chunk_size=20, logger=logger)
    pooled = ShardedSearchService(workers=2, shard_count=4, chunk_size=20, logger=logger)
    assert arrows_fk(6, 4, 4, service=single) == arrows_fk(6, 4, 4, service=pooled)


def test_budget_and_argument_errors(service):
    with pytest.raises(BudgetError, match='n_cap'):
        ramsey_fk(4, 6, n_cap=11, service=service)
    with pytest.raises(BudgetError):
        arrows_fk(8, 3, 3, BudgetConfig(max_enum_order=7, max_fmax_order=7), service)
    with pytest.raises(GraphError):
        ramsey_fk(1, 4, service=service)
