import pytest

from strengthlab.config import BudgetConfig
from strengthlab.enumeration import iter_graphs
from strengthlab.exceptions import BudgetError, EmptyGraphError, GraphError
from strengthlab.graph import (
    build_fk,
    complement,
    complete,
    complete_bipartite,
    contains_subgraph,
    disjoint_union,
    empty,
)
from strengthlab.strength import (
    fk_numbering,
    max_fk_subgraph,
    strength,
    strength_bruteforce,
    strength_formula_complete,
    strength_formula_complete_bipartite,
    strength_formula_complete_union,
    strength_of_numbering,
    strength_pair,
    strength_value,
)


def test_small_named_graphs(k12, k1_k2, k2_k3):
    assert strength(k12).value == 4
    assert strength(k1_k2).value == 3
    assert strength(complete(3)).value == 5
    assert strength(k2_k3).value == 7


def test_lexicographic_witness(k12):
    result = strength_bruteforce(k12)
    assert result.witness_numbering.labels == (1, 2, 3)
    assert result.method == 'brute-force'
    assert result.witness_source == 'search'


def test_witness_attains_value(k2_k3):
    result = strength(k2_k3)
    assert result.witness_numbering.strength_value == result.value
    assert strength_of_numbering(k2_k3, result.witness_numbering) == 7
    assert result.max_fk_in_complement == 3


@pytest.mark.parametrize('s,t', [(s, t) for s in range(2, 6) for t in range(s, 6)])
def test_complete_union_formula(s, t):
    graph = disjoint_union(complete(s), complete(t))
    assert strength(graph).value == strength_formula_complete_union(s, t) == 2 * (s + t) - 3


@pytest.mark.parametrize('s,t', [(s, t) for s in range(1, 6) for t in range(s, 6)])
def test_complete_bipartite_formula(s, t):
    assert strength(complete_bipartite(s, t)).value == strength_formula_complete_bipartite(s, t)


@pytest.mark.parametrize('n', range(2, 9))
def test_complete_graph_formula(n):
    assert strength(complete(n)).value == strength_formula_complete(n) == 2 * n - 1


def test_formula_arguments():
    with pytest.raises(GraphError):
        strength_formula_complete(1)
    with pytest.raises(GraphError):
        strength_formula_complete_union(1, 3)
    assert strength_formula_complete_bipartite(4, 2) == 8


@pytest.mark.parametrize('order', range(2, 8))
def test_characterization_matches_brute_force(order):
    for graph in iter_graphs(order):
        if graph.is_empty():
            continue
        fast = strength(graph)
        slow = strength_bruteforce(graph)
        assert fast.value == slow.value, graph
        assert 3 <= fast.value <= 2 * order - 1
        assert fast.witness_numbering == slow.witness_numbering


def test_empty_graph_has_no_strength():
    with pytest.raises(EmptyGraphError):
        strength(empty(4))
    with pytest.raises(EmptyGraphError):
        strength_bruteforce(empty(4))


def test_brute_force_budget():
    tight = BudgetConfig(max_bruteforce_order=4)
    with pytest.raises(BudgetError, match='order <= 4'):
        strength_bruteforce(complete(5), tight)


def test_witness_from_embedding_above_search_order():
    tight = BudgetConfig(max_bruteforce_order=4)
    graph = disjoint_union(complete_bipartite(2, 3), complete(2))
    result = strength(graph, tight)
    assert result.witness_source == 'characterization-derived'
    assert result.witness_numbering.strength_value == result.value
    assert result.value == strength_bruteforce(graph).value


@pytest.mark.parametrize('k', range(2, 8))
def test_fk_numbering_bound(k):
    graph = complement(disjoint_union(build_fk(k), empty(2)))
    embedding = contains_subgraph(complement(graph), build_fk(k))
    numbering = fk_numbering(graph, embedding)
    assert numbering.strength_value <= 2 * graph.order - k


def test_fk_numbering_rejects_bad_embedding(k12):
    with pytest.raises(GraphError, match='injective'):
        fk_numbering(k12, [0, 0])


def test_max_fk_subgraph(k12):
    assert max_fk_subgraph(complement(k12)) == 2
    assert max_fk_subgraph(empty(5)) == 1
    assert max_fk_subgraph(build_fk(9)) == 9
    assert strength_value(k12) == 4


def test_strength_pair(k12):
    first, second = strength_pair(k12)
    assert (first.value, second.value) == (4, 3)
    first, second = strength_pair(complete(4))
    assert first.value == 7
    assert second is None
