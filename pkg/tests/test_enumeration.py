import networkx as nx
import pytest

from strengthlab.enumeration import (
    KNOWN_CLASS_COUNTS,
    EnumCursor,
    GraphEnumerator,
    brute_force_classes,
    canonical_form,
    complement_closure,
    cursor_resume,
    cursor_save,
    enumerate_graphs,
    enumerate_partitioned,
    is_isomorphic,
    iter_graph6,
    iter_graphs,
    shard_of,
)
from strengthlab.exceptions import BudgetError, CursorError
from strengthlab.graph import build_fk, complete_bipartite, cycle, path, to_networkx
from strengthlab.parsers import graph6_decode


@pytest.mark.parametrize('order', range(1, 8))
def test_class_counts(order):
    assert enumerate_graphs(order, lambda graph: None) == KNOWN_CLASS_COUNTS[order]


@pytest.mark.parametrize('order', range(1, 7))
def test_classes_match_dedup_oracle(order):
    forms = []
    enumerate_graphs(order, lambda graph: forms.append(canonical_form(graph)))
    assert len(forms) == len(set(forms))
    assert set(forms) == brute_force_classes(order)


@pytest.mark.parametrize('order', range(1, 8))
def test_complement_closure(order):
    assert complement_closure(order)


def test_classes_are_pairwise_non_isomorphic_by_networkx():
    graphs = [to_networkx(graph) for graph in iter_graphs(5)]
    for i, first in enumerate(graphs):
        for second in graphs[i + 1 :]:
            assert not nx.is_isomorphic(first, second)


@pytest.mark.parametrize('shard_count', [1, 2, 3, 8])
def test_shards_partition_the_classes(shard_count):
    expected = {canonical_form(graph) for graph in iter_graphs(6)}
    seen = []
    for shard in range(shard_count):
        enumerate_partitioned(6, shard, shard_count, lambda graph: seen.append(canonical_form(graph)))
    assert len(seen) == len(expected)
    assert set(seen) == expected


def test_visitor_can_stop_the_walk():
    assert enumerate_graphs(6, lambda graph: False) == 1


def test_cursor_resume_continues_after_last_visit():
    full = [canonical_form(graph) for graph in iter_graphs(6)]

    enumerator = GraphEnumerator(6)
    head = []
    for graph in enumerator:
        head.append(canonical_form(graph))
        if len(head) == 40:
            break
    cursor = cursor_save(enumerator)
    assert cursor.visited == 40
    assert len(cursor.path) == 5

    tail = []
    cursor_resume(cursor, lambda graph: tail.append(canonical_form(graph)))
    assert head + tail == full


def test_resumed_cursor_of_finished_walk_is_empty():
    enumerator = GraphEnumerator(4)
    assert len(list(enumerator)) == 11
    cursor = enumerator.cursor()
    assert cursor.done
    assert cursor_resume(cursor, lambda graph: None) == 0


@pytest.mark.parametrize(
    'cursor,message',
    [
        (EnumCursor(order=5, version=99), 'version'),
        (EnumCursor(order=13), 'out of range'),
        (EnumCursor(order=5, shard=2, shard_count=2), 'shard'),
        (EnumCursor(order=5, path=(0, 1), visited=1), 'steps'),
        (EnumCursor(order=5, path=(0, 1, 3, 7)), 'no visits'),
        (EnumCursor(order=3, path=(0, 9), visited=1), 'out of range'),
    ],
)
def test_cursor_validation(cursor, message):
    with pytest.raises(CursorError, match=message):
        cursor.validate()


def test_canonical_form_is_labeling_invariant():
    graph = build_fk(6)
    assert canonical_form(graph) == canonical_form(graph.relabel([5, 3, 1, 0, 2, 4]))
    assert canonical_form(graph).to_graph().size == graph.size
    assert is_isomorphic(graph, canonical_form(graph).to_graph())


def test_is_isomorphic():
    assert is_isomorphic(cycle(4), complete_bipartite(2, 2))
    assert not is_isomorphic(path(4), complete_bipartite(1, 3))
    assert not is_isomorphic(path(3), path(4))


def test_shard_assignment_is_stable():
    form = canonical_form(cycle(5))
    assert shard_of(form, 1) == 0
    assert shard_of(form, 7) == shard_of(form, 7)
    assert 0 <= shard_of(form, 7) < 7


def test_iter_graph6_stream():
    lines = list(iter_graph6(4))
    assert len(lines) == 11
    assert all(line.endswith(b'\n') for line in lines)
    assert {canonical_form(graph6_decode(line)) for line in lines} == {
        canonical_form(graph) for graph in iter_graphs(4)
    }


def test_budget_errors():
    with pytest.raises(BudgetError):
        GraphEnumerator(13)
    with pytest.raises(BudgetError):
        GraphEnumerator(5, shard=3, shard_count=2)
    with pytest.raises(BudgetError):
        brute_force_classes(8)
