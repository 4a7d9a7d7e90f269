import networkx as nx
import pytest

from strengthlab.enumeration import iter_graphs
from strengthlab.exceptions import EdgeListError, Graph6Error
from strengthlab.graph import build_fk, complete, empty, from_edges, to_networkx
from strengthlab.parsers import (
    format_edge_list,
    graph6_decode,
    graph6_encode,
    graph6_stream,
    parse_edge_list,
)


def test_known_graph6_records():
    assert graph6_encode(complete(3)) == b'Bw'
    assert graph6_decode('Bw') == complete(3)
    assert graph6_decode(b'>>graph6<<Bw\n') == complete(3)
    assert graph6_encode(empty(0)) == b'?'


@pytest.mark.parametrize('k', [1, 2, 5, 9, 14, 20])
def test_graph6_agrees_with_networkx(k):
    graph = build_fk(k)
    expected = nx.to_graph6_bytes(to_networkx(graph), header=False).strip()
    assert graph6_encode(graph) == expected

    decoded = nx.from_graph6_bytes(graph6_encode(graph))
    assert {frozenset(edge) for edge in decoded.edges()} == {
        frozenset(edge) for edge in graph.edges()
    }


@pytest.mark.parametrize('order', range(1, 8))
def test_graph6_round_trip_over_all_classes(order):
    for graph in iter_graphs(order):
        record = graph6_encode(graph)
        assert graph6_decode(record) == graph
        decoded = nx.from_graph6_bytes(record)
        assert decoded.number_of_nodes() == order
        assert {frozenset(edge) for edge in decoded.edges()} == {
            frozenset(edge) for edge in graph.edges()
        }


def test_graph6_long_order():
    graph = from_edges(63, [(0, 62)])
    data = graph6_encode(graph)
    assert data[0] == 126
    assert graph6_decode(data) == graph


@pytest.mark.parametrize(
    'data,message',
    [
        (b'', 'Empty'),
        (b'B', 'payload bytes'),
        (b'Bx', 'Padding'),
        (b'B\x20', 'printable'),
        (b'~~', 'Eight-byte'),
        (b'~??', 'Truncated'),
    ],
)
def test_graph6_errors(data, message):
    with pytest.raises(Graph6Error, match=message):
        graph6_decode(data)


def test_graph6_stream():
    lines = list(graph6_stream([complete(2), empty(2)]))
    assert lines == [b'A_\n', b'A?\n']


def test_parse_edge_list(k12):
    graph = parse_edge_list('3;1 2;1 3')
    assert graph == k12
    assert parse_edge_list(' 3 ; 1,2 ; 1 3 ;') == k12
    assert parse_edge_list('4').size == 0
    assert format_edge_list(k12) == '3;1 2;1 3'


@pytest.mark.parametrize(
    'text,message',
    [
        ('', 'start with the order'),
        ('x;1 2', 'integer'),
        ('3;1', 'exactly two'),
        ('3;1 a', 'non-integer'),
        ('3;1 4', 'outside'),
        ('3;2 2', 'Loop'),
    ],
)
def test_parse_edge_list_errors(text, message):
    with pytest.raises(EdgeListError, match=message):
        parse_edge_list(text)
