"""Input and output codecs: graph6 and the 1-based edge-list text format."""

from typing import Iterable, Iterator, List, Union

from strengthlab.exceptions import EdgeListError, Graph6Error
from strengthlab.graph import MAX_ORDER, Graph, from_edges
from strengthlab.utils import ceil_div

GRAPH6_HEADER = b'>>graph6<<'

_BIAS = 63
_LONG_ORDER = 126


def _upper_triangle(order: int) -> Iterator[tuple]:
    # column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, order):
        for i in range(j):
            yield i, j


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + _BIAS])
    return bytes([_LONG_ORDER, (n >> 12 & 63) + _BIAS, (n >> 6 & 63) + _BIAS, (n & 63) + _BIAS])


def graph6_encode(graph: Graph) -> bytes:
    """Encode a graph as graph6 bytes, without header or newline."""
    bits = [1 if graph.adj[i] >> j & 1 else 0 for i, j in _upper_triangle(graph.order)]
    bits.extend([0] * (-len(bits) % 6))

    payload = bytearray()
    for start in range(0, len(bits), 6):
        chunk = 0
        for bit in bits[start : start + 6]:
            chunk = chunk << 1 | bit
        payload.append(chunk + _BIAS)
    return _encode_order(graph.order) + bytes(payload)


def graph6_decode(data: Union[bytes, str]) -> Graph:
    """Decode one graph6 record; an optional ``>>graph6<<`` header is accepted."""
    if isinstance(data, str):
        try:
            data = data.encode('ascii')
        except UnicodeEncodeError as e:
            raise Graph6Error('graph6 text must be ASCII', e) from e

    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise Graph6Error('Empty graph6 record')

    for byte in data:
        if not _BIAS <= byte <= 126:
            raise Graph6Error(f'Byte {byte!r} is outside the printable graph6 range')

    if data[0] == _LONG_ORDER:
        if len(data) >= 2 and data[1] == _LONG_ORDER:
            raise Graph6Error('Eight-byte order encoding is not supported')
        if len(data) < 4:
            raise Graph6Error('Truncated order field')
        n = (data[1] - _BIAS) << 12 | (data[2] - _BIAS) << 6 | (data[3] - _BIAS)
        payload = data[4:]
    else:
        n = data[0] - _BIAS
        payload = data[1:]

    if n > MAX_ORDER:
        raise Graph6Error(f'Order {n} exceeds the supported maximum of {MAX_ORDER}')

    pairs = n * (n - 1) // 2
    if len(payload) != ceil_div(pairs, 6):
        raise Graph6Error(
            f'Expected {ceil_div(pairs, 6)} payload bytes for order {n}, got {len(payload)}'
        )

    edges = []
    for index, (i, j) in enumerate(_upper_triangle(n)):
        chunk = payload[index // 6] - _BIAS
        if chunk >> (5 - index % 6) & 1:
            edges.append((i, j))

    padding = len(payload) * 6 - pairs
    if padding and (payload[-1] - _BIAS) & ((1 << padding) - 1):
        raise Graph6Error('Padding bits must be zero')

    return from_edges(n, edges)


def graph6_stream(graphs: Iterable[Graph]) -> Iterator[bytes]:
    """Newline-delimited graph6 records."""
    for graph in graphs:
        yield graph6_encode(graph) + b'\n'


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n; u v; u v; ..."`` with 1-based vertex labels."""
    fields = [field.strip() for field in text.strip().split(';')]
    if not fields or not fields[0]:
        raise EdgeListError('Edge list must start with the order')

    try:
        n = int(fields[0])
    except ValueError as e:
        raise EdgeListError(f'Order must be an integer, got {fields[0]!r}', e) from e

    edges: List[tuple] = []
    for field in fields[1:]:
        if not field:
            continue
        parts = field.replace(',', ' ').split()
        if len(parts) != 2:
            raise EdgeListError(f'Edge {field!r} must have exactly two endpoints')
        try:
            u, v = (int(part) for part in parts)
        except ValueError as e:
            raise EdgeListError(f'Edge {field!r} has a non-integer endpoint', e) from e
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeListError(f'Edge {field!r} has an endpoint outside [1, {n}]')
        edges.append((u - 1, v - 1))

    try:
        return from_edges(n, edges)
    except EdgeListError:
        raise
    except ValueError as e:
        raise EdgeListError(str(e), e) from e


def format_edge_list(graph: Graph) -> str:
    parts = [str(graph.order)] + [f'{u + 1} {v + 1}' for u, v in graph.edges()]
    return ';'.join(parts)
