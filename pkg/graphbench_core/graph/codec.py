"""
Reading and writing graphs.

Three text forms are understood: graph6 (one graph per line, optional >>graph6<< header),
the JSON edge list {"n": ..., "edges": [[u, v], ...]} and a square 0/1 adjacency matrix.
"""
import json
import os
from typing import List

import networkx as nx

from graphbench_core.errors import GraphValidationError
from graphbench_core.files import atomic_write
from graphbench_core.graph.graph import Graph, build_graph


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    index = {node: position for position, node in enumerate(sorted(graph.nodes))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in graph.edges])


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode('ascii').strip()


def from_graph6(text: str) -> Graph:
    try:
        return from_networkx(nx.from_graph6_bytes(text.strip().encode('ascii')))
    except (ValueError, nx.NetworkXError) as error:
        raise GraphValidationError(f"Malformed graph6 string {text!r}: {error}")


def to_json(g: Graph) -> dict:
    return {'n': g.n, 'edges': [list(edge) for edge in g.edges()]}


def from_json(data: dict) -> Graph:
    try:
        return build_graph(int(data['n']), [tuple(edge) for edge in data['edges']])
    except (KeyError, TypeError, ValueError) as error:
        if isinstance(error, GraphValidationError):
            raise
        raise GraphValidationError(f"Malformed JSON graph: {error}")


def parse_matrix_rows(text: str) -> List[str]:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows or any(set(row) - {'0', '1'} for row in rows):
        raise GraphValidationError("Matrix text must be rows of 0/1 characters")
    if len({len(row) for row in rows}) != 1:
        raise GraphValidationError("Matrix rows have different lengths")
    return rows


def from_matrix(text: str) -> Graph:
    rows = parse_matrix_rows(text)
    n = len(rows)
    if len(rows[0]) != n:
        raise GraphValidationError(f"Adjacency matrix must be square, got {n}x{len(rows[0])}")
    edges = []
    for u in range(n):
        for v in range(n):
            if rows[u][v] != rows[v][u]:
                raise GraphValidationError(f"Adjacency matrix is not symmetric at ({u}, {v})")
            if u < v and rows[u][v] == '1':
                edges.append((u, v))
        if rows[u][u] == '1':
            raise GraphValidationError(f"Self-loop at vertex {u}")
    return build_graph(n, edges)


def to_matrix(g: Graph) -> str:
    return '\n'.join(''.join('1' if g.has_edge(u, v) else '0' for v in range(g.n)) for u in range(g.n))


def parse_graph(text: str) -> Graph:
    stripped = text.strip()
    if not stripped:
        raise GraphValidationError("Empty graph description")
    if stripped.startswith('{'):
        try:
            return from_json(json.loads(stripped))
        except json.JSONDecodeError as error:
            raise GraphValidationError(f"Malformed JSON graph: {error}")
    if set(stripped) <= {'0', '1', '\n', '\r', ' ', '\t'}:
        return from_matrix(stripped)
    return from_graph6(stripped.splitlines()[-1] if stripped.startswith('>>graph6<<') else stripped)


def read_graph_file(path: str) -> Graph:
    try:
        with open(path) as graph_file:
            return parse_graph(graph_file.read())
    except OSError as error:
        raise GraphValidationError(f"Could not read graph file {path}: {error}")


GRAPH_FORMATS = {
    'graph6': to_graph6,
    'json': lambda g: json.dumps(to_json(g)),
    'matrix': to_matrix,
}


def format_graph(g: Graph, fmt: str = 'graph6') -> str:
    if fmt not in GRAPH_FORMATS:
        raise GraphValidationError(f"Unknown graph format {fmt}, expected one of {sorted(GRAPH_FORMATS)}")
    return GRAPH_FORMATS[fmt](g)


def write_graph(g: Graph, path: str, fmt: str = None):
    """Write g atomically; the format defaults from the extension (.g6, .json), else a 0/1 matrix."""
    if fmt is None:
        extension = os.path.splitext(path)[1].lower()
        fmt = {'.g6': 'graph6', '.graph6': 'graph6', '.json': 'json'}.get(extension, 'matrix')
    atomic_write(path, format_graph(g, fmt) + '\n')
