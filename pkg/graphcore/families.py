"""
Стандартные семейства графов с единичными весами.

Построение через генераторы networkx; вершины перенумерованы по порядку.
"""
import networkx as nx

from .graph import Edge, WeightedMultigraph


def cycle(n):
    return WeightedMultigraph.from_nx(nx.cycle_graph(n))


def path(n):
    """Путь с n вершинами"""
    return WeightedMultigraph.from_nx(nx.path_graph(n))


def complete(n):
    return WeightedMultigraph.from_nx(nx.complete_graph(n))


def complete_bipartite(m, n):
    return WeightedMultigraph.from_nx(nx.complete_bipartite_graph(m, n))


def wheel(n):
    """W_n: обод из n вершин 1..n и центр 0"""
    return WeightedMultigraph.from_nx(nx.wheel_graph(n + 1))


def ladder(n):
    """Лестница L_n из n ступеней: рельсы 0..n-1 и n..2n-1, ступени i - i+n"""
    return WeightedMultigraph.from_nx(nx.ladder_graph(n))


def prism():
    return WeightedMultigraph.from_nx(nx.circular_ladder_graph(3))


def cube():
    return WeightedMultigraph.from_nx(nx.hypercube_graph(3))


def octahedron():
    return WeightedMultigraph.from_nx(nx.octahedral_graph())


def petersen():
    return WeightedMultigraph.from_nx(nx.petersen_graph())


def fan(n):
    """Путь 1..n и вершина 0, смежная со всеми"""
    graph = nx.path_graph(range(1, n + 1))
    graph.add_edges_from((0, i) for i in range(1, n + 1))
    return WeightedMultigraph.from_nx(graph)


def theta(a, b, c):
    """θ_{a,b,c} с единичными весами: ветви 0 и 1, пути длин a, b, c"""
    edges = []
    next_vertex = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, next_vertex))
            prev = next_vertex
            next_vertex += 1
        edges.append((prev, 1))
    return WeightedMultigraph.from_edges(next_vertex, edges)


def parallel(weights):
    """Две вершины 0, 1 и параллельные рёбра заданных весов"""
    return WeightedMultigraph.from_edges(2, [(0, 1, w) for w in weights])


def with_extra_edges(graph, pairs, weight=1):
    """Копия графа с добавленными рёбрами (номера продолжают нумерацию)"""
    start = graph.max_edge_id() + 1
    return graph.add_edges(Edge(start + i, u, v, weight) for i, (u, v) in enumerate(pairs))


def subdivide(graph, eid, weights=(1, 1)):
    """Подразбиение ребра новой вершиной; веса частей задаются явно"""
    e = graph.edge(eid)
    mid = graph.max_vertex() + 1
    start = graph.max_edge_id() + 1
    return graph.remove_edges([eid]).add_edges(
        [Edge(start, e.u, mid, weights[0]), Edge(start + 1, mid, e.v, weights[1])],
        extra_vertices=[mid],
    )
