"""
ef-тета: θ-подграф, в котором рёбра e и f лежат на разных путях между
ветвлениями, а третий путь имеет длину не меньше 2.

Порядок: сначала ищется пара вершин, разделяющая e и f; затем случай
общего конца; затем случай паросочетания через цикл C, хорду pq и путь R.
"""
import logging
from itertools import combinations

import networkx as nx
from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import disjoint_paths, is_2connected, is_simple
from graphcore.graph import PathWitness
from graphcore.paths import iter_paths, path_from_vertices

from .certificates import EfThetaOutcome, ThetaCertificate, separates, verify_ef_theta

logger = logging.getLogger(__name__)


def _check_input(graph, e, f):
    if not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    if not is_simple(graph):
        raise ValidationError('Граф должен быть простым', code='not_simple')
    if not graph.has_edge_id(e) or not graph.has_edge_id(f):
        raise ValidationError('Нет такого ребра', code='bad_edge')
    if e == f:
        raise ValidationError('Рёбра e и f должны различаться', code='same_edge')


def _third_path(graph, u, v, blocked):
    """Кратчайший u-v путь длины >= 2 в обход blocked"""
    simple = graph.simple_nx()
    simple.remove_nodes_from(blocked)
    if simple.has_edge(u, v):
        simple.remove_edge(u, v)
    try:
        vertices = nx.shortest_path(simple, u, v)
    except nx.NetworkXNoPath:
        return None
    return path_from_vertices(graph, vertices)


def _search_in(graph, e, f, budget):
    """Полный перебор ef-тет подграфа graph"""
    if not graph.has_edge_id(e) or not graph.has_edge_id(f):
        return None
    everything = set(graph.vertices)
    for u, v in combinations(graph.vertices, 2):
        if graph.degree(u) < 3 or graph.degree(v) < 3:
            continue
        for with_e in iter_paths(graph, u, v, budget=budget):
            if e not in with_e.edges or f in with_e.edges:
                continue
            rest = everything - with_e.vertex_set
            for with_f in iter_paths(graph, u, v, allowed=rest, forbidden_edges=with_e.edges, budget=budget):
                if f not in with_f.edges:
                    continue
                blocked = (with_e.interior | with_f.interior)
                third = _third_path(graph, u, v, blocked)
                if third is not None:
                    return ThetaCertificate(u, v, (with_e, with_f, third), (1, 1, 2))
    return None


def _common_end(graph, e, f):
    """Построение для рёбер ab и ad с общим концом a степени >= 3"""
    a = next(iter(graph.edge(e).ends & graph.edge(f).ends))
    b, d = graph.edge(e).other(a), graph.edge(f).other(a)
    x = min(set(graph.neighbors(a)) - {b, d})
    rest = graph.simple_nx()
    rest.remove_nodes_from((a, x))
    p_path = path_from_vertices(graph, nx.shortest_path(rest, b, d))
    # Q - кратчайший путь от x до P в G - a
    legs = disjoint_paths(graph, [x], p_path.vertices, removed=[a])
    q_path = path_from_vertices(graph, min(legs, key=lambda leg: (len(leg), leg)))
    q = q_path.end
    i = p_path.vertices.index(q)
    to_b = PathWitness((a, b), (e,), graph.weight(e))
    to_d = PathWitness((a, d), (f,), graph.weight(f))
    along_e = to_b.concat(p_path.subpath(graph, 0, i))
    along_f = to_d.concat(p_path.reversed().subpath(graph, 0, len(p_path.vertices) - 1 - i))
    through_x = path_from_vertices(graph, [a, x]).concat(q_path)
    return ThetaCertificate(a, q, (along_e, along_f, through_x), (1, 1, 2))


def _cycle_through(graph, e, f):
    """Цикл через e = ab и f = cd: пути P из a и Q из b к концам f"""
    a, b = sorted(graph.edge(e).ends)
    c, d = sorted(graph.edge(f).ends)
    links = disjoint_paths(graph, [a, b], [c, d], removed_pairs=[(a, b), (c, d)])
    if len(links) < 2:
        return None
    p_vertices = next(path for path in links if path[0] == a)
    q_vertices = next(path for path in links if path[0] == b)
    return p_vertices, q_vertices


def _matching_frame(graph, e, f):
    """
    Подграф C + pq + R: хорда pq с p на P - c как можно ближе к a,
    q на Q - b; R соединяет две дуги C - {p, q} в обход p и q.
    """
    frame = _cycle_through(graph, e, f)
    if frame is None:
        return None
    p_vertices, q_vertices = frame
    on_q = set(q_vertices[1:])
    chord = None
    for p in p_vertices[:-1]:
        ends = [x for x in graph.neighbors(p) if x in on_q]
        if ends:
            chord = (p, ends[0])
            break
    if chord is None:
        return None
    cycle_edges = set(path_from_vertices(graph, p_vertices).edges)
    cycle_edges |= set(path_from_vertices(graph, q_vertices).edges)
    cycle_edges |= {e, f}
    ring = graph.edge_subgraph(cycle_edges).remove_vertices(chord)
    arcs = [frozenset(comp) for comp in nx.connected_components(ring.to_nx())]
    edges = cycle_edges | set(graph.edges_between(*chord))
    rest = graph.simple_nx()
    rest.remove_nodes_from(chord)
    for i, arc in enumerate(arcs):
        rest.add_edges_from((('arc', i), x) for x in arc)
    if len(arcs) == 2 and nx.has_path(rest, ('arc', 0), ('arc', 1)):
        route = nx.shortest_path(rest, ('arc', 0), ('arc', 1))[1:-1]
        edges |= set(path_from_vertices(graph, route).edges)
    logger.debug('Каркас ef-теты: хорда %s, %s рёбер', chord, len(edges))
    return graph.edge_subgraph(edges)


def find_ef_theta(graph, e, f, budget=None):
    """
    ef-тета, исключение или разделяющая пара вершин.

    Разделяющей считается лексикографически первая пара Z.
    """
    _check_input(graph, e, f)
    budget = ensure_budget(budget)
    for z in combinations(graph.vertices, 2):
        if separates(graph, z, e, f):
            return EfThetaOutcome('separator', e, f, separator=tuple(z))
    common = graph.edge(e).ends & graph.edge(f).ends
    if common:
        a = next(iter(common))
        if graph.degree(a) == 2:
            return EfThetaOutcome('exception_common_end', e, f, vertex=a)
        outcome = EfThetaOutcome('theta', e, f, certificate=_common_end(graph, e, f))
    else:
        if graph.order == 4 and graph.size == 6:
            return EfThetaOutcome('exception_k4', e, f)
        cert = None
        frame = _matching_frame(graph, e, f)
        if frame is not None:
            cert = _search_in(frame, e, f, budget)
        if cert is None:
            cert = _search_in(graph, e, f, budget)
        if cert is None:
            raise AssertionError(f'Нет ef-теты для рёбер {e}, {f} вне исключений')
        outcome = EfThetaOutcome('theta', e, f, certificate=cert)
    if not verify_ef_theta(graph, outcome):
        raise AssertionError('Построенная ef-тета не прошла проверку')
    return outcome
