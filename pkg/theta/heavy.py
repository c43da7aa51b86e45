"""
Тяжёлые C-пути в 3-связных плоских графах.

Если в (G, w) с граничным циклом C есть C-путь веса >= 2t или ребро вне C
веса >= t, строится θ_{t,t,t}: либо прямо на концах пути, либо через
вершину x на C, веер из трёх путей от x к пути и средний путь веера.
"""
import logging

from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import disjoint_paths, is_3connected
from graphcore.graph import PathWitness
from graphcore.paths import max_weight_path, path_from_vertices

from .certificates import ThetaCertificate, verify_theta
from .search import contains_theta

logger = logging.getLogger(__name__)


def _check_preconditions(plane, cycle, t):
    graph = plane.graph
    if not is_3connected(graph):
        raise ValidationError('Граф должен быть 3-связным', code='not_3connected')
    if not cycle.is_valid(graph) or not plane.is_facial(cycle.edge_set):
        raise ValidationError('C должен быть граничным циклом грани', code='not_facial')
    heavy = [eid for eid in cycle.edges if graph.weight(eid) >= t]
    if cycle.length < 3 * t and len(heavy) < 2:
        raise ValidationError('Нужно |C| >= 3t или два ребра C веса >= t', code='short_cycle')
    for eid in cycle.edges:
        e = graph.edge(eid)
        if any(graph.weight(other) > e.weight for other in graph.edges_between(e.u, e.v)):
            raise ValidationError(f'Ребро {eid} цикла легче параллельного', code='not_max_parallel')


def cpath_through_edge(graph, cycle, eid):
    """C-путь, содержащий ребро eid: ребро и два непересекающихся пути от его концов к C"""
    e = graph.edge(eid)
    edge_path = PathWitness((e.u, e.v), (eid,), e.weight)
    if e.u in cycle.vertex_set and e.v in cycle.vertex_set:
        return edge_path
    legs = disjoint_paths(graph, [e.u, e.v], cycle.vertices, removed_pairs=[(e.u, e.v)])
    if len(legs) < 2:
        return None
    leg_u = next(leg for leg in legs if leg[0] == e.u)
    leg_v = next(leg for leg in legs if leg[0] == e.v)
    return path_from_vertices(graph, leg_u[::-1]).concat(edge_path).concat(path_from_vertices(graph, leg_v))


def find_violation(graph, cycle, t, budget=None):
    """C-путь веса >= 2t или C-путь через ребро веса >= t вне C; иначе None"""
    on_cycle = cycle.vertex_set
    for e in graph.edges:
        if e.id not in cycle.edge_set and e.weight >= t:
            found = cpath_through_edge(graph, cycle, e.id)
            if found is not None:
                return found
    best = max_weight_path(
        graph, on_cycle, targets=on_cycle,
        interior=set(graph.vertices) - on_cycle,
        forbidden_edges=cycle.edges,
        budget=budget,
    )
    if best is not None and best.weight >= 2 * t:
        return best
    return None


def _split_vertex(graph, arc, t):
    """Вершина x внутри дуги, делящая её на две части веса >= t"""
    for k in range(1, arc.length):
        if arc.subpath(graph, 0, k).weight >= t and arc.subpath(graph, k, arc.length).weight >= t:
            return arc.vertices[k]
    return None


def _construct(graph, cycle, cpath, t):
    thresholds = (t, t, t)
    v1, v2 = cpath.start, cpath.end
    if cycle.forward(graph, v1, v2).weight >= t:
        if cycle.forward(graph, v2, v1).weight >= t:
            paths = (cycle.forward(graph, v1, v2), cycle.forward(graph, v2, v1).reversed(), cpath)
            return ThetaCertificate(v1, v2, paths, thresholds)
        cpath = cpath.reversed()
        v1, v2 = v2, v1
    # теперь C[v1, v2] легче t
    x = _split_vertex(graph, cycle.forward(graph, v2, v1), t)
    if x is None:
        return None
    fan = disjoint_paths(graph, [x], cpath.vertices)
    if len(fan) < 3:
        return None
    fan.sort(key=lambda leg: cpath.vertices.index(leg[-1]))
    middle = fan[1]
    if set(middle[1:]) & cycle.vertex_set:
        return None
    spoke = path_from_vertices(graph, middle)
    i = cpath.vertices.index(spoke.end)
    to_v1 = cpath.subpath(graph, 0, i).reversed()
    to_v2 = cpath.subpath(graph, i, cpath.length)
    if to_v1.weight >= t:
        paths = (cycle.forward(graph, x, v1), cycle.forward(graph, v1, x).reversed(), spoke.concat(to_v1))
        return ThetaCertificate(x, v1, paths, thresholds)
    if to_v2.weight >= t:
        paths = (cycle.forward(graph, x, v2), cycle.forward(graph, v2, x).reversed(), spoke.concat(to_v2))
        return ThetaCertificate(x, v2, paths, thresholds)
    return None


def heavy_cpath_theta(plane, cycle, t, budget=None):
    """
    θ_{t,t,t} по тяжёлому C-пути или тяжёлому ребру вне C; None, если их нет.
    """
    _check_preconditions(plane, cycle, t)
    graph = plane.graph
    budget = ensure_budget(budget)
    cpath = find_violation(graph, cycle, t, budget)
    if cpath is None:
        return None
    cert = _construct(graph, cycle, cpath, t)
    if cert is None or not verify_theta(graph, cert):
        logger.debug('Построение через веер не сработало, полный поиск θ_{%s,%s,%s}', t, t, t)
        cert = contains_theta(graph, t, t, t, budget)
    if cert is None:
        raise AssertionError('Тяжёлый C-путь есть, а θ_{t,t,t} не найдена')
    return cert
