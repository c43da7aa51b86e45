"""
Проверки классов L_{r,s}, L^3_{r,s}, P_r, P_r^3 и поиск прямоугольников.

L_{r,s} - 2-связные графы без пути длины s, все веса меньше r (r=None -
класс L_s без условия на веса). P_r - 2-связные плоские графы, где нет
C-пути веса >= 2r и ребра вне C веса >= r; C - внешний цикл.
"""
import logging

from graphcore.budget import BudgetExhausted, Unknown
from graphcore.connectivity import is_2connected, is_3connected
from graphcore.paths import longest_path, max_weight_path

from .bounds import BoundTable
from .certificates import ClassCertificate, ClassViolation

logger = logging.getLogger(__name__)


def in_L(graph, r=None, s=None, budget=None, tag='L'):
    params = {'r': r, 's': s}
    if not is_2connected(graph):
        return ClassViolation(tag, params, 'not_2connected')
    if r is not None:
        heavy = [e for e in graph.edges if e.weight >= r]
        if heavy:
            return ClassViolation(tag, params, 'heavy_edge', {'edge': heavy[0].id, 'weight': heavy[0].weight})
    try:
        found = longest_path(graph, budget)
    except BudgetExhausted as exc:
        return Unknown.from_exception(exc)
    if s is not None and found.edges >= s:
        return ClassViolation(tag, params, 'long_path', found.edges_path)
    evidence = {
        'longest_path': found.edges,
        'max_weight': max(e.weight for e in graph.edges),
        'path': found.edges_path.to_dict(),
    }
    return ClassCertificate(tag, params, evidence, found)


def in_L3(graph, r=None, s=None, budget=None):
    """3-связные члены L_{r,s} порядка не меньше 5"""
    params = {'r': r, 's': s}
    if not is_3connected(graph):
        return ClassViolation('L3', params, 'not_3connected')
    if graph.order < 5:
        return ClassViolation('L3', params, 'small_order')
    return in_L(graph, r, s, budget, tag='L3')


def max_cpath(graph, cycle, budget=None):
    """Самый тяжёлый C-путь или None"""
    on_cycle = cycle.vertex_set
    return max_weight_path(
        graph, on_cycle, targets=on_cycle,
        interior=set(graph.vertices) - on_cycle,
        forbidden_edges=cycle.edges,
        budget=budget,
    )


def in_Pr(plane, r, budget=None, tag='Pr'):
    graph = plane.graph
    params = {'r': r}
    if not is_2connected(graph):
        return ClassViolation(tag, params, 'not_2connected')
    cycle = plane.outer_cycle()
    if cycle is None:
        return ClassViolation(tag, params, 'outer_not_cycle')
    inner = [e for e in graph.edges if e.id not in cycle.edge_set]
    heavy = [e for e in inner if e.weight >= r]
    if heavy:
        return ClassViolation(tag, params, 'heavy_inner_edge', {'edge': heavy[0].id, 'weight': heavy[0].weight})
    try:
        best = max_cpath(graph, cycle, budget)
    except BudgetExhausted as exc:
        return Unknown.from_exception(exc)
    if best is not None and best.weight >= BoundTable.pr_cpath(r):
        return ClassViolation(tag, params, 'heavy_cpath', best)
    evidence = {
        'plane': plane.to_dict(),
        'outer_cycle': cycle.to_dict(),
        'max_cpath': 0 if best is None else best.weight,
        'max_inner_weight': max((e.weight for e in inner), default=0),
    }
    return ClassCertificate(tag, params, evidence, cycle)


def in_Pr3(plane, r, budget=None):
    """P_r^3: 3-связен и |C| >= 3r или на C не меньше трёх рёбер веса >= r"""
    params = {'r': r}
    if not is_3connected(plane.graph):
        return ClassViolation('Pr3', params, 'not_3connected')
    result = in_Pr(plane, r, budget, tag='Pr3')
    if not isinstance(result, ClassCertificate):
        return result
    cycle = result.witness
    heavy = [eid for eid in cycle.edges if plane.graph.weight(eid) >= r]
    if cycle.length < BoundTable.pr3_cycle(r) and len(heavy) < 3:
        return ClassViolation('Pr3', params, 'short_outer_cycle', {'length': cycle.length, 'heavy': heavy})
    result.evidence['heavy_outer_edges'] = heavy
    return result


def rectangles(plane):
    """
    Внутренние 4-грани x1x2x3x4 с вершинами на C, у которых x1x2 и x3x4 -
    рёбра C без параллельных.
    """
    graph = plane.graph
    cycle = plane.outer_cycle()
    if cycle is None:
        return []
    found = []
    for face in plane.inner_faces:
        if face.length != 4 or not face.is_cycle() or not set(face.vertices) <= cycle.vertex_set:
            continue
        for i in (0, 1):
            pair = (face.edges[i], face.edges[i + 2])
            if all(eid in cycle.edge_set and len(graph.edges_between(*graph.edge(eid).ends)) == 1 for eid in pair):
                found.append(face)
                break
    return found
