"""
Построение неизбежных подструктур: индуцированный путь или вершина большой
степени, гребёнка в дереве, лестница из паросочетания двух путей, колесо
или L_t^+ в 3-связном графе.
"""
import logging
from dataclasses import dataclass

import networkx as nx
from django.core.exceptions import ValidationError

from graphcore import families
from graphcore.budget import BudgetExhausted, Unknown, ensure_budget
from graphcore.connectivity import is_3connected, is_connected, is_simple
from graphcore.graph import PathWitness, WeightedMultigraph
from graphcore.paths import path_from_vertices, suppress_degree_two

from .minors import topological_minor, verify_wheel_minor
from .patterns import PatternWitness, comb, ladder_plus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HighDegree:
    """Вершина степени больше d"""
    vertex: int
    degree: int

    def to_dict(self):
        return {'kind': 'high_degree', 'vertex': self.vertex, 'degree': self.degree}


def _max_degree_vertex(graph):
    return min(graph.vertices, key=lambda v: (-graph.degree(v), v))


def moore_bound(d, p):
    """1 + d + d(d-1) + ... + d(d-1)^(p-1)"""
    return 1 + sum(d * (d - 1) ** i for i in range(p))


def induced_path_or_degree(graph, d, p, v):
    """
    Вершина степени > d или индуцированный путь длины p + 1 из v.

    Кратчайший путь в BFS всегда индуцирован.
    """
    if not is_simple(graph) or not is_connected(graph):
        raise ValidationError('Нужен простой связный граф', code='not_connected')
    if v not in graph:
        raise ValidationError(f'Нет вершины {v}', code='bad_vertex')
    top = _max_degree_vertex(graph)
    if graph.degree(top) > d:
        return HighDegree(top, graph.degree(top))
    if graph.order <= moore_bound(d, p):
        raise ValidationError(f'Нужно больше {moore_bound(d, p)} вершин', code='too_small')
    layers = nx.single_source_shortest_path(graph.simple_nx(), v, cutoff=p + 1)
    far = sorted(x for x, route in layers.items() if len(route) == p + 2)
    if not far:
        raise AssertionError(f'Нет вершины на расстоянии {p + 1} от {v} при Δ <= {d}')
    return path_from_vertices(graph, layers[far[0]])


def _leaf_from(tree, start, previous):
    """Спуск от start в сторону от previous до листа"""
    route = [start]
    while True:
        ahead = [x for x in tree.neighbors(route[-1]) if x != previous]
        if not ahead:
            return route
        previous = route[-1]
        route.append(ahead[0])


def _comb_in_tree(tree, t):
    """
    Подразбиение comb_t: в дереве без вершин степени 2 путь длины t из
    вершины степени >= 3 вместе с соседями вне пути даёт гребёнку.
    """
    reduction = suppress_degree_two(tree)
    reduced = reduction.graph
    simple = reduced.simple_nx()
    for v in reduced.vertices:
        if reduced.degree(v) < 3:
            continue
        routes = nx.single_source_shortest_path(simple, v, cutoff=t)
        ends = sorted(x for x, route in routes.items() if len(route) == t + 1)
        if not ends:
            continue
        spine = routes[ends[0]]
        on_spine = set(spine)
        teeth = []
        for i in range(t - 1):
            teeth.append(min(x for x in reduced.neighbors(spine[i]) if x not in on_spine))
        teeth.append(spine[t])
        pattern = comb(t)
        images = {i: spine[i] for i in range(t)}
        images.update({t + i: teeth[i] for i in range(t)})
        paths = {}
        for e in pattern.edges:
            step = path_from_vertices(reduced, [images[e.u], images[e.v]])
            paths[e.id] = reduction.expand_path(step)
        return PatternWitness('comb', t, images, paths)
    return None


def comb_or_degree(tree, d, t):
    """Вершина степени > d или подразбиение comb_t в дереве с >= d^t листьями"""
    if not is_simple(tree) or not nx.is_tree(tree.simple_nx()):
        raise ValidationError('Нужно дерево', code='not_tree')
    if d < 2 or t < 2:
        raise ValidationError('Нужно d, t >= 2', code='bad_parameter')
    leaves = sum(1 for v in tree.vertices if tree.degree(v) == 1)
    if leaves < d ** t:
        raise ValidationError(f'Листьев {leaves} < {d ** t}', code='few_leaves')
    top = _max_degree_vertex(tree)
    if tree.degree(top) > d:
        return HighDegree(top, tree.degree(top))
    found = _comb_in_tree(tree, t)
    if found is None:
        raise AssertionError('Нет ни вершины большой степени, ни гребёнки')
    return found


@dataclass(frozen=True)
class MatchingLadder:
    """Граф X + Y + M и подразбиение L_{n+1} в нём"""
    graph: WeightedMultigraph
    witness: PatternWitness
    rungs: tuple
    nested: bool
    layers: int


def _peel(pi):
    """Слои F_1, F_2, ...: максимальные элементы порядка e_i < e_j (i < j, pi(i) < pi(j))"""
    left = set(range(len(pi)))
    layers = []
    while left:
        top = sorted(i for i in left if not any(j > i and pi[j] > pi[i] for j in left))
        layers.append(top)
        left -= set(top)
    return layers


def ladder_from_matching(m, pi, n):
    """
    L_{n+1} в объединении путей X = x_0..x_{m-1}, Y = y_0..y_{m-1} и
    паросочетания x_i y_pi(i) при m > n^2.

    Слой F_k размера > n даёт вложенную лестницу, иначе цепочка по слоям
    F_{n+1} < F_n < ... < F_1 даёт параллельную.
    """
    pi = list(pi)
    if sorted(pi) != list(range(m)):
        raise ValidationError('pi должна быть перестановкой 0..m-1', code='bad_permutation')
    if n < 1 or m <= n * n:
        raise ValidationError(f'Нужно m > n^2 = {n * n}', code='small_matching')
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(m + i, m + i + 1) for i in range(m - 1)]
    edges += [(i, m + pi[i]) for i in range(m)]
    graph = WeightedMultigraph.from_edges(2 * m, edges)
    layers = _peel(pi)
    wide = next((layer for layer in layers if len(layer) > n), None)
    if wide is not None:
        rungs = wide[:n + 1]
    else:
        chain = [layers[n][0]]
        for k in range(n - 1, -1, -1):
            below = chain[-1]
            chain.append(min(j for j in layers[k] if j > below and pi[j] > pi[below]))
        rungs = sorted(chain)
    pattern = families.ladder(n + 1)
    images = {}
    for j, i in enumerate(rungs):
        images[j] = i
        images[n + 1 + j] = m + pi[i]
    paths = {}
    for e in pattern.edges:
        a, b = sorted((images[e.u], images[e.v]))
        if abs(e.u - e.v) == n + 1:
            # ступень - ребро паросочетания
            paths[e.id] = path_from_vertices(graph, [a, b])
        else:
            paths[e.id] = path_from_vertices(graph, list(range(a, b + 1)))
    witness = PatternWitness('L', n + 1, images, paths)
    logger.debug('Лестница L_%s из %s слоёв, вложенная: %s', n + 1, len(layers), wide is not None)
    return MatchingLadder(graph, witness, tuple(rungs), wide is not None, len(layers))


def wheel_or_ladder(graph, t, budget=None):
    """Топологический минор W_t или L_t^+; None, если нет ни того, ни другого"""
    if not is_3connected(graph):
        # поиск точный и без 3-связности, теряется только гарантия ответа
        logger.debug('Граф не 3-связен, W_%s или L_%s^+ может не найтись', t, t)
    budget = ensure_budget(budget)
    try:
        found = topological_minor(graph, families.wheel(t), 'W', t, budget)
        if found is None:
            found = topological_minor(graph, ladder_plus(t), 'L_plus', t, budget)
    except BudgetExhausted as exc:
        return Unknown.from_exception(exc)
    return found


@dataclass(frozen=True)
class PipelineResult:
    """Шаг, на котором закончилось построение, и подразбиение W_t или L_t^+"""
    stage: str
    witness: PatternWitness


def _spoke_tree(graph, wheel):
    """Наименьшее дерево из центра колеса и спиц, содержащее все спицы"""
    hub = graph.induced(wheel.hub).simple_nx()
    tree_edges = {data['eid'] for _, _, data in nx.minimum_spanning_edges(hub, data=True)}
    tree = graph.edge_subgraph(tree_edges | set(wheel.spokes), extra_vertices=wheel.hub)
    feet = set(wheel.cycle.vertices)
    pruned = True
    while pruned:
        pruned = False
        for v in tree.vertices:
            if v not in feet and tree.degree(v) <= 1:
                tree = tree.remove_vertices([v])
                pruned = True
                break
    return tree


def _wheel_from_star(graph, tree, cycle, centre, t):
    legs = []
    for first in tree.neighbors(centre)[:t]:
        legs.append([centre] + _leaf_from(tree, first, centre))
    legs.sort(key=lambda leg: cycle.position(leg[-1]))
    pattern = families.wheel(t)
    images = {0: centre}
    images.update({i + 1: leg[-1] for i, leg in enumerate(legs)})
    paths = {}
    for e in pattern.edges:
        if e.u == 0:
            paths[e.id] = path_from_vertices(tree, legs[e.v - 1])
        else:
            a, b = (e.u, e.v) if e.v == e.u % t + 1 else (e.v, e.u)
            paths[e.id] = cycle.forward(graph, images[a], images[b])
    return PatternWitness('W', t, images, paths)


def _ladder_from_comb(graph, tree, cycle, found, t, r):
    spine = [found.branch_map[i] for i in range(r)]
    spine_path = found.branch_paths[comb(r).edges_between(0, 1)[0]]
    for i in range(1, r - 1):
        spine_path = spine_path.concat(found.branch_paths[comb(r).edges_between(i, i + 1)[0]])
    legs = []
    for i in range(r):
        tooth = found.branch_paths[comb(r).edges_between(i, r + i)[0]]
        tail = _leaf_from(tree, tooth.end, tooth.vertices[-2])
        legs.append(tooth.concat(path_from_vertices(tree, tail)))
    # разрез C по ребру между последней и первой вершиной: Y = C - e
    order = sorted(range(r), key=lambda i: cycle.position(legs[i].end))
    pi = [0] * r
    for rank, i in enumerate(order):
        pi[i] = rank
    rungs = ladder_from_matching(r, pi, t + 1).rungs[1:t + 1]
    pattern = ladder_plus(t)
    images = {}
    for j, i in enumerate(rungs):
        images[j] = spine[i]
        images[t + j] = legs[i].end
    at = {v: k for k, v in enumerate(spine_path.vertices)}
    dashed = pattern.max_edge_id()
    paths = {}
    for e in pattern.edges:
        a, b = images[e.u], images[e.v]
        if e.u < t and e.v < t:
            lo, hi = sorted((at[a], at[b]))
            paths[e.id] = spine_path.subpath(graph, lo, hi)
        elif (e.u < t) != (e.v < t):
            paths[e.id] = legs[rungs[min(e.u, e.v)]]
        else:
            first, last = sorted((a, b), key=cycle.position)
            # дополнительное ребро идёт по ободу через разрезанное ребро e
            if e.id == dashed:
                paths[e.id] = cycle.forward(graph, last, first)
            else:
                paths[e.id] = cycle.forward(graph, first, last)
    return PatternWitness('L_plus', t, images, paths)


def wheel_to_ladder_pipeline(graph, wheel, t, r=None):
    """
    Шаги построения W_t или L_t^+ из большого минора колеса.

    Дерево спиц T: если в нём есть вершина степени >= t, её ноги и обод дают
    W_t; иначе гребёнка comb_r в T задаёт паросочетание хребта X с ободом
    без одного ребра, из которого получается L_{t+2}, а вместе с ободом - L_t^+.
    """
    if t < 3:
        raise ValidationError('Нужно t >= 3', code='bad_parameter')
    r = 1 + (t + 1) ** 2 if r is None else r
    if r <= (t + 1) ** 2:
        raise ValidationError(f'Нужно r > {(t + 1) ** 2}', code='bad_parameter')
    if not verify_wheel_minor(graph, wheel, t):
        raise ValidationError('Это не минор колеса W_t', code='bad_wheel')
    tree = _spoke_tree(graph, wheel)
    centre = _max_degree_vertex(tree)
    if tree.degree(centre) >= t:
        return PipelineResult('degree', _wheel_from_star(graph, tree, wheel.cycle, centre, t))
    found = _comb_in_tree(tree, r)
    if found is None:
        logger.info('В дереве спиц нет гребёнки comb_%s', r)
        return None
    return PipelineResult('comb', _ladder_from_comb(graph, tree, wheel.cycle, found, t, r))
