"""
Точный структурный поиск θ_{a,b,c} со свидетелем.

Поиск идёт по блокам графа. В каждом блоке вершины степени 2 подавляются,
2-разделения снимаются подъёмом: к каждой стороне добавляется виртуальное
ребро xy с весом самого тяжёлого xy-пути другой стороны. Куски без
2-разделений решаются таблицей лучших путей по маскам внутренних вершин.
"""
import logging
from itertools import combinations

from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import components_without, separation_from_sides, two_connected_blocks
from graphcore.graph import Edge, PathWitness
from graphcore.paths import max_xy_path, suppress_degree_two

from .certificates import ThetaCertificate, verify_theta
from .naive import theta_between

logger = logging.getLogger(__name__)

# Больше внутренних вершин - перебор путей без таблицы масок
MASK_LIMIT = 16


def normalize_thresholds(a, b, c):
    values = (a, b, c)
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ValidationError('Пороги θ должны быть целыми числами >= 0', code='bad_threshold')
    return tuple(sorted(values))


def _dominates(weights, thresholds):
    return all(w >= t for w, t in zip(sorted(weights), thresholds))


class PairTable:
    """
    Самые тяжёлые u-v пути по точному множеству внутренних вершин.

    Прямые рёбра u-v хранятся отдельно: каждое из них - путь с пустой
    внутренностью, и таких путей в θ может быть несколько.
    """

    def __init__(self, graph, u, v, budget):
        self.graph = graph
        self.u, self.v = u, v
        self.inner = [x for x in graph.vertices if x not in (u, v)]
        self.bit = {x: 1 << i for i, x in enumerate(self.inner)}
        self.full = (1 << len(self.inner)) - 1
        self.direct = sorted(graph.edges_between(u, v), key=lambda eid: (-graph.weight(eid), eid))
        adj = {x: {} for x in graph.vertices}
        for e in graph.edges:
            if e.ends == frozenset((u, v)):
                continue
            for a, b in ((e.u, e.v), (e.v, e.u)):
                current = adj[a].get(b)
                if current is None or (e.weight, -e.id) > (graph.weight(current), -current):
                    adj[a][b] = e.id
        self.best = {}
        self._walk(adj, budget)
        self._closure = None

    def _walk(self, adj, budget):
        u, v = self.u, self.v
        edges = []

        def step(x, mask, weight):
            budget.tick()
            for y, eid in sorted(adj[x].items()):
                if y == u:
                    continue
                total = weight + self.graph.weight(eid)
                if y == v:
                    if total > self.best.get(mask, (-1,))[0]:
                        self.best[mask] = (total, tuple(edges) + (eid,))
                    continue
                if mask & self.bit[y]:
                    continue
                edges.append(eid)
                step(y, mask | self.bit[y], total)
                edges.pop()

        step(u, 0, 0)

    def closure(self):
        """Для каждой маски - лучший путь с внутренностью внутри неё: (вес, маска)"""
        if self._closure is None:
            table = [(-1, 0)] * (self.full + 1)
            for mask, (weight, _) in self.best.items():
                table[mask] = (weight, mask)
            for i in range(len(self.inner)):
                bit = 1 << i
                for mask in range(self.full + 1):
                    if mask & bit and table[mask ^ bit][0] > table[mask][0]:
                        table[mask] = table[mask ^ bit]
            self._closure = table
        return self._closure

    def path(self, mask):
        weight, edges = self.best[mask]
        return PathWitness.from_edges(self.graph, self.u, edges)

    def direct_path(self, eid):
        return PathWitness((self.u, self.v), (eid,), self.graph.weight(eid))

    def find(self, thresholds):
        """Три независимых пути, покрывающих пороги, или None"""
        t1, t2, t3 = thresholds
        direct = [self.graph.weight(eid) for eid in self.direct]
        if len(direct) >= 3 and _dominates(direct[:3], thresholds):
            return tuple(self.direct_path(eid) for eid in self.direct[:3])
        if not self.best:
            return None
        closure = self.closure()
        top_weight, top_mask = closure[self.full]
        if len(direct) >= 2 and _dominates(direct[:2] + [top_weight], thresholds):
            return self.direct_path(self.direct[0]), self.direct_path(self.direct[1]), self.path(top_mask)
        if direct:
            for mask, (weight, _) in self.best.items():
                other_weight, other_mask = closure[self.full & ~mask]
                if other_weight >= 0 and _dominates([direct[0], weight, other_weight], thresholds):
                    return self.direct_path(self.direct[0]), self.path(mask), self.path(other_mask)
        heavy = sorted((m for m, (w, _) in self.best.items() if w >= t3), key=lambda m: (-self.best[m][0], m))
        middle = sorted((m for m, (w, _) in self.best.items() if w >= t2), key=lambda m: (-self.best[m][0], m))
        for first in heavy:
            for second in middle:
                if first & second:
                    continue
                third_weight, third_mask = closure[self.full & ~(first | second)]
                if third_weight >= t1:
                    return self.path(first), self.path(second), self.path(third_mask)
        return None


def _pair_search(graph, u, v, thresholds, budget):
    if graph.degree(u) < 3 or graph.degree(v) < 3:
        return None
    if graph.order - 2 > MASK_LIMIT:
        return theta_between(graph, u, v, thresholds, budget)
    paths = PairTable(graph, u, v, budget).find(thresholds)
    if paths is None:
        return None
    return ThetaCertificate(u, v, paths, thresholds)


def _kernel(graph, thresholds, budget):
    for u, v in combinations(graph.vertices, 2):
        cert = _pair_search(graph, u, v, thresholds, budget)
        if cert is not None:
            return cert
    return None


def _splitting_separation(graph):
    """Первое по номерам разреза 2-разделение или None"""
    if graph.order < 4:
        return None
    for cut in combinations(graph.vertices, 2):
        comps = components_without(graph, cut)
        if len(comps) >= 2:
            side1 = comps[0]
            side2 = frozenset().union(*comps[1:])
            return separation_from_sides(graph, cut, side1, side2)
    return None


def _expand(reduction, cert):
    paths = tuple(reduction.expand_path(p) for p in cert.paths)
    return ThetaCertificate(cert.u, cert.v, paths, cert.thresholds)


def _splice(graph, cert, virtual_id, realizing):
    """Замена виртуального ребра в путях сертификата реализующим путём"""
    paths = []
    for path in cert.paths:
        if virtual_id not in path.edges:
            paths.append(PathWitness.from_edges(graph, path.start, path.edges))
            continue
        i = path.edges.index(virtual_id)
        piece = realizing if path.vertices[i] == realizing.start else realizing.reversed()
        edges = path.edges[:i] + piece.edges + path.edges[i + 1:]
        paths.append(PathWitness.from_edges(graph, path.start, edges))
    return ThetaCertificate(cert.u, cert.v, tuple(paths), cert.thresholds)


def _lift(graph, sep, thresholds, budget):
    x, y = sorted(sep.cut)
    virtual_id = graph.max_edge_id() + 1
    sides = (
        (sep.part1, sep.vertices1(), sep.part2, sep.vertices2()),
        (sep.part2, sep.vertices2(), sep.part1, sep.vertices1()),
    )
    for own, own_vertices, other, other_vertices in sides:
        realizing = max_xy_path(graph.edge_subgraph(other, other_vertices), x, y, budget=budget)
        plus = graph.edge_subgraph(own, own_vertices)
        if realizing is not None:
            plus = plus.add_edges([Edge(virtual_id, x, y, realizing.weight)])
        logger.debug('Подъём через разрез {%s, %s}: сторона из %s вершин', x, y, plus.order)
        found = _detect(plus, thresholds, budget)
        if found is not None:
            return _splice(graph, found, virtual_id, realizing)
    return None


def _detect_block(piece, thresholds, budget):
    reduction = suppress_degree_two(piece)
    reduced = reduction.graph
    sep = _splitting_separation(reduced)
    if sep is None:
        cert = _kernel(reduced, thresholds, budget)
    else:
        cert = _lift(reduced, sep, thresholds, budget)
    return None if cert is None else _expand(reduction, cert)


def _detect(graph, thresholds, budget):
    if graph.total_weight(graph.edge_ids) < sum(thresholds):
        return None
    for block in two_connected_blocks(graph):
        piece = graph.induced(block)
        if piece.size < 3:
            continue
        cert = _detect_block(piece, thresholds, budget)
        if cert is not None:
            return cert
    return None


def _checked(graph, cert):
    if cert is not None and not verify_theta(graph, cert):
        raise AssertionError('Найденный сертификат θ не прошёл проверку')
    return cert


def contains_theta(graph, a, b, c, budget=None):
    """
    Сертификат θ_{a,b,c} в (G, w) или None.

    None означает полный перебор без находки; при исчерпании бюджета
    поднимается BudgetExhausted.
    """
    thresholds = normalize_thresholds(a, b, c)
    cert = _checked(graph, _detect(graph, thresholds, ensure_budget(budget)))
    logger.debug('θ%s: %s', thresholds, 'найдена' if cert else 'нет')
    return cert


def theta_at(graph, u, v, a, b, c, budget=None):
    """Как contains_theta, но с заданными ветвлениями u и v"""
    if u == v:
        raise ValidationError('Ветвления должны различаться', code='same_vertex')
    if u not in graph or v not in graph:
        raise ValidationError('Нет такой вершины', code='bad_vertex')
    thresholds = normalize_thresholds(a, b, c)
    block = next((blk for blk in two_connected_blocks(graph) if u in blk and v in blk), None)
    if block is None:
        return None
    reduction = suppress_degree_two(graph.induced(block), keep=(u, v))
    cert = _pair_search(reduction.graph, u, v, thresholds, ensure_budget(budget))
    return _checked(graph, None if cert is None else _expand(reduction, cert))


def lift_theta(graph, sep, a, b, c, budget=None):
    """θ_{a,b,c} через 2-разделение sep: поиск в G1+ и G2+ и подъём обратно в G"""
    if sep.order != 2 or not sep.is_valid(graph):
        raise ValidationError('Нужно 2-разделение графа', code='not_2separation')
    thresholds = normalize_thresholds(a, b, c)
    return _checked(graph, _lift(graph, sep, thresholds, ensure_budget(budget)))
