"""
Пересечения и триподы относительно цикла C.

C-путь - путь длины >= 1, концы которого лежат на C, а внутренние вершины
и рёбра - вне C. Крест - два непересекающихся C-пути, концы которых
чередуются по циклу. Трипод - три независимых u-v пути вне C и три
непересекающиеся ноги от них до C.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import components_without, separation_from_sides
from graphcore.errors import Falsified
from graphcore.graph import CycleWitness, PathWitness
from graphcore.paths import iter_paths, path_from_vertices

from .circlets import Circlet, is_omega_cycle, oriented, segments

logger = logging.getLogger(__name__)

FORMS = ('plain', 'segments', 'edges')


def _between(cycle, a, b, x):
    """x строго внутри дуги от a к b по направлению обхода"""
    n = len(cycle.vertices)
    i, j, k = cycle.position(a), cycle.position(b), cycle.position(x)
    return 0 < (k - i) % n < (j - i) % n


def interleaved(cycle, first, second):
    """Концы двух путей различны и чередуются по циклу"""
    a, b = first
    x, y = second
    if len({a, b, x, y}) != 4:
        return False
    return _between(cycle, a, b, x) != _between(cycle, a, b, y)


@dataclass(frozen=True)
class CrossCertificate:
    """
    Крест на цикле. form='segments' - каждый сегмент Ω-цикла содержит не
    больше двух концов; form='edges' - хотя бы три из четырёх дуг между
    концами содержат ребро Ω.
    """
    cycle: CycleWitness
    path1: PathWitness
    path2: PathWitness
    form: str = 'plain'
    circlet: Circlet = None

    @property
    def ends(self):
        found = {self.path1.start, self.path1.end, self.path2.start, self.path2.end}
        return tuple(sorted(found, key=self.cycle.position))

    def arcs(self):
        """Рёбра четырёх дуг цикла между соседними концами"""
        n = len(self.cycle.vertices)
        positions = [self.cycle.position(v) for v in self.ends]
        result = []
        for k, a in enumerate(positions):
            b = positions[(k + 1) % 4]
            steps = (b - a) % n
            result.append(frozenset(self.cycle.edges[(a + s) % n] for s in range(steps)))
        return result

    def satisfies_form(self):
        if self.form == 'plain':
            return True
        ring = oriented(self.cycle, self.circlet)
        if ring is None:
            return False
        ends = set(self.ends)
        if self.form == 'segments':
            return all(len(segment & ends) <= 2 for segment in segments(ring, self.circlet))
        return sum(1 for arc in self.arcs() if arc & self.circlet.edges) >= 3

    def to_dict(self):
        data = {
            'kind': 'cross',
            'form': self.form,
            'cycle': self.cycle.to_dict(),
            'path1': self.path1.to_dict(),
            'path2': self.path2.to_dict(),
            'ends': list(self.ends),
        }
        if self.circlet is not None:
            data['circlet'] = self.circlet.to_dict()
        return data

    @classmethod
    def from_dict(cls, data):
        circlet = Circlet.from_dict(data['circlet']) if data.get('circlet') else None
        return cls(
            CycleWitness.from_dict(data['cycle']),
            PathWitness.from_dict(data['path1']),
            PathWitness.from_dict(data['path2']),
            data.get('form', 'plain'),
            circlet,
        )


def is_c_path(graph, cycle, path):
    if not path.is_valid(graph) or path.length < 1:
        return False
    if not path.ends <= cycle.vertex_set or path.start == path.end:
        return False
    return not (path.interior & cycle.vertex_set) and not (set(path.edges) & cycle.edge_set)


def verify_cross(graph, certificate):
    """Независимая проверка креста и его формы"""
    if certificate.form not in FORMS or not certificate.cycle.is_valid(graph):
        return False
    if certificate.form != 'plain':
        if certificate.circlet is None or not is_omega_cycle(graph, certificate.circlet, certificate.cycle):
            return False
    first, second = certificate.path1, certificate.path2
    if not is_c_path(graph, certificate.cycle, first) or not is_c_path(graph, certificate.cycle, second):
        return False
    if first.vertex_set & second.vertex_set:
        return False
    if not interleaved(certificate.cycle, (first.start, first.end), (second.start, second.end)):
        return False
    return certificate.satisfies_form()


def c_paths(graph, cycle, budget=None):
    """Все C-пути (из параллельных рёбер - самое тяжёлое) по парам концов в порядке обхода"""
    budget = ensure_budget(budget)
    off = frozenset(graph.vertices) - cycle.vertex_set
    for a, b in combinations(cycle.vertices, 2):
        yield from iter_paths(graph, a, b, allowed=off, forbidden_edges=cycle.edges, budget=budget)


def cross_search(graph, cycle, circlet=None, form='plain', budget=None):
    """Первый крест нужной формы на цикле или None"""
    if form not in FORMS:
        raise ValidationError(f'Неизвестная форма креста {form}', code='bad_form')
    if form != 'plain' and circlet is None:
        raise ValidationError('Для формы креста нужен циклет', code='bad_circlet')
    budget = ensure_budget(budget)
    paths = list(c_paths(graph, cycle, budget))
    for i, first in enumerate(paths):
        for second in paths[i + 1:]:
            budget.tick()
            if first.vertex_set & second.vertex_set:
                continue
            if not interleaved(cycle, (first.start, first.end), (second.start, second.end)):
                continue
            certificate = CrossCertificate(cycle, first, second, form, circlet)
            if certificate.satisfies_form():
                return certificate
    return None


@dataclass(frozen=True)
class Tripod:
    u: int
    v: int
    paths: tuple
    legs: tuple

    @property
    def feet(self):
        return tuple(leg.end for leg in self.legs)

    @property
    def vertex_set(self):
        return frozenset().union(*(p.vertex_set for p in self.paths))

    def to_dict(self):
        return {
            'kind': 'tripod',
            'u': self.u,
            'v': self.v,
            'paths': [p.to_dict() for p in self.paths],
            'legs': [leg.to_dict() for leg in self.legs],
            'feet': list(self.feet),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            int(data['u']),
            int(data['v']),
            tuple(PathWitness.from_dict(p) for p in data['paths']),
            tuple(PathWitness.from_dict(leg) for leg in data['legs']),
        )


def verify_tripod(graph, cycle, tripod):
    on_cycle = cycle.vertex_set
    if tripod.u == tripod.v or {tripod.u, tripod.v} & on_cycle:
        return False
    if len(tripod.paths) != 3 or len(tripod.legs) != 3:
        return False
    for path in tripod.paths:
        if not path.is_valid(graph) or path.ends != {tripod.u, tripod.v} or not path.interior:
            return False
    if any(a.interior & b.interior for a, b in combinations(tripod.paths, 2)):
        return False
    for path, leg in zip(tripod.paths, tripod.legs):
        if not leg.is_valid(graph) or {tripod.u, tripod.v} & leg.vertex_set:
            return False
        if leg.start not in path.interior or leg.end not in on_cycle:
            return False
        if set(leg.vertices[:-1]) & on_cycle:
            return False
        touching = path.vertex_set & on_cycle
        if touching and (touching != {leg.start} or leg.length):
            return False
    return not any(a.vertex_set & b.vertex_set for a, b in combinations(tripod.legs, 2))


def _legs(graph, cycle, u, v, paths):
    """Три непересекающиеся ноги от путей к циклу или None"""
    on_cycle = cycle.vertex_set
    legs = [None] * 3
    fixed = set()
    for i, path in enumerate(paths):
        touching = path.vertex_set & on_cycle
        if touching:
            c = next(iter(touching))
            legs[i] = PathWitness.trivial(c)
            fixed.add(c)
    free = [i for i in range(3) if legs[i] is None]
    if not free:
        return tuple(legs)
    # ориентированный граф: в вершину ноги можно войти только из источника
    aux = graph.simple_nx().to_directed()
    aux.remove_nodes_from([u, v, *fixed])
    source, target = ('source',), ('target',)
    for i in free:
        aux.add_edge(source, ('leg', i))
        aux.add_edges_from((('leg', i), s) for s in paths[i].interior if s in aux)
    aux.add_edges_from((c, target) for c in on_cycle - fixed)
    if not nx.has_path(aux, source, target):
        return None
    raw = list(nx.node_disjoint_paths(aux, source, target))
    if len(raw) < len(free):
        return None
    for route in raw:
        i = route[1][1]
        inner = route[2:-1]
        end = next(k for k, x in enumerate(inner) if x in on_cycle)
        inner = inner[:end + 1]
        start = max(k for k, x in enumerate(inner) if x in paths[i].interior)
        legs[i] = path_from_vertices(graph, inner[start:])
    return tuple(legs)


def tripod_search(graph, cycle, budget=None):
    """Первый трипод относительно C или None"""
    budget = ensure_budget(budget)
    on_cycle = cycle.vertex_set
    outside = [x for x in graph.vertices if x not in on_cycle]
    for u, v in combinations(outside, 2):
        candidates = [
            p for p in iter_paths(graph, u, v, budget=budget)
            if p.interior and len(p.vertex_set & on_cycle) <= 1
        ]
        for triple in combinations(candidates, 3):
            budget.tick()
            if any(a.interior & b.interior for a, b in combinations(triple, 2)):
                continue
            legs = _legs(graph, cycle, u, v, triple)
            if legs is not None:
                logger.debug('Трипод с центрами %s, %s', u, v)
                return Tripod(u, v, triple, legs)
    return None


def cross_or_small_separation(graph, cycle, tripod, budget=None):
    """
    Крест на C или k-разделение (k <= 3), у которого C в первой части,
    а пути трипода - во второй.
    """
    if cycle.length < 4:
        raise ValidationError('Нужен цикл длины >= 4', code='short_cycle')
    if not cycle.is_valid(graph) or not verify_tripod(graph, cycle, tripod):
        raise ValidationError('Трипод не проходит проверку', code='bad_tripod')
    budget = ensure_budget(budget)
    cross = cross_search(graph, cycle, budget=budget)
    if cross is not None:
        return cross
    on_cycle = cycle.vertex_set
    everything = frozenset(graph.vertices)
    for k in range(4):
        for cut in combinations(graph.vertices, k):
            budget.tick()
            side2 = frozenset().union(*(c for c in components_without(graph, cut) if not c & on_cycle))
            if not side2 or not tripod.vertex_set - set(cut) <= side2:
                continue
            side1 = everything - side2 - set(cut)
            if side1:
                return separation_from_sides(graph, cut, side1, side2)
    raise Falsified(
        f'Нет ни креста, ни разделения порядка <= 3 для трипода {tripod.u}-{tripod.v}',
        code='neither_cross_nor_separation',
    )
