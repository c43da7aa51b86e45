"""
Циклеты и Ω-циклы.

Циклет Ω - циклически упорядоченные различные вершины v1, ..., vn (n >= 4)
и множество рёбер вида v_i v_{i+1}. Ω-цикл содержит все вершины Ω в том же
циклическом порядке и все рёбра Ω. Сегмент - путь цикла от v_i до v_{i+1},
не проходящий через v_{i+2}.
"""
import logging
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.graph import CycleWitness, PathWitness
from graphcore.paths import iter_paths

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Circlet:
    vertices: tuple
    edges: frozenset = frozenset()

    @property
    def n(self):
        return len(self.vertices)

    def pairs(self):
        """Соседние пары (v_i, v_{i+1}) по циклу"""
        return [(self.vertices[i], self.vertices[(i + 1) % self.n]) for i in range(self.n)]

    def isolated(self, graph):
        """Вершины Ω без инцидентных рёбер Ω"""
        touched = {v for eid in self.edges for v in graph.edge(eid).ends}
        return tuple(v for v in self.vertices if v not in touched)

    def to_dict(self):
        return {'vertices': list(self.vertices), 'edges': sorted(self.edges)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(int(v) for v in data['vertices']), frozenset(int(e) for e in data.get('edges', ())))

    @classmethod
    def parse(cls, text):
        """Строка вида "v1,v2,...;e1,e2,..." (часть после ';' необязательна)"""
        head, _, tail = text.partition(';')
        try:
            vertices = tuple(int(x) for x in head.split(',') if x.strip())
            edges = frozenset(int(x) for x in tail.split(',') if x.strip())
        except ValueError:
            raise ValidationError(f'Не удалось разобрать циклет "{text}"', code='bad_circlet')
        return cls(vertices, edges)


def validate_circlet(graph, circlet):
    if circlet.n < 4 or len(set(circlet.vertices)) != circlet.n:
        raise ValidationError('Циклет - не меньше 4 различных вершин', code='bad_circlet')
    missing = [v for v in circlet.vertices if v not in graph]
    if missing:
        raise ValidationError(f'Нет вершин {missing}', code='bad_circlet')
    consecutive = {frozenset(pair) for pair in circlet.pairs()}
    for eid in circlet.edges:
        if not graph.has_edge_id(eid):
            raise ValidationError(f'Нет ребра {eid}', code='bad_circlet')
        if graph.edge(eid).ends not in consecutive:
            raise ValidationError(f'Ребро {eid} не соединяет соседние вершины циклета', code='bad_circlet')


def oriented(cycle, circlet):
    """
    Цикл, обходящий вершины Ω в порядке циклета, начиная с v1,
    или None, если порядок не совпадает ни в одном направлении.
    """
    if not set(circlet.vertices) <= cycle.vertex_set:
        return None
    start = cycle.position(circlet.vertices[0])
    vertices = cycle.vertices[start:] + cycle.vertices[:start]
    edges = cycle.edges[start:] + cycle.edges[:start]
    for candidate in (
        CycleWitness(vertices, edges, cycle.weight),
        CycleWitness((vertices[0],) + vertices[:0:-1], edges[::-1], cycle.weight),
    ):
        positions = [candidate.position(v) for v in circlet.vertices]
        if all(a < b for a, b in zip(positions, positions[1:])):
            return candidate
    return None


def is_omega_cycle(graph, circlet, cycle):
    if not cycle.is_valid(graph) or not circlet.edges <= cycle.edge_set:
        return False
    return oriented(cycle, circlet) is not None


def segments(cycle, circlet):
    """Множества вершин сегментов ориентированного Ω-цикла"""
    positions = [cycle.position(v) for v in circlet.vertices] + [len(cycle.vertices)]
    ring = cycle.vertices + cycle.vertices[:1]
    return [frozenset(ring[a:b + 1]) for a, b in zip(positions, positions[1:])]


def iter_omega_cycles(graph, circlet, budget=None):
    """
    Все Ω-циклы в лексикографическом порядке последовательностей сегментов.

    Сегмент, на котором лежит ребро Ω, - само это ребро; остальные сегменты
    перебираются как пути, не задевающие другие вершины Ω и уже занятые
    вершины. Из параллельных рёбер берётся самое тяжёлое.
    """
    validate_circlet(graph, circlet)
    budget = ensure_budget(budget)
    required = {}
    for eid in sorted(circlet.edges):
        required.setdefault(graph.edge(eid).ends, []).append(eid)
    if any(len(ids) > 1 for ids in required.values()):
        return
    order = circlet.vertices
    free = frozenset(graph.vertices) - set(order)

    def extend(i, used, vertices, edges):
        if i == len(order):
            yield CycleWitness(tuple(vertices), tuple(edges), graph.total_weight(edges))
            return
        a, b = order[i], order[(i + 1) % len(order)]
        fixed = required.get(frozenset((a, b)))
        if fixed:
            options = [PathWitness.from_edges(graph, a, fixed)]
        else:
            options = iter_paths(graph, a, b, allowed=free - used, budget=budget)
        for segment in options:
            yield from extend(
                i + 1,
                used | segment.interior,
                vertices + list(segment.vertices[:-1]),
                edges + list(segment.edges),
            )

    yield from extend(0, frozenset(), [], [])


def find_omega_cycle(graph, circlet, budget=None):
    """Первый Ω-цикл или None"""
    found = next(iter_omega_cycles(graph, circlet, budget), None)
    if found is None:
        logger.debug('Нет Ω-цикла для %s', list(circlet.vertices))
    return found
