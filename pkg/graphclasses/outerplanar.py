"""
Внешнепланарные и почти внешнепланарные графы.

Почти внешнепланарный простой граф имеет гамильтонов цикл C, в котором
каждая хорда пересекает не больше одной другой хорды, а у пересекающихся
хорд ab и cd либо a,c и b,d соседние на C, либо a,d и b,c. Ребро C
свободно, если не лежит в 4-цикле, натянутом на две пересекающиеся
хорды. Для мультиграфа всё считается на si(G), а свободны рёбра,
параллельные свободным рёбрам si(G).
"""
import logging
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from django.core.exceptions import ValidationError

from graphcore.budget import BudgetExhausted, Unknown, ensure_budget
from graphcore.connectivity import is_2connected
from graphcore.graph import CycleWitness
from graphcore.paths import iter_cycles
from graphcore.planar import embed_with_facial_cycle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OuterplanarObstruction:
    """Подразбиение K4 или K2,3: рёбра графа"""
    kind: str
    edges: tuple

    def to_dict(self):
        return {'kind': 'outerplanar_obstruction', 'minor': self.kind, 'edges': list(self.edges)}


def _ring(graph, order):
    if len(order) == 2:
        edges = graph.edges_between(*order)[:2]
    else:
        edges = [graph.edges_between(a, b)[0] for a, b in zip(order, order[1:] + order[:1])]
    return CycleWitness.from_edges(graph, order[0], edges)


def _crossing(position, first, second):
    a, b = sorted(position[v] for v in first)
    c, d = sorted(position[v] for v in second)
    if len({a, b, c, d}) != 4:
        return False
    return (a < c < b) != (a < d < b)


def is_outerplanar(graph):
    """
    Вложение со всеми вершинами на внешнем цикле или препятствие.

    Апекс-тест: G внешнепланарен тогда и только тогда, когда G плюс
    вершина, смежная со всеми, планарен.
    """
    if not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    apex = ('apex',)
    aux = graph.simple_nx().copy()
    aux.add_edges_from((apex, v) for v in graph.vertices)
    planar, certificate = nx.check_planarity(aux, counterexample=True)
    if not planar:
        degrees = dict(certificate.degree())
        branch = [v for v, d in degrees.items() if d >= 3]
        kind = 'K4' if len(branch) == 5 and all(degrees[v] == 4 for v in branch) else 'K23'
        edges = tuple(sorted(aux[u][v]['eid'] for u, v in certificate.edges() if apex not in (u, v)))
        return OuterplanarObstruction(kind, edges)
    order = list(certificate.neighbors_cw_order(apex))
    if len(order) > 2 and any(not graph.edges_between(a, b) for a, b in zip(order, order[1:] + order[:1])):
        order = list(next(c for c in iter_cycles(graph) if c.length == graph.order).vertices)
    plane = embed_with_facial_cycle(graph, _ring(graph, order))
    assert plane is not None, 'Апекс-тест пройден, но внешний гамильтонов цикл не вкладывается'
    return plane


@dataclass(frozen=True)
class NearlyOuterplanarFrame:
    """Гамильтонов цикл, пары пересекающихся хорд и свободные рёбра G"""
    cycle: CycleWitness
    crossings: tuple
    free_pairs: frozenset
    free_edges: tuple

    def to_dict(self):
        return {
            'kind': 'nearly_outerplanar',
            'cycle': self.cycle.to_dict(),
            'crossings': [[sorted(p), sorted(q)] for p, q in self.crossings],
            'free_edges': list(self.free_edges),
        }


def frame_for(graph, order):
    """Проверка гамильтонова порядка вершин order на si(G); кадр или None"""
    n = len(order)
    position = {v: i for i, v in enumerate(order)}
    if n < 2 or set(position) != set(graph.vertices):
        return None
    pairs = {e.ends for e in graph.edges}
    ring = {frozenset((order[i], order[(i + 1) % n])) for i in range(n)}
    if not ring <= pairs:
        return None

    def adjacent(x, y):
        return (position[x] - position[y]) % n in (1, n - 1)

    chords = sorted((p for p in pairs if p not in ring), key=sorted)
    crossings = [(p, q) for p, q in combinations(chords, 2) if _crossing(position, p, q)]
    counts = {}
    for p, q in crossings:
        counts[p] = counts.get(p, 0) + 1
        counts[q] = counts.get(q, 0) + 1
    if any(c > 1 for c in counts.values()):
        return None
    covered = set()
    for p, q in crossings:
        a, b = sorted(p)
        c, d = sorted(q)
        if not ((adjacent(a, c) and adjacent(b, d)) or (adjacent(a, d) and adjacent(b, c))):
            return None
        for first, second in (((b, c), (d, a)), ((b, d), (c, a))):
            sides = frozenset(first), frozenset(second)
            if all(side in ring for side in sides):
                covered.update(sides)
    free_pairs = frozenset(ring - covered)
    free_edges = tuple(e.id for e in graph.edges if e.ends in free_pairs)
    return NearlyOuterplanarFrame(_ring(graph, list(order)), tuple(crossings), free_pairs, free_edges)


def iter_frames(graph, budget=None):
    """Кадры по всем гамильтоновым циклам si(G)"""
    budget = ensure_budget(budget)
    for cycle in iter_cycles(graph, budget):
        if cycle.length != graph.order:
            continue
        frame = frame_for(graph, list(cycle.vertices))
        if frame is not None:
            yield frame


def nearly_outerplanar(graph, budget=None):
    """Первый кадр, None или Unknown при исчерпании бюджета"""
    if not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    if graph.order < 3:
        raise ValidationError('Нужно не меньше трёх вершин', code='too_small')
    try:
        frame = next(iter_frames(graph, budget), None)
    except BudgetExhausted as exc:
        return Unknown.from_exception(exc)
    if frame is None:
        logger.debug('Граф из %s вершин не почти внешнепланарен', graph.order)
    return frame
