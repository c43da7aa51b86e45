"""
Тяжёлый цикл из тяжёлого пути в 2-связном графе.

Путь P веса больше (t - 2)^2 даёт цикл веса >= t, а цикл веса >= t даёт
для любой пары вершин u, v путь веса >= t/2.
"""
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import disjoint_paths, is_2connected
from graphcore.graph import CycleWitness, PathWitness, WeightedMultigraph
from graphcore.paths import longest_path, path_from_vertices
from graphclasses.bounds import BoundTable


def _close(forward, backward):
    """Цикл из двух внутренне непересекающихся x-y путей"""
    ring = forward.concat(backward.reversed())
    return CycleWitness(ring.vertices[:-1], ring.edges, ring.weight)


def cycle_through_pair(graph, x, y):
    """Самый тяжёлый из циклов, составленных из двух путей веера x -> y"""
    family = sorted(graph.edges_between(x, y), key=lambda eid: (-graph.weight(eid), eid))
    legs = [path_from_vertices(graph, leg) for leg in disjoint_paths(graph, [x], [y])]
    # кроме ребра x-y в si(G) могут быть параллельные ему рёбра
    for eid in family[1:]:
        legs.append(PathWitness((x, y), (eid,), graph.weight(eid)))
    if len(legs) < 2:
        return None
    legs.sort(key=lambda leg: (-leg.weight, leg.edges))
    return _close(legs[0], legs[1])


def half_weight_path(graph, cycle, u, v):
    """u-v путь через более тяжёлую дугу C между концами двух путей к C"""
    if u == v:
        raise ValidationError('Концы пути должны различаться', code='same_vertex')
    legs = disjoint_paths(graph, [u, v], cycle.vertices)
    if len(legs) < 2:
        raise ValidationError('Нет двух непересекающихся путей до цикла', code='not_2connected')
    leg_u = path_from_vertices(graph, next(leg for leg in legs if leg[0] == u))
    leg_v = path_from_vertices(graph, next(leg for leg in legs if leg[0] == v))
    a, b = leg_u.end, leg_v.end
    arcs = (cycle.forward(graph, a, b), cycle.forward(graph, b, a).reversed())
    arc = max(arcs, key=lambda item: item.weight)
    return leg_u.concat(arc).concat(leg_v.reversed())


@dataclass(frozen=True)
class HeavyCycle:
    graph: WeightedMultigraph
    cycle: CycleWitness
    source_path: PathWitness

    def path_between(self, u, v):
        return half_weight_path(self.graph, self.cycle, u, v)

    def to_dict(self):
        return {'cycle': self.cycle.to_dict(), 'source_path': self.source_path.to_dict()}


def heavy_cycle_and_paths(graph, t, path=None, budget=None):
    """
    Цикл веса >= t по пути веса > (t - 2)^2.

    Берётся цикл C' через концы пути; если он лёгкий, самый тяжёлый
    участок пути между соседними точками на C' вместе с большей дугой
    C' даёт нужный цикл.
    """
    if t < 2:
        raise ValidationError('Нужно t >= 2', code='bad_t')
    if not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    if path is None:
        path = longest_path(graph, ensure_budget(budget)).weight_path
    if not path.is_valid(graph):
        raise ValidationError('Путь не принадлежит графу', code='bad_path')
    if path.weight <= BoundTable.heavy_cycle_path(t):
        raise ValidationError(f'Вес пути должен превышать {BoundTable.heavy_cycle_path(t)}', code='light_path')
    base = cycle_through_pair(graph, path.start, path.end)
    if base.weight >= t:
        return HeavyCycle(graph, base, path)
    hits = [i for i, x in enumerate(path.vertices) if x in base.vertex_set]
    pieces = []
    for i, j in zip(hits, hits[1:]):
        piece = path.subpath(graph, i, j)
        if piece.length == 1 and piece.edges[0] in base.edge_set:
            continue
        pieces.append(piece)
    piece = max(pieces, key=lambda item: (item.weight, -item.vertices[0]), default=None)
    if piece is None:
        raise AssertionError(f'Путь веса {path.weight} целиком лежит на лёгком цикле')
    p, q = piece.start, piece.end
    arcs = (base.forward(graph, q, p), base.forward(graph, p, q).reversed())
    cycle = _close(piece, max(arcs, key=lambda item: item.weight).reversed())
    if cycle.weight < t:
        raise AssertionError(f'Цикл веса {cycle.weight} < {t} при пути веса {path.weight}')
    return HeavyCycle(graph, cycle, path)
