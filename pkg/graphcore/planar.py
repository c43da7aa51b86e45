"""
Плоские графы: система вращений, обход граней, вложение с заданным
граничным циклом внешней грани.

Вращение rotation[v] - порядок рёбер вокруг v по часовой стрелке.
Грань обходится так: придя в w по ребру e, берём ребро, предшествующее e
в rotation[w].
"""
import logging
from dataclasses import dataclass

import networkx as nx
from django.core.exceptions import ValidationError

from .connectivity import components_without
from .graph import CycleWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    darts: tuple

    @property
    def edges(self):
        return tuple(eid for eid, _ in self.darts)

    @property
    def vertices(self):
        return tuple(tail for _, tail in self.darts)

    @property
    def length(self):
        return len(self.darts)

    @property
    def edge_set(self):
        return frozenset(self.edges)

    def is_cycle(self):
        return len(set(self.vertices)) == len(self.darts) and len(self.edge_set) == len(self.darts)


def trace_faces(graph, rotation):
    used = set()
    faces = []
    for v in graph.vertices:
        for eid in rotation.get(v, ()):
            if (eid, v) in used:
                continue
            darts = []
            dart = (eid, v)
            while dart not in used:
                used.add(dart)
                darts.append(dart)
                e, tail = dart
                head = graph.edge(e).other(tail)
                ring = rotation[head]
                i = ring.index(e)
                dart = (ring[i - 1], head)
            faces.append(Face(tuple(darts)))
    return faces


class PlaneGraph:
    """
    Граф с системой вращений и выделенной внешней гранью.

    При создании проверяется формула Эйлера для каждой компоненты.
    """

    def __init__(self, graph, rotation, outer=None):
        self.graph = graph
        self.rotation = {v: tuple(rotation.get(v, ())) for v in graph.vertices}
        for v in graph.vertices:
            if sorted(self.rotation[v]) != sorted(graph.incident(v)):
                raise ValidationError(f'Вращение в вершине {v} не совпадает с инцидентными рёбрами', code='bad_rotation')
        self.faces = trace_faces(graph, self.rotation)
        with_edges = sum(1 for c in components_without(graph, ()) if len(c) > 1 or graph.degree(next(iter(c))))
        isolated = sum(1 for v in graph.vertices if graph.degree(v) == 0)
        if graph.order - graph.size + len(self.faces) != 2 * with_edges + isolated:
            raise ValidationError('Система вращений не задаёт плоское вложение', code='not_planar')
        if outer is None:
            outer = max(range(len(self.faces)), key=lambda i: (self.faces[i].length, -i)) if self.faces else None
        self.outer_index = outer

    def __repr__(self):
        return f'PlaneGraph({self.graph!r}, faces={len(self.faces)})'

    @property
    def outer_face(self):
        return self.faces[self.outer_index]

    @property
    def inner_faces(self):
        return [f for i, f in enumerate(self.faces) if i != self.outer_index]

    def face_cycle(self, face):
        """Цикл, ограничивающий грань, или None, если граница не цикл"""
        if not face.is_cycle():
            return None
        return CycleWitness(face.vertices, face.edges, self.graph.total_weight(face.edges))

    def outer_cycle(self):
        return self.face_cycle(self.outer_face)

    def face_with_edges(self, edge_set):
        edge_set = frozenset(edge_set)
        for i, face in enumerate(self.faces):
            if face.edge_set == edge_set and face.length == len(edge_set):
                return i
        return None

    def with_outer(self, index):
        return PlaneGraph(self.graph, self.rotation, index)

    def is_facial(self, edge_set):
        return self.face_with_edges(edge_set) is not None

    def mirrored(self):
        return PlaneGraph(self.graph, {v: r[::-1] for v, r in self.rotation.items()}, None)

    def to_dict(self):
        return {
            'rotation': {str(v): list(r) for v, r in self.rotation.items()},
            'outer_face': list(self.outer_face.edges) if self.faces else [],
            'outer_index': self.outer_index,
            'faces': [list(f.edges) for f in self.faces],
        }

    @classmethod
    def from_dict(cls, graph, data):
        rotation = {int(v): [int(eid) for eid in ring] for v, ring in data['rotation'].items()}
        return cls(graph, rotation, data.get('outer_index'))


@dataclass(frozen=True)
class KuratowskiWitness:
    kind: str
    edges: tuple
    branch_vertices: tuple

    def to_dict(self):
        return {'kind': self.kind, 'edges': list(self.edges), 'branch_vertices': list(self.branch_vertices)}


def _family_order(graph, v, u, excluded=frozenset()):
    family = sorted(eid for eid in graph.edges_between(v, u) if eid not in excluded)
    return family if v < u else family[::-1]


def _kuratowski(graph, counterexample):
    degrees = dict(counterexample.degree())
    branch = tuple(sorted(v for v, d in degrees.items() if d >= 3))
    kind = 'K5' if len(branch) == 5 and all(degrees[v] == 4 for v in branch) else 'K33'
    simple = graph.simple_nx()
    edges = tuple(sorted(simple[u][v]['eid'] for u, v in counterexample.edges()))
    return KuratowskiWitness(kind, edges, branch)


def planar_embed(graph):
    """Плоское вложение или свидетель K5 / K3,3"""
    simple = graph.simple_nx()
    planar, certificate = nx.check_planarity(simple, counterexample=True)
    if not planar:
        return _kuratowski(graph, certificate)
    rotation = {}
    for v in graph.vertices:
        ring = []
        if v in certificate and certificate.degree(v):
            for u in certificate.neighbors_cw_order(v):
                ring.extend(_family_order(graph, v, u))
        rotation[v] = ring
    return PlaneGraph(graph, rotation)


def embed_with_facial_cycle(graph, cycle):
    """
    Вложение, в котором cycle ограничивает внешнюю грань, или None.

    Апекс-тест: рёбра цикла подразбиваются, новая вершина соединяется со
    всеми вершинами цикла и точками подразбиения; нужное вложение есть
    тогда и только тогда, когда вспомогательный граф планарен.
    """
    if not cycle.is_valid(graph):
        raise ValidationError('C не является циклом графа', code='not_a_cycle')
    cycle_edges = cycle.edge_set
    apex = ('apex',)
    aux = nx.Graph()
    aux.add_nodes_from(graph.vertices)
    for e in graph.edges:
        if e.id in cycle_edges:
            mid = ('sub', e.id)
            aux.add_edge(e.u, mid)
            aux.add_edge(mid, e.v)
            aux.add_edge(mid, apex)
        else:
            aux.add_edge(e.u, e.v)
    for v in cycle.vertices:
        aux.add_edge(v, apex)
    planar, embedding = nx.check_planarity(aux)
    if not planar:
        return None

    full = {}
    for v in graph.vertices:
        ring = []
        if aux.degree(v):
            for n in embedding.neighbors_cw_order(v):
                if n == apex:
                    continue
                if isinstance(n, tuple):
                    ring.append(n[1])
                else:
                    ring.extend(_family_order(graph, v, n, cycle_edges))
        full[v] = ring

    # Блоки, висящие на одной вершине цикла, переносятся внутрь
    on_cycle = cycle.vertex_set
    lobe_vertices = set()
    lobe_edges_at = {}
    for a in cycle.vertices:
        for comp in components_without(graph, [a]):
            if comp & on_cycle:
                continue
            lobe_vertices |= comp
            lobe_edges_at.setdefault(a, set()).update(
                eid for eid in graph.incident(a) if graph.edge(eid).other(a) in comp
            )
    removed_edges = set().union(*lobe_edges_at.values()) if lobe_edges_at else set()
    for v in lobe_vertices:
        removed_edges.update(graph.incident(v))
    core = graph.remove_edges(removed_edges).remove_vertices(lobe_vertices)
    core_rotation = {v: [eid for eid in full[v] if eid not in removed_edges] for v in core.vertices}
    faces = trace_faces(core, core_rotation)
    target = next((f for f in faces if f.edge_set == cycle_edges and f.length == len(cycle_edges)), None)
    if target is None:
        logger.warning('Апекс-тест пройден, но граничный цикл не найден')
        return None
    rotation = {v: list(r) for v, r in full.items()}
    for eid, tail in target.darts:
        head = graph.edge(eid).other(tail)
        if head not in lobe_edges_at:
            continue
        lobe = [x for x in full[head] if x in lobe_edges_at[head]]
        ring = core_rotation[head]
        i = ring.index(eid)
        rotation[head] = ring[:i + 1] + lobe + ring[i + 1:]
    try:
        plane = PlaneGraph(graph, rotation)
    except ValidationError:
        logger.warning('Не удалось собрать вложение с граничным циклом')
        return None
    index = plane.face_with_edges(cycle_edges)
    if index is None:
        return None
    return plane.with_outer(index)
