"""
Взвешенный мультиграф без петель и связанные с ним значения-свидетели.

Все типы неизменяемы после создания. Номера рёбер сохраняются при взятии
подграфов, поэтому сертификаты всегда ссылаются на рёбра исходного графа.
"""
from dataclasses import dataclass
from itertools import chain

import networkx as nx
from django.core.exceptions import ValidationError


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    weight: int = 1

    def other(self, x):
        """Второй конец ребра"""
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f'Вершина {x} не инцидентна ребру {self.id}')

    @property
    def ends(self):
        return frozenset((self.u, self.v))

    def to_dict(self):
        return {'id': self.id, 'u': self.u, 'v': self.v, 'weight': self.weight}


class WeightedMultigraph:
    """
    Мультиграф с положительными целыми весами рёбер.

    Кратные рёбра допустимы, петли запрещены. Вершины - целые числа,
    у графов из файлов они плотные (0..n-1), у подграфов сохраняются
    исходные номера.
    """

    def __init__(self, vertices, edges):
        edges = list(edges)
        self._vertices = tuple(sorted(set(vertices) | set(chain.from_iterable((e.u, e.v) for e in edges))))
        self._edges = {}
        for e in sorted(edges, key=lambda item: item.id):
            if e.id in self._edges:
                raise ValidationError(f'Повторный номер ребра {e.id}', code='duplicate_edge')
            if e.u == e.v:
                raise ValidationError(f'Петля в вершине {e.u} (ребро {e.id})', code='loop')
            if not isinstance(e.weight, int) or e.weight < 1:
                raise ValidationError(f'Вес ребра {e.id} должен быть целым >= 1', code='bad_weight')
            self._edges[e.id] = e
        self._incident = {v: [] for v in self._vertices}
        for e in self._edges.values():
            self._incident[e.u].append(e.id)
            self._incident[e.v].append(e.id)
        self._incident = {v: tuple(ids) for v, ids in self._incident.items()}

    @classmethod
    def from_edges(cls, vertex_count, triples):
        """Граф на вершинах 0..n-1 по списку (u, v) или (u, v, w); номера рёбер по порядку"""
        edges = []
        for i, item in enumerate(triples):
            u, v = item[0], item[1]
            w = item[2] if len(item) > 2 else 1
            edges.append(Edge(i, u, v, w))
        for e in edges:
            if not (0 <= e.u < vertex_count and 0 <= e.v < vertex_count):
                raise ValidationError(f'Ребро {e.id} выходит за пределы 0..{vertex_count - 1}', code='bad_vertex')
        return cls(range(vertex_count), edges)

    @classmethod
    def from_nx(cls, graph, weight='weight'):
        """Граф из networkx: вершины перенумеровываются по порядку сортировки"""
        order = sorted(graph.nodes())
        index = {v: i for i, v in enumerate(order)}
        if graph.is_multigraph():
            raw = graph.edges(data=True, keys=False)
        else:
            raw = graph.edges(data=True)
        pairs = sorted(
            (min(index[u], index[v]), max(index[u], index[v]), int(data.get(weight, 1)))
            for u, v, data in raw
        )
        return cls.from_edges(len(order), pairs)

    # --- базовые свойства ---

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return tuple(self._edges.values())

    @property
    def edge_ids(self):
        return tuple(self._edges)

    @property
    def order(self):
        return len(self._vertices)

    @property
    def size(self):
        return len(self._edges)

    def __len__(self):
        return self.order

    def __contains__(self, vertex):
        return vertex in self._incident

    def __repr__(self):
        return f'WeightedMultigraph(|V|={self.order}, |E|={self.size})'

    def has_edge_id(self, eid):
        return eid in self._edges

    def edge(self, eid):
        return self._edges[eid]

    def weight(self, eid):
        return self._edges[eid].weight

    def total_weight(self, edge_ids):
        return sum(self._edges[eid].weight for eid in edge_ids)

    def incident(self, v):
        return self._incident[v]

    def degree(self, v):
        return len(self._incident[v])

    def neighbors(self, v):
        return sorted({self._edges[eid].other(v) for eid in self._incident[v]})

    def edges_between(self, u, v):
        return tuple(eid for eid in self._incident[u] if self._edges[eid].other(u) == v)

    def max_vertex(self):
        return max(self._vertices, default=-1)

    def max_edge_id(self):
        return max(self._edges, default=-1)

    # --- производные графы ---

    def edge_subgraph(self, edge_ids, extra_vertices=()):
        """Подграф на заданных рёбрах (и дополнительных вершинах) с исходными номерами"""
        edge_ids = set(edge_ids)
        missing = edge_ids - set(self._edges)
        if missing:
            raise ValidationError(f'Нет рёбер {sorted(missing)}', code='not_subgraph')
        extra = set(extra_vertices)
        if not extra <= set(self._vertices):
            raise ValidationError(f'Нет вершин {sorted(extra - set(self._vertices))}', code='not_subgraph')
        return WeightedMultigraph(extra, (self._edges[eid] for eid in edge_ids))

    def induced(self, vertex_set):
        vertex_set = set(vertex_set)
        return WeightedMultigraph(
            vertex_set,
            (e for e in self._edges.values() if e.u in vertex_set and e.v in vertex_set),
        )

    def remove_vertices(self, removed):
        removed = set(removed)
        return self.induced(v for v in self._vertices if v not in removed)

    def remove_edges(self, edge_ids):
        edge_ids = set(edge_ids)
        return WeightedMultigraph(self._vertices, (e for e in self._edges.values() if e.id not in edge_ids))

    def add_edges(self, new_edges, extra_vertices=()):
        return WeightedMultigraph(set(self._vertices) | set(extra_vertices), chain(self._edges.values(), new_edges))

    def reweighted(self, weights):
        """Копия с новыми весами; weights - словарь номер ребра -> вес"""
        return WeightedMultigraph(
            self._vertices,
            (Edge(e.id, e.u, e.v, weights.get(e.id, e.weight)) for e in self._edges.values()),
        )

    def unit(self):
        return self.reweighted({eid: 1 for eid in self._edges})

    def is_subgraph_of(self, other):
        if not set(self._vertices) <= set(other.vertices):
            return False
        for e in self._edges.values():
            if not other.has_edge_id(e.id) or other.edge(e.id).ends != e.ends:
                return False
        return True

    # --- networkx ---

    def to_nx(self):
        """nx.MultiGraph: ключ ребра - его номер, атрибут weight"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self._vertices)
        for e in self._edges.values():
            graph.add_edge(e.u, e.v, key=e.id, weight=e.weight, eid=e.id)
        return graph

    def simple_nx(self):
        """Простой граф si(G) в networkx; у ребра хранится представитель семейства"""
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        for rep, family in parallel_families(self).items():
            e = self._edges[rep]
            graph.add_edge(e.u, e.v, eid=rep, weight=e.weight, family=family)
        return graph

    def to_dict(self):
        return {
            'vertices': list(self._vertices),
            'edges': [e.to_dict() for e in self._edges.values()],
        }

    @classmethod
    def from_dict(cls, data):
        edges = [Edge(int(e['id']), int(e['u']), int(e['v']), int(e.get('weight', 1))) for e in data['edges']]
        return cls((int(v) for v in data.get('vertices', ())), edges)

    def same_as(self, other):
        """Совпадение вершин и рёбер вместе с номерами и весами"""
        return self._vertices == other.vertices and all(
            other.has_edge_id(e.id) and other.edge(e.id).ends == e.ends and other.weight(e.id) == e.weight
            for e in self._edges.values()
        ) and self.size == other.size


def parallel_families(graph):
    """
    Семейства параллельных рёбер.

    Возвращает словарь представитель -> кортеж номеров семейства;
    представитель имеет наибольший вес (при равенстве - наименьший номер).
    """
    groups = {}
    for e in graph.edges:
        groups.setdefault(e.ends, []).append(e)
    families = {}
    for members in groups.values():
        rep = min(members, key=lambda item: (-item.weight, item.id))
        families[rep.id] = tuple(sorted(item.id for item in members))
    return dict(sorted(families.items()))


@dataclass(frozen=True)
class Simplification:
    graph: WeightedMultigraph
    families: dict

    def family_of(self, eid):
        for rep, family in self.families.items():
            if eid in family:
                return rep, family
        raise KeyError(eid)


def simplify(graph):
    """si(G): по одному ребру максимального веса из каждого семейства параллельных рёбер"""
    families = parallel_families(graph)
    simple = WeightedMultigraph(graph.vertices, (graph.edge(rep) for rep in families))
    return Simplification(simple, families)


@dataclass(frozen=True)
class PathWitness:
    """Простой путь: последовательность вершин и рёбер, суммарный вес"""
    vertices: tuple
    edges: tuple
    weight: int

    @classmethod
    def from_edges(cls, graph, start, edge_ids):
        vertices = [start]
        for eid in edge_ids:
            vertices.append(graph.edge(eid).other(vertices[-1]))
        return cls(tuple(vertices), tuple(edge_ids), graph.total_weight(edge_ids))

    @classmethod
    def trivial(cls, vertex):
        return cls((vertex,), (), 0)

    @property
    def length(self):
        return len(self.edges)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def ends(self):
        return frozenset((self.start, self.end))

    @property
    def interior(self):
        return frozenset(self.vertices[1:-1])

    @property
    def vertex_set(self):
        return frozenset(self.vertices)

    def reversed(self):
        return PathWitness(self.vertices[::-1], self.edges[::-1], self.weight)

    def concat(self, other):
        """Склейка путей по общему концу self.end == other.start"""
        if self.end != other.start:
            raise ValueError('Пути не стыкуются')
        return PathWitness(self.vertices + other.vertices[1:], self.edges + other.edges, self.weight + other.weight)

    def subpath(self, graph, i, j):
        """Участок между позициями i <= j"""
        return PathWitness.from_edges(graph, self.vertices[i], self.edges[i:j])

    def is_valid(self, graph):
        if len(self.vertices) != len(self.edges) + 1:
            return False
        if len(set(self.vertices)) != len(self.vertices):
            return False
        for i, eid in enumerate(self.edges):
            if not graph.has_edge_id(eid):
                return False
            if graph.edge(eid).ends != frozenset((self.vertices[i], self.vertices[i + 1])):
                return False
        return all(v in graph for v in self.vertices) and graph.total_weight(self.edges) == self.weight

    def to_dict(self):
        return {'vertices': list(self.vertices), 'edges': list(self.edges), 'weight': self.weight}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data['vertices']), tuple(data['edges']), int(data['weight']))


@dataclass(frozen=True)
class CycleWitness:
    """
    Цикл с заданным направлением обхода.

    edges[i] соединяет vertices[i] и vertices[(i + 1) % n]. Цикл длины 2
    (две параллельные дуги) допустим.
    """
    vertices: tuple
    edges: tuple
    weight: int

    @classmethod
    def from_edges(cls, graph, start, edge_ids):
        vertices = [start]
        for eid in edge_ids[:-1]:
            vertices.append(graph.edge(eid).other(vertices[-1]))
        return cls(tuple(vertices), tuple(edge_ids), graph.total_weight(edge_ids))

    @property
    def length(self):
        return len(self.edges)

    @property
    def vertex_set(self):
        return frozenset(self.vertices)

    @property
    def edge_set(self):
        return frozenset(self.edges)

    def position(self, v):
        return self.vertices.index(v)

    def forward(self, graph, u, v):
        """Путь C[u, v] по направлению обхода"""
        i, j = self.position(u), self.position(v)
        n = len(self.vertices)
        steps = (j - i) % n
        edge_ids = [self.edges[(i + k) % n] for k in range(steps)]
        return PathWitness.from_edges(graph, u, edge_ids)

    def is_valid(self, graph):
        n = len(self.vertices)
        if n < 2 or len(self.edges) != n or len(set(self.vertices)) != n or len(set(self.edges)) != n:
            return False
        for i, eid in enumerate(self.edges):
            if not graph.has_edge_id(eid):
                return False
            if graph.edge(eid).ends != frozenset((self.vertices[i], self.vertices[(i + 1) % n])):
                return False
        return graph.total_weight(self.edges) == self.weight

    def to_dict(self):
        return {'vertices': list(self.vertices), 'edges': list(self.edges), 'weight': self.weight}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data['vertices']), tuple(data['edges']), int(data['weight']))


@dataclass(frozen=True)
class Separation:
    """
    Разделение (G1, G2): рёберно непересекающиеся неостовные подграфы,
    покрывающие все рёбра. side1/side2 - собственные вершины частей,
    cut - общие вершины.
    """
    part1: frozenset
    part2: frozenset
    cut: frozenset
    side1: frozenset
    side2: frozenset

    @property
    def order(self):
        return len(self.cut)

    def vertices1(self):
        return self.side1 | self.cut

    def vertices2(self):
        return self.side2 | self.cut

    def swapped(self):
        return Separation(self.part2, self.part1, self.cut, self.side2, self.side1)

    def is_valid(self, graph):
        if self.part1 & self.part2 or (self.part1 | self.part2) != set(graph.edge_ids):
            return False
        if not self.side1 or not self.side2 or self.side1 & self.side2:
            return False
        if (self.side1 | self.side2 | self.cut) != set(graph.vertices):
            return False
        for eid in self.part1:
            if not graph.edge(eid).ends <= self.vertices1():
                return False
        for eid in self.part2:
            if not graph.edge(eid).ends <= self.vertices2():
                return False
        return True

    def to_dict(self):
        return {
            'part1': sorted(self.part1),
            'part2': sorted(self.part2),
            'cut': sorted(self.cut),
        }


@dataclass(frozen=True)
class Bridge:
    edges: frozenset
    feet: frozenset
    interior: frozenset
    trivial: bool

    @property
    def size(self):
        return len(self.edges)


@dataclass(frozen=True)
class BridgeDecomposition:
    host_vertices: frozenset
    host_edges: frozenset
    bridges: tuple

    def to_dict(self):
        return {
            'host_vertices': sorted(self.host_vertices),
            'host_edges': sorted(self.host_edges),
            'bridges': [
                {'edges': sorted(b.edges), 'feet': sorted(b.feet), 'trivial': b.trivial}
                for b in self.bridges
            ],
        }
