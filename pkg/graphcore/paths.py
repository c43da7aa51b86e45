"""
Точные поиски путей: метод ветвей и границ для самого длинного и самого
тяжёлого пути, пути между фиксированными концами, перечисление путей,
подавление вершин степени 2.
"""
import logging
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from .budget import ensure_budget
from .graph import CycleWitness, Edge, PathWitness, WeightedMultigraph

logger = logging.getLogger(__name__)


class PathSearch:
    """
    Поиск простого пути максимальной ценности.

    Ценность ребра - вес (objective='weight') или 1 (objective='edges').
    Из каждого семейства параллельных рёбер используется самое ценное,
    при равенстве - с наименьшим номером.
    """

    def __init__(self, graph, objective='weight', forbidden_edges=(), budget=None):
        self.graph = graph
        self.budget = ensure_budget(budget)
        forbidden = set(forbidden_edges)
        self.adj = {v: {} for v in graph.vertices}
        for e in graph.edges:
            if e.id in forbidden:
                continue
            value = e.weight if objective == 'weight' else 1
            current = self.adj[e.u].get(e.v)
            if current is None or (value, -e.id) > (current[0], -current[1]):
                self.adj[e.u][e.v] = (value, e.id)
                self.adj[e.v][e.u] = (value, e.id)
        self.best_in = {
            v: max((value for value, _ in nbrs.values()), default=0)
            for v, nbrs in self.adj.items()
        }

    def best(self, sources, targets=None, interior=None):
        """
        Лучший путь из sources.

        Если targets не задано, путь кончается где угодно (допустим путь из
        одной вершины). Иначе путь идёт в другую вершину из targets и
        заканчивается на первой же такой вершине. interior - допустимые
        внутренние вершины (None - все).
        """
        self._targets = None if targets is None else frozenset(targets)
        self._interior = None if interior is None else frozenset(interior)
        self._best_value = -1
        self._best_path = None
        for s in sorted(set(sources)):
            if s not in self.adj:
                continue
            self._start = s
            self._dfs(s, {s}, [s], [], 0)
        if self._best_path is None:
            return None
        vertices, edges = self._best_path
        return PathWitness(tuple(vertices), tuple(edges), self.graph.total_weight(edges))

    def _passable(self, v):
        return self._interior is None or v in self._interior

    def _record(self, value, vertices, edges):
        if value > self._best_value:
            self._best_value = value
            self._best_path = (list(vertices), list(edges))

    def _bound(self, v, visited):
        seen = {v}
        stack = [v]
        total = 0
        target_seen = False
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y in seen or y in visited:
                    continue
                if self._targets is not None and y in self._targets:
                    seen.add(y)
                    total += self.best_in[y]
                    target_seen = True
                    continue
                if not self._passable(y):
                    continue
                seen.add(y)
                total += self.best_in[y]
                stack.append(y)
        if self._targets is not None and not target_seen:
            return None
        return total

    def _dfs(self, v, visited, vertices, edges, value):
        self.budget.tick()
        if self._targets is None:
            self._record(value, vertices, edges)
        elif v in self._targets and v != self._start:
            self._record(value, vertices, edges)
            return
        bound = self._bound(v, visited)
        if bound is None or value + bound <= self._best_value:
            return
        for u in sorted(self.adj[v]):
            if u in visited:
                continue
            is_target = self._targets is not None and u in self._targets
            if not is_target and not self._passable(u):
                continue
            step, eid = self.adj[v][u]
            visited.add(u)
            vertices.append(u)
            edges.append(eid)
            self._dfs(u, visited, vertices, edges, value + step)
            edges.pop()
            vertices.pop()
            visited.discard(u)


@dataclass(frozen=True)
class LongestPath:
    weight: int
    edges: int
    weight_path: PathWitness
    edges_path: PathWitness

    def to_dict(self):
        return {
            'weight': self.weight,
            'edges': self.edges,
            'weight_path': self.weight_path.to_dict(),
            'edges_path': self.edges_path.to_dict(),
        }


def longest_path(graph, budget=None):
    """
    Точные l(G) по числу рёбер и по весу со свидетелями.

    При исчерпании бюджета поднимается BudgetExhausted. У графа без рёбер
    ответ - путь из одной вершины.
    """
    if not graph.order:
        raise ValidationError('Граф без вершин', code='empty_graph')
    budget = ensure_budget(budget)
    by_weight = PathSearch(graph, 'weight', budget=budget).best(graph.vertices)
    by_edges = PathSearch(graph, 'edges', budget=budget).best(graph.vertices)
    return LongestPath(by_weight.weight, by_edges.length, by_weight, by_edges)


def max_weight_path(graph, sources, targets=None, interior=None, forbidden_edges=(),
                    objective='weight', budget=None):
    return PathSearch(graph, objective, forbidden_edges, budget).best(sources, targets, interior)


def max_xy_path(graph, x, y, interior=None, budget=None):
    """Самый тяжёлый x-y путь или None"""
    return max_weight_path(graph, [x], [y], interior=interior, budget=budget)


def path_from_vertices(graph, vertices):
    """Путь по последовательности вершин; из параллельных рёбер берётся самое тяжёлое"""
    edge_ids = []
    for a, b in zip(vertices, vertices[1:]):
        family = graph.edges_between(a, b)
        if not family:
            raise ValueError(f'Вершины {a} и {b} не смежны')
        edge_ids.append(min(family, key=lambda eid: (-graph.weight(eid), eid)))
    return PathWitness.from_edges(graph, vertices[0], edge_ids)


def iter_paths(graph, x, y, allowed=None, forbidden_edges=(), budget=None, all_parallels=False):
    """
    Перечисление простых x-y путей в порядке обхода в глубину.

    allowed ограничивает внутренние вершины. Без all_parallels из каждого
    семейства параллельных рёбер берётся самое тяжёлое.
    """
    budget = ensure_budget(budget)
    forbidden = set(forbidden_edges)
    adj = {v: {} for v in graph.vertices}
    for e in graph.edges:
        if e.id in forbidden:
            continue
        for a, b in ((e.u, e.v), (e.v, e.u)):
            adj[a].setdefault(b, []).append(e)
    for a in adj:
        for b in adj[a]:
            adj[a][b].sort(key=lambda item: (-item.weight, item.id))
            if not all_parallels:
                adj[a][b] = adj[a][b][:1]
    allowed = None if allowed is None else set(allowed)

    def walk(v, visited, vertices, edges):
        budget.tick()
        if v == y:
            yield PathWitness(tuple(vertices), tuple(edges), graph.total_weight(edges))
            return
        for u in sorted(adj[v]):
            if u in visited:
                continue
            if u != y and allowed is not None and u not in allowed:
                continue
            for e in adj[v][u]:
                visited.add(u)
                vertices.append(u)
                edges.append(e.id)
                yield from walk(u, visited, vertices, edges)
                edges.pop()
                vertices.pop()
                visited.discard(u)

    if x == y:
        return
    yield from walk(x, {x}, [x], [])


def iter_cycles(graph, budget=None):
    """
    Все циклы длины >= 3 графа si(G) по одному разу: начало в наименьшей
    вершине, второй вершиной меньше последней.
    """
    budget = ensure_budget(budget)
    adj = {v: sorted(graph.neighbors(v)) for v in graph.vertices}
    best_edge = {}
    for e in graph.edges:
        key = e.ends
        if key not in best_edge or (e.weight, -e.id) > (best_edge[key].weight, -best_edge[key].id):
            best_edge[key] = e

    def edge_id(a, b):
        return best_edge[frozenset((a, b))].id

    for start in graph.vertices:
        stack = [(start, [start])]
        while stack:
            v, path = stack.pop()
            budget.tick()
            for u in reversed(adj[v]):
                if u == start and len(path) >= 3 and path[1] < path[-1]:
                    ids = [edge_id(path[i], path[i + 1]) for i in range(len(path) - 1)]
                    ids.append(edge_id(path[-1], start))
                    yield CycleWitness(tuple(path), tuple(ids), graph.total_weight(ids))
                elif u > start and u not in path:
                    stack.append((u, path + [u]))


@dataclass(frozen=True)
class SeriesReduction:
    """Граф после подавления вершин степени 2 и цепочки исходных рёбер"""
    original: WeightedMultigraph
    graph: WeightedMultigraph
    chains: dict

    def expand_edges(self, start, edge_ids):
        """Раскрыть последовательность рёбер редуцированного графа, идущую из start"""
        result = []
        v = start
        for eid in edge_ids:
            e = self.graph.edge(eid)
            chain = self.chains[eid]
            result.extend(chain if v == e.u else reversed(chain))
            v = e.other(v)
        return result

    def expand_path(self, path):
        return PathWitness.from_edges(self.original, path.start, self.expand_edges(path.start, path.edges))


def suppress_degree_two(graph, keep=()):
    """
    Подавление вершин степени 2 (кроме keep): два ребра a-v-b заменяются
    ребром a-b с суммарным весом. Вершина, оба ребра которой ведут
    к одному соседу, не подавляется.
    """
    keep = set(keep)
    edges = {e.id: e for e in graph.edges}
    chains = {e.id: (e.id,) for e in graph.edges}
    incident = {v: set(graph.incident(v)) for v in graph.vertices}
    next_id = graph.max_edge_id() + 1
    changed = True
    while changed:
        changed = False
        for v in sorted(incident):
            if v in keep or len(incident[v]) != 2:
                continue
            e1, e2 = (edges[eid] for eid in sorted(incident[v]))
            a, b = e1.other(v), e2.other(v)
            if a == b:
                continue
            chain1 = chains[e1.id] if e1.u == a else tuple(reversed(chains[e1.id]))
            chain2 = chains[e2.id] if e2.u == v else tuple(reversed(chains[e2.id]))
            new = Edge(next_id, a, b, e1.weight + e2.weight)
            next_id += 1
            for old in (e1, e2):
                del edges[old.id]
                del chains[old.id]
                incident[old.u].discard(old.id)
                incident[old.v].discard(old.id)
            del incident[v]
            edges[new.id] = new
            chains[new.id] = chain1 + chain2
            incident[a].add(new.id)
            incident[b].add(new.id)
            changed = True
    reduced = WeightedMultigraph(incident.keys(), edges.values())
    return SeriesReduction(graph, reduced, chains)
