"""
Точный поиск топологических и корневых миноров.

Топологический минор: образы вершин образца выбираются по очереди, после
каждой вершины прокладываются пути для рёбер к уже размещённым вершинам.
Корневой минор: перебор разметки вершин графа множествами ветвления.
"""
import logging
from dataclasses import dataclass
from itertools import product

import networkx as nx

from graphcore.budget import ensure_budget
from graphcore.connectivity import components_without, is_simple
from graphcore.graph import CycleWitness
from graphcore.paths import iter_cycles, iter_paths

from .patterns import PatternWitness

logger = logging.getLogger(__name__)


def _placement_order(pattern):
    """Сначала вершина наибольшей степени, дальше - соседи уже выбранных"""
    order = []
    left = set(pattern.vertices)
    while left:
        touching = [p for p in left if any(q in order for q in pattern.neighbors(p))]
        pool = touching or left
        p = min(pool, key=lambda x: (-pattern.degree(x), x))
        order.append(p)
        left.discard(p)
    return order


class TopologicalSearch:
    """Перебор с возвратом: размещение вершин образца и прокладка путей"""

    def __init__(self, graph, pattern, budget):
        self.graph = graph
        self.pattern = pattern
        self.budget = budget
        self.order = _placement_order(pattern)
        placed = set()
        self.steps = []
        for p in self.order:
            placed.add(p)
            self.steps.append([
                e.id for e in pattern.edges
                if p in e.ends and e.other(p) in placed
            ])
        self.multi = not is_simple(graph)
        self.images = {}
        self.paths = {}
        self.used_vertices = set()
        self.used_edges = set()

    def run(self):
        if self.pattern.order > self.graph.order or self.pattern.size > self.graph.size:
            return False
        return self._place(0)

    def _place(self, i):
        if i == len(self.order):
            return True
        p = self.order[i]
        need = self.pattern.degree(p)
        for v in self.graph.vertices:
            if v in self.used_vertices or self.graph.degree(v) < need:
                continue
            self.budget.tick()
            self.images[p] = v
            self.used_vertices.add(v)
            if self._route(i, 0):
                return True
            self.used_vertices.discard(v)
            del self.images[p]
        return False

    def _route(self, i, j):
        if j == len(self.steps[i]):
            return self._place(i + 1)
        eid = self.steps[i][j]
        e = self.pattern.edge(eid)
        a, b = self.images[e.u], self.images[e.v]
        allowed = set(self.graph.vertices) - self.used_vertices
        candidates = iter_paths(
            self.graph, a, b, allowed=allowed, forbidden_edges=self.used_edges,
            budget=self.budget, all_parallels=self.multi,
        )
        for path in candidates:
            self.paths[eid] = path
            self.used_vertices |= path.interior
            self.used_edges |= set(path.edges)
            if self._route(i, j + 1):
                return True
            self.used_vertices -= path.interior
            self.used_edges -= set(path.edges)
            del self.paths[eid]
        return False


def topological_minor(graph, pattern, name='custom', parameter=None, budget=None):
    """Подразбиение pattern в graph (PatternWitness) или None"""
    search = TopologicalSearch(graph, pattern, ensure_budget(budget))
    if not search.run():
        return None
    return PatternWitness(name, parameter, dict(search.images), dict(search.paths))


@dataclass(frozen=True)
class MinorWitness:
    """Множества ветвления: вершина образца -> связное множество вершин графа"""
    pattern: str
    branch_sets: dict

    def to_dict(self):
        return {
            'kind': 'minor',
            'pattern': self.pattern,
            'branch_sets': {str(p): sorted(s) for p, s in sorted(self.branch_sets.items())},
        }


def _links(graph, left, right):
    return sum(1 for e in graph.edges if (e.u in left and e.v in right) or (e.v in left and e.u in right))


def verify_minor(graph, pattern, witness):
    sets = witness.branch_sets
    if set(sets) != set(pattern.vertices):
        return False
    seen = set()
    for p, members in sets.items():
        if not members or seen & members or not set(members) <= set(graph.vertices):
            return False
        seen |= members
        if not nx.is_connected(graph.induced(members).simple_nx()):
            return False
    for e in pattern.edges:
        need = len(pattern.edges_between(e.u, e.v))
        if _links(graph, sets[e.u], sets[e.v]) < need:
            return False
    return True


def _label_search(graph, pattern, fixed, budget):
    labels = list(pattern.vertices)
    free = [v for v in graph.vertices if v not in fixed]
    assignment = dict(fixed)

    def leaf():
        sets = {p: set() for p in labels}
        for v, p in assignment.items():
            if p is not None:
                sets[p].add(v)
        witness = MinorWitness('', {p: frozenset(s) for p, s in sets.items()})
        return witness if verify_minor(graph, pattern, witness) else None

    def walk(i):
        budget.tick()
        filled = {p for p in assignment.values() if p is not None}
        if len(labels) - len(filled) > len(free) - i:
            return None
        if i == len(free):
            return leaf()
        for label in labels + [None]:
            assignment[free[i]] = label
            found = walk(i + 1)
            if found is not None:
                return found
        del assignment[free[i]]
        return None

    return walk(0)


def rooted_minor(graph, pattern, roots=None, edge_roots=(), name='custom', budget=None):
    """
    Минор pattern с корнями.

    roots - вершина образца -> вершина графа, лежащая в её множестве;
    edge_roots - пары (номер ребра графа, (p, q)): концы ребра лежат
    в множествах p и q (в любом порядке).
    """
    budget = ensure_budget(budget)
    roots = dict(roots or {})
    base = {v: p for p, v in roots.items()}
    edge_roots = list(edge_roots)
    for flips in product((False, True), repeat=len(edge_roots)):
        fixed = dict(base)
        consistent = True
        for (eid, (p, q)), flip in zip(edge_roots, flips):
            e = graph.edge(eid)
            a, b = (e.v, e.u) if flip else (e.u, e.v)
            for v, label in ((a, p), (b, q)):
                if fixed.setdefault(v, label) != label:
                    consistent = False
        if not consistent:
            continue
        found = _label_search(graph, pattern, fixed, budget)
        if found is not None:
            logger.debug('Найден корневой минор %s', name)
            return MinorWitness(name, found.branch_sets)
    return None


@dataclass(frozen=True)
class WheelMinor:
    """
    Минор колеса W_k: обод - цикл графа, центр - связное множество вне цикла,
    спицы - рёбра от центра к различным вершинам цикла.
    """
    cycle: CycleWitness
    hub: frozenset
    spokes: tuple

    @property
    def k(self):
        return len(self.spokes)

    def to_dict(self):
        return {
            'kind': 'wheel_minor',
            'cycle': self.cycle.to_dict(),
            'hub': sorted(self.hub),
            'spokes': list(self.spokes),
        }


def verify_wheel_minor(graph, minor, k):
    if not minor.cycle.is_valid(graph) or minor.hub & minor.cycle.vertex_set or not minor.hub:
        return False
    if not nx.is_connected(graph.induced(minor.hub).simple_nx()):
        return False
    feet = set()
    for eid in minor.spokes:
        e = graph.edge(eid)
        inside = [x for x in (e.u, e.v) if x in minor.hub]
        outside = [x for x in (e.u, e.v) if x in minor.cycle.vertex_set]
        if len(inside) != 1 or len(outside) != 1 or outside[0] in feet:
            return False
        feet.add(outside[0])
    return len(feet) >= k


def has_wheel_minor(graph, k, budget=None):
    """
    Минор W_k или None.

    W_k - минор G тогда и только тогда, когда есть цикл C и компонента
    G - V(C), смежная не менее чем с k вершинами C.
    """
    budget = ensure_budget(budget)
    for cycle in iter_cycles(graph, budget):
        if cycle.length < k:
            continue
        for hub in components_without(graph, cycle.vertex_set):
            spokes = {}
            for v in sorted(hub):
                for eid in sorted(graph.incident(v)):
                    foot = graph.edge(eid).other(v)
                    if foot in cycle.vertex_set:
                        spokes.setdefault(foot, eid)
            if len(spokes) >= k:
                return WheelMinor(cycle, hub, tuple(spokes[foot] for foot in sorted(spokes)))
    return None
