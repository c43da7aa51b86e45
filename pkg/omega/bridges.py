"""
Устойчивые мосты подразбиения.

H - подразбиение графа J; ветви H - пути между вершинами J. Мост H
неустойчив, если все его ноги лежат на одной ветви. Нормализация
перекладывает ветви так, чтобы неустойчивых мостов не осталось: ветвь P
заменяется на x-y путь внутри P и P-локальных мостов, максимизирующий
вектор alpha = (размер объединения нелокальных мостов, размеры локальных
мостов по убыванию) в лексикографическом порядке.
"""
import logging
from dataclasses import dataclass, replace
from itertools import combinations

from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import bridges_of, is_simple
from graphcore.graph import PathWitness
from graphcore.paths import iter_paths

from .relative import relative_separation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subdivision:
    branch_vertices: tuple
    branches: tuple

    @property
    def edge_ids(self):
        return frozenset(eid for branch in self.branches for eid in branch.edges)

    @property
    def vertex_set(self):
        return frozenset(self.branch_vertices).union(*(b.vertex_set for b in self.branches))

    def host(self, graph, skip=None):
        """H как подграф G; skip - номер ветви, которую нужно исключить"""
        edges = {eid for i, b in enumerate(self.branches) if i != skip for eid in b.edges}
        vertices = set(self.branch_vertices)
        for i, branch in enumerate(self.branches):
            if i != skip:
                vertices |= branch.vertex_set
        return graph.edge_subgraph(edges, extra_vertices=vertices)

    def replaced(self, index, path):
        branches = list(self.branches)
        branches[index] = path
        return replace(self, branches=tuple(branches))

    def is_valid(self, graph):
        corners = set(self.branch_vertices)
        if len(corners) != len(self.branch_vertices):
            return False
        for branch in self.branches:
            if not branch.is_valid(graph) or branch.length < 1:
                return False
            if branch.start == branch.end or not branch.ends <= corners or branch.interior & corners:
                return False
        if any(a.interior & b.interior for a, b in combinations(self.branches, 2)):
            return False
        return len(self.edge_ids) == sum(b.length for b in self.branches)

    def to_dict(self):
        return {
            'kind': 'subdivision',
            'branch_vertices': list(self.branch_vertices),
            'branches': [b.to_dict() for b in self.branches],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data['branch_vertices']), tuple(PathWitness.from_dict(b) for b in data['branches']))


def unstable_bridges(graph, subdivision):
    """Пары (номер ветви, мост), где все ноги моста лежат на этой ветви"""
    found = []
    for bridge in bridges_of(graph, subdivision.host(graph)).bridges:
        for i, branch in enumerate(subdivision.branches):
            if bridge.feet <= branch.vertex_set:
                found.append((i, bridge))
                break
    return found


def alpha(graph, rest, path):
    """alpha для x-y пути path при остальной части rest"""
    host = graph.edge_subgraph(
        set(rest.edge_ids) | set(path.edges),
        extra_vertices=set(rest.vertices) | path.vertex_set,
    )
    local, outer = [], 0
    for bridge in bridges_of(graph, host).bridges:
        if bridge.feet <= path.vertex_set:
            local.append(bridge.size)
        else:
            outer += bridge.size
    return (outer, *sorted(local, reverse=True))


def best_reroute(graph, subdivision, index, budget=None):
    """(alpha, путь) с наибольшим alpha среди x-y путей в P и её локальных мостах"""
    branch = subdivision.branches[index]
    rest = subdivision.host(graph, skip=index)
    local_edges = set(branch.edges)
    for bridge in bridges_of(graph, subdivision.host(graph)).bridges:
        if bridge.feet <= branch.vertex_set:
            local_edges |= bridge.edges
    zone = graph.edge_subgraph(local_edges, extra_vertices=branch.vertex_set)
    allowed = set(zone.vertices) - set(rest.vertices)
    best = None
    for path in iter_paths(zone, branch.start, branch.end, allowed=allowed, budget=budget):
        value = alpha(graph, rest, path)
        if best is None or value > best[0]:
            best = (value, path)
    return best


@dataclass(frozen=True)
class RerouteStep:
    branch: int
    before: tuple
    after: tuple

    def to_dict(self):
        return {'branch': self.branch, 'before': list(self.before), 'after': list(self.after)}


@dataclass(frozen=True)
class BridgeNormalization:
    subdivision: Subdivision
    steps: tuple

    def to_dict(self):
        return {'subdivision': self.subdivision.to_dict(), 'steps': [s.to_dict() for s in self.steps]}


def shortcut_branches(graph, subdivision):
    """Ветви, концы которых смежны по свободному ребру, заменяются этим ребром"""
    used = set(subdivision.edge_ids)
    for i, branch in enumerate(subdivision.branches):
        if branch.length < 2:
            continue
        direct = [eid for eid in graph.edges_between(branch.start, branch.end) if eid not in used]
        if direct:
            used -= set(branch.edges)
            used.add(direct[0])
            subdivision = subdivision.replaced(i, PathWitness.from_edges(graph, branch.start, [direct[0]]))
    return subdivision


def normalize_bridges(graph, subdivision, budget=None):
    """
    Подразбиение с теми же вершинами ветвления, у которого все мосты устойчивы.

    Каждая перекладка строго увеличивает alpha ветви; иначе AssertionError.
    """
    if not is_simple(graph):
        raise ValidationError('Граф должен быть простым', code='not_simple')
    if len(subdivision.branch_vertices) < 3:
        raise ValidationError('Нужно не меньше трёх вершин ветвления', code='small_pattern')
    if not subdivision.is_valid(graph):
        raise ValidationError('H не является подразбиением в G', code='bad_subdivision')
    separation = relative_separation(graph, subdivision.branch_vertices, max_order=2)
    if separation is not None:
        raise ValidationError(
            f'Разделение по {sorted(separation.cut)} отделяет часть без вершин ветвления',
            code='small_separation',
        )
    budget = ensure_budget(budget)
    subdivision = shortcut_branches(graph, subdivision)
    steps = []
    while True:
        unstable = unstable_bridges(graph, subdivision)
        if not unstable:
            logger.debug('Мосты устойчивы после %s перекладок', len(steps))
            return BridgeNormalization(subdivision, tuple(steps))
        index = unstable[0][0]
        branch = subdivision.branches[index]
        before = alpha(graph, subdivision.host(graph, skip=index), branch)
        after, path = best_reroute(graph, subdivision, index, budget)
        assert after > before, f'alpha ветви {index} не растёт: {before} -> {after}'
        steps.append(RerouteStep(index, before, after))
        subdivision = subdivision.replaced(index, path)
