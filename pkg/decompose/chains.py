"""
Цепные разложения G0, G1, ..., Gn графа G в ребре e и длина a(G, e).

Цепь - это возрастающая последовательность сторон 2-разделений,
содержащих e, с попарно различными разрезами, отличными от концов e.
Разрез между соседними сторонами цепи всегда общий для всех сторон,
лежащих между ними, поэтому достаточно различать соседние разрезы.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

from django.core.exceptions import ValidationError

from graphcore.budget import BudgetExhausted, ensure_budget
from graphcore.connectivity import components_without, is_2connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainDecomposition:
    edge: int
    parts: tuple
    pairs: tuple

    @property
    def length(self):
        return len(self.parts) - 1

    def to_dict(self):
        return {
            'kind': 'chain',
            'edge': self.edge,
            'length': self.length,
            'parts': [sorted(part) for part in self.parts],
            'pairs': [sorted(pair) for pair in self.pairs],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            int(data['edge']),
            tuple(frozenset(part) for part in data['parts']),
            tuple(frozenset(pair) for pair in data['pairs']),
        )


@dataclass(frozen=True)
class ChainResult:
    """a(G, e) и цепь этой длины; exact=False - нижняя оценка при исчерпании бюджета"""
    length: int
    chain: ChainDecomposition
    exact: bool

    def to_dict(self):
        return {'length': self.length, 'exact': self.exact, 'chain': self.chain.to_dict()}


def subsets(items):
    for mask in range(1 << len(items)):
        yield [item for i, item in enumerate(items) if mask >> i & 1]


def e_sides(graph, eid, budget, sides):
    """Стороны (множество рёбер, разрез) всех 2-разделений, содержащие e; дописываются в sides"""
    for cut in combinations(graph.vertices, 2):
        comps = components_without(graph, cut)
        if len(comps) < 2:
            continue
        family = list(graph.edges_between(*cut))
        for chosen in subsets(comps):
            if not chosen or len(chosen) == len(comps):
                continue
            inner = {x for v in set().union(*chosen) for x in graph.incident(v)}
            for extra in subsets(family):
                budget.tick()
                side = frozenset(inner | set(extra))
                if eid in side:
                    sides.append((side, frozenset(cut)))


def longest_chain(sides, ends):
    """Самая длинная цепь вложенных сторон с различными соседними разрезами"""
    sides = sorted((s for s in sides if s[1] != ends), key=lambda s: (len(s[0]), sorted(s[1]), sorted(s[0])))
    best = [1] * len(sides)
    previous = [None] * len(sides)
    for i, (side, cut) in enumerate(sides):
        for j in range(i):
            inner, inner_cut = sides[j]
            if inner < side and inner_cut != cut and best[j] + 1 > best[i]:
                best[i], previous[i] = best[j] + 1, j
    if not sides:
        return []
    i = max(range(len(sides)), key=lambda k: (best[k], -k))
    chain = []
    while i is not None:
        chain.append(sides[i])
        i = previous[i]
    return chain[::-1]


def chain_from_sides(graph, eid, chain):
    everything = frozenset(graph.edge_ids)
    nested = [side for side, _ in chain] + [everything]
    parts = [nested[0]] + [b - a for a, b in zip(nested, nested[1:])]
    pairs = [graph.edge(eid).ends] + [cut for _, cut in chain]
    return ChainDecomposition(eid, tuple(parts), tuple(pairs))


def chain_decompose(graph, eid, budget=None):
    """
    a(G, e) и цепное разложение этой длины.

    При исчерпании бюджета возвращается лучшая найденная цепь с exact=False.
    """
    if not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    if not graph.has_edge_id(eid):
        raise ValidationError(f'Нет ребра {eid}', code='bad_edge')
    budget = ensure_budget(budget)
    exact, sides = True, []
    try:
        e_sides(graph, eid, budget, sides)
    except BudgetExhausted:
        logger.warning('Перебор 2-разделений прерван, a(G, e) - нижняя оценка')
        exact = False
    chain = longest_chain(sides, graph.edge(eid).ends)
    decomposition = chain_from_sides(graph, eid, chain)
    return ChainResult(decomposition.length, decomposition, exact)


def _vertices_of(graph, edge_ids):
    return {v for eid in edge_ids for v in graph.edge(eid).ends}


def check_chain(graph, eid, chain):
    """Независимая проверка условий цепного разложения"""
    parts = [frozenset(part) for part in chain.parts]
    everything = set(graph.edge_ids)
    if not parts or sum(len(p) for p in parts) != len(everything) or set().union(*parts) != everything:
        return False
    if eid not in parts[0] or chain.pairs[0] != graph.edge(eid).ends:
        return False
    if len(chain.pairs) != len(parts) or len(set(chain.pairs)) != len(chain.pairs):
        return False
    vertices = set(graph.vertices)
    for i in range(1, len(parts)):
        head = set().union(*parts[:i])
        tail = set().union(*parts[i:])
        head_vertices, tail_vertices = _vertices_of(graph, head), _vertices_of(graph, tail)
        if head_vertices == vertices or tail_vertices == vertices:
            return False
        if head_vertices & tail_vertices != chain.pairs[i] or len(chain.pairs[i]) != 2:
            return False
    return True


def naive_chain_length(graph, eid):
    """a(G, e) по определению: перебор всех подмножеств рёбер"""
    others = [x for x in graph.edge_ids if x != eid]
    vertices = set(graph.vertices)
    ends = graph.edge(eid).ends
    separations = []
    for size in range(len(others)):
        for extra in combinations(others, size):
            head = frozenset((eid,) + extra)
            tail = set(graph.edge_ids) - head
            head_vertices, tail_vertices = _vertices_of(graph, head), _vertices_of(graph, tail)
            cut = frozenset(head_vertices & tail_vertices)
            if len(cut) == 2 and cut != ends and head_vertices != vertices and tail_vertices != vertices:
                separations.append((head, cut))
    memo = {}

    def longest_from(k):
        if k not in memo:
            head, cut = separations[k]
            memo[k] = 1 + max(
                (longest_from(j) for j, (other, other_cut) in enumerate(separations)
                 if head < other and other_cut != cut),
                default=0,
            )
        return memo[k]

    return max((longest_from(k) for k in range(len(separations))), default=0)
