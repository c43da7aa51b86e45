"""
Связки: минимальные непустые рёберные разрезы.

В связном графе разрез δ(S) минимален тогда и только тогда, когда
G[S] и G[V - S] связны, поэтому связка задаётся стороной S.
"""
import logging
from dataclasses import dataclass
from itertools import combinations

from django.core.exceptions import ValidationError

from graphcore.budget import BudgetExhausted, Unknown, ensure_budget
from graphcore.connectivity import is_connected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BondCertificate:
    """Сторона S и рёбра разреза δ(S)"""
    side: frozenset
    cut_edges: frozenset

    def to_dict(self):
        return {'kind': 'bond', 'side': sorted(self.side), 'cut_edges': sorted(self.cut_edges)}

    @classmethod
    def from_dict(cls, data):
        return cls(frozenset(int(v) for v in data['side']), frozenset(int(e) for e in data['cut_edges']))


def cut_of(graph, side):
    return frozenset(e.id for e in graph.edges if (e.u in side) != (e.v in side))


def verify_bond(graph, cert, edges=()):
    """Обе стороны непусты и связны, разрез совпадает с δ(S) и содержит edges"""
    side = frozenset(cert.side)
    rest = frozenset(graph.vertices) - side
    if not side or not rest or not side <= frozenset(graph.vertices):
        return False
    if cut_of(graph, side) != frozenset(cert.cut_edges):
        return False
    if not set(edges) <= set(cert.cut_edges):
        return False
    return is_connected(graph.induced(side)) and is_connected(graph.induced(rest))


def check_triple(graph, e, f, g):
    triple = (e, f, g)
    if len(set(triple)) != 3:
        raise ValidationError('Рёбра должны быть различны', code='bad_edges')
    missing = [eid for eid in triple if not graph.has_edge_id(eid)]
    if missing:
        raise ValidationError(f'Нет рёбер {missing}', code='bad_edges')
    if not is_connected(graph):
        raise ValidationError('Граф должен быть связным', code='not_connected')
    return triple


def find_bond(graph, edges, budget):
    """Перебор сторон S с наименьшей вершиной по возрастанию |S|; поднимает BudgetExhausted"""
    vertices = sorted(graph.vertices)
    root, others = vertices[0], vertices[1:]
    edges = frozenset(edges)
    for size in range(len(others)):
        for rest in combinations(others, size):
            budget.tick()
            side = frozenset((root,) + rest)
            cut = cut_of(graph, side)
            if not edges <= cut:
                continue
            cert = BondCertificate(side, cut)
            if verify_bond(graph, cert):
                return cert
    return None


def bond_through(graph, e, f, g, budget=None):
    """
    Связка, содержащая рёбра e, f, g, None или Unknown.

    Точный перебор разбиений вершин; найденная связка проверяется заново.
    """
    triple = check_triple(graph, e, f, g)
    try:
        cert = find_bond(graph, triple, ensure_budget(budget))
    except BudgetExhausted as exc:
        return Unknown.from_exception(exc)
    if cert is not None and not verify_bond(graph, cert, triple):
        raise AssertionError('Найденная связка не прошла проверку')
    logger.debug('Связка через %s: %s', triple, sorted(cert.side) if cert else 'нет')
    return cert
