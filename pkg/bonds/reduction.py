"""
Сведение "три ребра в одной связке" к поиску θ_{t,t,t}.

Рёбра e, f, g лежат в одной связке G тогда и только тогда, когда граф,
в котором каждое из них подразбито на t рёбер, содержит θ_{t,t,t}.
Взвешенная форма: w(e) = w(f) = w(g) = t, остальные веса 1. Берём
t = |E(G)| + 1: путь веса не меньше t обязан пройти одно из трёх рёбер.
"""
import logging
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from graphcore.budget import BudgetExhausted, Unknown, ensure_budget
from graphcore.graph import Edge
from theta.search import contains_theta

from .cuts import check_triple, find_bond, verify_bond

logger = logging.getLogger(__name__)


def default_t(graph):
    return graph.size + 1


@dataclass(frozen=True)
class BondReduction:
    """Обе формы сведения и номера рёбер путей, заменивших e, f, g"""
    edges: tuple
    t: int
    subdivided: object
    weighted: object
    chains: dict

    def to_dict(self):
        return {
            'kind': 'bond_reduction',
            'edges': list(self.edges),
            't': self.t,
            'subdivided': self.subdivided.to_dict(),
            'weighted': self.weighted.to_dict(),
        }


def _subdivided(graph, edges, t):
    vertex = graph.max_vertex() + 1
    eid = graph.max_edge_id() + 1
    new_edges, new_vertices, chains = [], [], {}
    for old in edges:
        e = graph.edge(old)
        stops = [e.u] + list(range(vertex, vertex + t - 1)) + [e.v]
        new_vertices.extend(stops[1:-1])
        vertex += t - 1
        chain = []
        for a, b in zip(stops, stops[1:]):
            new_edges.append(Edge(eid, a, b, 1))
            chain.append(eid)
            eid += 1
        chains[old] = tuple(chain)
    plain = graph.unit().remove_edges(edges)
    return plain.add_edges(new_edges, extra_vertices=new_vertices), chains


def subdivide_for_theta(graph, e, f, g, t=None):
    """Подразбиение e, f, g на t единичных рёбер и взвешенная форма"""
    edges = check_triple(graph, e, f, g)
    t = default_t(graph) if t is None else t
    if t < 1:
        raise ValidationError('t должно быть положительным', code='bad_t')
    subdivided, chains = _subdivided(graph, edges, t)
    weighted = graph.unit().reweighted({eid: t for eid in edges})
    return BondReduction(edges, t, subdivided, weighted, chains)


@dataclass(frozen=True)
class BondReport:
    """Связка и ответы обеих форм сведения"""
    edges: tuple
    t: int
    bond: object
    subdivided_theta: object
    weighted_theta: object

    @property
    def agrees(self):
        found = self.bond is not None
        return found == (self.subdivided_theta is not None) == (self.weighted_theta is not None)

    def to_dict(self):
        return {
            'kind': 'bond3',
            'edges': list(self.edges),
            't': self.t,
            'bond': self.bond.to_dict() if self.bond is not None else None,
            'subdivided_theta': self.subdivided_theta is not None,
            'weighted_theta': self.weighted_theta is not None,
            'reduction_agrees': self.agrees,
        }


def bond_theta_equivalence(graph, e, f, g, t=None, budget=None, strict=True):
    """
    Сравнение перебора связок с обеими формами сведения.

    При strict расхождение поднимает AssertionError; при исчерпании
    бюджета возвращается Unknown.
    """
    reduction = subdivide_for_theta(graph, e, f, g, t)
    if reduction.t < graph.size:
        raise ValidationError(f'Нужно t >= |E| = {graph.size}', code='bad_t')
    budget = ensure_budget(budget)
    t = reduction.t
    try:
        bond = find_bond(graph, reduction.edges, budget)
        subdivided = contains_theta(reduction.subdivided, t, t, t, budget)
        weighted = contains_theta(reduction.weighted, t, t, t, budget)
    except BudgetExhausted as exc:
        return Unknown.from_exception(exc)
    if bond is not None and not verify_bond(graph, bond, reduction.edges):
        raise AssertionError('Найденная связка не прошла проверку')
    report = BondReport(reduction.edges, t, bond, subdivided, weighted)
    if not report.agrees:
        logger.error('Сведение разошлось с перебором: %s', report.to_dict())
        if strict:
            raise AssertionError(f'Связка и θ_{{{t},{t},{t}}} расходятся на рёбрах {reduction.edges}')
    return report
