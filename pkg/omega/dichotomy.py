"""
Плоское вложение с граничным Ω-циклом или крест, и разложение вокруг
треугольника T с ребром e.
"""
import logging
from dataclasses import dataclass
from itertools import permutations

from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import is_3connected, three_cuts
from graphcore.errors import Falsified
from graphcore.graph import CycleWitness, Separation
from graphcore.planar import PlaneGraph, embed_with_facial_cycle
from decompose.stars import s3_decompose
from decompose.sums import SumRecipe
from unavoidable.minors import MinorWitness, rooted_minor
from unavoidable.patterns import ROOTED_EDGE, ROOTED_TRIANGLE, a1, a2

from .circlets import iter_omega_cycles, validate_circlet
from .crosses import CrossCertificate, cross_search
from .relative import relative_separation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OmegaOutcome:
    """
    kind='facial' - вложение, где Ω-цикл ограничивает грань;
    kind='cross' - Ω-цикл и крест нужной формы;
    kind='hypothesis' - условия не выполнены (reason и разделение-нарушитель).
    """
    kind: str
    cycle: CycleWitness = None
    plane: PlaneGraph = None
    cross: CrossCertificate = None
    reason: str = ''
    separation: Separation = None

    def to_dict(self):
        data = {'kind': 'omega', 'outcome': self.kind}
        if self.cycle is not None:
            data['cycle'] = self.cycle.to_dict()
        if self.plane is not None:
            data['plane'] = self.plane.to_dict()
        if self.cross is not None:
            data['cross'] = self.cross.to_dict()
        if self.reason:
            data['reason'] = self.reason
        if self.separation is not None:
            data['separation'] = self.separation.to_dict()
        return data


def omega_facial_or_cross(graph, circlet, budget=None, form='segments'):
    """
    Ω-цикл, ограничивающий грань плоского вложения, иначе Ω-цикл и крест,
    у которого каждый сегмент содержит не больше двух концов.

    Если нет ни того, ни другого при выполненных условиях - AssertionError.
    """
    validate_circlet(graph, circlet)
    budget = ensure_budget(budget)
    cycles = list(iter_omega_cycles(graph, circlet, budget))
    if not cycles:
        return OmegaOutcome('hypothesis', reason='no_omega_cycle')
    separation = relative_separation(graph, circlet.vertices)
    if separation is not None:
        return OmegaOutcome('hypothesis', reason='not_4connected', separation=separation)
    for cycle in cycles:
        plane = embed_with_facial_cycle(graph, cycle)
        if plane is not None:
            return OmegaOutcome('facial', cycle=cycle, plane=plane)
    for cycle in cycles:
        cross = cross_search(graph, cycle, circlet=circlet, form=form, budget=budget)
        if cross is not None:
            logger.debug('Крест на Ω-цикле длины %s', cycle.length)
            return OmegaOutcome('cross', cycle=cycle, cross=cross)
    raise Falsified(
        f'Для Ω = {list(circlet.vertices)} нет ни граничного Ω-цикла, ни креста',
        code='neither_facial_nor_cross',
    )


def omega_facial_or_cross_edges(graph, circlet, budget=None):
    """То же, но три из четырёх дуг между концами креста содержат рёбра Ω"""
    validate_circlet(graph, circlet)
    isolated = circlet.isolated(graph)
    if isolated:
        raise ValidationError(f'Изолированные вершины Ω: {list(isolated)}', code='isolated_vertex')
    if len(circlet.edges) < 3:
        raise ValidationError('В Ω должно быть не меньше трёх рёбер', code='few_edges')
    return omega_facial_or_cross(graph, circlet, budget, form='edges')


@dataclass(frozen=True)
class TriExt:
    """Корневой минор A1/A2 или рецепт S3 с планарным центром, где T - граница грани"""
    kind: str
    minor: MinorWitness = None
    recipe: SumRecipe = None
    plane: PlaneGraph = None

    def to_dict(self):
        if self.kind == 'minor':
            return {'kind': 'tri_ext', 'outcome': 'minor', 'minor': self.minor.to_dict()}
        return {
            'kind': 'tri_ext',
            'outcome': 'recipe',
            'recipe': self.recipe.to_dict(),
            'plane': self.plane.to_dict(),
        }


def _triangle_cycle(graph, triangle):
    a, b, c = triangle
    edges = [graph.edges_between(x, y)[0] for x, y in ((a, b), (b, c), (c, a))]
    return CycleWitness.from_edges(graph, a, edges)


def tri_ext(graph, triangle, eid, budget=None):
    if not is_3connected(graph):
        raise ValidationError('Граф должен быть 3-связным', code='not_3connected')
    triangle = tuple(triangle)
    if len(set(triangle)) != 3 or any(v not in graph for v in triangle):
        raise ValidationError(f'{triangle} - не треугольник', code='not_a_triangle')
    if any(not graph.edges_between(x, y) for x, y in ((triangle[0], triangle[1]), (triangle[1], triangle[2]), (triangle[0], triangle[2]))):
        raise ValidationError(f'{triangle} - не треугольник', code='not_a_triangle')
    if not graph.has_edge_id(eid) or len(graph.edge(eid).ends & set(triangle)) > 1:
        raise ValidationError(f'Ребро {eid} не подходит: в T не больше одного его конца', code='bad_edge')
    budget = ensure_budget(budget)
    for name, pattern in (('A1', a1()), ('A2', a2())):
        for order in permutations(triangle):
            roots = dict(zip(ROOTED_TRIANGLE, order))
            found = rooted_minor(graph, pattern, roots, [(eid, ROOTED_EDGE[name])], name, budget)
            if found is not None:
                return TriExt('minor', minor=found)
    assert frozenset(triangle) not in three_cuts(graph), f'{triangle} - 3-разрез, но минора A2 нет'
    recipe = s3_decompose(graph, triangle)
    plane = embed_with_facial_cycle(recipe.graph, _triangle_cycle(recipe.graph, triangle))
    assert plane is not None, f'Центр разложения не вкладывается с гранью {triangle}, миноров A1 и A2 нет'
    logger.debug('Разложение вокруг %s: %s слагаемых', triangle, recipe.k)
    return TriExt('recipe', recipe=recipe, plane=plane)
