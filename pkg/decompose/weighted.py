"""
Разложения взвешенных графов: трихотомия 2-разделений и оценка длины
самого длинного пути 2-суммы через её слагаемые.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, count

from django.core.exceptions import ValidationError

from graphcore.budget import ensure_budget
from graphcore.connectivity import components_without, is_2connected, is_3connected
from graphcore.graph import Edge, Separation
from graphcore.paths import longest_path, max_xy_path

from .chains import subsets
from .stars import s2_decompose
from .sums import Gluing, SumRecipe, evaluate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trichotomy:
    """
    Случай a: обе стороны 2-разделения без xy-пути веса >= t; случай b: обе
    с таким путём; случай c: рецепт S2(G0; G1, ..., Gk), где у каждого Gi без
    суммирующего ребра нет пути веса >= t между его концами.
    """
    case: str
    separation: object = None
    path_weights: tuple = ()
    recipe: SumRecipe = None

    def to_dict(self):
        data = {'kind': 'trichotomy', 'case': self.case}
        if self.separation is not None:
            data['separation'] = self.separation.to_dict()
            data['path_weights'] = list(self.path_weights)
        if self.recipe is not None:
            data['recipe'] = self.recipe.to_dict()
        return data


def side_path_weight(graph, edge_ids, x, y, budget=None):
    """Вес самого тяжёлого x-y пути по рёбрам одной стороны (0, если пути нет)"""
    side = graph.edge_subgraph(edge_ids, extra_vertices=(x, y))
    path = max_xy_path(side, x, y, budget=budget)
    return 0 if path is None else path.weight


def light_summands(recipe, t, budget=None):
    """Пары (склейка, вес), где вес - самый тяжёлый путь слагаемого без суммирующего ребра"""
    result = []
    for gluing in recipe.children:
        part = evaluate(gluing.child)
        x, y = sorted(part.edge(gluing.child_glue[0]).ends)
        rest = part.remove_edges(gluing.child_glue)
        path = max_xy_path(rest, x, y, budget=budget)
        result.append((gluing, 0 if path is None else path.weight))
    return result


def two_separations(graph):
    """
    Все 2-разделения с точностью до перестановки частей: компонента
    с наименьшей вершиной в первой части, рёбра внутри разреза - в любой.
    """
    everything = frozenset(graph.edge_ids)
    vertices = frozenset(graph.vertices)
    for cut in combinations(graph.vertices, 2):
        comps = components_without(graph, cut)
        if len(comps) < 2:
            continue
        family = list(graph.edges_between(*cut))
        for chosen in subsets(comps[1:]):
            if len(chosen) == len(comps) - 1:
                continue
            side1 = comps[0].union(*chosen)
            inner = {eid for v in side1 for eid in graph.incident(v)}
            for extra in subsets(family):
                part1 = frozenset(inner | set(extra))
                yield Separation(part1, everything - part1, frozenset(cut), side1, vertices - side1 - set(cut))


def trichotomy_2sep(graph, t, weights=None, budget=None):
    """Один из трёх случаев для 2-связного взвешенного графа порядка >= 3"""
    if weights is not None:
        graph = graph.reweighted(weights)
    if graph.order < 3 or not is_2connected(graph):
        raise ValidationError('Нужен 2-связный граф порядка >= 3', code='not_2connected')
    budget = ensure_budget(budget)
    heavy = []
    for sep in two_separations(graph):
        x, y = sorted(sep.cut)
        first = side_path_weight(graph, sep.part1, x, y, budget)
        second = side_path_weight(graph, sep.part2, x, y, budget)
        if first < t and second < t:
            return Trichotomy('a', sep, (first, second))
        if first >= t and second >= t:
            return Trichotomy('b', sep, (first, second))
        heavy.append(sep if first >= t else sep.swapped())
    if not heavy:
        return Trichotomy('c', recipe=SumRecipe(graph))
    sep = min(heavy, key=lambda s: (len(s.vertices1()), sorted(s.cut), sorted(s.side1)))
    x, y = sorted(sep.cut)
    ids = count(graph.max_edge_id() + 1)
    e_h, e_j = Edge(next(ids), x, y, 1), Edge(next(ids), x, y, 1)
    h_plus = graph.edge_subgraph(sep.part1, extra_vertices=sep.vertices1()).add_edges([e_h])
    j_plus = graph.edge_subgraph(sep.part2, extra_vertices=sep.vertices2()).add_edges([e_j])
    assert len(components_without(h_plus, (x, y))) == 1, 'Сторона H без {x, y} несвязна, но случай b не найден'
    star = s2_decompose(h_plus, e_h.id, ids)
    outside = Gluing(SumRecipe(j_plus), (e_h.id,), (e_j.id,), ((x, x), (y, y)))
    recipe = SumRecipe(star.graph, tuple(sorted(star.children + (outside,), key=lambda g: g.parent_glue)))
    centre = recipe.graph
    assert centre.simple_nx().number_of_nodes() == 3 or is_3connected(centre), 'Центр не K3 и не 3-связен'
    for gluing, weight in light_summands(recipe, t, budget):
        assert weight < t, f'Слагаемое на рёбрах {gluing.parent_glue} имеет путь веса {weight} >= {t}'
    logger.debug('Случай c: разрез %s, %s слагаемых', sorted(sep.cut), recipe.k)
    return Trichotomy('c', sep, (), recipe)


@dataclass(frozen=True)
class EllBound:
    """l(S2(G0; ...)) <= (l(G0) + 2) * max l(Gi)"""
    total: int
    base: int
    summands: int

    @property
    def bound(self):
        return (self.base + 2) * self.summands

    @property
    def holds(self):
        return self.total <= self.bound

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {
            'total': self.total,
            'base': self.base,
            'summands': self.summands,
            'bound': self.bound,
            'holds': self.holds,
        }


def ell_bound_check(recipe, budget=None):
    """Точные длины путей (в рёбрах) обеих частей неравенства"""
    if not recipe.children:
        raise ValidationError('Нужно хотя бы одно слагаемое', code='empty_star')
    if any(gluing.k != 2 for gluing in recipe.children):
        raise ValidationError('Оценка доказана только для 2-сумм', code='bad_glue')
    budget = ensure_budget(budget)
    total = longest_path(evaluate(recipe), budget).edges
    base = longest_path(recipe.graph, budget).edges
    summands = max(longest_path(evaluate(gluing.child), budget).edges for gluing in recipe.children)
    result = EllBound(total, base, summands)
    assert result.holds, f'l(G) = {total} > {result.bound}'
    return result
