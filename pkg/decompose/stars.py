"""
Звёздные разложения S2 и S3 и итерации операции S.

Центр разложения строится последовательным отщеплением частей по
разрезам: на каждом шаге выбирается разделение с наименьшей стороной,
содержащей e (или Z), при равенстве - лексикографически меньший разрез.
Склейки, чьё суммирующее ребро ушло в отщеплённую часть, переезжают
к её узлу, поэтому результат всегда остаётся корректным деревом.
"""
import logging
from dataclasses import dataclass, replace
from itertools import combinations, count

from django.core.exceptions import ValidationError

from graphcore.connectivity import components_without, is_2connected, is_3connected, three_cuts, two_cuts

from .chains import chain_decompose
from .sums import Gluing, SumRecipe, evaluate, virtual_edges

logger = logging.getLogger(__name__)


def split_off(center, gluings, cut, piece, ids):
    """Отщепить от центра часть piece с разрезом cut; вернуть новый центр и склейки"""
    piece = frozenset(piece)
    piece_edges = {eid for v in piece for eid in center.incident(v)}
    to_parent, to_child = virtual_edges(cut, ids), virtual_edges(cut, ids)
    child_graph = center.edge_subgraph(piece_edges).add_edges(to_child)
    moved = [g for g in gluings if set(g.parent_glue) <= piece_edges]
    kept = [g for g in gluings if not set(g.parent_glue) <= piece_edges]
    child = SumRecipe(child_graph, tuple(moved))
    pairs = tuple((v, v) for v in sorted(cut))
    kept.append(Gluing(child, tuple(e.id for e in to_parent), tuple(e.id for e in to_child), pairs))
    logger.debug('Отщеплена часть %s по разрезу %s', sorted(piece), sorted(cut))
    return center.remove_vertices(piece).add_edges(to_parent), kept


def _finish(center, gluings):
    return SumRecipe(center, tuple(sorted(gluings, key=lambda g: g.parent_glue)))


def s2_decompose(graph, eid, ids=None):
    """
    G = S2(G0; G1, ..., Gk) с e в G0 и |Gi| >= 3.

    Если концы e образуют 2-разрез, si(G0) = K2 и каждая компонента
    G - {x, y} даёт своё слагаемое; иначе si(G0) = K3 или G0 3-связен.
    """
    if graph.order < 3 or not is_2connected(graph):
        raise ValidationError('Нужен 2-связный граф порядка >= 3', code='not_2connected')
    if not graph.has_edge_id(eid):
        raise ValidationError(f'Нет ребра {eid}', code='bad_edge')
    ids = count(graph.max_edge_id() + 1) if ids is None else ids
    x, y = sorted(graph.edge(eid).ends)
    center, gluings = graph, []
    comps = components_without(graph, (x, y))
    if len(comps) >= 2:
        for comp in comps:
            center, gluings = split_off(center, gluings, (x, y), comp, ids)
        return _finish(center, gluings)
    while True:
        best = None
        for cut in two_cuts(center):
            for comp in components_without(center, cut):
                if x in comp or y in comp:
                    continue
                key = (-len(comp), sorted(cut), min(comp))
                if best is None or key < best[0]:
                    best = (key, cut, comp)
        if best is None:
            return _finish(center, gluings)
        center, gluings = split_off(center, gluings, best[1], best[2], ids)


def relative_violation(graph, z):
    """
    3-разделение, нарушающее 4-связность (G, Z), или None.

    Нарушение - 3-разрез, у которого компоненты без вершин Z вместе
    содержат хотя бы две вершины. Возвращается пара (разрез, сторона без Z)
    с наибольшей стороной.
    """
    z = frozenset(z)
    best = None
    for cut in combinations(graph.vertices, 3):
        comps = components_without(graph, cut)
        if len(comps) < 2:
            continue
        free = [c for c in comps if not c & z]
        if len(free) == len(comps):
            free = free[1:]
        piece = frozenset().union(*free) if free else frozenset()
        if len(piece) < 2:
            continue
        key = (-len(piece), sorted(cut))
        if best is None or key < best[0]:
            best = (key, frozenset(cut), piece)
    return None if best is None else (best[1], best[2])


def s3_decompose(graph, z, ids=None):
    """
    G = S3(G0; G1, ..., Gk): Z в G0, (G0, Z) 4-связен, |Gi| >= 5.

    Z не должно лежать ни в одном 3-разрезе G.
    """
    if not is_3connected(graph):
        raise ValidationError('Граф должен быть 3-связным', code='not_3connected')
    z = frozenset(z)
    if not z <= set(graph.vertices):
        raise ValidationError(f'Нет вершин {sorted(z - set(graph.vertices))}', code='bad_vertex')
    for cut in three_cuts(graph):
        if z <= cut:
            raise ValidationError(f'Z лежит в 3-разрезе {sorted(cut)}', code='z_in_cut')
    ids = count(graph.max_edge_id() + 1) if ids is None else ids
    center, gluings = graph, []
    while True:
        found = relative_violation(center, z)
        if found is None:
            return _finish(center, gluings)
        center, gluings = split_off(center, gluings, found[0], found[1], ids)


def children_are_minors(graph, z):
    """
    Слагаемые S3-разложения - миноры G, кроме случая кубической вершины
    si(G) вне треугольников, в окрестности которой лежит Z.
    """
    simple = graph.simple_nx()
    z = set(z)
    for v in simple.nodes:
        nbrs = set(simple[v])
        if len(nbrs) != 3 or any(simple.has_edge(a, b) for a, b in combinations(nbrs, 2)):
            continue
        if z <= nbrs | {v}:
            return False
    return True


@dataclass(frozen=True)
class OperationS:
    """Дерево итераций операции S с листьями порядка <= 3 или 3-связными"""
    recipe: SumRecipe
    chain_length: int
    exact: bool

    @property
    def depth(self):
        return self.recipe.depth

    @property
    def iterations(self):
        return self.recipe.depth - 1

    def to_dict(self):
        return {
            'recipe': self.recipe.to_dict(),
            'depth': self.depth,
            'iterations': self.iterations,
            'chain_length': self.chain_length,
            'exact': self.exact,
        }


def _s_tree(graph, eid, ids):
    if graph.order <= 3 or is_3connected(graph):
        return SumRecipe(graph)
    star = s2_decompose(graph, eid, ids)
    children = []
    for gluing in star.children:
        part = evaluate(gluing.child)
        children.append(replace(gluing, child=_s_tree(part, gluing.child_glue[0], ids)))
    return SumRecipe(star.graph, tuple(children))


def operation_s_tree(graph, eid, budget=None):
    """
    Построение (G, e) итерациями операции S.

    Число итераций не превосходит a(G, e) + 1; нарушение - AssertionError.
    """
    if not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    recipe = _s_tree(graph, eid, count(graph.max_edge_id() + 1))
    chain = chain_decompose(graph, eid, budget)
    result = OperationS(recipe, chain.length, chain.exact)
    if chain.exact:
        assert result.iterations <= chain.length + 1, (
            f'{result.iterations} итераций операции S при a(G, e) = {chain.length}'
        )
    return result
