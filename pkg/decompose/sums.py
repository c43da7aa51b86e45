"""
k-суммы (k = 2, 3, 4) и рецепты сумм.

Рецепт - дерево графов: у каждого узла свой граф и список склеек с
детьми. Склейка задаёт суммирующее ребро (k = 2) или суммирующий k-цикл
родителя и ребёнка и соответствие их вершин. Вычисление рецепта
отождествляет вершины склейки и удаляет её рёбра с обеих сторон.
"""
import logging
import random
from dataclasses import dataclass
from itertools import count

import networkx as nx
from django.core.exceptions import ValidationError

from graphcore import families
from graphcore.connectivity import components_without, is_2connected, is_3connected, separation_from_sides
from graphcore.graph import Edge, WeightedMultigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Gluing:
    """Склейка ребёнка с родителем: рёбра склейки и пары (вершина ребёнка, вершина родителя)"""
    child: 'SumRecipe'
    parent_glue: tuple
    child_glue: tuple
    pairs: tuple

    @property
    def k(self):
        return 2 if len(self.parent_glue) == 1 else len(self.parent_glue)

    def to_dict(self):
        return {
            'k': self.k,
            'parent_glue': list(self.parent_glue),
            'child_glue': list(self.child_glue),
            'pairs': [list(pair) for pair in self.pairs],
            'recipe': self.child.to_dict(),
        }


@dataclass(frozen=True)
class SumRecipe:
    graph: WeightedMultigraph
    children: tuple = ()

    def nodes(self):
        """Узлы в прямом порядке обхода"""
        yield self
        for gluing in self.children:
            yield from gluing.child.nodes()

    @property
    def depth(self):
        """Число уровней дерева; лист - глубина 1"""
        return 1 + max((gluing.child.depth for gluing in self.children), default=0)

    @property
    def k(self):
        return len(self.children)

    def glue_edges(self):
        return {eid for gluing in self.children for eid in gluing.parent_glue}

    def to_dict(self):
        return {
            'kind': 'recipe',
            'graph': self.graph.to_dict(),
            'children': [gluing.to_dict() for gluing in self.children],
        }

    @classmethod
    def from_dict(cls, data):
        children = tuple(
            Gluing(
                cls.from_dict(item['recipe']),
                tuple(item['parent_glue']),
                tuple(item['child_glue']),
                tuple(tuple(pair) for pair in item['pairs']),
            )
            for item in data.get('children', ())
        )
        return cls(WeightedMultigraph.from_dict(data['graph']), children)


def glue_vertices(graph, glue):
    """Вершины суммирующего ребра или k-цикла; проверка, что это действительно цикл"""
    if len(glue) not in (1, 3, 4) or len(set(glue)) != len(glue):
        raise ValidationError(f'Склейка должна быть ребром, треугольником или 4-циклом: {glue}', code='bad_glue')
    for eid in glue:
        if not graph.has_edge_id(eid):
            raise ValidationError(f'Нет ребра склейки {eid}', code='bad_glue')
    ends = [graph.edge(eid).ends for eid in glue]
    vertices = frozenset().union(*ends)
    if len(glue) == 1:
        return vertices
    ring = nx.MultiGraph()
    ring.add_edges_from(tuple(pair) for pair in ends)
    if len(vertices) != len(glue) or any(d != 2 for _, d in ring.degree()) or not nx.is_connected(ring):
        raise ValidationError(f'Рёбра {glue} не образуют {len(glue)}-цикл', code='bad_glue')
    return vertices


def _check_pairs(parent, child, parent_glue, child_glue, pairs):
    if len(parent_glue) != len(child_glue):
        raise ValidationError('Склейки разного размера', code='bad_glue')
    outer = glue_vertices(parent, parent_glue)
    inner = glue_vertices(child, child_glue)
    mapping = dict(pairs)
    if set(mapping) != inner or set(mapping.values()) != outer or len(set(mapping.values())) != len(mapping):
        raise ValidationError('Соответствие вершин склейки не биективно', code='bad_glue')
    mapped = sorted(tuple(sorted(mapping[x] for x in child.edge(eid).ends)) for eid in child_glue)
    wanted = sorted(tuple(sorted(parent.edge(eid).ends)) for eid in parent_glue)
    if mapped != wanted:
        raise ValidationError('Рёбра склеек не совпадают после отождествления', code='bad_glue')
    return mapping


def sum_maps(parent, child, parent_glue, child_glue, pairs):
    """Куда k-сумма переносит вершины и рёбра ребёнка: (вершины, рёбра)"""
    mapping = _check_pairs(parent, child, parent_glue, child_glue, pairs)
    taken = set(parent.vertices)
    fresh = count(max(parent.max_vertex(), child.max_vertex()) + 1)
    for v in child.vertices:
        if v in mapping:
            continue
        mapping[v] = next(fresh) if v in taken else v
        taken.add(mapping[v])
    used = set(parent.edge_ids)
    fresh_edges = count(max(parent.max_edge_id(), child.max_edge_id()) + 1)
    edge_map = {}
    for e in child.edges:
        if e.id in child_glue:
            continue
        edge_map[e.id] = next(fresh_edges) if e.id in used else e.id
        used.add(edge_map[e.id])
    return mapping, edge_map


def k_sum(parent, child, parent_glue, child_glue, pairs):
    """
    k-сумма двух графов.

    Вершины и номера рёбер родителя сохраняются; вершины и рёбра ребёнка
    сохраняют номера, если они свободны, иначе получают новые.
    """
    mapping, edge_map = sum_maps(parent, child, parent_glue, child_glue, pairs)
    edges = [e for e in parent.edges if e.id not in parent_glue]
    for e in child.edges:
        if e.id in edge_map:
            edges.append(Edge(edge_map[e.id], mapping[e.u], mapping[e.v], e.weight))
    return WeightedMultigraph(set(parent.vertices) | set(mapping.values()), edges)


def check_recipe(recipe):
    """Рёбра склеек родителя различны, а ребёнок не отдаёт своё суммирующее ребро внукам"""
    seen = set()
    for gluing in recipe.children:
        if seen & set(gluing.parent_glue):
            raise ValidationError(f'Ребро {sorted(seen & set(gluing.parent_glue))} склеено дважды', code='bad_glue')
        seen |= set(gluing.parent_glue)
        _check_pairs(recipe.graph, gluing.child.graph, gluing.parent_glue, gluing.child_glue, gluing.pairs)
        if gluing.child.glue_edges() & set(gluing.child_glue):
            raise ValidationError('Суммирующее ребро ребёнка занято его собственной склейкой', code='bad_glue')
        check_recipe(gluing.child)


def evaluate(recipe):
    """Граф, заданный рецептом"""
    check_recipe(recipe)
    return _evaluate(recipe)


def _evaluate(recipe):
    graph = recipe.graph
    for gluing in recipe.children:
        graph = k_sum(graph, _evaluate(gluing.child), gluing.parent_glue, gluing.child_glue, gluing.pairs)
    return graph


def induced_weights(graph, recipe, weights=None):
    """
    Индуцированные веса узлов рецепта в прямом порядке обхода.

    Ребро суммирующего треугольника или 4-цикла получает вес 1, ребро
    исходного графа - свой вес в G, прочие рёбра сохраняют вес узла.
    """
    weights = {e.id: e.weight for e in graph.edges} if weights is None else dict(weights)
    result = []

    def collect(node, upward):
        summing = set(upward)
        for gluing in node.children:
            if gluing.k >= 3:
                summing |= set(gluing.parent_glue)
        own = {}
        for e in node.graph.edges:
            if e.id in summing:
                own[e.id] = 1
            elif graph.has_edge_id(e.id):
                own[e.id] = weights.get(e.id, e.weight)
            else:
                own[e.id] = e.weight
        result.append(own)
        for gluing in node.children:
            collect(gluing.child, gluing.child_glue if gluing.k >= 3 else ())

    collect(recipe, ())
    return result


@dataclass(frozen=True)
class CutSplit:
    """
    Разрез 2- или 3-связного графа на G1+ и G2+ с виртуальным ребром или
    треугольником. minor1/minor2 - является ли часть минором G.
    """
    separation: object
    first: WeightedMultigraph
    second: WeightedMultigraph
    glue1: tuple
    glue2: tuple
    minor1: bool
    minor2: bool

    def recipe(self):
        pairs = tuple((v, v) for v in sorted(self.separation.cut))
        return SumRecipe(self.first, (Gluing(SumRecipe(self.second), self.glue1, self.glue2, pairs),))

    def to_dict(self):
        return {
            'separation': self.separation.to_dict(),
            'first': self.first.to_dict(),
            'second': self.second.to_dict(),
            'glue1': list(self.glue1),
            'glue2': list(self.glue2),
            'minor1': self.minor1,
            'minor2': self.minor2,
        }


def virtual_edges(cut, ids):
    """Виртуальное ребро на паре или треугольник на тройке вершин"""
    cut = sorted(cut)
    if len(cut) == 2:
        pairs = [(cut[0], cut[1])]
    else:
        pairs = [(cut[0], cut[1]), (cut[1], cut[2]), (cut[0], cut[2])]
    return [Edge(next(ids), u, v, 1) for u, v in pairs]


def _is_claw(graph):
    simple = graph.simple_nx()
    return simple.number_of_nodes() == 4 and nx.is_isomorphic(simple, nx.star_graph(3))


def split_on_cut(graph, cut, side2=None):
    """
    Разделение по 2- или 3-разрезу и части G1+, G2+.

    По умолчанию компонента G - cut с наименьшей вершиной идёт в первую
    часть, остальные - во вторую; рёбра внутри разреза остаются в первой.
    """
    cut = frozenset(cut)
    if len(cut) == 2 and not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    if len(cut) == 3 and not is_3connected(graph):
        raise ValidationError('Граф должен быть 3-связным', code='not_3connected')
    if len(cut) not in (2, 3) or not cut <= set(graph.vertices):
        raise ValidationError(f'{sorted(cut)} - не 2- и не 3-разрез', code='not_a_cut')
    comps = components_without(graph, cut)
    if len(comps) < 2:
        raise ValidationError(f'{sorted(cut)} не разделяет граф', code='not_a_cut')
    if side2 is None:
        side2 = frozenset().union(*comps[1:])
    side2 = frozenset(side2)
    side1 = frozenset(graph.vertices) - side2 - cut
    if not side1 or not side2 or any(c & side2 and not c <= side2 for c in comps):
        raise ValidationError('Сторона должна быть объединением компонент', code='not_a_cut')
    separation = separation_from_sides(graph, cut, side1, side2)
    ids = count(graph.max_edge_id() + 1)
    extra1, extra2 = virtual_edges(cut, ids), virtual_edges(cut, ids)
    part1 = graph.edge_subgraph(separation.part1, extra_vertices=separation.vertices1())
    part2 = graph.edge_subgraph(separation.part2, extra_vertices=separation.vertices2())
    minor1 = minor2 = True
    if len(cut) == 3:
        minor1, minor2 = not _is_claw(part2), not _is_claw(part1)
    logger.debug('Разрез %s: части %s и %s', sorted(cut), len(side1), len(side2))
    return CutSplit(
        separation,
        part1.add_edges(extra1),
        part2.add_edges(extra2),
        tuple(e.id for e in extra1),
        tuple(e.id for e in extra2),
        minor1,
        minor2,
    )


def random_star_recipe(seed, k=None):
    """Случайный рецепт S2(G0; G1, ..., Gk) из малых 2-связных графов"""
    rng = random.Random(seed)
    shapes = [
        lambda: families.cycle(rng.randint(3, 6)),
        lambda: families.complete(4),
        lambda: families.wheel(rng.randint(3, 5)),
        lambda: families.theta(rng.randint(1, 3), rng.randint(2, 3), rng.randint(2, 3)),
    ]
    base = rng.choice(shapes)()
    k = rng.randint(1, min(4, base.size)) if k is None else k
    children = []
    for eid in sorted(rng.sample(list(base.edge_ids), k)):
        child = rng.choice(shapes)()
        glue = rng.choice(child.edge_ids)
        a, b = sorted(child.edge(glue).ends)
        x, y = sorted(base.edge(eid).ends)
        if rng.random() < 0.5:
            x, y = y, x
        children.append(Gluing(SumRecipe(child), (eid,), (glue,), ((a, x), (b, y))))
    return SumRecipe(base, tuple(children))
