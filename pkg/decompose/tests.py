"""
Автотесты для приложения decompose
"""
from itertools import combinations

import networkx as nx
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.connectivity import components_without, is_3connected
from graphcore.graph import WeightedMultigraph
from decompose.stars import relative_violation, s2_decompose, s3_decompose
from decompose.sums import (
    Gluing, SumRecipe, evaluate, induced_weights, k_sum, random_star_recipe, split_on_cut,
)
from decompose.weighted import ell_bound_check, trichotomy_2sep


def triangle_ids(graph, a, b, c):
    return tuple(graph.edges_between(u, v)[0] for u, v in ((a, b), (b, c), (a, c)))


def two_k5():
    """Два K5, 3-суммированные по треугольнику 2-3-4"""
    pairs = set(combinations(range(5), 2)) | set(combinations(range(2, 7), 2))
    pairs -= set(combinations(range(2, 5), 2))
    return WeightedMultigraph.from_edges(7, sorted(pairs))


class KSumTest(SimpleTestCase):
    """Тесты для k-сумм"""

    def test_two_triangles(self):
        """Тест 2-суммы двух треугольников: C4"""
        graph = k_sum(families.cycle(3), families.cycle(3), (0,), (0,), ((0, 0), (1, 1)))
        self.assertEqual((graph.order, graph.size), (4, 4))
        self.assertTrue(all(graph.degree(v) == 2 for v in graph.vertices))
        self.assertTrue(nx.is_connected(graph.simple_nx()))

    def test_two_k4(self):
        """Тест 3-суммы двух K4 по треугольнику: K_{2,3}"""
        k4 = families.complete(4)
        glue = triangle_ids(k4, 0, 1, 2)
        graph = k_sum(k4, k4, glue, glue, ((0, 0), (1, 1), (2, 2)))
        self.assertEqual((graph.order, graph.size), (5, 6))
        self.assertTrue(nx.is_isomorphic(graph.simple_nx(), nx.complete_bipartite_graph(2, 3)))

    def test_bad_glue(self):
        """Тест склейки, которая не является циклом"""
        k4 = families.complete(4)
        with self.assertRaises(ValidationError) as error:
            k_sum(k4, k4, (0, 5, 1), (0, 5, 1), ((0, 0), (1, 1), (2, 2), (3, 3)))
        self.assertEqual(error.exception.code, 'bad_glue')

    def test_pairs_mismatch(self):
        """Тест соответствия вершин, не переводящего ребро в ребро"""
        with self.assertRaises(ValidationError):
            k_sum(families.cycle(3), families.cycle(3), (0,), (0,), ((0, 0), (1, 2)))

    def test_induced_weights(self):
        """Тест индуцированных весов: рёбра суммирующего треугольника весят 1"""
        heavy = families.complete(4).reweighted({eid: 7 for eid in range(6)})
        glue = triangle_ids(heavy, 0, 1, 2)
        recipe = SumRecipe(heavy, (Gluing(SumRecipe(heavy), glue, glue, ((0, 0), (1, 1), (2, 2))),))
        graph = evaluate(recipe)
        base, summand = induced_weights(graph, recipe)
        for own in (base, summand):
            self.assertTrue(all(own[eid] == 1 for eid in glue))
            self.assertTrue(all(w == 7 for eid, w in own.items() if eid not in glue))

    def test_random_recipes_evaluate(self):
        """Тест: вычисленный рецепт - 2-связный граф с ожидаемым числом рёбер"""
        for seed in range(30):
            recipe = random_star_recipe(seed)
            graph = evaluate(recipe)
            expected = sum(node.graph.size for node in recipe.nodes()) - 2 * recipe.k
            self.assertEqual(graph.size, expected)
            self.assertTrue(nx.is_biconnected(graph.simple_nx()))


class SplitOnCutTest(SimpleTestCase):
    """Тесты для разреза на две части с виртуальными рёбрами"""

    def test_k4_minus_edge(self):
        """Тест K4 без ребра по паре вершин степени 3"""
        graph = families.complete(4).remove_edges([5])
        split = split_on_cut(graph, {0, 1})
        self.assertEqual((split.first.order, split.first.size), (3, 4))
        self.assertEqual((split.second.order, split.second.size), (3, 3))
        self.assertTrue(split.minor1 and split.minor2)
        self.assertTrue(evaluate(split.recipe()).same_as(graph))

    def test_k33_claw(self):
        """Тест K_{3,3}: одна из частей - звезда K_{1,3}"""
        split = split_on_cut(families.complete_bipartite(3, 3), {0, 1, 2})
        self.assertTrue(split.minor1)
        self.assertFalse(split.minor2)

    def test_three_cut_round_trip(self):
        """Тест 3-суммы двух K5: части - два K5"""
        graph = two_k5()
        split = split_on_cut(graph, {2, 3, 4})
        self.assertTrue(nx.is_isomorphic(split.first.simple_nx(), nx.complete_graph(5)))
        self.assertTrue(nx.is_isomorphic(split.second.simple_nx(), nx.complete_graph(5)))
        self.assertTrue(evaluate(split.recipe()).same_as(graph))

    def test_not_a_cut(self):
        """Тест пары соседних вершин цикла"""
        with self.assertRaises(ValidationError) as error:
            split_on_cut(families.cycle(5), {0, 1})
        self.assertEqual(error.exception.code, 'not_a_cut')


class S2DecomposeTest(SimpleTestCase):
    """Тесты для разложения S2 со звездой вокруг e"""

    def check(self, graph, eid):
        recipe = s2_decompose(graph, eid)
        self.assertTrue(evaluate(recipe).same_as(graph))
        self.assertTrue(recipe.graph.has_edge_id(eid))
        self.assertTrue(all(g.child.graph.order >= 3 for g in recipe.children))
        x, y = graph.edge(eid).ends
        if len(components_without(graph, (x, y))) >= 2:
            self.assertEqual(recipe.graph.order, 2)
            self.assertGreaterEqual(recipe.k, 2)
        else:
            self.assertTrue(recipe.graph.order == 3 or is_3connected(recipe.graph))
        return recipe

    def test_two_triangles_at_cut(self):
        """Тест двух треугольников на концах e: si(G0) = K2, k = 2"""
        graph = WeightedMultigraph.from_edges(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
        recipe = self.check(graph, 0)
        self.assertEqual(recipe.k, 2)

    def test_three_connected(self):
        """Тест 3-связного графа: k = 0"""
        recipe = self.check(families.complete(4), 0)
        self.assertEqual(recipe.k, 0)

    def test_theta(self):
        """Тест θ_{2,2,2} с e на одном из путей"""
        recipe = self.check(families.theta(2, 2, 2), 0)
        self.assertEqual(recipe.graph.order, 3)
        self.assertEqual(recipe.k, 2)

    def test_random_recipes(self):
        """Тест случайных 2-сумм: обратное вычисление даёт исходный граф"""
        for seed in range(10):
            graph = evaluate(random_star_recipe(seed))
            for eid in graph.edge_ids[:3]:
                self.check(graph, eid)

    def test_not_2connected(self):
        """Тест пути"""
        with self.assertRaises(ValidationError):
            s2_decompose(families.path(4), 0)


class S3DecomposeTest(SimpleTestCase):
    """Тесты для разложения S3 вокруг множества Z"""

    def check(self, graph, z):
        recipe = s3_decompose(graph, z)
        self.assertTrue(evaluate(recipe).same_as(graph))
        self.assertTrue(set(z) <= set(recipe.graph.vertices))
        self.assertIsNone(relative_violation(recipe.graph, z))
        self.assertTrue(all(g.child.graph.order >= 5 for g in recipe.children))
        return recipe

    def test_k5(self):
        """Тест K5: разложение тривиально"""
        self.assertEqual(self.check(families.complete(5), {0, 1}).k, 0)

    def test_two_k5(self):
        """Тест двух K5 с Z в одном из них"""
        recipe = self.check(two_k5(), {0, 1, 2})
        self.assertEqual(recipe.k, 1)
        self.assertEqual(recipe.graph.order, 5)

    def test_wheel_with_k5(self):
        """Тест колеса W6 с K5 на треугольнике у центра"""
        wheel, k5 = families.wheel(6), families.complete(5)
        graph = k_sum(wheel, k5, triangle_ids(wheel, 0, 1, 2), triangle_ids(k5, 0, 1, 2), ((0, 0), (1, 1), (2, 2)))
        recipe = self.check(graph, {3, 4, 5})
        self.assertGreaterEqual(recipe.k, 1)

    def test_z_in_cut(self):
        """Тест Z внутри 3-разреза"""
        with self.assertRaises(ValidationError) as error:
            s3_decompose(two_k5(), {2, 3, 4})
        self.assertEqual(error.exception.code, 'z_in_cut')


class TrichotomyTest(SimpleTestCase):
    """Тесты для трихотомии 2-разделений"""

    def test_light_cycle(self):
        """Тест C6 при t = 10: случай a"""
        found = trichotomy_2sep(families.cycle(6), 10)
        self.assertEqual(found.case, 'a')
        self.assertTrue(all(w < 10 for w in found.path_weights))

    def test_long_cycle(self):
        """Тест 2-суммы двух длинных циклов: случай b"""
        graph = k_sum(families.cycle(8), families.cycle(8), (0,), (0,), ((0, 0), (1, 1)))
        found = trichotomy_2sep(graph, 3)
        self.assertEqual(found.case, 'b')
        self.assertTrue(all(w >= 3 for w in found.path_weights))
        self.assertTrue(found.separation.is_valid(graph))

    def test_subdivided_k4(self):
        """Тест K4 с подразбитыми рёбрами веса 5 при t = 15: случай c"""
        edges = []
        for s, (a, b) in enumerate(combinations(range(4), 2), start=4):
            edges += [(a, s, 5), (s, b, 5)]
        graph = WeightedMultigraph.from_edges(10, edges)
        found = trichotomy_2sep(graph, 15)
        self.assertEqual(found.case, 'c')
        self.assertTrue(is_3connected(found.recipe.graph))
        self.assertEqual(found.recipe.k, 6)
        self.assertTrue(evaluate(found.recipe).same_as(graph))

    def test_three_connected(self):
        """Тест 3-связного графа: случай c без слагаемых"""
        found = trichotomy_2sep(families.complete(4), 2)
        self.assertEqual(found.case, 'c')
        self.assertEqual(found.recipe.k, 0)


class EllBoundTest(SimpleTestCase):
    """Тесты для оценки самого длинного пути 2-суммы"""

    def test_triangles(self):
        """Тест треугольника с треугольниками на всех рёбрах"""
        triangle = families.cycle(3)
        children = tuple(
            Gluing(SumRecipe(triangle), (eid,), (0,), ((0, min(triangle.edge(eid).ends)), (1, max(triangle.edge(eid).ends))))
            for eid in triangle.edge_ids
        )
        bound = ell_bound_check(SumRecipe(triangle, children))
        self.assertEqual((bound.total, bound.base, bound.summands, bound.bound), (5, 2, 2, 8))
        self.assertTrue(bound)

    def test_single_summand(self):
        """Тест одного слагаемого C3"""
        recipe = SumRecipe(families.cycle(4), (Gluing(SumRecipe(families.cycle(3)), (0,), (0,), ((0, 0), (1, 1))),))
        self.assertTrue(ell_bound_check(recipe).holds)

    def test_random_recipes(self):
        """Тест случайных рецептов"""
        for seed in range(40):
            self.assertTrue(ell_bound_check(random_star_recipe(seed)).holds)

    def test_empty_star(self):
        """Тест рецепта без слагаемых"""
        with self.assertRaises(ValidationError):
            ell_bound_check(SumRecipe(families.cycle(3)))
