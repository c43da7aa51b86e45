"""
Автотесты для приложения unavoidable
"""
import random

import networkx as nx
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.connectivity import is_3connected
from graphcore.graph import CycleWitness, WeightedMultigraph
from graphcore.paths import path_from_vertices
from unavoidable.extract import (
    HighDegree, comb_or_degree, induced_path_or_degree, ladder_from_matching,
    wheel_or_ladder, wheel_to_ladder_pipeline,
)
from unavoidable.minors import WheelMinor, has_wheel_minor
from unavoidable.patterns import comb, ladder_plus, pattern_graph, verify_pattern


def ring(graph, vertices):
    closed = path_from_vertices(graph, list(vertices) + [vertices[0]])
    return CycleWitness(tuple(vertices), closed.edges, closed.weight)


def caterpillar(spine):
    """Хребет 0..spine-1 и по одной ноге spine + i у каждой вершины"""
    edges = [(i, i + 1) for i in range(spine - 1)] + [(i, spine + i) for i in range(spine)]
    return WeightedMultigraph.from_edges(2 * spine, edges)


class PatternGraphTest(SimpleTestCase):
    """Тесты для графов-образцов"""

    def test_sizes(self):
        """Тест порядков и размеров образцов"""
        self.assertEqual((comb(4).order, comb(4).size), (8, 7))
        self.assertEqual((ladder_plus(4).order, ladder_plus(4).size), (8, 11))
        w_plus = pattern_graph('W_plus', 3)
        self.assertEqual((w_plus.order, w_plus.size), (9, 15))
        w_prime = pattern_graph('W_prime', 4)
        self.assertEqual((w_prime.order, w_prime.size), (5, 12))

    def test_w_prime_is_union_of_triangles(self):
        """Тест W_k': каждая спица удвоена"""
        w_prime = pattern_graph('W_prime', 5)
        for i in range(1, 6):
            self.assertEqual(len(w_prime.edges_between(0, i)), 2)
        self.assertTrue(is_3connected(w_prime))

    def test_bad_pattern(self):
        """Тест неизвестного образца и плохого параметра"""
        with self.assertRaises(ValidationError):
            pattern_graph('K', 3)
        with self.assertRaises(ValidationError):
            pattern_graph('W', 2)


class InducedPathTest(SimpleTestCase):
    """Тесты для индуцированного пути или вершины большой степени"""

    def test_star(self):
        """Тест звезды K_{1,4} при d = 3"""
        star = WeightedMultigraph.from_nx(nx.star_graph(4))
        self.assertEqual(induced_path_or_degree(star, 3, 2, 1), HighDegree(0, 4))

    def test_long_path(self):
        """Тест пути P^100 из конца"""
        found = induced_path_or_degree(families.path(100), 2, 3, 0)
        self.assertEqual(found.vertices, (0, 1, 2, 3, 4))

    def test_binary_tree(self):
        """Тест полного двоичного дерева глубины 5 из корня"""
        tree = WeightedMultigraph.from_nx(nx.balanced_tree(2, 5))
        found = induced_path_or_degree(tree, 3, 2, 0)
        self.assertEqual(found.length, 3)
        self.assertEqual(found.start, 0)
        self.assertEqual(tree.induced(found.vertex_set).size, 3)

    def test_too_small(self):
        """Тест слишком маленького графа"""
        with self.assertRaises(ValidationError) as error:
            induced_path_or_degree(families.cycle(6), 2, 3, 0)
        self.assertEqual(error.exception.code, 'too_small')


class CombTest(SimpleTestCase):
    """Тесты для гребёнки в дереве"""

    def test_spider(self):
        """Тест паука с d^t ногами"""
        spider = WeightedMultigraph.from_edges(9, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)])
        self.assertEqual(comb_or_degree(spider, 2, 2), HighDegree(0, 4))

    def test_caterpillar(self):
        """Тест гусеницы: сама является гребёнкой"""
        tree = caterpillar(9)
        found = comb_or_degree(tree, 3, 2)
        self.assertEqual(found.pattern, 'comb')
        self.assertTrue(verify_pattern(tree, found))

    def test_few_leaves(self):
        """Тест дерева с малым числом листьев"""
        with self.assertRaises(ValidationError):
            comb_or_degree(families.path(10), 2, 2)

    def test_random_trees(self):
        """Тест случайных деревьев: любой из исходов проверяется"""
        for seed in range(20):
            tree = WeightedMultigraph.from_nx(nx.random_labeled_tree(40, seed=seed))
            leaves = sum(1 for v in tree.vertices if tree.degree(v) == 1)
            if leaves < 9:
                continue
            found = comb_or_degree(tree, 3, 2)
            if isinstance(found, HighDegree):
                self.assertGreater(tree.degree(found.vertex), 3)
            else:
                self.assertTrue(verify_pattern(tree, found))


class LadderFromMatchingTest(SimpleTestCase):
    """Тесты для лестницы из паросочетания"""

    def test_identity(self):
        """Тест тождественной перестановки: одна цепочка"""
        found = ladder_from_matching(10, range(10), 3)
        self.assertFalse(found.nested)
        self.assertEqual(found.layers, 10)
        self.assertTrue(verify_pattern(found.graph, found.witness))

    def test_reversal(self):
        """Тест обратной перестановки: один слой-антицепь"""
        found = ladder_from_matching(10, range(9, -1, -1), 3)
        self.assertTrue(found.nested)
        self.assertEqual(found.layers, 1)
        self.assertTrue(verify_pattern(found.graph, found.witness))

    def test_random_permutations(self):
        """Тест случайных перестановок при m = n^2 + 1"""
        rng = random.Random(0)
        for n in (2, 3, 4):
            m = n * n + 1
            for _ in range(100):
                pi = list(range(m))
                rng.shuffle(pi)
                found = ladder_from_matching(m, pi, n)
                self.assertEqual(found.witness.parameter, n + 1)
                self.assertTrue(verify_pattern(found.graph, found.witness))

    def test_small_matching(self):
        """Тест m <= n^2"""
        with self.assertRaises(ValidationError):
            ladder_from_matching(9, range(9), 3)


class WheelOrLadderTest(SimpleTestCase):
    """Тесты для поиска W_t или L_t^+"""

    def test_wheel(self):
        """Тест W_6 при t = 6"""
        graph = families.wheel(6)
        found = wheel_or_ladder(graph, 6)
        self.assertEqual(found.pattern, 'W')
        self.assertTrue(verify_pattern(graph, found))

    def test_prism(self):
        """Тест призмы при t = 4: слишком мала"""
        self.assertIsNone(wheel_or_ladder(families.prism(), 4))

    def test_ladder_plus(self):
        """Тест самого L_4^+"""
        graph = ladder_plus(4)
        found = wheel_or_ladder(graph, 4)
        self.assertEqual(found.pattern, 'L_plus')
        self.assertTrue(verify_pattern(graph, found))


class PipelineTest(SimpleTestCase):
    """Тесты для построения W_t или L_t^+ из минора большого колеса"""

    def test_star_tree(self):
        """Тест колеса W_8: дерево спиц - звезда"""
        graph = families.wheel(8)
        wheel = has_wheel_minor(graph, 8)
        found = wheel_to_ladder_pipeline(graph, wheel, 4)
        self.assertEqual(found.stage, 'degree')
        self.assertTrue(verify_pattern(graph, found.witness))

    def test_caterpillar_hub(self):
        """Тест центра-гусеницы: гребёнка, паросочетание и L_4^+"""
        spine = 28
        rng = random.Random(3)
        feet = list(range(spine))
        rng.shuffle(feet)
        edges = [(i, i + 1) for i in range(spine - 1)]
        edges += [(spine + i, spine + (i + 1) % spine) for i in range(spine)]
        spokes_start = len(edges)
        edges += [(i, spine + feet[i]) for i in range(spine)]
        graph = WeightedMultigraph.from_edges(2 * spine, edges)
        wheel = WheelMinor(
            ring(graph, list(range(spine, 2 * spine))),
            frozenset(range(spine)),
            tuple(range(spokes_start, spokes_start + spine)),
        )
        found = wheel_to_ladder_pipeline(graph, wheel, 4)
        self.assertEqual(found.stage, 'comb')
        self.assertTrue(verify_pattern(graph, found.witness))

    def test_bad_wheel(self):
        """Тест неверного минора колеса"""
        graph = families.wheel(8)
        wheel = has_wheel_minor(graph, 8)
        with self.assertRaises(ValidationError):
            wheel_to_ladder_pipeline(graph, WheelMinor(wheel.cycle, wheel.hub, wheel.spokes[:2]), 4)
