"""
Автотесты для приложения theta
"""
import random
from itertools import combinations_with_replacement

import networkx as nx
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.budget import Budget, BudgetExhausted
from graphcore.connectivity import separation_from_sides
from graphcore.graph import CycleWitness, WeightedMultigraph
from graphcore.paths import path_from_vertices
from graphcore.planar import planar_embed
from theta.certificates import EfThetaOutcome, ThetaCertificate, verify_ef_theta, verify_theta
from theta.eftheta import find_ef_theta
from theta.extract import heavy_cycle_and_paths
from theta.heavy import heavy_cpath_theta
from theta.naive import naive_contains_theta
from theta.search import contains_theta, lift_theta, theta_at


def small_biconnected(max_order):
    """2-связные простые графы из атласа networkx"""
    for simple in nx.graph_atlas_g():
        if simple.number_of_nodes() > max_order:
            break
        if simple.number_of_nodes() >= 3 and nx.is_biconnected(simple):
            yield WeightedMultigraph.from_nx(simple)


def ring(graph, vertices):
    """Цикл по заданной последовательности вершин"""
    closed = path_from_vertices(graph, list(vertices) + [vertices[0]])
    return CycleWitness(tuple(vertices), closed.edges, closed.weight)


class ContainsThetaTest(SimpleTestCase):
    """Тесты для структурного поиска θ"""

    def test_k23(self):
        """Тест K_{2,3}: θ_{2,2,2} на двух вершинах степени 3"""
        graph = families.complete_bipartite(2, 3)
        cert = contains_theta(graph, 2, 2, 2)
        self.assertIsNotNone(cert)
        self.assertEqual({cert.u, cert.v}, {0, 1})
        self.assertTrue(verify_theta(graph, cert))

    def test_cycle_has_no_theta(self):
        """Тест цикла: между любыми вершинами только два пути"""
        self.assertIsNone(contains_theta(families.cycle(6), 1, 2, 3))
        self.assertIsNone(contains_theta(families.cycle(6), 1, 2, 5))

    def test_parallel_edges(self):
        """Тест трёх параллельных рёбер весов 4, 5, 6"""
        graph = families.parallel([4, 5, 6])
        cert = contains_theta(graph, 4, 4, 4)
        self.assertEqual({cert.u, cert.v}, {0, 1})
        self.assertEqual(sorted(cert.weights), [4, 5, 6])
        self.assertIsNone(contains_theta(graph, 5, 5, 5))

    def test_k4(self):
        """Тест K_4 с порогами (1, 2, 2)"""
        graph = families.complete(4)
        cert = contains_theta(graph, 1, 2, 2)
        self.assertTrue(verify_theta(graph, cert))
        self.assertIsNone(contains_theta(graph, 2, 2, 2))

    def test_thresholds_are_sorted(self):
        """Тест порядка порогов: (3, 1, 2) то же, что (1, 2, 3)"""
        graph = families.theta(1, 2, 3)
        self.assertIsNotNone(contains_theta(graph, 3, 1, 2))
        self.assertEqual(contains_theta(graph, 3, 1, 2).thresholds, (1, 2, 3))

    def test_bad_threshold(self):
        """Тест отрицательного порога"""
        with self.assertRaises(ValidationError):
            contains_theta(families.complete(4), -1, 1, 1)

    def test_budget(self):
        """Тест исчерпания бюджета"""
        with self.assertRaises(BudgetExhausted):
            contains_theta(families.petersen(), 3, 3, 3, budget=Budget(limit=5))

    def test_subdivided_graph(self):
        """Тест подразбиения: ребро веса 3 и путь из рёбер 1 + 2 дают один ответ"""
        graph = families.complete(4).reweighted({0: 3})
        split = families.subdivide(graph, 0, (1, 2))
        for thresholds in [(1, 2, 3), (2, 2, 3), (3, 3, 3), (2, 3, 4)]:
            self.assertEqual(
                contains_theta(graph, *thresholds) is None,
                contains_theta(split, *thresholds) is None,
            )

    def test_monotone(self):
        """Тест монотонности по порогам"""
        graph = families.cube()
        cert = contains_theta(graph, 2, 3, 3)
        self.assertTrue(verify_theta(graph, cert))
        for smaller in [(1, 3, 3), (2, 2, 3), (1, 1, 1), (0, 0, 0)]:
            self.assertIsNotNone(contains_theta(graph, *smaller))

    def test_prism_too_small(self):
        """Тест призмы: для θ_{2,3,3} нужно 7 вершин, а в призме 6"""
        graph = families.prism()
        self.assertIsNone(contains_theta(graph, 2, 3, 3))
        self.assertIsNone(naive_contains_theta(graph, 2, 3, 3))
        self.assertIsNotNone(contains_theta(graph, 2, 2, 3))

    def test_matches_naive_search(self):
        """Тест совпадения с наивным перебором на графах до 5 вершин"""
        for graph in small_biconnected(5):
            for thresholds in combinations_with_replacement((1, 2, 3), 3):
                with self.subTest(edges=[e.ends for e in graph.edges], thresholds=thresholds):
                    self.assertEqual(
                        contains_theta(graph, *thresholds) is None,
                        naive_contains_theta(graph, *thresholds) is None,
                    )

    def test_matches_naive_search_weighted(self):
        """Тест совпадения с наивным перебором на случайных весах"""
        rng = random.Random(7)
        for base in [families.complete(4), families.prism(), families.wheel(5), families.theta(2, 2, 3)]:
            for _ in range(5):
                graph = base.reweighted({eid: rng.randint(1, 3) for eid in base.edge_ids})
                thresholds = sorted(rng.randint(1, 5) for _ in range(3))
                with self.subTest(weights=[e.weight for e in graph.edges], thresholds=thresholds):
                    self.assertEqual(
                        contains_theta(graph, *thresholds) is None,
                        naive_contains_theta(graph, *thresholds) is None,
                    )


class ThetaAtTest(SimpleTestCase):
    """Тесты для поиска θ с заданными ветвлениями"""

    def test_branch_vertices(self):
        """Тест θ_{1,2,3} на его ветвлениях"""
        graph = families.theta(1, 2, 3)
        cert = theta_at(graph, 0, 1, 1, 2, 3)
        self.assertEqual((cert.u, cert.v), (0, 1))
        self.assertTrue(verify_theta(graph, cert))

    def test_interior_vertices(self):
        """Тест внутренних вершин пути: только два независимых пути"""
        self.assertIsNone(theta_at(families.theta(1, 2, 3), 3, 4, 1, 1, 1))

    def test_wheel_hub_and_rim(self):
        """Тест W_4: центр и вершина обода"""
        graph = families.wheel(4)
        cert = theta_at(graph, 0, 1, 1, 2, 2)
        self.assertTrue(verify_theta(graph, cert))

    def test_same_vertex(self):
        """Тест совпадающих ветвлений"""
        with self.assertRaises(ValidationError):
            theta_at(families.complete(4), 1, 1, 1, 1, 1)


class LiftThetaTest(SimpleTestCase):
    """Тесты для подъёма θ через 2-разделение"""

    def setUp(self):
        # два треугольника с общим ребром 0-1
        self.graph = WeightedMultigraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        self.sep = separation_from_sides(self.graph, {0, 1}, {2}, {3})

    def test_two_triangles(self):
        """Тест подъёма: сертификат проходит через оба треугольника"""
        cert = lift_theta(self.graph, self.sep, 1, 1, 2)
        self.assertTrue(verify_theta(self.graph, cert))
        self.assertTrue({2, 3} <= cert.vertex_set)

    def test_agrees_with_direct_search(self):
        """Тест совпадения с прямым поиском"""
        for thresholds in [(1, 1, 1), (1, 2, 2), (2, 2, 2), (1, 1, 3)]:
            self.assertEqual(
                lift_theta(self.graph, self.sep, *thresholds) is None,
                contains_theta(self.graph, *thresholds) is None,
            )

    def test_theta_free_sides(self):
        """Тест цикла: обе стороны без θ"""
        graph = families.cycle(6)
        sep = separation_from_sides(graph, {0, 3}, {1, 2}, {4, 5})
        self.assertIsNone(lift_theta(graph, sep, 1, 1, 1))

    def test_not_a_2separation(self):
        """Тест разделения порядка 3"""
        graph = families.complete(4)
        sep = separation_from_sides(graph, {1, 2, 3}, {0}, set())
        with self.assertRaises(ValidationError):
            lift_theta(graph, sep, 1, 1, 1)


class VerifyThetaTest(SimpleTestCase):
    """Тесты для независимой проверки сертификата"""

    def test_repeated_path(self):
        """Тест сертификата с повторённым путём"""
        graph = families.complete(4)
        path = path_from_vertices(graph, [0, 2, 1])
        cert = ThetaCertificate(0, 1, (path, path, path_from_vertices(graph, [0, 1])), (1, 1, 1))
        self.assertFalse(verify_theta(graph, cert))

    def test_weights_below_thresholds(self):
        """Тест сертификата с недостаточными весами"""
        graph = families.complete(4)
        cert = contains_theta(graph, 1, 2, 2)
        heavier = ThetaCertificate(cert.u, cert.v, cert.paths, (2, 2, 2))
        self.assertFalse(verify_theta(graph, heavier))

    def test_round_trip_dict(self):
        """Тест сериализации сертификата"""
        graph = families.complete_bipartite(2, 3)
        cert = contains_theta(graph, 2, 2, 2)
        self.assertTrue(verify_theta(graph, ThetaCertificate.from_dict(cert.to_dict())))


class EfThetaTest(SimpleTestCase):
    """Тесты для поиска ef-теты"""

    def test_common_end_of_degree_three(self):
        """Тест K_4: рёбра 01 и 02 с общим концом степени 3"""
        graph = families.complete(4)
        e, f = graph.edges_between(0, 1)[0], graph.edges_between(0, 2)[0]
        outcome = find_ef_theta(graph, e, f)
        self.assertEqual(outcome.kind, 'theta')
        self.assertTrue(verify_ef_theta(graph, outcome))
        self.assertTrue(verify_theta(graph, outcome.certificate))

    def test_common_end_of_degree_two(self):
        """Тест K_4 с подразбитым ребром 01: общий конец 4 степени 2"""
        graph = WeightedMultigraph.from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)])
        outcome = find_ef_theta(graph, 5, 6)
        self.assertEqual(outcome.kind, 'exception_common_end')
        self.assertEqual(outcome.vertex, 4)
        self.assertTrue(verify_ef_theta(graph, outcome))

    def test_disjoint_edges_theta(self):
        """Тест W_5: рёбра обода 12 и 34"""
        graph = WeightedMultigraph.from_edges(6, [
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        ])
        outcome = find_ef_theta(graph, 0, 2)
        self.assertEqual(outcome.kind, 'theta')
        self.assertTrue(verify_ef_theta(graph, outcome))
        restored = EfThetaOutcome.from_dict(outcome.to_dict())
        self.assertTrue(verify_ef_theta(graph, restored))

    def test_disjoint_edges_separator(self):
        """Тест C_6: рёбра 01 и 34 разделяются парой вершин"""
        graph = families.cycle(6)
        e, f = graph.edges_between(0, 1)[0], graph.edges_between(3, 4)[0]
        outcome = find_ef_theta(graph, e, f)
        self.assertEqual(outcome.kind, 'separator')
        self.assertEqual(outcome.separator, (0, 2))
        self.assertTrue(verify_ef_theta(graph, outcome))

    def test_k4_exception(self):
        """Тест K_4: непересекающиеся рёбра 01 и 23"""
        graph = families.complete(4)
        e, f = graph.edges_between(0, 1)[0], graph.edges_between(2, 3)[0]
        outcome = find_ef_theta(graph, e, f)
        self.assertEqual(outcome.kind, 'exception_k4')
        self.assertTrue(verify_ef_theta(graph, outcome))

    def test_bad_edges(self):
        """Тест отсутствующего и повторённого ребра"""
        graph = families.complete(4)
        with self.assertRaises(ValidationError) as caught:
            find_ef_theta(graph, 0, 99)
        self.assertEqual(caught.exception.code, 'bad_edge')
        with self.assertRaises(ValidationError) as caught:
            find_ef_theta(graph, 1, 1)
        self.assertEqual(caught.exception.code, 'same_edge')

    def test_rejects_foreign_certificate(self):
        """Тест проверки: θ из K_4 без ребра f не подтверждает ef-тету"""
        graph = families.complete(4)
        e, f = graph.edges_between(0, 1)[0], graph.edges_between(0, 2)[0]
        outcome = find_ef_theta(graph, e, f)
        swapped = EfThetaOutcome('theta', e, graph.edges_between(2, 3)[0], certificate=outcome.certificate)
        self.assertFalse(verify_ef_theta(graph, swapped))


class HeavyCPathTest(SimpleTestCase):
    """Тесты для θ по тяжёлому C-пути"""

    def test_unit_wheel(self):
        """Тест W_9 с единичными весами: C-пути через центр легче 2t"""
        graph = families.wheel(9)
        plane = planar_embed(graph)
        self.assertIsNone(heavy_cpath_theta(plane, ring(graph, range(1, 10)), 3))

    def test_heavy_spoke(self):
        """Тест W_9 со спицей веса t"""
        graph = families.wheel(9)
        spoke = graph.edges_between(0, 1)[0]
        graph = graph.reweighted({spoke: 3})
        cert = heavy_cpath_theta(planar_embed(graph), ring(graph, range(1, 10)), 3)
        self.assertTrue(verify_theta(graph, cert))
        self.assertEqual(cert.thresholds, (3, 3, 3))

    def test_long_cpath(self):
        """Тест кольцевой лестницы: C-путь по внутреннему циклу весом >= 2t"""
        graph = WeightedMultigraph.from_nx(nx.circular_ladder_graph(9))
        cert = heavy_cpath_theta(planar_embed(graph), ring(graph, range(9)), 3)
        self.assertTrue(verify_theta(graph, cert))

    def test_not_facial(self):
        """Тест цикла, не ограничивающего грань: центр и три вершины обода"""
        graph = families.wheel(9)
        with self.assertRaises(ValidationError) as caught:
            heavy_cpath_theta(planar_embed(graph), ring(graph, [0, 1, 2, 3]), 1)
        self.assertEqual(caught.exception.code, 'not_facial')

    def test_facial_triangle(self):
        """Тест граничного треугольника W_9: проверка проходит до длины цикла"""
        graph = families.wheel(9)
        with self.assertRaises(ValidationError) as caught:
            heavy_cpath_theta(planar_embed(graph), ring(graph, [0, 1, 2]), 2)
        self.assertEqual(caught.exception.code, 'short_cycle')

    def test_short_cycle(self):
        """Тест короткого цикла без тяжёлых рёбер"""
        graph = families.wheel(5)
        with self.assertRaises(ValidationError):
            heavy_cpath_theta(planar_embed(graph), ring(graph, range(1, 6)), 3)


class HeavyCycleTest(SimpleTestCase):
    """Тесты для цикла веса t по тяжёлому пути"""

    def test_cycle(self):
        """Тест цикла C_8, t = 4"""
        graph = families.cycle(8)
        found = heavy_cycle_and_paths(graph, 4)
        self.assertGreaterEqual(found.cycle.weight, 4)
        self.assertTrue(found.cycle.is_valid(graph))
        path = found.path_between(0, 4)
        self.assertTrue(path.is_valid(graph))
        self.assertGreaterEqual(path.weight, 2)

    def test_light_base_cycle(self):
        """Тест лёгкого цикла через концы пути: нужен участок по уху"""
        ear = [(1, 4)] + [(i, i + 1) for i in range(4, 10)] + [(10, 3)]
        graph = WeightedMultigraph.from_edges(11, [(0, 1), (1, 2), (2, 3), (3, 0)] + ear)
        path = path_from_vertices(graph, [0, 1, 4, 5, 6, 7, 8, 9, 10, 3, 2])
        found = heavy_cycle_and_paths(graph, 5, path=path)
        self.assertGreaterEqual(found.cycle.weight, 5)
        self.assertIn(4, found.cycle.vertex_set)
        for u, v in [(0, 2), (5, 9), (0, 7)]:
            self.assertGreaterEqual(found.path_between(u, v).weight * 2, 5)

    def test_light_path(self):
        """Тест слишком лёгкого пути"""
        graph = families.cycle(4)
        with self.assertRaises(ValidationError) as error:
            heavy_cycle_and_paths(graph, 5)
        self.assertEqual(error.exception.code, 'light_path')
