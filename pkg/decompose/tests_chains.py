"""
Автотесты для цепных разложений и операции S
"""
import networkx as nx
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.budget import Budget
from graphcore.connectivity import is_3connected
from graphcore.graph import WeightedMultigraph
from decompose.chains import ChainDecomposition, chain_decompose, check_chain, naive_chain_length
from decompose.stars import operation_s_tree
from decompose.sums import evaluate, random_star_recipe


def small_biconnected():
    """2-связные графы атласа с 3-5 вершинами"""
    for graph in nx.graph_atlas_g():
        if 3 <= graph.number_of_nodes() <= 5 and nx.is_biconnected(graph):
            yield WeightedMultigraph.from_nx(graph)


class ChainDecomposeTest(SimpleTestCase):
    """Тесты для a(G, e) и цепного разложения"""

    def test_parallel(self):
        """Тест двух параллельных рёбер: a = 0"""
        result = chain_decompose(families.parallel([1, 1]), 0)
        self.assertEqual(result.length, 0)
        self.assertTrue(result.exact)

    def test_k4(self):
        """Тест 3-связного графа: a = 0"""
        self.assertEqual(chain_decompose(families.complete(4), 0).length, 0)

    def test_c6(self):
        """Тест C6: вложенные дуги из 2, 3 и 4 рёбер"""
        graph = families.cycle(6)
        result = chain_decompose(graph, 0)
        self.assertEqual(result.length, 3)
        self.assertTrue(check_chain(graph, 0, result.chain))

    def test_atlas_against_naive(self):
        """Тест всех малых 2-связных графов против перебора подмножеств рёбер"""
        for graph in small_biconnected():
            for eid in graph.edge_ids:
                result = chain_decompose(graph, eid)
                self.assertEqual(result.length, naive_chain_length(graph, eid), graph.to_dict())
                self.assertTrue(check_chain(graph, eid, result.chain))

    def test_six_vertices_against_naive(self):
        """Тест лестницы, θ-графа и K_{2,4} против перебора"""
        for graph in (families.ladder(3), families.theta(2, 2, 3), families.complete_bipartite(2, 4)):
            for eid in graph.edge_ids:
                result = chain_decompose(graph, eid)
                self.assertEqual(result.length, naive_chain_length(graph, eid))
                self.assertTrue(check_chain(graph, eid, result.chain))

    def test_tampered_chain(self):
        """Тест проверки: переставленные части не образуют цепь"""
        graph = families.cycle(6)
        chain = chain_decompose(graph, 0).chain
        broken = ChainDecomposition(chain.edge, chain.parts[::-1], chain.pairs)
        self.assertFalse(check_chain(graph, 0, broken))

    def test_round_trip_dict(self):
        """Тест сериализации цепи"""
        graph = families.ladder(3)
        chain = chain_decompose(graph, 1).chain
        self.assertTrue(check_chain(graph, 1, ChainDecomposition.from_dict(chain.to_dict())))

    def test_budget(self):
        """Тест исчерпания бюджета: нижняя оценка"""
        graph = families.ladder(4)
        result = chain_decompose(graph, 1, Budget(limit=5))
        self.assertFalse(result.exact)
        self.assertLessEqual(result.length, chain_decompose(graph, 1).length)
        self.assertTrue(check_chain(graph, 1, result.chain))

    def test_not_2connected(self):
        """Тест пути"""
        with self.assertRaises(ValidationError) as error:
            chain_decompose(families.path(3), 0)
        self.assertEqual(error.exception.code, 'not_2connected')


class OperationSTest(SimpleTestCase):
    """Тесты для итераций операции S"""

    def check(self, graph, eid):
        result = operation_s_tree(graph, eid)
        self.assertTrue(evaluate(result.recipe).same_as(graph))
        for node in result.recipe.nodes():
            if not node.children:
                self.assertTrue(node.graph.order <= 3 or is_3connected(node.graph))
        self.assertLessEqual(result.iterations, result.chain_length + 1)
        return result

    def test_k4(self):
        """Тест K4: ни одной итерации"""
        result = self.check(families.complete(4), 0)
        self.assertEqual((result.depth, result.iterations), (1, 0))

    def test_theta(self):
        """Тест θ_{2,2,2}"""
        result = self.check(families.theta(2, 2, 2), 0)
        self.assertEqual(result.iterations, 1)

    def test_long_cycle(self):
        """Тест C8: число итераций растёт с длиной цепи"""
        result = self.check(families.cycle(8), 0)
        self.assertGreaterEqual(result.chain_length, result.iterations - 1)

    def test_random_recipes(self):
        """Тест графов случайных рецептов"""
        for seed in range(8):
            graph = evaluate(random_star_recipe(seed))
            self.check(graph, graph.edge_ids[0])
