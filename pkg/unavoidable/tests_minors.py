"""
Автотесты для поиска миноров
"""
from django.test import SimpleTestCase

from graphcore import families
from graphcore.budget import Budget, BudgetExhausted
from unavoidable.minors import (
    has_wheel_minor, rooted_minor, topological_minor, verify_minor, verify_wheel_minor,
)
from unavoidable.patterns import ROOTED_EDGE, ROOTED_TRIANGLE, a1, a2, verify_pattern


class TopologicalMinorTest(SimpleTestCase):
    """Тесты для топологических миноров"""

    def test_k4_in_k5(self):
        """Тест K4 в K5"""
        graph, pattern = families.complete(5), families.complete(4)
        found = topological_minor(graph, pattern)
        self.assertIsNotNone(found)
        self.assertTrue(verify_pattern(graph, found, pattern))

    def test_k5_not_in_octahedron(self):
        """Тест: у планарного октаэдра нет подразбиения K5"""
        self.assertIsNone(topological_minor(families.octahedron(), families.complete(5)))

    def test_k5_not_in_cube(self):
        """Тест: степени куба слишком малы для K5"""
        self.assertIsNone(topological_minor(families.cube(), families.complete(5)))

    def test_k33_in_petersen(self):
        """Тест подразбиения K_{3,3} в графе Петерсена"""
        graph, pattern = families.petersen(), families.complete_bipartite(3, 3)
        found = topological_minor(graph, pattern, 'K33')
        self.assertIsNotNone(found)
        self.assertEqual(found.pattern, 'K33')
        self.assertTrue(verify_pattern(graph, found, pattern))

    def test_budget(self):
        """Тест исчерпания бюджета"""
        with self.assertRaises(BudgetExhausted):
            topological_minor(families.petersen(), families.complete_bipartite(3, 3), budget=Budget(limit=3))


class RootedMinorTest(SimpleTestCase):
    """Тесты для корневых миноров A1 и A2"""

    def roots(self):
        return {p: p for p in ROOTED_TRIANGLE}

    def test_a1_in_k5(self):
        """Тест A1 в самом K5"""
        graph = families.complete(5)
        eid = graph.edges_between(3, 4)[0]
        found = rooted_minor(graph, a1(), self.roots(), [(eid, ROOTED_EDGE['A1'])], 'A1')
        self.assertIsNotNone(found)
        self.assertTrue(verify_minor(graph, a1(), found))
        for p in ROOTED_TRIANGLE:
            self.assertIn(p, found.branch_sets[p])

    def test_facial_triangle_of_octahedron(self):
        """Тест: при граничном треугольнике октаэдра нет ни A1, ни A2"""
        graph = families.octahedron()
        eid = graph.edges_between(3, 4)[0]
        self.assertIsNone(rooted_minor(graph, a1(), self.roots(), [(eid, ROOTED_EDGE['A1'])]))
        self.assertIsNone(rooted_minor(graph, a2(), self.roots(), [(eid, ROOTED_EDGE['A2'])]))


class WheelMinorTest(SimpleTestCase):
    """Тесты для минора колеса"""

    def test_wheel(self):
        """Тест самого колеса W_6"""
        graph = families.wheel(6)
        found = has_wheel_minor(graph, 6)
        self.assertEqual(found.k, 6)
        self.assertEqual(found.hub, frozenset({0}))
        self.assertTrue(verify_wheel_minor(graph, found, 6))

    def test_prism(self):
        """Тест: в призме есть W_4, но нет W_5"""
        graph = families.prism()
        self.assertTrue(verify_wheel_minor(graph, has_wheel_minor(graph, 4), 4))
        self.assertIsNone(has_wheel_minor(graph, 5))

    def test_k4(self):
        """Тест: K4 - это W_3, но не W_4"""
        graph = families.complete(4)
        self.assertIsNotNone(has_wheel_minor(graph, 3))
        self.assertIsNone(has_wheel_minor(graph, 4))
