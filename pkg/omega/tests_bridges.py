"""
Автотесты для нормализации мостов подразбиения
"""
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.graph import WeightedMultigraph
from graphcore.paths import path_from_vertices
from omega.bridges import (
    RerouteStep, Subdivision, alpha, normalize_bridges, unstable_bridges,
)


def reroute_example():
    """Треугольник 0-1-2, ветвь 0-3-4-1 и мост через 5 с ногами 0, 3, 4"""
    edges = [(0, 2), (1, 2), (0, 3), (3, 4), (4, 1), (5, 0), (5, 3), (5, 4), (4, 2), (3, 2)]
    graph = WeightedMultigraph.from_edges(6, edges)
    subdivision = Subdivision(
        (0, 1, 2),
        tuple(path_from_vertices(graph, p) for p in ([0, 3, 4, 1], [0, 2], [1, 2])),
    )
    return graph, subdivision


class NormalizeBridgesTest(SimpleTestCase):
    """Тесты для перекладки ветвей"""

    def test_reroute(self):
        graph, subdivision = reroute_example()
        self.assertTrue(subdivision.is_valid(graph))
        unstable = unstable_bridges(graph, subdivision)
        self.assertEqual([i for i, _ in unstable], [0])
        self.assertEqual(unstable[0][1].interior, frozenset({5}))

        result = normalize_bridges(graph, subdivision)
        self.assertEqual(result.steps, (RerouteStep(0, (2, 3), (5,)),))
        self.assertEqual(result.subdivision.branches[0].vertices, (0, 5, 4, 1))
        self.assertEqual(result.subdivision.branches[1:], subdivision.branches[1:])
        self.assertTrue(result.subdivision.is_valid(graph))
        self.assertEqual(unstable_bridges(graph, result.subdivision), [])

    def test_alpha(self):
        graph, subdivision = reroute_example()
        rest = subdivision.host(graph, skip=0)
        self.assertEqual(alpha(graph, rest, subdivision.branches[0]), (2, 3))
        self.assertEqual(alpha(graph, rest, path_from_vertices(graph, [0, 3, 5, 4, 1])), (2, 1, 1))

    def test_stable_wheel(self):
        """Тест W6 с подразбиением K4 на центре и вершинах 1, 3, 5: ничего не меняется"""
        graph = families.wheel(6)
        branches = [[0, 1], [0, 3], [0, 5], [1, 2, 3], [3, 4, 5], [5, 6, 1]]
        subdivision = Subdivision((0, 1, 3, 5), tuple(path_from_vertices(graph, p) for p in branches))
        result = normalize_bridges(graph, subdivision)
        self.assertEqual(result.steps, ())
        self.assertEqual(result.subdivision, subdivision)
        self.assertEqual(Subdivision.from_dict(subdivision.to_dict()), subdivision)

    def test_errors(self):
        c6 = families.cycle(6)
        c6_sub = Subdivision(
            (0, 2, 4),
            tuple(path_from_vertices(c6, p) for p in ([0, 1, 2], [2, 3, 4], [4, 5, 0])),
        )
        cases = (
            (families.parallel((1, 1)), Subdivision((0, 1), ()), 'not_simple'),
            (c6, Subdivision((0, 3), ()), 'small_pattern'),
            (c6, Subdivision((0, 2, 4), c6_sub.branches[:1] * 3), 'bad_subdivision'),
            (c6, c6_sub, 'small_separation'),
        )
        for graph, subdivision, code in cases:
            with self.assertRaises(ValidationError) as ctx:
                normalize_bridges(graph, subdivision)
            self.assertEqual(ctx.exception.code, code)
