"""
Автотесты для приложения omega
"""
from itertools import combinations

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.graph import CycleWitness, WeightedMultigraph
from graphcore.paths import path_from_vertices
from decompose.sums import evaluate
from omega.circlets import Circlet, find_omega_cycle, is_omega_cycle, validate_circlet
from omega.crosses import (
    CrossCertificate, Tripod, cross_or_small_separation, cross_search, tripod_search, verify_cross,
    verify_tripod,
)
from omega.dichotomy import omega_facial_or_cross, omega_facial_or_cross_edges, tri_ext
from omega.relative import is_4connected_rel
from unavoidable.minors import verify_minor
from unavoidable.patterns import a1, a2


def cycle_through(graph, vertices):
    edges = [graph.edges_between(a, b)[0] for a, b in zip(vertices, vertices[1:] + vertices[:1])]
    return CycleWitness.from_edges(graph, vertices[0], edges)


def two_k5():
    pairs = set(combinations(range(5), 2)) | set(combinations(range(2, 7), 2))
    pairs -= set(combinations(range(2, 5), 2))
    return WeightedMultigraph.from_edges(7, sorted(pairs))


def tripod_gadget():
    """C6 на 0..5, центры 6 и 7, пути через 8, 9, 10 и ноги к 0, 2, 4"""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(6, 8), (8, 7), (6, 9), (9, 7), (6, 10), (10, 7), (8, 0), (9, 2), (10, 4)]
    return WeightedMultigraph.from_edges(11, edges)


class CircletTest(SimpleTestCase):
    """Тесты для циклетов и Ω-циклов"""

    def test_parse(self):
        circlet = Circlet.parse('0,1,2,3;4,5')
        self.assertEqual(circlet.vertices, (0, 1, 2, 3))
        self.assertEqual(circlet.edges, frozenset({4, 5}))
        self.assertEqual(Circlet.parse('3, 2, 1, 0').edges, frozenset())

    def test_parse_bad(self):
        with self.assertRaises(ValidationError) as ctx:
            Circlet.parse('a,b,c')
        self.assertEqual(ctx.exception.code, 'bad_circlet')

    def test_validate(self):
        """Тест проверки: мало вершин, повторы, ребро не между соседями"""
        graph = families.complete(4)
        for circlet in (
            Circlet((0, 1, 2)),
            Circlet((0, 1, 1, 2)),
            Circlet((0, 1, 2, 3), frozenset({1})),
            Circlet((0, 1, 2, 7)),
        ):
            with self.assertRaises(ValidationError) as ctx:
                validate_circlet(graph, circlet)
            self.assertEqual(ctx.exception.code, 'bad_circlet')

    def test_c6(self):
        graph = families.cycle(6)
        circlet = Circlet((0, 2, 3, 5))
        found = find_omega_cycle(graph, circlet)
        self.assertEqual(found.vertices, (0, 1, 2, 3, 4, 5))
        self.assertTrue(is_omega_cycle(graph, circlet, found))
        self.assertFalse(is_omega_cycle(graph, Circlet((0, 3, 2, 5)), found))

    def test_k4(self):
        graph = families.complete(4)
        found = find_omega_cycle(graph, Circlet((0, 1, 2, 3)))
        self.assertEqual(found.vertices, (0, 1, 2, 3))

    def test_theta_has_none(self):
        """Тест θ_{2,2,2}: вершины 2 и 3 не соединить в обход остальных"""
        self.assertIsNone(find_omega_cycle(families.theta(2, 2, 2), Circlet((0, 1, 2, 3))))


class CrossTest(SimpleTestCase):
    """Тесты для крестов"""

    def test_k4(self):
        graph = families.complete(4)
        cycle = cycle_through(graph, [0, 1, 2, 3])
        cross = cross_search(graph, cycle)
        self.assertIsNotNone(cross)
        self.assertEqual(cross.ends, (0, 1, 2, 3))
        self.assertTrue(verify_cross(graph, cross))
        self.assertTrue(verify_cross(graph, CrossCertificate.from_dict(cross.to_dict())))

    def test_facial_cycle_has_none(self):
        """Тест грани куба: креста нет"""
        graph = families.cube()
        self.assertIsNone(cross_search(graph, cycle_through(graph, [0, 1, 3, 2])))

    def test_tampered(self):
        graph = families.complete(4)
        cycle = cycle_through(graph, [0, 1, 2, 3])
        cross = cross_search(graph, cycle)
        broken = CrossCertificate(cycle, cross.path1, cross.path1)
        self.assertFalse(verify_cross(graph, broken))

    def test_bad_form(self):
        graph = families.complete(4)
        cycle = cycle_through(graph, [0, 1, 2, 3])
        with self.assertRaises(ValidationError) as ctx:
            cross_search(graph, cycle, form='zigzag')
        self.assertEqual(ctx.exception.code, 'bad_form')


class TripodTest(SimpleTestCase):
    """Тесты для триподов"""

    def test_k6(self):
        graph = families.complete(6)
        cycle = cycle_through(graph, [0, 1, 2, 3])
        tripod = tripod_search(graph, cycle)
        self.assertIsNotNone(tripod)
        self.assertEqual({tripod.u, tripod.v}, {4, 5})
        self.assertTrue(verify_tripod(graph, cycle, tripod))
        found = cross_or_small_separation(graph, cycle, tripod)
        self.assertIsInstance(found, CrossCertificate)
        self.assertTrue(verify_cross(graph, found))

    def test_gadget_separation(self):
        """Тест трипода без креста: разделение по ногам 0, 2, 4"""
        graph = tripod_gadget()
        cycle = cycle_through(graph, [0, 1, 2, 3, 4, 5])
        tripod = Tripod(
            6, 7,
            tuple(path_from_vertices(graph, [6, m, 7]) for m in (8, 9, 10)),
            tuple(path_from_vertices(graph, leg) for leg in ([8, 0], [9, 2], [10, 4])),
        )
        self.assertTrue(verify_tripod(graph, cycle, tripod))
        self.assertEqual(Tripod.from_dict(tripod.to_dict()), tripod)
        self.assertIsNone(cross_search(graph, cycle))
        found = cross_or_small_separation(graph, cycle, tripod)
        self.assertEqual(found.cut, frozenset({0, 2, 4}))
        self.assertEqual(found.side2, frozenset({6, 7, 8, 9, 10}))
        self.assertTrue(found.is_valid(graph))

    def test_gadget_search(self):
        graph = tripod_gadget()
        cycle = cycle_through(graph, [0, 1, 2, 3, 4, 5])
        tripod = tripod_search(graph, cycle)
        self.assertTrue(verify_tripod(graph, cycle, tripod))

    def test_short_cycle(self):
        graph = families.complete(6)
        cycle = cycle_through(graph, [0, 1, 2])
        tripod = Tripod(3, 4, (), ())
        with self.assertRaises(ValidationError) as ctx:
            cross_or_small_separation(graph, cycle, tripod)
        self.assertEqual(ctx.exception.code, 'short_cycle')


class OmegaDichotomyTest(SimpleTestCase):
    """Тесты для выбора между граничным Ω-циклом и крестом"""

    def test_k4_cross(self):
        graph = families.complete(4)
        outcome = omega_facial_or_cross(graph, Circlet((0, 1, 2, 3)))
        self.assertEqual(outcome.kind, 'cross')
        self.assertTrue(verify_cross(graph, outcome.cross))
        self.assertEqual(outcome.to_dict()['outcome'], 'cross')

    def test_cube_facial(self):
        graph = families.cube()
        face = cycle_through(graph, [0, 1, 3, 2])
        outcome = omega_facial_or_cross(graph, Circlet((0, 1, 3, 2), face.edge_set))
        self.assertEqual(outcome.kind, 'facial')
        self.assertEqual(outcome.cycle.edge_set, face.edge_set)
        self.assertTrue(outcome.plane.is_facial(face.edge_set))

    def test_prism_cross(self):
        """Тест гамильтонова Ω-цикла призмы: хорды 0-2 и 1-4 пересекаются"""
        graph = families.prism()
        outcome = omega_facial_or_cross(graph, Circlet((0, 1, 2, 5, 4, 3)))
        self.assertEqual(outcome.kind, 'cross')
        self.assertTrue(verify_cross(graph, outcome.cross))

    def test_edges_form(self):
        graph = families.complete(4)
        ids = frozenset(graph.edges_between(a, b)[0] for a, b in ((0, 1), (1, 2), (2, 3)))
        outcome = omega_facial_or_cross_edges(graph, Circlet((0, 1, 2, 3), ids))
        self.assertEqual(outcome.kind, 'cross')
        self.assertEqual(outcome.cross.form, 'edges')
        self.assertTrue(verify_cross(graph, outcome.cross))

    def test_edges_form_preconditions(self):
        graph = families.complete(4)
        e01, e12 = graph.edges_between(0, 1)[0], graph.edges_between(1, 2)[0]
        e23 = graph.edges_between(2, 3)[0]
        with self.assertRaises(ValidationError) as ctx:
            omega_facial_or_cross_edges(graph, Circlet((0, 1, 2, 3), frozenset({e01})))
        self.assertEqual(ctx.exception.code, 'isolated_vertex')
        with self.assertRaises(ValidationError) as ctx:
            omega_facial_or_cross_edges(graph, Circlet((0, 1, 2, 3), frozenset({e01, e23})))
        self.assertEqual(ctx.exception.code, 'few_edges')
        self.assertEqual(
            omega_facial_or_cross_edges(graph, Circlet((0, 1, 2, 3), frozenset({e01, e12, e23}))).kind,
            'cross',
        )

    def test_not_4connected(self):
        outcome = omega_facial_or_cross(two_k5(), Circlet((0, 1, 2, 3)))
        self.assertEqual(outcome.kind, 'hypothesis')
        self.assertEqual(outcome.reason, 'not_4connected')
        self.assertEqual(outcome.separation.cut, frozenset({2, 3, 4}))

    def test_no_omega_cycle(self):
        outcome = omega_facial_or_cross(families.theta(2, 2, 2), Circlet((0, 1, 2, 3)))
        self.assertEqual((outcome.kind, outcome.reason), ('hypothesis', 'no_omega_cycle'))

    def test_small_sweep(self):
        """Тест на K5 и октаэдре: результат всегда проверяется"""
        for graph, vertices in ((families.complete(5), (0, 1, 2, 3)), (families.octahedron(), (0, 1, 5, 4))):
            outcome = omega_facial_or_cross(graph, Circlet(vertices))
            self.assertIn(outcome.kind, ('facial', 'cross'))
            if outcome.kind == 'cross':
                self.assertTrue(verify_cross(graph, outcome.cross))
            else:
                self.assertTrue(outcome.plane.is_facial(outcome.cycle.edge_set))


class RelativeConnectivityTest(SimpleTestCase):
    """Тесты для относительной 4-связности"""

    def test_k5(self):
        self.assertTrue(is_4connected_rel(families.complete(5), {0, 1, 2}))

    def test_two_k5(self):
        self.assertFalse(is_4connected_rel(two_k5(), {0, 1, 2, 3}))

    def test_not_3connected(self):
        with self.assertRaises(ValidationError) as ctx:
            is_4connected_rel(families.cycle(5), {0, 1})
        self.assertEqual(ctx.exception.code, 'not_3connected')


class TriExtTest(SimpleTestCase):
    """Тесты для разложения вокруг треугольника с ребром"""

    def test_k4_recipe(self):
        graph = families.complete(4)
        found = tri_ext(graph, (0, 1, 2), graph.edges_between(0, 3)[0])
        self.assertEqual(found.kind, 'recipe')
        self.assertEqual(found.recipe.k, 0)
        self.assertIsNotNone(found.plane)

    def test_prism_recipe(self):
        graph = families.prism()
        found = tri_ext(graph, (0, 1, 2), graph.edges_between(3, 4)[0])
        self.assertEqual(found.kind, 'recipe')
        self.assertEqual(found.recipe.k, 1)
        self.assertTrue(evaluate(found.recipe).same_as(graph))
        self.assertEqual(found.to_dict()['outcome'], 'recipe')

    def test_k5_minor(self):
        graph = families.complete(5)
        found = tri_ext(graph, (0, 1, 2), graph.edges_between(3, 4)[0])
        self.assertEqual(found.kind, 'minor')
        self.assertEqual(found.minor.pattern, 'A1')
        self.assertTrue(verify_minor(graph, a1(), found.minor))

    def test_octahedron(self):
        graph = families.octahedron()
        found = tri_ext(graph, (0, 1, 2), graph.edges_between(3, 4)[0])
        if found.kind == 'minor':
            pattern = a1() if found.minor.pattern == 'A1' else a2()
            self.assertTrue(verify_minor(graph, pattern, found.minor))
        else:
            self.assertTrue(evaluate(found.recipe).same_as(graph))
            self.assertIsNotNone(found.plane)

    def test_errors(self):
        k4 = families.complete(4)
        cases = (
            (families.cycle(5), (0, 1, 2), 0, 'not_3connected'),
            (families.cube(), (0, 1, 2), 0, 'not_a_triangle'),
            (k4, (0, 1, 2), k4.edges_between(0, 1)[0], 'bad_edge'),
            (k4, (0, 1, 2), 99, 'bad_edge'),
        )
        for graph, triangle, eid, code in cases:
            with self.assertRaises(ValidationError) as ctx:
                tri_ext(graph, triangle, eid)
            self.assertEqual(ctx.exception.code, code)
