"""
Автотесты для приложения graphclasses
"""
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.graph import CycleWitness, WeightedMultigraph
from graphcore.planar import PlaneGraph, embed_with_facial_cycle
from graphclasses.bounds import BoundTable
from graphclasses.certificates import ClassCertificate, ClassViolation
from graphclasses.members import in_L, in_L3, in_Pr, in_Pr3, rectangles
from graphclasses.outerplanar import OuterplanarObstruction, frame_for, is_outerplanar, nearly_outerplanar
from graphclasses.small import classify_small_theta
from graphclasses.verify import verify_class


def ring_plane(graph, vertices):
    """Вложение с внешним циклом по вершинам vertices"""
    edges = [graph.edges_between(a, b)[0] for a, b in zip(vertices, vertices[1:] + vertices[:1])]
    return embed_with_facial_cycle(graph, CycleWitness.from_edges(graph, vertices[0], edges))


def wheel_plane(n, weights=None):
    graph = families.wheel(n)
    if weights:
        graph = graph.reweighted(weights)
    return ring_plane(graph, list(range(1, n + 1)))


class BoundTableTest(SimpleTestCase):
    """Тесты для замкнутых оценок"""

    def test_values(self):
        self.assertEqual(BoundTable.phi_theta_free_t(2, 3), 8)
        self.assertEqual(BoundTable.phi_theta_free_t(3, 3), 12)
        self.assertEqual(BoundTable.phi_theta_free_t(3, 4), 18)
        self.assertEqual(BoundTable.heavy_cycle_path(5), 9)
        self.assertEqual(BoundTable.small_theta_length(3), 36)
        self.assertEqual(BoundTable.cycle_sum_class(3), 72)
        self.assertEqual(BoundTable.pr3_cycle(2), 6)
        self.assertEqual(BoundTable.pr_cpath(3), 6)

    def test_as_dict(self):
        data = BoundTable.as_dict(t=3, r=2, s=3)
        self.assertEqual(data['small_theta_length'], 36)
        self.assertEqual(data['phi_theta_free_t'], 8)
        self.assertNotIn('pr3_cycle', BoundTable.as_dict(t=3))


class LClassTest(SimpleTestCase):
    """Тесты для L_{r,s} и L^3_{r,s}"""

    def test_cycle_member(self):
        result = in_L(families.cycle(4), 2, 4)
        self.assertIsInstance(result, ClassCertificate)
        self.assertEqual(result.evidence['longest_path'], 3)
        self.assertEqual(result.evidence['max_weight'], 1)

    def test_k4_long_path(self):
        result = in_L(families.complete(4), None, 3)
        self.assertIsInstance(result, ClassViolation)
        self.assertEqual(result.clause, 'long_path')
        self.assertEqual(result.witness.length, 3)

    def test_heavy_edge(self):
        graph = families.cycle(4).reweighted({0: 2})
        result = in_L(graph, 2, 10)
        self.assertEqual(result.clause, 'heavy_edge')
        self.assertEqual(result.witness, {'edge': 0, 'weight': 2})

    def test_not_2connected(self):
        self.assertEqual(in_L(families.path(4), None, 10).clause, 'not_2connected')

    def test_l3(self):
        self.assertEqual(in_L3(families.complete(5), None, 5).tag, 'L3')
        self.assertTrue(in_L3(families.complete(5), None, 5).member)
        self.assertEqual(in_L3(families.complete(4), None, 5).clause, 'small_order')
        self.assertEqual(in_L3(families.cycle(5), None, 5).clause, 'not_3connected')


class PrClassTest(SimpleTestCase):
    """Тесты для P_r, P_r^3 и прямоугольников"""

    def test_wheel_in_pr3(self):
        """Тест: колесо W_{3r} с единичными весами лежит в P_r^3"""
        result = in_Pr3(wheel_plane(6), 2)
        self.assertIsInstance(result, ClassCertificate)
        self.assertEqual(result.evidence['max_cpath'], 2)
        self.assertEqual(result.evidence['heavy_outer_edges'], [])

    def test_heavy_spoke(self):
        result = in_Pr(wheel_plane(6, {0: 2}), 2)
        self.assertEqual(result.clause, 'heavy_inner_edge')
        self.assertEqual(result.witness['edge'], 0)

    def test_planted_cpath(self):
        """Тест: C-путь веса 5 внутри C6"""
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 6), (6, 7), (7, 8), (8, 9), (9, 3)]
        graph = WeightedMultigraph.from_edges(10, edges)
        plane = ring_plane(graph, list(range(6)))
        violation = in_Pr(plane, 2)
        self.assertEqual(violation.clause, 'heavy_cpath')
        self.assertEqual(violation.witness.weight, 5)
        self.assertEqual(set(violation.witness.ends), {0, 3})
        member = in_Pr(plane, 3)
        self.assertTrue(member.member)
        self.assertEqual(member.evidence['max_cpath'], 5)

    def test_short_outer_cycle(self):
        result = in_Pr3(wheel_plane(4), 2)
        self.assertEqual(result.clause, 'short_outer_cycle')
        self.assertEqual(result.witness['length'], 4)

    def test_pr3_needs_3connected(self):
        plane = ring_plane(families.cycle(6), list(range(6)))
        self.assertEqual(in_Pr3(plane, 2).clause, 'not_3connected')

    def test_rectangles_ladder(self):
        plane = ring_plane(families.ladder(3), [0, 1, 2, 5, 4, 3])
        found = rectangles(plane)
        self.assertEqual(len(found), 2)
        self.assertEqual(sorted(sorted(face.vertices) for face in found), [[0, 1, 3, 4], [1, 2, 4, 5]])

    def test_rectangles_wheel(self):
        self.assertEqual(rectangles(wheel_plane(4)), [])

    def test_rectangle_with_parallel_edge(self):
        graph = families.with_extra_edges(families.ladder(3), [(0, 1)])
        plane = ring_plane(graph, [0, 1, 2, 5, 4, 3])
        found = rectangles(plane)
        self.assertEqual(len(found), 1)
        self.assertEqual(set(found[0].vertices), {1, 2, 4, 5})


class OuterplanarTest(SimpleTestCase):
    """Тесты для внешнепланарных и почти внешнепланарных графов"""

    def test_fan(self):
        graph = families.fan(4)
        plane = is_outerplanar(graph)
        self.assertIsInstance(plane, PlaneGraph)
        self.assertEqual(plane.outer_cycle().vertex_set, frozenset(graph.vertices))

    def test_k4_obstruction(self):
        result = is_outerplanar(families.complete(4))
        self.assertIsInstance(result, OuterplanarObstruction)
        self.assertEqual(result.kind, 'K4')
        self.assertEqual(result.edges, tuple(range(6)))

    def test_k23_obstruction(self):
        result = is_outerplanar(families.complete_bipartite(2, 3))
        self.assertIsInstance(result, OuterplanarObstruction)
        self.assertEqual(result.kind, 'K23')

    def test_not_2connected(self):
        with self.assertRaises(ValidationError) as ctx:
            is_outerplanar(families.path(3))
        self.assertEqual(ctx.exception.code, 'not_2connected')

    def test_k4_nearly_outerplanar(self):
        """Тест: у K4 одна пара пересекающихся хорд и нет свободных рёбер"""
        frame = nearly_outerplanar(families.complete(4))
        self.assertIsNotNone(frame)
        self.assertEqual(len(frame.crossings), 1)
        self.assertEqual(frame.free_edges, ())

    def test_not_nearly_outerplanar(self):
        chords = families.with_extra_edges(families.cycle(8), [(0, 4), (2, 6)])
        self.assertIsNone(nearly_outerplanar(chords))
        self.assertIsNone(nearly_outerplanar(families.complete(5)))
        self.assertIsNone(nearly_outerplanar(families.complete_bipartite(2, 3)))

    def test_frame_free_edges(self):
        """Тест: хорды 0-2 и 1-5 пересекаются, их 4-цикл 0-2-1-5 занимает рёбра 12 и 50"""
        graph = families.with_extra_edges(families.cycle(6), [(0, 2), (1, 5)])
        frame = frame_for(graph, list(range(6)))
        self.assertIsNotNone(frame)
        self.assertEqual(
            frame.free_pairs,
            frozenset({frozenset({0, 1}), frozenset({2, 3}), frozenset({3, 4}), frozenset({4, 5})}),
        )
        self.assertEqual(len(frame.free_edges), 4)

    def test_frame_rejects_far_crossing(self):
        graph = families.with_extra_edges(families.cycle(8), [(0, 4), (2, 6)])
        self.assertIsNone(frame_for(graph, list(range(8))))

    def test_frame_verified(self):
        graph = families.with_extra_edges(families.cycle(6), [(0, 2)])
        frame = nearly_outerplanar(graph)
        self.assertEqual(len(frame.free_edges), 6)
        self.assertTrue(verify_class(graph, frame.to_dict()))


class SmallThetaTest(SimpleTestCase):
    """Тесты для классификации графов без малых тета"""

    def test_cycle(self):
        outcome = classify_small_theta(families.cycle(10), '12t', 2)
        self.assertEqual(outcome.kind, 'in_class')
        self.assertEqual(outcome.certificate.tag, 'cycle')

    def test_k23_theta(self):
        outcome = classify_small_theta(families.complete_bipartite(2, 3), '22t', 2)
        self.assertEqual(outcome.kind, 'theta')
        self.assertEqual(outcome.certificate.thresholds, (2, 2, 2))

    def test_k4_neither(self):
        """Тест: K4 без θ_{2,2,3} и не внешнепланарен, l(K4) = 3 < 36"""
        outcome = classify_small_theta(families.complete(4), '22t', 3)
        self.assertEqual(outcome.kind, 'neither')
        self.assertEqual(outcome.longest, 3)
        self.assertEqual(outcome.threshold, 36)
        self.assertEqual(outcome.to_dict()['threshold'], 36)

    def test_outerplanar_member(self):
        outcome = classify_small_theta(families.fan(4), '22t', 3)
        self.assertEqual(outcome.kind, 'in_class')
        self.assertTrue(verify_class(families.fan(4), outcome.certificate.to_dict()))

    def test_cycle_sum_member(self):
        graph = families.cycle(5)
        outcome = classify_small_theta(graph, '1tt', 3)
        self.assertEqual(outcome.kind, 'in_class')
        self.assertEqual(outcome.certificate.tag, 'C')
        self.assertTrue(verify_class(graph, outcome.certificate.to_dict()))

    def test_preconditions(self):
        doubled = families.with_extra_edges(families.cycle(4), [(0, 1)])
        cases = [
            (families.cycle(5), 'xyz', 3, 'bad_variant'),
            (families.cycle(5), '1tt', 2, 'bad_t'),
            (families.path(4), '12t', 3, 'not_2connected'),
            (doubled, '12t', 3, 'not_simple'),
        ]
        for graph, variant, t, code in cases:
            with self.subTest(variant=variant, code=code):
                with self.assertRaises(ValidationError) as ctx:
                    classify_small_theta(graph, variant, t)
                self.assertEqual(ctx.exception.code, code)


class VerifyClassTest(SimpleTestCase):
    """Тесты для повторной проверки сертификатов классов"""

    def test_l_certificate(self):
        graph = families.cycle(4)
        self.assertTrue(verify_class(graph, in_L(graph, 2, 4).to_dict()))
        self.assertFalse(verify_class(families.cycle(5), in_L(graph, 2, 4).to_dict()))

    def test_pr_certificate(self):
        plane = wheel_plane(6)
        data = in_Pr3(plane, 2).to_dict()
        self.assertTrue(verify_class(plane.graph, data))

    def test_unknown_class(self):
        with self.assertRaises(ValidationError) as ctx:
            verify_class(families.cycle(4), {'kind': 'class', 'class': 'Q', 'params': {}})
        self.assertEqual(ctx.exception.code, 'bad_certificate')
