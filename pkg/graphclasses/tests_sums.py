"""
Автотесты для приложения graphclasses: классы сумм C(L_n), O_n и Φ
"""
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.connectivity import is_2connected
from graphcore.graph import CycleWitness, WeightedMultigraph
from graphcore.planar import embed_with_facial_cycle, planar_embed
from decompose.sums import Gluing, SumRecipe, evaluate
from graphclasses.bounds import BoundTable
from graphclasses.cyclesums import in_cycle_sum, in_o_class, random_cycle_sum, random_o_member
from graphclasses.members import in_Pr
from graphclasses.phi import build_phi, build_phi3, heavy_edge_gadget, merge_case_b, random_phi
from graphclasses.verify import verify_class
from theta.search import contains_theta


def ring_plane(graph, vertices):
    edges = [graph.edges_between(a, b)[0] for a, b in zip(vertices, vertices[1:] + vertices[:1])]
    return embed_with_facial_cycle(graph, CycleWitness.from_edges(graph, vertices[0], edges))


def doubled_cycle(n):
    pairs = [(i, (i + 1) % n) for i in range(n)]
    return WeightedMultigraph.from_edges(n, pairs + pairs)


def face_gluing(plane, vertex_set, child):
    """Склейка ребёнка по внутренней грани с вершинами vertex_set; цикл ребёнка 0, 1, ..."""
    face = next(f for f in plane.inner_faces if set(f.vertices) == set(vertex_set))
    k = face.length
    ring = list(range(k))
    child_glue = tuple(child.edges_between(a, b)[0] for a, b in zip(ring, ring[1:] + ring[:1]))
    return Gluing(SumRecipe(child), face.edges, child_glue, tuple(zip(ring, face.vertices)))


class CycleSumTest(SimpleTestCase):
    """Тесты для C(L_n)"""

    def test_k4(self):
        """Тест: K4 без 2-разрезов лежит в C(L_4), но не в C(L_3)"""
        self.assertEqual(in_cycle_sum(families.complete(4), 3).clause, 'no_decomposition')
        self.assertTrue(in_cycle_sum(families.complete(4), 4).member)

    def test_subdivided_cycle(self):
        graph = families.with_extra_edges(families.cycle(6), [(0, 1), (2, 3)])
        result = in_cycle_sum(graph, 2)
        self.assertTrue(result.member)
        self.assertTrue(evaluate(result.witness).same_as(graph))
        self.assertTrue(verify_class(graph, result.to_dict()))

    def test_not_2connected(self):
        self.assertEqual(in_cycle_sum(families.path(4), 3).clause, 'not_2connected')

    def test_generated_members(self):
        """Тест: сгенерированные члены C(L_3) распознаются и не содержат θ_{1,3,3}"""
        for seed in range(4):
            with self.subTest(seed=seed):
                graph, recipe = random_cycle_sum(3, 5, seed)
                self.assertTrue(evaluate(recipe).same_as(graph))
                self.assertTrue(in_cycle_sum(graph, 3).member)
                self.assertIsNone(contains_theta(graph, 1, 3, 3))

    def test_generator_deterministic(self):
        first, _ = random_cycle_sum(4, 6, 11)
        second, _ = random_cycle_sum(4, 6, 11)
        self.assertTrue(first.same_as(second))


class OClassTest(SimpleTestCase):
    """Тесты для O_n"""

    def test_k4_base(self):
        """Тест: K4 почти внешнепланарен и сам является базой"""
        result = in_o_class(families.complete(4), 3)
        self.assertTrue(result.member)
        self.assertEqual(result.witness.children, ())
        self.assertTrue(verify_class(families.complete(4), result.to_dict()))

    def test_k5(self):
        self.assertEqual(in_o_class(families.complete(5), 4).clause, 'no_decomposition')

    def test_generated_members(self):
        """Тест: сгенерированные члены O_3 распознаются и не содержат θ_{2,3,3}"""
        for seed in range(3):
            with self.subTest(seed=seed):
                graph, _ = random_o_member(3, 5, seed)
                self.assertTrue(in_o_class(graph, 3).member)
                self.assertIsNone(contains_theta(graph, 2, 3, 3))


class BuildPhiTest(SimpleTestCase):
    """Тесты для проверки рецептов Φ и Φ³"""

    def wheel9(self):
        return ring_plane(families.wheel(9), list(range(1, 10)))

    def test_triangle_summand(self):
        """Тест: W9 (r=3) и треугольник с двойными рёбрами на внутренней грани"""
        plane = self.wheel9()
        gluing = face_gluing(plane, {0, 1, 2}, doubled_cycle(3))
        member = build_phi(plane, SumRecipe(plane.graph, (gluing,)), 3, 3)
        self.assertEqual(member.graph.order, 10)
        self.assertEqual(member.graph.size, 18)
        again = build_phi(member.plane, member.recipe, 3, 3)
        self.assertTrue(again.graph.same_as(member.graph))
        self.assertEqual(member.certificate().tag, 'Phi')
        self.assertTrue(verify_class(member.graph, member.certificate().to_dict()))
        self.assertFalse(verify_class(families.wheel(9), member.certificate().to_dict()))

    def test_outer_face_glue(self):
        plane = planar_embed(families.complete(4))
        face = plane.outer_face
        child = doubled_cycle(3)
        glue = tuple(child.edges_between(a, b)[0] for a, b in ((0, 1), (1, 2), (2, 0)))
        gluing = Gluing(SumRecipe(child), face.edges, glue, tuple(zip(range(3), face.vertices)))
        with self.assertRaises(ValidationError) as ctx:
            build_phi(plane, SumRecipe(plane.graph, (gluing,)), 2, 3)
        self.assertEqual(ctx.exception.code, 'outer_face_glue')

    def test_not_rectangle(self):
        """Тест: внутренняя 4-грань из хорд C8 не является прямоугольником"""
        graph = families.with_extra_edges(families.cycle(8), [(0, 2), (2, 4), (4, 6), (6, 0)])
        plane = ring_plane(graph, list(range(8)))
        gluing = face_gluing(plane, {0, 2, 4, 6}, doubled_cycle(4))
        with self.assertRaises(ValidationError) as ctx:
            build_phi(plane, SumRecipe(graph, (gluing,)), 2, 4)
        self.assertEqual(ctx.exception.code, 'not_rectangle')

    def test_rectangle(self):
        plane = ring_plane(families.ladder(3), [0, 1, 2, 5, 4, 3])
        gluing = face_gluing(plane, {0, 1, 3, 4}, doubled_cycle(4))
        member = build_phi(plane, SumRecipe(plane.graph, (gluing,)), 2, 4)
        self.assertEqual(member.recipe.children[0].k, 4)

    def test_summand_not_l(self):
        plane = self.wheel9()
        gluing = face_gluing(plane, {0, 1, 2}, families.complete(4))
        with self.assertRaises(ValidationError) as ctx:
            build_phi(plane, SumRecipe(plane.graph, (gluing,)), 3, 3)
        self.assertEqual(ctx.exception.code, 'summand_not_l')

    def test_root_not_pr(self):
        graph = families.wheel(4).reweighted({0: 5})
        plane = ring_plane(graph, [1, 2, 3, 4])
        with self.assertRaises(ValidationError) as ctx:
            build_phi(plane, SumRecipe(graph), 2, 3)
        self.assertEqual(ctx.exception.code, 'root_not_pr')

    def test_plane_mismatch(self):
        with self.assertRaises(ValidationError) as ctx:
            build_phi(self.wheel9(), SumRecipe(families.cycle(4)), 3, 3)
        self.assertEqual(ctx.exception.code, 'plane_mismatch')

    def test_phi3(self):
        """Тест: W6 (r=2) и K5 на внутреннем треугольнике дают член Φ³"""
        plane = ring_plane(families.wheel(6), list(range(1, 7)))
        gluing = face_gluing(plane, {0, 1, 2}, families.complete(5))
        member = build_phi3(plane, SumRecipe(plane.graph, (gluing,)), 2, 5)
        self.assertEqual(member.tag, 'Phi3')
        self.assertEqual(member.graph.order, 9)

    def test_phi3_rejects_2sum(self):
        plane = ring_plane(families.wheel(6), list(range(1, 7)))
        child = families.parallel([1, 1])
        gluing = Gluing(SumRecipe(child), (6,), (0,), ((0, 1), (1, 2)))
        with self.assertRaises(ValidationError) as ctx:
            build_phi3(plane, SumRecipe(plane.graph, (gluing,)), 2, 5)
        self.assertEqual(ctx.exception.code, 'not_3sum')


class RandomPhiTest(SimpleTestCase):
    """Тесты для генератора членов Φ"""

    def test_valid_members(self):
        for seed in range(10):
            with self.subTest(seed=seed):
                member = random_phi(2, 3, 6, seed)
                self.assertTrue(member.graph.same_as(evaluate(member.recipe)))
                self.assertTrue(in_Pr(member.plane, 2).member)

    def test_deterministic(self):
        first = random_phi(3, 4, 8, 7)
        second = random_phi(3, 4, 8, 7)
        self.assertTrue(first.graph.same_as(second.graph))
        self.assertEqual(first.recipe.to_dict(), second.recipe.to_dict())

    def test_theta_free(self):
        """Тест: члены Φ(L_{2,3}, P_2) не содержат θ_{8,8,8}"""
        t = BoundTable.phi_theta_free_t(2, 3)
        for seed in range(3):
            with self.subTest(seed=seed):
                self.assertIsNone(contains_theta(random_phi(2, 3, 5, seed).graph, t, t, t))

    def test_members_stay_2connected(self):
        """Тест r=3, s=4: K_4 на гранях-ушах не рвёт 2-связность суммы"""
        for seed in range(60):
            with self.subTest(seed=seed):
                member = random_phi(3, 4, 6, seed)
                self.assertTrue(is_2connected(member.graph))
                self.assertTrue(verify_class(member.graph, member.certificate().to_dict()))

    def test_k4_on_ear_breaks_sum(self):
        """Тест: K_4 на треугольнике с двумя рёбрами внешнего цикла оставляет вершину степени 1"""
        graph = families.with_extra_edges(families.cycle(4), [(0, 2)])
        plane = ring_plane(graph, [0, 1, 2, 3])
        gluing = face_gluing(plane, {0, 1, 2}, families.complete(4))
        with self.assertRaises(ValidationError) as ctx:
            build_phi(plane, SumRecipe(graph, (gluing,)), 3, 4)
        self.assertEqual(ctx.exception.code, 'not_2connected')

    def test_bad_parameters(self):
        with self.assertRaises(ValidationError) as ctx:
            random_phi(1, 3, 5, 0)
        self.assertEqual(ctx.exception.code, 'bad_parameters')


class HeavyEdgeGadgetTest(SimpleTestCase):
    """Тесты для разложений с двумя тяжёлыми рёбрами"""

    def test_parallel(self):
        graph = WeightedMultigraph.from_edges(4, [(0, 1, 5), (0, 1, 5), (1, 2), (2, 3), (3, 0)])
        recipe, plane = heavy_edge_gadget(graph, 3)
        self.assertEqual(recipe.children[0].k, 2)
        self.assertTrue(evaluate(recipe).same_as(graph))
        self.assertTrue(in_Pr(plane, 3).member)

    def test_adjacent(self):
        graph = families.wheel(4).reweighted({0: 5, 1: 5})
        recipe, plane = heavy_edge_gadget(graph, 3)
        self.assertEqual(recipe.children[0].k, 3)
        self.assertTrue(evaluate(recipe).same_as(graph))
        self.assertTrue(in_Pr(plane, 3).member)

    def test_nonadjacent(self):
        graph = families.cycle(6)
        heavy = {graph.edges_between(0, 1)[0]: 4, graph.edges_between(3, 4)[0]: 4}
        graph = graph.reweighted(heavy)
        recipe, plane = heavy_edge_gadget(graph, 3)
        self.assertEqual(recipe.children[0].k, 4)
        self.assertTrue(evaluate(recipe).same_as(graph))
        self.assertTrue(in_Pr(plane, 3).member)

    def test_bad_heavy_edges(self):
        with self.assertRaises(ValidationError) as ctx:
            heavy_edge_gadget(families.cycle(4), 2)
        self.assertEqual(ctx.exception.code, 'bad_heavy_edges')


class MergeTest(SimpleTestCase):
    """Тесты для 2-суммы двух членов Φ по виртуальным рёбрам"""

    def member(self):
        plane = ring_plane(families.wheel(4), [1, 2, 3, 4])
        return build_phi(plane, SumRecipe(plane.graph), 2, 3)

    def test_merge(self):
        merged = merge_case_b(self.member(), self.member(), 4, 4)
        self.assertEqual(merged.graph.order, 8)
        self.assertEqual(merged.graph.size, 14)
        self.assertEqual(merged.plane.outer_cycle().length, 6)

    def test_not_outer(self):
        with self.assertRaises(ValidationError) as ctx:
            merge_case_b(self.member(), self.member(), 0, 4)
        self.assertEqual(ctx.exception.code, 'virtual_edge_not_outer')
