"""
Автотесты для приложения graphcore
"""
from itertools import combinations, permutations, product

import networkx as nx
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.budget import Budget, BudgetExhausted
from graphcore.connectivity import (
    bridges_of, enumerate_separations, is_2connected, is_3connected,
)
from graphcore.graph import CycleWitness, PathWitness, WeightedMultigraph, simplify
from graphcore.io import format_graph, parse_graph
from graphcore.paths import iter_cycles, longest_path, max_xy_path, suppress_degree_two
from graphcore.planar import (
    KuratowskiWitness, PlaneGraph, embed_with_facial_cycle, planar_embed, trace_faces,
)


def naive_separations(graph, k_max):
    """Все (разрез, {A, B}) перебором присваиваний вершин"""
    found = set()
    vertices = graph.vertices
    for labels in product((0, 1, 2), repeat=len(vertices)):
        cut = frozenset(v for v, s in zip(vertices, labels) if s == 2)
        side_a = frozenset(v for v, s in zip(vertices, labels) if s == 0)
        side_b = frozenset(v for v, s in zip(vertices, labels) if s == 1)
        if not cut or len(cut) > k_max or not side_a or not side_b:
            continue
        if any(e.ends & side_a and e.ends & side_b for e in graph.edges):
            continue
        found.add((cut, frozenset((side_a, side_b))))
    return found


def brute_force_embeddings(graph):
    """Все планарные системы вращений малого графа"""
    choices = []
    for v in graph.vertices:
        ring = list(graph.incident(v))
        if len(ring) <= 2:
            choices.append([ring])
        else:
            choices.append([[ring[0]] + list(p) for p in permutations(ring[1:])])
    for combo in product(*choices):
        rotation = dict(zip(graph.vertices, combo))
        faces = trace_faces(graph, rotation)
        if graph.order - graph.size + len(faces) == 2:
            yield faces


class SimplifyTest(SimpleTestCase):
    """Тесты для простого графа si(G)"""

    def test_triple_edge(self):
        """Тест тройного ребра: остаётся самое тяжёлое"""
        graph = families.parallel([1, 5, 2])
        result = simplify(graph)
        self.assertEqual(result.graph.size, 1)
        self.assertEqual(result.graph.edges[0].weight, 5)
        self.assertEqual(len(result.families[1]), 3)

    def test_simple_graph_identity(self):
        """Тест простого графа: отображение тождественное"""
        graph = families.theta(2, 2, 2)
        result = simplify(graph)
        self.assertEqual(result.graph.edge_ids, graph.edge_ids)
        self.assertTrue(all(result.families[eid] == (eid,) for eid in graph.edge_ids))

    def test_loop_rejected(self):
        """Тест запрета петель"""
        with self.assertRaises(ValidationError):
            WeightedMultigraph.from_edges(2, [(0, 0)])

    def test_bad_weight_rejected(self):
        """Тест запрета нулевого веса"""
        with self.assertRaises(ValidationError):
            WeightedMultigraph.from_edges(2, [(0, 1, 0)])


class ConnectivityTest(SimpleTestCase):
    """Тесты для 2- и 3-связности мультиграфов"""

    def test_two_parallel_edges(self):
        """Тест: две вершины и два параллельных ребра 2-связны"""
        self.assertTrue(is_2connected(families.parallel([1, 1])))
        self.assertFalse(is_2connected(families.parallel([1])))

    def test_k4_with_doubled_spoke(self):
        """Тест: K4 с удвоенным ребром 3-связен"""
        graph = families.with_extra_edges(families.complete(4), [(0, 1)])
        self.assertTrue(is_3connected(graph))

    def test_path_not_2connected(self):
        """Тест: путь P3 не 2-связен"""
        self.assertFalse(is_2connected(families.path(3)))

    def test_cycle_not_3connected(self):
        """Тест: цикл 2-связен, но не 3-связен"""
        self.assertTrue(is_2connected(families.cycle(5)))
        self.assertFalse(is_3connected(families.cycle(5)))


class SeparationTest(SimpleTestCase):
    """Тесты для перечисления разделений"""

    def _as_keys(self, separations):
        return {(s.cut, frozenset((s.side1, s.side2))) for s in separations}

    def test_k4_has_none(self):
        """Тест: у K4 нет 2-разделений"""
        self.assertEqual(enumerate_separations(families.complete(4), 2), [])

    def test_two_triangles(self):
        """Тест: два треугольника с общим ребром xy"""
        graph = WeightedMultigraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        separations = enumerate_separations(graph, 2)
        self.assertEqual(len(separations), 1)
        self.assertEqual(separations[0].cut, frozenset((0, 1)))
        self.assertTrue(separations[0].is_valid(graph))

    def test_c5(self):
        """Тест: у C5 ровно пять разделений - по несмежным парам"""
        separations = enumerate_separations(families.cycle(5), 2)
        self.assertEqual(len(separations), 5)
        for s in separations:
            u, v = sorted(s.cut)
            self.assertNotIn((v - u) % 5, (1, 4))

    def test_agrees_with_naive(self):
        """Тест совпадения с наивным перебором"""
        graphs = [
            families.cycle(6), families.theta(2, 2, 3), families.ladder(3),
            families.wheel(4), families.complete_bipartite(2, 3),
        ]
        for graph in graphs:
            for k in (1, 2, 3):
                with self.subTest(graph=graph, k=k):
                    found = enumerate_separations(graph, k)
                    self.assertEqual(self._as_keys(found), naive_separations(graph, k))
                    self.assertTrue(all(s.is_valid(graph) for s in found))


class BridgesTest(SimpleTestCase):
    """Тесты для мостов подграфа"""

    def test_k4_triangle(self):
        """Тест: оставшаяся вершина K4 даёт один мост с тремя ножками"""
        graph = families.complete(4)
        host = graph.induced([0, 1, 2])
        result = bridges_of(graph, host)
        self.assertEqual(len(result.bridges), 1)
        self.assertEqual(result.bridges[0].feet, frozenset((0, 1, 2)))
        self.assertFalse(result.bridges[0].trivial)

    def test_chord_is_trivial(self):
        """Тест: хорда цикла - тривиальный мост"""
        graph = families.with_extra_edges(families.cycle(6), [(0, 3)])
        host = graph.edge_subgraph(families.cycle(6).edge_ids)
        result = bridges_of(graph, host)
        self.assertEqual(len(result.bridges), 1)
        self.assertTrue(result.bridges[0].trivial)

    def test_theta_path(self):
        """Тест: в θ_{2,2,2} каждый из двух других путей - отдельный мост"""
        graph = families.theta(2, 2, 2)
        host = graph.edge_subgraph([0, 1])
        result = bridges_of(graph, host)
        self.assertEqual(len(result.bridges), 2)
        self.assertTrue(all(b.feet == frozenset((0, 1)) for b in result.bridges))
        covered = set().union(*(b.edges for b in result.bridges))
        self.assertEqual(covered, set(graph.edge_ids) - {0, 1})

    def test_not_subgraph(self):
        """Тест ошибки для не-подграфа"""
        with self.assertRaises(ValidationError):
            bridges_of(families.cycle(4), families.complete(4))


class LongestPathTest(SimpleTestCase):
    """Тесты для точного самого длинного пути"""

    def _exhaustive(self, graph):
        simple = graph.simple_nx()
        best_edges, best_weight = 0, 0
        for u, v in combinations(graph.vertices, 2):
            for p in nx.all_simple_paths(simple, u, v):
                weight = sum(simple[a][b]['weight'] for a, b in zip(p, p[1:]))
                best_edges = max(best_edges, len(p) - 1)
                best_weight = max(best_weight, weight)
        return best_edges, best_weight

    def test_cycle(self):
        """Тест: в C_n самый длинный путь имеет n-1 рёбер"""
        self.assertEqual(longest_path(families.cycle(7)).edges, 6)

    def test_k4(self):
        """Тест: гамильтонов путь K4"""
        result = longest_path(families.complete(4))
        self.assertEqual(result.edges, 3)
        self.assertTrue(result.edges_path.is_valid(families.complete(4)))

    def test_petersen(self):
        """Тест: граф Петерсена имеет гамильтонов путь"""
        self.assertEqual(longest_path(families.petersen()).edges, 9)

    def test_weighted_matches_exhaustive(self):
        """Тест совпадения с полным перебором на взвешенных графах"""
        base = families.wheel(5)
        graph = base.reweighted({eid: 1 + (eid * 7) % 5 for eid in base.edge_ids})
        result = longest_path(graph)
        self.assertEqual((result.edges, result.weight), self._exhaustive(graph))
        self.assertTrue(result.weight_path.is_valid(graph))

    def test_max_xy_path(self):
        """Тест самого тяжёлого пути между фиксированными концами"""
        graph = families.cycle(6)
        result = max_xy_path(graph, 0, 1)
        self.assertEqual(result.weight, 5)

    def test_budget(self):
        """Тест исчерпания бюджета"""
        with self.assertRaises(BudgetExhausted):
            longest_path(families.petersen(), Budget(limit=5))

    def test_no_edges(self):
        """Тест графа из изолированных вершин: путь из одной вершины"""
        result = longest_path(WeightedMultigraph.from_edges(3, []))
        self.assertEqual((result.edges, result.weight), (0, 0))
        self.assertEqual(result.edges_path.vertices, (0,))

    def test_empty_graph(self):
        """Тест графа без вершин"""
        with self.assertRaises(ValidationError) as caught:
            longest_path(WeightedMultigraph.from_edges(0, []))
        self.assertEqual(caught.exception.code, 'empty_graph')


class SuppressTest(SimpleTestCase):
    """Тесты для подавления вершин степени 2"""

    def test_theta_collapses(self):
        """Тест: θ_{2,3,4} превращается в три параллельных ребра"""
        graph = families.theta(2, 3, 4)
        reduction = suppress_degree_two(graph)
        self.assertEqual(reduction.graph.order, 2)
        self.assertEqual(sorted(e.weight for e in reduction.graph.edges), [2, 3, 4])

    def test_expand_path(self):
        """Тест раскрытия пути обратно в исходный граф"""
        graph = families.theta(2, 3, 4)
        reduction = suppress_degree_two(graph)
        heavy = max(reduction.graph.edges, key=lambda e: e.weight)
        path = PathWitness.from_edges(reduction.graph, heavy.u, [heavy.id])
        expanded = reduction.expand_path(path)
        self.assertTrue(expanded.is_valid(graph))
        self.assertEqual(expanded.weight, 4)


class PlanarTest(SimpleTestCase):
    """Тесты для вложений в плоскость"""

    def test_k4(self):
        """Тест: у K4 четыре треугольные грани"""
        plane = planar_embed(families.complete(4))
        self.assertIsInstance(plane, PlaneGraph)
        self.assertEqual(sorted(f.length for f in plane.faces), [3, 3, 3, 3])

    def test_k5_witness(self):
        """Тест свидетеля K5"""
        witness = planar_embed(families.complete(5))
        self.assertIsInstance(witness, KuratowskiWitness)
        self.assertEqual(witness.kind, 'K5')

    def test_subdivided_k33_witness(self):
        """Тест свидетеля K3,3 для подразбитого K3,3"""
        graph = families.subdivide(families.complete_bipartite(3, 3), 0)
        witness = planar_embed(graph)
        self.assertIsInstance(witness, KuratowskiWitness)
        self.assertEqual(witness.kind, 'K33')

    def test_multigraph_euler(self):
        """Тест формулы Эйлера для мультиграфа"""
        graph = families.with_extra_edges(families.complete(4), [(0, 1), (0, 1), (2, 3)])
        plane = planar_embed(graph)
        self.assertEqual(graph.order - graph.size + len(plane.faces), 2)

    def test_facial_triangle_k4(self):
        """Тест: треугольник K4 можно сделать внешней гранью"""
        graph = families.complete(4)
        triangle = next(c for c in iter_cycles(graph) if c.length == 3)
        plane = embed_with_facial_cycle(graph, triangle)
        self.assertIsNotNone(plane)
        self.assertEqual(plane.outer_face.edge_set, triangle.edge_set)

    def test_four_cycle_k4_not_facial(self):
        """Тест: 4-цикл K4 не бывает гранью"""
        graph = families.complete(4)
        square = next(c for c in iter_cycles(graph) if c.length == 4)
        self.assertIsNone(embed_with_facial_cycle(graph, square))

    def test_cube_four_cycles(self):
        """Тест: все 4-циклы куба - грани"""
        graph = families.cube()
        squares = [c for c in iter_cycles(graph) if c.length == 4]
        self.assertEqual(len(squares), 6)
        for square in squares:
            self.assertIsNotNone(embed_with_facial_cycle(graph, square))

    def test_not_a_cycle(self):
        """Тест ошибки для не-цикла"""
        graph = families.complete(4)
        with self.assertRaises(ValidationError):
            embed_with_facial_cycle(graph, CycleWitness((0, 1, 2), (0, 1, 2), 3))

    def test_agrees_with_brute_force(self):
        """Тест совпадения с перебором всех вложений"""
        for graph in (families.complete(4), families.prism(), families.wheel(4)):
            facial = set()
            for faces in brute_force_embeddings(graph):
                facial.update(f.edge_set for f in faces if f.is_cycle())
            for c in iter_cycles(graph):
                with self.subTest(graph=graph, cycle=c.vertices):
                    found = embed_with_facial_cycle(graph, c)
                    self.assertEqual(found is not None, c.edge_set in facial)


class IoTest(SimpleTestCase):
    """Тесты для текстового формата"""

    def test_parse(self):
        """Тест чтения с комментариями и весами"""
        graph = parse_graph('# треугольник\n3 3\n0 1\n1 2 4\n2 0  # вес 1\n')
        self.assertEqual(graph.size, 3)
        self.assertEqual(graph.weight(1), 4)
        self.assertEqual(parse_graph(format_graph(graph)).to_dict(), graph.to_dict())

    def test_malformed(self):
        """Тест ошибки разбора"""
        for text in ('', '3\n', '2 1\n0 x\n', '2 2\n0 1\n'):
            with self.subTest(text=text):
                with self.assertRaises(ValidationError) as ctx:
                    parse_graph(text)
                self.assertEqual(ctx.exception.code, 'parse')
