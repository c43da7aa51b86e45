"""
Автотесты для приложения bonds
"""
from itertools import combinations

import networkx as nx
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from graphcore import families
from graphcore.budget import Budget, Unknown
from graphcore.graph import WeightedMultigraph
from theta.search import contains_theta
from bonds.cuts import BondCertificate, bond_through, verify_bond
from bonds.reduction import bond_theta_equivalence, default_t, subdivide_for_theta


def doubled_cut():
    """C4 с удвоенным ребром 0-1 (номер 4)"""
    return WeightedMultigraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)])


def small_connected(max_order, max_size):
    for simple in nx.graph_atlas_g():
        if simple.number_of_nodes() > max_order:
            break
        if simple.number_of_edges() >= 3 and simple.number_of_edges() <= max_size and nx.is_connected(simple):
            yield WeightedMultigraph.from_nx(simple)


class BondThroughTest(SimpleTestCase):
    """Тесты для перебора связок"""

    def test_star(self):
        """Тест: три ребра при вершине 0 в K4 образуют связку δ({0})"""
        cert = bond_through(families.complete(4), 0, 1, 2)
        self.assertEqual(cert.side, frozenset({0}))
        self.assertEqual(cert.cut_edges, frozenset({0, 1, 2}))

    def test_triangle(self):
        self.assertIsNone(bond_through(families.complete(4), 0, 1, 3))

    def test_prism_matching(self):
        cert = bond_through(families.prism(), 2, 4, 5)
        self.assertEqual(cert.side, frozenset({0, 1, 2}))
        self.assertTrue(verify_bond(families.prism(), cert, (2, 4, 5)))

    def test_doubled_edge(self):
        cert = bond_through(doubled_cut(), 0, 4, 2)
        self.assertIsNotNone(cert)
        self.assertEqual(cert.cut_edges, frozenset({0, 2, 4}))

    def test_bad_edges(self):
        for edges in ((0, 0, 1), (0, 1, 17)):
            with self.subTest(edges=edges):
                with self.assertRaises(ValidationError) as ctx:
                    bond_through(families.complete(4), *edges)
                self.assertEqual(ctx.exception.code, 'bad_edges')

    def test_not_connected(self):
        graph = WeightedMultigraph.from_edges(5, [(0, 1), (1, 2), (2, 0)])
        with self.assertRaises(ValidationError) as ctx:
            bond_through(graph, 0, 1, 2)
        self.assertEqual(ctx.exception.code, 'not_connected')

    def test_budget(self):
        self.assertIsInstance(bond_through(families.complete(6), 0, 1, 5, Budget(limit=1)), Unknown)

    def test_verify_rejects(self):
        """Тест: разрез с несвязной стороной не является связкой"""
        graph = families.cycle(4)
        cert = BondCertificate(frozenset({0, 2}), frozenset(range(4)))
        self.assertFalse(verify_bond(graph, cert))
        self.assertFalse(verify_bond(graph, BondCertificate(frozenset({0}), frozenset({0}))))
        self.assertEqual(BondCertificate.from_dict(cert.to_dict()), cert)


class ReductionTest(SimpleTestCase):
    """Тесты для сведения к θ_{t,t,t}"""

    def test_shapes(self):
        reduction = subdivide_for_theta(families.complete(4), 0, 1, 2, 5)
        self.assertEqual(reduction.subdivided.order, 16)
        self.assertEqual(reduction.subdivided.size, 18)
        self.assertEqual([len(reduction.chains[e]) for e in (0, 1, 2)], [5, 5, 5])
        self.assertEqual(reduction.weighted.weight(0), 5)
        self.assertEqual(reduction.weighted.weight(3), 1)
        self.assertEqual(default_t(families.complete(4)), 7)

    def test_star_has_theta(self):
        reduction = subdivide_for_theta(families.complete(4), 0, 1, 2, 5)
        self.assertIsNotNone(contains_theta(reduction.subdivided, 5, 5, 5))
        self.assertIsNotNone(contains_theta(reduction.weighted, 5, 5, 5))

    def test_triangle_has_no_theta(self):
        reduction = subdivide_for_theta(families.complete(4), 0, 1, 3, 5)
        self.assertIsNone(contains_theta(reduction.subdivided, 5, 5, 5))
        self.assertIsNone(contains_theta(reduction.weighted, 5, 5, 5))

    def test_weighted_input_reset(self):
        """Тест: веса исходного графа заменяются единицами"""
        graph = families.complete(4).reweighted({5: 9})
        reduction = subdivide_for_theta(graph, 0, 1, 2)
        self.assertEqual(reduction.weighted.weight(5), 1)
        self.assertEqual(reduction.subdivided.weight(5), 1)


class EquivalenceTest(SimpleTestCase):
    """Тесты для согласия перебора связок и сведения"""

    def test_k4(self):
        star = bond_theta_equivalence(families.complete(4), 0, 1, 2)
        triangle = bond_theta_equivalence(families.complete(4), 0, 1, 3)
        self.assertTrue(star.agrees)
        self.assertIsNotNone(star.bond)
        self.assertTrue(triangle.agrees)
        self.assertIsNone(triangle.bond)
        self.assertTrue(star.to_dict()['reduction_agrees'])

    def test_doubled_edge(self):
        report = bond_theta_equivalence(doubled_cut(), 0, 4, 1)
        self.assertTrue(report.agrees)
        self.assertEqual(report.bond.side, frozenset({0, 2, 3}))

    def test_t_stability(self):
        graph = families.prism()
        for edges in combinations(graph.edge_ids, 3):
            with self.subTest(edges=edges):
                first = bond_theta_equivalence(graph, *edges, t=graph.size)
                second = bond_theta_equivalence(graph, *edges, t=graph.size + 4)
                self.assertEqual(first.weighted_theta is None, second.weighted_theta is None)

    def test_small_t_rejected(self):
        with self.assertRaises(ValidationError) as ctx:
            bond_theta_equivalence(families.complete(4), 0, 1, 2, t=3)
        self.assertEqual(ctx.exception.code, 'bad_t')

    def test_sweep(self):
        """Тест: все тройки рёбер связных графов до пяти вершин"""
        for graph in small_connected(5, 7):
            for edges in combinations(graph.edge_ids, 3):
                with self.subTest(edges=edges, size=graph.size):
                    self.assertTrue(bond_theta_equivalence(graph, *edges).agrees)
