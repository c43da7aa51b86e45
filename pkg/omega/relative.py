"""
Относительная связность (G, Z).

(G, Z) 4-связен, если у каждого разделения (G1, G2) порядка s с Z в G1
либо s >= 4, либо s = 3 и у G2 ровно одна собственная вершина.
"""
from itertools import combinations

from django.core.exceptions import ValidationError

from graphcore.connectivity import components_without, is_3connected, separation_from_sides
from decompose.stars import relative_violation


def relative_separation(graph, z, max_order=3):
    """
    Первое разделение порядка <= max_order, нарушающее условие для Z, или None.

    Вторая часть - объединение компонент без вершин Z; для порядка 3 в ней
    должно быть не меньше двух вершин.
    """
    z = frozenset(z)
    everything = frozenset(graph.vertices)
    for k in range(max_order + 1):
        for cut in combinations(graph.vertices, k):
            comps = components_without(graph, cut)
            if len(comps) < 2:
                continue
            free = [c for c in comps if not c & z]
            if len(free) == len(comps):
                free = free[1:]
            side2 = frozenset().union(*free)
            if not side2 or (k == 3 and len(side2) < 2):
                continue
            return separation_from_sides(graph, cut, everything - side2 - set(cut), side2)
    return None


def is_4connected_rel(graph, z):
    if not is_3connected(graph):
        raise ValidationError('Граф должен быть 3-связным', code='not_3connected')
    return relative_violation(graph, z) is None
