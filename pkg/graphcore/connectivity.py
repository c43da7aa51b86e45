"""
Связность по соглашениям для мультиграфов, разделения и мосты подграфа.

G 2-связен, если si(G) 2-связен или si(G) = K2 и в G не меньше двух рёбер;
G 3-связен, если si(G) 3-связен.
"""
from itertools import combinations

import networkx as nx
from django.core.exceptions import ValidationError

from .graph import Bridge, BridgeDecomposition, Separation


def is_connected(graph):
    if graph.order == 0:
        return False
    return nx.is_connected(graph.to_nx())


def is_2connected(graph):
    if graph.order < 2:
        return False
    if graph.order == 2:
        return graph.size >= 2
    return nx.is_biconnected(graph.simple_nx())


def is_3connected(graph):
    if graph.order < 4:
        return False
    simple = graph.simple_nx()
    if not nx.is_connected(simple):
        return False
    return nx.node_connectivity(simple) >= 3


def is_simple(graph):
    return len({e.ends for e in graph.edges}) == graph.size


def components_without(graph, removed):
    """Компоненты G - removed, упорядоченные по наименьшей вершине"""
    removed = set(removed)
    rest = graph.to_nx()
    rest.remove_nodes_from(removed)
    comps = [frozenset(c) for c in nx.connected_components(rest)]
    return sorted(comps, key=min)


def separation_from_sides(graph, cut, side1, side2):
    """Разделение по разрезу и разбиению вершин; рёбра внутри разреза идут в первую часть"""
    cut, side1, side2 = frozenset(cut), frozenset(side1), frozenset(side2)
    part1, part2 = set(), set()
    for e in graph.edges:
        if e.u in side2 or e.v in side2:
            part2.add(e.id)
        else:
            part1.add(e.id)
    return Separation(frozenset(part1), frozenset(part2), cut, side1, side2)


def enumerate_separations(graph, k_max, exact=None):
    """
    Все разделения с |разреза| <= k_max (или ровно exact).

    Разделения различаются парой (разрез, разбиение вершин G - разрез);
    компонента с наименьшей вершиной всегда лежит в первой части.
    """
    result = []
    sizes = [exact] if exact is not None else range(1, k_max + 1)
    for k in sizes:
        for cut in combinations(graph.vertices, k):
            comps = components_without(graph, cut)
            if len(comps) < 2:
                continue
            rest = comps[1:]
            for mask in range(1, 1 << len(rest)):
                side2 = frozenset().union(*(c for i, c in enumerate(rest) if mask >> i & 1))
                side1 = frozenset(graph.vertices) - side2 - set(cut)
                result.append(separation_from_sides(graph, cut, side1, side2))
    return result


def two_cuts(graph):
    """Все 2-разрезы {x, y}: G - {x, y} несвязен"""
    return [
        frozenset(cut) for cut in combinations(graph.vertices, 2)
        if len(components_without(graph, cut)) >= 2
    ]


def three_cuts(graph):
    return [
        frozenset(cut) for cut in combinations(graph.vertices, 3)
        if len(components_without(graph, cut)) >= 2
    ]


def bridges_of(graph, host):
    """
    Мосты подграфа H в G.

    Тривиальный мост - ребро вне H с обоими концами в H; остальные мосты -
    компонента G - V(H) вместе с рёбрами, соединяющими её с H.
    """
    if not host.is_subgraph_of(graph):
        raise ValidationError('H не является подграфом G', code='not_subgraph')
    host_vertices = frozenset(host.vertices)
    host_edges = frozenset(host.edge_ids)
    bridges = []
    for e in graph.edges:
        if e.id not in host_edges and e.u in host_vertices and e.v in host_vertices:
            bridges.append(Bridge(frozenset((e.id,)), e.ends, frozenset(), True))
    for comp in components_without(graph, host_vertices):
        edges, feet = set(), set()
        for v in comp:
            for eid in graph.incident(v):
                edges.add(eid)
                other = graph.edge(eid).other(v)
                if other in host_vertices:
                    feet.add(other)
        bridges.append(Bridge(frozenset(edges), frozenset(feet), comp, False))
    bridges.sort(key=lambda b: min(b.edges) if b.edges else -1)
    return BridgeDecomposition(host_vertices, host_edges, tuple(bridges))


def two_connected_blocks(graph):
    """Блоки si(G) с двумя и более вершинами, как наборы вершин"""
    simple = graph.simple_nx()
    return sorted((frozenset(b) for b in nx.biconnected_components(simple)), key=lambda b: sorted(b))


def disjoint_paths(graph, sources, targets, removed=(), removed_pairs=()):
    """
    Наибольший набор вершинно-непересекающихся путей из sources в targets.

    Пути - списки вершин; каждый начинается в sources, кончается в targets
    и не содержит других вершин этих множеств. Если источник один, пути
    пересекаются только в нём (веер); то же для единственной цели.
    """
    simple = graph.simple_nx()
    simple.remove_nodes_from(removed)
    simple.remove_edges_from(removed_pairs)
    sources = [s for s in sources if s in simple]
    targets = [t for t in targets if t in simple]
    if not sources or not targets:
        return []
    shared = sorted(set(sources) & set(targets))
    if shared and (len(sources) == 1 or len(targets) == 1):
        return [[shared[0]]]
    if len(sources) == 1:
        src = sources[0]
    else:
        src = ('source',)
        simple.add_edges_from((src, s) for s in sources)
    if len(targets) == 1:
        dst = targets[0]
    else:
        dst = ('target',)
        simple.add_edges_from((t, dst) for t in targets)
    if not nx.has_path(simple, src, dst):
        return []
    source_set, target_set = set(sources), set(targets)
    paths = []
    for raw in nx.node_disjoint_paths(simple, src, dst):
        inner = [x for x in raw if not isinstance(x, tuple)]
        end = next(i for i, x in enumerate(inner) if x in target_set)
        inner = inner[:end + 1]
        start = max(i for i, x in enumerate(inner) if x in source_set)
        paths.append(inner[start:])
    return sorted(paths)
