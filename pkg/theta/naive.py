"""
Наивный поиск θ_{a,b,c}: трёхфазный перебор путей.

Первый путь весом >= c, второй весом >= b в оставшемся графе, третий -
самый тяжёлый путь в том, что осталось. Независим от структурного поиска
и служит ему оракулом.
"""
from itertools import combinations

from graphcore.budget import ensure_budget
from graphcore.paths import iter_paths, max_weight_path

from .certificates import ThetaCertificate


def theta_between(graph, u, v, thresholds, budget=None):
    """θ с ветвлениями u и v при упорядоченных порогах t1 <= t2 <= t3"""
    budget = ensure_budget(budget)
    t1, t2, t3 = thresholds
    if graph.degree(u) < 3 or graph.degree(v) < 3:
        return None
    everything = set(graph.vertices)
    for first in iter_paths(graph, u, v, budget=budget, all_parallels=True):
        if first.weight < t3:
            continue
        rest = everything - first.vertex_set
        for second in iter_paths(graph, u, v, allowed=rest, forbidden_edges=first.edges,
                                 budget=budget, all_parallels=True):
            if second.weight < t2:
                continue
            third = max_weight_path(
                graph, [u], [v],
                interior=rest - second.vertex_set,
                forbidden_edges=first.edges + second.edges,
                budget=budget,
            )
            if third is not None and third.weight >= t1:
                return ThetaCertificate(u, v, (first, second, third), tuple(thresholds))
    return None


def naive_contains_theta(graph, a, b, c, budget=None):
    budget = ensure_budget(budget)
    thresholds = tuple(sorted((a, b, c)))
    for u, v in combinations(graph.vertices, 2):
        cert = theta_between(graph, u, v, thresholds, budget)
        if cert is not None:
            return cert
    return None
