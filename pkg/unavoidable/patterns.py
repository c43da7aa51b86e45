"""
Графы-образцы и свидетели их подразбиений.

comb_t   - хребет 0..t-1, к каждой вершине хребта i прикреплён зуб t+i.
L_t      - лестница из t ступеней: рельсы 0..t-1 и t..2t-1, ступени i - t+i.
L_t_plus - L_t и ребро между концами второй рельсы t и 2t-1 (белые вершины
           рисунка - вершины подразбиения этого ребра, для топологических
           миноров они не нужны).
W_n      - колесо: центр 0, обод 1..n.
W_k_plus - W_2k, рёбра обода x1x2 и x(k+1)x(k+2) подразбиты и новые
           вершины соединены ребром.
W_k_prime - W_k, у каждой спицы параллельная копия.
A1, A2   - корневые образцы для треугольника T = {0, 1, 2} и ребра e:
           A1 = K5, e = 3-4; A2 = K5 без ребра 3-4, e = 3-0.
"""
from dataclasses import dataclass
from itertools import combinations

from django.core.exceptions import ValidationError

from graphcore import families
from graphcore.graph import PathWitness, WeightedMultigraph

PATTERNS = ('comb', 'L', 'L_plus', 'W', 'W_plus', 'W_prime', 'A1', 'A2')


def comb(t):
    edges = [(i, i + 1) for i in range(t - 1)] + [(i, t + i) for i in range(t)]
    return WeightedMultigraph.from_edges(2 * t, edges)


def ladder_plus(t):
    base = families.ladder(t)
    return families.with_extra_edges(base, [(t, 2 * t - 1)])


def wheel_plus(k):
    n = 2 * k
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    cut = {(1, 2), (k + 1, k + 2)}
    a, b = n + 1, n + 2
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [pair for pair in rim if pair not in cut]
    edges += [(1, a), (a, 2), (k + 1, b), (b, k + 2), (a, b)]
    return WeightedMultigraph.from_edges(n + 3, edges)


def wheel_prime(k):
    base = families.wheel(k)
    return families.with_extra_edges(base, [(0, i) for i in range(1, k + 1)])


def a1():
    return families.complete(5)


def a2():
    return WeightedMultigraph.from_edges(5, [pair for pair in combinations(range(5), 2) if pair != (3, 4)])


# Корни A1/A2: треугольник и ребро e как пара вершин образца
ROOTED_TRIANGLE = (0, 1, 2)
ROOTED_EDGE = {'A1': (3, 4), 'A2': (3, 0)}


def pattern_graph(name, k=None):
    """Граф-образец по имени и параметру"""
    builders = {
        'comb': comb,
        'L': families.ladder,
        'L_plus': ladder_plus,
        'W': families.wheel,
        'W_plus': wheel_plus,
        'W_prime': wheel_prime,
    }
    if name in ('A1', 'A2'):
        return a1() if name == 'A1' else a2()
    if name not in builders:
        raise ValidationError(f'Неизвестный образец {name}', code='bad_pattern')
    smallest = {'comb': 1, 'L': 1, 'L_plus': 2, 'W': 3, 'W_plus': 2, 'W_prime': 3}[name]
    if not isinstance(k, int) or k < smallest:
        raise ValidationError(f'Для {name} параметр должен быть >= {smallest}', code='bad_parameter')
    return builders[name](k)


@dataclass(frozen=True)
class PatternWitness:
    """
    Подразбиение образца в графе: branch_map - вершина образца -> вершина
    графа, branch_paths - номер ребра образца -> путь между образами концов.
    """
    pattern: str
    parameter: int
    branch_map: dict
    branch_paths: dict

    @property
    def vertex_set(self):
        found = set(self.branch_map.values())
        for path in self.branch_paths.values():
            found |= path.vertex_set
        return frozenset(found)

    def to_dict(self):
        return {
            'kind': 'pattern',
            'pattern': self.pattern,
            'parameter': self.parameter,
            'branch_map': {str(p): v for p, v in sorted(self.branch_map.items())},
            'branch_paths': {str(eid): path.to_dict() for eid, path in sorted(self.branch_paths.items())},
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data['pattern'],
            data.get('parameter'),
            {int(p): int(v) for p, v in data['branch_map'].items()},
            {int(eid): PathWitness.from_dict(path) for eid, path in data['branch_paths'].items()},
        )


def verify_pattern(graph, witness, pattern=None):
    """
    Независимая проверка подразбиения.

    Образы вершин различны; каждое ребро образца реализовано путём между
    образами его концов; пути не пересекаются по рёбрам, а внутренние
    вершины путей не встречаются больше нигде.
    """
    if pattern is None:
        pattern = pattern_graph(witness.pattern, witness.parameter)
    images = witness.branch_map
    if set(images) != set(pattern.vertices) or len(set(images.values())) != len(images):
        return False
    if set(witness.branch_paths) != set(pattern.edge_ids):
        return False
    branch = set(images.values())
    used_edges = set()
    used_inner = set()
    for eid, path in witness.branch_paths.items():
        e = pattern.edge(eid)
        if not path.is_valid(graph) or path.length < 1:
            return False
        if path.ends != frozenset((images[e.u], images[e.v])):
            return False
        if path.interior & branch or path.interior & used_inner:
            return False
        if set(path.edges) & used_edges:
            return False
        used_edges |= set(path.edges)
        used_inner |= path.interior
    return True
