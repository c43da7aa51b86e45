"""
Сертификаты тета-графов и их независимая проверка.

Проверка не использует код поиска: только определения.
"""
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from graphcore.graph import PathWitness


@dataclass(frozen=True)
class ThetaCertificate:
    """Ветвления u, v и три независимых u-v пути"""
    u: int
    v: int
    paths: tuple
    thresholds: tuple

    @property
    def weights(self):
        return tuple(p.weight for p in self.paths)

    @property
    def edge_set(self):
        return frozenset(eid for p in self.paths for eid in p.edges)

    @property
    def vertex_set(self):
        return frozenset(x for p in self.paths for x in p.vertices)

    def to_dict(self):
        return {
            'kind': 'theta',
            'u': self.u,
            'v': self.v,
            'paths': [p.to_dict() for p in self.paths],
            'thresholds': list(self.thresholds),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            int(data['u']),
            int(data['v']),
            tuple(PathWitness.from_dict(p) for p in data['paths']),
            tuple(int(x) for x in data['thresholds']),
        )


def verify_theta(graph, cert):
    """Три пути образуют θ в graph и их веса покрывают пороги"""
    if cert.u == cert.v or len(cert.paths) != 3 or len(cert.thresholds) != 3:
        return False
    for path in cert.paths:
        if not path.is_valid(graph) or path.length < 1:
            return False
        if (path.start, path.end) != (cert.u, cert.v):
            return False
    for p, q in combinations(cert.paths, 2):
        if p.interior & q.vertex_set or q.interior & p.vertex_set:
            return False
        if set(p.edges) & set(q.edges):
            return False
    weights = sorted(cert.weights)
    return all(w >= t for w, t in zip(weights, sorted(cert.thresholds)))


@dataclass(frozen=True)
class EfThetaOutcome:
    """
    Результат поиска ef-теты.

    kind: theta | exception_common_end | exception_k4 | separator
    """
    kind: str
    e: int
    f: int
    certificate: ThetaCertificate = None
    vertex: int = None
    separator: tuple = None

    def to_dict(self):
        data = {'kind': 'ef_theta', 'outcome': self.kind, 'e': self.e, 'f': self.f}
        if self.certificate is not None:
            data['certificate'] = self.certificate.to_dict()
        if self.vertex is not None:
            data['vertex'] = self.vertex
        if self.separator is not None:
            data['separator'] = list(self.separator)
        return data

    @classmethod
    def from_dict(cls, data):
        cert = data.get('certificate')
        separator = data.get('separator')
        return cls(
            data['outcome'],
            int(data['e']),
            int(data['f']),
            ThetaCertificate.from_dict(cert) if cert else None,
            data.get('vertex'),
            tuple(separator) if separator is not None else None,
        )


def separates(graph, z, e, f):
    """Z разделяет рёбра e и f: концы вне Z не соединены в G - Z"""
    z = set(z)
    left = set(graph.edge(e).ends) - z
    right = set(graph.edge(f).ends) - z
    if not left or not right:
        return False
    rest = graph.remove_vertices(z).to_nx()
    return not any(nx.has_path(rest, a, b) for a in left for b in right)


def verify_ef_theta(graph, outcome):
    e, f = outcome.e, outcome.f
    if e == f or not graph.has_edge_id(e) or not graph.has_edge_id(f):
        return False
    ends_e, ends_f = graph.edge(e).ends, graph.edge(f).ends
    if outcome.kind == 'separator':
        return outcome.separator is not None and len(set(outcome.separator)) == 2 \
            and separates(graph, outcome.separator, e, f)
    if outcome.kind == 'exception_common_end':
        return outcome.vertex in ends_e & ends_f and graph.degree(outcome.vertex) == 2
    if outcome.kind == 'exception_k4':
        return not ends_e & ends_f and graph.order == 4 and graph.size == 6 \
            and len({x.ends for x in graph.edges}) == 6
    if outcome.kind != 'theta' or outcome.certificate is None:
        return False
    cert = outcome.certificate
    if not verify_theta(graph, cert):
        return False
    on_e = [i for i, p in enumerate(cert.paths) if e in p.edges]
    on_f = [i for i, p in enumerate(cert.paths) if f in p.edges]
    if len(on_e) != 1 or len(on_f) != 1 or on_e == on_f:
        return False
    third = ({0, 1, 2} - {on_e[0], on_f[0]}).pop()
    return cert.paths[third].length >= 2
