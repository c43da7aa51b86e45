"""Проверка сертификата любого вида по полю kind"""
import logging

import networkx as nx
from django.core.exceptions import ValidationError

from bonds.cuts import BondCertificate, verify_bond
from decompose.chains import ChainDecomposition, check_chain
from decompose.sums import SumRecipe, evaluate
from graphclasses.verify import verify_class
from graphcore.graph import CycleWitness
from graphcore.planar import PlaneGraph
from omega.crosses import CrossCertificate, verify_cross
from theta.certificates import EfThetaOutcome, ThetaCertificate, verify_ef_theta, verify_theta
from unavoidable.patterns import PatternWitness, verify_pattern

logger = logging.getLogger(__name__)

KINDS = ('theta', 'ef_theta', 'bond', 'pattern', 'cross', 'recipe', 'chain', 'class', 'nearly_outerplanar', 'omega')


def extract_certificate(data):
    """Сертификат из отчёта команды или сам сертификат"""
    if 'kind' in data:
        return data
    result = data.get('result') or {}
    for key in ('certificate', 'witness', 'recipe'):
        if isinstance(result.get(key), dict):
            return result[key]
    if isinstance(result.get('chain'), dict):
        return result['chain']
    raise ValidationError('В файле нет сертификата', code='bad_certificate')


def _recipe_ok(graph, data):
    built = evaluate(SumRecipe.from_dict(data))
    if built.same_as(graph):
        return True
    return built.total_weight(built.edge_ids) == graph.total_weight(graph.edge_ids) \
        and nx.is_isomorphic(built.to_nx(), graph.to_nx())


def _omega_ok(graph, data):
    if data['outcome'] == 'facial':
        plane = PlaneGraph.from_dict(graph, data['plane'])
        cycle = CycleWitness.from_dict(data['cycle'])
        return cycle.is_valid(graph) and plane.is_facial(cycle.edge_set)
    if data['outcome'] == 'cross':
        return verify_cross(graph, CrossCertificate.from_dict(data['cross']))
    raise ValidationError('Исход omega без сертификата', code='bad_certificate')


def verify_certificate(graph, data):
    """True, если сертификат подтверждается на графе"""
    kind = data.get('kind')
    if kind not in KINDS:
        raise ValidationError(f'Неизвестный вид сертификата {kind}', code='bad_certificate')
    if kind in ('class', 'nearly_outerplanar'):
        return verify_class(graph, data)
    try:
        if kind == 'theta':
            return verify_theta(graph, ThetaCertificate.from_dict(data))
        if kind == 'ef_theta':
            return verify_ef_theta(graph, EfThetaOutcome.from_dict(data))
        if kind == 'bond':
            return verify_bond(graph, BondCertificate.from_dict(data))
        if kind == 'pattern':
            return verify_pattern(graph, PatternWitness.from_dict(data))
        if kind == 'cross':
            return verify_cross(graph, CrossCertificate.from_dict(data))
        if kind == 'recipe':
            return _recipe_ok(graph, data)
        if kind == 'chain':
            chain = ChainDecomposition.from_dict(data)
            return graph.has_edge_id(chain.edge) and check_chain(graph, chain.edge, chain)
        return _omega_ok(graph, data)
    except ValidationError as exc:
        if exc.code == 'bad_certificate':
            raise
        logger.info('Сертификат %s отклонён: %s', kind, exc)
        return False
    except (KeyError, TypeError) as exc:
        logger.info('Сертификат %s отклонён: %s', kind, exc)
        return False
