"""Повторная проверка сертификатов классов по их JSON-представлению"""
import logging

from django.core.exceptions import ValidationError

from graphcore.graph import CycleWitness
from graphcore.planar import PlaneGraph

from decompose.sums import SumRecipe, evaluate

from .members import in_L, in_L3, in_Pr, in_Pr3
from .outerplanar import frame_for
from .phi import build_phi, build_phi3
from .small import is_cycle

logger = logging.getLogger(__name__)


def _member(result):
    return getattr(result, 'member', False)


def _sum_recipe_ok(graph, data, chords):
    recipe = SumRecipe.from_dict(data['evidence']['recipe'])
    n = data['params']['n']
    if not evaluate(recipe).same_as(graph):
        return False
    for gluing in recipe.children:
        if gluing.k != 2 or not _member(in_L(evaluate(gluing.child), None, n)):
            return False
    base = recipe.graph
    if not chords:
        return all(base.degree(v) == 2 for v in base.vertices)
    order = data['evidence']['frame']['cycle']['vertices']
    frame = frame_for(base, order)
    if frame is None:
        return False
    return all(base.edge(eid).ends in frame.free_pairs for eid in recipe.glue_edges())


def _outerplanar_ok(graph, data):
    plane = PlaneGraph.from_dict(graph, data['evidence']['plane'])
    cycle = plane.outer_cycle()
    return cycle is not None and cycle.vertex_set == frozenset(graph.vertices)


def _phi_ok(graph, data, builder):
    plane_data = data['evidence']['plane']
    recipe = SumRecipe.from_dict(data['evidence']['recipe'])
    plane = PlaneGraph.from_dict(recipe.graph, plane_data)
    member = builder(plane, recipe, data['params']['r'], data['params']['s'])
    return member.graph.same_as(graph)


def verify_class(graph, data):
    """
    Проверка сертификата класса ('kind' = 'class') или кадра почти
    внешнепланарного графа ('kind' = 'nearly_outerplanar').
    """
    if data.get('kind') == 'nearly_outerplanar':
        cycle = CycleWitness.from_dict(data['cycle'])
        frame = frame_for(graph, list(cycle.vertices))
        return frame is not None and sorted(frame.free_edges) == sorted(data['free_edges'])
    tag = data.get('class')
    params = data.get('params', {})
    try:
        if tag in ('L', 'L3'):
            check = in_L if tag == 'L' else in_L3
            return _member(check(graph, params.get('r'), params.get('s')))
        if tag in ('Pr', 'Pr3'):
            plane = PlaneGraph.from_dict(graph, data['evidence']['plane'])
            check = in_Pr if tag == 'Pr' else in_Pr3
            return _member(check(plane, params['r']))
        if tag == 'cycle':
            return is_cycle(graph) is not None
        if tag == 'outerplanar':
            return _outerplanar_ok(graph, data)
        if tag in ('C', 'O'):
            return _sum_recipe_ok(graph, data, chords=tag == 'O')
        if tag in ('Phi', 'Phi3'):
            return _phi_ok(graph, data, build_phi if tag == 'Phi' else build_phi3)
    except (ValidationError, KeyError) as exc:
        logger.info('Сертификат класса %s отклонён: %s', tag, exc)
        return False
    raise ValidationError(f'Неизвестный класс {tag}', code='bad_certificate')
