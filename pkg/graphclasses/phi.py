"""
Класс Φ(L_{r,s}, P_r) и его 3-связный вариант Φ³.

Член Φ задаётся рецептом: корень - плоский граф из P_r, дети - графы из
L_{r,s}, приклеенные 2-суммой к рёбрам, 3-суммой к внутренним граням-
треугольникам и 4-суммой к прямоугольникам корня. build_phi проверяет
каждое условие и называет нарушенное кодом ValidationError.
"""
import logging
import random
from dataclasses import dataclass
from itertools import count

from django.core.exceptions import ValidationError

from graphcore import families
from graphcore.budget import BudgetExhausted, Unknown
from graphcore.connectivity import is_2connected, is_3connected
from graphcore.graph import CycleWitness, Edge, WeightedMultigraph
from graphcore.planar import embed_with_facial_cycle

from decompose.sums import Gluing, SumRecipe, evaluate, sum_maps

from .certificates import ClassCertificate
from .members import in_L, in_L3, in_Pr, in_Pr3, rectangles

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiMember:
    graph: WeightedMultigraph
    recipe: SumRecipe
    plane: object
    r: int
    s: int
    tag: str = 'Phi'

    def certificate(self):
        evidence = {'plane': self.plane.to_dict(), 'recipe': self.recipe.to_dict()}
        return ClassCertificate(self.tag, {'r': self.r, 's': self.s}, evidence, self)

    def to_dict(self):
        return {**self.certificate().to_dict(), 'graph': self.graph.to_dict()}


def _reject(result, clause, message):
    if isinstance(result, Unknown):
        raise BudgetExhausted(result.spent, result.reason)
    if not result.member:
        raise ValidationError(f'{message}: {result.clause}', code=clause)


def _check_site(plane, gluing, triangles_only):
    glue = gluing.parent_glue
    if gluing.k == 2:
        if triangles_only:
            raise ValidationError('В Φ³ допустимы только 3-суммы', code='not_3sum')
        return
    if triangles_only and gluing.k != 3:
        raise ValidationError('В Φ³ допустимы только 3-суммы', code='not_3sum')
    matches = [i for i, face in enumerate(plane.faces) if face.edge_set == set(glue) and face.length == len(glue)]
    inner = [plane.faces[i] for i in matches if i != plane.outer_index]
    if matches and not inner:
        raise ValidationError(f'Склейка {list(glue)} по внешней грани', code='outer_face_glue')
    if gluing.k == 3:
        if not inner:
            raise ValidationError(f'{list(glue)} - не внутренний треугольник', code='not_facial_triangle')
        return
    found = rectangles(plane)
    if not any(face in found for face in inner):
        raise ValidationError(f'{list(glue)} - не прямоугольник', code='not_rectangle')


def _build(plane, recipe, r, s, budget, three):
    if not plane.graph.same_as(recipe.graph):
        raise ValidationError('Вложение задано не для корня рецепта', code='plane_mismatch')
    if three:
        _reject(in_Pr3(plane, r, budget), 'root_not_pr', 'Корень не лежит в P_r^3')
    else:
        _reject(in_Pr(plane, r, budget), 'root_not_pr', 'Корень не лежит в P_r')
    for gluing in recipe.children:
        _check_site(plane, gluing, three)
        child = evaluate(gluing.child)
        if three:
            _reject(in_L3(child, r, s, budget), 'summand_not_l', 'Слагаемое не лежит в L^3_{r,s}')
        else:
            _reject(in_L(child, r, s, budget), 'summand_not_l', 'Слагаемое не лежит в L_{r,s}')
    graph = evaluate(recipe)
    if three and not is_3connected(graph):
        raise ValidationError('Сумма не 3-связна', code='not_3connected')
    if not is_2connected(graph):
        raise ValidationError('Сумма не 2-связна', code='not_2connected')
    logger.debug('Член Φ: %s, слагаемых %s', graph, recipe.k)
    return PhiMember(graph, recipe, plane, r, s, 'Phi3' if three else 'Phi')


def build_phi(plane, recipe, r, s, budget=None):
    """Проверенный член Φ(L_{r,s}, P_r); нарушение - ValidationError с кодом условия"""
    return _build(plane, recipe, r, s, budget, three=False)


def build_phi3(plane, recipe, r, s, budget=None):
    """Член Φ³: корень из P_r^3, 3-суммы к внутренним треугольникам, дети из L^3_{r,s}"""
    return _build(plane, recipe, r, s, budget, three=True)


# --- генератор ---

def _split_polygon(rng, polygon, chords, faces):
    if len(polygon) == 3 or (len(polygon) == 4 and rng.random() < 0.3):
        faces.append(polygon)
        return
    k = rng.randint(2, len(polygon) - 2)
    if rng.random() < 0.7:
        k = 2 if rng.random() < 0.5 else len(polygon) - 2
    chords.append((polygon[0], polygon[k]))
    _split_polygon(rng, polygon[:k + 1], chords, faces)
    _split_polygon(rng, [polygon[0]] + polygon[k:], chords, faces)


def _random_base(rng, r, size):
    m = rng.randint(4, max(4, size))
    polygon = list(range(m))
    chords, faces = [], []
    _split_polygon(rng, polygon, chords, faces)
    triples = [(i, (i + 1) % m, rng.randint(1, 3 * r)) for i in range(m)]
    triples += [(u, v, rng.randint(1, r - 1)) for u, v in chords]
    base = WeightedMultigraph.from_edges(m, triples)
    ring = CycleWitness.from_edges(base, 0, list(range(m)))
    return embed_with_facial_cycle(base, ring)


def _weighted(rng, graph, r):
    return graph.reweighted({eid: rng.randint(1, r - 1) for eid in graph.edge_ids})


def _doubled_cycle(n):
    pairs = [(i, (i + 1) % n) for i in range(n)]
    return WeightedMultigraph.from_edges(n, pairs + pairs)


def _summand(rng, k, s):
    """Случайное слагаемое из L_s и его k-цикл склейки (рёбра по порядку обхода)"""
    if k == 2:
        shapes = [lambda: families.parallel([1] * rng.randint(2, 3))]
        if s >= 3:
            shapes.append(lambda: families.cycle(rng.randint(3, s)))
        if s >= 4:
            shapes.append(lambda: families.complete(4))
        child = rng.choice(shapes)()
        return child, (rng.choice(child.edge_ids),)
    child = families.complete(4) if s >= 4 and rng.random() < 0.5 else _doubled_cycle(k)
    return child, _ring_edges(child, k)


def _ring_edges(child, k):
    ring = [0, 1, 2, 3][:k]
    return tuple(child.edges_between(a, b)[0] for a, b in zip(ring, ring[1:] + ring[:1]))


def _gluing(rng, child, child_glue, glue, vertices, r):
    child = _weighted(rng, child, r)
    if len(glue) == 1:
        ends = sorted(child.edge(child_glue[0]).ends)
        if rng.random() < 0.5:
            vertices = vertices[::-1]
        pairs = tuple(zip(ends, vertices))
    else:
        pairs = tuple(zip(range(len(glue)), vertices))
    return Gluing(SumRecipe(child), tuple(glue), child_glue, pairs)


def _keeps_2connected(base, children, gluing):
    return is_2connected(evaluate(SumRecipe(base, tuple(children) + (gluing,))))


def random_phi(r, s, size, seed):
    """
    Случайный член Φ(L_{r,s}, P_r).

    База - внешнепланарный многоугольник, разбитый хордами в основном на
    треугольники; веса рёбер цикла до 3r, хорд меньше r. Слагаемые
    приклеиваются к свободным рёбрам, треугольникам и прямоугольникам.
    K_4 на грани-ухе оставляет вершину степени 1; тогда вместо него
    берётся двойной цикл, а 2-сумма, рвущая 2-связность, пропускается.
    """
    if r < 2 or s < 2:
        raise ValidationError('Нужны r, s >= 2', code='bad_parameters')
    rng = random.Random(seed)
    plane = _random_base(rng, r, size)
    base = plane.graph
    used = set()
    children = []
    sites = [(3, face) for face in plane.inner_faces if face.length == 3 and s >= 3]
    if s >= 4:
        sites += [(4, face) for face in rectangles(plane)]
    sites += [(2, None)] * base.size
    rng.shuffle(sites)
    for k, face in sites:
        if rng.random() < 0.5:
            continue
        if face is None:
            free = [eid for eid in base.edge_ids if eid not in used]
            if not free:
                continue
            glue = (rng.choice(free),)
            vertices = sorted(base.edge(glue[0]).ends)
        else:
            glue = face.edges
            vertices = list(face.vertices)
            if used & set(glue):
                continue
        gluing = _gluing(rng, *_summand(rng, k, s), glue, vertices, r)
        if not _keeps_2connected(base, children, gluing):
            if k == 2:
                continue
            logger.debug('Склейка K_4 по %s рвёт 2-связность, берётся двойной цикл', list(glue))
            doubled = _doubled_cycle(k)
            gluing = _gluing(rng, doubled, _ring_edges(doubled, k), glue, vertices, r)
        used |= set(glue)
        children.append(gluing)
    recipe = SumRecipe(base, tuple(children))
    return build_phi(plane, recipe, r, s)


# --- шаги разложения с тяжёлыми рёбрами ---

def _cycle_of(graph, edge_ids):
    """Рёбра цикла в порядке обхода"""
    ids = list(edge_ids)
    first = graph.edge(ids[0])
    start, current = first.u, first.v
    ordered = [ids.pop(0)]
    while ids:
        nxt = next(eid for eid in ids if current in graph.edge(eid).ends)
        ids.remove(nxt)
        ordered.append(nxt)
        current = graph.edge(nxt).other(current)
    return CycleWitness.from_edges(graph, start, ordered)


def heavy_edge_gadget(graph, t):
    """
    Разложение графа с ровно двумя тяжёлыми рёбрами e, f в сумму базы из P_t.

    Параллельные e, f - 2-сумма по новому ребру g; смежные e=xy, f=xz -
    3-сумма по треугольнику xyz; несмежные e=x1x4, f=x2x3 - 4-сумма по
    циклу x1x2x3x4. Возвращает (рецепт, вложение базы).
    """
    heavy = [e for e in graph.edges if e.weight >= t]
    if len(heavy) != 2:
        raise ValidationError(f'Нужно ровно два тяжёлых ребра, есть {len(heavy)}', code='bad_heavy_edges')
    e, f = heavy
    fresh = count(graph.max_edge_id() + 1)
    common = e.ends & f.ends
    if e.ends == f.ends:
        x, y = sorted(e.ends)
        ring = [(x, y)]
    elif common:
        (x,) = common
        y, z = e.other(x), f.other(x)
        ring = [(x, y), (y, z), (z, x)]
    else:
        x1, x4 = e.u, e.v
        x2, x3 = f.u, f.v
        ring = [(x1, x2), (x2, x3), (x3, x4), (x4, x1)]
    base_glue = [Edge(next(fresh), u, v, 1) for u, v in ring]
    child_glue = [Edge(next(fresh), u, v, 1) for u, v in ring]
    base = WeightedMultigraph((), [e, f] + base_glue)
    child = graph.remove_edges([e.id, f.id]).add_edges(child_glue)
    pairs = tuple((v, v) for v in sorted(base.vertices))
    gluing = Gluing(SumRecipe(child), tuple(g.id for g in base_glue), tuple(g.id for g in child_glue), pairs)
    recipe = SumRecipe(base, (gluing,))
    if len(ring) == 1:
        outer = [e.id, f.id]
    elif len(ring) == 3:
        outer = [e.id, base_glue[1].id, f.id]
    else:
        outer = [base_glue[0].id, f.id, base_glue[2].id, e.id]
    plane = embed_with_facial_cycle(base, _cycle_of(base, outer))
    assert plane is not None, 'База с тяжёлыми рёбрами не вкладывается'
    assert evaluate(recipe).same_as(graph), 'Разложение с тяжёлыми рёбрами не восстанавливает граф'
    return recipe, plane


def merge_case_b(first, second, first_edge, second_edge):
    """
    2-сумма двух членов Φ по виртуальным рёбрам их баз.

    Рёбра должны лежать на внешних циклах баз и не быть местами склейки;
    склейки второго рецепта переносятся на рёбра объединённой базы.
    """
    for member, eid in ((first, first_edge), (second, second_edge)):
        if eid in member.recipe.glue_edges():
            raise ValidationError(f'Ребро {eid} занято склейкой', code='virtual_edge_glued')
        cycle = member.plane.outer_cycle()
        if cycle is None or eid not in cycle.edge_set:
            raise ValidationError(f'Ребро {eid} не лежит на внешнем цикле', code='virtual_edge_not_outer')
    if (first.r, first.s) != (second.r, second.s):
        raise ValidationError('Параметры r, s различаются', code='bad_parameters')
    parent, child = first.recipe.graph, second.recipe.graph
    x, y = sorted(parent.edge(first_edge).ends)
    a, b = sorted(child.edge(second_edge).ends)
    pairs = ((a, x), (b, y))
    mapping, edge_map = sum_maps(parent, child, (first_edge,), (second_edge,), pairs)
    edges = [e for e in parent.edges if e.id != first_edge]
    edges += [Edge(edge_map[e.id], mapping[e.u], mapping[e.v], e.weight) for e in child.edges if e.id in edge_map]
    base = WeightedMultigraph(set(parent.vertices) | set(mapping.values()), edges)
    moved = tuple(
        Gluing(g.child, tuple(edge_map[eid] for eid in g.parent_glue), g.child_glue,
               tuple((cv, mapping[pv]) for cv, pv in g.pairs))
        for g in second.recipe.children
    )
    outer = [eid for eid in first.plane.outer_cycle().edges if eid != first_edge]
    outer += [edge_map[eid] for eid in second.plane.outer_cycle().edges if eid != second_edge]
    plane = embed_with_facial_cycle(base, _cycle_of(base, outer))
    if plane is None:
        raise ValidationError('Объединённая база не вкладывается с общим внешним циклом', code='not_planar')
    recipe = SumRecipe(base, first.recipe.children + moved)
    return build_phi(plane, recipe, first.r, first.s)
