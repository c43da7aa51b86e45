"""
Классы C(L_n) и O_n: поиск разложения в 2-сумму и генераторы членов.

C(L_n) - графы, полученные 2-суммированием графов из L_n к рёбрам цикла;
O_n - 2-суммированием графов из L_n к свободным рёбрам почти
внешнепланарного графа. Разложение ищется перебором: цикл C графа si(G),
для каждого моста C - дуга C, внутрь которой он уходит (или, для O_n,
хорда остаётся в базе). Вершины C вне дуг образуют базу.
"""
import logging
import random
from itertools import count, product

from graphcore import families
from graphcore.budget import BudgetExhausted, Unknown, ensure_budget
from graphcore.connectivity import bridges_of, is_2connected
from graphcore.graph import Edge, WeightedMultigraph
from graphcore.paths import iter_cycles

from decompose.sums import Gluing, SumRecipe, evaluate

from .certificates import ClassCertificate, ClassViolation
from .members import in_L
from .outerplanar import frame_for

logger = logging.getLogger(__name__)


def _interior(a, b, length):
    """Позиции строго внутри дуги цикла от a до b по направлению обхода"""
    return {(a + i) % length for i in range(1, (b - a) % length)}


def _bridge_options(bridge, position, length, chords):
    feet = sorted(position[v] for v in bridge.feet)
    options = [(feet[(k + 1) % len(feet)], feet[k]) for k in range(len(feet))]
    if chords and bridge.trivial:
        options.append('base')
    return options


def _segment_of(arc, marks, length):
    a, b = arc
    for j, x in enumerate(marks):
        span = (marks[(j + 1) % len(marks)] - x) % length
        if (a - x) % length + (b - a) % length <= span and (a - x) % length < span:
            return j
    raise AssertionError(f'Дуга {arc} не лежит ни в одном сегменте')


def _child_in_L(child, n, budget):
    result = in_L(child, None, n, budget)
    if isinstance(result, Unknown):
        raise BudgetExhausted(result.spent, result.reason)
    return result.member


def _assemble(graph, cycle, bridges, choice, n, budget, chords):
    """Разложение для выбранных дуг или None"""
    length = cycle.length
    covered = set()
    for bridge, option in zip(bridges, choice):
        if option != 'base':
            covered |= _interior(option[0], option[1], length)
    marks = [i for i in range(length) if i not in covered]
    if len(marks) < 2:
        return None
    position = {v: i for i, v in enumerate(cycle.vertices)}
    base_chords = []
    assigned = {j: [] for j in range(len(marks))}
    for bridge, option in zip(bridges, choice):
        if option == 'base':
            if any(position[v] not in marks for v in bridge.feet):
                return None
            base_chords.extend(bridge.edges)
        else:
            assigned[_segment_of(option, marks, length)].append(bridge)

    fresh = count(graph.max_edge_id() + 1)
    base_edges = [graph.edge(eid) for eid in base_chords]
    virtual = {}
    gluings = []
    for j, start in enumerate(marks):
        stop = marks[(j + 1) % len(marks)]
        steps = (stop - start) % length
        piece = [cycle.edges[(start + i) % length] for i in range(steps)]
        for bridge in assigned[j]:
            piece.extend(bridge.edges)
        x, y = cycle.vertices[start], cycle.vertices[stop]
        if len(piece) == 1:
            base_edges.append(graph.edge(piece[0]))
            continue
        parent_edge = Edge(next(fresh), x, y, 1)
        child_edge = Edge(next(fresh), x, y, 1)
        child = WeightedMultigraph((), [graph.edge(eid) for eid in piece] + [child_edge])
        if not _child_in_L(child, n, budget):
            return None
        base_edges.append(parent_edge)
        virtual[parent_edge.id] = frozenset((x, y))
        gluings.append(Gluing(SumRecipe(child), (parent_edge.id,), (child_edge.id,), ((x, x), (y, y))))

    order = [cycle.vertices[i] for i in marks]
    base = WeightedMultigraph(order, base_edges)
    frame = None
    if chords:
        frame = frame_for(base, order)
        if frame is None or any(pair not in frame.free_pairs for pair in virtual.values()):
            return None
    recipe = SumRecipe(base, tuple(gluings))
    assert evaluate(recipe).same_as(graph), 'Рецепт разложения не восстанавливает граф'
    return recipe, frame


def _whole_graph_recipe(graph):
    """G из L_n: 2-цикл из ребра f и виртуального ребра, ребёнок G - f + виртуальное ребро"""
    f = graph.edge(min(graph.edge_ids))
    fresh = count(graph.max_edge_id() + 1)
    parent_edge = Edge(next(fresh), f.u, f.v, 1)
    child_edge = Edge(next(fresh), f.u, f.v, 1)
    base = WeightedMultigraph((), [f, parent_edge])
    child = graph.remove_edges([f.id]).add_edges([child_edge])
    pairs = ((f.u, f.u), (f.v, f.v))
    return SumRecipe(base, (Gluing(SumRecipe(child), (parent_edge.id,), (child_edge.id,), pairs),))


def _search(graph, n, budget, chords, tag):
    params = {'n': n}
    if not is_2connected(graph):
        return ClassViolation(tag, params, 'not_2connected')
    budget = ensure_budget(budget)
    try:
        whole = in_L(graph, None, n, budget)
        if isinstance(whole, Unknown):
            raise BudgetExhausted(whole.spent, whole.reason)
        if whole.member:
            recipe = _whole_graph_recipe(graph)
            frame = frame_for(recipe.graph, sorted(recipe.graph.vertices)) if chords else None
            return _certificate(tag, params, recipe, frame)
        for cycle in iter_cycles(graph, budget):
            host = graph.edge_subgraph(cycle.edges)
            bridges = bridges_of(graph, host).bridges
            position = {v: i for i, v in enumerate(cycle.vertices)}
            options = [_bridge_options(b, position, cycle.length, chords) for b in bridges]
            for choice in product(*options):
                budget.tick()
                found = _assemble(graph, cycle, bridges, choice, n, budget, chords)
                if found is not None:
                    return _certificate(tag, params, *found)
    except BudgetExhausted as exc:
        logger.warning('Поиск разложения %s прерван: %s', tag, exc)
        return Unknown.from_exception(exc)
    return ClassViolation(tag, params, 'no_decomposition')


def _certificate(tag, params, recipe, frame):
    evidence = {'base': recipe.graph.to_dict(), 'recipe': recipe.to_dict()}
    if frame is not None:
        evidence['frame'] = frame.to_dict()
    return ClassCertificate(tag, params, evidence, recipe)


def in_cycle_sum(graph, n, budget=None):
    """Принадлежность C(L_n): сертификат с рецептом, нарушение или Unknown"""
    return _search(graph, n, budget, chords=False, tag='C')


def in_o_class(graph, n, budget=None):
    """Принадлежность O_n: база почти внешнепланарна, дети приклеены к свободным рёбрам"""
    return _search(graph, n, budget, chords=True, tag='O')


def _fat_triangle():
    return WeightedMultigraph.from_edges(3, [(0, 1), (1, 2), (0, 2), (0, 1), (1, 2), (0, 2)])


def random_summand(rng, t):
    """Случайный член L_t для t >= 3"""
    shapes = [lambda: families.cycle(rng.randint(3, t)), _fat_triangle]
    if t >= 4:
        shapes.append(lambda: families.complete(4))
    return rng.choice(shapes)()


def _glue_summands(rng, base, sites, t):
    children = []
    for eid in sites:
        child = random_summand(rng, t)
        glue = rng.choice(child.edge_ids)
        a, b = sorted(child.edge(glue).ends)
        x, y = sorted(base.edge(eid).ends)
        if rng.random() < 0.5:
            x, y = y, x
        children.append(Gluing(SumRecipe(child), (eid,), (glue,), ((a, x), (b, y))))
    recipe = SumRecipe(base, tuple(children))
    return evaluate(recipe), recipe


def random_cycle_sum(t, size, seed):
    """Случайный член C(L_t): цикл длины до size и слагаемые из L_t на части рёбер"""
    rng = random.Random(seed)
    base = families.cycle(rng.randint(3, max(3, size)))
    sites = [eid for eid in base.edge_ids if rng.random() < 0.5]
    return _glue_summands(rng, base, sites, t)


def random_o_member(t, size, seed):
    """
    Случайный член O_t: цикл с хордами, допустимыми для почти внешнепланарного
    графа, и слагаемые из L_t на свободных рёбрах.
    """
    rng = random.Random(seed)
    m = rng.randint(4, max(4, size))
    order = list(range(m))
    base = families.cycle(m)
    for _ in range(m):
        a = rng.randrange(m)
        b = (a + rng.randint(2, m - 2)) % m
        if rng.random() < 0.5 and (b - a) % m >= 3:
            pairs = [(a, (b + 1) % m), ((a + 1) % m, b)]
        else:
            pairs = [(a, b)]
        if any(base.edges_between(u, v) for u, v in pairs):
            continue
        candidate = families.with_extra_edges(base, pairs)
        if frame_for(candidate, order) is not None:
            base = candidate
    frame = frame_for(base, order)
    sites = [eid for eid in frame.free_edges if rng.random() < 0.5]
    logger.debug('База O_%s: %s вершин, %s хорд, слагаемых %s', t, m, base.size - m, len(sites))
    return _glue_summands(rng, base, sites, t)
