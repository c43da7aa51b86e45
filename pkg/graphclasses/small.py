"""
Классификация графов без малых тета: θ_{1,2,t}, θ_{2,2,t}, θ_{1,t,t}, θ_{2,t,t}.

Граф либо содержит тета, либо лежит в классе варианта (цикл,
внешнепланарный граф, C(L_{8t^2}), O_n), либо ответ "ни то ни другое"
вместе с l(G) и порогом, ниже которого такой ответ допустим.
"""
import logging
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from graphcore.budget import BudgetExhausted, Unknown, ensure_budget
from graphcore.connectivity import is_2connected, is_connected, is_simple
from graphcore.paths import longest_path
from graphcore.planar import PlaneGraph
from theta.search import contains_theta

from .bounds import BoundTable
from .certificates import ClassCertificate
from .cyclesums import in_cycle_sum, in_o_class
from .outerplanar import is_outerplanar

logger = logging.getLogger(__name__)

VARIANTS = ('12t', '22t', '1tt', '2tt')


def thresholds_for(variant, t):
    a, b = int(variant[0]), variant[1]
    return (a, t if b == 't' else int(b), t)


@dataclass(frozen=True)
class SmallThetaOutcome:
    """kind: 'theta', 'in_class' или 'neither'"""
    kind: str
    certificate: object = None
    longest: int = None
    threshold: int = None

    def to_dict(self):
        data = {'kind': 'small_theta', 'outcome': self.kind}
        if self.certificate is not None:
            data['certificate'] = self.certificate.to_dict()
        if self.kind == 'neither':
            data['longest_path'] = self.longest
            data['threshold'] = self.threshold
        return data


def is_cycle(graph):
    if graph.order < 3 or not is_connected(graph) or any(graph.degree(v) != 2 for v in graph.vertices):
        return None
    return ClassCertificate('cycle', {}, {'length': graph.order})


def _class_check(graph, variant, t, n, budget):
    if variant == '12t':
        return is_cycle(graph)
    if variant == '22t':
        result = is_outerplanar(graph)
        if isinstance(result, PlaneGraph):
            return ClassCertificate('outerplanar', {}, {'plane': result.to_dict()}, result)
        return None
    if variant == '1tt':
        result = in_cycle_sum(graph, BoundTable.cycle_sum_class(t), budget)
    else:
        result = in_o_class(graph, n or BoundTable.cycle_sum_class(t), budget)
    if isinstance(result, Unknown):
        raise BudgetExhausted(result.spent, result.reason)
    return result if result.member else None


def classify_small_theta(graph, variant, t, n=None, budget=None):
    """
    Тета, класс варианта или "ни то ни другое" с l(G).

    Для 2tt индекс класса O_n задаётся явно; по умолчанию берётся 8t^2.
    """
    if variant not in VARIANTS:
        raise ValidationError(f'Неизвестный вариант {variant}', code='bad_variant')
    if t < (3 if variant in ('1tt', '2tt') else 2):
        raise ValidationError(f'Слишком малое t={t} для варианта {variant}', code='bad_t')
    if not is_2connected(graph):
        raise ValidationError('Граф должен быть 2-связным', code='not_2connected')
    if variant == '12t' and not is_simple(graph):
        raise ValidationError('Для θ_{1,2,t} граф должен быть простым', code='not_simple')
    budget = ensure_budget(budget)
    try:
        cert = contains_theta(graph, *thresholds_for(variant, t), budget=budget)
        if cert is not None:
            return SmallThetaOutcome('theta', cert)
        member = _class_check(graph, variant, t, n, budget)
        if member is not None:
            return SmallThetaOutcome('in_class', member)
        longest = longest_path(graph, budget).edges
    except BudgetExhausted as exc:
        return Unknown.from_exception(exc)
    threshold = BoundTable.small_theta_length(t) if variant in ('12t', '22t') else None
    if threshold is not None:
        assert longest < threshold, f'Граф с l(G)={longest} без θ и вне класса {variant}'
    logger.info('Вариант %s, t=%s: ни тета, ни класс; l(G)=%s', variant, t, longest)
    return SmallThetaOutcome('neither', longest=longest, threshold=threshold)
