"""
Бюджет переборных алгоритмов.

Каждый точный перебор считает посещённые узлы; при превышении лимита
поднимается BudgetExhausted, и ответ операции - явное "неизвестно",
а не неверное число.
"""
import logging
import time
from dataclasses import dataclass

from django.conf import settings

logger = logging.getLogger(__name__)


class BudgetExhausted(Exception):
    """Лимит перебора исчерпан"""

    def __init__(self, spent, reason='nodes'):
        super().__init__(f'Бюджет перебора исчерпан ({reason}): {spent}')
        self.spent = spent
        self.reason = reason


class Budget:
    """Счётчик узлов перебора с лимитом из настроек THETALAB_BUDGET"""

    def __init__(self, limit=None, time_limit=None):
        self.limit = settings.THETALAB_BUDGET if limit is None else limit
        if self.limit <= 0:
            raise ValueError('Бюджет должен быть положительным')
        self.time_limit = settings.THETALAB_TIME_LIMIT if time_limit is None else time_limit
        self.spent = 0
        self._started = time.monotonic()

    def tick(self, amount=1):
        self.spent += amount
        if self.spent > self.limit:
            logger.warning('Исчерпан бюджет перебора: %s узлов', self.spent)
            raise BudgetExhausted(self.spent)
        if self.time_limit and self.spent % 4096 == 0:
            if time.monotonic() - self._started > self.time_limit:
                logger.warning('Исчерпано время перебора: %.1f с', self.time_limit)
                raise BudgetExhausted(self.spent, reason='time')


def ensure_budget(budget):
    return budget if budget is not None else Budget()


@dataclass(frozen=True)
class Unknown:
    """Ответ "неизвестно" с причиной"""
    reason: str
    spent: int

    @classmethod
    def from_exception(cls, exc):
        return cls(exc.reason, exc.spent)

    def to_dict(self):
        return {'status': 'unknown', 'reason': self.reason, 'spent': self.spent}
