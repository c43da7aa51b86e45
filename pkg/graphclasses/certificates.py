"""
Сертификаты принадлежности классам и нарушения.

Проверка класса возвращает ClassCertificate, ClassViolation с
нарушенным условием или Unknown при исчерпании бюджета.
"""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ClassCertificate:
    """
    tag - класс ('L', 'L3', 'Pr', 'Pr3', 'cycle', 'outerplanar',
    'nearly_outerplanar', 'C', 'O', 'Phi', 'Phi3'); params - параметры
    класса; evidence - данные для повторной проверки.
    """
    tag: str
    params: dict
    evidence: dict
    witness: object = field(default=None, compare=False)

    member = True

    def to_dict(self):
        return {'kind': 'class', 'class': self.tag, 'params': dict(self.params), 'evidence': self.evidence}


@dataclass(frozen=True)
class ClassViolation:
    """Нарушенное условие clause и свидетель нарушения (путь, ребро и т.п.)"""
    tag: str
    params: dict
    clause: str
    witness: object = None

    member = False

    def to_dict(self):
        data = {'kind': 'class_violation', 'class': self.tag, 'params': dict(self.params), 'clause': self.clause}
        if hasattr(self.witness, 'to_dict'):
            data['witness'] = self.witness.to_dict()
        elif self.witness is not None:
            data['witness'] = self.witness
        return data
