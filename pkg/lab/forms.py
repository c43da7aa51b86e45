"""
Форма параметров запуска команд.

Каждая команда manage.py собирает свои опции в RunConfigForm; после
проверки форма отдаёт неизменяемый RunConfig.
"""
from dataclasses import dataclass, field
from pathlib import Path

from django import forms
from django.core.exceptions import ValidationError

COMMANDS = (
    'check_theta', 'find_pattern', 'decompose', 'omega', 'classify',
    'gen_phi', 'bond3', 'verify', 'suite',
)

# Обязательные параметры по командам
REQUIRED = {
    'check_theta': ('graph', 'a', 'b', 'c'),
    'find_pattern': ('graph', 'pattern', 't'),
    'decompose': ('graph', 'mode'),
    'omega': ('graph', 'circlet'),
    'classify': ('graph', 'variant', 't'),
    'gen_phi': ('r', 's', 'size', 'seed', 'count'),
    'bond3': ('graph',),
    'verify': ('graph', 'certificate'),
    'suite': (),
}

GENERAL = ('command', 'graph', 'certificate', 'budget', 'time_limit', 'output')


def validate_existing_file(value):
    """Собственный валидатор: путь указывает на существующий файл"""
    if not Path(value).is_file():
        raise ValidationError(f'Файл {value} не найден', code='missing_file')


def validate_criteria(value):
    """Список номеров критериев через запятую, каждый от 1 до 11"""
    try:
        numbers = [int(x) for x in value.split(',') if x.strip()]
    except ValueError:
        raise ValidationError('Критерии задаются номерами через запятую', code='bad_criteria')
    if not numbers or any(not 1 <= x <= 11 for x in numbers):
        raise ValidationError('Номера критериев - от 1 до 11', code='bad_criteria')


@dataclass(frozen=True)
class RunConfig:
    """Проверенные параметры запуска; params - параметры самой команды"""
    command: str
    graph: str = None
    certificate: str = None
    params: dict = field(default_factory=dict)
    budget: int = None
    time_limit: float = None
    output: str = None

    def to_dict(self):
        data = {'command': self.command, 'params': dict(sorted(self.params.items()))}
        for name in ('graph', 'certificate', 'budget', 'time_limit'):
            value = getattr(self, name)
            if value is not None:
                data[name] = value
        return data


class RunConfigForm(forms.Form):
    """Параметры команды; пустые поля не передаются в RunConfig"""
    command = forms.ChoiceField(choices=[(c, c) for c in COMMANDS], label='Команда')
    graph = forms.CharField(required=False, validators=[validate_existing_file], label='Файл графа')
    certificate = forms.CharField(required=False, validators=[validate_existing_file], label='Файл сертификата')
    a = forms.IntegerField(required=False, min_value=1)
    b = forms.IntegerField(required=False, min_value=1)
    c = forms.IntegerField(required=False, min_value=1)
    t = forms.IntegerField(required=False, min_value=1)
    r = forms.IntegerField(required=False, min_value=2)
    s = forms.IntegerField(required=False, min_value=2)
    n = forms.IntegerField(required=False, min_value=2)
    size = forms.IntegerField(required=False, min_value=3, max_value=40)
    seed = forms.IntegerField(required=False, min_value=0)
    count = forms.IntegerField(required=False, min_value=1, max_value=10_000)
    pattern = forms.CharField(required=False)
    mode = forms.ChoiceField(required=False, choices=[(m, m) for m in ('', 's2', 's3', 'chain', 's_tree')])
    variant = forms.ChoiceField(required=False, choices=[(v, v) for v in ('', '12t', '22t', '1tt', '2tt')])
    circlet = forms.CharField(required=False)
    criteria = forms.CharField(required=False, validators=[validate_criteria])
    budget = forms.IntegerField(required=False, min_value=1, label='Бюджет перебора')
    time_limit = forms.FloatField(required=False, min_value=0, label='Лимит времени, с')
    output = forms.CharField(required=False, label='Файл отчёта')

    def clean(self):
        cleaned_data = super().clean()
        command = cleaned_data.get('command')
        for name in REQUIRED.get(command, ()):
            if cleaned_data.get(name) in (None, '') and name not in self.errors:
                self.add_error(name, f'Параметр обязателен для {command}')
        return cleaned_data

    def to_config(self, extra=None):
        data = self.cleaned_data
        params = {
            name: value for name, value in data.items()
            if name not in GENERAL and value not in (None, '')
        }
        params.update({k: v for k, v in (extra or {}).items() if v is not None})
        return RunConfig(
            command=data['command'],
            graph=data.get('graph') or None,
            certificate=data.get('certificate') or None,
            params=params,
            budget=data.get('budget'),
            time_limit=data.get('time_limit'),
            output=data.get('output') or None,
        )
