"""
Утилиты для команд приложения lab.
Содержит общий миксин для сборки, вывода и записи JSON-отчётов.
"""
import json
import logging
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from graphcore.budget import Budget, BudgetExhausted, Unknown
from graphcore.io import read_graph

from .forms import RunConfigForm

logger = logging.getLogger(__name__)

# Коды завершения
EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3

STATUS_CODES = {'ok': EXIT_OK, 'violation': EXIT_VIOLATION, 'unknown': EXIT_UNKNOWN}


def add_common_arguments(parser):
    parser.add_argument('--budget', type=int, help='Лимит узлов перебора (по умолчанию THETALAB_BUDGET)')
    parser.add_argument('--time-limit', type=float, help='Лимит времени перебора в секундах')
    parser.add_argument('--output', help='Записать отчёт ещё и в файл')


def dump_report(report):
    return json.dumps(report, sort_keys=True, ensure_ascii=False, indent=2)


class ReportMixin:
    """
    Миксин для команд manage.py.
    Проверяет параметры формой, читает граф, переводит исключения
    в коды завершения и печатает отчёт.
    """
    command_name = None
    form_fields = ()

    def get_config(self, options, extra=None):
        """Проверка опций формой RunConfigForm; ошибки - код 3"""
        data = {'command': self.command_name}
        for name in self.form_fields + ('budget', 'time_limit', 'output'):
            value = options.get(name)
            if value is not None:
                data[name] = value
        form = RunConfigForm(data=data)
        if not form.is_valid():
            errors = '; '.join(f'{name}: {" ".join(msgs)}' for name, msgs in form.errors.items())
            raise CommandError(f'Неверные параметры: {errors}', returncode=EXIT_INPUT)
        return form.to_config(extra)

    def make_budget(self, config):
        return Budget(config.budget, config.time_limit)

    def load_graph(self, config):
        try:
            return read_graph(config.graph)
        except ValidationError as exc:
            raise CommandError(f'Ошибка чтения графа: {" ".join(exc.messages)}', returncode=EXIT_INPUT)

    def get_report(self, config, status, result):
        """Отчёт без отметок времени: одинаковые запуски дают одинаковые байты"""
        return {
            'tool': 'theta-lab',
            'version': settings.THETALAB_VERSION,
            'schema': settings.THETALAB_REPORT_VERSION,
            'command': config.command,
            'config': config.to_dict(),
            'status': status,
            'result': result,
        }

    def emit(self, config, status, result):
        text = dump_report(self.get_report(config, status, result))
        self.stdout.write(text)
        if config.output:
            Path(config.output).write_text(text + '\n', encoding='utf-8')
        if status != 'ok':
            raise CommandError(f'Статус {status}', returncode=STATUS_CODES[status])

    def run_guarded(self, config, compute):
        """
        compute() возвращает (status, result) или Unknown.

        ValidationError - ошибка входа (код 3), BudgetExhausted - неизвестно
        (код 2), AssertionError - опровергнутое утверждение (код 1).
        """
        try:
            outcome = compute()
        except ValidationError as exc:
            code = getattr(exc, 'code', None) or 'invalid'
            raise CommandError(f'{code}: {" ".join(exc.messages)}', returncode=EXIT_INPUT)
        except BudgetExhausted as exc:
            outcome = Unknown.from_exception(exc)
        except AssertionError as exc:
            logger.error('Команда %s: %s', config.command, exc)
            outcome = ('violation', {'error': str(exc), 'code': getattr(exc, 'code', 'assertion')})
        if isinstance(outcome, Unknown):
            outcome = ('unknown', outcome.to_dict())
        status, result = outcome
        self.emit(config, status, result)
