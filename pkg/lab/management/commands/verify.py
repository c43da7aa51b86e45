import json
from pathlib import Path

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand

from lab.utils import ReportMixin
from lab.verification import extract_certificate, verify_certificate


class Command(ReportMixin, BaseCommand):
    help = 'Независимая проверка сертификата (или отчёта команды) на графе'
    command_name = 'verify'
    form_fields = ('graph', 'certificate')

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Файл графа')
        parser.add_argument('certificate', help='JSON-файл сертификата или отчёта')
        parser.add_argument('--output', help='Записать отчёт ещё и в файл')

    def handle(self, *args, **options):
        config = self.get_config(options)
        graph = self.load_graph(config)

        def compute():
            try:
                data = json.loads(Path(config.certificate).read_text(encoding='utf-8'))
            except (OSError, json.JSONDecodeError) as exc:
                raise ValidationError(f'Не удалось прочитать сертификат: {exc}', code='parse')
            if not isinstance(data, dict):
                raise ValidationError('Сертификат должен быть JSON-объектом', code='parse')
            certificate = extract_certificate(data)
            valid = verify_certificate(graph, certificate)
            return ('ok' if valid else 'violation'), {'kind': certificate.get('kind'), 'valid': valid}

        self.run_guarded(config, compute)
