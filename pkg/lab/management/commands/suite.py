import logging

from django.conf import settings
from django.core.management.base import BaseCommand

from lab.criteria import CRITERIA, Scale, run_criteria
from lab.models import CriterionOutcome, Status, SuiteRun
from lab.utils import ReportMixin, add_common_arguments, dump_report

logger = logging.getLogger(__name__)


class Command(ReportMixin, BaseCommand):
    help = 'Приёмочные критерии: оракулы, генераторы классов, сведение для связок'
    command_name = 'suite'
    form_fields = ('criteria',)

    def add_arguments(self, parser):
        parser.add_argument('--criteria', help='Номера критериев через запятую (по умолчанию все)')
        parser.add_argument('--quick', action='store_true', help='Уменьшенный масштаб переборов')
        parser.add_argument('--record', action='store_true', help='Сохранить прогон в базу данных')
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options, {'quick': options.get('quick') or None})
        if 'criteria' in config.params:
            numbers = [int(x) for x in config.params['criteria'].split(',') if x.strip()]
        else:
            numbers = sorted(CRITERIA)
        scale = Scale(bool(options.get('quick')), config.budget, config.time_limit)
        results = run_criteria(numbers, scale)

        if any(r.status == Status.FAILED for r in results):
            status = 'violation'
        elif any(r.status == Status.UNKNOWN for r in results):
            status = 'unknown'
        else:
            status = 'ok'
        result = {'criteria': [r.to_dict() for r in results]}

        if options.get('record'):
            self.record(config, scale, status, result, results)
        self.emit(config, status, result)

    def record(self, config, scale, status, result, results):
        statuses = {'ok': Status.PASSED, 'violation': Status.FAILED, 'unknown': Status.UNKNOWN}
        run = SuiteRun.objects.create(
            version=settings.THETALAB_VERSION,
            quick=scale.quick,
            status=statuses[status],
            report=dump_report(self.get_report(config, status, result)),
        )
        CriterionOutcome.objects.bulk_create([
            CriterionOutcome(
                run=run,
                number=r.number,
                name=r.name,
                status=r.status,
                checked=r.checked,
                failures=len(r.failures),
                unknown=r.unknown,
            )
            for r in results
        ])
        logger.info('Прогон %s сохранён', run.pk)
