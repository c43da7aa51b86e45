from django.core.management.base import BaseCommand

from bonds.reduction import bond_theta_equivalence
from graphcore.budget import Unknown
from lab.utils import ReportMixin, add_common_arguments


class Command(ReportMixin, BaseCommand):
    help = 'Связка через три ребра и сверка со сведением к θ_{t,t,t}'
    command_name = 'bond3'
    form_fields = ('graph', 't')

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Файл графа')
        parser.add_argument('--edges', type=int, nargs=3, required=True, metavar=('E1', 'E2', 'E3'))
        parser.add_argument('--t', type=int, help='Число подразбиений (по умолчанию |E| + 1)')
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options, {'edges': options['edges']})
        graph = self.load_graph(config)
        budget = self.make_budget(config)

        def compute():
            report = bond_theta_equivalence(
                graph, *options['edges'], t=config.params.get('t'), budget=budget, strict=False,
            )
            if isinstance(report, Unknown):
                return report
            result = report.to_dict()
            if report.bond is not None:
                result['certificate'] = report.bond.to_dict()
            else:
                # связки нет: взвешенный экземпляр для ручного разбора
                weighted = graph.unit().reweighted({eid: report.t for eid in report.edges})
                result['weighted_instance'] = weighted.to_dict()
            return ('ok' if report.agrees else 'violation'), result

        self.run_guarded(config, compute)
