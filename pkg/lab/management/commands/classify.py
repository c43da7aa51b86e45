from django.core.management.base import BaseCommand

from graphclasses.small import classify_small_theta
from graphcore.budget import Unknown
from lab.utils import ReportMixin, add_common_arguments


class Command(ReportMixin, BaseCommand):
    help = 'Классификация графа без θ_{1,2,t}, θ_{2,2,t}, θ_{1,t,t} или θ_{2,t,t}'
    command_name = 'classify'
    form_fields = ('graph', 'variant', 't', 'n')

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Файл графа')
        parser.add_argument('--variant', required=True, choices=('12t', '22t', '1tt', '2tt'))
        parser.add_argument('--t', type=int, required=True)
        parser.add_argument('--n', type=int, help='Индекс класса O_n для 2tt (по умолчанию 8t^2)')
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options)
        graph = self.load_graph(config)
        budget = self.make_budget(config)
        params = config.params

        def compute():
            outcome = classify_small_theta(graph, params['variant'], params['t'], params.get('n'), budget)
            if isinstance(outcome, Unknown):
                return outcome
            return 'ok', outcome.to_dict()

        self.run_guarded(config, compute)
