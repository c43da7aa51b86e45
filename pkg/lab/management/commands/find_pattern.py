from django.core.management.base import BaseCommand

from graphcore.budget import Unknown
from lab.utils import ReportMixin, add_common_arguments
from unavoidable.extract import wheel_or_ladder
from unavoidable.minors import topological_minor
from unavoidable.patterns import pattern_graph

# Имена образцов в командной строке
ALIASES = {'W': 'W', 'L': 'L', 'L+': 'L_plus', 'L_plus': 'L_plus', 'comb': 'comb',
           'W+': 'W_plus', 'W_prime': 'W_prime', 'WL': 'WL'}


class Command(ReportMixin, BaseCommand):
    help = 'Подразбиение образца (W_t, L_t, L_t^+, гребёнка) или W_t / L_t^+ (WL)'
    command_name = 'find_pattern'
    form_fields = ('graph', 'pattern', 't')

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Файл графа')
        parser.add_argument('--pattern', required=True, choices=sorted(ALIASES))
        parser.add_argument('--t', type=int, required=True)
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options)
        graph = self.load_graph(config)
        budget = self.make_budget(config)
        name, t = ALIASES[config.params['pattern']], config.params['t']

        def compute():
            if name == 'WL':
                found = wheel_or_ladder(graph, t, budget)
            else:
                found = topological_minor(graph, pattern_graph(name, t), name, t, budget)
            if isinstance(found, Unknown):
                return found
            if found is None:
                return 'ok', {'found': False}
            return 'ok', {'found': True, 'witness': found.to_dict()}

        self.run_guarded(config, compute)
