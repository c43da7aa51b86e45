from django.core.management.base import BaseCommand

from lab.utils import ReportMixin, add_common_arguments
from omega.circlets import Circlet
from omega.dichotomy import omega_facial_or_cross, omega_facial_or_cross_edges


class Command(ReportMixin, BaseCommand):
    help = 'Ω-цикл, ограничивающий грань, или крест на Ω-цикле'
    command_name = 'omega'
    form_fields = ('graph', 'circlet')

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Файл графа')
        parser.add_argument('--circlet', required=True, help='"v1,v2,...;e1,e2,..."')
        parser.add_argument('--edges-form', action='store_true', help='Крест с рёбрами Ω на трёх дугах')
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options, {'edges_form': options.get('edges_form') or None})
        graph = self.load_graph(config)
        budget = self.make_budget(config)

        def compute():
            circlet = Circlet.parse(config.params['circlet'])
            search = omega_facial_or_cross_edges if options.get('edges_form') else omega_facial_or_cross
            outcome = search(graph, circlet, budget)
            return 'ok', {'certificate': outcome.to_dict()}

        self.run_guarded(config, compute)
