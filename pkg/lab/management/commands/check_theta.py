from django.core.management.base import BaseCommand

from lab.utils import ReportMixin, add_common_arguments
from theta.search import contains_theta, theta_at


class Command(ReportMixin, BaseCommand):
    help = 'Поиск θ_{a,b,c} в графе с сертификатом'
    command_name = 'check_theta'
    form_fields = ('graph', 'a', 'b', 'c')

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Файл графа')
        parser.add_argument('--a', type=int, required=True)
        parser.add_argument('--b', type=int, required=True)
        parser.add_argument('--c', type=int, required=True)
        parser.add_argument('--at', type=int, nargs=2, metavar=('U', 'V'), help='Ветвления θ заданы')
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options, {'at': options.get('at')})
        graph = self.load_graph(config)
        budget = self.make_budget(config)
        a, b, c = config.params['a'], config.params['b'], config.params['c']

        def compute():
            if options.get('at'):
                u, v = options['at']
                cert = theta_at(graph, u, v, a, b, c, budget)
            else:
                cert = contains_theta(graph, a, b, c, budget)
            result = {'found': cert is not None}
            if cert is not None:
                result['certificate'] = cert.to_dict()
            return 'ok', result

        self.run_guarded(config, compute)
