from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand

from decompose.chains import chain_decompose
from decompose.stars import operation_s_tree, s2_decompose, s3_decompose
from lab.utils import ReportMixin, add_common_arguments


def edge_between(graph, ends):
    if not ends:
        raise ValidationError('Нужно ребро --edge U V', code='bad_edge')
    found = graph.edges_between(*ends) if all(v in graph for v in ends) else []
    if not found:
        raise ValidationError(f'Нет ребра {ends[0]}-{ends[1]}', code='bad_edge')
    return found[0]


class Command(ReportMixin, BaseCommand):
    help = 'Разложения S2, S3, цепное разложение и дерево операции S'
    command_name = 'decompose'
    form_fields = ('graph', 'mode')

    def add_arguments(self, parser):
        parser.add_argument('graph', help='Файл графа')
        parser.add_argument('--mode', required=True, choices=('s2', 's3', 'chain', 's_tree'))
        parser.add_argument('--edge', type=int, nargs=2, metavar=('U', 'V'))
        parser.add_argument('--z', type=int, nargs=3, metavar=('A', 'B', 'C'))
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options, {'edge': options.get('edge'), 'z': options.get('z')})
        graph = self.load_graph(config)
        budget = self.make_budget(config)
        mode = config.params['mode']

        def compute():
            if mode == 's3':
                if not options.get('z'):
                    raise ValidationError('Нужно --z A B C', code='bad_vertex')
                return 'ok', {'recipe': s3_decompose(graph, options['z']).to_dict()}
            eid = edge_between(graph, options.get('edge'))
            if mode == 's2':
                return 'ok', {'recipe': s2_decompose(graph, eid).to_dict()}
            if mode == 'chain':
                found = chain_decompose(graph, eid, budget)
                return ('ok' if found.exact else 'unknown'), found.to_dict()
            return 'ok', operation_s_tree(graph, eid, budget).to_dict()

        self.run_guarded(config, compute)
