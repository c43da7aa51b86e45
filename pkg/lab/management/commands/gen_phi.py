from pathlib import Path

from django.core.management.base import BaseCommand

from graphclasses.phi import random_phi
from graphcore.io import write_graph
from lab.utils import ReportMixin, add_common_arguments


class Command(ReportMixin, BaseCommand):
    help = 'Случайные члены Φ(L_{r,s}, P_r): файлы графов и рецепты'
    command_name = 'gen_phi'
    form_fields = ('r', 's', 'size', 'seed', 'count')

    def add_arguments(self, parser):
        parser.add_argument('--r', type=int, required=True)
        parser.add_argument('--s', type=int, required=True)
        parser.add_argument('--size', type=int, default=6, help='Длина внешнего цикла базы не больше size')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--count', type=int, default=1)
        parser.add_argument('--out-dir', help='Каталог для файлов phi_<seed>.txt')
        add_common_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_config(options, {'out_dir': options.get('out_dir')})
        params = config.params
        out_dir = Path(options['out_dir']) if options.get('out_dir') else None

        def compute():
            members = []
            for seed in range(params['seed'], params['seed'] + params['count']):
                member = random_phi(params['r'], params['s'], params['size'], seed)
                item = {
                    'seed': seed,
                    'graph': member.graph.to_dict(),
                    'certificate': member.certificate().to_dict(),
                }
                if out_dir is not None:
                    out_dir.mkdir(parents=True, exist_ok=True)
                    path = out_dir / f'phi_{seed}.txt'
                    write_graph(member.graph, path)
                    item['file'] = path.name
                members.append(item)
            return 'ok', {'members': members}

        self.run_guarded(config, compute)
