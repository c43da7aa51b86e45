"""
Автотесты для приложения lab
"""
import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from graphcore import families
from graphcore.errors import Falsified
from graphcore.graph import WeightedMultigraph
from graphcore.io import write_graph
from lab.criteria import Scale, run_criteria
from lab.forms import RunConfigForm
from lab.management.commands.omega import Command as OmegaCommand
from lab.models import CriterionOutcome, Status, SuiteRun
from lab.verification import verify_certificate


class CommandMixin:
    """Временный каталог с файлами графов и запуск команд с разбором JSON"""

    def setUp(self):
        super().setUp()
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)

    def graph_file(self, graph, name='graph.txt'):
        path = self.dir / name
        write_graph(graph, path)
        return str(path)

    def run_command(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return json.loads(out.getvalue()), out.getvalue()

    def returncode(self, *args, **options):
        with self.assertRaises(CommandError) as ctx:
            call_command(*args, stdout=StringIO(), **options)
        return ctx.exception.returncode


class CheckThetaCommandTest(CommandMixin, SimpleTestCase):
    """Тесты для команды check_theta"""

    def test_cycle_has_no_theta(self):
        report, _ = self.run_command('check_theta', self.graph_file(families.cycle(6)), a=1, b=2, c=5)
        self.assertEqual(report['status'], 'ok')
        self.assertFalse(report['result']['found'])
        self.assertEqual(report['tool'], 'theta-lab')
        self.assertEqual(report['config']['params'], {'a': 1, 'b': 2, 'c': 5})

    def test_found_and_verified(self):
        graph_path = self.graph_file(families.complete_bipartite(2, 3))
        output = str(self.dir / 'report.json')
        report, _ = self.run_command('check_theta', graph_path, a=2, b=2, c=2, output=output)
        self.assertTrue(report['result']['found'])
        self.assertEqual(report['result']['certificate']['kind'], 'theta')
        checked, _ = self.run_command('verify', graph_path, output)
        self.assertTrue(checked['result']['valid'])

    def test_deterministic_output(self):
        """Тест: одинаковые запуски дают одинаковый JSON"""
        graph_path = self.graph_file(families.wheel(5))
        _, first = self.run_command('check_theta', graph_path, a=2, b=2, c=3)
        _, second = self.run_command('check_theta', graph_path, a=2, b=2, c=3)
        self.assertEqual(first, second)

    def test_malformed_graph(self):
        path = self.dir / 'bad.txt'
        path.write_text('3 2\n0 1\n', encoding='utf-8')
        self.assertEqual(self.returncode('check_theta', str(path), a=1, b=1, c=1), 3)

    def test_missing_file(self):
        self.assertEqual(self.returncode('check_theta', str(self.dir / 'none.txt'), a=1, b=1, c=1), 3)

    def test_bad_threshold(self):
        self.assertEqual(self.returncode('check_theta', self.graph_file(families.cycle(4)), a=0, b=1, c=1), 3)


class Bond3CommandTest(CommandMixin, SimpleTestCase):
    """Тесты для команды bond3"""

    def test_star_triple(self):
        graph_path = self.graph_file(families.complete(4))
        output = str(self.dir / 'bond.json')
        report, _ = self.run_command('bond3', graph_path, edges=[0, 1, 2], output=output)
        self.assertEqual(report['status'], 'ok')
        self.assertTrue(report['result']['reduction_agrees'])
        self.assertEqual(report['result']['bond']['side'], [0])
        checked, _ = self.run_command('verify', graph_path, output)
        self.assertEqual(checked['result'], {'kind': 'bond', 'valid': True})

    def test_triangle_triple(self):
        report, _ = self.run_command('bond3', self.graph_file(families.complete(4)), edges=[0, 1, 3])
        self.assertIsNone(report['result']['bond'])
        self.assertIn('weighted_instance', report['result'])

    def test_budget_exhausted(self):
        code = self.returncode('bond3', self.graph_file(families.complete(4)), edges=[0, 1, 3], budget=1)
        self.assertEqual(code, 2)

    def test_repeated_edge(self):
        self.assertEqual(self.returncode('bond3', self.graph_file(families.complete(4)), edges=[0, 0, 1]), 3)


class OtherCommandsTest(CommandMixin, SimpleTestCase):
    """Тесты для остальных команд"""

    def test_find_pattern(self):
        report, _ = self.run_command('find_pattern', self.graph_file(families.wheel(4)), pattern='W', t=4)
        self.assertTrue(report['result']['found'])
        self.assertEqual(report['result']['witness']['kind'], 'pattern')

    def test_decompose_chain_verified(self):
        graph_path = self.graph_file(families.cycle(5))
        output = str(self.dir / 'chain.json')
        report, _ = self.run_command('decompose', graph_path, mode='chain', edge=[0, 1], output=output)
        self.assertTrue(report['result']['exact'])
        checked, _ = self.run_command('verify', graph_path, output)
        self.assertTrue(checked['result']['valid'])

    def test_decompose_missing_edge(self):
        code = self.returncode('decompose', self.graph_file(families.cycle(5)), mode='s2', edge=[0, 2])
        self.assertEqual(code, 3)

    def test_classify(self):
        report, _ = self.run_command('classify', self.graph_file(families.cycle(10)), variant='12t', t=2)
        self.assertEqual(report['result']['outcome'], 'in_class')

    def test_omega(self):
        report, _ = self.run_command('omega', self.graph_file(families.complete(5)), circlet='0,1,2,3')
        self.assertIn(report['result']['certificate']['outcome'], ('facial', 'cross'))

    def test_gen_phi(self):
        out_dir = self.dir / 'phi'
        report, _ = self.run_command('gen_phi', r=2, s=3, size=6, seed=4, count=2, out_dir=str(out_dir))
        members = report['result']['members']
        self.assertEqual([m['seed'] for m in members], [4, 5])
        self.assertTrue((out_dir / 'phi_4.txt').is_file())
        graph = WeightedMultigraph.from_dict(members[0]['graph'])
        self.assertTrue(verify_certificate(graph, members[0]['certificate']))

    def test_verify_unknown_kind(self):
        graph_path = self.graph_file(families.cycle(4))
        cert = self.dir / 'cert.json'
        cert.write_text(json.dumps({'kind': 'magic'}), encoding='utf-8')
        self.assertEqual(self.returncode('verify', graph_path, str(cert)), 3)

    def test_verify_rejects(self):
        """Тест: сертификат K4 не подходит к C4"""
        cert = self.dir / 'bond.json'
        cert.write_text(json.dumps({'kind': 'bond', 'side': [0], 'cut_edges': [0, 1, 2]}), encoding='utf-8')
        self.assertEqual(self.returncode('verify', self.graph_file(families.cycle(4)), str(cert)), 1)


class FalsifiedExitTest(CommandMixin, SimpleTestCase):
    """Тесты для перевода опровергнутого утверждения в код завершения"""

    def test_neither_outcome_is_violation(self):
        """Тест: исход 'ни грани, ни креста' даёт статус violation, код 1 и код ошибки в отчёте"""
        out = StringIO()
        command = OmegaCommand(stdout=out)
        config = command.get_config({'graph': self.graph_file(families.complete(5)), 'circlet': '0,1,2,3'})

        def compute():
            raise Falsified('Нет ни граничного Ω-цикла, ни креста', code='neither_facial_nor_cross')

        with self.assertRaises(CommandError) as ctx:
            command.run_guarded(config, compute)
        self.assertEqual(ctx.exception.returncode, 1)
        report = json.loads(out.getvalue())
        self.assertEqual(report['status'], 'violation')
        self.assertEqual(report['result']['code'], 'neither_facial_nor_cross')

    def test_plain_assertion(self):
        """Тест: AssertionError без кода получает код assertion"""
        out = StringIO()
        command = OmegaCommand(stdout=out)
        config = command.get_config({'graph': self.graph_file(families.complete(5)), 'circlet': '0,1,2,3'})

        def compute():
            raise AssertionError('Сертификат не прошёл проверку')

        with self.assertRaises(CommandError) as ctx:
            command.run_guarded(config, compute)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertEqual(json.loads(out.getvalue())['result']['code'], 'assertion')


class RunConfigFormTest(SimpleTestCase):
    """Тесты для формы параметров запуска"""

    def test_missing_required(self):
        form = RunConfigForm(data={'command': 'gen_phi', 'r': 2})
        self.assertFalse(form.is_valid())
        self.assertIn('s', form.errors)
        self.assertIn('count', form.errors)

    def test_config(self):
        form = RunConfigForm(data={'command': 'suite', 'criteria': '1,5', 'budget': 100})
        self.assertTrue(form.is_valid())
        config = form.to_config({'quick': True})
        self.assertEqual(config.budget, 100)
        self.assertEqual(config.params, {'criteria': '1,5', 'quick': True})

    def test_bad_criteria(self):
        form = RunConfigForm(data={'command': 'suite', 'criteria': '0,12'})
        self.assertFalse(form.is_valid())
        self.assertIn('criteria', form.errors)


class SuiteCommandTest(CommandMixin, TestCase):
    """Тесты для команды suite и сохранения прогонов"""

    def test_record(self):
        report, _ = self.run_command('suite', criteria='5,7', quick=True, record=True)
        self.assertEqual(report['status'], 'ok')
        self.assertEqual([c['number'] for c in report['result']['criteria']], [5, 7])
        run = SuiteRun.objects.get()
        self.assertEqual(run.status, Status.PASSED)
        self.assertTrue(run.quick)
        self.assertEqual(CriterionOutcome.objects.filter(run=run, status=Status.PASSED).count(), 2)

    def test_without_record(self):
        self.run_command('suite', criteria='11', quick=True)
        self.assertFalse(SuiteRun.objects.exists())


class CriteriaTest(SimpleTestCase):
    """Тесты для отдельных приёмочных критериев"""

    def test_omega_counts_only_satisfied_pairs(self):
        """Тест: пары, не подходящие под условия, не входят в нужное число проверок"""
        (result,) = run_criteria([9], Scale(quick=True))
        self.assertEqual(result.failures, [])
        self.assertGreaterEqual(result.checked + result.unknown, 40)

    def test_ef_theta_quick(self):
        """Тест: ef-теты на графах до 5 вершин, включая рёбра с общим концом"""
        (result,) = run_criteria([4], Scale(quick=True))
        self.assertEqual(result.failures, [])
        self.assertGreater(result.checked, 0)
