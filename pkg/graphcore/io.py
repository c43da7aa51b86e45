"""
Текстовый формат графов.

Первая строка `n m`, далее m строк `u v [w]` (вершины с нуля, вес по
умолчанию 1). Всё после `#` - комментарий.
"""
from pathlib import Path

from django.core.exceptions import ValidationError

from .graph import WeightedMultigraph


def parse_graph(text):
    lines = []
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValidationError('Пустой файл графа', code='parse')
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise ValidationError('Первая строка должна иметь вид "n m"', code='parse')
    if n < 0 or m < 0:
        raise ValidationError('n и m должны быть неотрицательны', code='parse')
    if len(lines) - 1 != m:
        raise ValidationError(f'Ожидалось {m} рёбер, найдено {len(lines) - 1}', code='parse')
    triples = []
    for number, line in enumerate(lines[1:], start=1):
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ValidationError(f'Ребро {number}: ожидается "u v [w]"', code='parse')
        try:
            triples.append(tuple(int(x) for x in parts))
        except ValueError:
            raise ValidationError(f'Ребро {number}: нечисловое значение', code='parse')
    return WeightedMultigraph.from_edges(n, triples)


def read_graph(path):
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as exc:
        raise ValidationError(f'Не удалось прочитать {path}: {exc}', code='parse')
    return parse_graph(text)


def format_graph(graph):
    """Запись в текстовом формате; вершины перенумеровываются плотно"""
    index = {v: i for i, v in enumerate(graph.vertices)}
    lines = [f'{graph.order} {graph.size}']
    for e in graph.edges:
        lines.append(f'{index[e.u]} {index[e.v]} {e.weight}')
    return '\n'.join(lines) + '\n'


def write_graph(graph, path):
    Path(path).write_text(format_graph(graph), encoding='utf-8')
