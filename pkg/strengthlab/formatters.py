"""Rendering of result tables as CSV, JSON or aligned markdown."""

import csv
import io
import json
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Sequence, Type

from strengthlab.types import OutputFormat

Row = Dict[str, Any]


class BaseTableFormatter(ABC):
    """Turns rows with a fixed column order into text"""

    @abstractmethod
    def render(self, columns: Sequence[str], rows: List[Row]) -> str:
        pass


class CSVFormatter(BaseTableFormatter):
    def render(self, columns: Sequence[str], rows: List[Row]) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({column: _cell(row.get(column)) for column in columns})
        return buffer.getvalue()


class JSONFormatter(BaseTableFormatter):
    def render(self, columns: Sequence[str], rows: List[Row]) -> str:
        ordered = [{column: row.get(column) for column in columns} for row in rows]
        return json.dumps(ordered, indent=2, ensure_ascii=False) + '\n'


class MarkdownFormatter(BaseTableFormatter):
    """Pipe table with every column padded to its widest cell"""

    def render(self, columns: Sequence[str], rows: List[Row]) -> str:
        cells = [[_cell(row.get(column)) for column in columns] for row in rows]
        widths = [
            max([len(column)] + [len(line[index]) for line in cells])
            for index, column in enumerate(columns)
        ]

        def line(values: Sequence[str]) -> str:
            return '| ' + ' | '.join(v.ljust(w) for v, w in zip(values, widths)) + ' |'

        out = [line(columns), '|' + '|'.join('-' * (w + 2) for w in widths) + '|']
        out.extend(line(values) for values in cells)
        return '\n'.join(out) + '\n'


def _cell(value: Any) -> str:
    return '' if value is None else str(value)


_FORMATTERS: Dict[str, Type[BaseTableFormatter]] = {
    'csv': CSVFormatter,
    'json': JSONFormatter,
    'md': MarkdownFormatter,
}


def get_formatter(output_format: OutputFormat) -> BaseTableFormatter:
    if output_format not in _FORMATTERS:
        raise ValueError(f'Unknown output format: {output_format}')
    return _FORMATTERS[output_format]()


def render_table(columns: Sequence[str], rows: List[Row], output_format: OutputFormat) -> str:
    return get_formatter(output_format).render(columns, rows)
