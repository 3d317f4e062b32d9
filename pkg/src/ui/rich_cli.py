# -*- coding: utf-8 -*-
import json
from functools import partial
from typing import Any, override

from ui import Output, Printer

try:
    from rich import traceback
    from rich.console import Console
    from rich.table import Table
    from rich.theme import Theme
except ModuleNotFoundError:
    raise ModuleNotFoundError(
        'The rich library is not installed.'
        ' Please install it by running `python -m pip install rich`.'
    )

__all__ = ['RichPrinter', 'console', 'set_verbose']

traceback.install(show_locals=True, word_wrap=True)

console = Console(stderr=True, theme=Theme(
    {
        'info': 'bold blue',
        'success': 'bold green',
        'warning': 'bold yellow',
        'error': 'bold red',
        'debug': 'bold grey50'
    }
))
console.info = partial(console.print, style='info')
console.success = partial(console.print, style='success')
console.warning = partial(console.print, style='warning')
console.error = partial(console.print, style='error')
console.debug = lambda *args, **kwargs: None


def set_verbose(verbose: bool) -> None:
    """ Switch the debug messages on or off. """
    console.debug = partial(console.print, style='debug') if verbose else (lambda *args, **kwargs: None)


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, default=str)
    return '' if value is None else str(value)


class RichPrinter(Printer):
    """
    The class implements the printer of --pretty.
    Using the library `rich` to print tables to stdout.
    """
    _out = Console()

    @override
    def print(self, output: Output) -> None:
        """ Print one object as a key/value table and a list of objects as one row each. """
        if isinstance(output, dict):
            table = Table(border_style='bold grey70', show_header=False)
            table.add_column('key', style='light_cyan3', no_wrap=True)
            table.add_column('value', style='grey100')
            for key, value in output.items():
                table.add_row(str(key), _cell(value))
            self._out.print(table)
            return

        columns = list(dict.fromkeys(key for row in output for key in row))
        table = Table(border_style='bold grey70')
        for name in columns:
            table.add_column(name, style='dark_sea_green3', header_style='bold dark_sea_green3')
        for row in output:
            table.add_row(*(_cell(row.get(name)) for name in columns))
        self._out.print(table)
        self._out.print(f'Total: {len(output)}', style='bold yellow')
