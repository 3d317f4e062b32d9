# -*- coding: utf-8 -*-
from core.client import Client
from model.errors import SUnitError
from ui import UsageError

try:
    from ui.rich_cli import console
except ModuleNotFoundError:
    from ui.cli import console

__all__ = ['SUnitApplication']


class SUnitApplication:
    """ SUnitApplication is the main class of the application. """
    _client = Client()

    def run(self, argv: list[str]) -> int:
        """
        Run one command and return its exit code.

        Verdict commands exit with 0, 2 or 3; operational errors with 1 and an
        interrupt with 130.
        """
        try:
            return self._client.run(argv)
        except KeyboardInterrupt:
            console.error('interrupted')
            return 130
        except (SUnitError, UsageError, OSError) as e:
            console.error(f'{type(e).__name__}: {e}')
            return 1
