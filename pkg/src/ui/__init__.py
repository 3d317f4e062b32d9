# -*- coding: utf-8 -*-
from abc import ABC, abstractmethod
from typing import Any

__all__ = ['Output', 'Parser', 'Printer', 'SCHEMA_TAG', 'UsageError']

SCHEMA_TAG = 'sunit-fermat/1'

type Output = dict[str, Any] | list[dict[str, Any]]


class UsageError(Exception):
    """ The command line could not be parsed. """


class Parser(ABC):
    """ The abstract class defines an interface how to parse the command line. """

    @abstractmethod
    def parse(self, argv: list[str]) -> object:
        """ Parses the arguments. """


class Printer(ABC):
    """ The abstract class defines an interface how to print the output. """

    @abstractmethod
    def print(self, output: Output) -> None:
        """ Prints the output. """
