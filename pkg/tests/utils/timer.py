# -*- coding: utf-8 -*-
import time
from collections.abc import Callable
from functools import partial, wraps
from typing import Any, NamedTuple

type Function = Callable[..., Any]
TimerResult = NamedTuple('TimerResult', [('func', Function), ('time', float), ('value', Any)])


def run_timed(func: Function, /, *args: Any, **kwargs: Any) -> TimerResult:
    """
    Run a function once and measure the wall time.

    :param func: The function to be measured.
    :param args: The arguments to be passed to the function.
    :param kwargs: The keyword arguments to be passed to the function.
    :return: The function, the seconds spent and the returned value.
    """
    if not callable(func):
        raise TypeError('`func` must be a callable object.')
    start = time.perf_counter()
    value = func(*args, **kwargs)
    return TimerResult(func=func, time=time.perf_counter() - start, value=value)


def within_budget(func: Function = None, /, seconds: float = 60.0) -> partial[Function] | Function:
    """
    A decorator that fails the wrapped test when it runs longer than the budget.

    :param func: The test to be measured.
    :param seconds: The runtime budget.
    :return: The wrapped test.
    """
    if func is None:
        return partial(within_budget, seconds=seconds)
    if not isinstance(seconds, (int, float)) or seconds <= 0:
        raise TypeError('`seconds` must be a positive number.')

    @wraps(func)
    def wrapper(*args, **kwargs):
        result = run_timed(func, *args, **kwargs)
        assert result.time <= seconds, f'{func.__name__} took {result.time:.1f}s, budget {seconds:.0f}s'
        return result.value

    return wrapper
