#************************************************************************************************************************************************
#
# Copyright 2017-2020 David Briant
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
#************************************************************************************************************************************************


"""Pipeable is a decorator that lets a function take its arguments via >> as well as ()

x >> F   and   F >> x   both bind x to the next free parameter of F
F(..., y)               binds y and leaves a hole that the next >> fills

When every parameter without a default is bound the wrapped function is called, so

    rho('E21') >> Substitute(..., TRIVIAL) >> FockMatrixOf(dim=6)
    actual >> AssertEqual >> expected

read left to right. Keyword arguments are only ever bound with ().
"""

from __future__ import annotations

from typing import Any
import inspect, types


def Pipeable(*args, pipeOnly=False):

    def _DecorateWithPF(fn):
        positional, required = [], []
        for name, parameter in inspect.signature(fn).parameters.items():
            if parameter.kind in (inspect.Parameter.VAR_POSITIONAL, inspect.Parameter.VAR_KEYWORD):
                raise TypeError('Function must not include *%s or **%s' % (name, name))
            if parameter.kind is inspect.Parameter.POSITIONAL_ONLY:
                raise TypeError('Function must not have positional only parameters (%s)' % name)
            if parameter.kind is not inspect.Parameter.KEYWORD_ONLY:
                positional.append(name)
            if parameter.default is inspect.Parameter.empty:
                required.append(name)
        return PipeableFunction(fn, tuple(positional), tuple(required), (), {}, pipeOnly)

    if len(args) == 1 and isinstance(args[0], (types.FunctionType, types.MethodType)):
        # of form @Pipeable
        return _DecorateWithPF(args[0])
    else:
        # of form @Pipeable() or @Pipeable(pipeOnly=True)
        return _DecorateWithPF


class PipeableFunction(object):
    # accumulates positional arguments (possibly ... holes) until the required ones are all present
    __slots__ = ['_fn', '_positional', '_required', '_args', '_kwargs', '_pipeOnly']

    def __init__(self, fn, positional, required, args, kwargs, pipeOnly):
        self._fn = fn
        self._positional = positional
        self._required = required
        self._args = args
        self._kwargs = kwargs
        self._pipeOnly = pipeOnly

    def __repr__(self) -> str:
        bound = ', '.join(['...' if a is ... else repr(a) for a in self._args] + ['%s=%r' % kv for kv in self._kwargs.items()])
        return 'Pipeable=>%s(%s)' % (self._fn.__name__, bound)

    @property
    def __doc__(self):
        return self._fn.__doc__

    def __call__(self, *args, **kwargs) -> Any:
        if self._pipeOnly:
            raise TypeError('Cannot add arguments to %s using ()' % self._fn.__name__)
        newArgs = self._args
        earlierHoles = sum(1 for a in self._args if a is ...)
        for arg in args:
            # holes left by earlier bindings fill first, holes opened in this call stay open
            if arg is not ... and earlierHoles:
                newArgs = _fill(newArgs, arg)
                earlierHoles -= 1
            else:
                newArgs = newArgs + (arg,)
        newKwargs = dict(self._kwargs)
        for name in kwargs:
            if name in newKwargs:
                raise TypeError('%s>>"%s" is already bound' % (self._fn.__name__, name))
        newKwargs.update(kwargs)
        return self._next(newArgs, newKwargs)

    def __rrshift__(self, lhs: Any) -> Any:
        # lhs >> self
        return self._next(_fill(self._args, lhs), self._kwargs)

    def __rshift__(self, rhs: Any) -> Any:
        # self >> rhs
        return self._next(_fill(self._args, rhs), self._kwargs)

    def _next(self, args, kwargs):
        if any(a is ... for a in args):
            return PipeableFunction(self._fn, self._positional, self._required, args, kwargs, self._pipeOnly)
        # positional values go to the parameters, in order, that are not bound by keyword
        free = [name for name in self._positional if name not in kwargs]
        if len(args) > len(free):
            raise TypeError('%s takes %d positional arguments but %d were given' % (self._fn.__name__, len(free), len(args)))
        bound = dict(zip(free, args), **kwargs)
        if any(name not in bound for name in self._required):
            return PipeableFunction(self._fn, self._positional, self._required, args, kwargs, self._pipeOnly)
        return self._fn(**bound)


def _fill(args, arg):
    # fill the leftmost ... hole, else append
    if arg is ...:
        raise TypeError("... can only be passed with ()")
    for i, a in enumerate(args):
        if a is ...:
            return args[:i] + (arg,) + args[i + 1:]
    return args + (arg,)


def isPipeable(x) -> bool:
    return isinstance(x, PipeableFunction)

