# *******************************************************************************
#
#    Copyright (c) 2011-2020 David Briant
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
#
# *******************************************************************************


class NamedEnum(object):
    def __init__(self, name):
        self.name = name
    def __repr__(self):
        return '%s(\'%s\')' % (self.__class__.__name__, self.name)
    def __str__(self):
        return self.name


class QRealiseError(Exception):
    pass


class PoleError(QRealiseError, ZeroDivisionError):
    """An exact evaluation hit a vanishing denominator"""


class MixedParityError(QRealiseError):
    """An operation needed a homogeneous element but the monomials disagree on parity"""


class UnknownSymbolError(QRealiseError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class SubstitutionError(QRealiseError):
    pass


class InvalidRepresentationError(QRealiseError):
    pass


class ModeError(QRealiseError):
    pass


class UsageError(QRealiseError):
    pass


class ParseError(QRealiseError):

    def __init__(self, message, text='', position=0, line=1, column=1):
        super().__init__(message)
        self.message = message
        self.text = text
        self.position = position
        self.line = line
        self.column = column

    def __str__(self):
        return '%s (line %s, column %s)' % (self.message, self.line, self.column)

    def pretty(self):
        # the offending line with a caret under the column
        lines = self.text.split('\n') if self.text else ['']
        src = lines[self.line - 1] if 0 < self.line <= len(lines) else ''
        return '%s\n  %s\n  %s^' % (self, src, ' ' * (self.column - 1))
