"""Parsing of the textual literals accepted on the command line.

Quaternions are written as ordinary arithmetic over ``i``, ``j``, ``k``::

    1 + 2i - 0.5j + k
    sqrt(2)/2 + sqrt(2)/2 i
    sqrt(6)/6 (2 - j - k)

Juxtaposition multiplies (``2i``, ``sqrt(2)/2 i``, ``3(1+i)``) and binds like
``*``. Division is only allowed by real numbers. Vectors are ``(a, b, c)``
and spherical-vectors ``sv(lam, a, b, c)``, each component being a real
expression in the same grammar.
"""

from __future__ import annotations

import math
import re

from .linalg3 import Vec3
from .quaternion import I, J, K, Quaternion
from .polar import arg
from .spherical_vector import SphericalVector

_TOKEN = re.compile(r"\s*(?:(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)|([A-Za-z_]+)|(.))")
_UNITS = {"i": I, "j": J, "k": K}


class ParseError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", float(num)))
        elif name is not None:
            if len(name) > 1 and set(name) <= set("ijk"):
                tokens.extend(("name", ch) for ch in name)
            else:
                tokens.append(("name", name))
        elif sym is not None:
            if sym not in "+-*/(),":
                raise ParseError(f"unexpected character {sym!r} in {text!r}")
            tokens.append(("sym", sym))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, sym):
        kind, value = self.take()
        if (kind, value) != ("sym", sym):
            raise ParseError(f"expected {sym!r} in {self.text!r}")

    def at_end(self):
        return self.pos >= len(self.tokens)

    def expr(self) -> Quaternion:
        out = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            _, op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Quaternion:
        out = self.unary()
        while True:
            kind, value = self.peek()
            if (kind, value) == ("sym", "*"):
                self.take()
                out = out * self.unary()
            elif (kind, value) == ("sym", "/"):
                self.take()
                out = out / _real(self.unary(), self.text)
            elif kind == "name" or (kind, value) == ("sym", "("):
                out = out * self.unary()
            else:
                return out

    def unary(self) -> Quaternion:
        kind, value = self.peek()
        if (kind, value) == ("sym", "-"):
            self.take()
            return -self.unary()
        if (kind, value) == ("sym", "+"):
            self.take()
            return self.unary()
        return self.atom()

    def atom(self) -> Quaternion:
        kind, value = self.take()
        if kind == "num":
            return Quaternion(value)
        if kind == "name":
            if value in _UNITS:
                return _UNITS[value]
            if value == "sqrt":
                self.expect("(")
                x = _real(self.expr(), self.text)
                self.expect(")")
                if x < 0:
                    raise ParseError(f"sqrt of negative number in {self.text!r}")
                return Quaternion(math.sqrt(x))
            raise ParseError(f"unknown name {value!r} in {self.text!r}")
        if (kind, value) == ("sym", "("):
            out = self.expr()
            self.expect(")")
            return out
        raise ParseError(f"unexpected end of input or token {value!r} in {self.text!r}")


def _real(q: Quaternion, text) -> float:
    if q.ci or q.cj or q.ck:
        raise ParseError(f"expected a real number in {text!r}")
    return q.s


def parse_quaternion(text: str) -> Quaternion:
    if not text.strip():
        raise ParseError("empty quaternion literal")
    p = _Parser(text)
    q = p.expr()
    if not p.at_end():
        raise ParseError(f"trailing input in {text!r}")
    return q


def parse_real(text: str) -> float:
    return _real(parse_quaternion(text), text)


def _split_args(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _call_args(text: str, prefix: str) -> list[str]:
    s = text.strip()
    if not (s.startswith(prefix) and s.endswith(")")):
        raise ParseError(f"expected {prefix}...) in {text!r}")
    return _split_args(s[len(prefix):-1])


def parse_vector(text: str) -> Vec3:
    args = _call_args(text, "(")
    if len(args) != 3:
        raise ParseError(f"a vector has 3 components: {text!r}")
    return Vec3(*(parse_real(a) for a in args))


def parse_spherical_vector(text: str) -> SphericalVector:
    """``sv(lam, a, b, c)``, or any quaternion literal (taken through ``arg``)."""
    s = text.strip()
    if s.startswith("sv("):
        args = _call_args(s, "sv(")
        if len(args) != 4:
            raise ParseError(f"sv(...) takes 4 components: {text!r}")
        lam, a, b, c = (parse_real(x) for x in args)
        return SphericalVector(lam, Vec3(a, b, c))
    return arg(parse_quaternion(s))
