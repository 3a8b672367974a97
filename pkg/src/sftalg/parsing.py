"""Spec files and the set / algebra expression languages.

Set expressions::

    setexpr := or
    or      := and ('|' and)*
    and     := not ('&' not)*
    not     := '!' not | atom
    atom    := 'C(' word ',' word ')' | 'Z(' word ')' | 'F(' word ')'
             | 'X' | '0' | '(' setexpr ')'

Algebra expressions::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | rational | 's(' word ')' | 'st(' word ')'
            | 'p(' setexpr ')' | 'pi(' group ')' | '(' expr ')'

A word is symbols (greedy longest match, spaces allowed between symbols) or
``w`` for the empty word. Parsing is alphabet-free; words and group literals
are resolved against a shift at evaluation time.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .action import parse_group
from .algebra import AlgebraElement, alg_mul, gen_p, pi, s_word, s_word_star, unit
from .clopen import ClopenSet, c_set, cylinder, empty_set, follower, whole_space
from .errors import ExprSyntaxError, MalformedSpec, SftError, UnknownSymbol
from .rings import CoefficientRing
from .shift import Shift, ShiftSpec, parse_word


# -- trees ----------------------------------------------------------------------

@dataclass(frozen=True)
class Text:
    text: str
    offset: int


@dataclass(frozen=True)
class CSet:
    alpha: Text
    beta: Text


@dataclass(frozen=True)
class Cyl:
    word: Text


@dataclass(frozen=True)
class Fol:
    word: Text


@dataclass(frozen=True)
class Whole:
    pass


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class And:
    left: "SetExpr"
    right: "SetExpr"


@dataclass(frozen=True)
class Or:
    left: "SetExpr"
    right: "SetExpr"


@dataclass(frozen=True)
class Not:
    arg: "SetExpr"


SetExpr = Union[CSet, Cyl, Fol, Whole, Empty, And, Or, Not]


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    word: Text


@dataclass(frozen=True)
class StarGen:
    word: Text


@dataclass(frozen=True)
class Proj:
    set: SetExpr


@dataclass(frozen=True)
class Pi:
    group: Text


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


Expr = Union[Num, Gen, StarGen, Proj, Pi, Add, Sub, Mul, Neg]


# -- recursive descent ------------------------------------------------------------

_RATIONAL = re.compile(r"\d+(?:/\d+)?")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.i = 0

    def _ws(self):
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def peek(self, tok: str) -> bool:
        self._ws()
        return self.src.startswith(tok, self.i)

    def accept(self, tok: str) -> bool:
        if self.peek(tok):
            self.i += len(tok)
            return True
        return False

    def expect(self, tok: str):
        if not self.accept(tok):
            found = repr(self.src[self.i]) if self.i < len(self.src) else "end of input"
            raise ExprSyntaxError(f"expected {tok!r}, found {found}", self.i)

    def done(self):
        self._ws()
        if self.i != len(self.src):
            raise ExprSyntaxError(f"unexpected {self.src[self.i]!r}", self.i)

    def raw(self, stops: str) -> Text:
        """Text up to (not including) the next stop character."""
        self._ws()
        start = self.i
        while self.i < len(self.src) and self.src[self.i] not in stops:
            self.i += 1
        if self.i == len(self.src):
            want = repr(stops) if len(stops) == 1 else "one of " + ", ".join(map(repr, stops))
            raise ExprSyntaxError(f"expected {want}", self.i)
        return Text(self.src[start:self.i].strip(), start)

    # sets
    def set_or(self):
        node = self.set_and()
        while self.accept("|"):
            node = Or(node, self.set_and())
        return node

    def set_and(self):
        node = self.set_not()
        while self.accept("&"):
            node = And(node, self.set_not())
        return node

    def set_not(self):
        if self.accept("!"):
            return Not(self.set_not())
        return self.set_atom()

    def set_atom(self):
        if self.accept("C("):
            a = self.raw(",)")
            self.expect(",")
            b = self.raw(",)")
            self.expect(")")
            return CSet(a, b)
        if self.accept("Z("):
            w = self.raw(",)")
            self.expect(")")
            return Cyl(w)
        if self.accept("F("):
            w = self.raw(",)")
            self.expect(")")
            return Fol(w)
        if self.accept("X"):
            return Whole()
        if self.accept("0"):
            return Empty()
        if self.accept("("):
            node = self.set_or()
            self.expect(")")
            return node
        raise ExprSyntaxError("expected a set", self.i)

    # algebra
    def expr(self):
        node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Sub(node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while self.accept("*"):
            node = Mul(node, self.factor())
        return node

    def factor(self):
        if self.accept("-"):
            return Neg(self.factor())
        if self.accept("st("):
            w = self.raw(")")
            self.expect(")")
            return StarGen(w)
        if self.accept("s("):
            w = self.raw(")")
            self.expect(")")
            return Gen(w)
        if self.accept("pi("):
            g = self.raw(")")
            self.expect(")")
            return Pi(g)
        if self.accept("p("):
            node = self.set_or()
            self.expect(")")
            return Proj(node)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self._ws()
        m = _RATIONAL.match(self.src, self.i)
        if m:
            self.i = m.end()
            num = Fraction(m.group())
            return Num(num)
        raise ExprSyntaxError("expected a factor", self.i)


def parse_set_expr(src: str) -> SetExpr:
    p = _Parser(src)
    node = p.set_or()
    p.done()
    return node


def parse_algebra_expr(src: str) -> Expr:
    p = _Parser(src)
    node = p.expr()
    p.done()
    return node


# -- evaluation -------------------------------------------------------------------

def _word(s: Shift, w: Text):
    try:
        return parse_word(s.alphabet, w.text)
    except UnknownSymbol as exc:
        raise UnknownSymbol(f"{exc} (at offset {w.offset})") from None


def eval_set(s: Shift, node: SetExpr) -> ClopenSet:
    s.require_nonempty()
    if isinstance(node, CSet):
        return c_set(s, _word(s, node.alpha), _word(s, node.beta))
    if isinstance(node, Cyl):
        return cylinder(s, _word(s, node.word))
    if isinstance(node, Fol):
        return follower(s, _word(s, node.word))
    if isinstance(node, Whole):
        return whole_space(s)
    if isinstance(node, Empty):
        return empty_set(s)
    if isinstance(node, And):
        return eval_set(s, node.left) & eval_set(s, node.right)
    if isinstance(node, Or):
        return eval_set(s, node.left) | eval_set(s, node.right)
    if isinstance(node, Not):
        return ~eval_set(s, node.arg)
    raise TypeError(f"not a set expression: {node!r}")


def eval_algebra(s: Shift, ring: CoefficientRing, node: Expr) -> AlgebraElement:
    s.require_nonempty()
    if isinstance(node, Num):
        try:
            c = ring(node.value)
        except ValueError as exc:
            raise SftError(str(exc)) from None
        return c * unit(s, ring)
    if isinstance(node, Gen):
        return s_word(s, ring, _word(s, node.word))
    if isinstance(node, StarGen):
        return s_word_star(s, ring, _word(s, node.word))
    if isinstance(node, Proj):
        return gen_p(eval_set(s, node.set), ring)
    if isinstance(node, Pi):
        return pi(s, ring, parse_group(s, node.group.text))
    if isinstance(node, Add):
        return eval_algebra(s, ring, node.left) + eval_algebra(s, ring, node.right)
    if isinstance(node, Sub):
        return eval_algebra(s, ring, node.left) - eval_algebra(s, ring, node.right)
    if isinstance(node, Mul):
        return alg_mul(eval_algebra(s, ring, node.left), eval_algebra(s, ring, node.right))
    if isinstance(node, Neg):
        return -eval_algebra(s, ring, node.arg)
    raise TypeError(f"not an algebra expression: {node!r}")


def evaluate_set(s: Shift, src: str) -> ClopenSet:
    return eval_set(s, parse_set_expr(src))


def evaluate(s: Shift, ring: CoefficientRing, src: str) -> AlgebraElement:
    return eval_algebra(s, ring, parse_algebra_expr(src))


# -- spec files -------------------------------------------------------------------

class SpecIOError(SftError):
    code = "io-error"


def spec_from_json(data) -> ShiftSpec:
    if not isinstance(data, dict):
        raise MalformedSpec("spec must be a JSON object with 'alphabet' and 'forbidden'")
    unknown = set(data) - {"alphabet", "forbidden"}
    if unknown:
        raise MalformedSpec(f"unknown field(s): {', '.join(sorted(unknown))}")
    if "alphabet" not in data:
        raise MalformedSpec("field 'alphabet': missing")
    alphabet = data["alphabet"]
    if not isinstance(alphabet, list):
        raise MalformedSpec("field 'alphabet': must be a list of strings")
    forbidden = data.get("forbidden", [])
    if not isinstance(forbidden, list):
        raise MalformedSpec("field 'forbidden': must be a list")
    for i, f in enumerate(forbidden):
        if not isinstance(f, (str, list)):
            raise MalformedSpec(f"field 'forbidden[{i}]': must be a string or list of symbols")
    try:
        return ShiftSpec(alphabet, forbidden)
    except MalformedSpec as exc:
        field = "forbidden" if "forbidden" in str(exc) else "alphabet"
        raise MalformedSpec(f"field '{field}': {exc}") from None


def parse_spec(path) -> ShiftSpec:
    """Read a JSON spec file ``{"alphabet": [...], "forbidden": [...]}``."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecIOError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return spec_from_json(data)
