"""The unital subshift algebra as a partial skew group ring.

Elements are finite sums ``sum_g f_g delta_g`` where g runs over simple
free-group elements and f_g is a locally constant function supported in
W_g. The product is

    (f delta_g)(h delta_k) = theta_g(theta_{g^-1}(f) h) delta_{gk}

with theta_g the push-forward of functions along the partial action. Since
every coefficient function has a canonical form, equality of elements is
plain structural equality.
"""

from __future__ import annotations

from .action import (
    IDENTITY,
    FreeGroupElement,
    SimpleFactorization,
    domain_set,
    simple_factorization,
    transport,
    word_element,
)
from .clopen import ClopenSet, contains_point, intersect, subset, union, whole_space
from .errors import InternalInvariantViolation, Mismatch, UnknownSymbol
from .rings import CoefficientRing
from .shift import EvPeriodicPoint, Shift, check_point


def _check(a, b):
    if a.ring != b.ring:
        raise Mismatch(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.shift is not b.shift and a.shift != b.shift:
        raise Mismatch("operands live on different shifts")


class LcFunction:
    """A locally constant function X -> R with finitely many values.

    ``parts`` pairs each nonzero value with the (nonempty, canonical) clopen
    set where it is taken; sets are pairwise disjoint and values distinct.
    """

    __slots__ = ("shift", "ring", "parts", "_hash")

    def __init__(self, shift: Shift, ring: CoefficientRing, parts=()):
        merged = {}
        for c, U in parts:
            c = ring.norm(c)
            if c == ring.zero or not U.words:
                continue
            merged[c] = union(merged[c], U) if c in merged else U
        # values must be distinct and sets disjoint; callers guarantee the latter
        items = tuple(sorted(merged.items(), key=lambda cu: ring.sort_key(cu[0])))
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "parts", items)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LcFunction is immutable")

    @classmethod
    def from_table(cls, shift, ring, level, table) -> "LcFunction":
        groups = {}
        for w, c in table.items():
            if c != ring.zero:
                groups.setdefault(c, []).append(w)
        return cls(shift, ring, ((c, ClopenSet(shift, level, ws)) for c, ws in groups.items()))

    @classmethod
    def indicator(cls, U: ClopenSet, ring: CoefficientRing) -> "LcFunction":
        return cls(U.shift, ring, ((ring.one, U),))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, LcFunction) and self.parts == other.parts
                and self.ring == other.ring and self.shift == other.shift)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.parts))
        return self._hash

    def __bool__(self):
        return bool(self.parts)

    def __repr__(self):
        return f"LcFunction({self.fmt()})"

    @property
    def level(self) -> int:
        return max((U.level for _, U in self.parts), default=0)

    def table(self, n: int) -> dict:
        return {w: c for c, U in self.parts for w in U.refine(n)}

    def support(self) -> ClopenSet:
        out = ClopenSet(self.shift, 0, ())
        for _, U in self.parts:
            out = union(out, U)
        return out

    def scale(self, c) -> "LcFunction":
        c = self.ring(c)
        return LcFunction(self.shift, self.ring, ((self.ring.mul(c, a), U) for a, U in self.parts))

    def push(self, f: SimpleFactorization) -> "LcFunction":
        """Transport along beta y -> alpha y (support must lie in C(alpha, beta))."""
        s = self.shift
        return LcFunction(s, self.ring, ((c, transport(s, f, U)) for c, U in self.parts))

    def fmt(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"{self.ring.fmt(c)}·1_{{{U.fmt()}}}" for c, U in self.parts)

    def to_json(self) -> list:
        return [{"coeff": self.ring.fmt(c), **U.to_json()} for c, U in self.parts]


def lc_add(f: LcFunction, h: LcFunction) -> LcFunction:
    _check(f, h)
    if not f.parts:
        return h
    if not h.parts:
        return f
    n = max(f.level, h.level)
    t = f.table(n)
    add = f.ring.add
    for w, c in h.table(n).items():
        t[w] = add(t[w], c) if w in t else c
    return LcFunction.from_table(f.shift, f.ring, n, t)


def lc_mul(f: LcFunction, h: LcFunction) -> LcFunction:
    _check(f, h)
    if not f.parts or not h.parts:
        return LcFunction(f.shift, f.ring)
    if len(f.parts) == 1 and len(h.parts) == 1:
        (a, U), (b, V) = f.parts[0], h.parts[0]
        return LcFunction(f.shift, f.ring, ((f.ring.mul(a, b), intersect(U, V)),))
    n = max(f.level, h.level)
    t, u = f.table(n), h.table(n)
    mul = f.ring.mul
    return LcFunction.from_table(f.shift, f.ring, n,
                                 {w: mul(c, u[w]) for w, c in t.items() if w in u})


def lc_neg(f: LcFunction) -> LcFunction:
    return LcFunction(f.shift, f.ring, ((f.ring.neg(c), U) for c, U in f.parts))


def lc_eval(f: LcFunction, p: EvPeriodicPoint):
    check_point(f.shift, p)
    for c, U in f.parts:
        if contains_point(U, p):
            return c
    return f.ring.zero


class AlgebraElement:
    """Finite sum of f_g delta_g with f_g supported in W_g."""

    __slots__ = ("shift", "ring", "terms", "_hash")

    def __init__(self, shift: Shift, ring: CoefficientRing, terms=()):
        kept = {}
        for g, f in terms:
            if f.parts:
                kept[g] = f
        items = tuple(sorted(kept.items(), key=lambda gf: (len(gf[0]), gf[0])))
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", items)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def term(cls, g: FreeGroupElement, f: LcFunction) -> "AlgebraElement":
        """Validated single term f delta_g."""
        s = f.shift
        if f.parts and not subset(f.support(), domain_set(s, g)):
            raise ValueError(f"support of coefficient is not inside the domain of {g}")
        return cls(s, f.ring, ((g, f),))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, AlgebraElement) and self.terms == other.terms
                and self.ring == other.ring and self.shift == other.shift)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.terms))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"AlgebraElement({self.fmt()})"

    def __add__(self, other):
        return alg_add(self, other)

    def __sub__(self, other):
        return alg_add(self, alg_neg(other))

    def __neg__(self):
        return alg_neg(self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        return alg_scalar_mul(other, self)

    def __rmul__(self, c):
        return alg_scalar_mul(c, self)

    def coefficient(self, g: FreeGroupElement) -> LcFunction:
        for k, f in self.terms:
            if k == g:
                return f
        return LcFunction(self.shift, self.ring)

    def fmt(self) -> str:
        """Human form: sum of coeff·1_{cylinders} δ_{g}."""
        if not self.terms:
            return "0"
        out = []
        for g, f in self.terms:
            for c, U in f.parts:
                out.append(f"{self.ring.fmt(c)}·1_{{{U.fmt()}}} δ_{{{g.fmt()}}}")
        return " + ".join(out)

    def to_expr(self) -> str:
        """Form accepted by the algebra-expression parser."""
        if not self.terms:
            return "0"
        out = []
        for g, f in self.terms:
            for c, U in f.parts:
                factors = [] if c == self.ring.one else [self.ring.fmt(c)]
                if U.level > 0:
                    factors.append(f"p({U.fmt()})")
                if not g.is_identity:
                    factors.append(f"pi({g.fmt()})")
                out.append("*".join(factors) or "1")
        return " + ".join(out)

    def to_json(self) -> dict:
        return {"terms": [{"g": g.fmt(), "parts": f.to_json()} for g, f in self.terms]}


def zero(s: Shift, ring: CoefficientRing) -> AlgebraElement:
    return AlgebraElement(s, ring)


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check(x, y)
    acc = dict(x.terms)
    for g, f in y.terms:
        acc[g] = lc_add(acc[g], f) if g in acc else f
    return AlgebraElement(x.shift, x.ring, acc.items())


def alg_neg(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.shift, x.ring, ((g, lc_neg(f)) for g, f in x.terms))


def alg_scalar_mul(c, x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.shift, x.ring, ((g, f.scale(c)) for g, f in x.terms))


def _factor(s: Shift, g: FreeGroupElement) -> SimpleFactorization:
    f = simple_factorization(s, g)
    if f is None:
        raise InternalInvariantViolation(f"term indexed by non-simple element {g}")
    return f


def _term_product(s, g, f, k, h):
    a = _factor(s, g)
    inv = SimpleFactorization(a.beta, a.alpha)
    pulled = f.push(inv)  # theta_{g^-1}(f), supported in W_{g^-1}
    prod = lc_mul(pulled, h)
    if not prod.parts:
        return None, prod
    return g * k, prod.push(a)


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check(x, y)
    s = x.shift
    acc = {}
    for g, f in x.terms:
        for k, h in y.terms:
            gk, c = _term_product(s, g, f, k, h)
            if gk is None:
                continue
            if simple_factorization(s, gk) is None:
                raise InternalInvariantViolation(
                    f"non-simple product {gk} received a nonzero coefficient")
            acc[gk] = lc_add(acc[gk], c) if gk in acc else c
    return AlgebraElement(s, x.ring, acc.items())


def alg_star(x: AlgebraElement) -> AlgebraElement:
    """(f delta_g)* = theta_{g^-1}(f) delta_{g^-1}."""
    s = x.shift
    out = []
    for g, f in x.terms:
        a = _factor(s, g)
        out.append((g.inverse(), f.push(SimpleFactorization(a.beta, a.alpha))))
    return AlgebraElement(s, x.ring, out)


def alg_equals(x: AlgebraElement, y: AlgebraElement) -> bool:
    _check(x, y)
    return x == y


# -- generators ---------------------------------------------------------------

def _indicator_term(s, ring, g, U):
    if not U.words:
        return zero(s, ring)
    return AlgebraElement(s, ring, ((g, LcFunction(s, ring, ((ring.one, U),))),))


def pi(s: Shift, ring: CoefficientRing, g: FreeGroupElement) -> AlgebraElement:
    """1_{W_g} delta_g; zero when g is not simple."""
    s.require_nonempty()
    return _indicator_term(s, ring, g, domain_set(s, g))


def unit(s: Shift, ring: CoefficientRing) -> AlgebraElement:
    return _indicator_term(s, ring, IDENTITY, whole_space(s))


def gen_p(U: ClopenSet, ring: CoefficientRing) -> AlgebraElement:
    U.shift.require_nonempty()
    return _indicator_term(U.shift, ring, IDENTITY, U)


def _letter(s, a):
    s.require_nonempty()
    if a not in s.alphabet:
        raise UnknownSymbol(f"symbol {a!r} not in alphabet")
    return a


def gen_s(s: Shift, ring: CoefficientRing, a: str) -> AlgebraElement:
    """s_a = 1_{C(w, a)} delta_a."""
    return pi(s, ring, word_element((_letter(s, a),)))


def gen_s_star(s: Shift, ring: CoefficientRing, a: str) -> AlgebraElement:
    """s_a* = 1_{C(a, w)} delta_{a^-1}."""
    return pi(s, ring, word_element((_letter(s, a),)).inverse())


def s_word(s: Shift, ring: CoefficientRing, w) -> AlgebraElement:
    """s_w = s_{w_1} ... s_{w_n}, with s_w = 1 for the empty word."""
    out = unit(s, ring)
    for a in s.word(w):
        out = alg_mul(out, gen_s(s, ring, a))
    return out


def s_word_star(s: Shift, ring: CoefficientRing, w) -> AlgebraElement:
    """s_w* = s_{w_n}* ... s_{w_1}*."""
    out = unit(s, ring)
    for a in reversed(s.word(w)):
        out = alg_mul(out, gen_s_star(s, ring, a))
    return out


def from_lc(g: FreeGroupElement, f: LcFunction) -> AlgebraElement:
    return AlgebraElement.term(g, f)
