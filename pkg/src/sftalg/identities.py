"""Exact checkers for the defining identities of the algebra.

Each checker returns :class:`CheckReport` objects: how many instances were
tested and the first one that failed, if any. Randomized suites take an
explicit seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .action import IDENTITY, FreeGroupElement, is_simple, reduced_elements, simple_elements
from .algebra import (
    AlgebraElement,
    alg_mul,
    alg_star,
    gen_p,
    gen_s,
    gen_s_star,
    pi,
    s_word,
    s_word_star,
    unit,
    zero,
)
from .clopen import ClopenSet, c_set, cylinder, empty_set, follower, whole_space
from .rings import CoefficientRing
from .shift import Shift

DEFAULT_SEED = 20240


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: Optional[str] = None

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample}


class _Suite:
    def __init__(self):
        self.reports: dict = {}

    def record(self, name: str, ok: bool, ctx: Callable[[], str]):
        rep = self.reports.setdefault(name, CheckReport(name))
        rep.checked += 1
        if not ok and rep.passed:
            rep.passed = False
            rep.counterexample = ctx()

    def results(self) -> list:
        return list(self.reports.values())


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def _words(s: Shift, bound: int) -> list:
    return [w for n in range(bound + 1) for w in s.level(n)]


class _Cache:
    """Memoized generators and products for one (shift, ring)."""

    def __init__(self, s: Shift, ring: CoefficientRing):
        self.s, self.ring = s, ring
        self._pi, self._sw, self._sws, self._mul = {}, {}, {}, {}
        self._pool = {}  # interned elements; products are keyed by identity
        self.one = self.intern(unit(s, ring))
        self.zero = self.intern(zero(s, ring))

    def intern(self, x):
        return self._pool.setdefault(x, x)

    def pi(self, g):
        try:
            return self._pi[g]
        except KeyError:
            x = self._pi[g] = self.intern(pi(self.s, self.ring, g))
            return x

    def eps(self, g):
        return self.mul(self.pi(g), self.pi(g.inverse()))

    def sw(self, w):
        if w not in self._sw:
            self._sw[w] = self.intern(s_word(self.s, self.ring, w))
        return self._sw[w]

    def sws(self, w):
        if w not in self._sws:
            self._sws[w] = self.intern(s_word_star(self.s, self.ring, w))
        return self._sws[w]

    def mul(self, *xs):
        out = self.intern(xs[0])
        for y in xs[1:]:
            y = self.intern(y)
            key = (id(out), id(y))
            try:
                out = self._mul[key]
            except KeyError:
                out = self._mul[key] = self.intern(alg_mul(out, y))
        return out


# -- partial representation ------------------------------------------------------

def check_partial_representation(s: Shift, ring: CoefficientRing, bound: int,
                                 samples: int = 100, seed: int = DEFAULT_SEED) -> list:
    """Axioms (i)-(iii) of a partial representation for pi, plus the derived
    epsilon identities, over all g, h of reduced length <= bound.

    Pairs where the right-hand factor pi(h^-1) (resp. pi(g^-1)) vanishes are
    still counted: both sides are then zero by construction.
    """
    s.require_nonempty()
    c = _Cache(s, ring)
    suite = _Suite()
    elems = reduced_elements(s.alphabet, bound)
    simple = [g for g in elems if is_simple(s, g)]

    suite.record("pi(e) = 1", c.pi(IDENTITY) == c.one, lambda: "pi(e) != 1")
    for g in elems:
        pg = c.pi(g)
        for h in elems:
            hi = h.inverse()
            if not c.pi(hi):
                suite.record("pi(g)pi(h)pi(h^-1) = pi(gh)pi(h^-1)", True, str)
            else:
                lhs = c.mul(pg, c.pi(h), c.pi(hi))
                rhs = c.mul(c.pi(g * h), c.pi(hi))
                suite.record("pi(g)pi(h)pi(h^-1) = pi(gh)pi(h^-1)", lhs == rhs,
                             lambda: f"g={g}, h={h}")
            gi = g.inverse()
            if not c.pi(gi):
                suite.record("pi(g^-1)pi(g)pi(h) = pi(g^-1)pi(gh)", True, str)
            else:
                lhs = c.mul(c.pi(gi), pg, c.pi(h))
                rhs = c.mul(c.pi(gi), c.pi(g * h))
                suite.record("pi(g^-1)pi(g)pi(h) = pi(g^-1)pi(gh)", lhs == rhs,
                             lambda: f"g={g}, h={h}")
    for g in simple:
        _single_identities(c, suite, g)
        for h in simple:
            _pair_identities(c, suite, g, h)
    rng = random.Random(seed)
    for _ in range(samples):
        chain = [rng.choice(elems) for _ in range(rng.randint(1, 4))]
        _chain_identity(c, suite, chain)
    return suite.results()


def _single_identities(c: _Cache, suite: _Suite, g):
    pg = c.pi(g)
    e = c.eps(g)
    suite.record("[g][g^-1][g] = [g]", c.mul(pg, c.pi(g.inverse()), pg) == pg, lambda: f"g={g}")
    suite.record("eps_g [g] = [g]", c.mul(e, pg) == pg, lambda: f"g={g}")
    suite.record("eps_g^2 = eps_g", c.mul(e, e) == e, lambda: f"g={g}")


def _pair_identities(c: _Cache, suite: _Suite, g, h):
    eg, eh = c.eps(g), c.eps(h)
    suite.record("eps_g eps_h = eps_h eps_g", c.mul(eg, eh) == c.mul(eh, eg),
                 lambda: f"g={g}, h={h}")
    suite.record("[g] eps_h = eps_gh [g]", c.mul(c.pi(g), eh) == c.mul(c.eps(g * h), c.pi(g)),
                 lambda: f"g={g}, h={h}")


def _chain_identity(c: _Cache, suite: _Suite, chain):
    lhs = c.mul(*[c.pi(g) for g in chain])
    acc = IDENTITY
    factors = []
    for g in chain[:-1]:
        acc = acc * g
        factors.append(c.eps(acc))
    factors.append(c.pi(acc * chain[-1]))
    rhs = c.mul(*factors) if len(factors) > 1 else factors[0]
    suite.record("[g1]...[gn] = eps_g1 eps_g1g2 ... [g1...gn]", lhs == rhs,
                 lambda: "chain=" + ", ".join(str(g) for g in chain))


def random_group_element(s: Shift, rng: random.Random, max_len: int = 3,
                         pool=None) -> FreeGroupElement:
    """Half the time a simple element, otherwise any reduced element."""
    simple, every = pool if pool is not None else _pools(s, max_len)
    return rng.choice(simple if rng.random() < 0.5 else every)


def _pools(s, max_len):
    every = reduced_elements(s.alphabet, max_len)
    return [g for g in simple_elements(s, max_len) if len(g) <= max_len], every


def check_epsilon_identities(s: Shift, ring: CoefficientRing, samples: int = 500, seed: int = DEFAULT_SEED,
                     max_n: int = 4, max_len: int = 3) -> list:
    """Identities (i)-(v) on seeded random tuples (g1, ..., gn)."""
    s.require_nonempty()
    c = _Cache(s, ring)
    suite = _Suite()
    rng = random.Random(seed)
    pool = _pools(s, max_len)
    for _ in range(samples):
        chain = [random_group_element(s, rng, max_len, pool) for _ in range(rng.randint(1, max_n))]
        for g in chain:
            _single_identities(c, suite, g)
        for g in chain:
            for h in chain:
                _pair_identities(c, suite, g, h)
        _chain_identity(c, suite, chain)
    return suite.results()


# -- defining relations ---------------------------------------------------------

def _distinct_sets(sets) -> list:
    seen = {}
    for U in sets:
        seen.setdefault(U, None)
    return list(seen)


def random_clopen(s: Shift, rng: random.Random, max_len: int = 3, depth: int = 2) -> ClopenSet:
    """A random Boolean combination of sets C(alpha, beta)."""
    words = _words(s, max_len)
    if depth == 0 or rng.random() < 0.3:
        return c_set(s, rng.choice(words), rng.choice(words))
    op = rng.choice("&|~")
    a = random_clopen(s, rng, max_len, depth - 1)
    if op == "~":
        return ~a
    b = random_clopen(s, rng, max_len, depth - 1)
    return a & b if op == "&" else a | b


def check_relations(s: Shift, ring: CoefficientRing, bound: int, samples: int = 50,
                 seed: int = DEFAULT_SEED) -> list:
    """The defining relations of the unital subshift algebra."""
    s.require_nonempty()
    c = _Cache(s, ring)
    suite = _Suite()
    words = _words(s, bound)
    X = whole_space(s)
    suite.record("p_X = 1", gen_p(X, ring) == c.one, lambda: "p_X != 1")
    suite.record("p_0 = 0", not gen_p(empty_set(s), ring), lambda: "p_0 != 0")

    rng = random.Random(seed)
    sets = [c_set(s, a, b) for a in words for b in words]
    sets += [random_clopen(s, rng, min(bound, 3)) for _ in range(samples)]
    sets = _distinct_sets(sets)
    proj = {U: gen_p(U, ring) for U in sets}
    for A in sets:
        for B in sets:
            pa, pb = proj[A], proj[B]
            pab = gen_p(A & B, ring)
            suite.record("p_(A&B) = p_A p_B", c.mul(pa, pb) == pab, lambda: f"A={A.fmt()}, B={B.fmt()}")
            suite.record("p_(A|B) = p_A + p_B - p_(A&B)", gen_p(A | B, ring) == pa + pb - pab,
                         lambda: f"A={A.fmt()}, B={B.fmt()}")

    for a in s.alphabet:
        sa, st = gen_s(s, ring, a), gen_s_star(s, ring, a)
        suite.record("s_a s_a* s_a = s_a", c.mul(sa, st, sa) == sa, lambda: f"a={a}")
        suite.record("s_a* s_a s_a* = s_a*", c.mul(st, sa, st) == st, lambda: f"a={a}")

    for al in words:
        for be in words:
            lhs = c.mul(c.sw(be), c.sws(al), c.sw(al), c.sws(be))
            suite.record("s_b s_a* s_a s_b* = p_C(a,b)", lhs == gen_p(c_set(s, al, be), ring),
                         lambda: f"alpha={s.fmt(al)}, beta={s.fmt(be)}")
    return suite.results()


def check_unital(s: Shift, ring: CoefficientRing, bound: int) -> list:
    """Consequences (i)-(iv) of the relations for words up to ``bound``."""
    s.require_nonempty()
    c = _Cache(s, ring)
    suite = _Suite()
    for a in s.alphabet:
        for b in s.alphabet:
            lhs = c.mul(gen_s_star(s, ring, a), gen_s(s, ring, b))
            rhs = gen_p(follower(s, (a,)), ring) if a == b else c.zero
            suite.record("s_a* s_b = delta_ab p_F_a", lhs == rhs, lambda: f"a={a}, b={b}")
    words = _words(s, bound)
    q = {w: c.mul(c.sws(w), c.sw(w)) for w in words}
    r = {w: c.mul(c.sw(w), c.sws(w)) for w in words}
    for al in words:
        for be in words:
            ctx = lambda: f"alpha={s.fmt(al)}, beta={s.fmt(be)}"  # noqa: E731
            suite.record("s_a*s_a, s_b*s_b commute", c.mul(q[al], q[be]) == c.mul(q[be], q[al]), ctx)
            suite.record("s_a*s_a, s_b s_b* commute", c.mul(q[al], r[be]) == c.mul(r[be], q[al]), ctx)
            if not s.in_language(al + be):
                suite.record("s_a s_b = 0 off the language", not c.mul(c.sw(al), c.sw(be)), ctx)
    return suite.results()


# -- ring structure --------------------------------------------------------------

def random_element(s: Shift, ring: CoefficientRing, rng: random.Random, max_factors: int = 4,
                   max_terms: int = 2) -> AlgebraElement:
    """A sum of scaled products of at most ``max_factors`` generators."""
    out = zero(s, ring)
    for _ in range(rng.randint(1, max_terms)):
        term = unit(s, ring)
        for _ in range(rng.randint(1, max_factors)):
            kind = rng.randrange(3)
            a = rng.choice(s.alphabet)
            if kind == 0:
                x = gen_s(s, ring, a)
            elif kind == 1:
                x = gen_s_star(s, ring, a)
            else:
                w = rng.choice(_words(s, 2))
                x = gen_p(cylinder(s, w) if rng.random() < 0.5 else follower(s, w), ring)
            term = alg_mul(term, x)
        out = out + ring(rng.randint(-3, 3)) * term
    return out


def check_ring_axioms(s: Shift, ring: CoefficientRing, samples: int = 200, seed: int = DEFAULT_SEED,
                      max_factors: int = 4) -> list:
    s.require_nonempty()
    suite = _Suite()
    rng = random.Random(seed)
    one = unit(s, ring)
    for i in range(samples):
        x, y, z = (random_element(s, ring, rng, max_factors) for _ in range(3))
        ctx = lambda: f"sample {i}: x={x.fmt()}; y={y.fmt()}; z={z.fmt()}"  # noqa: E731
        suite.record("(xy)z = x(yz)", alg_mul(alg_mul(x, y), z) == alg_mul(x, alg_mul(y, z)), ctx)
        suite.record("x(y+z) = xy + xz", alg_mul(x, y + z) == alg_mul(x, y) + alg_mul(x, z), ctx)
        suite.record("1x = x = x1", alg_mul(one, x) == x == alg_mul(x, one), ctx)
        suite.record("(xy)* = y*x*", alg_star(alg_mul(x, y)) == alg_mul(alg_star(y), alg_star(x)), ctx)
        suite.record("x** = x", alg_star(alg_star(x)) == x, ctx)
    return suite.results()


def check_all(s: Shift, ring: CoefficientRing, max_len: int, seed: int = DEFAULT_SEED) -> list:
    """Everything the ``check`` command runs."""
    return (check_partial_representation(s, ring, max_len, seed=seed)
            + check_relations(s, ring, max_len, seed=seed)
            + check_unital(s, ring, max_len))
