"""Free-group elements and the partial action of the free group on a shift.

Orientation used throughout: an element simple with respect to X has reduced
form ``alpha beta^-1`` with alpha, beta in the language. Its range is
``W_g = C(beta, alpha)`` and its domain is ``W_{g^-1} = C(alpha, beta)``, on
which it acts by ``beta y -> alpha y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple

from .clopen import ClopenSet, c_set, contains_point, empty_set
from .errors import NonSimpleElement, NotInDomain, UnknownSymbol
from .shift import EMPTY, EvPeriodicPoint, Shift, Word, check_point


@dataclass(frozen=True, order=True)
class FreeGroupElement:
    """A reduced word in the free group; letters are (symbol, +1 or -1)."""

    letters: tuple = ()

    def __mul__(self, other: "FreeGroupElement") -> "FreeGroupElement":
        out = list(self.letters)
        for x in other.letters:
            if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
                out.pop()
            else:
                out.append(x)
        return FreeGroupElement(tuple(out))

    def inverse(self) -> "FreeGroupElement":
        return FreeGroupElement(tuple((a, -e) for a, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def split(self):
        """(alpha, beta) with self = alpha beta^-1 as words, or None."""
        k = 0
        while k < len(self.letters) and self.letters[k][1] == 1:
            k += 1
        if any(e == 1 for _, e in self.letters[k:]):
            return None
        alpha = tuple(a for a, _ in self.letters[:k])
        beta = tuple(a for a, _ in reversed(self.letters[k:]))
        return alpha, beta

    def fmt(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(a if e == 1 else a + "'" for a, e in self.letters)

    def __str__(self):
        return self.fmt()


IDENTITY = FreeGroupElement()


def reduce(raw: Iterable, alphabet=None) -> FreeGroupElement:
    """Reduce a sequence of (symbol, exponent) pairs or bare symbols."""
    g = IDENTITY
    for x in raw:
        if isinstance(x, str):
            x = (x, 1)
        a, e = x
        if alphabet is not None and a not in alphabet:
            raise UnknownSymbol(f"symbol {a!r} not in alphabet")
        if e not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {e}")
        g = g * FreeGroupElement(((a, e),))
    return g


def word_element(w: Word) -> FreeGroupElement:
    return FreeGroupElement(tuple((a, 1) for a in w))


def from_split(alpha: Word, beta: Word) -> FreeGroupElement:
    """The (reduced) element alpha beta^-1."""
    return word_element(alpha) * word_element(beta).inverse()


def parse_group(s: Shift, text: str) -> FreeGroupElement:
    """Read ``0 1'`` style literals; ``e`` is the identity."""
    text = text.strip()
    if text in ("", "e") and "e" not in s.alphabet:
        return IDENTITY
    syms = sorted(s.alphabet, key=len, reverse=True)
    raw = []
    for tok in text.split():
        i = 0
        while i < len(tok):
            for a in syms:
                if tok.startswith(a, i):
                    i += len(a)
                    e = 1
                    if i < len(tok) and tok[i] == "'":
                        e, i = -1, i + 1
                    raw.append((a, e))
                    break
            else:
                if tok[i] == "e" and "e" not in s.alphabet:
                    i += 1
                    continue
                raise UnknownSymbol(f"symbol {tok[i]!r} not in alphabet")
    return reduce(raw)


class SimpleFactorization(NamedTuple):
    alpha: Word
    beta: Word


def simple_factorization(s: Shift, g: FreeGroupElement) -> SimpleFactorization | None:
    s.require_nonempty()
    sp = g.split()
    if sp is None:
        return None
    alpha, beta = sp
    if s.in_language(alpha) and s.in_language(beta):
        return SimpleFactorization(alpha, beta)
    return None


def is_simple(s: Shift, g: FreeGroupElement) -> bool:
    return simple_factorization(s, g) is not None


def domain_set(s: Shift, g: FreeGroupElement) -> ClopenSet:
    """W_g: C(beta, alpha) for g = alpha beta^-1 simple, otherwise empty."""
    key = ("W", g)
    memo = s._memo
    if key not in memo:
        f = simple_factorization(s, g)
        memo[key] = empty_set(s) if f is None else c_set(s, f.beta, f.alpha)
    return memo[key]


def act_point(s: Shift, g: FreeGroupElement, p: EvPeriodicPoint) -> EvPeriodicPoint:
    f = simple_factorization(s, g)
    if f is None:
        raise NonSimpleElement(f"{g} is not simple")
    check_point(s, p)
    if not contains_point(domain_set(s, g.inverse()), p):
        raise NotInDomain(f"{p.fmt(s)} is not in the domain of {g}")
    return p.drop(len(f.beta)).prepend(f.alpha)


def transport(s: Shift, f: SimpleFactorization, U: ClopenSet) -> ClopenSet:
    """Image of U (assumed inside C(alpha, beta)) under beta y -> alpha y."""
    if not U.words:
        return U
    alpha, beta = f
    n = max(U.level, len(beta) + s.memory)
    words = U.refine(n)
    k = len(beta)
    return ClopenSet(s, n - k + len(alpha), (alpha + w[k:] for w in words))


def act_clopen(s: Shift, g: FreeGroupElement, U: ClopenSet) -> ClopenSet:
    s.require_nonempty()
    if not U.words:
        return empty_set(s)
    f = simple_factorization(s, g)
    if f is None or not U <= domain_set(s, g.inverse()):
        raise NotInDomain(f"set {U.fmt()} is not inside the domain of {g}")
    return transport(s, f, U)


def xi_contains(s: Shift, p: EvPeriodicPoint, g: FreeGroupElement) -> bool:
    """Is g in xi_p, i.e. is p in W_g?"""
    return contains_point(domain_set(s, g), p)


def orbit(s: Shift, p: EvPeriodicPoint, depth: int) -> list:
    """Points reachable from p by simple alpha beta^-1, |alpha|, |beta| <= depth."""
    check_point(s, p)
    s.require_nonempty()
    found = {p}
    for lb in range(depth + 1):
        beta = p.prefix(lb)
        y = p.drop(lb)
        for la in range(depth + 1):
            for alpha in s.level(la):
                if alpha and beta and alpha[-1] == beta[-1]:
                    continue  # not reduced; covered by a shorter pair
                g = from_split(alpha, beta)
                if contains_point(domain_set(s, g.inverse()), p):
                    found.add(y.prepend(alpha))
    return sorted(found, key=lambda q: (len(q.u) + len(q.v), s.key(q.u), s.key(q.v)))


def reduced_elements(alphabet, max_len: int) -> list:
    """All reduced free-group elements of length <= max_len, shortlex order."""
    gens = [(a, 1) for a in alphabet] + [(a, -1) for a in alphabet]
    out = [IDENTITY]
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in gens:
                if w and w[-1][0] == x[0] and w[-1][1] == -x[1]:
                    continue
                nxt.append(w + (x,))
        out.extend(FreeGroupElement(w) for w in nxt)
        layer = nxt
    return out


def simple_elements(s: Shift, max_len: int) -> list:
    """Simple elements alpha beta^-1 with |alpha| + |beta| <= max_len."""
    out = []
    for total in range(max_len + 1):
        for la in range(total + 1):
            for alpha, beta in product(s.level(la), s.level(total - la)):
                if alpha and beta and alpha[-1] == beta[-1]:
                    continue
                out.append(from_split(alpha, beta))
    return out
