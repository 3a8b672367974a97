"""Shifts of finite type over a finite alphabet.

A shift is given by an alphabet and a finite set of forbidden words. It is
compiled into a de Bruijn-style automaton whose states are the words of
length ``m`` (the memory) that occur in some point of the shift. Every
language query is answered from that automaton.

Words are tuples of symbols. Anything accepting a word also takes a plain
string when the alphabet only has single-character symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import EmptyShift, MalformedSpec, PointNotInShift, UnknownSymbol

Word = tuple
WordLike = Union[str, Sequence[str]]

EMPTY: Word = ()

# characters with a meaning in point, set or algebra literals
RESERVED = frozenset("|,()'&!*+-/")


def primitive_root(v: Word) -> Word:
    """Shortest word r with v = r^k, found with the KMP failure function."""
    n = len(v)
    if n == 0:
        return v
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and v[i] != v[k]:
            k = fail[k - 1]
        if v[i] == v[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return v[:p] if n % p == 0 else v


@dataclass(frozen=True)
class ShiftSpec:
    alphabet: tuple
    forbidden: frozenset

    def __init__(self, alphabet: Iterable[str], forbidden: Iterable[WordLike] = ()):
        alphabet = tuple(alphabet)
        if not alphabet:
            raise MalformedSpec("alphabet must be nonempty")
        for a in alphabet:
            if not isinstance(a, str) or not a:
                raise MalformedSpec(f"symbols must be nonempty strings, got {a!r}")
            if any(ch in RESERVED or ch.isspace() for ch in a):
                raise MalformedSpec(f"symbol {a!r} uses a reserved character")
        if len(set(alphabet)) != len(alphabet):
            raise MalformedSpec("alphabet has duplicate symbols")
        words = []
        for f in forbidden:
            try:
                w = parse_word(alphabet, f)
            except UnknownSymbol as exc:
                raise MalformedSpec(f"forbidden word {f!r}: {exc}") from None
            if not w:
                raise MalformedSpec("forbidden words must be nonempty")
            words.append(w)
        if len(set(words)) != len(words):
            raise MalformedSpec("duplicate forbidden word")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "forbidden", frozenset(words))


def parse_word(alphabet: Sequence[str], w: WordLike) -> Word:
    """Turn a string or symbol sequence into a word, validating symbols.

    Strings are split by greedy longest match against the alphabet, so
    ``"10"`` over ``{"0", "1"}`` is ``("1", "0")``. The literal ``"w"`` is
    the empty word unless ``w`` is itself a symbol.
    """
    if isinstance(w, tuple) or isinstance(w, list):
        for a in w:
            if a not in alphabet:
                raise UnknownSymbol(f"symbol {a!r} not in alphabet")
        return tuple(w)
    if not isinstance(w, str):
        raise UnknownSymbol(f"cannot read a word from {w!r}")
    if w in ("w", "ω") and w not in alphabet:
        return EMPTY
    syms = sorted(alphabet, key=len, reverse=True)
    out = []
    for text in w.split():
        i = 0
        while i < len(text):
            for a in syms:
                if text.startswith(a, i):
                    out.append(a)
                    i += len(a)
                    break
            else:
                raise UnknownSymbol(f"symbol {text[i]!r} not in alphabet")
    return tuple(out)


class Shift:
    """A compiled SFT. Immutable; the caches are private memo tables."""

    def __init__(self, spec: ShiftSpec):
        self.spec = spec
        self.alphabet = spec.alphabet
        self.forbidden = spec.forbidden
        self._index = {a: i for i, a in enumerate(self.alphabet)}
        lengths = {len(f) for f in self.forbidden}
        self._forbidden_lengths = tuple(sorted(lengths))
        self.memory = max(1, max(lengths, default=0) - 1)
        self.single_char = all(len(a) == 1 for a in self.alphabet)

        m = self.memory
        clean = [EMPTY]
        for _ in range(m):
            clean = [w + (a,) for w in clean for a in self.alphabet if self._clean_tail(w + (a,))]
        live = set(clean)
        # prune dead ends until every state has a successor
        while True:
            dead = {s for s in live if not any(self._step(s, a) in live for a in self.alphabet
                                               if self._clean_tail(s + (a,)))}
            if not dead:
                break
            live -= dead
        self.states = frozenset(live)
        self.transitions = {}
        for s in self.sorted_words(live):
            out = []
            for a in self.alphabet:
                t = self._step(s, a)
                if t in live and self._clean_tail(s + (a,)):
                    out.append((a, t))
            self.transitions[s] = tuple(out)
        self._prefixes = {s[:k] for s in live for k in range(m + 1)}
        self._lang_cache = {}
        self._levels = {}
        self._ext_cache = {}
        self._memo = {}

    # -- basics -----------------------------------------------------------
    def __eq__(self, other):
        return self is other or (isinstance(other, Shift) and self.spec == other.spec)

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        forb = ",".join(sorted(self.fmt(f) for f in self.forbidden))
        return f"Shift(alphabet={list(self.alphabet)}, forbidden=[{forb}])"

    @property
    def is_empty(self) -> bool:
        return not self.states

    def require_nonempty(self):
        if not self.states:
            raise EmptyShift()

    def word(self, w: WordLike) -> Word:
        return parse_word(self.alphabet, w)

    def key(self, w: Word):
        return tuple(self._index[a] for a in w)

    def sorted_words(self, words) -> list:
        return sorted(words, key=lambda w: (len(w), self.key(w)))

    def fmt(self, w: Word, empty="w") -> str:
        if not w:
            return empty
        return "".join(w) if self.single_char else " ".join(w)

    def json_word(self, w: Word):
        return "".join(w) if self.single_char else list(w)

    # -- automaton --------------------------------------------------------
    def _clean_tail(self, w: Word) -> bool:
        """No forbidden word ends at the last letter of ``w``."""
        n = len(w)
        for L in self._forbidden_lengths:
            if L <= n and w[n - L:] in self.forbidden:
                return False
        return True

    def _step(self, s: Word, a: str) -> Word:
        return (s + (a,))[len(s) + 1 - self.memory:]

    def is_clean(self, w: Word) -> bool:
        """``w`` contains no forbidden factor."""
        for L in self._forbidden_lengths:
            for i in range(len(w) - L + 1):
                if w[i:i + L] in self.forbidden:
                    return False
        return True

    def in_language(self, w: Word) -> bool:
        """Membership in the language, with no emptiness check (hot path)."""
        try:
            return self._lang_cache[w]
        except KeyError:
            pass
        m = self.memory
        if len(w) < m:
            res = w in self._prefixes
        else:
            res = w[len(w) - m:] in self.states and self.is_clean(w)
        self._lang_cache[w] = res
        return res

    def level(self, n: int) -> tuple:
        """The words of length n in the language, sorted by alphabet order."""
        try:
            return self._levels[n]
        except KeyError:
            pass
        if n == 0:
            res = (EMPTY,) if self.states else ()
        else:
            res = tuple(w + (a,) for w in self.level(n - 1) for a in self.alphabet
                        if self.in_language(w + (a,)))
        self._levels[n] = res
        return res

    def extensions(self, w: Word, n: int) -> tuple:
        """Words of length n in the language that start with w (|w| <= n)."""
        k = (w, n)
        try:
            return self._ext_cache[k]
        except KeyError:
            pass
        if len(w) == n:
            res = (w,) if self.in_language(w) else ()
        else:
            res = tuple(e for a in self.alphabet if self.in_language(w + (a,))
                        for e in self.extensions(w + (a,), n))
        self._ext_cache[k] = res
        return res

    def state_of(self, w: Word) -> Word:
        """Automaton state reached after reading w (requires |w| >= m)."""
        return w[len(w) - self.memory:]


def build_shift(spec: ShiftSpec) -> Shift:
    return Shift(spec)


def make_shift(alphabet, forbidden=()) -> Shift:
    return Shift(ShiftSpec(alphabet, forbidden))


def is_in_language(s: Shift, w: WordLike) -> bool:
    s.require_nonempty()
    return s.in_language(s.word(w))


def language(s: Shift, n: int) -> list:
    s.require_nonempty()
    return list(s.level(n))


# -- eventually periodic points ---------------------------------------------

class EvPeriodicPoint:
    """The sequence u v v v ..., stored in canonical form.

    The period is primitive and the preperiod is as short as possible, so two
    points are equal exactly when their fields are equal.
    """

    __slots__ = ("u", "v")

    def __init__(self, u: Sequence[str], v: Sequence[str]):
        u, v = tuple(u), tuple(v)
        if not v:
            raise ValueError("period must be nonempty")
        v = primitive_root(v)
        while u and u[-1] == v[-1]:
            u = u[:-1]
            v = v[-1:] + v[:-1]
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("EvPeriodicPoint is immutable")

    def __eq__(self, other):
        return isinstance(other, EvPeriodicPoint) and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"EvPeriodicPoint({''.join(self.u)!r}, {''.join(self.v)!r})"

    @property
    def is_periodic(self) -> bool:
        return not self.u

    def letter(self, i: int) -> str:
        if i < len(self.u):
            return self.u[i]
        return self.v[(i - len(self.u)) % len(self.v)]

    def prefix(self, n: int) -> Word:
        return tuple(self.letter(i) for i in range(n))

    def drop(self, k: int) -> "EvPeriodicPoint":
        """sigma^k of the point."""
        if k <= len(self.u):
            return EvPeriodicPoint(self.u[k:], self.v)
        r = (k - len(self.u)) % len(self.v)
        return EvPeriodicPoint((), self.v[r:] + self.v[:r])

    def prepend(self, w: Word) -> "EvPeriodicPoint":
        return EvPeriodicPoint(tuple(w) + self.u, self.v)

    def sort_key(self):
        return (len(self.u) + len(self.v), len(self.v), self.u, self.v)

    def fmt(self, s: Shift | None = None) -> str:
        if s is None:
            return "".join(self.u) + "|" + "".join(self.v)
        return s.fmt(self.u, "") + "|" + s.fmt(self.v, "")


def parse_point(s: Shift, text: str) -> EvPeriodicPoint:
    """Read the CLI literal ``"u|v"`` meaning u v^infinity."""
    if text.count("|") != 1:
        raise ValueError(f"point literal must look like 'u|v', got {text!r}")
    u, v = text.split("|")
    u = parse_word(s.alphabet, u) if u.strip() else EMPTY
    v = parse_word(s.alphabet, v) if v.strip() else EMPTY
    if not v:
        raise ValueError("point period must be nonempty")
    return EvPeriodicPoint(u, v)


_POINT_MEMO_SIZE = 1 << 16


def point_in_shift(s: Shift, p: EvPeriodicPoint) -> bool:
    """Scan u v^k far enough that every window of a forbidden length is seen."""
    memo = s._memo.setdefault("points", {})
    hit = memo.get(p)
    if hit is not None:
        return hit
    if any(a not in s._index for a in p.u + p.v):
        ok = False
    else:
        longest = max(s._forbidden_lengths, default=1)
        k = 1
        while len(p.v) * k < len(p.v) + longest:
            k += 1
        ok = s.is_clean(p.u + p.v * k)
    if len(memo) >= _POINT_MEMO_SIZE:
        memo.clear()
    memo[p] = ok
    return ok


def check_point(s: Shift, p: EvPeriodicPoint):
    if not point_in_shift(s, p):
        raise PointNotInShift(f"{p.fmt(s)} is not a point of {s!r}")


def shift_point(s: Shift, p: EvPeriodicPoint) -> EvPeriodicPoint:
    check_point(s, p)
    return p.drop(1)


def bounded_points(s: Shift, bound: int) -> list:
    """All points u v^inf of s with |u| + |v| <= bound (canonical sizes)."""
    found = set()
    words = [EMPTY]
    layers = [[EMPTY]]
    for _ in range(bound):
        words = [w + (a,) for w in words for a in s.alphabet]
        layers.append(words)
    for total in range(1, bound + 1):
        for lv in range(1, total + 1):
            for u in layers[total - lv]:
                for v in layers[lv]:
                    if primitive_root(v) != v or (u and u[-1] == v[-1]):
                        continue
                    p = EvPeriodicPoint(u, v)
                    if point_in_shift(s, p):
                        found.add(p)
    return sorted(found, key=lambda p: (len(p.u) + len(p.v), len(p.v), s.key(p.u), s.key(p.v)))
