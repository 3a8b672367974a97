"""Clopen subsets of a shift as unions of cylinders at one common level.

A ``ClopenSet`` at level n is the union of the cylinders Z(w) for w in its
word set, each w a language word of length n. Construction always lowers the
level as far as possible, so equal sets have equal fields and ``==`` is set
equality.
"""

from __future__ import annotations

from .errors import EmptyShift, PointNotInShift, ShiftMismatch, WordNotInLanguage
from .shift import EMPTY, EvPeriodicPoint, Shift, Word, point_in_shift


class ClopenSet:
    __slots__ = ("shift", "level", "words", "_hash")

    def __init__(self, shift: Shift, level: int, words):
        """Build the canonical form of the union of Z(w), w in ``words``.

        All words must have length ``level`` and lie in the language; this
        is not rechecked here (use :func:`from_words` for untrusted input).
        """
        words = frozenset(words)
        if not words:
            level = 0
        else:
            while level > 0:
                groups = {}
                for w in words:
                    groups.setdefault(w[:-1], []).append(w)
                if any(len(ws) != len(shift.extensions(p, level)) for p, ws in groups.items()):
                    break
                words = frozenset(groups)
                level -= 1
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "_hash", hash((level, words)))

    def __setattr__(self, name, value):
        raise AttributeError("ClopenSet is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ClopenSet):
            return NotImplemented
        return (self.level == other.level and self.words == other.words
                and self.shift == other.shift)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ClopenSet({self.fmt()})"

    def __bool__(self):
        return bool(self.words)

    def sorted_words(self) -> list:
        return self.shift.sorted_words(self.words)

    def fmt(self) -> str:
        if not self.words:
            return "0"
        if self.level == 0:
            return "X"
        return "|".join(f"Z({self.shift.fmt(w)})" for w in self.sorted_words())

    def to_json(self) -> dict:
        return {"level": self.level,
                "words": [self.shift.json_word(w) for w in self.sorted_words()]}

    def refine(self, n: int) -> frozenset:
        """Words of length n whose cylinders exactly cover this set."""
        if n < self.level:
            raise ValueError(f"cannot refine level {self.level} down to {n}")
        if n == self.level:
            return self.words
        ext = self.shift.extensions
        return frozenset(e for w in self.words for e in ext(w, n))

    # operators mirror set syntax
    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return minus(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return subset(self, other)


def from_words(s: Shift, level: int, words) -> ClopenSet:
    """Validated constructor; words outside the language are rejected."""
    out = set()
    for w in words:
        w = s.word(w)
        if len(w) != level:
            raise ValueError(f"word {s.fmt(w)} does not have length {level}")
        if not s.in_language(w):
            raise WordNotInLanguage(f"word {s.fmt(w)} is not in the language")
        out.add(w)
    return ClopenSet(s, level, out)


def empty_set(s: Shift) -> ClopenSet:
    return ClopenSet(s, 0, ())


def whole_space(s: Shift) -> ClopenSet:
    s.require_nonempty()
    return ClopenSet(s, 0, (EMPTY,))


def cylinder(s: Shift, w) -> ClopenSet:
    s.require_nonempty()
    w = s.word(w)
    if not s.in_language(w):
        return empty_set(s)
    return ClopenSet(s, len(w), (w,))


def _c_words(s: Shift, alpha: Word, beta: Word) -> tuple:
    """Level |beta|+m words of C(alpha, beta)."""
    memo = s._memo
    key = ("C", alpha, beta)
    if key in memo:
        return memo[key]
    out = ()
    if s.in_language(alpha) and s.in_language(beta):
        m = s.memory
        # beta y and alpha y are in X iff both junctions with y[:m] are
        out = tuple(e for e in s.extensions(beta, len(beta) + m)
                    if s.in_language(alpha + e[len(beta):]))
    memo[key] = out
    return out


def c_set(s: Shift, alpha, beta) -> ClopenSet:
    """C(alpha, beta) = { beta x in X : alpha x in X }."""
    s.require_nonempty()
    alpha, beta = s.word(alpha), s.word(beta)
    key = ("Cset", alpha, beta)
    if key not in s._memo:
        s._memo[key] = ClopenSet(s, len(beta) + s.memory, _c_words(s, alpha, beta))
    return s._memo[key]


def follower(s: Shift, beta) -> ClopenSet:
    """F_beta = { x : beta x in X }."""
    return c_set(s, beta, EMPTY)


def _same(a: ClopenSet, b: ClopenSet):
    if a.shift is not b.shift and a.shift != b.shift:
        raise ShiftMismatch("clopen sets live on different shifts")


def _common(a: ClopenSet, b: ClopenSet):
    _same(a, b)
    n = max(a.level, b.level)
    return n, a.refine(n), b.refine(n)


def union(a: ClopenSet, b: ClopenSet) -> ClopenSet:
    n, x, y = _common(a, b)
    return ClopenSet(a.shift, n, x | y)


def intersect(a: ClopenSet, b: ClopenSet) -> ClopenSet:
    n, x, y = _common(a, b)
    return ClopenSet(a.shift, n, x & y)


def minus(a: ClopenSet, b: ClopenSet) -> ClopenSet:
    n, x, y = _common(a, b)
    return ClopenSet(a.shift, n, x - y)


def complement(a: ClopenSet) -> ClopenSet:
    a.shift.require_nonempty()
    n = a.level
    return ClopenSet(a.shift, n, frozenset(a.shift.level(n)) - a.words)


def is_empty(a: ClopenSet) -> bool:
    return not a.words


def equals(a: ClopenSet, b: ClopenSet) -> bool:
    _same(a, b)
    return a == b


def subset(a: ClopenSet, b: ClopenSet) -> bool:
    n, x, y = _common(a, b)
    return x <= y


def contains_point(a: ClopenSet, p: EvPeriodicPoint) -> bool:
    if not point_in_shift(a.shift, p):
        raise PointNotInShift(f"{p.fmt(a.shift)} is not a point of {a.shift!r}")
    return p.prefix(a.level) in a.words


def is_singleton(a: ClopenSet) -> EvPeriodicPoint | None:
    """The unique point of ``a`` if it has exactly one, else None.

    After refining to level max(n, m) each word pins an automaton state, and
    its cylinder is a single point iff every state reachable from there has
    exactly one outgoing edge.
    """
    s = a.shift
    if s.is_empty:
        raise EmptyShift()
    if not a.words:
        return None
    words = a.refine(max(a.level, s.memory))
    if len(words) != 1:
        return None
    (w,) = words
    state = s.state_of(w)
    seen = {}
    letters = []
    while state not in seen:
        seen[state] = len(letters)
        out = s.transitions[state]
        if len(out) != 1:
            return None
        a_, state = out[0]
        letters.append(a_)
    start = seen[state]
    return EvPeriodicPoint(w + tuple(letters[:start]), tuple(letters[start:]))


def points_in(a: ClopenSet, points) -> list:
    return [p for p in points if p.prefix(a.level) in a.words]
