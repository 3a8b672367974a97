"""Condition (L), cofinality, minimality and the simplicity verdict.

For an SFT with memory m, whether beta x lies in X depends on beta only
through its suffix of length min(m, |beta|). So a finite set B of language
words matters only through its suffix set S, a subset of the words of length
at most m, and every quantifier over finite B becomes a finite one.

The gamma-search works on tuples (one entry per w in S) of the last m letters
of w gamma. There are finitely many such tuples, so a breadth-first search
over them gives exact minimal |gamma| and exact reachability.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .clopen import ClopenSet, c_set, is_singleton
from .errors import ClassExplosion, RingNotField, WordNotInLanguage
from .rings import CoefficientRing
from .shift import EMPTY, EvPeriodicPoint, Shift, Word, bounded_points, check_point, point_in_shift

DEFAULT_CLASS_CAP = 2 ** 20


@dataclass(frozen=True)
class FollowerClass:
    suffixes: tuple  # the suffix set S, canonical order
    follower: ClopenSet  # F_S, intersection of F_w over w in S


@dataclass
class Verdict:
    property: str
    holds: bool
    witness: Optional[dict] = None
    method: str = "decision"
    bound: Optional[int] = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"property": self.property, "holds": self.holds, "witness": self.witness,
               "method": self.method, "bound": self.bound}
        if self.details:
            out["details"] = self.details
        return out


def _gen_key(s: Shift, w: Word):
    # the empty word goes last so named classes prefer real words
    return (len(w) == 0, len(w), s.key(w))


def class_key(s: Shift, S) -> tuple:
    return (len(S), tuple(_gen_key(s, w) for w in S))


def suffix_set(s: Shift, B) -> tuple:
    """Canonical suffix set of B; raises if some word is outside the language."""
    m = s.memory
    out = set()
    for b in B:
        b = s.word(b)
        if not s.in_language(b):
            raise WordNotInLanguage(f"{s.fmt(b)} is not in the language")
        out.add(b[len(b) - m:] if len(b) > m else b)
    return tuple(sorted(out, key=lambda w: _gen_key(s, w)))


def _follower_states(s: Shift, w: Word) -> frozenset:
    return c_set(s, w, EMPTY).refine(s.memory)


def realizable_follower_classes(s: Shift, cap: int = DEFAULT_CLASS_CAP) -> list:
    """All distinct nonempty F_S, each labelled by a minimal S.

    Found by a breadth-first closure of the single followers under
    intersection, so the layer where a set first appears is its minimal |S|.
    """
    s.require_nonempty()
    key = ("classes", cap)
    if key in s._memo:
        return s._memo[key]
    m = s.memory
    gens = sorted((w for n in range(m + 1) for w in s.level(n)), key=lambda w: _gen_key(s, w))
    fol = {w: _follower_states(s, w) for w in gens}
    reps: dict = {}
    frontier = []
    for w in gens:
        F = fol[w]
        if F and F not in reps:
            reps[F] = (w,)
            frontier.append(F)
    work = len(gens)
    while frontier:
        found = {}
        for F in frontier:
            S = reps[F]
            for w in gens:
                if w in S:
                    continue
                work += 1
                if work > cap:
                    raise ClassExplosion(f"more than {cap} class candidates; raise the cap")
                G = F & fol[w]
                if not G or G in reps:
                    continue
                cand = tuple(sorted(S + (w,), key=lambda x: _gen_key(s, x)))
                if G not in found or class_key(s, cand) < class_key(s, found[G]):
                    found[G] = cand
        reps.update(found)
        frontier = list(found)
    out = [FollowerClass(S, ClopenSet(s, m, F)) for F, S in reps.items()]
    out.sort(key=lambda c: class_key(s, c.suffixes))
    s._memo[key] = out
    return out


def _words_json(s, S):
    return [s.json_word(w) for w in S]


# -- condition (L) -------------------------------------------------------------

def condition_L_failures(s: Shift, cap: int = DEFAULT_CLASS_CAP) -> list:
    """Every class whose follower set is a single purely periodic point."""
    out = []
    for c in realizable_follower_classes(s, cap):
        p = is_singleton(c.follower)
        if p is not None and p.is_periodic:
            out.append((c, p))
    return out


def check_condition_L(s: Shift, cap: int = DEFAULT_CLASS_CAP) -> Verdict:
    s.require_nonempty()
    fails = condition_L_failures(s, cap)
    if not fails:
        return Verdict("condition_L", True)
    c, p = fails[0]
    return Verdict("condition_L", False, {
        "class": _words_json(s, c.suffixes),
        "gamma": s.json_word(p.v),
        "point": p.fmt(s),
    })


# -- gamma search and cost -------------------------------------------------------

def _gamma_reach(s: Shift, S: tuple) -> dict:
    """Reachable suffix tuples of (w gamma for w in S) with minimal |gamma|."""
    key = ("reach", S)
    memo = s._memo
    if key in memo:
        return memo[key]
    m = s.memory
    start = tuple(S)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        st = queue.popleft()
        d = dist[st]
        for a in s.alphabet:
            nxt = []
            for t in st:
                ta = t + (a,)
                if not s.in_language(ta):
                    break
                nxt.append(ta[len(ta) - m:] if len(ta) > m else ta)
            else:
                nt = tuple(nxt)
                if nt not in dist:
                    dist[nt] = d + 1
                    queue.append(nt)
    memo[key] = dist
    return dist


def _gamma_cost(s: Shift, S: tuple, y0: Word):
    """min |gamma| with w gamma y in X for all w in S, where y starts with y0."""
    key = ("gcost", S, y0)
    memo = s._memo
    if key in memo:
        return memo[key]
    best = math.inf
    for st, d in _gamma_reach(s, S).items():
        if d < best and all(s.in_language(t + y0) for t in st):
            best = d
    memo[key] = best
    return best


def good_set(s: Shift, S: tuple) -> frozenset:
    """Level-m words y0 from which some gamma repairs every junction."""
    return frozenset(y0 for y0 in s.level(s.memory) if _gamma_cost(s, S, y0) < math.inf)


def cost(s: Shift, B, p: EvPeriodicPoint):
    """Cost(B, p): least |alpha| + |gamma| with p in C(beta gamma, alpha) for all beta in B.

    alpha must be a prefix of p, so only the shifts sigma^k p with
    k < |u| + |v| need checking (later shifts repeat with a larger k).
    Returns ``math.inf`` when no pair exists.
    """
    check_point(s, p)
    S = suffix_set(s, B)
    if not S:
        return 0
    m = s.memory
    best = math.inf
    for k in range(len(p.u) + len(p.v)):
        if k >= best:
            break
        c = _gamma_cost(s, S, p.drop(k).prefix(m))
        best = min(best, k + c)
    return best


# -- cofinality ------------------------------------------------------------------

def _trapped(s: Shift, good: frozenset):
    """States whose cylinders avoid ``good`` and that can avoid it forever.

    Returns (remaining states, depth) where depth is the longest run of
    states outside ``good`` when no infinite run exists.
    """
    rest = set(s.states) - good
    while True:
        dead = {q for q in rest if not any(t in rest for _, t in s.transitions[q])}
        if not dead:
            break
        rest -= dead
    if rest:
        return rest, None
    outside = set(s.states) - good
    depth = {}

    def longest(q):
        if q not in depth:
            depth[q] = 1 + max((longest(t) for _, t in s.transitions[q] if t in outside), default=0)
        return depth[q]

    return rest, max((longest(q) for q in outside), default=0)


def _trapped_point(s: Shift, rest: set) -> EvPeriodicPoint:
    first = q = s.sorted_words(rest)[0]
    seen = {}
    letters = []
    while q not in seen:
        seen[q] = len(letters)
        a, q = next((a, t) for a, t in s.transitions[q] if t in rest)
        letters.append(a)
    i = seen[q]
    return EvPeriodicPoint(first + tuple(letters[:i]), tuple(letters[i:]))


def cofinal_failures(s: Shift, classes) -> list:
    out = []
    for c in classes:
        rest, _ = _trapped(s, good_set(s, c.suffixes))
        if rest:
            out.append((c, _trapped_point(s, rest)))
    return out


def _cofinal_verdict(s, name, classes) -> Verdict:
    depth = 0
    for c in classes:
        rest, d = _trapped(s, good_set(s, c.suffixes))
        if rest:
            p = _trapped_point(s, rest)
            return Verdict(name, False, {"class": _words_json(s, c.suffixes), "point": p.fmt(s)})
        depth = max(depth, d)
    return Verdict(name, True, details={"entry_depth": depth})


def check_hyper_cofinal(s: Shift, cap: int = DEFAULT_CLASS_CAP) -> Verdict:
    s.require_nonempty()
    return _cofinal_verdict(s, "hyper_cofinal", realizable_follower_classes(s, cap))


def singleton_classes(s: Shift) -> list:
    s.require_nonempty()
    m = s.memory
    gens = sorted((w for n in range(m + 1) for w in s.level(n)), key=lambda w: _gen_key(s, w))
    return [FollowerClass((w,), c_set(s, w, EMPTY)) for w in gens]


def check_strongly_cofinal(s: Shift) -> Verdict:
    return _cofinal_verdict(s, "strongly_cofinal", singleton_classes(s))


def search_cost(s: Shift, S, p: EvPeriodicPoint, max_total: int):
    """Smallest |alpha| + |gamma| <= max_total found by direct enumeration, or None."""
    words = [[EMPTY]]
    for _ in range(max_total):
        words.append([w + (a,) for w in words[-1] for a in s.alphabet])
    for total in range(max_total + 1):
        for k in range(total + 1):
            y = p.drop(k)
            for g in words[total - k]:
                if all(point_in_shift(s, y.prepend(w + g)) for w in S) and point_in_shift(s, y.prepend(g)):
                    return total
    return None


def check_collectively_cofinal_bounded(s: Shift, bound: int, cap: int = DEFAULT_CLASS_CAP) -> Verdict:
    """Bounded semi-decision over classes and small points.

    A point with no alpha, gamma inside the bound is a failure only when its
    exact cost is infinite; otherwise it lies beyond the bound and is skipped.
    """
    s.require_nonempty()
    pts = bounded_points(s, bound)
    beyond = 0
    for c in realizable_follower_classes(s, cap):
        for p in pts:
            if search_cost(s, c.suffixes, p, bound) is not None:
                continue
            if cost(s, c.suffixes, p) == math.inf:
                return Verdict("collectively_cofinal", False,
                               {"class": _words_json(s, c.suffixes), "point": p.fmt(s)},
                               method="bounded", bound=bound)
            beyond += 1
    return Verdict("collectively_cofinal", True, method="bounded", bound=bound,
                   details={"beyond_bound": beyond})


def is_minimal(s: Shift, cap: int = DEFAULT_CLASS_CAP) -> Verdict:
    v = check_hyper_cofinal(s, cap)
    return Verdict("minimal", v.holds, v.witness, v.method, v.bound, v.details)


def simplicity_verdict(s: Shift, ring: CoefficientRing, cap: int = DEFAULT_CLASS_CAP) -> Verdict:
    s.require_nonempty()
    if not ring.is_field:
        raise RingNotField(f"simplicity is only decided over fields, got {ring}")
    L = check_condition_L(s, cap)
    H = check_hyper_cofinal(s, cap)
    if L.holds and H.holds:
        return Verdict("simple", True)
    witness = {"failed": [v.property for v in (L, H) if not v.holds]}
    for v in (L, H):
        if not v.holds:
            witness[v.property] = v.witness
    return Verdict("simple", False, witness)
