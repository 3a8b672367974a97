"""Bounded brute-force oracles, written straight from the definitions.

Nothing here uses suffix classes or the gamma automaton. Follower sets are
probed by testing ``beta p`` on every small eventually periodic point p, and
sets B of language words are enumerated up to a size bound. A reported
failure names a concrete (B, gamma) or (B, point); a pass only means no
failure was seen within the bound.
"""

from __future__ import annotations

import math

from .shift import EMPTY, EvPeriodicPoint, Shift, bounded_points, point_in_shift, primitive_root
from .simplicity import Verdict, cost, search_cost


def _in_follower(s: Shift, B, p: EvPeriodicPoint) -> bool:
    return all(point_in_shift(s, p.prepend(b)) for b in B)


def _language_words(s: Shift, bound: int) -> list:
    return [w for n in range(bound + 1) for w in s.level(n)]


def _b_key(s, B):
    return (len(B), tuple((len(b) == 0, len(b), s.key(b)) for b in B))


def enumerate_B(s: Shift, bound: int, singletons: bool = False):
    """Distinct traces F_B on the bounded points, for B of size <= bound.

    Yields (B, frozenset of points in F_B) with B the first set in
    (size, shortlex) order producing that trace. Nonempty traces only.
    """
    pts = bounded_points(s, bound)
    words = sorted(_language_words(s, bound), key=lambda w: (len(w) == 0, len(w), s.key(w)))
    trace = {b: frozenset(p for p in pts if point_in_shift(s, p.prepend(b))) for b in words}
    seen = {}
    layer = []
    for b in words:
        t = trace[b]
        if t and t not in seen:
            seen[t] = (b,)
            layer.append(t)
    size = 1
    while layer and size < bound and not singletons:
        size += 1
        nxt = {}
        for t in layer:
            B = seen[t]
            for b in words:
                if b in B:
                    continue
                u = t & trace[b]
                if not u or u in seen:
                    continue
                cand = tuple(sorted(B + (b,), key=lambda w: (len(w) == 0, len(w), s.key(w))))
                if u not in nxt or _b_key(s, cand) < _b_key(s, nxt[u]):
                    nxt[u] = cand
        seen.update(nxt)
        layer = list(nxt)
    items = sorted(seen.items(), key=lambda kv: _b_key(s, kv[1]))
    return [(B, t) for t, B in items], pts


def oracle_condition_L(s: Shift, bound: int) -> Verdict:
    s.require_nonempty()
    classes, _ = enumerate_B(s, bound)
    gammas = [g for n in range(1, bound + 1) for g in s.level(n) if primitive_root(g) == g]
    for B, t in classes:
        for g in gammas:
            q = EvPeriodicPoint(EMPTY, g)
            if q in t and len(t) == 1:
                return Verdict("condition_L", False,
                               {"class": [s.json_word(b) for b in B], "gamma": s.json_word(g),
                                "point": q.fmt(s)}, method="oracle", bound=bound)
    return Verdict("condition_L", True, method="oracle", bound=bound)


def oracle_cofinal(s: Shift, bound: int, singletons: bool = False) -> Verdict:
    """Cost on every small point for every small B.

    A point with no alpha, gamma inside the bound is reported only when its
    exact cost is infinite.
    """
    s.require_nonempty()
    name = "strongly_cofinal" if singletons else "hyper_cofinal"
    classes, pts = enumerate_B(s, bound, singletons)
    for B, _ in classes:
        for p in pts:
            if search_cost(s, B, p, bound) is not None:
                continue
            if cost(s, B, p) == math.inf:
                return Verdict(name, False, {"class": [s.json_word(b) for b in B], "point": p.fmt(s)},
                               method="oracle", bound=bound)
    return Verdict(name, True, method="oracle", bound=bound)


def replay_condition_L(s: Shift, B, gamma, bound: int) -> bool:
    """Does (B, gamma) witness a failure of condition (L) within the bound?"""
    B = [s.word(b) for b in B]
    q = EvPeriodicPoint(EMPTY, s.word(gamma))
    if not point_in_shift(s, q) or not _in_follower(s, B, q):
        return False
    return all(p == q or not _in_follower(s, B, p) for p in bounded_points(s, bound))


def replay_cofinal(s: Shift, B, p: EvPeriodicPoint, bound: int) -> bool:
    """Does (B, p) witness infinite cost? Checked by search and exact cost."""
    B = [s.word(b) for b in B]
    if not point_in_shift(s, p) or not any(_in_follower(s, B, q) for q in bounded_points(s, bound)):
        return False
    return search_cost(s, B, p, bound) is None and cost(s, B, p) == math.inf
