import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import in_C, in_Z, points, words_upto
from sftalg.clopen import (
    ClopenSet,
    c_set,
    complement,
    contains_point,
    cylinder,
    empty_set,
    equals,
    follower,
    from_words,
    intersect,
    is_empty,
    is_singleton,
    minus,
    subset,
    union,
    whole_space,
)
from sftalg.errors import PointNotInShift, ShiftMismatch, WordNotInLanguage
from sftalg.identities import random_clopen
from sftalg.shift import EvPeriodicPoint, bounded_points, make_shift


def P(u, v):
    return EvPeriodicPoint(tuple(u), tuple(v))


def Z(s, w):
    return cylinder(s, w)


def test_cylinder_examples(gm, full2):
    z0 = Z(gm, "0")
    assert (z0.level, z0.words) == (1, {("0",)})
    assert is_empty(Z(gm, "11"))
    X = Z(full2, "")
    assert (X.level, X.words) == (0, {()})
    assert X == whole_space(full2)


def test_c_set_examples(gm, full2):
    assert c_set(gm, "1", "0") == Z(gm, "00")
    assert c_set(gm, "1", "1") == Z(gm, "10")
    assert c_set(gm, "1", "1") == Z(gm, "1")
    for a in words_upto(full2, 3):
        for b in words_upto(full2, 3):
            assert c_set(full2, a, b) == Z(full2, b)


def test_follower_examples(gm, full2):
    assert follower(gm, "1") == Z(gm, "0")
    assert follower(gm, "0") == whole_space(gm)
    assert follower(gm, "") == whole_space(gm)
    for b in words_upto(full2, 3):
        assert follower(full2, b) == whole_space(full2)


def test_boolean_examples(gm):
    assert union(Z(gm, "0"), Z(gm, "1")) == whole_space(gm)
    assert intersect(Z(gm, "0"), Z(gm, "00")) == Z(gm, "00")
    comp = complement(Z(gm, "10"))
    assert comp.refine(2) == {("0", "0"), ("0", "1")}
    assert comp == Z(gm, "0")
    assert minus(whole_space(gm), Z(gm, "1")) == Z(gm, "0")
    assert equals(c_set(gm, "1", "1"), Z(gm, "10"))
    assert subset(Z(gm, "00"), Z(gm, "0"))
    assert not subset(Z(gm, "0"), Z(gm, "00"))


def test_canonical_empty_and_merge(gm):
    e = from_words(gm, 3, [])
    assert (e.level, e.words) == (0, frozenset())
    assert e == empty_set(gm)
    assert from_words(gm, 2, ["00", "01"]) == Z(gm, "0")
    # 10 is the only extension of 1
    assert from_words(gm, 2, ["10"]).level == 1
    with pytest.raises(WordNotInLanguage):
        from_words(gm, 2, ["11"])


def test_contains_point(gm):
    assert contains_point(Z(gm, "00"), P("", "0"))
    assert not contains_point(Z(gm, "00"), P("1", "0"))
    with pytest.raises(PointNotInShift):
        contains_point(Z(gm, "0"), P("", "1"))


def test_shift_mismatch(gm, full2):
    with pytest.raises(ShiftMismatch):
        union(Z(gm, "0"), Z(full2, "0"))


def test_is_singleton_examples(gm, f10):
    assert is_singleton(follower(f10, "1")) == P("", "1")
    assert is_singleton(Z(gm, "0")) is None
    assert is_singleton(empty_set(gm)) is None
    assert is_singleton(Z(f10, "01")) == P("0", "1")
    assert is_singleton(Z(f10, "0")) is None


def test_is_singleton_matches_enumeration(ten):
    for s in ten.values():
        pts = points(s, 6)
        for a in words_upto(s, 2):
            for b in words_upto(s, 2):
                U = c_set(s, a, b)
                inside = [p for p in pts if in_C(s, a, b, p)]
                p = is_singleton(U)
                if p is not None:
                    assert inside == [p], (s, a, b)
                elif U:
                    assert len(inside) >= 2, (s, a, b)


def test_c_set_matches_definition(ten):
    for s in ten.values():
        pts = bounded_points(s, 4)
        for a in words_upto(s, 2):
            for b in words_upto(s, 3):
                U = c_set(s, a, b)
                for p in pts:
                    assert contains_point(U, p) == in_C(s, a, b, p), (s, a, b, p)


def test_pausa_identities(ten):
    for s in ten.values():
        for n in range(1, 5):
            for al in s.level(n):
                acc = whole_space(s)
                fol = whole_space(s)
                for k in range(1, n + 1):
                    acc = acc & c_set(s, "", al[:k])
                    fol = fol & follower(s, al[n - k:])
                assert acc == c_set(s, "", al) == Z(s, al)
                assert fol == follower(s, al)


def test_refinement_invariance(ten):
    rng = random.Random(3)
    for s in ten.values():
        for _ in range(20):
            U = random_clopen(s, rng)
            for extra in range(3):
                assert ClopenSet(s, U.level + extra, U.refine(U.level + extra)) == U


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_boolean_laws(seed):
    s = make_shift(["0", "1", "2"], ["11", "202"])
    rng = random.Random(seed)
    A, B, C = (random_clopen(s, rng) for _ in range(3))
    assert A | B == B | A and A & B == B & A
    assert (A | B) | C == A | (B | C)
    assert (A & B) & C == A & (B & C)
    assert A & (B | C) == (A & B) | (A & C)
    assert A | (B & C) == (A | B) & (A | C)
    assert ~(A | B) == ~A & ~B
    assert ~(A & B) == ~A | ~B
    assert ~~A == A
    assert A - B == A & ~B
    assert (A | ~A) == whole_space(s) and not (A & ~A)


def _eval_points(s, rng, depth):
    """A random expression as (ClopenSet, membership predicate)."""
    words = words_upto(s, 3)
    words = [w for w in words if s.in_language(w)]
    if depth == 0 or rng.random() < 0.3:
        a, b = rng.choice(words), rng.choice(words)
        return c_set(s, a, b), lambda p: in_C(s, a, b, p)
    op = rng.choice("&|~")
    U, f = _eval_points(s, rng, depth - 1)
    if op == "~":
        return ~U, lambda p: not f(p)
    V, g = _eval_points(s, rng, depth - 1)
    if op == "&":
        return U & V, lambda p: f(p) and g(p)
    return U | V, lambda p: f(p) or g(p)


def test_point_oracle_soundness(ten):
    rng = random.Random(11)
    for s in ten.values():
        pts = bounded_points(s, 4)
        for _ in range(30):
            U, f = _eval_points(s, rng, 3)
            for p in pts:
                assert contains_point(U, p) == f(p)


def test_z_is_c_of_empty(ten):
    for s in ten.values():
        for w in words_upto(s, 3):
            assert cylinder(s, w) == c_set(s, "", w)
            for p in bounded_points(s, 3):
                if s.in_language(w):
                    assert contains_point(cylinder(s, w), p) == in_Z(s, w, p)
