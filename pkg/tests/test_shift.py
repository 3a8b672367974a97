import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import all_words, extends, points, shift_seq
from sftalg.errors import EmptyShift, MalformedSpec, PointNotInShift
from sftalg.shift import (
    EvPeriodicPoint,
    ShiftSpec,
    build_shift,
    bounded_points,
    is_in_language,
    language,
    make_shift,
    parse_point,
    point_in_shift,
    primitive_root,
    shift_point,
)


def P(u, v):
    return EvPeriodicPoint(tuple(u), tuple(v))


def test_full_shift_compiles(full2):
    assert full2.memory == 1
    assert full2.states == {("0",), ("1",)}


def test_golden_mean_has_no_1_to_1_edge(gm):
    assert gm.states == {("0",), ("1",)}
    assert dict(gm.transitions[("1",)]) == {"0": ("0",)}
    assert dict(gm.transitions[("0",)]) == {"0": ("0",), "1": ("1",)}


def test_empty_shift_is_a_value():
    s = make_shift(["a"], ["a"])
    assert s.is_empty
    with pytest.raises(EmptyShift):
        language(s, 1)
    with pytest.raises(EmptyShift):
        is_in_language(s, "a")


def test_dead_ends_are_pruned():
    # 1 can only be followed by 2, and 2 by nothing
    s = make_shift(["0", "1", "2"], ["10", "11", "20", "21", "22"])
    assert s.states == {("0",)}
    assert language(s, 2) == [("0", "0")]


@pytest.mark.parametrize("alphabet, forbidden", [
    ([], []),
    (["0", "0"], []),
    (["0"], ["01"]),
    (["0", "1"], ["1", "1"]),
    (["0", "1"], [""]),
    (["a|b"], []),
    ([""], []),
])
def test_malformed_specs(alphabet, forbidden):
    with pytest.raises(MalformedSpec):
        ShiftSpec(alphabet, forbidden)


def test_language_examples(gm, full2):
    assert is_in_language(gm, "010")
    assert not is_in_language(gm, "11")
    assert is_in_language(full2, "")
    assert language(gm, 2) == [("0", "0"), ("0", "1"), ("1", "0")]
    assert language(full2, 1) == [("0",), ("1",)]
    assert language(gm, 0) == [()]


def test_language_matches_brute_force(ten):
    for s in ten.values():
        for n in range(5):
            expect = [w for w in all_words(s, n) if extends(s, w)]
            assert sorted(language(s, n)) == sorted(expect), (s, n)


def test_factor_closure_and_extendability(ten):
    for s in ten.values():
        for n in range(1, 5):
            for w in language(s, n):
                for i in range(n):
                    for j in range(i, n + 1):
                        assert s.in_language(w[i:j])
                assert any(s.in_language(w + (a,)) for a in s.alphabet)


def test_point_examples(gm):
    assert point_in_shift(gm, P("", "0"))
    assert not point_in_shift(gm, P("", "1"))
    assert point_in_shift(gm, P("1", "0"))
    assert not point_in_shift(gm, P("0", "1"))


def test_long_forbidden_word_across_period_boundary():
    s = make_shift(["0", "1"], ["01010"])
    assert not point_in_shift(s, P("", "01"))
    assert point_in_shift(s, P("", "011"))


def test_shift_point_examples(gm):
    assert shift_point(gm, P("1", "0")) == P("", "0")
    assert shift_point(gm, P("", "0")) == P("", "0")
    assert shift_point(gm, P("", "01")) == P("", "10")
    with pytest.raises(PointNotInShift):
        shift_point(gm, P("", "1"))


def test_prefixes_of_points_are_in_the_language(ten):
    for s in ten.values():
        for p in bounded_points(s, 4):
            for k in range(7):
                assert s.in_language(p.prefix(k))
            assert point_in_shift(s, p.drop(1))


def test_bounded_points_matches_brute_force(ten):
    for s in list(ten.values())[:6]:
        assert bounded_points(s, 4) == points(s, 4)


def test_canonical_form():
    assert P("0101", "01") == P("", "01")
    assert P("1", "0101") == P("", "10")
    assert P("ab", "bab") == P("", "abb")
    assert (P("ba", "ab").u, P("ba", "ab").v) == (("b", "a"), ("a", "b"))
    p = P("001", "1")
    assert (p.u, p.v) == (("0", "0"), ("1",))


@given(st.text("ab", max_size=6), st.text("ab", min_size=1, max_size=5),
       st.integers(0, 3), st.integers(1, 3))
def test_canonical_form_is_representation_independent(u, v, extra, power):
    p = P(u, v)
    q = P(u + (v * 5)[:extra], (v * 5)[extra:extra + len(v)] * power)
    assert shift_seq(p, 30) == shift_seq(q, 30)
    assert p == q
    assert P(p.u, p.v) == p
    assert primitive_root(p.v) == p.v
    assert not p.u or p.u[-1] != p.v[-1]


@settings(max_examples=200)
@given(st.text("abc", min_size=1, max_size=12))
def test_primitive_root_brute(v):
    w = tuple(v)
    best = next(w[:d] for d in range(1, len(w) + 1) if len(w) % d == 0 and w[:d] * (len(w) // d) == w)
    assert primitive_root(w) == best


def test_parse_point():
    s = make_shift(["0", "1"])
    assert parse_point(s, "1|0") == P("1", "0")
    assert parse_point(s, "|01") == P("", "01")
    with pytest.raises(ValueError):
        parse_point(s, "10")
    with pytest.raises(ValueError):
        parse_point(s, "1|")


def test_multichar_symbols():
    s = make_shift(["a", "ab", "b"], [["ab", "ab"]])
    assert s.word("abab") == ("ab", "ab")
    assert s.word("ab a b") == ("ab", "a", "b")
    assert not s.in_language(("ab", "ab"))
    assert s.in_language(("a", "b", "a", "b"))
    assert build_shift(s.spec) == s
