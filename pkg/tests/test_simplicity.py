import math
import random

import pytest

from brute import in_Z
from sftalg.action import orbit
from sftalg.clopen import c_set, contains_point, cylinder, follower, whole_space
from sftalg.errors import (
    ClassExplosion,
    EmptyShift,
    PointNotInShift,
    RingNotField,
    WordNotInLanguage,
)
from sftalg.rings import QQ, ZZ, Zmod
from sftalg.shift import EvPeriodicPoint, bounded_points, make_shift, parse_point
from sftalg.simplicity import (
    check_collectively_cofinal_bounded,
    check_condition_L,
    check_hyper_cofinal,
    check_strongly_cofinal,
    cost,
    good_set,
    is_minimal,
    realizable_follower_classes,
    search_cost,
    simplicity_verdict,
)


def P(u, v):
    return EvPeriodicPoint(tuple(u), tuple(v))


def followers(s):
    return {c.follower for c in realizable_follower_classes(s)}


def test_class_examples(gm, full2, f10):
    assert followers(gm) == {whole_space(gm), cylinder(gm, "0")}
    assert followers(full2) == {whole_space(full2)}
    assert follower(f10, "1") in followers(f10)


def test_classes_match_all_small_B(ten):
    # every F_B for B of up to three words of length <= 3 is some class
    rng = random.Random(2)
    for s in ten.values():
        fs = followers(s)
        words = [w for n in range(4) for w in s.level(n)]
        for _ in range(60):
            B = rng.sample(words, min(len(words), rng.randint(1, 3)))
            F = whole_space(s)
            for b in B:
                F = F & c_set(s, b, "")
            assert not F or F in fs


def test_condition_L_examples(full2, onept, f10):
    assert check_condition_L(full2).holds
    v = check_condition_L(onept)
    assert not v.holds and v.witness["class"] == ["a"] and v.witness["gamma"] == "a"
    v = check_condition_L(f10)
    assert not v.holds and v.witness["class"] == ["1"] and v.witness["gamma"] == "1"


def test_cost_examples(full2, gm, f10):
    assert cost(full2, ["1"], P("", "0")) == 0
    assert cost(gm, ["1"], P("1", "0")) == 1
    assert cost(f10, ["1"], P("", "0")) == math.inf


def test_cost_errors(gm):
    with pytest.raises(WordNotInLanguage):
        cost(gm, ["11"], P("", "0"))
    with pytest.raises(PointNotInShift):
        cost(gm, ["1"], P("", "1"))


def test_cost_zero_iff_in_followers(ten):
    rng = random.Random(6)
    for s in ten.values():
        words = [w for n in range(4) for w in s.level(n)]
        for p in bounded_points(s, 4):
            B = rng.sample(words, min(len(words), 2))
            inside = all(contains_point(follower(s, b), p) for b in B)
            assert (cost(s, B, p) == 0) == inside


def test_cost_monotone(ten):
    rng = random.Random(9)
    for s in ten.values():
        words = [w for n in range(1, 4) for w in s.level(n)]
        for p in bounded_points(s, 3):
            B = rng.sample(words, 1)
            C = B + rng.sample(words, min(2, len(words)))
            assert cost(s, C, p) >= cost(s, B, p)


def test_cost_matches_search(ten):
    for s in list(ten.values())[:6]:
        words = [w for n in range(1, 3) for w in s.level(n)]
        for p in bounded_points(s, 3):
            for b in words:
                c = cost(s, [b], p)
                found = search_cost(s, [b], p, 4)
                assert found == (None if c > 4 else c)


def test_hyper_and_strong_examples(full2, gm, f10):
    for s in (full2, gm):
        assert check_hyper_cofinal(s).holds and check_strongly_cofinal(s).holds
    v = check_hyper_cofinal(f10)
    assert not v.holds and v.witness == {"class": ["1"], "point": "|0"}
    assert not check_strongly_cofinal(f10).holds


def test_good_set_of_golden_mean_is_everything(gm):
    assert good_set(gm, (("1",),)) == frozenset(gm.level(1))


def test_entry_depth_reports_uniform_time():
    s = make_shift(["0", "1"], ["000", "10"])
    v = check_hyper_cofinal(s)
    assert v.holds and v.details["entry_depth"] == 2
    # the worst point 001^inf needs two shifts before any junction can be repaired
    assert cost(s, ["1"], P("00", "1")) == 2


def test_hyper_implies_strong(ten):
    for s in ten.values():
        if check_hyper_cofinal(s).holds:
            assert check_strongly_cofinal(s).holds


def test_collectively_bounded_examples(full2, gm, f10):
    assert check_collectively_cofinal_bounded(full2, 3).holds
    assert check_collectively_cofinal_bounded(gm, 3).holds
    assert not check_collectively_cofinal_bounded(f10, 3).holds


def test_collectively_agrees_with_hyper_on_corpus(ten):
    for s in ten.values():
        if not check_hyper_cofinal(s).holds:
            assert not check_collectively_cofinal_bounded(s, 3).holds


def test_is_minimal_examples(full2, f10, onept):
    assert is_minimal(full2).holds
    v = is_minimal(f10)
    assert not v.holds and v.witness["point"] == "|0"
    assert is_minimal(onept).holds


def test_minimal_orbits_visit_every_cylinder(ten):
    for s in ten.values():
        v = is_minimal(s)
        words = [w for n in range(1, 4) for w in s.level(n)]
        if v.holds:
            for p in bounded_points(s, 2):
                orb = orbit(s, p, 4)
                for w in words:
                    assert any(in_Z(s, w, q) for q in orb), (s, p, w)
        else:
            # the trapped point and everything in its orbit stay outside G_S forever
            S = tuple(s.word(b) for b in v.witness["class"])
            good = good_set(s, S)
            p = parse_point(s, v.witness["point"])
            assert all(p.drop(k).prefix(s.memory) not in good for k in range(8))
            for q in orbit(s, p, 3):
                assert cost(s, S, q) == math.inf


def test_simplicity_examples(full2, gm, f10, onept):
    assert simplicity_verdict(full2, QQ).holds
    assert simplicity_verdict(gm, QQ).holds
    v = simplicity_verdict(f10, QQ)
    assert not v.holds and v.witness["failed"] == ["condition_L", "hyper_cofinal"]
    v = simplicity_verdict(onept, Zmod(3))
    assert not v.holds and v.witness["failed"] == ["condition_L"]


def test_simplicity_needs_a_field(gm):
    with pytest.raises(RingNotField):
        simplicity_verdict(gm, ZZ)
    with pytest.raises(RingNotField):
        simplicity_verdict(gm, Zmod(4))


def test_empty_shift_is_rejected():
    s = make_shift(["a"], ["a"])
    with pytest.raises(EmptyShift):
        check_condition_L(s)


def test_class_cap(gm):
    s = make_shift(["0", "1", "2"], ["012"])
    with pytest.raises(ClassExplosion):
        realizable_follower_classes(s, cap=3)
    assert realizable_follower_classes(gm, cap=100)


def test_verdict_json_shape(f10):
    j = check_condition_L(f10).to_json()
    assert set(j) == {"property", "holds", "witness", "method", "bound"}
    assert j["method"] == "decision" and j["bound"] is None
