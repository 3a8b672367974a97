import pytest

from sftalg.oracles import (
    enumerate_B,
    oracle_condition_L,
    oracle_cofinal,
    replay_condition_L,
    replay_cofinal,
)
from sftalg.shift import EvPeriodicPoint, parse_point
from sftalg.simplicity import check_condition_L, check_hyper_cofinal, check_strongly_cofinal

# oracle witnesses at bound 4, worked out by hand for the named shifts and
# frozen for the seeded random members
FROZEN = {
    "full2": (None, None, None),
    "golden": (None, None, None),
    "forbid10": ({"class": ["1"], "gamma": "1", "point": "|1"},
                 {"class": ["1"], "point": "|0"}, {"class": ["1"], "point": "|0"}),
    "onepoint": ({"class": ["a"], "gamma": "a", "point": "|a"}, None, None),
    "random0": (None, None, None),
    "random1": ({"class": ["0"], "gamma": "10", "point": "|10"}, None, None),
    "random2": ({"class": ["1"], "gamma": "1", "point": "|1"}, None, None),
    "random3": (None, {"class": ["1"], "point": "|0"}, {"class": ["1"], "point": "|0"}),
    "random4": (None, None, None),
    "random5": (None, None, None),
}


def test_corpus_is_the_frozen_one(ten):
    assert list(ten) == list(FROZEN)
    assert str(ten["random1"]) == "Shift(alphabet=['0', '1'], forbidden=[00,11])"
    assert str(ten["random3"]) == "Shift(alphabet=['0', '1'], forbidden=[100,111])"


@pytest.mark.parametrize("name", list(FROZEN))
def test_frozen_oracle_values(ten, name):
    s = ten[name]
    got = (oracle_condition_L(s, 4).witness, oracle_cofinal(s, 4).witness,
           oracle_cofinal(s, 4, singletons=True).witness)
    assert got == FROZEN[name]


def test_spec_examples(gm, onept, f10):
    assert oracle_condition_L(gm, 3).holds and oracle_cofinal(gm, 3).holds
    v = oracle_condition_L(onept, 2)
    assert not v.holds and v.witness["class"] == ["a"]
    v = oracle_cofinal(f10, 3)
    assert not v.holds and v.witness["point"] == "|0"
    assert v.method == "oracle" and v.bound == 3


def test_enumerate_B_traces_are_distinct(ten):
    for s in ten.values():
        items, pts = enumerate_B(s, 3)
        traces = [t for _, t in items]
        assert len(set(traces)) == len(traces)
        assert all(t and t <= set(pts) for t in traces)


def test_decision_witnesses_replay(ten):
    for s in ten.values():
        L = check_condition_L(s)
        if not L.holds:
            w = L.witness
            assert replay_condition_L(s, w["class"], w["gamma"], 4)
        for v in (check_hyper_cofinal(s), check_strongly_cofinal(s)):
            if not v.holds:
                assert replay_cofinal(s, v.witness["class"], parse_point(s, v.witness["point"]), 4)


def test_bogus_witnesses_do_not_replay(gm, f10):
    assert not replay_condition_L(gm, ["1"], "0", 4)
    assert not replay_condition_L(f10, ["0"], "1", 4)
    assert not replay_cofinal(gm, ["1"], EvPeriodicPoint((), ("0",)), 4)
    assert not replay_cofinal(f10, ["1"], EvPeriodicPoint((), ("1",)), 4)
