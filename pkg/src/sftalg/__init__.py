"""Exact computations with subshifts of finite type and their algebras."""

__version__ = "0.1.0"

from .action import FreeGroupElement, act_clopen, act_point, domain_set, orbit, parse_group
from .algebra import (
    AlgebraElement,
    LcFunction,
    alg_equals,
    alg_mul,
    alg_star,
    gen_p,
    gen_s,
    gen_s_star,
    pi,
    unit,
)
from .clopen import ClopenSet, c_set, contains_point, cylinder, follower
from .errors import SftError
from .rings import QQ, ZZ, CoefficientRing, Zmod, parse_ring
from .shift import EvPeriodicPoint, Shift, ShiftSpec, build_shift, make_shift, parse_point
from .simplicity import (
    check_condition_L,
    check_hyper_cofinal,
    check_strongly_cofinal,
    cost,
    is_minimal,
    simplicity_verdict,
)

__all__ = [
    "AlgebraElement", "ClopenSet", "CoefficientRing", "EvPeriodicPoint", "FreeGroupElement",
    "LcFunction", "QQ", "SftError", "Shift", "ShiftSpec", "ZZ", "Zmod",
    "act_clopen", "act_point", "alg_equals", "alg_mul", "alg_star", "build_shift", "c_set",
    "check_condition_L", "check_hyper_cofinal", "check_strongly_cofinal", "contains_point",
    "cost", "cylinder", "domain_set", "follower", "gen_p", "gen_s", "gen_s_star", "is_minimal",
    "make_shift", "orbit", "parse_group", "parse_point", "parse_ring", "pi",
    "simplicity_verdict", "unit",
]
