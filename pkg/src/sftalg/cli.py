"""Command-line front end.

Exit codes: 0 success, 1 a checked property fails, 2 error. With ``--json``
every run prints one JSON report ``{verb, inputs, result, timing, version}``
(errors print ``{verb, inputs, error: {code, message}, ...}``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import __version__
from .action import orbit
from .clopen import is_singleton
from .errors import SftError
from .identities import DEFAULT_SEED, all_passed, check_all
from .oracles import oracle_condition_L, oracle_cofinal, replay_condition_L, replay_cofinal
from .parsing import evaluate, evaluate_set, parse_spec
from .rings import parse_ring
from .shift import build_shift, language, parse_point
from .simplicity import (
    check_condition_L,
    check_hyper_cofinal,
    check_strongly_cofinal,
    cost,
    realizable_follower_classes,
    simplicity_verdict,
)

CSTAR_NOTE = ("the same criterion, condition (L) plus cofinality, decides simplicity of the "
              "subshift C*-algebra, so this verdict applies to it as well")


class UsageError(SftError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")

    p = _Parser(prog="sftalg", description="Exact computations with subshift algebras of SFTs.",
                parents=[common])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help):
        v = sub.add_parser(name, help=help, parents=[common])
        v.add_argument("spec", help="JSON spec file")
        return v

    verb("info", "summary of the shift")
    v = verb("language", "words of length N")
    v.add_argument("-n", type=int, required=True)
    v = verb("clopen", "evaluate a set expression")
    v.add_argument("expr")
    v = verb("eval", "evaluate an algebra expression")
    v.add_argument("expr")
    v.add_argument("--ring", default="Q", help="Q, Z or Zn:<n>")
    v = verb("check", "run the identity suites")
    v.add_argument("--max-len", type=int, required=True)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--ring", default="Q")
    v = verb("cost", "Cost(B, x)")
    v.add_argument("--B", required=True, help="comma separated words")
    v.add_argument("--point", required=True, help="u|v for u v^inf")
    v = verb("orbit", "points reachable under the partial action")
    v.add_argument("--point", required=True)
    v.add_argument("--depth", type=int, required=True)
    v = verb("simplicity", "decide simplicity of the algebra")
    v.add_argument("--ring", required=True, help="Q or Fp:<p>")
    v.add_argument("--oracle-bound", type=int, default=None)
    return p


def _nonneg(name, n):
    if n < 0:
        raise UsageError(f"{name} must be nonnegative")


def _shift(args):
    return build_shift(parse_spec(args.spec))


# -- verbs: each returns (result payload, human text, exit code) -----------------

def run_info(args):
    s = _shift(args)
    res = {"alphabet": list(s.alphabet),
           "forbidden": sorted(s.json_word(f) for f in s.forbidden),
           "memory": s.memory, "empty": s.is_empty,
           "states": [s.json_word(q) for q in s.sorted_words(s.states)]}
    lines = [f"alphabet: {' '.join(s.alphabet)}",
             f"forbidden: {', '.join(s.fmt(f) for f in s.sorted_words(s.forbidden)) or '(none)'}",
             f"memory: {s.memory}"]
    if s.is_empty:
        lines.append("shift is empty")
    else:
        res["transitions"] = {s.fmt(q): {a: s.fmt(t) for a, t in s.transitions[q]}
                              for q in s.sorted_words(s.states)}
        res["language_sizes"] = [len(s.level(n)) for n in range(6)]
        classes = realizable_follower_classes(s)
        res["follower_classes"] = [{"class": [s.json_word(w) for w in c.suffixes],
                                    "follower": c.follower.fmt()} for c in classes]
        lines.append(f"states: {' '.join(s.fmt(q) for q in s.sorted_words(s.states))}")
        lines.append("language sizes n=0..5: " + " ".join(map(str, res["language_sizes"])))
        lines.append("follower classes:")
        lines += [f"  {{{', '.join(s.fmt(w) for w in c.suffixes)}}} -> {c.follower.fmt()}"
                  for c in classes]
    return res, "\n".join(lines), 0


def run_language(args):
    _nonneg("-n", args.n)
    s = _shift(args)
    words = language(s, args.n)
    return {"n": args.n, "count": len(words), "words": [s.json_word(w) for w in words]}, \
        "\n".join(s.fmt(w) for w in words), 0


def run_clopen(args):
    s = _shift(args)
    U = evaluate_set(s, args.expr)
    p = is_singleton(U)
    res = {"set": U.fmt(), **U.to_json(), "singleton": None if p is None else p.fmt(s)}
    text = U.fmt() + ("" if p is None else f"\nsingleton: {p.fmt(s)}")
    return res, text, 0


def run_eval(args):
    s = _shift(args)
    x = evaluate(s, parse_ring(args.ring), args.expr)
    return {"ring": args.ring, "element": x.fmt(), "expr": x.to_expr(), **x.to_json()}, x.fmt(), 0


def run_check(args):
    _nonneg("--max-len", args.max_len)
    s = _shift(args)
    reports = check_all(s, parse_ring(args.ring), args.max_len, seed=args.seed)
    ok = all_passed(reports)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} checked)"
             + ("" if r.passed else f": {r.counterexample}") for r in reports]
    return {"passed": ok, "checks": [r.to_json() for r in reports]}, "\n".join(lines), 0 if ok else 1


def run_cost(args):
    s = _shift(args)
    B = [w.strip() for w in args.B.split(",")]
    p = parse_point(s, args.point)
    c = cost(s, B, p)
    val = None if c == math.inf else c
    return {"cost": val, "infinite": val is None}, "inf" if val is None else str(val), 0


def run_orbit(args):
    _nonneg("--depth", args.depth)
    s = _shift(args)
    pts = orbit(s, parse_point(s, args.point), args.depth)
    out = [q.fmt(s) for q in pts]
    return {"count": len(out), "points": out}, "\n".join(out), 0


def _oracle_report(s, bound, L, H, S):
    res = {"bound": bound}
    pairs = [("condition_L", L, oracle_condition_L(s, bound)),
             ("hyper_cofinal", H, oracle_cofinal(s, bound)),
             ("strongly_cofinal", S, oracle_cofinal(s, bound, singletons=True))]
    for name, d, o in pairs:
        entry = {"oracle": o.to_json(), "agrees": o.holds or not d.holds}
        if not d.holds:
            w = d.witness
            if name == "condition_L":
                entry["witness_replays"] = replay_condition_L(s, w["class"], w["gamma"], bound)
            else:
                entry["witness_replays"] = replay_cofinal(s, w["class"], parse_point(s, w["point"]), bound)
        res[name] = entry
    return res


def run_simplicity(args):
    ring = parse_ring(args.ring)
    if args.oracle_bound is not None:
        _nonneg("--oracle-bound", args.oracle_bound)
    s = _shift(args)
    v = simplicity_verdict(s, ring)
    L, H, S = check_condition_L(s), check_hyper_cofinal(s), check_strongly_cofinal(s)
    res = {"ring": args.ring, "verdict": v.to_json(),
           "checks": {"condition_L": L.to_json(), "hyper_cofinal": H.to_json(),
                      "strongly_cofinal": S.to_json(), "minimal": H.holds},
           "note": CSTAR_NOTE}
    lines = [f"simple: {'yes' if v.holds else 'no'}"]
    for d in (L, H, S):
        lines.append(f"  {d.property}: {'holds' if d.holds else 'fails'}"
                     + ("" if d.holds else f" (witness {json.dumps(d.witness, ensure_ascii=False)})"))
    lines.append(f"  minimal: {'yes' if H.holds else 'no'}")
    if args.oracle_bound is not None:
        res["oracles"] = _oracle_report(s, args.oracle_bound, L, H, S)
        for name in ("condition_L", "hyper_cofinal", "strongly_cofinal"):
            e = res["oracles"][name]
            lines.append(f"  oracle {name} (bound {args.oracle_bound}): "
                         f"{'holds' if e['oracle']['holds'] else 'fails'}"
                         f"{'' if e['agrees'] else ' DISAGREES'}")
    lines.append(f"note: {CSTAR_NOTE}")
    return res, "\n".join(lines), 0 if v.holds else 1


VERBS = {"info": run_info, "language": run_language, "clopen": run_clopen, "eval": run_eval,
         "check": run_check, "cost": run_cost, "orbit": run_orbit, "simplicity": run_simplicity}


def _inputs(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("verb", "json")}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    want_json = "--json" in argv
    start = time.perf_counter()
    args = None
    try:
        args = build_parser().parse_args(argv)
        result, text, code = VERBS[args.verb](args)
    except Exception as exc:  # every failure is reported, none exits 0
        if isinstance(exc, SftError):
            err_code = exc.code
        elif isinstance(exc, ValueError):
            err_code = "invalid-value"
        else:
            err_code = "internal"
        report = {"verb": getattr(args, "verb", None),
                  "inputs": _inputs(args) if args is not None else {"argv": argv},
                  "error": {"code": err_code, "message": str(exc)}}
        if want_json:
            report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
            report["version"] = __version__
            print(json.dumps(report, ensure_ascii=False))
        else:
            print(f"error [{err_code}]: {exc}", file=sys.stderr)
        return 2
    if want_json:
        report = {"verb": args.verb, "inputs": _inputs(args), "result": result,
                  "timing": {"seconds": round(time.perf_counter() - start, 6)},
                  "version": __version__}
        print(json.dumps(report, ensure_ascii=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
