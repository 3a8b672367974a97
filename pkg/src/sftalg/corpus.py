"""Named example shifts and a seeded generator of small random SFTs."""

from __future__ import annotations

import random

from .shift import Shift, make_shift

CORPUS_SEED = 7


def named_shifts() -> dict:
    return {
        "full2": make_shift(["0", "1"], []),
        "golden": make_shift(["0", "1"], ["11"]),
        "forbid10": make_shift(["0", "1"], ["10"]),
        "onepoint": make_shift(["a"], []),
    }


def random_shift(rng: random.Random, max_symbols: int = 3, max_memory: int = 2) -> Shift:
    """A nonempty SFT with 2..max_symbols letters and memory <= max_memory."""
    while True:
        k = rng.randint(2, max_symbols)
        alphabet = [str(i) for i in range(k)]
        forbidden = set()
        for _ in range(rng.randint(1, 3)):
            n = rng.randint(2, max_memory + 1)
            forbidden.add("".join(rng.choice(alphabet) for _ in range(n)))
        s = make_shift(alphabet, sorted(forbidden))
        if not s.is_empty:
            return s


def corpus(size: int = 10, seed: int = CORPUS_SEED) -> dict:
    """The named shifts followed by distinct random ones, ``size`` in all."""
    out = named_shifts()
    rng = random.Random(seed)
    seen = set(out.values())
    i = 0
    while len(out) < size:
        s = random_shift(rng)
        if s in seen:
            continue
        seen.add(s)
        out[f"random{i}"] = s
        i += 1
    return out
