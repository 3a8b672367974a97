"""Exact coefficient rings: Q, Z and Z/nZ."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

from sympy import factorint, isprime


@dataclass(frozen=True)
class CoefficientRing:
    kind: str  # "Q", "Z" or "Zn"
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Z", "Zn"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zn" and self.n < 2:
            raise ValueError("Z/nZ needs n >= 2")

    @property
    def is_field(self) -> bool:
        return self.kind == "Q" or (self.kind == "Zn" and isprime(self.n))

    @property
    def is_indecomposable(self) -> bool:
        # Z/nZ has no nontrivial idempotents exactly when n is a prime power
        return self.kind != "Zn" or len(factorint(self.n)) == 1

    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into the ring."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.kind == "Q":
            return Fraction(x)
        x = Fraction(x)
        if self.kind == "Z":
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return int(x)
        num, den = x.numerator % self.n, x.denominator % self.n
        try:
            inv = pow(den, -1, self.n)
        except ValueError:
            raise ValueError(f"{x} has no image in Z/{self.n}Z") from None
        return num * inv % self.n

    def norm(self, x):
        """Cheap coercion for values that are already ring-like."""
        if self.kind == "Q":
            return x if type(x) is Fraction else self(x)
        if type(x) is int:
            return x % self.n if self.kind == "Zn" else x
        return self(x)

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    def add(self, a, b):
        return (a + b) % self.n if self.kind == "Zn" else a + b

    def mul(self, a, b):
        return (a * b) % self.n if self.kind == "Zn" else a * b

    def neg(self, a):
        return (-a) % self.n if self.kind == "Zn" else -a

    def fmt(self, a) -> str:
        return str(a)

    def sort_key(self, a):
        return a

    def __str__(self):
        return {"Q": "Q", "Z": "Z"}.get(self.kind, f"Z/{self.n}Z")


QQ = CoefficientRing("Q")
ZZ = CoefficientRing("Z")


def Zmod(n: int) -> CoefficientRing:
    return CoefficientRing("Zn", n)


def parse_ring(text: str) -> CoefficientRing:
    """``Q``, ``Z``, ``Zn:<n>`` or ``Fp:<p>`` (p must be prime)."""
    t = text.strip()
    if t == "Q":
        return QQ
    if t == "Z":
        return ZZ
    head, _, tail = t.partition(":")
    if head in ("Zn", "Fp") and tail.isdigit():
        n = int(tail)
        if head == "Fp" and not isprime(n):
            raise ValueError(f"Fp:{n}: {n} is not prime")
        return Zmod(n)
    raise ValueError(f"unknown ring {text!r}; use Q, Z, Zn:<n> or Fp:<p>")
