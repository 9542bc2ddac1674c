"""Witness search for 4/p = 1/x + 1/y + 1/z over primes p.

A witness is a pair (x, d) with ceil(p/4) <= x <= ceil(p/2) and
d | x*x satisfying one of two congruences modulo q = 4*x - p:

  type I :              (p*x + d) % q == 0
  type II: d <= x  and  (x + d)   % q == 0

Each witness certifies one solution through closed formulas, and the
certified solutions are exactly the solutions of the equation (the
recover module walks the other direction). Type I solutions have
p not dividing y; type II solutions have p | y.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .arith import _square_divisor_cache, is_prime
from .errors import ConsistencyError, DomainError

__all__ = [
    "SolutionType",
    "Witness",
    "Solution",
    "x_range",
    "check_type1",
    "check_type2",
    "iter_witnesses",
    "enumerate_witnesses",
    "first_witness",
    "build_solution",
    "verify_identity",
]


class SolutionType(str, Enum):
    """Solution class by divisibility of y: p | y for TYPE_II only."""

    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True, slots=True)
class Witness:
    """A certified (p, x, d, type) tuple; see the module docstring.

    Construction does not validate (enumeration emits only valid
    witnesses); build_solution re-checks everything it uses.
    """

    p: int
    x: int
    d: int
    type: SolutionType

    @property
    def k(self) -> int:
        """Offset of x above the smallest admissible value ceil(p/4)."""
        return self.x - (self.p + 3) // 4

    @property
    def modulus(self) -> int:
        return 4 * self.x - self.p


@dataclass(frozen=True, slots=True)
class Solution:
    """A solution of 4/p = 1/x + 1/y + 1/z with x <= y <= z."""

    p: int
    x: int
    y: int
    z: int
    type: SolutionType


def _require_prime(p: int) -> None:
    if p < 0 or not is_prime(p):
        raise DomainError(f"expected a prime, got {p}")


def x_range(p: int) -> tuple[int, int]:
    """Smallest and largest x any solution can use: (ceil(p/4), ceil(p/2)).

    4*x - p >= 1 holds throughout the range.
    """
    _require_prime(p)
    return (p + 3) // 4, (p + 1) // 2


def _check_preconditions(p: int, x: int, d: int) -> None:
    _require_prime(p)
    lo, hi = (p + 3) // 4, (p + 1) // 2
    if not lo <= x <= hi:
        raise DomainError(f"x={x} outside [{lo}, {hi}] for p={p}")
    if d < 1 or (x * x) % d != 0:
        raise DomainError(f"d={d} is not a positive divisor of {x}**2")


def check_type1(p: int, x: int, d: int) -> bool:
    """True iff (p*x + d) is divisible by 4*x - p."""
    _check_preconditions(p, x, d)
    return (p * x + d) % (4 * x - p) == 0


def check_type2(p: int, x: int, d: int) -> bool:
    """True iff d <= x and (x + d) is divisible by 4*x - p."""
    _check_preconditions(p, x, d)
    return d <= x and (x + d) % (4 * x - p) == 0


def iter_witnesses(p: int) -> Iterator[Witness]:
    """All witnesses for p: x ascending, d ascending, type I first.

    A pair (x, d) satisfying both congruences yields two witnesses,
    the type I one first. Lazy, so callers can stop early.
    """
    _require_prime(p)
    lo, hi = (p + 3) // 4, (p + 1) // 2
    for x in range(lo, hi + 1):
        q = 4 * x - p
        t1 = (-p * x) % q
        t2 = (-x) % q
        for d in _square_divisor_cache(x):
            r = d % q
            if r == t1:
                yield Witness(p, x, d, SolutionType.TYPE_I)
            if r == t2 and d <= x:
                yield Witness(p, x, d, SolutionType.TYPE_II)


def enumerate_witnesses(p: int) -> list[Witness]:
    """Exhaustive witness list for p, in the deterministic order."""
    return list(iter_witnesses(p))


def first_witness(p: int) -> Optional[Witness]:
    """First witness in enumeration order, or None; stops early."""
    return next(iter_witnesses(p), None)


def verify_identity(p: int, x: int, y: int, z: int) -> bool:
    """Exact check of 4*x*y*z == p*(y*z + x*z + x*y).

    Equivalent to 4/p == 1/x + 1/y + 1/z for positive arguments;
    arbitrary-precision, never raises.
    """
    return 4 * x * y * z == p * (y * z + x * z + x * y)


def build_solution(w: Witness) -> Solution:
    """Certified solution for a witness via the closed y, z formulas.

      type I : y = (p*x + d) / q      z = p*(x + p*(x*x/d)) / q
      type II: y = p*(x + d) / q      z = p*(x + x*x/d) / q

    with q = 4*x - p. Every division is asserted exact, the ordering
    x <= y <= z, the type's divisibility, and the identity are all
    re-checked; any failure raises ConsistencyError (broken witness).
    """
    p, x, d = w.p, w.x, w.d
    lo, hi = (p + 3) // 4, (p + 1) // 2
    if not (is_prime(p) and lo <= x <= hi and d >= 1):
        raise ConsistencyError(f"witness fields out of domain: {w}")
    xx = x * x
    if xx % d != 0:
        raise ConsistencyError(f"d={d} does not divide {x}**2")
    q = 4 * x - p
    if w.type is SolutionType.TYPE_I:
        y_num = p * x + d
        z_num = p * (x + p * (xx // d))
    elif w.type is SolutionType.TYPE_II:
        if d > x:
            raise ConsistencyError(f"type II requires d <= x: {w}")
        y_num = p * (x + d)
        z_num = p * (x + xx // d)
    else:  # pragma: no cover - enum is closed
        raise ConsistencyError(f"unknown solution type: {w.type!r}")
    if y_num % q != 0 or z_num % q != 0:
        raise ConsistencyError(f"non-exact division for witness {w}")
    y, z = y_num // q, z_num // q
    if not x <= y <= z:
        raise ConsistencyError(f"ordering violated: x={x}, y={y}, z={z}")
    if (y % p == 0) != (w.type is SolutionType.TYPE_II):
        raise ConsistencyError(f"type does not match divisibility of y={y}")
    if not verify_identity(p, x, y, z):
        raise ConsistencyError(f"identity fails for witness {w}")
    return Solution(p, x, y, z, w.type)
