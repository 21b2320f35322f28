"""Representations p = e^2 - 2f^2 and the case split they induce."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import is_prime, jacobi, sqrt_mod
from .errors import DomainError, InvariantViolation
from .zsqrt2 import FUND_UNIT, SQUARE_UNIT, Z2Elem, congruent_mod4, gcd

# (1 + sqrt2)^4: totally positive and = 1 mod 4, so it preserves e, f mod 4.
_ORBIT_STEP = SQUARE_UNIT * SQUARE_UNIT
_ORBIT_STEP_INV = _ORBIT_STEP.inverse()


class CaseLabel(str, enum.Enum):
    H2_NPLUS = "H2_NPLUS"  # h = 2 mod 4, N(eps) = +1, e < 0
    H4_NMINUS = "H4_NMINUS"  # h = 4 mod 8, N(eps) = -1, e = 7 mod 8
    H8PLUS = "H8PLUS"  # 8 | h+, e = 3 mod 8

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Representation:
    p: int
    e: int
    f: int

    @property
    def alpha(self) -> Z2Elem:
        return Z2Elem(self.e, self.f)

    def check(self) -> None:
        if self.e * self.e - 2 * self.f * self.f != self.p:
            raise InvariantViolation(f"e^2 - 2f^2 != p for {self}")
        if self.e % 4 != 3 or self.f % 4 != 2 or self.f <= 0:
            raise InvariantViolation(f"{self} violates e = 3 mod 4, f = 2 mod 4, f > 0")


def solve_norm_equation(p: int) -> Z2Elem:
    """Some gamma in Z[sqrt2] with norm(gamma) = p, for a prime p = +-1 mod 8."""
    if not is_prime(p) or p == 2:
        raise DomainError(f"{p} is not an odd prime")
    if p % 8 not in (1, 7):
        raise DomainError(f"2 is not a square mod {p}, so p is inert in Z[sqrt2]")
    x = sqrt_mod(2, p)
    g = gcd(Z2Elem(p), Z2Elem(x, -1))
    if g.norm() == -p:
        g = g * FUND_UNIT
    if g.norm() != p:
        raise InvariantViolation(f"gcd over {p} has norm {g.norm()}")
    return g


def _admissible_start(gamma: Z2Elem) -> Z2Elem:
    # +-1 and +-(3 + 2sqrt2) act simply transitively on the four odd/even
    # residue classes mod 4, so exactly one of these is = 3 + 2sqrt2 mod 4.
    for c in (gamma, -gamma, gamma * SQUARE_UNIT, -gamma * SQUARE_UNIT):
        if congruent_mod4(c, SQUARE_UNIT):
            return c
    raise DomainError(f"{gamma} has no associate = 3 + 2sqrt2 mod 4 (is p = 1 mod 8?)")


def normalize(gamma: Z2Elem, p: int) -> Representation:
    """Canonical (e, f): e = 3 mod 4, f = 2 mod 4, f > 0 and f minimal.

    The admissible elements are beta * (17 + 12sqrt2)^j for a single beta and
    their conjugates. Along that orbit f is strictly monotone, so we walk to
    the smallest |f| and conjugate if it is negative.
    """
    if gamma.norm() != p:
        raise DomainError(f"norm({gamma}) = {gamma.norm()} != {p}")
    if p % 8 != 1:
        raise DomainError(f"normalization needs p = 1 mod 8, got {p}")
    cur = _admissible_start(gamma)
    for step in (_ORBIT_STEP, _ORBIT_STEP_INV):
        while abs((cur * step).b) < abs(cur.b):
            cur = cur * step
    if cur.b < 0:
        cur = cur.conj()
    rep = Representation(p, cur.a, cur.b)
    rep.check()
    return rep


def representation(p: int) -> Representation:
    return normalize(solve_norm_equation(p), p)


def classify_by_e(rep: Representation) -> CaseLabel:
    e = rep.e
    if e % 4 != 3:
        raise InvariantViolation(f"e = {e} is not 3 mod 4")
    if e < 0:
        return CaseLabel.H2_NPLUS
    return CaseLabel.H4_NMINUS if e % 8 == 7 else CaseLabel.H8PLUS


def jacobi_minus2(e: int) -> int:
    """(-2/e) evaluated at |e|.

    For negative e we use the positive associate: (-2/e) := (-2/|e|).
    The alternative Kronecker-style convention (-2/-1) = -1 would flip the
    sign; callers recording e < 0 data should keep that in mind.
    """
    return jacobi(-2, abs(e))
