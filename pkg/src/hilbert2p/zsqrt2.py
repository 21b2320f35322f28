"""Exact arithmetic in Z[sqrt2]."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

IntLike = Union[int, "Z2Elem"]


@dataclass(frozen=True, order=False)
class Z2Elem:
    """The element a + b*sqrt(2)."""

    a: int
    b: int = 0

    @classmethod
    def coerce(cls, x: IntLike) -> Z2Elem:
        if isinstance(x, Z2Elem):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to Z2Elem")

    def __add__(self, other: IntLike) -> Z2Elem:
        o = Z2Elem.coerce(other)
        return Z2Elem(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> Z2Elem:
        return Z2Elem(-self.a, -self.b)

    def __sub__(self, other: IntLike) -> Z2Elem:
        return self + (-Z2Elem.coerce(other))

    def __rsub__(self, other: IntLike) -> Z2Elem:
        return Z2Elem.coerce(other) - self

    def __mul__(self, other: IntLike) -> Z2Elem:
        o = Z2Elem.coerce(other)
        return Z2Elem(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Z2Elem:
        if n < 0:
            if not self.is_unit():
                raise ZeroDivisionError(f"{self} is not invertible in Z[sqrt2]")
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> Z2Elem:
        return Z2Elem(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def inverse(self) -> Z2Elem:
        n = self.norm()
        if abs(n) != 1:
            raise ZeroDivisionError(f"{self} is not a unit")
        c = self.conj()
        return Z2Elem(c.a * n, c.b * n)

    def divides(self, other: IntLike) -> bool:
        return exact_div(Z2Elem.coerce(other), self) is not None

    def mod4(self) -> tuple[int, int]:
        return self.a % 4, self.b % 4

    def __str__(self) -> str:
        return self.render()

    def render(self, ascii: bool = False) -> str:
        root = "sqrt2" if ascii else "√2"
        minus = "-" if ascii else "−"
        a, b = self.a, self.b
        if b == 0:
            return f"{minus}{-a}" if a < 0 else str(a)
        coef = "" if abs(b) == 1 else str(abs(b))
        tail = f"{coef}{root}"
        if a == 0:
            return f"{minus}{tail}" if b < 0 else tail
        head = f"{minus}{-a}" if a < 0 else str(a)
        return f"{head} {minus if b < 0 else '+'} {tail}"

    @classmethod
    def parse(cls, text: str) -> Z2Elem:
        """Inverse of :meth:`render` (either flavour); whitespace is ignored."""
        s = re.sub(r"\s+", "", text).replace("−", "-").replace("*", "")
        s = s.replace("√2", "r").replace("sqrt(2)", "r").replace("sqrt2", "r")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if not terms or "".join(terms) != s:
            raise ValueError(f"cannot parse {text!r} as a + b√2")
        parts: dict[str, int] = {}
        for term in terms:
            kind = "b" if term.endswith("r") else "a"
            body = term[:-1] if kind == "b" else term
            if kind == "b" and body in ("", "+", "-"):
                body += "1"
            if kind in parts or not re.fullmatch(r"[+-]?\d+", body):
                raise ValueError(f"cannot parse {text!r} as a + b√2")
            parts[kind] = int(body)
        a, b = parts.get("a", 0), parts.get("b", 0)
        return cls(a, b)


ZERO = Z2Elem(0, 0)
ONE = Z2Elem(1, 0)
FUND_UNIT = Z2Elem(1, 1)  # 1 + sqrt2, norm -1
SQUARE_UNIT = Z2Elem(3, 2)  # (1 + sqrt2)^2
SQRT2 = Z2Elem(0, 1)


def unit_power(j: int) -> Z2Elem:
    """(1 + sqrt2)**j for any integer j."""
    return FUND_UNIT**j


def _round_div(n: int, d: int) -> tuple[int, int]:
    """The two integers nearest n/d (d > 0), floor first."""
    q = n // d
    return q, q + 1


def divmod_z2(x: Z2Elem, y: Z2Elem) -> tuple[Z2Elem, Z2Elem]:
    """Division with remainder minimising |norm(remainder)|.

    The quotient is chosen among the four lattice points around x/y;
    ties go to the first candidate in (floor, ceil) x (floor, ceil) order.
    """
    if y.is_zero():
        raise ZeroDivisionError("division by zero in Z[sqrt2]")
    n = y.norm()
    num = x * y.conj()
    if n < 0:
        num, n = -num, -n
    best = None
    for qa in _round_div(num.a, n):
        for qb in _round_div(num.b, n):
            q = Z2Elem(qa, qb)
            r = x - q * y
            key = abs(r.norm())
            if best is None or key < best[0]:
                best = (key, q, r)
    assert best is not None and best[0] < abs(y.norm())
    return best[1], best[2]


def exact_div(x: Z2Elem, y: Z2Elem) -> Z2Elem | None:
    """x / y if it lies in Z[sqrt2], otherwise None."""
    if y.is_zero():
        return ZERO if x.is_zero() else None
    n = y.norm()
    num = x * y.conj()
    if num.a % n or num.b % n:
        return None
    return Z2Elem(num.a // n, num.b // n)


def canonical_associate(x: Z2Elem) -> Z2Elem:
    """Associate +-(1+sqrt2)^k * x with a > 0, a minimal, then b >= 0, then |b| minimal.

    a^2 + 2b^2 is strictly convex along the unit orbit and a^2 differs from
    it only by the (sign-alternating) norm, so the optimum lies within two
    steps of the a^2 + 2b^2 minimiser.
    """
    if x.is_zero():
        raise ValueError("zero has no canonical associate")

    def size(z: Z2Elem) -> int:
        return z.a * z.a + 2 * z.b * z.b

    up, down = FUND_UNIT, FUND_UNIT.inverse()
    cur = x
    while size(cur * down) < size(cur):
        cur = cur * down
    while size(cur * up) < size(cur):
        cur = cur * up
    candidates = []
    z = cur * down**3
    for _ in range(7):
        for c in (z, -z):
            if c.a > 0:
                candidates.append(c)
        z = z * up
    return min(candidates, key=lambda c: (c.a, c.b < 0, abs(c.b)))


def gcd(x: Z2Elem, y: Z2Elem) -> Z2Elem:
    """Canonical greatest common divisor under the Euclidean function |norm|."""
    if x.is_zero() and y.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not y.is_zero():
        _, r = divmod_z2(x, y)
        x, y = y, r
    return canonical_associate(x)


def congruent_mod4(x: Z2Elem, y: Z2Elem) -> bool:
    d = x - y
    return d.a % 4 == 0 and d.b % 4 == 0
