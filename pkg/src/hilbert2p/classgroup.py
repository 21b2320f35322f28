"""Class-number oracle for Q(sqrt(2p)) via cycles of reduced indefinite forms.

Everything here is independent of the Z[sqrt2] machinery: the narrow class
number comes from counting rho-cycles of reduced primitive forms of
discriminant 8p and the unit from the continued fraction of sqrt(2p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .arith import two_part
from .errors import DomainError


def _check_discriminant(D: int) -> int:
    if D <= 0:
        raise DomainError(f"discriminant must be positive, got {D}")
    s = isqrt(D)
    if s * s == D:
        raise DomainError(f"discriminant {D} is a perfect square")
    if D % 4 not in (0, 1):
        raise DomainError(f"{D} is not a discriminant (must be 0 or 1 mod 4)")
    return s


@dataclass(frozen=True)
class QForm:
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def is_reduced(self) -> bool:
        # With s = floor(sqrt D) and sqrt D irrational, "x < sqrt D" is "x <= s".
        s = isqrt(self.disc)
        two_a = 2 * abs(self.a)
        return 0 < self.b <= s and two_a + self.b > s and two_a - self.b <= s

    def rho(self) -> QForm:
        """One reduction step (a, b, c) -> (c, b', (b'^2 - D) / 4c)."""
        D = self.disc
        s = isqrt(D)
        c = self.c
        if c == 0:
            raise DomainError("rho undefined for c = 0 (square discriminant)")
        m = 2 * abs(c)
        if c * c > D:
            # -|c| < b' <= |c|
            b2 = (-self.b) % m
            if b2 > abs(c):
                b2 -= m
        else:
            # sqrt D - 2|c| < b' < sqrt D
            b2 = s - (s + self.b) % m
        return QForm(c, b2, (b2 * b2 - D) // (4 * c))

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def reduce_form(f: QForm) -> QForm:
    _check_discriminant(f.disc)
    seen = 0
    while not f.is_reduced():
        f = f.rho()
        seen += 1
        if seen > 10_000 + f.disc:
            raise RuntimeError(f"reduction of {f} did not terminate")
    return f


def reduced_forms(D: int) -> list[QForm]:
    """All reduced primitive forms of discriminant D, sorted by (b, a)."""
    s = _check_discriminant(D)
    out = []
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        n = (D - b * b) // 4  # = -ac > 0
        d = 1
        while d * d <= n:
            if n % d == 0:
                for a_abs in {d, n // d}:
                    for a in (a_abs, -a_abs):
                        q = QForm(a, b, -n // a)
                        if q.is_reduced() and q.is_primitive():
                            out.append(q)
            d += 1
    return sorted(out, key=lambda q: (q.b, q.a))


def reduced_cycles(D: int) -> list[list[QForm]]:
    """Partition of the reduced forms into rho-cycles.

    Raises if rho fails to be a permutation of the reduced set.
    """
    forms = reduced_forms(D)
    index = set(forms)
    images = {q: q.rho() for q in forms}
    if set(images.values()) != index:
        raise AssertionError(f"rho is not a bijection on reduced forms of {D}")
    cycles, done = [], set()
    for q in forms:
        if q in done:
            continue
        cyc = [q]
        done.add(q)
        nxt = images[q]
        while nxt != q:
            cyc.append(nxt)
            done.add(nxt)
            nxt = images[nxt]
        cycles.append(cyc)
    return cycles


def narrow_class_number(D: int) -> int:
    return len(reduced_cycles(D))


def sqrt_continued_fraction(m: int) -> tuple[int, list[int]]:
    """(a0, period) of the continued fraction of sqrt(m), exact integer recurrence."""
    a0 = isqrt(m)
    if a0 * a0 == m:
        raise DomainError(f"{m} is a perfect square")
    period = []
    P, Q, a = 0, 1, a0
    while True:
        P = a * Q - P
        Q = (m - P * P) // Q
        a = (a0 + P) // Q
        period.append(a)
        if a == 2 * a0:
            return a0, period


def fundamental_unit(m: int) -> tuple[int, int, int]:
    """Minimal x, y > 0 with x^2 - m y^2 = +-1, and that sign.

    x/y is the convergent just before the end of the first period.
    """
    if m <= 1:
        raise DomainError(f"need m > 1, got {m}")
    a0, period = sqrt_continued_fraction(m)
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for a in period[:-1]:
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    n = h * h - m * k * k
    assert n == (-1) ** len(period)
    return h, k, n


@dataclass(frozen=True)
class Classification:
    p: int
    h_plus: int
    h: int
    h2: int
    h2_plus: int
    norm_eps: int
    eps_x: int
    eps_y: int
    cycles: tuple[tuple[QForm, ...], ...] = field(default=(), compare=False, repr=False)


def class_data(p: int, keep_cycles: bool = False) -> Classification:
    if p % 8 != 1:
        raise DomainError(f"class data is only assembled for p = 1 mod 8, got {p}")
    cycles = reduced_cycles(8 * p)
    h_plus = len(cycles)
    x, y, n = fundamental_unit(2 * p)
    h = h_plus if n == -1 else h_plus // 2
    return Classification(
        p=p,
        h_plus=h_plus,
        h=h,
        h2=two_part(h),
        h2_plus=two_part(h_plus),
        norm_eps=n,
        eps_x=x,
        eps_y=y,
        cycles=tuple(tuple(c) for c in cycles) if keep_cycles else (),
    )
