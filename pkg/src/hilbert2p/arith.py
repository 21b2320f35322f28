"""Exact integer helpers: primality, residue symbols, modular and integer roots."""

from __future__ import annotations

from math import isqrt

from .errors import DomainError

# Deterministic Miller-Rabin: the first twelve primes as witnesses give a
# correct answer for every n < 3.317e24 (Sorenson & Webster 2015).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise DomainError(f"jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod(a: int, p: int) -> int:
    """Smaller square root of a quadratic residue a modulo an odd prime p.

    Tonelli-Shanks; the result x satisfies 0 < x <= p // 2.
    """
    a %= p
    if a == 0 or p == 2 or jacobi(a, p) != 1:
        raise DomainError(f"{a} is not a nonzero quadratic residue mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, x = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, x = t * c % p, x * b % p
    return min(x, p - x)


def _check_one_mod_8(p: int) -> None:
    if p % 8 != 1:
        raise DomainError(f"quartic symbol is only defined here for p = 1 mod 8, got {p}")


def quartic_symbol_2_mod_p(p: int) -> int:
    """Rational quartic residue symbol (2/p)_4 for p = 1 mod 8."""
    _check_one_mod_8(p)
    r = pow(2, (p - 1) // 4, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    # Only reachable for composite p.
    raise DomainError(f"2^((p-1)/4) mod {p} = {r} is not +-1")


def quartic_symbol_p_mod_2(p: int) -> int:
    """(p/2)_4: +1 when p = 1 mod 16, -1 when p = 9 mod 16."""
    _check_one_mod_8(p)
    return 1 if p % 16 == 1 else -1


def is_perfect_square(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def two_part(n: int) -> int:
    """Largest power of two dividing n (n != 0)."""
    n = abs(n)
    return n & -n


def primes_1_mod_8(lo: int, hi: int) -> list[int]:
    """Primes p = 1 (mod 8) with lo <= p <= hi."""
    start = lo + (1 - lo) % 8
    return [p for p in range(start, hi + 1, 8) if is_prime(p)]
