"""Odd solutions of e*u^2 = t^2 + 2p*s^2 and the integral r = (t - 2fs)/e."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

from .arith import is_perfect_square
from .errors import IntegralizationError, SearchExhausted, UnsolvableError
from .represent import Representation

DEFAULT_U_LIMIT = 10_000


@dataclass(frozen=True)
class DiophSolution:
    u: int
    t: int
    s: int
    r: int
    scale: int = 1


def _require_solvable(rep: Representation) -> None:
    if rep.e < 0 or rep.e % 8 != 3:
        raise UnsolvableError(
            f"p = {rep.p}: e = {rep.e} is not positive and 3 mod 8; "
            "e*u^2 = t^2 + 2p*s^2 has no odd solution under these hypotheses"
        )


def iter_primitive(rep: Representation, u_limit: int = DEFAULT_U_LIMIT) -> Iterator[tuple[int, int, int]]:
    """Primitive odd triples (u, t, s), s > 0, ordered by u then s."""
    _require_solvable(rep)
    e, two_p = rep.e, 2 * rep.p
    for u in range(1, u_limit + 1, 2):
        eu2 = e * u * u
        # 2p s^2 <= e u^2; t > 0 excludes equality (p is not a square times e/2).
        s_max = isqrt(eu2 // two_p)
        for s in range(1, s_max + 1, 2):
            t = is_perfect_square(eu2 - two_p * s * s)
            if not t or t % 2 == 0:
                continue
            if gcd(gcd(u, t), s) != 1:
                # Its reduction has smaller u and was already emitted.
                continue
            yield u, t, s


def enumerate_primitive(rep: Representation, u_limit: int = DEFAULT_U_LIMIT) -> list[tuple[int, int, int]]:
    return list(iter_primitive(rep, u_limit))


def first_primitive(rep: Representation, u_limit: int = DEFAULT_U_LIMIT) -> tuple[int, int, int]:
    for triple in iter_primitive(rep, u_limit):
        return triple
    raise SearchExhausted(rep.p, u_limit)


def sign_gcds(prim: tuple[int, int, int], rep: Representation) -> tuple[int, int]:
    """(gcd(t - 2fs, e), gcd(t + 2fs, e))."""
    _, t, s = prim
    return gcd(t - 2 * rep.f * s, rep.e), gcd(t + 2 * rep.f * s, rep.e)


def make_integral(prim: tuple[int, int, int], rep: Representation) -> DiophSolution:
    """Pick the sign of s and an odd multiplier so that (t - 2fs)/e is integral.

    The sign maximising gcd(t - 2f*sign*s, e) wins (ties go to +1); the
    multiplier is e divided by that gcd.
    """
    u, t, s = prim
    e, f = rep.e, rep.f
    g_plus, g_minus = sign_gcds(prim, rep)
    sigma, g = (1, g_plus) if g_plus >= g_minus else (-1, g_minus)
    m = e // g
    mu, mt, ms = m * u, m * t, m * sigma * s
    num = mt - 2 * f * ms
    if num % e:
        raise IntegralizationError(g_plus, g_minus)
    return DiophSolution(u=mu, t=mt, s=ms, r=num // e, scale=m)


def check_solution(rep: Representation, sol: DiophSolution) -> bool:
    e, f, p = rep.e, rep.f, rep.p
    u, t, s, r = sol.u, sol.t, sol.s, sol.r
    return (
        u % 2 == 1
        and t % 2 == 1
        and s % 2 == 1
        and u > 0
        and t > 0
        and e * u * u == t * t + 2 * p * s * s
        and e * r == t - 2 * f * s
        and u * u == e * r * r + 4 * r * s * f + 2 * e * s * s
    )


def solve(rep: Representation, u_limit: int = DEFAULT_U_LIMIT) -> DiophSolution:
    return make_integral(first_primitive(rep, u_limit), rep)
