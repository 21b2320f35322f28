"""Quartic and octic layers over Q(sqrt(2p)).

Elements of the order O = Z[sqrt2][sqrt(alpha)] are pairs (x, y) of
Z2Elem standing for x + y*sqrt(alpha).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import product

from .classgroup import Classification
from .dioph import DiophSolution
from .errors import InvariantViolation
from .represent import CaseLabel, Representation
from .zsqrt2 import FUND_UNIT, ONE, SQUARE_UNIT, Z2Elem, congruent_mod4

OElem = tuple[Z2Elem, Z2Elem]

# Representatives of the unit group of Z[sqrt2] modulo squares, in search order.
UNIT_CANDIDATES: tuple[tuple[int, int], ...] = ((1, 0), (-1, 0), (1, 1), (-1, 1))


def unit_from_label(sign: int, j: int) -> Z2Elem:
    return sign * FUND_UNIT**j


def unit_label(sign: int, j: int, ascii: bool = True) -> str:
    base = "(1+sqrt2)" if ascii else "(1+√2)"
    return f"{'-' if sign < 0 else ''}{base}^{j}"


def o_mul(x: OElem, y: OElem, alpha: Z2Elem) -> OElem:
    return x[0] * y[0] + x[1] * y[1] * alpha, x[0] * y[1] + x[1] * y[0]


def _residue(z: Z2Elem) -> tuple[int, int]:
    return z.a % 4, z.b % 4


@lru_cache(maxsize=None)
def _squares_mod4_monogenic(alpha_mod4: tuple[int, int]) -> frozenset:
    alpha = Z2Elem(*alpha_mod4)
    residues = [Z2Elem(a, b) for a, b in product(range(4), repeat=2)]
    out = set()
    for x, y in product(residues, repeat=2):
        sx, sy = o_mul((x, y), (x, y), alpha)
        out.add((_residue(sx), _residue(sy)))
    return frozenset(out)


def is_square_mod4_monogenic(delta: OElem, alpha: Z2Elem) -> bool:
    """Square test modulo 4 inside Z[sqrt2][sqrt(alpha)] itself.

    That order has index 4 in the 2-maximal order when alpha = (1+sqrt2)^2
    mod 4, so a negative answer here says nothing about ramification.
    """
    x, y = delta
    return (_residue(x), _residue(y)) in _squares_mod4_monogenic(_residue(alpha))


def _omega_constant(alpha: Z2Elem) -> Z2Elem:
    # omega = (1 + sqrt2 + sqrt(alpha)) / 2 satisfies omega^2 = (1+sqrt2) omega - k
    # with k = ((1+sqrt2)^2 - alpha) / 4.
    d = SQUARE_UNIT - alpha
    if d.a % 4 or d.b % 4:
        raise InvariantViolation(f"alpha = {alpha} is not = 3 + 2sqrt2 mod 4")
    return Z2Elem(d.a // 4, d.b // 4)


@lru_cache(maxsize=None)
def _squares_mod4_maximal(k_mod4: tuple[int, int]) -> frozenset:
    k = Z2Elem(*k_mod4)
    residues = [Z2Elem(a, b) for a, b in product(range(4), repeat=2)]
    out = set()
    for c, d in product(residues, repeat=2):
        # (c + d omega)^2 = c^2 - d^2 k + (2cd + d^2 (1+sqrt2)) omega
        dd = d * d
        out.add((_residue(c * c - dd * k), _residue(2 * c * d + dd * FUND_UNIT)))
    return frozenset(out)


def is_square_mod4(delta: OElem, alpha: Z2Elem) -> bool:
    """Whether x + y sqrt(alpha) = xi^2 mod 4 for some xi in the 2-maximal order.

    The order used is Z[sqrt2][omega], omega = (1 + sqrt2 + sqrt(alpha)) / 2,
    whose relative discriminant alpha is prime to 2; its 256 residues mod 4
    are enumerated once per class of alpha mod 16.
    """
    x, y = delta
    k = _omega_constant(alpha)
    # sqrt(alpha) = 2 omega - (1 + sqrt2)
    c, d = x - y * FUND_UNIT, 2 * y
    return (_residue(c), _residue(d)) in _squares_mod4_maximal(_residue(k))


@dataclass(frozen=True)
class TowerData:
    p: int
    alpha: Z2Elem
    a_coeff: int
    B: Z2Elem
    C: Z2Elem
    eps: Z2Elem | None = None
    eps_label: tuple[int, int] | None = None

    @property
    def A(self) -> Z2Elem:
        return Z2Elem(0, self.a_coeff)

    @property
    def mu(self) -> OElem:
        return self.A, self.B

    @property
    def minpoly_sqrt_alpha(self) -> list[int]:
        return [1, 0, -2 * self.alpha.a, 0, self.p]

    def eq1_sides(self) -> tuple[Z2Elem, Z2Elem]:
        lhs = self.A * self.A - self.alpha * self.B * self.B
        rhs = self.alpha.conj() * self.C * self.C
        return lhs, rhs

    def relative_norm_of_mu(self) -> Z2Elem:
        """N_{F(sqrt alpha)/F}(mu) = A^2 - alpha B^2."""
        return self.eq1_sides()[0]


def build_tower(rep: Representation, sol: DiophSolution) -> TowerData:
    alpha = rep.alpha
    if alpha.norm() != rep.p or not congruent_mod4(alpha, SQUARE_UNIT):
        raise InvariantViolation(f"alpha = {alpha} is not a normalized element of norm {rep.p}")
    B = Z2Elem(sol.r, sol.s)
    tower = TowerData(p=rep.p, alpha=alpha, a_coeff=sol.u, B=B, C=B.conj())
    lhs, rhs = tower.eq1_sides()
    if lhs != rhs:
        raise InvariantViolation(f"A^2 - alpha B^2 = {lhs} but alpha' C^2 = {rhs}")
    if lhs.norm() != rep.p * tower.C.norm() ** 2:
        raise InvariantViolation("norm chain N(A^2 - alpha B^2) = p N(C)^2 fails")
    return tower


def find_unit(tower: TowerData) -> Z2Elem | None:
    """First unit class eps with mu*eps a square mod 4, or None."""
    label = find_unit_label(tower)
    return None if label is None else unit_from_label(*label)


def find_unit_label(tower: TowerData) -> tuple[int, int] | None:
    for sign, j in UNIT_CANDIDATES:
        eps = unit_from_label(sign, j)
        delta = o_mul(tower.mu, (eps, Z2Elem(0)), tower.alpha)
        if is_square_mod4(delta, tower.alpha):
            return sign, j
    return None


def with_unit(tower: TowerData) -> TowerData:
    label = find_unit_label(tower)
    if label is None:
        return replace(tower, eps=None, eps_label=None)
    return replace(tower, eps=unit_from_label(*label), eps_label=label)


def octic_generator(tower: TowerData, ascii: bool = False) -> str:
    """Symbolic (A + B sqrt(alpha)) * eps, e.g. [57√2 + (7 − 3√2)√(51 + 2√2)](1 + √2)."""
    root = "sqrt" if ascii else "√"
    a = tower.A.render(ascii)
    b = tower.B.render(ascii)
    mu = f"[{a} + ({b}){root}({tower.alpha.render(ascii)})]"
    if tower.eps is None or tower.eps == ONE:
        return mu
    return f"{mu}({tower.eps.render(ascii)})"


def describe_fields(
    rep: Representation,
    case: CaseLabel,
    cls: Classification,
    sol: DiophSolution | None = None,
    tower: TowerData | None = None,
) -> dict:
    """FieldReport: a JSON-ready description of k, its genus field, K and the octic step."""
    p, e = rep.p, rep.e
    report = {
        "p": p,
        "e": e,
        "f": rep.f,
        "case": case.value,
        "h": cls.h,
        "h_plus": cls.h_plus,
        "norm_eps": cls.norm_eps,
        "u": None,
        "t": None,
        "s": None,
        "r": None,
        "scale": None,
        "eps": None,
        "K_minpoly": [1, 0, -2 * e, 0, p],
        "octic_generator": None,
        "mod4_square": None,
        "k_minpoly": [1, 0, -2 * p],
        "genus_field": f"Q(sqrt2, sqrt{p})",
        "K": f"k(sqrt({rep.alpha.render(ascii=True)}))",
        "K_totally_real": e > 0,
    }
    if sol is not None:
        report.update(u=sol.u, t=sol.t, s=sol.s, r=sol.r, scale=sol.scale)
    if tower is not None:
        report["octic_generator"] = octic_generator(tower)
        report["mod4_square"] = tower.eps is not None
        if tower.eps_label is not None:
            report["eps"] = unit_label(*tower.eps_label)
    return report
