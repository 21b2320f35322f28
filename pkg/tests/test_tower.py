from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbert2p.arith import primes_1_mod_8
from hilbert2p.classgroup import class_data
from hilbert2p.dioph import DiophSolution, make_integral, solve
from hilbert2p.errors import InvariantViolation
from hilbert2p.pipeline import classify, construct
from hilbert2p.represent import CaseLabel, Representation, classify_by_e, representation
from hilbert2p.tower import (
    UNIT_CANDIDATES,
    TowerData,
    build_tower,
    describe_fields,
    find_unit,
    is_square_mod4,
    is_square_mod4_monogenic,
    o_mul,
    octic_generator,
    with_unit,
)
from hilbert2p.zsqrt2 import FUND_UNIT, ONE, Z2Elem, unit_power

H8_PRIMES = [p for p in primes_1_mod_8(17, 5000) if classify_by_e(representation(p)) is CaseLabel.H8PLUS]
RES16 = [Z2Elem(a, b) for a, b in product(range(4), repeat=2)]


def _z2_divisible(z, n):
    return z.a % n == 0 and z.b % n == 0


def brute_square_mod4(delta, alpha):
    """Square test by integrality alone, never naming a basis of the maximal order.

    xi = (x + y sqrt(alpha)) / 2 with x, y mod 8 covers the 2-maximal order
    mod 4; z = (X + Y sqrt(alpha)) / 16 is integral iff its relative trace
    and norm over Z[sqrt2] are.
    """
    dx, dy = delta
    res64 = [Z2Elem(a, b) for a, b in product(range(8), repeat=2)]
    for x, y in product(res64, repeat=2):
        if not _z2_divisible(x * x - alpha * y * y, 4):
            continue
        # z = (delta - xi^2) / 4 = (X + Y sqrt(alpha)) / 16
        X = 4 * dx - x * x - alpha * y * y
        Y = 4 * dy - 2 * x * y
        if _z2_divisible(2 * X, 16) and _z2_divisible(X * X - alpha * Y * Y, 256):
            return True
    return False


def test_build_tower_113():
    tower = build_tower(representation(113), DiophSolution(5, 7, -1, 1))
    assert tower.A == Z2Elem(0, 5) and tower.B == Z2Elem(1, -1) and tower.C == Z2Elem(1, 1)
    lhs, rhs = tower.eq1_sides()
    assert lhs == rhs == Z2Elem(25, 16)
    assert tower.minpoly_sqrt_alpha == [1, 0, -22, 0, 113]


def test_build_tower_2593_and_257():
    tower = build_tower(representation(2593), DiophSolution(57, 345, -3, 7, 3))
    assert tower.B == Z2Elem(7, -3) and tower.a_coeff == 57
    tower = build_tower(representation(257), DiophSolution(11, 61, -1, 3))
    lhs, rhs = tower.eq1_sides()
    assert lhs == rhs


def test_build_tower_rejects_bad_solution():
    with pytest.raises(InvariantViolation):
        build_tower(representation(113), DiophSolution(5, 7, -1, 2))


def test_find_unit_2593():
    rep = representation(2593)
    tower = build_tower(rep, make_integral((19, 115, 1), rep))
    assert find_unit(tower) == FUND_UNIT
    assert octic_generator(with_unit(tower)) == "[57√2 + (7 − 3√2)√(51 + 2√2)](1 + √2)"
    assert octic_generator(with_unit(tower), ascii=True) == "[57sqrt2 + (7 - 3sqrt2)sqrt(51 + 2sqrt2)](1 + sqrt2)"


def test_find_unit_first_in_order_and_absent():
    rep = representation(113)
    tower = build_tower(rep, solve(rep))
    eps = find_unit(tower)
    assert eps is not None
    mu_eps = o_mul(tower.mu, (eps, Z2Elem(0)), tower.alpha)
    assert is_square_mod4(mu_eps, tower.alpha)
    # Every candidate before eps was rejected.
    for a, b in UNIT_CANDIDATES[: UNIT_CANDIDATES.index((eps.a, eps.b))]:
        assert not is_square_mod4(o_mul(tower.mu, (Z2Elem(a, b), Z2Elem(0)), tower.alpha), tower.alpha)
    # Fabricated mu = sqrt(alpha): no unit multiple is a square mod 4.
    fake = TowerData(113, tower.alpha, 0, Z2Elem(1), Z2Elem(1))
    assert find_unit(fake) is None
    for a, b in UNIT_CANDIDATES:
        assert not brute_square_mod4(o_mul(fake.mu, (Z2Elem(a, b), Z2Elem(0)), tower.alpha), tower.alpha)


def test_find_unit_returns_one_when_mu_is_square():
    alpha = representation(113).alpha
    # mu = 0 is trivially 0^2; mu = 9 = 3^2
    assert find_unit(TowerData(113, alpha, 0, Z2Elem(0), Z2Elem(0))) == ONE
    assert is_square_mod4((Z2Elem(9), Z2Elem(0)), alpha)


def test_is_square_mod4_examples():
    alpha = Z2Elem(11, 2)
    assert is_square_mod4((Z2Elem(3, 2), Z2Elem(0)), alpha)
    assert is_square_mod4((ONE, Z2Elem(0)), alpha)
    # 2 sqrt(alpha) is not a square mod 4
    assert is_square_mod4((Z2Elem(0), Z2Elem(2)), alpha) is False
    assert brute_square_mod4((Z2Elem(0), Z2Elem(2)), alpha) is False


@pytest.mark.parametrize("alpha", [Z2Elem(11, 2), Z2Elem(51, 2), Z2Elem(35, 22), Z2Elem(-5, 2), Z2Elem(19, 6)])
def test_is_square_mod4_matches_integrality_oracle(alpha):
    for x in RES16[::3]:
        for y in RES16[::2]:
            delta = (x, y)
            assert is_square_mod4(delta, alpha) == brute_square_mod4(delta, alpha), delta


@settings(max_examples=200)
@given(
    st.sampled_from([Z2Elem(11, 2), Z2Elem(51, 2), Z2Elem(43, 18)]),
    st.tuples(*[st.integers(-20, 20)] * 4),
    st.integers(-6, 6),
    st.sampled_from([1, -1]),
)
def test_is_square_mod4_unit_square_invariance(alpha, coeffs, j, sign):
    delta = (Z2Elem(coeffs[0], coeffs[1]), Z2Elem(coeffs[2], coeffs[3]))
    u2 = (sign * unit_power(j)) ** 2
    scaled = o_mul(delta, (u2, Z2Elem(0)), alpha)
    assert is_square_mod4(scaled, alpha) == is_square_mod4(delta, alpha)
    assert is_square_mod4_monogenic(scaled, alpha) == is_square_mod4_monogenic(delta, alpha)


@settings(max_examples=300)
@given(st.sampled_from([Z2Elem(11, 2), Z2Elem(51, 2), Z2Elem(99, 62)]), st.tuples(*[st.integers(-30, 30)] * 4))
def test_monogenic_squares_are_squares(alpha, c):
    delta = (Z2Elem(c[0], c[1]), Z2Elem(c[2], c[3]))
    if is_square_mod4_monogenic(delta, alpha):
        assert is_square_mod4(delta, alpha)
    xi = delta
    assert is_square_mod4(o_mul(xi, xi, alpha), alpha)


@pytest.mark.parametrize("p", H8_PRIMES)
def test_towers_over_survey_range(p):
    rep = representation(p)
    tower = with_unit(build_tower(rep, solve(rep)))
    lhs, rhs = tower.eq1_sides()
    assert lhs == rhs
    assert lhs.norm() == p * tower.C.norm() ** 2
    assert tower.alpha == rep.alpha and tower.alpha.conj().norm() == p
    # 8 | h+ should guarantee a unit; report any counterexample loudly
    assert class_data(p).h2_plus % 8 == 0
    assert tower.eps is not None, f"COUNTEREXAMPLE: no unit found for p = {p}"
    assert tower.eps.is_unit()


def test_describe_fields():
    rep113 = construct(113).report()
    assert rep113["K_minpoly"] == [1, 0, -22, 0, 113]
    assert rep113["K_totally_real"] is True
    c17 = construct(17)
    r17 = c17.report()
    assert r17["K_totally_real"] is False and r17["case"] == "H2_NPLUS"
    assert c17.cls.h2 == 2 and r17["octic_generator"] is None and r17["u"] is None
    r2593 = construct(2593).report()
    assert "".join(r2593["octic_generator"].split()) == "[57√2+(7−3√2)√(51+2√2)](1+√2)"
    assert r2593["eps"] == "(1+sqrt2)^1" and r2593["mod4_square"] is True
    keys = {"p", "e", "f", "case", "h", "h_plus", "norm_eps", "u", "t", "s", "r", "scale", "eps",
            "K_minpoly", "octic_generator", "mod4_square"}
    assert keys <= set(r2593)


def test_describe_fields_direct():
    c = classify(41)
    report = describe_fields(c.rep, c.case, c.cls)
    assert report["case"] == "H4_NMINUS" and report["k_minpoly"] == [1, 0, -82]
