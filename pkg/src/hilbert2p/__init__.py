"""Unramified cyclic quartic and octic extensions of Q(sqrt(2p)) for primes p = 1 mod 8."""

from .arith import is_perfect_square, is_prime, jacobi, quartic_symbol_2_mod_p, quartic_symbol_p_mod_2, sqrt_mod
from .classgroup import Classification, QForm, class_data, fundamental_unit, narrow_class_number, reduce_form
from .dioph import DiophSolution, check_solution, enumerate_primitive, make_integral, solve
from .represent import CaseLabel, Representation, classify_by_e, normalize, representation, solve_norm_equation
from .tower import TowerData, build_tower, describe_fields, find_unit, is_square_mod4
from .zsqrt2 import Z2Elem, congruent_mod4, gcd, unit_power

__version__ = "0.1.0"
