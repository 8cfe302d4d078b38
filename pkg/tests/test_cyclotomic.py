from fractions import Fraction

import pytest

from unisingular.cyclotomic import Cyclotomic, cyclotomic_poly


def test_cyclotomic_poly_values():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_relation():
    z3 = Cyclotomic.zeta(3)
    assert z3 + z3 * z3 == -1
    assert z3 * z3 * z3 == 1


def test_sqrt_minus_three_expansion():
    z3 = Cyclotomic.zeta(3)
    sqrtm3 = 1 + 2 * z3
    val = (Cyclotomic.integer(-1) - 3 * sqrtm3) / 2
    assert val == -2 - 3 * z3
    assert (sqrtm3 * sqrtm3) == -3


def test_conjugation():
    z3 = Cyclotomic.zeta(3)
    assert z3.conj() == Cyclotomic.zeta(3, 2)
    z9 = Cyclotomic.zeta(9)
    assert z9.conj() == Cyclotomic.zeta(9, 8)
    assert (z9 * z9.conj()) == 1


def test_mixed_conductor_arithmetic():
    z3 = Cyclotomic.zeta(3)
    z9 = Cyclotomic.zeta(9)
    assert z9 * z9 * z9 == z3
    total = z9 + z3
    assert total.lift(9).n == 9
    # sum over all ninth roots is zero
    s = Cyclotomic.integer(0)
    for k in range(9):
        s = s + Cyclotomic.zeta(9, k)
    assert s == 0


def test_galois_action():
    z9 = Cyclotomic.zeta(9)
    assert z9.galois(2) == Cyclotomic.zeta(9, 2)
    # zeta_3 = zeta_9^3 maps to zeta_9^6 = zeta_3^2 under sigma_2
    z3_in_9 = Cyclotomic.zeta(3).lift(9)
    assert z3_in_9.galois(2) == Cyclotomic.zeta(3, 2)
    with pytest.raises(ValueError):
        z9.galois(3)


def test_rationality_predicates():
    assert Cyclotomic.integer(5).is_rational_integer()
    assert (Cyclotomic.integer(5) / 2).is_rational()
    assert not (Cyclotomic.integer(5) / 2).is_rational_integer()
    assert not Cyclotomic.zeta(3).is_rational()
    assert (Cyclotomic.integer(7) / 2).to_fraction() == Fraction(7, 2)


def test_norm_abs2():
    z3 = Cyclotomic.zeta(3)
    v = -2 - 3 * z3
    assert v.norm_abs2() == 7
    assert Cyclotomic.integer(-3).norm_abs2() == 9


def test_division_only_by_scalars():
    z3 = Cyclotomic.zeta(3)
    with pytest.raises(TypeError):
        z3 / z3
