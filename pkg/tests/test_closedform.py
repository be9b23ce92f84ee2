from fractions import Fraction

import pytest

from planepart import closedform as cf
from planepart.exactq import ONE, ZERO, poly, q_power, qbracket
from planepart.genfun import F_brute, G_brute
from planepart.qsymb import QPolynomialK, quasi_eval, signed_part


def test_W_examples():
    assert cf.W_poly(1, 3) == QPolynomialK.constant(ONE)
    for k in range(-3, 4):
        assert cf.W_at(2, 0, k) == qbracket(k + 1) * qbracket(k - 1)
    assert cf.W_at(3, 2, -1) == ZERO


def test_U_at_n1():
    for c in range(4):
        for k in range(-2, 3):
            assert cf.U_at(1, c, k) == (ONE if k % 2 == 0 else -ONE)
    assert cf.U_special(1, 3, 0) == ONE


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("c", [0, 1, 2, 3, 4, 5])
def test_U_special_values(n, c):
    for which, k in (("0", 0), ("-n", -n), ("1", 1), ("-n-1", -n - 1)):
        assert cf.U_special(n, c, which) == cf.U_at(n, c, k), which


def test_U_special_rejects_other_points():
    with pytest.raises(ValueError):
        cf.U_special(3, 2, 5)


def test_L_M_initial_values():
    assert cf.L_closed(1, 4, 1) == ONE * Fraction(-1, 2)
    assert cf.L_closed(1, 4, 0) == ONE * Fraction(1, 2)
    assert cf.M_closed(1, 7, 0) == ONE * Fraction(1, 2)


@pytest.mark.parametrize("n,c,p", [(2, 2, 0), (2, 2, 1), (3, 3, 0), (3, 2, 3), (4, 1, 2)])
def test_L_M_two_paths(n, c, p):
    assert cf.L_recursive(n, c, p) == cf.L_closed(n, c, p)
    assert cf.M_recursive(n, c, p) == cf.M_closed(n, c, p)


def test_G_closed_examples():
    assert cf.G_closed(1, 2, 0) == poly([1, 0, 1])
    assert cf.G_closed(2, 2, 0) == poly([1, 0, 1, 1, 1, 0, 1])
    assert cf.G_closed(2, 2, 0) == qbracket(5) * qbracket(6) / (qbracket(2) * qbracket(3))


def test_G_closed_conventions():
    assert cf.G_closed(0, -1, 0) == ONE
    assert cf.G_closed(0, 3, 1) == ZERO
    assert cf.G_closed(2, -1, 1) == ZERO


def test_F_closed_examples():
    assert quasi_eval(cf.F_closed(2, 2, 0), 1) == q_power(2)
    for n in (2, 3, 4):
        for c in (0, 3):
            for p in range(n + 1):
                assert quasi_eval(cf.F_closed(n, c, p), -1) == ZERO
    for k in range(-4, 7):
        assert quasi_eval(cf.F_closed(3, 2, 1), k) == F_brute(3, 2, 1, k)
    assert cf.F_closed_gf(2, 2, 0, 1) == q_power(3)


def test_closed_form_bundle():
    b = cf.ClosedFormBundle.build(3, 2, 1)
    assert b.G == G_brute(3, 2, 1)
    assert signed_part(b.F) == QPolynomialK.monomial(2, b.L)


def direct_sum(f, c):
    return sum((f(k).mul_q(k) for k in range(c + 1)), ZERO)


def test_sum_W_examples():
    for c in range(4):
        assert cf.sum_W(1, c) == qbracket(c + 1)
    direct = sum((qbracket(k + 1) * qbracket(k - 4) * q_power(k) for k in range(4)), ZERO)
    assert cf.sum_W(2, 3) == direct


@pytest.mark.parametrize("n,c", [(2, 2), (2, 3), (3, 4), (4, 5)])
def test_sum_U_direct(n, c):
    assert cf.sum_U(n, c) == direct_sum(lambda k: cf.U_at(n, c, k), c)


@pytest.mark.parametrize("n,c,which", [(2, 2, "main"), (3, 3, "p0"), (1, 2, "main"), (3, 4, "pn"), (4, 5, "p0")])
def test_denominator_instances(n, c, which):
    assert cf.denominator_product(n, c, which) == cf.denominator_lhs(n, c, which)


def test_pn_denominator_degenerates_for_small_c():
    for n in (2, 3):
        assert cf.denominator_lhs(n, 0, "pn") == ZERO
        assert cf.denominator_lhs(n, 1, "pn") == ZERO
        assert cf.L_recursive(n, 0, n) == cf.L_closed(n, 0, n)


def test_bk_product_examples():
    assert cf.bk_product(0, 4) == ONE
    assert cf.bk_product(2, 2) == qbracket(4) * qbracket(5) / qbracket(2)
    assert cf.bk_product(2, 2) == poly([1, 1, 2, 2, 2, 1, 1])
    for c in range(4):
        assert cf.bk_product(1, c) == qbracket(c + 1)


def test_bk_refines_to_G():
    for n, c in ((2, 2), (3, 3), (4, 2)):
        assert sum((cf.G_closed(n, c, p) for p in range(n + 1)), ZERO) == cf.bk_product(n, c)


@pytest.mark.parametrize("n,c", [(1, 3), (2, 0), (2, 2), (3, 3), (4, 5)])
def test_sum_over_p(n, c):
    rep = cf.sum_over_p_checks(n, c)
    assert rep.passed, rep.to_json()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("c", [0, 1, 2, 5, 6])
def test_hypo_identities(n, c):
    rep = cf.hypo_identities(n, c)
    assert rep.passed, rep.to_json()


def test_hypo_companion_short_length_fails():
    assert cf.hypo_companion_lhs(1, 0) == cf.hypo_companion_rhs(1, 0, short=True)
    for n, c in ((1, 1), (2, 1), (3, 2), (4, 5)):
        assert cf.hypo_companion_lhs(n, c) != cf.hypo_companion_rhs(n, c, short=True)
        assert cf.hypo_companion_lhs(n, c) == cf.hypo_companion_rhs(n, c)
