from fractions import Fraction

import pytest

from hopfg.hopf import AlgElem
from hopfg.labels import Label, label_sample
from hopfg.uqsl2 import build

L = label_sample(4)


def test_piece_dimension(H3):
    assert len(H3.basis()) == 27
    assert H3.piece("1/2", "5/4") == (Label("1/2"), Label("1/4"))


def test_rejects_foreign_labels(H3):
    with pytest.raises(ValueError):
        H3.piece("1/8", 0)
    with pytest.raises(ValueError):
        build(3, 4, shift=1)


@pytest.mark.parametrize("a", L)
def test_unit_and_counit(H3, a):
    one = H3.unit(a)
    for x in list(H3.basis_elems(H3.piece(a, "1/2")))[:6]:
        assert H3.mul(one, x) == x
        assert H3.mul(x, one) == x
    if a.is_zero():
        assert H3.counit(one) == H3.field.one


@pytest.mark.parametrize("a", [L[0], L[1], L[2], L[5]])
def test_ribbon_element(H3, a):
    v, vi = H3.ribbon(a), H3.ribbon_inv(a)
    assert H3.mul(v, vi) == H3.unit(a)
    assert H3.antipode(v) == H3.ribbon(-a)
    g, gi = H3.pivotal(a), H3.pivotal_inv(a)
    assert H3.mul(g, gi) == H3.unit(a)


def test_counit_of_v(H3):
    assert H3.counit(H3.ribbon(0)) == H3.field.one


def test_cointegral_normalisation(H3):
    # lambda(Lambda) = 1 and the unknot values lambda(v^-1) lambda(v) = 1
    F = H3.field
    assert H3.integral(H3.cointegral(0)) == F.one
    p, m = H3.integral(H3.ribbon_inv(0)), H3.integral(H3.ribbon(0))
    assert p * m == F.one
    assert p == -F.zeta_power(F.N // 4)  # -i at r = 3


def test_r_matrix_pieces(H3):
    R = H3.r_matrix("1/2", "3/4")
    assert R.pieces[0][0] == Label("1/2") and R.pieces[1][0] == Label("3/4")
    # upper labels are the halved partner labels
    assert R.pieces[0][1] == Label(Fraction(3, 8))
    assert R.pieces[1][1] == Label(Fraction(1, 4))


def test_r_matrix_forms_agree(H3):
    for a, b in [(L[0], L[0]), (L[2], L[3]), (L[6], L[1])]:
        R = H3.r_matrix(a, b)
        assert H3.r_matrix_K_form(a, b) == R
        assert H3.r_matrix_T_right(a, b) == R


def test_central_v(H3):
    v = H3.ribbon("1/2")
    for x in list(H3.basis_elems(H3.piece("1/2", "1/4")))[::5]:
        assert H3.mul(v, x) == H3.mul(x, v)


def test_canonical_round_trip(H3, H3_shifted):
    for a in (L[0], L[3]):
        x = H3_shifted.ribbon(a)
        assert H3_shifted.canonical(x) == H3.ribbon(a)
        y = AlgElem(*H3_shifted.piece(a, "1/4"), {(1, 0, 2): H3.field.one})
        z = AlgElem(*H3_shifted.piece(a, "1/2"), {(0, 2, 1): H3.field.one})
        assert H3_shifted.canonical(H3_shifted.mul(y, z)) == H3.mul(
            H3_shifted.canonical(y), H3_shifted.canonical(z))
