from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from hopfg.labels import Label, label_sample


def test_reduction_mod_two():
    assert Label(Fraction(5, 2)) == Label(Fraction(1, 2))
    assert Label(-1) == Label(1)
    assert Label("7/4").fits(4)
    assert not Label("1/8").fits(4)
    assert str(Label("-1/4")) == "7/4"


def test_sample():
    s = label_sample(4)
    assert len(s) == 8
    assert s[0].is_zero() and s[-1] == Label("7/4")


fr = st.fractions(max_denominator=12)


@given(fr, fr, st.integers(-6, 6))
def test_group_laws(a, b, k):
    x, y = Label(a), Label(b)
    assert x + y == y + x
    assert (x - y) + y == x
    assert -(-x) == x
    assert (x + y) * k == x * k + y * k
    assert Label(a + 2 * k) == x
