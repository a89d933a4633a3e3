from hypothesis import given, settings
from hypothesis import strategies as st

from hopfg.hopf import AlgElem, tensor_of
from hopfg.labels import Label
from hopfg.uqsl2 import build

H = build(3, 4)
F = H.field
labels = st.sampled_from([Label(f"{k}/4") for k in range(8)])


@st.composite
def elements(draw, lower=None, upper=None):
    a = draw(labels) if lower is None else lower
    b = draw(labels) if upper is None else upper
    keys = draw(st.lists(st.sampled_from(H.basis()), min_size=1, max_size=3, unique=True))
    coeffs = {k: F(draw(st.integers(-3, 3).filter(bool))) * F.zeta_power(draw(st.integers(0, 95)))
              for k in keys}
    return AlgElem(*H.piece(a, b), coeffs)


settings.register_profile("algebra", max_examples=25, deadline=None)
settings.load_profile("algebra")


@given(elements())
def test_antipode_inverse(x):
    assert H.antipode_inv(H.antipode(x)) == x
    assert H.antipode(H.antipode_inv(x)) == x


@given(st.data())
def test_product_is_associative(data):
    a = data.draw(labels)
    x, y, z = (data.draw(elements(lower=a)) for _ in range(3))
    assert H.mul(H.mul(x, y), z) == H.mul(x, H.mul(y, z))


@given(st.data())
def test_antipode_reverses_products(data):
    a = data.draw(labels)
    x, y = data.draw(elements(lower=a)), data.draw(elements(lower=a))
    assert H.antipode(H.mul(x, y)) == H.mul(H.antipode(y), H.antipode(x))


@given(st.data())
def test_coproduct_is_multiplicative(data):
    a1, a2 = data.draw(labels), data.draw(labels)
    x = data.draw(elements(lower=a1 + a2))
    y = data.draw(elements(lower=a1 + a2))
    lhs = H.coproduct(H.mul(x, y), a1, a2)
    cx, cy = H.coproduct(x, a1, a2), H.coproduct(y, a1, a2)
    rhs = None
    for kx, vx in cx.coeffs.items():
        for ky, vy in cy.coeffs.items():
            p = [H.mul(AlgElem(*cx.pieces[s], {kx[s]: F.one}), AlgElem(*cy.pieces[s], {ky[s]: F.one}))
                 for s in (0, 1)]
            t = tensor_of(p[0], p[1])
            t = type(t)(t.pieces, {k: c * vx * vy for k, c in t.coeffs.items()})
            rhs = t if rhs is None else rhs + t
    assert lhs == rhs


@given(elements(upper=Label(0)))
def test_v_is_central(x):
    v = H.ribbon(x.lower)
    assert H.mul(v, x) == H.mul(x, v)
