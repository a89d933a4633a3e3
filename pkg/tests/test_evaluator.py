import random

import pytest

from hopfg.evaluator import GradedMap, WordEvaluator, act, intertwiner_check
from hopfg.expr import Compose, Id, parse_expr
from hopfg.hopf import AlgElem, Tensor
from hopfg.labels import Label
from wordgen import check_compose, check_tensor, random_object, random_word


@pytest.fixture(scope="module")
def W(H3):
    return WordEvaluator(H3)


def test_identity_word(W, H3):
    m = W.evaluate(parse_expr("(id ((1/2 1/4)))"))
    assert m == GradedMap.identity(H3, ((Label("1/2"), Label("1/4")),))
    assert m.shape == (27, 27)


def test_empty_word_is_one(W, H3):
    m = W.evaluate(parse_expr("(compose (gen lambda 0) (gen v 0))"))
    assert m.scalar() == H3.integral(H3.ribbon(0))


def test_antipode_round_trip(W, H3):
    e = parse_expr("(compose (gen Sinv 3/2 7/4) (gen S 1/2 1/4))")
    assert W.evaluate(e) == GradedMap.identity(H3, ((Label("1/2"), Label("1/4")),))


def test_unit_then_counit(W, H3):
    m = W.evaluate(parse_expr("(compose (gen eps 0) (gen eta 0))"))
    assert m.scalar() == H3.field.one


def test_multiplication_by_unit(W, H3):
    e = parse_expr("(compose (gen mu 1/2 0 1/4) (tensor (gen eta 1/2) (id ((1/2 1/4)))))")
    assert W.evaluate(e) == GradedMap.identity(H3, ((Label("1/2"), Label("1/4")),))


def test_adjoint_action_on_E(H3):
    # K |> E = q^2 E, with K = T-basis combination in H_0^0
    F = H3.field
    K = H3.attach(Label(0), H3.core_K(H3.rep(Label(0)), 1), 0)
    E = H3.attach(Label(0), H3.core_E(1), 0)
    t = act(H3, K, Tensor.pure(E))
    assert t == Tensor.pure(AlgElem(*E.piece, {k: v * F.q_power(2) for k, v in E.coeffs.items()}))


def test_functor_laws_sample(W):
    rng = random.Random(7)
    for _ in range(8):
        g, mid = random_word(rng, random_object(rng, 1), rng.randint(1, 2))
        f, _ = random_word(rng, mid, rng.randint(1, 2))
        assert check_compose(W, f, g, rng)
        assert W.evaluate(Compose(f, Id(mid))) == W.evaluate(f)


def test_tensor_law_sample(W):
    rng = random.Random(8)
    for _ in range(4):
        f, _ = random_word(rng, random_object(rng, 1), 1, max_slots=1)
        g, _ = random_word(rng, random_object(rng, 1), 1, max_slots=1)
        assert check_tensor(W, f, g, rng)


@pytest.mark.parametrize("text", [
    "(gen S 1/2 1/4)",
    "(gen mu 0 1/4 1/2)",
    "(braid ((0 0)) ((1/2 1/4)))",
])
def test_generators_are_equivariant(W, H3, text):
    m = W.evaluate(parse_expr(text))
    zero = Label(0)
    E = H3.attach(zero, H3.core_E(1), 0)
    K = H3.attach(zero, H3.core_K(H3.rep(zero), 1), 0)
    assert intertwiner_check(H3, m, [E, K]) == []


def test_intertwiner_check_detects_failure(H3):
    # the identity with one column scaled is not equivariant
    src = ((Label(0), Label(0)),)
    ident = GradedMap.identity(H3, src)
    cols = dict(ident.cols)
    k = next(iter(cols))
    cols[k] = {k: H3.field(2)}
    bad = GradedMap(H3, src, src, cols)
    E = H3.attach(Label(0), H3.core_E(1), 0)
    assert intertwiner_check(H3, bad, [E])
