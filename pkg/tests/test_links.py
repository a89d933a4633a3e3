import pytest

from hopfg.diagram import LinkDiagram, braid_closure, curl, empty, hopf_link, unknot
from hopfg.evaluator import WordEvaluator
from hopfg.expr import parse_expr
from hopfg.kirby import k3
from hopfg.labels import Label
from hopfg.links import NotAdmissible, evaluate_link


def test_empty_link_is_one(H3):
    assert evaluate_link(H3, empty()) == H3.field.one


def test_zero_framed_unknot_vanishes(H3):
    # lambda(g^-1) = 0
    assert evaluate_link(H3, unknot(0)).is_zero()
    assert H3.integral(H3.pivotal_inv(0)).is_zero()


@pytest.mark.parametrize("f", [1, -1, 2, -2])
def test_framed_unknot_matches_words(H3, f):
    W = WordEvaluator(H3)
    gen = "vinv" if f > 0 else "v"
    word = f"(gen {gen} 0)"
    for _ in range(abs(f) - 1):
        word = f"(compose (gen mu 0 0 0) (tensor {word} (gen {gen} 0)))"
    expected = W.evaluate(parse_expr(f"(compose (gen lambda 0) {word})")).scalar()
    assert evaluate_link(H3, unknot(f)) == expected
    assert evaluate_link(H3, unknot(f, left_curls=True)) == expected


def test_labeled_unknots(H3):
    for lab, f in [("1/2", 0), ("1", 2), ("3/2", 0), ("1/2", 4)]:
        d = unknot(f, Label(lab))
        assert evaluate_link(H3, d) == evaluate_link(H3, k3(d, "a"))


def test_snake_isotopy(H3):
    # a zigzag on the strand of a 1-framed unknot changes nothing
    plain = unknot(1)
    snake = LinkDiagram([("cup", 0, "a"), ("cup", 2, "a"), ("cap", 1)]
                        + curl(1, 1, "a") + [("cap", 0)], {"a": 0})
    assert snake.linking_matrix() == [[1]]
    assert evaluate_link(H3, snake) == evaluate_link(H3, plain)


def test_hopf_links(H3):
    F = H3.field
    assert evaluate_link(H3, hopf_link(1)) == F.one
    assert evaluate_link(H3, hopf_link(-1)) == F.one


def test_rejects_inadmissible(H3):
    with pytest.raises(NotAdmissible, match="'b'"):
        evaluate_link(H3, hopf_link(1, [Label("1/2"), Label(0)]))


def test_base_point_independence(H3):
    # the same two-component link from two braid words related by conjugation
    a = braid_closure(3, [1, 2, -1, 2])
    b = braid_closure(3, [2, -1, 2, 1])
    assert a.linking_matrix() == b.linking_matrix()
    assert evaluate_link(H3, a) == evaluate_link(H3, b)
