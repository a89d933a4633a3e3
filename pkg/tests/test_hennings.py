import pytest

from hopfg.diagram import curl, hopf_link, unknot
from hopfg.hennings import HenningsOracle, hennings_oracle
from hopfg.labels import Label
from hopfg.links import evaluate_link


@pytest.fixture(scope="module")
def oracle(H3):
    return HenningsOracle(H3)


@pytest.mark.parametrize("f", [0, 1, -1])
def test_unknots(H3, oracle, f):
    d = unknot(f)
    assert oracle.evaluate(d) == evaluate_link(H3, d)


def test_unknot_values(H3, oracle):
    F = H3.field
    i = F.zeta_power(F.N // 4)
    assert oracle.evaluate(unknot(0)).is_zero()
    assert oracle.evaluate(unknot(1)) == -i
    assert oracle.evaluate(unknot(-1)) == i


@pytest.mark.parametrize("sign", [1, -1])
def test_hopf_links(H3, oracle, sign):
    d = hopf_link(sign)
    assert oracle.evaluate(d) == evaluate_link(H3, d)


def test_framed_hopf_link(H3):
    d = hopf_link(1)
    d = d.copy(events=d.events[:2] + curl(0, 1, "a", left=True) + d.events[2:])
    assert d.linking_matrix() == [[1, 1], [1, 0]]
    assert hennings_oracle(H3, d) == evaluate_link(H3, d)


def test_rejects_labels(oracle):
    with pytest.raises(ValueError):
        oracle.evaluate(unknot(0, Label(1)))
