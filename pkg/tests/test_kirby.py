import random

import pytest

from hopfg.diagram import DiagramError, braid_closure, hopf_link, unknot, with_labels
from hopfg.kirby import (blow_up, k1, k1_insert, k1_sites, k2, k2_sites, k3, kirby_rewrite,
                         random_diagram)
from hopfg.labels import Label
from hopfg.links import evaluate_link


def test_k3_negates_label_and_keeps_value(H3):
    d = with_labels(braid_closure(2, [1] * 8), [Label("1/2"), Label("3/2")])
    assert d.is_admissible()
    e = k3(d, "a")
    assert e.label("a") == Label("3/2")
    assert e.linking_matrix() == [[0, -4], [-4, 0]]
    assert evaluate_link(H3, e) == evaluate_link(H3, d)


def test_k1_round_trip(H3):
    d = unknot(1)
    e = k1_insert(d, 1, 0)
    assert len(e.tags) == 3
    new = [t for t in e.tags if t not in d.tags]
    kt = next(t for t in new if t.startswith("k"))
    ct = next(t for t in new if t.startswith("c"))
    assert (kt, ct) in k1_sites(e)
    assert k1(e, (kt, ct)).events == d.events
    assert evaluate_link(H3, e) == evaluate_link(H3, d)


def test_k1_meridian_label_restores_admissibility():
    d = with_labels(braid_closure(2, [1] * 8), [Label("1/2"), Label("3/2")])
    e = k1_insert(d, 2, 1)
    with pytest.raises(DiagramError, match="admissible"):
        k1_insert(with_labels(d, [Label("1/4"), Label(0)]), 2, 1)
    assert e.is_admissible()
    assert any(not e.label(t).is_zero() for t in e.tags if t.startswith("c"))


def test_k1_without_site():
    with pytest.raises(DiagramError, match="no K1 site"):
        k1(unknot(1))
    # a 0-labeled Hopf link is itself a component with its meridian
    assert k1_sites(hopf_link(1))


def test_k2_linking_matrix(H3):
    d = hopf_link(1)
    sites = k2_sites(d)
    assert sites
    e = k2(d, *sites[0])
    i, j = sites[0][:2]
    L = e.linking_matrix()
    assert len(L) == 2
    assert evaluate_link(H3, e) == evaluate_link(H3, d)


def test_blow_up_factor(H3):
    d = hopf_link(1)
    v = evaluate_link(H3, d)
    assert evaluate_link(H3, blow_up(d, 1)) == v * H3.integral(H3.ribbon_inv(0))
    assert evaluate_link(H3, blow_up(d, -1)) == v * H3.integral(H3.ribbon(0))


def test_rewrite_dispatch():
    d = unknot(1)
    assert kirby_rewrite(d, "K3", "a").reversed["a"] is True
    with pytest.raises(DiagramError):
        kirby_rewrite(d, "K9", None)


def test_random_diagrams_are_admissible():
    rng = random.Random(3)
    for _ in range(10):
        d = random_diagram(rng)
        assert d.is_admissible()
        assert len(d.tags) >= 2
