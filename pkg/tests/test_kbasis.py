from hopfg.kbasis import KBasisAlgebra, compare_with_oracle
from hopfg.labels import Label, label_sample


def test_kbasis_relations(H3):
    A = KBasisAlgebra(H3.field, 3, 0)
    F = H3.field
    E = A.times_E(A.one())
    Fg = A.times_F(A.one())
    K = A.K_pow(1)
    # K E = q^2 E K
    assert A.mul(K, E) == {k: v * F.q_power(2) for k, v in A.mul(E, K).items()}
    # E^3 = 0
    assert A.mul(A.mul(E, E), E) == {}
    # E F - F E = (K - K^-1)/(q - q^-1)
    lhs = dict(A.mul(E, Fg))
    for k, v in A.mul(Fg, E).items():
        lhs[k] = lhs.get(k, F.zero) - v
    lhs = {k: v for k, v in lhs.items() if not v.is_zero()}
    kinv = A.K_pow(2)
    rhs = dict(K)
    for k, v in kinv.items():
        rhs[k] = rhs.get(k, F.zero) - v
    rhs = {k: v / F.bracket(1) for k, v in rhs.items() if not v.is_zero()}
    assert lhs == rhs


def test_oracle_small(H3):
    L = label_sample(4)
    out = compare_with_oracle(H3, [Label(0), Label("3/4")], [Label(0), Label("1/4")],
                              pairs=[(L[0], L[0]), (L[1], L[6])])
    assert all(v["checked"] > 0 for v in out.values())
    assert all(v["mismatches"] == 0 for v in out.values())
