"""Brute-force model of u_a in the PBW basis E^l F^m K^n.

This is an independent reference for the projector-basis arithmetic in
``uqsl2``: it only uses the defining relations

    K E = q^2 E K,  K F = q^-2 F K,  E F - F E = (K - K^-1)/(q - q^-1),
    E^r' = F^r' = 0,  K^r' = q^{a r'}  (in u_a),

the Hopf structure on generators, and the conversion
T^0_mu = (1/r') sum_b q^{-mu b} K^b.  Elements carry a separate upper
exponent u standing for a trailing factor K^u.
"""

from __future__ import annotations

from fractions import Fraction

from hopfg.hopf import AlgElem, Tensor, _add_into
from hopfg.scalars import CycField, CycScalar


class KBasisAlgebra:
    """u_a for one lower representative a, basis keys (l, m, n) = E^l F^m K^n."""

    def __init__(self, field: CycField, r: int, a: Fraction):
        self.F = field
        self.r = r
        self.a = Fraction(a)
        self.Kr = field.q_power(self.a * r)  # K^r' in u_a

    def q(self, e) -> CycScalar:
        return self.F.q_power(e)

    def _norm(self, l, m, n, c, out):
        if l >= self.r or m >= self.r:
            return
        k, n = divmod(n, self.r)
        if k:
            c = c * self.Kr ** k
        _add_into(out, (l, m, n), c)

    def times_K(self, x: dict, j: int = 1) -> dict:
        out: dict = {}
        for (l, m, n), c in x.items():
            self._norm(l, m, n + j, c, out)
        return out

    def times_F(self, x: dict) -> dict:
        out: dict = {}
        for (l, m, n), c in x.items():
            self._norm(l, m + 1, n, c * self.q(-2 * n), out)
        return out

    def times_E(self, x: dict) -> dict:
        """E^l F^m K^n E = q^{2n} E^l (F^m E) K^n, with
        F^m E = E F^m - F^{m-1} sum_{j<m} (q^{-2j} K - q^{2j} K^-1)/(q - q^-1)."""
        out: dict = {}
        qq = self.q(1) - self.q(-1)
        for (l, m, n), c in x.items():
            c2 = c * self.q(2 * n)
            self._norm(l + 1, m, n, c2, out)
            for j in range(m):
                self._norm(l, m - 1, n + 1, -c2 * self.q(-2 * j) / qq, out)
                self._norm(l, m - 1, n - 1 + self.r, -c2 * (-self.q(2 * j)) / qq / self.Kr, out)
        return out

    def one(self) -> dict:
        return {(0, 0, 0): self.F.one}

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (l, m, n), c in y.items():
            z = dict(x)
            for _ in range(l):
                z = self.times_E(z)
            for _ in range(m):
                z = self.times_F(z)
            z = self.times_K(z, n)
            for k, v in z.items():
                _add_into(out, k, v * c)
        return out

    def conj(self, x: dict, u: Fraction) -> dict:
        """K^u x K^-u."""
        return {(l, m, n): c * self.q(2 * u * (l - m)) for (l, m, n), c in x.items()}

    def from_T(self, core: dict) -> dict:
        """E^l F^(m) T^0_{2n+a}  ->  K-basis."""
        F = self.F
        out: dict = {}
        for (l, m, n), c in core.items():
            cf = c * F.bracket(1) ** m / F.qfactorial(m) / self.r
            mu = 2 * n + self.a
            for b in range(self.r):
                _add_into(out, (l, m, b), cf * self.q(-mu * b))
        return out

    def K_pow(self, j: int) -> dict:
        return self.times_K(self.one(), j)


def to_kbasis(H, x: AlgElem) -> tuple[dict, Fraction]:
    """Convert an AlgElem of ``H`` to (K-basis dict, upper exponent)."""
    alg = KBasisAlgebra(H.field, H.r, H.rep(x.lower))
    return alg.from_T(x.coeffs), H.rep_up(x.upper)


class KOracle:
    """Hopf structure of u recomputed in the K-power basis."""

    def __init__(self, H):
        self.H = H
        self.F = H.field
        self.r = H.r

    def alg(self, lower) -> KBasisAlgebra:
        return KBasisAlgebra(self.F, self.r, self.H.rep(lower))

    def elem(self, x: AlgElem) -> tuple[dict, Fraction]:
        return to_kbasis(self.H, x)

    def normalize(self, lower, k: dict, u: Fraction) -> tuple[dict, Fraction]:
        """Move a trailing K^u to the canonical upper representative of the instance."""
        target = self.H.rep_up(self.H.piece(lower, u)[1])
        j = u - target
        assert j.denominator == 1
        return self.alg(lower).times_K(k, int(j)) if j else k, target

    def mul(self, x: AlgElem, y: AlgElem) -> tuple[dict, Fraction]:
        A = self.alg(x.lower)
        kx, ux = self.elem(x)
        ky, uy = self.elem(y)
        prod = A.mul(kx, A.conj(ky, ux))
        return self.normalize(x.lower, prod, ux + uy)

    def _gen_images(self, a1, a2):
        A1, A2 = self.alg(a1), self.alg(a2)
        one1, one2 = A1.one(), A2.one()
        E1 = A1.times_E(one1)
        E2 = A2.times_E(one2)
        F1 = A1.times_F(one1)
        F2 = A2.times_F(one2)
        K1, K2 = A1.K_pow(1), A2.K_pow(1)
        Ki1, Ki2 = A1.K_pow(self.r - 1), A2.K_pow(self.r - 1)
        Ki1 = {k: v / A1.Kr for k, v in Ki1.items()}
        Ki2 = {k: v / A2.Kr for k, v in Ki2.items()}
        dE = [(E1, K2), (one1, E2)]
        dF = [(Ki1, F2), (F1, one2)]
        dK = [(K1, K2)]
        return A1, A2, dE, dF, dK

    def coproduct(self, x: AlgElem, a1, a2) -> tuple[dict, Fraction]:
        """Delta(x) as a dict over pairs of K-basis keys (upper u on both sides)."""
        A1, A2, dE, dF, dK = self._gen_images(a1, a2)
        kx, u = self.elem(x)
        out: dict = {}
        for (l, m, n), c in kx.items():
            cur = {((0, 0, 0), (0, 0, 0)): c}
            for gen, count in ((dE, l), (dF, m), (dK, n)):
                for _ in range(count):
                    nxt: dict = {}
                    for (k1, k2), v in cur.items():
                        for g1, g2 in gen:
                            p1 = A1.mul({k1: v}, g1)
                            p2 = A2.mul({k2: self.F.one}, g2)
                            for kk1, v1 in p1.items():
                                for kk2, v2 in p2.items():
                                    _add_into(nxt, (kk1, kk2), v1 * v2)
                    cur = nxt
            for k, v in cur.items():
                _add_into(out, k, v)
        return out, u

    def antipode(self, x: AlgElem) -> tuple[dict, Fraction]:
        """S(E^l F^m K^n K^u) = K^-u K^-n (-K F)^m (-E K^-1)^l."""
        low = -x.lower
        B = self.alg(low)
        kx, u = self.elem(x)
        Ki = {k: v / B.Kr for k, v in B.K_pow(self.r - 1).items()}
        sE = {k: -v for k, v in B.mul(B.times_E(B.one()), Ki).items()}
        sF = {k: -v for k, v in B.times_F(B.K_pow(1)).items()}
        out: dict = {}
        for (l, m, n), c in kx.items():
            z = {k: v * c for k, v in B.K_pow(-n % self.r).items()}
            if n:
                z = {k: v / B.Kr for k, v in z.items()}
            for _ in range(m):
                z = B.mul(z, sF)
            for _ in range(l):
                z = B.mul(z, sE)
            for k, v in B.conj(z, -u).items():
                _add_into(out, k, v)
        return self.normalize(low, out, -u)

    def counit(self, x: AlgElem) -> CycScalar:
        kx, _ = self.elem(x)
        out = self.F.zero
        for (l, m, n), c in kx.items():
            if l == 0 and m == 0:
                out = out + c
        return out

    def r_matrix(self, a, b) -> tuple[dict, Fraction, Fraction]:
        """sum {1}^c/[c]! q^{c(c-1)/2 - 2(t+b/2)(s+a/2)} K^{t+b/2}E^c (x) K^{s+a/2}F^c."""
        H = self.H
        ra, rb = H.rep(a), H.rep(b)
        A, B = self.alg(a), self.alg(b)
        out: dict = {}
        F = self.F
        for s in range(self.r):
            for t in range(self.r):
                for c in range(self.r):
                    coef = (F.bracket(1) ** c / F.qfactorial(c) / self.r
                            * F.q_power(Fraction(c * (c - 1), 2) - 2 * (t + rb / 2) * (s + ra / 2)))
                    left = A.one()
                    for _ in range(c):
                        left = A.times_E(left)
                    left = A.conj(A.mul(A.K_pow(t), left), rb / 2)
                    right = B.one()
                    for _ in range(c):
                        right = B.times_F(right)
                    right = B.conj(B.mul(B.K_pow(s), right), ra / 2)
                    for k1, v1 in left.items():
                        for k2, v2 in right.items():
                            _add_into(out, (k1, k2), coef * v1 * v2)
        return out, rb / 2, ra / 2

    def integral(self, x: AlgElem) -> CycScalar:
        """K-basis formula: chi(n+1 in (r/2)Z) sqrt(r')[r'-1]!/{1}^{r'-1} q^{a(n+1-r')}."""
        F = self.F
        kx, u = self.elem(x)
        kx, u = self.normalize(x.lower, kx, u)
        A = self.alg(x.lower)
        kx = A.times_K(kx, int(u)) if u else kx
        a = self.H.rep(x.lower)
        top = self.r - 1
        pref = F.sqrt_rprime() * F.qfactorial(top) / F.bracket(1) ** top
        out = F.zero
        for (l, m, n), c in kx.items():
            if l == top and m == top and Fraction(2 * (n + 1), self.r).denominator == 1:
                out = out + c * pref * F.q_power(a * (n + 1 - self.r))
        return out

    def tensor_to_kbasis(self, t: Tensor) -> dict:
        """Convert a two-slot Tensor of the instance into K-basis pairs."""
        algs = [self.alg(p[0]) for p in t.pieces]
        out: dict = {}
        for key, c in t.coeffs.items():
            parts = [algs[i].from_T({key[i]: self.F.one}) for i in range(len(key))]
            acc = {(): c}
            for part in parts:
                acc = {kk + (k,): vv * v for kk, vv in acc.items() for k, v in part.items()}
            for k, v in acc.items():
                _add_into(out, k, v)
        return out


def compare_with_oracle(H, lowers, uppers, pairs=None) -> dict:
    """Recompute structure constants in the K-basis and count mismatches.

    Products run over every pair of basis elements of H_a^u1 x H_a^u2 for
    a in ``lowers`` and (u1, u2) in ``pairs`` (default: all pairs from
    ``uppers``).  Coproducts, antipodes, counits, integrals and R-matrices
    are compared on every basis element of the pieces involved (counits on
    lower label 0 and integrals on upper label 0, where they are defined).
    """
    import itertools

    O = KOracle(H)
    F = H.field
    one = F.one
    pairs = list(pairs) if pairs is not None else list(itertools.product(uppers, repeat=2))
    counts = {k: [0, 0] for k in ("mul", "coproduct", "antipode", "counit", "integral", "r_matrix")}

    def tick(kind, ok):
        counts[kind][0] += 1
        counts[kind][1] += 0 if ok else 1

    for a in lowers:
        for u1, u2 in pairs:
            for i in H.basis():
                x = AlgElem(*H.piece(a, u1), {i: one})
                for j in H.basis():
                    y = AlgElem(*H.piece(a, u2), {j: one})
                    tick("mul", O.mul(x, y) == O.elem(H.mul(x, y)))
        for u in uppers:
            for x in H.basis_elems(H.piece(a, u)):
                tick("antipode", O.antipode(x) == O.elem(H.antipode(x)))
                if x.lower.is_zero():
                    tick("counit", O.counit(x) == H.counit(x))
                if x.upper.is_zero():
                    tick("integral", O.integral(x) == H.integral(x))
    for a1, a2 in itertools.product(lowers, repeat=2):
        for x in H.basis_elems(H.piece(a1 + a2, uppers[0])):
            k, _ = O.coproduct(x, a1, a2)
            tick("coproduct", O.tensor_to_kbasis(H.coproduct(x, a1, a2)) == k)
        k, _, _ = O.r_matrix(a1, a2)
        tick("r_matrix", O.tensor_to_kbasis(H.r_matrix(a1, a2)) == k)
    return {k: {"checked": c, "mismatches": m} for k, (c, m) in counts.items()}
