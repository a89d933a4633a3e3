"""Hennings-style reference evaluation at zero labels.

Everything happens in the PBW basis E^l F^m K^n of u_0, using only the
defining relations (``KBasisAlgebra``) and the K-power form of R.  The sum
over R-matrix terms is expanded crossing by crossing as an explicit state
sum, with no tensor bookkeeping shared with ``links``.  Intended for small
diagrams (a handful of crossings) and odd r.
"""

from __future__ import annotations

import itertools

from hopfg.diagram import LinkDiagram
from hopfg.hopf import _add_into
from hopfg.kbasis import KBasisAlgebra, KOracle
from hopfg.scalars import CycScalar


class HenningsOracle:
    def __init__(self, H):
        if H.r % 2 == 0:
            raise ValueError("the oracle covers odd r only")
        self.H = H
        self.F = H.field
        self.r = H.r
        self.A = KBasisAlgebra(H.field, H.r, 0)
        R, u1, u2 = KOracle(H).r_matrix(0, 0)
        assert u1 == 0 and u2 == 0
        self.R = [({k1: self.F.one}, {k2: self.F.one}, c) for (k1, k2), c in R.items()]
        self.Rinv = [(self.antipode(x), y, c) for x, y, c in self.R]
        self.g = self.A.K_pow((1 - self.r) % self.r)     # K^{1-r'}, with K^r' = 1 in u_0
        self.g_inv = self.A.K_pow(self.r - 1)

    def antipode(self, x: dict) -> dict:
        """S(E^l F^m K^n) = K^-n (-K F)^m (-E K^-1)^l."""
        A = self.A
        sE = {k: -v for k, v in A.mul(A.times_E(A.one()), self.A.K_pow(self.r - 1)).items()}
        sF = {k: -v for k, v in A.times_F(A.K_pow(1)).items()}
        out: dict = {}
        for (l, m, n), c in x.items():
            z = {k: v * c for k, v in A.K_pow(-n % self.r).items()}
            for _ in range(m):
                z = A.mul(z, sF)
            for _ in range(l):
                z = A.mul(z, sE)
            for k, v in z.items():
                _add_into(out, k, v)
        return out

    def integral(self, x: dict) -> CycScalar:
        """Only E^{r-1} F^{r-1} K^n with n = -1 mod r contributes."""
        F = self.F
        top = self.r - 1
        pref = F.sqrt_rprime() * F.qfactorial(top) / F.bracket(1) ** top
        out = F.zero
        for (l, m, n), c in x.items():
            if l == top and m == top and (2 * (n + 1)) % self.r == 0:
                out = out + c * pref
        return out

    def evaluate(self, d: LinkDiagram) -> CycScalar:
        if any(not d.label(t).is_zero() for t in d.tags):
            raise ValueError("the oracle only handles zero labels")
        A, F = self.A, self.F
        trace = d.trace()
        signs = {k: v[4] for k, v in d.crossings().items()}
        events = sorted(signs)
        positive = {k: d.events[k][2] == "L" for k in events}
        total = F.zero
        for choice in itertools.product(range(len(self.R)), repeat=len(events)):
            pick = dict(zip(events, choice))
            coef = F.one
            for k in events:
                coef = coef * (self.R if positive[k] else self.Rinv)[pick[k]][2]
            value = coef
            for tag in d.tags:
                y = A.one()
                for p in trace[tag]:
                    bead = None
                    if p.kind == "cross":
                        x, z, _ = (self.R if positive[p.event] else self.Rinv)[pick[p.event]]
                        bead = x if p.over else z
                        if not p.up:
                            bead = self.antipode(bead)
                    elif p.rightward:
                        bead = self.g_inv if p.kind == "cap" else self.g
                    if bead is not None:
                        y = A.mul(y, bead)
                value = value * self.integral(A.mul(y, self.g_inv))
                if value.is_zero():
                    break
            total = total + value
        return total


def hennings_oracle(H, d: LinkDiagram) -> CycScalar:
    return HenningsOracle(H).evaluate(d)
