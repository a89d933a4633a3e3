"""Small quantum sl2 at an odd root of unity as a Hopf G-bialgebra, G = Q/2Z.

Basis of the piece u_a^b: E^l F^(m) T_{2n+a}^b with 0 <= l, m, n < r'.

Internally an element of u_a^b is ``core * K^u`` where ``core`` lives in
u_a (basis E^l F^(m) T^0_{2n+a}) and u is the chosen representative of the
upper label.  Because K lies in u_a and r is odd, u_a^b = u_a^{b+1} as
subspaces; upper labels are therefore stored modulo 1 and the basis of every
piece uses the representative u = (b mod 1) + shift.  Lower labels use the
representative (a mod 2) + shift.  ``shift`` exists to test independence of
the choice of representatives.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from hopfg.hopf import AlgElem, StructureMaps, Tensor, _add_into
from hopfg.labels import Label
from hopfg.scalars import CycScalar, get_field

Core = dict  # (l, m, n) -> CycScalar


class QuantumSL2(StructureMaps):
    def __init__(self, r: int, D: int = 4, shift: int = 0):
        if r < 3 or r % 2 == 0:
            raise ValueError(f"r must be odd and >= 3, got {r}")
        if shift % 2:
            raise ValueError("representative shift must be even")
        self.r = r
        self.rp = r  # r' = r / gcd(2, r) = r for odd r
        self.D = D
        self.shift = shift
        self.field = get_field(r, D)
        self._inv2 = pow(2, -1, r)
        self._basis = [(l, m, n) for l in range(self.rp) for m in range(self.rp)
                       for n in range(self.rp)]
        self._core_tables: dict = {}
        self._tables: dict = {}
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"QuantumSL2(r={self.r}, D={self.D}, shift={self.shift})"

    # -- labels and pieces ---------------------------------------------------
    def _label(self, x) -> Label:
        lab = Label.coerce(x)
        if not lab.fits(self.D):
            raise ValueError(f"label {lab} has denominator not dividing D={self.D}")
        return lab

    def piece(self, lower, upper):
        low = self._label(lower)
        up = Label.coerce(upper)
        if not up.fits(2 * self.D):
            raise ValueError(f"upper label {up} has denominator not dividing 2D")
        return (low, Label(up.value % 1))

    def basis(self, piece=None):
        return self._basis

    def half(self, label: Label) -> Label:
        return Label(self.rep(label) / 2)

    def rep(self, label: Label) -> Fraction:
        """Representative of a lower label."""
        return Label.coerce(label).value + self.shift

    def rep_up(self, label: Label) -> Fraction:
        """Representative of an upper label (uppers are identified mod 1)."""
        return Label.coerce(label).value % 1 + self.shift

    def q(self, e) -> CycScalar:
        return self.field.q_power(e)

    # -- core algebra u_a (upper label 0, T^0 basis) ---------------------------
    def _n_of(self, mu: Fraction, a: Fraction) -> int | None:
        """n with q^{2n+a} = q^mu, or None when mu - a is not an integer."""
        d = mu - a
        if d.denominator != 1:
            return None
        return (int(d) * self._inv2) % self.r

    def core_T(self, a: Fraction, mu) -> Core:
        """T^0_mu in u_a.

        When mu - a is not an integer the geometric sum does not collapse and
        T^0_mu is a combination of all T^0_{2n+a}.
        """
        mu = Fraction(mu)
        n = self._n_of(mu, a)
        F = self.field
        if n is not None:
            return {(0, 0, n): F.one}
        out = {}
        for k in range(self.rp):
            c = F.zero
            for b in range(self.rp):
                c = c + self.q((2 * k + a - mu) * b)
            c = c / self.rp
            if not c.is_zero():
                out[(0, 0, k)] = c
        return out

    def core_K(self, a: Fraction, j: int) -> Core:
        """K^j (j integer) = sum_n q^{(2n+a) j} T^0_{2n+a}."""
        return {(0, 0, n): self.q((2 * n + a) * j) for n in range(self.rp)}

    def core_E(self, l: int = 1) -> Core:
        F = self.field
        if l >= self.rp:
            return {}
        return {(l, 0, n): F.one for n in range(self.rp)}

    def core_Fdiv(self, m: int = 1) -> Core:
        F = self.field
        if m >= self.rp:
            return {}
        return {(0, m, n): F.one for n in range(self.rp)}

    def core_one(self) -> Core:
        return self.core_E(0)

    def _core_table(self, a: Fraction) -> dict:
        tab = self._core_tables.get(a)
        if tab is None:
            tab = self._core_tables[a] = self._build_core_table(a)
        return tab

    def _build_core_table(self, a: Fraction) -> dict:
        """Products of basis elements of u_a.

        E^l F^(m) T_lam * E^l' F^(m') T_lam'
          = delta(q^{lam - 2l' + 2m'} = q^{lam'}) *
            sum_k [l' k] {m - l' + 2m' - lam'; k} [m-k+m' choose m']
                  E^{l+l'-k} F^(m-k+m') T_lam'
        """
        F = self.field
        rp = self.rp
        tab = {}
        for (l, m, n) in self._basis:
            for (l2, m2, n2) in self._basis:
                if (n - l2 + m2 - n2) % rp:
                    continue
                lam2 = 2 * n2 + a
                terms = []
                for k in range(min(m, l2) + 1):
                    L = l + l2 - k
                    M = m - k + m2
                    if L >= rp or M >= rp:
                        continue
                    c = (F.qbinomial(l2, k) * F.falling_bracket(m - l2 + 2 * m2 - lam2, k)
                         * F.qbinomial(M, m2))
                    if not c.is_zero():
                        terms.append(((L, M, n2), c))
                if terms:
                    tab[((l, m, n), (l2, m2, n2))] = terms
        return tab

    def core_mul(self, a: Fraction, x: Core, y: Core) -> Core:
        tab = self._core_table(a)
        out: dict = {}
        for i, ci in x.items():
            for j, cj in y.items():
                terms = tab.get((i, j))
                if terms is None:
                    continue
                cij = ci * cj
                for k, c in terms:
                    _add_into(out, k, c * cij)
        return out

    def core_chain(self, a: Fraction, *xs: Core) -> Core:
        out = xs[0]
        for x in xs[1:]:
            out = self.core_mul(a, out, x)
        return out

    def core_scale(self, x: Core, c) -> Core:
        return {k: v * c for k, v in x.items() if not (v * c).is_zero()}

    def theta(self, x: Core, u: Fraction) -> Core:
        """K^u x K^{-u}: E^l F^(m) T picks up q^{2u(l-m)}."""
        return {k: v * self.q(2 * u * (k[0] - k[1])) for k, v in x.items()}

    def attach(self, lower: Label, core: Core, e) -> AlgElem:
        """The element core * K^e of the piece (lower, e) in canonical basis."""
        e = Fraction(e)
        low, up = self.piece(lower, Label(e))
        u = self.rep_up(up)
        k = e - u
        assert k.denominator == 1
        a = self.rep(low)
        if k == 0:
            return AlgElem(low, up, core)
        return AlgElem(low, up, {key: v * self.q((2 * key[2] + a) * k)
                                 for key, v in core.items()})

    def detach(self, x: AlgElem) -> tuple[Core, Fraction]:
        """Inverse of attach: x = core * K^u with u the upper representative."""
        return dict(x.coeffs), self.rep_up(x.upper)

    # -- product -------------------------------------------------------------
    def _table(self, a: Fraction, u1: Fraction, u2: Fraction) -> tuple:
        key = (a, u1, u2)
        tab = self._tables.get(key)
        if tab is not None:
            return tab
        core = self._core_table(a)
        low = Label(a)
        up = self.piece(low, Label(u1 + u2))[1]
        u3 = self.rep_up(up)
        k = u1 + u2 - u3
        wrap = [self.q((2 * n + a) * k) for n in range(self.rp)]
        tw = {}
        for (i, j), terms in core.items():
            t = self.q(2 * u1 * (j[0] - j[1]))
            tw[(i, j)] = [(kk, c * t * wrap[kk[2]]) for kk, c in terms]
        tab = self._tables[key] = (up, tw)
        return tab

    def mul(self, x: AlgElem, y: AlgElem) -> AlgElem:
        if x.lower != y.lower:
            raise ValueError(f"product needs equal lower labels, got {x.lower}, {y.lower}")
        a = self.rep(x.lower)
        up, tab = self._table(a, self.rep_up(x.upper), self.rep_up(y.upper))
        out: dict = {}
        for i, ci in x.coeffs.items():
            for j, cj in y.coeffs.items():
                terms = tab.get((i, j))
                if terms is None:
                    continue
                cij = ci * cj
                for k, c in terms:
                    _add_into(out, k, c * cij)
        return AlgElem(x.lower, up, out)

    def unit(self, a) -> AlgElem:
        a = self._label(a)
        return self.attach(a, self.core_one(), 0)

    # -- coproduct -------------------------------------------------------------
    def _coproduct_basis(self, a: Fraction, a1: Fraction, a2: Fraction, idx) -> list:
        """Delta(E^l F^(m) T^0_mu) in u_a1 (x) u_a2 (upper label 0).

        sum_{c, j<=l, i<=m} [l j] q^{j(l-j) + i(m-i) - i lam1 - 2ij + j lam2}
            E^j F^(m-i) T_lam1 (x) E^(l-j) F^(i) T_lam2,
        lam1 = 2c + a1, lam2 = mu - lam1.
        """
        key = ("cop", a, a1, a2, idx)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        F = self.field
        l, m, n = idx
        mu = 2 * n + a
        terms = {}
        for c in range(self.rp):
            lam1 = 2 * c + a1
            lam2 = mu - lam1
            n2 = self._n_of(lam2, a2)
            for j in range(l + 1):
                bj = F.qbinomial(l, j)
                for i in range(m + 1):
                    e = j * (l - j) + i * (m - i) - i * lam1 - 2 * i * j + j * lam2
                    _add_into(terms, ((j, m - i, c), (l - j, i, n2)), bj * self.q(e))
        out = list(terms.items())
        self._cache[key] = out
        return out

    def coproduct(self, x: AlgElem, a1, a2) -> Tensor:
        a1, a2 = self._label(a1), self._label(a2)
        if a1 + a2 != x.lower:
            raise ValueError(f"invalid splitting {a1} + {a2} != {x.lower}")
        a, r1, r2 = self.rep(x.lower), self.rep(a1), self.rep(a2)
        # Delta(y K^u) = Delta(y) (K^u (x) K^u); both factors keep upper u
        p1 = self.piece(a1, x.upper)
        p2 = self.piece(a2, x.upper)
        out: dict = {}
        for idx, cx in x.coeffs.items():
            for (k1, k2), c in self._coproduct_basis(a, r1, r2, idx):
                _add_into(out, (k1, k2), c * cx)
        return Tensor((p1, p2), out)

    def counit(self, x: AlgElem) -> CycScalar:
        if not x.lower.is_zero():
            raise ValueError("counit is defined on lower label 0 only")
        a = self.rep(x.lower)
        out = self.field.zero
        for (l, m, n), c in x.coeffs.items():
            if l == 0 and m == 0 and (2 * n + a) % self.r == 0:
                out = out + c
        return out

    # -- antipode ------------------------------------------------------------
    def _antipode_generic(self, x: AlgElem, inverse: bool) -> AlgElem:
        """S (or S^-1), tabulated per basis element of each piece."""
        key = ("Sb", inverse, x.lower, x.upper)
        table = self._cache.get(key)
        if table is None:
            table = self._cache[key] = {}
        out: dict = {}
        piece = None
        for idx, c in x.coeffs.items():
            hit = table.get(idx)
            if hit is None:
                y = self._antipode_basis(AlgElem(x.lower, x.upper, {idx: self.field.one}), inverse)
                hit = table[idx] = (y.piece, y.coeffs)
            piece = hit[0]
            for k, v in hit[1].items():
                _add_into(out, k, v * c)
        if piece is None:
            return self._antipode_basis(x, inverse)
        return AlgElem(*piece, out)

    def _antipode_basis(self, x: AlgElem, inverse: bool) -> AlgElem:
        """S (or S^-1) as an anti-automorphism applied to E^l F^(m) T^0_mu K^u."""
        F = self.field
        low = -x.lower
        b = self.rep(low)
        u = self.rep_up(x.upper)
        key = ("S", inverse, self.rep(x.lower), b)
        imgs = self._cache.get(key)
        if imgs is None:
            Kp = self.core_K(b, 1)
            Km = self.core_K(b, -1)
            f1 = self.core_scale(self.core_Fdiv(), F.bracket(1).inverse())  # F = F^(1)/{1}
            if not inverse:
                sE = self.core_scale(self.core_mul(b, self.core_E(), Km), -1)   # -E K^-1
                sF = self.core_scale(self.core_mul(b, Kp, f1), -1)  # -K F
            else:
                sE = self.core_scale(self.core_mul(b, Km, self.core_E()), -1)   # -K^-1 E
                sF = self.core_scale(self.core_mul(b, f1, Kp), -1)  # -F K
            imgs = {}
            a = self.rep(x.lower)
            pw_E = [self.core_one()]
            pw_F = [self.core_one()]
            for _ in range(1, self.rp):
                pw_E.append(self.core_mul(b, pw_E[-1], sE))
                pw_F.append(self.core_mul(b, pw_F[-1], sF))
            for (l, m, n) in self._basis:
                # F^(m) = {1}^m / [m]! F^m
                fm = self.core_scale(pw_F[m], F.bracket(1) ** m / F.qfactorial(m))
                t = self.core_T(b, -(2 * n + a))
                imgs[(l, m, n)] = self.core_chain(b, t, fm, pw_E[l])
            self._cache[key] = imgs
        core: dict = {}
        for idx, c in x.coeffs.items():
            for k, v in imgs[idx].items():
                _add_into(core, k, v * c)
        # S(y K^u) = K^-u S(y) = theta_{-u}(S(y)) K^-u
        return self.attach(low, self.theta(core, -u), -u)

    def antipode(self, x: AlgElem) -> AlgElem:
        return self._antipode_generic(x, inverse=False)

    def antipode_inv(self, x: AlgElem) -> AlgElem:
        return self._antipode_generic(x, inverse=True)

    # -- ribbon structure ------------------------------------------------------
    def r_matrix(self, a, b) -> Tensor:
        """R_{a,b} in u_a^{b/2} (x) u_b^{a/2}, from the T-left form

        sum_{s,c} q^{c(c-1)/2 - (s + a/2) b} T^{b/2}_{2s+a} E^c (x) K^{s+a/2} F^(c).
        """
        a, b = self._label(a), self._label(b)
        key = ("R", a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        ra, rb = self.rep(a), self.rep(b)
        out = None
        for s in range(self.rp):
            for c in range(self.rp):
                coef = self.q(Fraction(c * (c - 1), 2) - (s + ra / 2) * rb)
                # T^{b/2}_lam E^c = q^{bc} E^c T^0_{lam-2c} K^{b/2}
                left = self.core_scale(
                    self.core_mul(ra, self.core_E(c), self.core_T(ra, 2 * s + ra - 2 * c)),
                    self.q(rb * c) * coef)
                # K^{s+a/2} F^(c) = q^{-ac} K^s F^(c) K^{a/2}
                right = self.core_scale(
                    self.core_mul(rb, self.core_K(rb, s), self.core_Fdiv(c)),
                    self.q(-ra * c))
                term = Tensor.pure(self.attach(a, left, rb / 2), self.attach(b, right, ra / 2))
                out = term if out is None else out + term
        self._cache[key] = out
        return out

    def r_matrix_K_form(self, a, b) -> Tensor:
        """The K-form: sum {1}^c/[c]! q^{c(c-1)/2 - 2(t+b/2)(s+a/2)} K^{t+b/2}E^c (x) K^{s+a/2}F^c."""
        a, b = self._label(a), self._label(b)
        ra, rb = self.rep(a), self.rep(b)
        F = self.field
        out = None
        for s in range(self.rp):
            for t in range(self.rp):
                for c in range(self.rp):
                    coef = (F.bracket(1) ** c / F.qfactorial(c) / self.rp
                            * self.q(Fraction(c * (c - 1), 2) - 2 * (t + rb / 2) * (s + ra / 2)))
                    # K^{t+b/2} E^c = q^{bc} K^t E^c K^{b/2}; F^c = [c]!/{1}^c F^(c)
                    left = self.core_scale(self.core_mul(ra, self.core_K(ra, t), self.core_E(c)),
                                           self.q(rb * c) * coef)
                    right = self.core_scale(self.core_mul(rb, self.core_K(rb, s), self.core_Fdiv(c)),
                                            self.q(-ra * c) * F.qfactorial(c) / F.bracket(1) ** c)
                    term = Tensor.pure(self.attach(a, left, rb / 2), self.attach(b, right, ra / 2))
                    out = term if out is None else out + term
        return out

    def r_matrix_T_right(self, a, b) -> Tensor:
        """sum_{t,c} q^{c(c-1)/2 - (t+b/2) a} K^{t+b/2} E^c (x) T^{a/2}_{2t+b} F^(c)."""
        a, b = self._label(a), self._label(b)
        ra, rb = self.rep(a), self.rep(b)
        out = None
        for t in range(self.rp):
            for c in range(self.rp):
                coef = self.q(Fraction(c * (c - 1), 2) - (t + rb / 2) * ra)
                left = self.core_scale(self.core_mul(ra, self.core_K(ra, t), self.core_E(c)),
                                       self.q(rb * c) * coef)
                # T^{a/2}_lam F^(c) = q^{-ac} F^(c) T^0_{lam+2c} K^{a/2}
                right = self.core_scale(
                    self.core_mul(rb, self.core_Fdiv(c), self.core_T(rb, 2 * t + rb + 2 * c)),
                    self.q(-ra * c))
                term = Tensor.pure(self.attach(a, left, rb / 2), self.attach(b, right, ra / 2))
                out = term if out is None else out + term
        return out

    def pivotal(self, a) -> AlgElem:
        a = self._label(a)
        return self.attach(a, self.core_K(self.rep(a), 1 - self.rp), 0)

    def pivotal_inv(self, a) -> AlgElem:
        a = self._label(a)
        return self.attach(a, self.core_K(self.rep(a), self.rp - 1), 0)

    def drinfeld_u(self, a) -> AlgElem:
        """u_a^{-a} = sum_i S(R''_i) R'_i with R = R_{a,-a}."""
        a = self._label(a)
        key = ("u", a)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        R = self.r_matrix(a, -a)
        out = None
        for k, c in R.coeffs.items():
            r1 = AlgElem(*R.pieces[0], {k[0]: c})
            r2 = AlgElem(*R.pieces[1], {k[1]: self.field.one})
            term = self.mul(self.antipode(r2), r1)
            out = term if out is None else out + term
        self._cache[key] = out
        return out

    def ribbon(self, a) -> AlgElem:
        a = self._label(a)
        key = ("v", a)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self.mul(self.drinfeld_u(a), self.pivotal_inv(a))
        return hit

    def ribbon_inv(self, a) -> AlgElem:
        a = self._label(a)
        key = ("vinv", a)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self.left_inverse(self.ribbon(a))
        return hit

    def left_inverse(self, x: AlgElem) -> AlgElem:
        """w with x w = 1, by exact Gaussian elimination on left multiplication."""
        from hopfg.linalg import solve

        target_up = -x.upper
        basis = self.basis()
        cols = []
        for k in basis:
            y = self.mul(x, AlgElem(*self.piece(x.lower, target_up), {k: self.field.one}))
            cols.append(y.coeffs)
        one = self.unit(x.lower)
        sol = solve(self.field, basis, cols, one.coeffs)
        if sol is None:
            raise ArithmeticError("element is not invertible")
        return AlgElem(*self.piece(x.lower, target_up), sol)

    def integral(self, x: AlgElem) -> CycScalar:
        """lambda_a(E^l F^(m) T^0_{2n+a}) = delta_{l,r'-1} delta_{m,r'-1} q^{(2n+a)(1-r')}/sqrt(r')."""
        if not x.upper.is_zero():
            raise ValueError(f"integral needs upper label 0, got {x.upper}")
        a = self.rep(x.lower)
        u = self.rep_up(x.upper)  # basis is T^u = q^{lam u} T^0
        top = self.rp - 1
        out = self.field.zero
        for (l, m, n), c in x.coeffs.items():
            if l == top and m == top:
                lam = 2 * n + a
                out = out + c * self.q(lam * (1 - self.rp) + lam * u)
        return out / self.field.sqrt_rprime()

    def cointegral(self, a) -> AlgElem:
        """Lambda^a = sqrt(r') E^{r'-1} F^(r'-1) T_0^a in u_0^a."""
        a = Label.coerce(a)
        zero = Label(0)
        b = self.rep(zero)
        top = self.rp - 1
        core = self.core_scale(
            self.core_chain(b, self.core_E(top), self.core_Fdiv(top), self.core_T(b, 0)),
            self.field.sqrt_rprime())
        return self.attach(zero, core, a.value + self.shift)

    def canonical(self, x: AlgElem) -> AlgElem:
        """Coordinates of x in the shift-0 instance.

        T^0_lambda only depends on lambda mod 2r, so the index n moves by
        shift/2; the upper factor K^{u+shift} = K^shift K^u contributes the
        integer power K^shift = q^{shift * lambda} on T^0_lambda.
        """
        if not self.shift:
            return x
        a0 = Label.coerce(x.lower).value
        out = {}
        for (l, m, n), c in x.coeffs.items():
            n0 = (n + self.shift // 2) % self.rp
            out[(l, m, n0)] = c * self.q((2 * n0 + a0) * self.shift)
        return AlgElem(x.lower, x.upper, out)

    def canonical_tensor(self, t: Tensor) -> Tensor:
        for i in range(len(t.pieces)):
            t = t.apply(i, self.canonical, self.field)
        return t

    # -- convenience -----------------------------------------------------------
    def elem(self, lower, upper, core: Core) -> AlgElem:
        """core * K^upper with upper given as a rational representative."""
        return self.attach(self._label(lower), core, Fraction(upper))

    def E(self, lower, upper=0) -> AlgElem:
        return self.elem(lower, self.rep_up(Label(upper)), self.core_E())

    def F(self, lower, upper=0) -> AlgElem:
        return self.elem(lower, self.rep_up(Label(upper)),
                         self.core_scale(self.core_Fdiv(), self.field.qfactorial(1) / self.field.bracket(1)))

    def K(self, lower, power=1, upper=0) -> AlgElem:
        """K^{power + upper} with integer power."""
        a = self.rep(self._label(lower))
        return self.elem(lower, self.rep_up(Label(upper)), self.core_K(a, power))

    def T(self, lower, mu, upper=0) -> AlgElem:
        """T^{upper}_mu for rational mu and an upper representative."""
        a = self.rep(self._label(lower))
        return self.elem(lower, Fraction(upper), self.core_T(a, mu))


@lru_cache(maxsize=None)
def build(r: int, D: int = 4, shift: int = 0) -> QuantumSL2:
    return QuantumSL2(r, D, shift)
