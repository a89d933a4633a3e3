"""Exact axiom suites for a Hopf G-bialgebra instance.

Every check evaluates both sides of an identity on basis elements and
compares them exactly.  Label tuples come from ``label_tuples``: all of
them when there are few, otherwise a seeded sample that still puts every
label in every slot.  A failure records the axiom, the labels, the basis
witness and both sides.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from hopfg.hopf import AlgElem, StructureMaps, Tensor, _add_into, tensor_of
from hopfg.labels import Label
from hopfg.serial import value_json

HOPF_AXIOMS = ["H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9"]
DERIVED_HOPF = ["H10", "H11", "H12", "H13"]
RIBBON_AXIOMS = ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10",
                 "R11", "R12", "R13", "R14", "R15", "R16"]
INTEGRAL_AXIOMS = ["I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8"]


@dataclass
class Report:
    checked: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_axioms(self) -> set[str]:
        return {f["axiom"] for f in self.failures}

    def merge(self, other: "Report") -> "Report":
        for k, v in other.checked.items():
            self.checked[k] = self.checked.get(k, 0) + v
        self.failures.extend(other.failures)
        return self

    def fail(self, kind: str, axiom: str, labels, witness, lhs=None, rhs=None) -> None:
        self.failures.append({
            "axiom": axiom,
            "kind": kind,
            "labels": [str(x) for x in labels],
            "witness": witness,
            "lhs": value_json(lhs),
            "rhs": value_json(rhs),
        })

    def compare(self, axiom: str, labels, witness, lhs, rhs) -> bool:
        self.checked[axiom] = self.checked.get(axiom, 0) + 1
        lp = getattr(lhs, "piece", None) or getattr(lhs, "pieces", None)
        rp = getattr(rhs, "piece", None) or getattr(rhs, "pieces", None)
        if lp is not None and rp is not None and tuple(lp) != tuple(rp):
            self.fail("grading", axiom, labels, witness, lhs, rhs)
            return False
        if lhs != rhs:
            self.fail("mismatch", axiom, labels, witness, lhs, rhs)
            return False
        return True

    def to_json(self) -> dict:
        axioms = sorted(self.checked, key=_axiom_order)
        bad = self.failed_axioms()
        return {
            "ok": self.ok,
            "axioms": [{"axiom": a, "checked": self.checked[a], "pass": a not in bad}
                       for a in axioms],
            "failures": self.failures,
        }


def _axiom_order(name: str):
    digits = "".join(ch for ch in name[1:] if ch.isdigit())
    return (name[0], int(digits), name)


def label_tuples(labels: Sequence[Label], k: int, limit: int = 16, seed: int = 0) -> list[tuple]:
    """All k-tuples if there are at most ``limit``; otherwise a covering sample."""
    labels = list(labels)
    n = len(labels)
    if n ** k <= limit:
        return list(itertools.product(labels, repeat=k))
    rng = random.Random(f"{seed}:{k}:{n}")
    out: list[tuple] = []
    perms = [rng.sample(range(n), n) for _ in range(k)]
    for i in range(n):
        out.append(tuple(labels[perms[j][i]] for j in range(k)))
    seen = set(out)
    while len(out) < max(limit, n):
        t = tuple(rng.choice(labels) for _ in range(k))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def basis_tuples(H: StructureMaps, pieces: Sequence, limit: int | None, rng: random.Random):
    """Tuples of basis elements, exhaustive unless the product exceeds ``limit``."""
    bases = [list(H.basis_elems(p)) for p in pieces]
    total = 1
    for b in bases:
        total *= len(b)
    if limit is None or total <= limit:
        return itertools.product(*bases)
    return (tuple(rng.choice(b) for b in bases) for _ in range(limit))


def merge_slots(H: StructureMaps, t: Tensor, i: int, j: int) -> Tensor:
    """Multiply slot i by slot j (in that order) and put the product in slot i."""
    pi, pj = t.pieces[i], t.pieces[j]
    prod = H.mul(H.zero(pi), H.zero(pj)).piece
    pieces = [prod if s == i else p for s, p in enumerate(t.pieces) if s != j]
    out: dict = {}
    for key, c in t.coeffs.items():
        rest = list(key)
        for k, v in H.basis_product(pi, key[i], pj, key[j]):
            rest[i] = k
            _add_into(out, tuple(rest[:j] + rest[j + 1:]), c * v)
    return Tensor(pieces, out)


def _witness(*xs: AlgElem) -> list:
    return [[str(x.lower), str(x.upper), list(next(iter(x.coeffs)))] for x in xs]


class Checker:
    """Runs axiom suites for one instance over a label sample."""

    def __init__(self, H: StructureMaps, labels: Sequence, *, tuple_limit: int = 16,
                 basis_limit: int | None = None, seed: int = 0):
        self.H = H
        self.F = H.field
        self.labels = [Label.coerce(x) for x in labels]
        self.tuple_limit = tuple_limit
        self.basis_limit = basis_limit
        self.seed = seed
        self.rng = random.Random(seed)

    def tuples(self, k: int) -> list[tuple]:
        return label_tuples(self.labels, k, self.tuple_limit, self.seed)

    def elems(self, *pieces):
        return basis_tuples(self.H, [self.H.piece(*p) for p in pieces],
                            self.basis_limit, self.rng)

    def run(self, names: Sequence[str]) -> Report:
        rep = Report()
        for name in names:
            getattr(self, "check_" + name.lower())(rep)
        return rep

    # -- Hopf G-bialgebra axioms ---------------------------------------------
    def check_h1(self, rep: Report) -> None:
        H = self.H
        for a, b, c, d in self.tuples(4):
            for x, y, z in self.elems((a, b), (a, c), (a, d)):
                lhs = H.mul(H.mul(x, y), z)
                rhs = H.mul(x, H.mul(y, z))
                rep.compare("H1", (a, b, c, d), _witness(x, y, z), lhs, rhs)

    def check_h2(self, rep: Report) -> None:
        H = self.H
        for a, b in self.tuples(2):
            one = H.unit(a)
            for (x,) in self.elems((a, b)):
                rep.compare("H2", (a, b), _witness(x), H.mul(one, x), x)
                rep.compare("H2", (a, b), _witness(x), H.mul(x, one), x)

    def check_h3(self, rep: Report) -> None:
        H, F = self.H, self.F
        for a, b, c, d in self.tuples(4):
            for (x,) in self.elems((a + b + c, d)):
                lhs = H.coproduct(x, a + b, c).apply(0, lambda y: H.coproduct(y, a, b), F)
                rhs = H.coproduct(x, a, b + c).apply(1, lambda y: H.coproduct(y, b, c), F)
                rep.compare("H3", (a, b, c, d), _witness(x), lhs, rhs)

    def check_h4(self, rep: Report) -> None:
        H, F = self.H, self.F
        zero = Label(0)
        for a, b in self.tuples(2):
            for (x,) in self.elems((a, b)):
                left = H.coproduct(x, zero, a).contract(0, H.counit, F).as_elem()
                right = H.coproduct(x, a, zero).contract(1, H.counit, F).as_elem()
                rep.compare("H4", (a, b), _witness(x), left, x)
                rep.compare("H4", (a, b), _witness(x), right, x)

    def check_h5(self, rep: Report) -> None:
        H = self.H
        for a, b, c, d in self.tuples(4):
            for x, y in self.elems((a + b, c), (a + b, d)):
                lhs = H.coproduct(H.mul(x, y), a, b)
                rhs = H.mul_tensors(H.coproduct(x, a, b), H.coproduct(y, a, b))
                rep.compare("H5", (a, b, c, d), _witness(x, y), lhs, rhs)

    def check_h6(self, rep: Report) -> None:
        H = self.H
        zero = Label(0)
        for a, b in self.tuples(2):
            for x, y in self.elems((zero, a), (zero, b)):
                rep.compare("H6", (a, b), _witness(x, y),
                            H.counit(H.mul(x, y)), H.counit(x) * H.counit(y))

    def check_h7(self, rep: Report) -> None:
        H = self.H
        for a, b in self.tuples(2):
            rep.compare("H7", (a, b), [], H.coproduct(H.unit(a + b), a, b),
                        tensor_of(H.unit(a), H.unit(b)))

    def check_h8(self, rep: Report) -> None:
        rep.compare("H8", (), [], self.H.counit(self.H.unit(0)), self.F.one)

    def check_h9(self, rep: Report) -> None:
        H, F = self.H, self.F
        zero = Label(0)
        for a, b in self.tuples(2):
            one = H.unit(a)
            for (x,) in self.elems((zero, b)):
                rhs = one.scale(H.counit(x))
                left = _mul_slots(H, H.coproduct(x, -a, a).apply(0, H.antipode, F))
                right = _mul_slots(H, H.coproduct(x, a, -a).apply(1, H.antipode, F))
                rep.compare("H9", (a, b), _witness(x), left, rhs)
                rep.compare("H9", (a, b), _witness(x), right, rhs)

    # -- derived antipode identities -----------------------------------------
    def check_h10(self, rep: Report) -> None:
        H = self.H
        for a, b, c in self.tuples(3):
            for x, y in self.elems((a, b), (a, c)):
                lhs = H.antipode(H.mul(x, y))
                rhs = H.mul(H.antipode(y), H.antipode(x))
                rep.compare("H10", (a, b, c), _witness(x, y), lhs, rhs)

    def check_h11(self, rep: Report) -> None:
        H = self.H
        for (a,) in self.tuples(1):
            rep.compare("H11", (a,), [], H.antipode(H.unit(a)), H.unit(-a))

    def check_h12(self, rep: Report) -> None:
        H, F = self.H, self.F
        for a, b, c in self.tuples(3):
            for (z,) in self.elems((a + b, c)):
                lhs = H.coproduct(H.antipode(z), -a, -b)
                rhs = (H.coproduct(z, b, a).permute([1, 0])
                       .apply(0, H.antipode, F).apply(1, H.antipode, F))
                rep.compare("H12", (a, b, c), _witness(z), lhs, rhs)

    def check_h13(self, rep: Report) -> None:
        H = self.H
        zero = Label(0)
        for (a,) in self.tuples(1):
            for (w,) in self.elems((zero, a)):
                rep.compare("H13", (a,), _witness(w), H.counit(H.antipode(w)), H.counit(w))


    # -- ribbon structure ----------------------------------------------------
    def check_r1(self, rep: Report) -> None:
        H = self.H
        for a, b, c in self.tuples(3):
            R = H.r_matrix(a, b)
            for (x,) in self.elems((a + b, c)):
                lhs = H.mul_tensors(R, H.coproduct(x, a, b))
                rhs = H.mul_tensors(H.coproduct(x, b, a).permute([1, 0]), R)
                rep.compare("R1", (a, b, c), _witness(x), lhs, rhs)

    def check_r2(self, rep: Report) -> None:
        H, F = self.H, self.F
        for a, b, c in self.tuples(3):
            lhs = H.r_matrix(a, b + c).apply(1, lambda y: H.coproduct(y, b, c), F)
            rhs = merge_slots(H, tensor_of(H.r_matrix(a, c), H.r_matrix(a, b)), 0, 2)
            rep.compare("R2", (a, b, c), [], lhs, rhs.permute([0, 2, 1]))

    def check_r3(self, rep: Report) -> None:
        H, F = self.H, self.F
        for a, b, c in self.tuples(3):
            lhs = H.r_matrix(a + b, c).apply(0, lambda y: H.coproduct(y, a, b), F)
            rhs = merge_slots(H, tensor_of(H.r_matrix(a, c), H.r_matrix(b, c)), 1, 3)
            rep.compare("R3", (a, b, c), [], lhs, rhs.permute([0, 2, 1]))

    def check_r4(self, rep: Report) -> None:
        H = self.H
        for (a,) in self.tuples(1):
            v = H.ribbon(a)
            rhs = H.mul(H.drinfeld_u(a), H.antipode(H.drinfeld_u(-a)))
            rep.compare("R4", (a,), [], H.mul(v, v), rhs)

    def check_r5(self, rep: Report) -> None:
        H, F = self.H, self.F
        for a, b in self.tuples(2):
            lhs = H.coproduct(H.ribbon(a + b), a, b)
            t = tensor_of(H.r_matrix(-a, b).apply(0, H.antipode, F),
                          H.r_matrix(-b, a).apply(0, H.antipode, F))
            t = merge_slots(H, merge_slots(H, t, 0, 3), 1, 2)
            rhs = H.mul_tensors(tensor_of(H.ribbon(a), H.ribbon(b)), t)
            rep.compare("R5", (a, b), [], lhs, rhs)

    def check_r6(self, rep: Report) -> None:
        rep.compare("R6", (), [], self.H.counit(self.H.ribbon(0)), self.F.one)

    def check_r7(self, rep: Report) -> None:
        """S(v_a) = v_{-a}; also that v is central and invertible."""
        H = self.H
        for (a,) in self.tuples(1):
            v = H.ribbon(a)
            rep.compare("R7", (a,), [], H.antipode(v), H.ribbon(-a))
            try:
                vinv = H.ribbon_inv(a)
            except ArithmeticError as exc:
                rep.checked["R7"] = rep.checked.get("R7", 0) + 1
                rep.fail("error", "R7", (a,), str(exc))
                continue
            rep.compare("R7", (a,), "v v^-1", H.mul(v, vinv), H.unit(a))
            rep.compare("R7", (a,), "v^-1 v", H.mul(vinv, v), H.unit(a))
        for a, b in self.tuples(2):
            v = H.ribbon(a)
            for (x,) in self.elems((a, b)):
                rep.compare("R7", (a, b), _witness(x), H.mul(v, x), H.mul(x, v))

    def check_r8(self, rep: Report) -> None:
        H = self.H
        for a, b, c in self.tuples(3):
            one_a, one_b, one_c = H.unit(a), H.unit(b), H.unit(c)
            r12 = tensor_of(H.r_matrix(a, b), one_c)
            r13 = tensor_of(H.r_matrix(a, c), one_b).permute([0, 2, 1])
            r23 = tensor_of(one_a, H.r_matrix(b, c))
            lhs = H.mul_tensors(H.mul_tensors(r12, r13), r23)
            rhs = H.mul_tensors(H.mul_tensors(r23, r13), r12)
            rep.compare("R8", (a, b, c), [], lhs, rhs)

    def check_r9(self, rep: Report) -> None:
        H, F = self.H, self.F
        zero = Label(0)
        for (a,) in self.tuples(1):
            one = H.unit(a)
            left = H.r_matrix(a, zero).contract(1, H.counit, F).as_elem()
            right = H.r_matrix(zero, a).contract(0, H.counit, F).as_elem()
            rep.compare("R9", (a,), "first", left, one)
            rep.compare("R9", (a,), "second", right, one)

    def check_r10(self, rep: Report) -> None:
        H, F = self.H, self.F
        for a, b in self.tuples(2):
            R = H.r_matrix(a, b)
            inv1 = H.r_matrix(-a, b).apply(0, H.antipode, F)
            inv2 = H.r_matrix(a, -b).apply(1, H.antipode_inv, F)
            ones = tensor_of(H.unit(a), H.unit(b))
            rep.compare("R10", (a, b), "R R^-1", H.mul_tensors(R, inv1), ones)
            rep.compare("R10", (a, b), "R^-1 R", H.mul_tensors(inv1, R), ones)
            rep.compare("R10", (a, b), "two forms", inv1, inv2)

    def check_r11(self, rep: Report) -> None:
        H, F = self.H, self.F
        for a, b in self.tuples(2):
            lhs = H.r_matrix(a, b).apply(0, H.antipode, F).apply(1, H.antipode, F)
            rep.compare("R11", (a, b), [], lhs, H.r_matrix(-a, -b))

    def _u_inverse_printed(self, a: Label) -> AlgElem:
        """R'_i S(S(R''_i)) with R = R_{a,a}, as the identity is usually printed."""
        H, F = self.H, self.F
        t = H.r_matrix(a, a).apply(1, lambda y: H.antipode(H.antipode(y)), F)
        return merge_slots(H, t, 0, 1).as_elem()

    def _u_inverse_standard(self, a: Label) -> AlgElem:
        """R''_i S(S(R'_i)) with R = R_{a,a}."""
        H, F = self.H, self.F
        t = H.r_matrix(a, a).apply(0, lambda y: H.antipode(H.antipode(y)), F)
        return merge_slots(H, t, 1, 0).as_elem()

    def check_r12(self, rep: Report) -> None:
        """Closed formula for u^-1, printed form (R12) and standard form (R12c)."""
        H = self.H
        for (a,) in self.tuples(1):
            u, one = H.drinfeld_u(a), H.unit(a)
            for name, ui in (("R12", self._u_inverse_printed(a)),
                             ("R12c", self._u_inverse_standard(a))):
                rep.compare(name, (a,), "u u^-1", H.mul(u, ui), one)
                rep.compare(name, (a,), "u^-1 u", H.mul(ui, u), one)

    def check_r13(self, rep: Report) -> None:
        H = self.H
        for a, b in self.tuples(2):
            u = H.drinfeld_u(a)
            ui = H.left_inverse(u)
            for (x,) in self.elems((a, b)):
                rep.compare("R13", (a, b), _witness(x), H.mul_many(u, x, ui),
                            H.antipode(H.antipode(x)))

    def check_r14(self, rep: Report) -> None:
        H = self.H
        for a, b in self.tuples(2):
            rep.compare("R14", (a, b), [], H.coproduct(H.pivotal(a + b), a, b),
                        tensor_of(H.pivotal(a), H.pivotal(b)))

    def check_r15(self, rep: Report) -> None:
        rep.compare("R15", (), [], self.H.counit(self.H.pivotal(0)), self.F.one)

    def check_r16(self, rep: Report) -> None:
        H = self.H
        for a, b in self.tuples(2):
            g, gi = H.pivotal(a), H.pivotal_inv(a)
            rep.compare("R16", (a,), "g g^-1", H.mul(g, gi), H.unit(a))
            for (x,) in self.elems((a, b)):
                rep.compare("R16", (a, b), _witness(x), H.mul_many(g, x, gi),
                            H.antipode(H.antipode(x)))

    # -- integrals and factorizability ---------------------------------------
    def check_i1(self, rep: Report) -> None:
        H, F = self.H, self.F
        zero = Label(0)
        for a, b in self.tuples(2):
            for (x,) in self.elems((a + b, zero)):
                lhs = H.coproduct(x, a, b).contract(1, H.integral, F).as_elem()
                rep.compare("I1", (a, b), _witness(x), lhs, H.unit(a).scale(H.integral(x)))

    def check_i2(self, rep: Report) -> None:
        H = self.H
        zero = Label(0)
        for a, b in self.tuples(2):
            lam_b, lam_ab = H.cointegral(b), H.cointegral(a + b)
            for (y,) in self.elems((zero, a)):
                rep.compare("I2", (a, b), _witness(y), H.mul(y, lam_b),
                            lam_ab.scale(H.counit(y)))

    def check_i3(self, rep: Report) -> None:
        H = self.H
        for (a,) in self.tuples(1):
            rep.compare("I3", (a,), [], H.antipode(H.cointegral(a)), H.cointegral(-a))

    def check_i4(self, rep: Report) -> None:
        rep.compare("I4", (), [], self.H.integral(self.H.cointegral(0)), self.F.one)

    def check_i5(self, rep: Report) -> None:
        H = self.H
        zero = Label(0)
        for (a,) in self.tuples(1):
            lhs = H.drinfeld_map(a, zero, lambda x: H.integral(H.antipode(x)))
            rep.compare("I5", (a,), [], lhs, H.cointegral(a))

    def check_i6(self, rep: Report) -> None:
        """Printed form with g^2 (I6) and the form with g^-2 (I6c)."""
        H, F = self.H, self.F
        zero = Label(0)
        for a, b in self.tuples(2):
            g2 = H.mul(H.pivotal(b), H.pivotal(b))
            gm2 = H.mul(H.pivotal_inv(b), H.pivotal_inv(b))
            for (x,) in self.elems((a + b, zero)):
                lhs = H.coproduct(x, a, b).contract(0, H.integral, F).as_elem()
                lam = H.integral(x)
                rep.compare("I6", (a, b), _witness(x), lhs, g2.scale(lam))
                rep.compare("I6c", (a, b), _witness(x), lhs, gm2.scale(lam))

    def check_i7(self, rep: Report) -> None:
        H = self.H
        for a, b in self.tuples(2):
            for y, z in self.elems((a, b), (a, -b)):
                lhs = H.integral(H.mul(y, z))
                rhs = H.integral(H.mul(z, H.antipode(H.antipode(y))))
                rep.compare("I7", (a, b), _witness(y, z), lhs, rhs)

    def check_i8(self, rep: Report) -> None:
        H = self.H
        zero = Label(0)
        for (a,) in self.tuples(1):
            gi, gmi = H.pivotal_inv(a), H.pivotal_inv(-a)
            for (w,) in self.elems((a, zero)):
                lhs = H.integral(H.mul(w, gi))
                rhs = H.integral(H.mul(H.antipode(w), gmi))
                rep.compare("I8", (a,), _witness(w), lhs, rhs)


def _mul_slots(H: StructureMaps, t: Tensor) -> AlgElem:
    """Multiply the two slots of a 2-tensor together."""
    return merge_slots(H, t, 0, 1).as_elem()


def representative_audit(H0: StructureMaps, H2: StructureMaps, labels: Sequence, *,
                         basis_limit: int | None = 9, seed: int = 0,
                         words: Sequence = (), diagrams: Sequence = ()) -> Report:
    """Compare an instance with one built on shifted label representatives.

    ``H2.canonical`` carries elements of ``H2`` to the coordinates of ``H0``;
    every structure map must commute with it.  Evaluator outputs are
    compared column by column, link values directly.
    """
    rep = Report()
    rng = random.Random(seed)
    C, Ct = H2.canonical, H2.canonical_tensor
    labels = [Label.coerce(x) for x in labels]
    zero = Label(0)

    def elems(piece):
        xs = list(H2.basis_elems(piece))
        return xs if basis_limit is None else rng.sample(xs, min(basis_limit, len(xs)))

    for a, b in itertools.product(labels, repeat=2):
        for x in elems(H2.piece(a, b)):
            w = _witness(x)
            rep.compare("antipode", (a, b), w, C(H2.antipode(x)), H0.antipode(C(x)))
            rep.compare("antipode_inv", (a, b), w, C(H2.antipode_inv(x)), H0.antipode_inv(C(x)))
            rep.compare("coproduct", (a, b), w, Ct(H2.coproduct(x, b, a - b)),
                        H0.coproduct(C(x), b, a - b))
            for y in elems(H2.piece(a, a)):
                rep.compare("mul", (a, b), _witness(x, y), C(H2.mul(x, y)), H0.mul(C(x), C(y)))
            if a.is_zero():
                rep.compare("counit", (a, b), w, H2.counit(x), H0.counit(C(x)))
            if b.value % 1 == 0:
                rep.compare("integral", (a, b), w, H2.integral(x), H0.integral(C(x)))
        rep.compare("r_matrix", (a, b), [], Ct(H2.r_matrix(a, b)), H0.r_matrix(a, b))
    for a in labels:
        rep.compare("unit", (a,), [], C(H2.unit(a)), H0.unit(a))
        rep.compare("ribbon", (a,), [], C(H2.ribbon(a)), H0.ribbon(a))
        rep.compare("pivotal", (a,), [], C(H2.pivotal(a)), H0.pivotal(a))
        rep.compare("cointegral", (a,), [], C(H2.cointegral(a)), H0.cointegral(a))
    rep.compare("cointegral_value", (zero,), [], H2.integral(H2.cointegral(zero)),
                H0.integral(H0.cointegral(zero)))

    if words:
        from hopfg.evaluator import WordEvaluator
        from hopfg.expr import to_text
        W0, W2 = WordEvaluator(H0), WordEvaluator(H2)
        one = H0.field.one
        for e in words:
            m0, m2 = W0.evaluate(e), W2.evaluate(e)
            keys = list(m2.source_keys())
            for key in (keys if len(keys) <= 27 else rng.sample(keys, 27)):
                s = Tensor(m2.src_pieces, {key: one})
                rep.compare("evaluator", (), [to_text(e), list(key)],
                            Ct(m2.apply(s)), m0.apply(Ct(s)))
    if diagrams:
        from hopfg.links import evaluate_link
        for d in diagrams:
            rep.compare("link", [d.label(t) for t in d.tags], [str(t) for t in d.tags],
                        evaluate_link(H2, d), evaluate_link(H0, d))
    return rep
