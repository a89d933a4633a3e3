"""J_H on generator words: sparse graded maps between tensor products of pieces."""

from __future__ import annotations

import itertools
from typing import Callable

from hopfg.expr import Braid, Compose, Gen, Id, Obj, TensorE, gen_signature, infer, obj_json
from hopfg.hopf import AlgElem, StructureMaps, Tensor, _add_into, tensor_of
from hopfg.labels import Label
from hopfg.serial import scalar_json


class GradedMap:
    """Linear map H_(source) -> H_(target), stored column by column.

    ``cols`` maps a source basis key (one basis index per slot) to a sparse
    column {target key: scalar}.  Missing columns are zero.
    """

    def __init__(self, H: StructureMaps, source: Obj, target: Obj, cols: dict):
        self.H = H
        self.source = tuple(source)
        self.target = tuple(target)
        self.src_pieces = tuple(H.piece(a, b) for a, b in self.source)
        self.tgt_pieces = tuple(H.piece(a, b) for a, b in self.target)
        self.cols = {k: v for k, v in cols.items() if v}

    @property
    def shape(self) -> tuple[int, int]:
        d = len(self.H.basis())
        return d ** len(self.target), d ** len(self.source)

    def source_keys(self):
        return itertools.product(self.H.basis(), repeat=len(self.source))

    @classmethod
    def identity(cls, H: StructureMaps, obj: Obj) -> "GradedMap":
        one = H.field.one
        keys = itertools.product(H.basis(), repeat=len(obj))
        return cls(H, obj, obj, {k: {k: one} for k in keys})

    @classmethod
    def from_function(cls, H: StructureMaps, source: Obj, target: Obj,
                      f: Callable[[Tensor], Tensor]) -> "GradedMap":
        """Tabulate f on the basis of the source."""
        pieces = [H.piece(a, b) for a, b in source]
        one = H.field.one
        cols = {}
        for key in itertools.product(H.basis(), repeat=len(source)):
            img = f(Tensor(pieces, {key: one}))
            cols[key] = dict(img.coeffs)
        out = cls(H, source, target, cols)
        return out

    def apply(self, t: Tensor) -> Tensor:
        if tuple(t.pieces) != self.src_pieces:
            raise ValueError("tensor does not lie in the source of the map")
        out: dict = {}
        for k, c in t.coeffs.items():
            for k2, v in self.cols.get(k, {}).items():
                _add_into(out, k2, v * c)
        return Tensor(self.tgt_pieces, out)

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """self after inner."""
        if inner.target != self.source:
            raise ValueError("composition of graded maps with mismatched objects")
        cols = {}
        for k, col in inner.cols.items():
            acc: dict = {}
            for k2, c in col.items():
                for k3, v in self.cols.get(k2, {}).items():
                    _add_into(acc, k3, v * c)
            cols[k] = acc
        return GradedMap(self.H, inner.source, self.target, cols)

    def tensor(self, other: "GradedMap") -> "GradedMap":
        cols = {}
        for k1, c1 in self.cols.items():
            for k2, c2 in other.cols.items():
                cols[k1 + k2] = {t1 + t2: v1 * v2 for t1, v1 in c1.items()
                                 for t2, v2 in c2.items()}
        return GradedMap(self.H, self.source + other.source, self.target + other.target, cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.cols == other.cols)

    def scalar(self):
        """The value of a map between empty objects."""
        if self.source or self.target:
            raise ValueError("not a scalar map")
        return self.cols.get((), {}).get((), self.H.field.zero)

    def to_json(self) -> dict:
        basis = self.H.basis()
        pos = {b: i for i, b in enumerate(basis)}
        d = len(basis)

        def flat(key):
            i = 0
            for b in key:
                i = i * d + pos[b]
            return i

        entries = []
        for k, col in self.cols.items():
            for k2, v in col.items():
                entries.append((flat(k2), flat(k), v))
        entries.sort(key=lambda e: (e[0], e[1]))
        return {
            "source": obj_json(self.source),
            "target": obj_json(self.target),
            "shape": list(self.shape),
            "basis": "E^l F^(m) T_{2n+a}^b per slot, index (l*r'+m)*r'+n",
            "entries": [[i, j, scalar_json(v)] for i, j, v in entries],
        }


# -- the adjoint module structure ------------------------------------------------

def act(H: StructureMaps, x: AlgElem, t: Tensor) -> Tensor:
    """x |> t for x in H_0^gamma, through the iterated coproduct into lower labels 0."""
    n = len(t.pieces)
    if n == 0:
        return t.scale(H.counit(x))
    parts = H.iterated_coproduct(x, [Label(0)] * n)
    out: dict = {}
    pieces = None
    for pkey, pc in parts.coeffs.items():
        for tkey, tc in t.coeffs.items():
            acc = [((), pc * tc)]
            imgs = []
            for i in range(n):
                img = H.adjoint_basis(parts.pieces[i], pkey[i], t.pieces[i], tkey[i])
                imgs.append(img.piece)
                acc = [(k + (kk,), c * v) for k, c in acc for kk, v in img.coeffs.items()]
                if not acc:
                    break
            if pieces is None and len(imgs) == n:
                pieces = tuple(imgs)
            for k, c in acc:
                _add_into(out, k, c)
    return Tensor(pieces if pieces is not None else t.pieces, out)


# -- generator images ------------------------------------------------------------

class WordEvaluator:
    """Evaluates generator words; generator images are memoized per label tuple."""

    def __init__(self, H: StructureMaps):
        self.H = H
        self._cache: dict = {}

    def _r_split(self, a: Label):
        """Terms (R'_i, R''_i) of R_{0,-a}: R' in H_0^{-a/2}, R'' in H_{-a}^0."""
        H = self.H
        R = H.r_matrix(Label(0), -a)
        return [(AlgElem(*R.pieces[0], {k[0]: c}), AlgElem(*R.pieces[1], {k[1]: H.field.one}))
                for k, c in R.coeffs.items()]

    def twisted_coproduct(self, x: AlgElem, a: Label, b: Label) -> Tensor:
        """x_(1,a) S(R''_i) (x) (R'_i |> x_(2,b))."""
        H, F = self.H, self.H.field
        cop = H.coproduct(x, a, b)
        out = None
        for r1, r2 in self._r_split(a):
            s2 = H.antipode(r2)
            term = cop.apply(0, lambda y: H.mul(y, s2), F).apply(
                1, lambda y: H.adjoint_act(r1, y), F)
            out = term if out is None else out + term
        return out

    def twisted_antipode(self, x: AlgElem, inverse: bool = False) -> AlgElem:
        """R''_i S(R'_i |> x), or S^-1(R'_i |> x) R''_i for the inverse."""
        H = self.H
        out = None
        for r1, r2 in self._r_split(x.lower):
            y = H.adjoint_act(r1, x)
            term = H.mul(H.antipode_inv(y), r2) if inverse else H.mul(r2, H.antipode(y))
            out = term if out is None else out + term
        return out

    def braiding(self, left: Obj, right: Obj) -> GradedMap:
        """c(X (x) Y) = R'' |> Y (x) R' |> X with R = R_{0,0}."""
        H = self.H
        zero = Label(0)
        R = H.r_matrix(zero, zero)
        terms = [(AlgElem(*R.pieces[0], {k[0]: c}), AlgElem(*R.pieces[1], {k[1]: H.field.one}))
                 for k, c in R.coeffs.items()]
        n = len(left)
        pl = [H.piece(a, b) for a, b in left]
        pr = [H.piece(a, b) for a, b in right]

        def f(t: Tensor) -> Tensor:
            (key, c), = t.coeffs.items()
            X = Tensor(pl, {key[:n]: c})
            Y = Tensor(pr, {key[n:]: H.field.one})
            out = None
            for r1, r2 in terms:
                term = tensor_of(act(H, r2, Y), act(H, r1, X))
                out = term if out is None else out + term
            return out

        return GradedMap.from_function(H, left + right, right + left, f)

    def generator(self, kind: str, labels: tuple) -> GradedMap:
        key = (kind, labels)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        H = self.H
        src, tgt = gen_signature(kind, labels)
        one = H.field.one

        def single(g: Callable[[AlgElem], AlgElem | Tensor | object]):
            def f(t: Tensor) -> Tensor:
                x = t.as_elem()
                y = g(x)
                if isinstance(y, AlgElem):
                    return Tensor((y.piece,), {(k,): c for k, c in y.coeffs.items()})
                if isinstance(y, Tensor):
                    return y
                return Tensor((), {(): y})
            return f

        def constant(y: AlgElem) -> GradedMap:
            return GradedMap(H, src, tgt, {(): {(k,): c for k, c in y.coeffs.items()}})

        if kind == "mu":
            def f(t: Tensor) -> Tensor:
                (k, c), = t.coeffs.items()
                x = AlgElem(*t.pieces[0], {k[0]: c})
                y = AlgElem(*t.pieces[1], {k[1]: one})
                z = H.mul(x, y)
                return Tensor((z.piece,), {(kk,): v for kk, v in z.coeffs.items()})
            out = GradedMap.from_function(H, src, tgt, f)
        elif kind == "eta":
            out = constant(H.unit(labels[0]))
        elif kind == "delta":
            a, b, _ = labels
            out = GradedMap.from_function(
                H, src, tgt, single(lambda x: self.twisted_coproduct(x, a, b)))
        elif kind == "eps":
            out = GradedMap.from_function(H, src, tgt, single(H.counit))
        elif kind == "S":
            out = GradedMap.from_function(H, src, tgt, single(self.twisted_antipode))
        elif kind == "Sinv":
            out = GradedMap.from_function(
                H, src, tgt, single(lambda x: self.twisted_antipode(x, inverse=True)))
        elif kind == "v":
            out = constant(H.ribbon(labels[0]))
        elif kind == "vinv":
            out = constant(H.ribbon_inv(labels[0]))
        elif kind == "lambda":
            out = GradedMap.from_function(H, src, tgt, single(H.integral))
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
        self._cache[key] = out
        return out

    def evaluate(self, e) -> GradedMap:
        infer(e)  # raises on ill-typed input
        return self._eval(e)

    def _eval(self, e) -> GradedMap:
        if isinstance(e, Id):
            return GradedMap.identity(self.H, e.obj)
        if isinstance(e, Gen):
            return self.generator(e.kind, e.labels)
        if isinstance(e, Braid):
            key = ("braid", e.left, e.right)
            hit = self._cache.get(key)
            if hit is None:
                hit = self._cache[key] = self.braiding(e.left, e.right)
            return hit
        if isinstance(e, Compose):
            return self._eval(e.outer).compose(self._eval(e.inner))
        if isinstance(e, TensorE):
            return self._eval(e.left).tensor(self._eval(e.right))
        raise TypeError(f"not an expression: {e!r}")


def intertwiner_check(H: StructureMaps, m: GradedMap, samples) -> list[dict]:
    """Failures of m(x |> s) = x |> m(s) over sampled x and all source basis s."""
    failures = []
    one = H.field.one
    for x in samples:
        for key in m.source_keys():
            s = Tensor(m.src_pieces, {key: one})
            lhs = m.apply(act(H, x, s))
            rhs = act(H, x, m.apply(s))
            if lhs != rhs:
                failures.append({"x": [str(x.lower), str(x.upper), sorted(x.coeffs)[:1]],
                                 "source_key": [list(k) for k in key]})
    return failures
