"""Generic doubly graded Hopf G-bialgebra framework.

An instance provides structure maps on the pieces H_a^b.  Elements of one
piece are ``AlgElem`` values; elements of tensor products of pieces are
``Tensor`` values.  Everything here is written against the abstract
``StructureMaps`` interface so the axiom suites can run on any instance.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Callable, Hashable, Iterable, Sequence

from hopfg.labels import Label
from hopfg.scalars import CycField, CycScalar

Piece = tuple[Label, Label]


def _add_into(acc: dict, key, c) -> None:
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        s = v + c
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


class AlgElem:
    """An element of the piece H_lower^upper, as basis index -> coefficient."""

    __slots__ = ("lower", "upper", "coeffs")

    def __init__(self, lower: Label, upper: Label, coeffs: dict | None = None):
        self.lower = lower
        self.upper = upper
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    @property
    def piece(self) -> Piece:
        return (self.lower, self.upper)

    def _check(self, other: "AlgElem") -> None:
        if self.piece != other.piece:
            raise ValueError(f"piece mismatch: {self.piece} vs {other.piece}")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _add_into(out, k, c)
        return AlgElem(self.lower, self.upper, out)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.lower, self.upper, {k: -c for k, c in self.coeffs.items()})

    def scale(self, c) -> "AlgElem":
        return AlgElem(self.lower, self.upper, {k: v * c for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.piece == other.piece and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.piece, frozenset(self.coeffs)))

    def __repr__(self) -> str:
        return f"AlgElem({self.lower}, {self.upper}, {len(self.coeffs)} terms)"


class Tensor:
    """A finite sum of pure tensors in a tensor product of pieces."""

    __slots__ = ("pieces", "coeffs")

    def __init__(self, pieces: Sequence[Piece], coeffs: dict | None = None):
        self.pieces = tuple(pieces)
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero()}

    @staticmethod
    def pure(*elems: AlgElem) -> "Tensor":
        return tensor_of(*elems)

    @staticmethod
    def scalar(field: CycField, c) -> "Tensor":
        return Tensor((), {(): field(c)})

    def _check(self, other: "Tensor") -> None:
        if self.pieces != other.pieces:
            raise ValueError(f"tensor piece mismatch: {self.pieces} vs {other.pieces}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _add_into(out, k, c)
        return Tensor(self.pieces, out)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def scale(self, c) -> "Tensor":
        return Tensor(self.pieces, {k: v * c for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.pieces == other.pieces and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Tensor({self.pieces}, {len(self.coeffs)} terms)"

    def apply(self, i: int, f: Callable[[AlgElem], AlgElem | "Tensor"],
              field: CycField) -> "Tensor":
        """Apply a linear map to slot i; f may return an AlgElem or a Tensor."""
        low, up = self.pieces[i]
        cache: dict = {}
        out: dict = {}
        new_pieces = None
        for key, c in self.coeffs.items():
            k = key[i]
            img = cache.get(k)
            if img is None:
                img = f(AlgElem(low, up, {k: field.one}))
                if isinstance(img, AlgElem):
                    img = Tensor((img.piece,), {(kk,): v for kk, v in img.coeffs.items()})
                cache[k] = img
            if new_pieces is None:
                new_pieces = self.pieces[:i] + img.pieces + self.pieces[i + 1:]
            for kk, v in img.coeffs.items():
                _add_into(out, key[:i] + kk + key[i + 1:], v * c)
        if new_pieces is None:
            probe = f(AlgElem(low, up, {}))
            sub = (probe.piece,) if isinstance(probe, AlgElem) else probe.pieces
            new_pieces = self.pieces[:i] + sub + self.pieces[i + 1:]
        return Tensor(new_pieces, out)

    def contract(self, i: int, f: Callable[[AlgElem], CycScalar], field: CycField) -> "Tensor":
        """Apply a linear functional to slot i."""
        low, up = self.pieces[i]
        cache: dict = {}
        out: dict = {}
        for key, c in self.coeffs.items():
            k = key[i]
            v = cache.get(k)
            if v is None:
                v = cache[k] = field(f(AlgElem(low, up, {k: field.one})))
            if not v.is_zero():
                _add_into(out, key[:i] + key[i + 1:], v * c)
        return Tensor(self.pieces[:i] + self.pieces[i + 1:], out)

    def permute(self, order: Sequence[int]) -> "Tensor":
        """New tensor whose slot j is old slot order[j]."""
        return Tensor([self.pieces[o] for o in order],
                      {tuple(k[o] for o in order): c for k, c in self.coeffs.items()})

    def as_elem(self) -> AlgElem:
        if len(self.pieces) != 1:
            raise ValueError("tensor has more than one slot")
        low, up = self.pieces[0]
        return AlgElem(low, up, {k[0]: c for k, c in self.coeffs.items()})

    def as_scalar(self, field: CycField) -> CycScalar:
        if self.pieces:
            raise ValueError("tensor is not a scalar")
        return self.coeffs.get((), field.zero)


def tensor_of(*parts: "Tensor | AlgElem") -> Tensor:
    """Tensor product of tensors and elements."""
    pieces: list = []
    coeffs: dict = {(): None}
    for p in parts:
        if isinstance(p, AlgElem):
            p = Tensor((p.piece,), {(k,): c for k, c in p.coeffs.items()})
        pieces.extend(p.pieces)
        coeffs = {k1 + k2: (c2 if c1 is None else c1 * c2)
                  for k1, c1 in coeffs.items() for k2, c2 in p.coeffs.items()}
    if () in coeffs and coeffs[()] is None:
        raise ValueError("empty tensor product needs an explicit scalar")
    return Tensor(pieces, coeffs)


class StructureMaps(ABC):
    """Interface of a ribbon factorizable Hopf G-bialgebra instance."""

    field: CycField

    # -- pieces and bases --------------------------------------------------
    @abstractmethod
    def piece(self, lower, upper) -> Piece:
        """Canonical key of H_lower^upper (instances may identify uppers)."""

    @abstractmethod
    def basis(self, piece: Piece) -> list[Hashable]:
        ...

    def dim(self, piece: Piece) -> int:
        return len(self.basis(piece))

    def basis_elem(self, piece: Piece, k) -> AlgElem:
        low, up = self.piece(*piece)
        return AlgElem(low, up, {k: self.field.one})

    def basis_elems(self, piece: Piece) -> Iterable[AlgElem]:
        p = self.piece(*piece)
        for k in self.basis(p):
            yield self.basis_elem(p, k)

    @abstractmethod
    def half(self, label: Label) -> Label:
        """The label b/2 used for upper gradings of R-matrix factors."""

    # -- structure maps ----------------------------------------------------
    @abstractmethod
    def mul(self, x: AlgElem, y: AlgElem) -> AlgElem: ...

    @abstractmethod
    def unit(self, a: Label) -> AlgElem: ...

    @abstractmethod
    def coproduct(self, x: AlgElem, a1: Label, a2: Label) -> Tensor: ...

    @abstractmethod
    def counit(self, x: AlgElem) -> CycScalar: ...

    @abstractmethod
    def antipode(self, x: AlgElem) -> AlgElem: ...

    @abstractmethod
    def antipode_inv(self, x: AlgElem) -> AlgElem: ...

    @abstractmethod
    def r_matrix(self, a: Label, b: Label) -> Tensor: ...

    @abstractmethod
    def pivotal(self, a: Label) -> AlgElem: ...

    @abstractmethod
    def pivotal_inv(self, a: Label) -> AlgElem: ...

    @abstractmethod
    def ribbon(self, a: Label) -> AlgElem: ...

    @abstractmethod
    def ribbon_inv(self, a: Label) -> AlgElem: ...

    @abstractmethod
    def integral(self, x: AlgElem) -> CycScalar: ...

    @abstractmethod
    def cointegral(self, a: Label) -> AlgElem: ...

    # -- derived helpers -----------------------------------------------------
    def zero(self, piece: Piece) -> AlgElem:
        return AlgElem(*self.piece(*piece))

    def mul_tensors(self, s: Tensor, t: Tensor) -> Tensor:
        """Slotwise product (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) x2 y2."""
        if len(s.pieces) != len(t.pieces):
            raise ValueError("tensor lengths differ")
        pieces = tuple(self.mul(self.zero(p1), self.zero(p2)).piece
                       for p1, p2 in zip(s.pieces, t.pieces))

        def slot(i, a, b):
            return self.basis_product(s.pieces[i], a, t.pieces[i], b)

        out: dict = {}
        for k1, c1 in s.coeffs.items():
            for k2, c2 in t.coeffs.items():
                part = [((), c1 * c2)]
                for i in range(len(pieces)):
                    terms = slot(i, k1[i], k2[i])
                    part = [(kk + (k,), cc * v) for kk, cc in part for k, v in terms]
                    if not part:
                        break
                for kk, cc in part:
                    _add_into(out, kk, cc)
        return Tensor(pieces, out)

    def basis_product(self, p1: Piece, k1, p2: Piece, k2) -> list:
        """Terms of the product of two basis elements, memoized on the instance."""
        cache = self.__dict__.setdefault("_basis_products", {})
        key = (p1, k1, p2, k2)
        hit = cache.get(key)
        if hit is None:
            one = self.field.one
            prod = self.mul(AlgElem(*p1, {k1: one}), AlgElem(*p2, {k2: one}))
            hit = cache[key] = list(prod.coeffs.items())
        return hit

    def adjoint_basis(self, xp: Piece, kx, yp: Piece, ky) -> AlgElem:
        """Adjoint action of one basis element on another, memoized."""
        cache = self.__dict__.setdefault("_adjoint_cache", {})
        key = (xp, kx, yp, ky)
        hit = cache.get(key)
        if hit is None:
            one = self.field.one
            hit = cache[key] = self.adjoint_act(AlgElem(*xp, {kx: one}), AlgElem(*yp, {ky: one}))
        return hit

    def mul_many(self, *xs: AlgElem) -> AlgElem:
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    def iterated_coproduct(self, x: AlgElem, lowers: Sequence[Label]) -> Tensor:
        """Right-nested iterated coproduct into pieces with the given lower labels.

        x_(1) (x) ... (x) Delta(x_(n-1)), so the last factor is split first
        only after the earlier ones are fixed.
        """
        lowers = [Label.coerce(a) for a in lowers]
        if sum((a.value for a in lowers), 0) % 2 != x.lower.value:
            raise ValueError("lower labels do not sum to the lower label of x")
        if len(lowers) == 0:
            return Tensor((), {(): self.counit(x)})
        if len(lowers) == 1:
            return Tensor((x.piece,), {(k,): c for k, c in x.coeffs.items()})
        rest = Label(sum((a.value for a in lowers[1:]), 0))
        t = self.coproduct(x, lowers[0], rest)
        return t.apply(1, lambda y: self.iterated_coproduct(y, lowers[1:]), self.field)

    def adjoint_act(self, x: AlgElem, y: AlgElem) -> AlgElem:
        """x |> y = x_(1,a) y S(x_(2,-a)) for x in H_0^g and y in H_a^b."""
        if not x.lower.is_zero():
            raise ValueError("adjoint action needs an element of lower label 0")
        a = y.lower
        cop = self.coproduct(x, a, -a)
        p1, p2 = cop.pieces
        out = self.zero((a, y.upper))
        for k, c in cop.coeffs.items():
            x1 = AlgElem(*p1, {k[0]: c})
            x2 = AlgElem(*p2, {k[1]: self.field.one})
            out = out + self.mul(self.mul(x1, y), self.antipode(x2))
        return out

    def drinfeld_map(self, a: Label, b: Label, f: Callable[[AlgElem], CycScalar]) -> AlgElem:
        """D_{a,b}(f) = f(R''_i R'_j) R'_i R''_j, an element of H_b^a."""
        Ri = self.r_matrix(b, a)   # R'_i in H_b^{a/2}, R''_i in H_a^{b/2}
        Rj = self.r_matrix(a, b)   # R'_j in H_a^{b/2}, R''_j in H_b^{a/2}
        out = None
        for ki, ci in Ri.coeffs.items():
            r1i = AlgElem(*Ri.pieces[0], {ki[0]: ci})
            r2i = AlgElem(*Ri.pieces[1], {ki[1]: self.field.one})
            for kj, cj in Rj.coeffs.items():
                r1j = AlgElem(*Rj.pieces[0], {kj[0]: cj})
                r2j = AlgElem(*Rj.pieces[1], {kj[1]: self.field.one})
                val = f(self.mul(r2i, r1j))
                if val.is_zero():
                    continue
                term = self.mul(r1i, r2j).scale(val)
                out = term if out is None else out + term
        if out is None:
            return self.zero((b, a))
        return out
