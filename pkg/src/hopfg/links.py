"""Bead evaluation of closed labeled link diagrams.

The diagram is swept from bottom to top.  Each arc of a component below the
sweep line is one tensor slot holding the product of the beads met on it so
far, in order of travel.  When a cap closes a component, its word is cut at
that cap and lambda(y g^-1) is applied; this functional is cyclic, so the
cut point does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass

from hopfg.diagram import LinkDiagram
from hopfg.hopf import AlgElem, StructureMaps, Tensor
from hopfg.labels import Label


class NotAdmissible(ValueError):
    pass


@dataclass(frozen=True)
class Conventions:
    """Bead placement rules.

    ``reverse`` multiplies beads against the direction of travel.  ``down``
    is the map applied to beads on downward strands.  Right-oriented caps
    and cups carry g to the powers ``cap`` and ``cup``; a closed component
    contributes lambda(y g^close).
    """
    reverse: bool = False
    down: str = "S"
    cap: int = -1
    cup: int = 1
    close: int = -1


DEFAULT = Conventions()


class _Sweep:
    def __init__(self, H: StructureMaps, d: LinkDiagram, conv: Conventions):
        self.H, self.d, self.conv = H, d, conv
        self.one = H.field.one
        self.t = Tensor((), {(): self.one})
        self.ids: list[int] = []        # slot ids in tensor order
        self.tag: dict = {}             # id -> component tag
        self.pos: list = []             # (id, "app" | "pre") per strand
        self._next = 0
        self._piece_cache: dict = {}

    # -- tensor bookkeeping ------------------------------------------------------
    def _new(self, x: AlgElem, tag) -> int:
        self.t = Tensor(self.t.pieces + (x.piece,),
                        {k + (b,): c * v for k, c in self.t.coeffs.items() for b, v in x.coeffs.items()})
        sid = self._next
        self._next += 1
        self.ids.append(sid)
        self.tag[sid] = tag
        return sid

    def _prod_piece(self, p1, p2):
        key = (p1, p2)
        hit = self._piece_cache.get(key)
        if hit is None:
            hit = self._piece_cache[key] = self.H.mul(self.H.zero(p1), self.H.zero(p2)).piece
        return hit

    def _merge(self, target: int, other: int, other_first: bool) -> None:
        """Slot target := target * other (other * target if other_first), in travel order."""
        if self.conv.reverse:
            other_first = not other_first
        i, j = self.ids.index(target), self.ids.index(other)
        pi, pj = self.t.pieces[i], self.t.pieces[j]
        pa, pb = (pj, pi) if other_first else (pi, pj)
        prod = self._prod_piece(pa, pb)
        bp = self.H.basis_product
        out: dict = {}
        for key, c in self.t.coeffs.items():
            a, b = (key[j], key[i]) if other_first else (key[i], key[j])
            rest = list(key)
            for k, v in bp(pa, a, pb, b):
                rest[i] = k
                nk = tuple(rest[:j] + rest[j + 1:])
                val = out.get(nk)
                s = c * v if val is None else val + c * v
                if s.is_zero():
                    out.pop(nk, None)
                else:
                    out[nk] = s
        pieces = list(self.t.pieces)
        pieces[i] = prod
        del pieces[j]
        self.t = Tensor(pieces, out)
        del self.ids[j]
        del self.tag[other]

    def _bead(self, sid: int, mode: str, x: AlgElem) -> None:
        b = self._new(x, None)
        self._merge(sid, b, other_first=(mode == "pre"))

    def _close(self, sid: int, label: Label) -> None:
        H = self.H
        i = self.ids.index(sid)
        e = self.conv.close
        g = H.pivotal(label) if e > 0 else H.pivotal_inv(label)
        gk = g
        for _ in range(abs(e) - 1):
            gk = H.mul(gk, g)

        def f(y: AlgElem):
            return H.integral(H.mul(y, gk) if e else y)

        self.t = self.t.contract(i, f, H.field)
        del self.ids[i]
        del self.tag[sid]

    # -- beads ---------------------------------------------------------------------
    def _pivot(self, label: Label, power: int) -> AlgElem | None:
        if power == 0:
            return None
        H = self.H
        g = H.pivotal(label) if power > 0 else H.pivotal_inv(label)
        out = g
        for _ in range(abs(power) - 1):
            out = H.mul(out, g)
        return out

    def _downward(self, x: AlgElem) -> AlgElem:
        return self.H.antipode(x) if self.conv.down == "S" else self.H.antipode_inv(x)

    # -- events ----------------------------------------------------------------
    def run(self):
        d, H = self.d, self.H
        trace = d.trace()
        cups, caps, strands = {}, {}, {}
        for tag, ps in trace.items():
            for j, p in enumerate(ps):
                if p.kind == "cup":
                    cups[p.event] = (tag, p)
                elif p.kind == "cap":
                    caps[p.event] = (tag, p)
                else:
                    strands[(p.event, p.from_left)] = (tag, p)
        for k, e in enumerate(d.events):
            if e[0] == "cup":
                self._cup(e[1], *cups[k])
            elif e[0] == "cap":
                self._cap(e[1], *caps[k])
            else:
                self._cross(e[1], e[2], strands[(k, True)], strands[(k, False)])
        return self.t.as_scalar(H.field)

    def _cup(self, i, tag, p):
        label = self.d.label(tag)
        bead = self._pivot(label, self.conv.cup) if p.rightward else None
        sid = self._new(bead or self.H.unit(label), tag)
        self.pos[i:i] = [(sid, "pre" if p.rightward else "app"),
                         (sid, "app" if p.rightward else "pre")]

    def _cap(self, i, tag, p):
        (a, ma), (b, _) = self.pos[i], self.pos[i + 1]
        x, y = (a, b) if ma == "app" else (b, a)
        label = self.d.label(tag)
        bead = self._pivot(label, self.conv.cap) if p.rightward else None
        if bead is not None:
            self._bead(x, "app", bead)
        del self.pos[i:i + 2]
        if x == y:
            self._close(x, label)
            return
        self._merge(x, y, other_first=False)
        self.pos = [(x, m) if s == y else (s, m) for s, m in self.pos]

    def _cross(self, i, over_flag, left_info, right_info):
        over_left = over_flag == "L"
        (to, po), (tu, pu) = (left_info, right_info) if over_left else (right_info, left_info)
        lo = self.d.label(to) if po.up else -self.d.label(to)
        lu = self.d.label(tu) if pu.up else -self.d.label(tu)
        terms = _crossing_terms(self.H, lo, lu, over_left)
        fix_o = (lambda x: x) if po.up else self._downward
        fix_u = (lambda x: x) if pu.up else self._downward
        # bead tensor: slot order (over, under)
        cache_o, cache_u = {}, {}
        coeffs: dict = {}
        po_piece = pu_piece = None
        for (ko, ku), c in terms.coeffs.items():
            xo = cache_o.get(ko)
            if xo is None:
                xo = cache_o[ko] = fix_o(AlgElem(*terms.pieces[0], {ko: self.one}))
            xu = cache_u.get(ku)
            if xu is None:
                xu = cache_u[ku] = fix_u(AlgElem(*terms.pieces[1], {ku: self.one}))
            po_piece, pu_piece = xo.piece, xu.piece
            for a, va in xo.coeffs.items():
                for b, vb in xu.coeffs.items():
                    key = (a, b)
                    val = coeffs.get(key)
                    s = c * va * vb if val is None else val + c * va * vb
                    coeffs[key] = s
        beads = Tensor((po_piece, pu_piece), coeffs)
        self.t = Tensor(self.t.pieces + beads.pieces,
                        {k1 + k2: c1 * c2 for k1, c1 in self.t.coeffs.items()
                         for k2, c2 in beads.coeffs.items()})
        bo, bu = self._next, self._next + 1
        self._next += 2
        self.ids += [bo, bu]
        self.tag[bo] = self.tag[bu] = None
        so, mo = self.pos[i] if over_left else self.pos[i + 1]
        su, mu = self.pos[i + 1] if over_left else self.pos[i]
        for (s, m), p in (((so, mo), po), ((su, mu), pu)):
            if (m == "app") != p.up:
                raise RuntimeError("strand direction disagrees with its arc end")
        self._merge(so, bo, other_first=(mo == "pre"))
        self._merge(su, bu, other_first=(mu == "pre"))
        self.pos[i], self.pos[i + 1] = self.pos[i + 1], self.pos[i]


def _crossing_terms(H: StructureMaps, lo: Label, lu: Label, positive: bool) -> Tensor:
    """R_{lo,lu} for an upright positive crossing, R^-1 for a negative one."""
    key = (lo, lu, positive)
    cache = H.__dict__.setdefault("_crossing_terms", {})
    hit = cache.get(key)
    if hit is not None:
        return hit
    if positive:
        out = H.r_matrix(lo, lu)
    else:
        R = H.r_matrix(-lo, lu)
        out = R.apply(0, H.antipode, H.field)
    cache[key] = out
    return out


def evaluate_link(H: StructureMaps, d: LinkDiagram, conv: Conventions = DEFAULT,
                  check: bool = True):
    """The scalar invariant of an admissible labeled diagram."""
    if check:
        adm = d.admissibility()
        if not adm["ok"]:
            f = adm["failures"][0]
            raise NotAdmissible(f"diagram is not admissible at component {f['component']!r} "
                                f"(linking sum {f['sum']})")
    if not d.events:
        return H.field.one
    return _Sweep(H, d, conv).run()
