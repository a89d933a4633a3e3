"""Closed, oriented, labeled link diagrams with blackboard framing.

A diagram is a Morse word read bottom to top.  Each event acts on the row
of strands crossing the current horizontal line:

* ``("cup", i, tag)``: a minimum creating two strands at positions i, i+1;
  ``tag`` names the component it belongs to.
* ``("cap", i)``: a maximum joining the strands at positions i, i+1.
* ``("cross", i, over)``: the strands at i and i+1 swap; ``over`` is ``"L"``
  when the strand coming from the bottom left passes over, ``"R"`` otherwise.

A component is oriented so that its lowest cup is traversed from left to
right, unless the component is marked reversed.  Beads along a component are
counted from a base point at the bottom of that lowest cup.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from hopfg.labels import Label


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Passage:
    """One visit of a component to an event."""
    event: int
    kind: str          # "cup", "cap" or "cross"
    up: bool           # direction of travel (for extrema: direction after the turn is irrelevant)
    rightward: bool = False   # extrema only
    over: bool = False        # crossings only
    from_left: bool = False   # crossings only: this strand starts at the bottom left


@dataclass
class LinkDiagram:
    events: list
    labels: dict = field(default_factory=dict)      # tag -> Label
    reversed: dict = field(default_factory=dict)    # tag -> bool

    def __post_init__(self):
        self.events = [tuple(e) for e in self.events]
        self.labels = {t: Label.coerce(v) for t, v in self.labels.items()}
        self._trace = None

    # -- structure ---------------------------------------------------------------
    @property
    def tags(self) -> list:
        """Component tags in order of their lowest cup."""
        out = []
        for e in self.events:
            if e[0] == "cup" and e[2] not in out:
                out.append(e[2])
        return out

    def label(self, tag) -> Label:
        return self.labels.get(tag, Label(0))

    def copy(self, events=None, labels=None, reversed_=None) -> "LinkDiagram":
        return LinkDiagram(list(self.events if events is None else events),
                           dict(self.labels if labels is None else labels),
                           dict(self.reversed if reversed_ is None else reversed_))

    def _graph(self):
        """Edges with their bottom and top endpoints (event, port)."""
        pos: list[int] = []
        bottom: list = []
        top: list = []
        rows: list = []

        def new(end):
            bottom.append(end)
            top.append(None)
            return len(bottom) - 1

        for k, e in enumerate(self.events):
            rows.append(list(pos))
            kind, i = e[0], e[1]
            if kind == "cup":
                if not 0 <= i <= len(pos):
                    raise DiagramError(f"event {k}: cup position {i} out of range")
                pos[i:i] = [new((k, "L")), new((k, "R"))]
            elif kind in ("cap", "cross"):
                if not 0 <= i < len(pos) - 1:
                    raise DiagramError(f"event {k}: {kind} position {i} out of range")
                a, b = pos[i], pos[i + 1]
                if kind == "cap":
                    top[a], top[b] = (k, "L"), (k, "R")
                    del pos[i:i + 2]
                else:
                    if e[2] not in ("L", "R"):
                        raise DiagramError(f"event {k}: crossing needs over 'L' or 'R'")
                    top[a], top[b] = (k, "BL"), (k, "BR")
                    pos[i], pos[i + 1] = new((k, "TL")), new((k, "TR"))
            else:
                raise DiagramError(f"event {k}: unknown kind {kind!r}")
        if pos:
            raise DiagramError(f"{len(pos)} strand(s) left open at the top")
        rows.append([])
        by_bottom = {end: j for j, end in enumerate(bottom)}
        by_top = {end: j for j, end in enumerate(top)}
        self._rows = rows
        return bottom, top, by_bottom, by_top

    def trace(self) -> dict:
        """tag -> list of passages from the base point, in order of travel."""
        if self._trace is not None:
            return self._trace
        bottom, top, by_bottom, by_top = self._graph()
        seen_cups: dict = {}
        out: dict = {}
        edge_info: dict = {}
        for tag in self.tags:
            start = next(k for k, e in enumerate(self.events) if e[0] == "cup" and e[2] == tag)
            rev = self.reversed.get(tag, False)
            # leave the base cup upward on the right edge (left edge if reversed)
            edge, up = by_bottom[(start, "L" if rev else "R")], True
            passages = []
            while True:
                edge_info[edge] = (tag, up)
                k, port = top[edge] if up else bottom[edge]
                kind = self.events[k][0]
                if kind == "cross":
                    over_left = self.events[k][2] == "L"
                    if up:
                        nxt = {"BL": "TR", "BR": "TL"}[port]
                        from_left = port == "BL"
                    else:
                        nxt = {"TR": "BL", "TL": "BR"}[port]
                        from_left = port == "TR"
                    passages.append(Passage(k, "cross", up, over=(from_left == over_left),
                                            from_left=from_left))
                    edge = by_bottom[(k, nxt)] if up else by_top[(k, nxt)]
                elif kind == "cap":
                    rightward = port == "L"
                    passages.append(Passage(k, "cap", up, rightward=rightward))
                    edge, up = by_top[(k, "R" if rightward else "L")], False
                else:
                    ctag = self.events[k][2]
                    if ctag != tag:
                        raise DiagramError(f"cup at event {k} is tagged {ctag!r} but lies on {tag!r}")
                    rightward = port == "L"
                    passages.append(Passage(k, "cup", up, rightward=rightward))
                    seen_cups[k] = tag
                    if k == start:
                        break
                    edge, up = by_bottom[(k, "R" if rightward else "L")], True
            out[tag] = passages
        n_cups = sum(1 for e in self.events if e[0] == "cup")
        if len(seen_cups) != n_cups:
            raise DiagramError("some cups are not reached from their tagged component")
        self._trace = out
        self._levels = [[edge_info[e] for e in row] for row in self._rows]
        return out

    def levels(self) -> list[list[tuple]]:
        """(tag, up) for each strand just below event k; the last row is the top."""
        self.trace()
        return self._levels

    def crossings(self) -> dict:
        """event -> (over tag, over passage, under tag, under passage, sign)."""
        info: dict = {}
        for tag, ps in self.trace().items():
            for p in ps:
                if p.kind == "cross":
                    info.setdefault(p.event, {})["over" if p.over else "under"] = (tag, p)
        out = {}
        for k, d in sorted(info.items()):
            (to, po), (tu, pu) = d["over"], d["under"]
            out[k] = (to, po, tu, pu, crossing_sign(po, pu))
        return out

    # -- linking data ------------------------------------------------------------
    def linking_matrix(self) -> list[list[int]]:
        tags = self.tags
        idx = {t: i for i, t in enumerate(tags)}
        n = len(tags)
        twice = [[0] * n for _ in range(n)]
        for to, _, tu, _, s in self.crossings().values():
            i, j = idx[to], idx[tu]
            if i == j:
                twice[i][i] += 2 * s
            else:
                twice[i][j] += s
                twice[j][i] += s
        return [[v // 2 for v in row] for row in twice]

    def admissibility(self) -> dict:
        """Checks sum_k lk(C_k, C_l) gamma_k = 0 in Q/2Z for every l."""
        L = self.linking_matrix()
        tags = self.tags
        bad = []
        for l, tl in enumerate(tags):
            tot = sum((L[k][l] * self.label(tk).value for k, tk in enumerate(tags)), Fraction(0))
            if Label(tot) != Label(0):
                bad.append({"component": tl, "index": l, "sum": str(Label(tot))})
        return {"ok": not bad, "linking_matrix": L, "failures": bad}

    def is_admissible(self) -> bool:
        return self.admissibility()["ok"]

    # -- serialization -----------------------------------------------------------
    def pd(self) -> dict:
        """PD-style view: edges numbered along components from their base points."""
        trace = self.trace()
        tags = self.tags
        edge_no = 0
        comps = []
        cross_edges: dict = {}
        extrema = []
        for tag in tags:
            ps = trace[tag]
            first = edge_no
            for j, p in enumerate(ps):
                e_in = first + (j - 1) % len(ps) if j else first + len(ps) - 1
                e_out = first + j
                if p.kind == "cross":
                    cross_edges.setdefault(p.event, {})["over" if p.over else "under"] = (e_in, e_out, p.up)
                else:
                    extrema.append({"event": p.event, "kind": "max" if p.kind == "cap" else "min",
                                    "edge": e_in, "direction": "right" if p.rightward else "left"})
            edge_no += len(ps)
            comps.append({"tag": str(tag), "label": str(self.label(tag)),
                          "edges": list(range(first, edge_no))})
        crossings = []
        signs = {k: v[4] for k, v in self.crossings().items()}
        for k in sorted(cross_edges):
            o, u = cross_edges[k]["over"], cross_edges[k]["under"]
            crossings.append({"event": k, "sign": signs[k], "edges": [o[0], o[1], u[0], u[1]],
                              "over_up": o[2], "under_up": u[2]})
        return {"components": comps, "crossings": crossings,
                "extrema": sorted(extrema, key=lambda x: x["event"])}

    def to_json(self) -> dict:
        out = {
            "components": [{"tag": str(t), "label": str(self.label(t)),
                            "reversed": bool(self.reversed.get(t, False))} for t in self.tags],
            "slices": [list(e) for e in self.events],
        }
        out["pd"] = self.pd()
        return out

    @classmethod
    def from_json(cls, data) -> "LinkDiagram":
        """Read ``{"slices": [...], "components": [{"tag", "label", "reversed"}]}``.

        Cup tags may be integers indexing ``components`` or strings matching a
        component ``tag``.  A ``pd`` block, if present, must match the one
        computed from the slices.
        """
        if isinstance(data, str):
            data = json.loads(data)
        if "slices" not in data:
            raise DiagramError("diagram JSON needs a 'slices' list")
        comps = data.get("components", [])
        names = [str(c.get("tag", i)) for i, c in enumerate(comps)]
        events = []
        for k, s in enumerate(data["slices"]):
            if not isinstance(s, list) or not s:
                raise DiagramError(f"slice {k} is not a list")
            kind = s[0]
            if kind == "cup":
                if len(s) != 3:
                    raise DiagramError(f"slice {k}: cup needs [\"cup\", position, component]")
                tag = s[2]
                if isinstance(tag, int) and not isinstance(tag, bool):
                    if not 0 <= tag < len(comps):
                        raise DiagramError(f"slice {k}: component index {tag} out of range")
                    tag = names[tag]
                events.append(("cup", int(s[1]), str(tag)))
            elif kind == "cap":
                events.append(("cap", int(s[1])))
            elif kind == "cross":
                if len(s) != 3:
                    raise DiagramError(f"slice {k}: cross needs [\"cross\", position, \"L\"|\"R\"]")
                events.append(("cross", int(s[1]), str(s[2])))
            else:
                raise DiagramError(f"slice {k}: unknown kind {kind!r}")
        labels, rev = {}, {}
        for name, c in zip(names, comps):
            labels[name] = Label(Fraction(str(c.get("label", "0"))))
            rev[name] = bool(c.get("reversed", False))
        d = cls(events, labels, rev)
        unknown = set(d.tags) - set(names) if comps else set()
        if unknown:
            raise DiagramError(f"cups refer to undeclared components {sorted(unknown)}")
        d.trace()
        if "pd" in data and data["pd"] != d.pd():
            raise DiagramError("the 'pd' block does not match the slices")
        return d


def crossing_sign(over: Passage, under: Passage) -> int:
    """Sign of a crossing from the travel directions of its two strands."""
    def vec(p: Passage):
        dx = 1 if p.from_left else -1
        return (dx, 1) if p.up else (-dx, -1)
    ox, oy = vec(over)
    ux, uy = vec(under)
    return 1 if ox * uy - oy * ux > 0 else -1


# -- builders --------------------------------------------------------------------

def empty() -> LinkDiagram:
    return LinkDiagram([])


def unknot(framing: int = 0, label=0, tag: str = "a", left_curls: bool = False) -> LinkDiagram:
    """Round unknot with |framing| curls of the sign of ``framing``."""
    events = [("cup", 0, tag)]
    for _ in range(abs(framing)):
        events += curl(1, 1 if framing > 0 else -1, tag, left=left_curls)
    events.append(("cap", 0))
    return LinkDiagram(events, {tag: label})


def curl(p: int, sign: int, tag, left: bool = False) -> list:
    """Events adding a writhe-``sign`` curl on the strand at position p."""
    over = "L" if sign > 0 else "R"
    if left:
        return [("cup", p, tag), ("cross", p + 1, over), ("cap", p)]
    return [("cup", p + 1, tag), ("cross", p, over), ("cap", p + 1)]


def braid_closure(n: int, word: list[int], labels=None, tags=None) -> LinkDiagram:
    """Closure of a braid on n strands; generator +i / -i crosses strands i, i+1 (1-based).

    The braid strands run upward on the right; the closing strands run down on
    the left.  Component tags are assigned from ``tags`` (default "a", "b", ...).
    """
    perm = list(range(n))
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < n - 1:
            raise DiagramError(f"braid generator {g} out of range for {n} strands")
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    # cycles of the closure: strand starting at slot s ends at slot end[s]
    end = {perm[j]: j for j in range(n)}
    comp_of, ncomp = {}, 0
    for s in range(n):
        if s in comp_of:
            continue
        j = s
        while j not in comp_of:
            comp_of[j] = ncomp
            j = end[j]
        ncomp += 1
    # renumber components in order of their outermost cup
    order: list = []
    for k in range(n):
        c = comp_of[n - 1 - k]
        if c not in order:
            order.append(c)
    comp_of = {s: order.index(c) for s, c in comp_of.items()}
    names = list(tags) if tags else [chr(ord("a") + c) for c in range(ncomp)]
    events = []
    # nested cups: cup k at position k pairs left slot n-1-k ... built outermost first
    for k in range(n):
        slot = n - 1 - k  # braid slot of the right strand created by this cup
        events.append(("cup", k, names[comp_of[slot]]))
    for g in word:
        events.append(("cross", n + abs(g) - 1, "L" if g > 0 else "R"))
    for k in reversed(range(n)):
        events.append(("cap", k))
    lab = {}
    for c in range(ncomp):
        lab[names[c]] = Label.coerce(labels[c]) if labels else Label(0)
    return LinkDiagram(events, lab)


def hopf_link(sign: int = 1, labels=(0, 0)) -> LinkDiagram:
    return braid_closure(2, [sign, sign], labels)


def admissible_labels(d: LinkDiagram, D: int) -> list[tuple]:
    """All label tuples in (1/D)Z/2Z (component order) making d admissible."""
    L = d.linking_matrix()
    n = len(L)
    sample = [Label(Fraction(k, D)) for k in range(2 * D)]
    out = []
    for combo in itertools.product(sample, repeat=n):
        if all(Label(sum((L[k][l] * combo[k].value for k in range(n)), Fraction(0))) == Label(0)
               for l in range(n)):
            out.append(combo)
    return out


def with_labels(d: LinkDiagram, labels) -> LinkDiagram:
    return d.copy(labels={t: Label.coerce(x) for t, x in zip(d.tags, labels)})


def linking_data(d: LinkDiagram) -> list[list[int]]:
    return d.linking_matrix()


def check_admissible(d: LinkDiagram) -> dict:
    """Per-component admissibility sums; ``first_failure`` names the first bad one."""
    L = d.linking_matrix()
    tags = d.tags
    comps = []
    for l, tl in enumerate(tags):
        tot = Label(sum((L[k][l] * d.label(tk).value for k, tk in enumerate(tags)), Fraction(0)))
        comps.append({"component": str(tl), "label": str(d.label(tl)), "sum": str(tot),
                      "ok": tot.is_zero()})
    bad = [c for c in comps if not c["ok"]]
    return {"ok": not bad, "linking_matrix": L, "components": comps,
            "first_failure": bad[0]["component"] if bad else None}
