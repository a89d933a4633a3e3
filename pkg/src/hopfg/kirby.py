"""Kirby moves on labeled Morse diagrams.

K1 deletes a label-0 component together with an unknotted 0-framed meridian
of it, and ``k1_insert`` is its inverse.  K2 slides one component over a
blackboard push-off of another along a short band.  K3 reverses a component
and negates its label.  ``blow_up`` adds a split (+-1)-framed unknot; it is
not an invariance move (see ``blow_up``).
"""

from __future__ import annotations

import random

from hopfg.diagram import DiagramError, LinkDiagram, admissible_labels, braid_closure, curl
from hopfg.labels import Label


def _fresh(used, stem: str) -> str:
    k = 0
    while f"{stem}{k}" in used:
        k += 1
    return f"{stem}{k}"


# -- K3 ----------------------------------------------------------------------------

def k3(d: LinkDiagram, tag) -> LinkDiagram:
    """Reverse the orientation of one component and negate its label."""
    if tag not in d.tags:
        raise DiagramError(f"no component {tag!r}")
    labels = dict(d.labels)
    labels[tag] = -d.label(tag)
    rev = dict(d.reversed)
    rev[tag] = not rev.get(tag, False)
    return d.copy(labels=labels, reversed_=rev)


# -- deleting components -----------------------------------------------------------

def delete_components(d: LinkDiagram, tags) -> LinkDiagram:
    """Drop whole components, with every crossing they take part in."""
    drop = set(tags)
    levels = d.levels()
    events = []
    for k, e in enumerate(d.events):
        row = [t for t, _ in levels[k]]
        if e[0] == "cup":
            if e[2] not in drop:
                events.append(("cup", sum(1 for t in row[:e[1]] if t not in drop), e[2]))
            continue
        i = e[1]
        if row[i] in drop or row[i + 1] in drop:
            continue
        events.append((e[0], sum(1 for t in row[:i] if t not in drop)) + tuple(e[2:]))
    return LinkDiagram(events, {t: v for t, v in d.labels.items() if t not in drop},
                       {t: v for t, v in d.reversed.items() if t not in drop})


# -- K1 ----------------------------------------------------------------------------

def k1_sites(d: LinkDiagram) -> list[tuple]:
    """Pairs (K, C): C is a crossing-free-but-for-K meridian of K, K has label 0."""
    tags = d.tags
    cups = {t: sum(1 for e in d.events if e[0] == "cup" and e[2] == t) for t in tags}
    touching: dict = {t: [] for t in tags}
    for to, po, tu, pu, s in d.crossings().values():
        touching[to].append((tu, po.over, s))
        touching[tu].append((to, pu.over, s))
    out = []
    for c in tags:
        cr = touching[c]
        if cups[c] != 1 or len(cr) != 2:
            continue
        (k1, o1, s1), (k2, o2, s2) = cr
        if k1 != k2 or k1 == c or o1 == o2 or s1 != s2:
            continue
        if d.label(k1).is_zero():
            out.append((k1, c))
    return out


def k1(d: LinkDiagram, site: tuple | None = None) -> LinkDiagram:
    """Delete a label-0 component K and its meridian C."""
    sites = k1_sites(d)
    if not sites:
        raise DiagramError("no K1 site: need a label-0 component with a 0-framed meridian")
    if site is None:
        site = sites[0]
    elif tuple(site) not in sites:
        raise DiagramError(f"{site!r} is not a K1 site")
    return delete_components(d, site)


def k1_insert(d: LinkDiagram, level: int, position: int) -> LinkDiagram:
    """Put a label-0 unknot K around one strand and a meridian C around K.

    The label of C is fixed by admissibility of K.
    """
    if not d.is_admissible():
        raise DiagramError("k1_insert needs an admissible diagram")
    row = d.levels()[level]
    if not 0 <= position < len(row):
        raise DiagramError("no strand at that position")
    p = position
    used = set(d.tags) | set(d.labels)
    kt = _fresh(used, "k")
    ct = _fresh(used | {kt}, "c")
    new = [
        ("cup", p + 1, kt), ("cross", p, "L"), ("cross", p + 1, "R"),
        ("cup", p + 2, ct), ("cross", p + 1, "L"), ("cross", p + 2, "R"),
        ("cap", p + 1), ("cap", p),
    ]
    events = d.events[:level] + new + d.events[level:]
    labels = {**d.labels, kt: Label(0), ct: Label(0)}
    out = LinkDiagram(events, labels, dict(d.reversed))
    L = out.linking_matrix()
    idx = {t: i for i, t in enumerate(out.tags)}
    s = row[p][0]
    lk_sk, lk_ck = L[idx[s]][idx[kt]], L[idx[ct]][idx[kt]]
    labels[ct] = Label(-lk_sk * lk_ck * d.label(s).value)
    out = LinkDiagram(events, labels, dict(d.reversed))
    assert out.is_admissible()
    return out


# -- K2 ----------------------------------------------------------------------------

def k2_sites(d: LinkDiagram) -> list[tuple]:
    """(i, j, level, position of C_i) with C_i and C_j adjacent at that level."""
    out = []
    for k, row in enumerate(d.levels()):
        for p in range(len(row) - 1):
            a, b = row[p][0], row[p + 1][0]
            if a != b:
                out.append((a, b, k, p))
                out.append((b, a, k, p + 1))
    return out


def k2(d: LinkDiagram, i, j, level: int, position: int) -> LinkDiagram:
    """Slide C_i over C_j along a band at the given level.

    ``position`` is the slot of C_i's strand; C_j's strand must be next to it.
    The new component keeps the tag of C_i; gamma_j becomes gamma_j - eps gamma_i,
    where eps = +1 when the band joins C_i to a parallel copy of C_j.
    """
    levels = d.levels()
    row = levels[level]
    if not 0 <= position < len(row) or row[position][0] != i:
        raise DiagramError("position does not hold a strand of the sliding component")
    if position + 1 < len(row) and row[position + 1][0] == j:
        q, copy_abs_left = position + 1, True
    elif position > 0 and row[position - 1][0] == j:
        q, copy_abs_left = position - 1, False
    else:
        raise DiagramError("the two components are not adjacent there")
    up_j = row[q][1]
    copy_left_of_travel = copy_abs_left == up_j
    eps = 1 if row[position][1] != up_j else -1

    def expand(up: bool) -> list[str]:
        left = copy_left_of_travel == up
        return ["copy", "orig"] if left else ["orig", "copy"]

    events = []
    band_at = None
    for k, e in enumerate(d.events):
        lrow = levels[k]
        width = [2 if t == j else 1 for t, _ in lrow]

        def start(x):
            return sum(width[:x])

        if k == level:
            band_at = len(events)
            # mark the band position in the doubled row
            new_pos = start(position)
            new_q = start(q) + expand(up_j).index("copy")
            band_pos = min(new_pos, new_q)
        kind, x = e[0], e[1]
        if kind == "cup":
            if e[2] == j:
                up_left = levels[k + 1][x][1]
                lo = expand(up_left)
                outer = "orig" if lo[0] == "orig" else "copy"
                P = start(x)
                events.append(("cup", P, i if outer == "copy" else j))
                events.append(("cup", P + 1, j if outer == "copy" else i))
            else:
                events.append(("cup", start(x), e[2]))
        elif kind == "cap":
            if lrow[x][0] == j:
                P = start(x)
                events.append(("cap", P + 1))
                events.append(("cap", P))
            else:
                events.append(("cap", start(x)))
        else:
            flag = e[2]
            P = start(x)
            a_double, b_double = lrow[x][0] == j, lrow[x + 1][0] == j
            if a_double and b_double:
                events += [("cross", P + 1, flag), ("cross", P, flag),
                           ("cross", P + 2, flag), ("cross", P + 1, flag)]
            elif a_double:
                events += [("cross", P + 1, flag), ("cross", P, flag)]
            elif b_double:
                events += [("cross", P, flag), ("cross", P + 1, flag)]
            else:
                events.append(("cross", P, flag))
    events[band_at:band_at] = [("cap", band_pos), ("cup", band_pos, i)]
    labels = dict(d.labels)
    labels[j] = Label(d.label(j).value - eps * d.label(i).value)
    rev = dict(d.reversed)
    out = LinkDiagram(events, labels, rev)
    # keep C_i's original direction on its untouched passages
    before = {p.event: p for p in d.trace()[i] if p.kind == "cup"}
    probe = min(before)
    new_index = _event_map(d, j)[probe]
    if band_at <= new_index:
        new_index += 2
    now = {p.event: p for p in out.trace()[i] if p.kind == "cup"}
    if now[new_index].rightward != before[probe].rightward:
        rev[i] = not rev.get(i, False)
        out = LinkDiagram(events, labels, rev)
    _check_slide(d, out, i, j, eps)
    return out


def _event_map(d: LinkDiagram, j) -> dict:
    """Old event index -> index of its first image in the doubled word."""
    levels = d.levels()
    out, n = {}, 0
    for k, e in enumerate(d.events):
        out[k] = n
        if e[0] == "cup":
            n += 2 if e[2] == j else 1
        elif e[0] == "cap":
            n += 2 if levels[k][e[1]][0] == j else 1
        else:
            c = (levels[k][e[1]][0] == j) + (levels[k][e[1] + 1][0] == j)
            n += (1, 2, 4)[c]
    return out


def _check_slide(d: LinkDiagram, out: LinkDiagram, i, j, eps: int) -> None:
    L = d.linking_matrix()
    idx = {t: n for n, t in enumerate(d.tags)}
    n = len(L)
    P = [[int(a == b) for b in range(n)] for a in range(n)]
    P[idx[i]][idx[j]] = eps
    PL = [[sum(P[a][k] * L[k][b] for k in range(n)) for b in range(n)] for a in range(n)]
    want = [[sum(PL[a][k] * P[b][k] for k in range(n)) for b in range(n)] for a in range(n)]
    got_idx = {t: n2 for n2, t in enumerate(out.tags)}
    G = out.linking_matrix()
    got = [[G[got_idx[a]][got_idx[b]] for b in d.tags] for a in d.tags]
    if got != want:
        raise AssertionError(f"handle slide gave linking matrix {got}, expected {want}")


# -- blow-up (not an invariance move) ------------------------------------------------

def blow_up(d: LinkDiagram, sign: int) -> LinkDiagram:
    """Add a split unknot of framing sign and label 0 at the right of the diagram.

    The value changes by the factor lambda(v^{-sign}); the invariant is not
    normalized against the signature of the linking matrix.
    """
    tag = _fresh(set(d.tags) | set(d.labels), "u")
    events = list(d.events) + [("cup", 0, tag)] + curl(1, sign, tag) + [("cap", 0)]
    return LinkDiagram(events, {**d.labels, tag: Label(0)}, dict(d.reversed))


# -- random admissible diagrams ------------------------------------------------------

def random_diagram(rng: random.Random, D: int = 4, strands: int = 2, max_len: int = 4,
                   max_curls: int = 1, min_components: int = 2) -> LinkDiagram:
    """A braid closure with extra curls and a random admissible labeling.

    Labelings with some nonzero label are preferred when they exist.
    """
    while True:
        n = rng.randint(2, strands)
        word = [rng.choice([1, -1]) * rng.randint(1, n - 1)
                for _ in range(rng.randint(1, max_len))]
        d = braid_closure(n, word)
        if len(d.tags) < min_components:
            continue
        for _ in range(rng.randint(0, max_curls)):
            k = rng.randrange(1, len(d.events))
            row = d.levels()[k]
            if not row:
                continue
            p = rng.randrange(len(row))
            sign = rng.choice([1, -1])
            left = rng.random() < 0.5
            d = d.copy(events=d.events[:k] + curl(p, sign, row[p][0], left=left) + d.events[k:])
        choices = admissible_labels(d, D)
        nonzero = [c for c in choices if any(not x.is_zero() for x in c)]
        pick = rng.choice(nonzero or choices)
        labels = {t: x for t, x in zip(d.tags, pick)}
        return d.copy(labels=labels)


def kirby_rewrite(d: LinkDiagram, move: str, site) -> LinkDiagram:
    """Dispatch one move.

    K1: ``("delete", K, C)`` or ``("insert", level, position)``.
    K2: ``(i, j, level, position)``.  K3: a component tag.
    """
    if move == "K1":
        kind, *rest = site
        if kind == "delete":
            return k1(d, tuple(rest))
        if kind == "insert":
            return k1_insert(d, *rest)
        raise DiagramError(f"unknown K1 site kind {kind!r}")
    if move == "K2":
        return k2(d, *site)
    if move == "K3":
        return k3(d, site)
    raise DiagramError(f"unknown move {move!r}")
