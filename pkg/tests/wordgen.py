"""Random well-typed generator words over small objects."""

import random

from hopfg.expr import Braid, Compose, Gen, Id, TensorE, gen_signature
from hopfg.labels import Label

LOWERS = [Label(0), Label("1/2"), Label(1), Label("3/2")]
UPPERS = [Label(0), Label("1/4"), Label("1/2")]


def _wrap(core, left, right):
    e = core
    if left:
        e = TensorE(Id(tuple(left)), e)
    if right:
        e = TensorE(e, Id(tuple(right)))
    return e


def _moves(obj, max_slots):
    out = []
    for i, (a, b) in enumerate(obj):
        for kind in ("S", "Sinv"):
            out.append((i, 1, Gen(kind, (a, b))))
        if len(obj) < max_slots:
            for a1 in LOWERS:
                out.append((i, 1, Gen("delta", (a1, a - a1, b))))
        if a.is_zero() and len(obj) > 1:
            out.append((i, 1, Gen("eps", (b,))))
        if b.is_zero() and len(obj) > 1:
            out.append((i, 1, Gen("lambda", (a,))))
    for i in range(len(obj) - 1):
        (a, b), (a2, c) = obj[i], obj[i + 1]
        if a == a2:
            out.append((i, 2, Gen("mu", (a, b, c))))
        out.append((i, 2, Braid((obj[i],), (obj[i + 1],))))
    if len(obj) < max_slots:
        for a in LOWERS:
            for kind in ("eta", "v", "vinv"):
                for i in range(len(obj) + 1):
                    out.append((i, 0, Gen(kind, (a,))))
    return out


def _target(core):
    if isinstance(core, Braid):
        return core.right + core.left
    return gen_signature(core.kind, core.labels)[1]


def random_word(rng: random.Random, source, steps: int, max_slots: int = 2):
    """A composite of ``steps`` generator moves starting at ``source``."""
    obj = tuple(source)
    word = Id(obj) if obj else None
    for _ in range(steps):
        i, width, core = rng.choice(_moves(obj, max_slots))
        step = _wrap(core, obj[:i], obj[i + width:])
        word = step if word is None else Compose(step, word)
        obj = obj[:i] + tuple(_target(core)) + obj[i + width:]
    return word, obj


def random_object(rng: random.Random, slots: int):
    return tuple((rng.choice(LOWERS), rng.choice(UPPERS)) for _ in range(slots))


def check_compose(W, f, g, rng: random.Random, probes: int = 8) -> bool:
    """M(f . g) against applying M(g) then M(f) to sampled basis vectors."""
    from hopfg.expr import Compose as C
    from hopfg.hopf import Tensor

    H = W.H
    fg = W.evaluate(C(f, g))
    mf, mg = W.evaluate(f), W.evaluate(g)
    if fg != mf.compose(mg):
        return False
    keys = list(mg.source_keys())
    for key in rng.sample(keys, min(probes, len(keys))):
        e = Tensor(mg.src_pieces, {key: H.field.one})
        if fg.apply(e) != mf.apply(mg.apply(e)):
            return False
    return True


def check_tensor(W, f, g, rng: random.Random, probes: int = 8) -> bool:
    """M(f (x) g) on pure tensors against M(f)(s) (x) M(g)(t)."""
    from hopfg.expr import TensorE as T
    from hopfg.hopf import Tensor, tensor_of

    H = W.H
    m = W.evaluate(T(f, g))
    mf, mg = W.evaluate(f), W.evaluate(g)
    if m != mf.tensor(mg):
        return False
    k1, k2 = list(mf.source_keys()), list(mg.source_keys())
    for _ in range(probes):
        a, b = rng.choice(k1), rng.choice(k2)
        s = Tensor(mf.src_pieces, {a: H.field.one})
        t = Tensor(mg.src_pieces, {b: H.field.one})
        if m.apply(tensor_of(s, t)) != tensor_of(mf.apply(s), mg.apply(t)):
            return False
    return True
