"""Generator words for morphisms of the labeled top tangle category.

Grammar (s-expressions)::

    E   := (id OBJ) | (gen KIND LABEL...) | (braid OBJ OBJ)
         | (compose E E) | (tensor E E)
    OBJ := ((a b) (a b) ...)

``(compose f g)`` means f after g.  Labels are exact rationals ``p/q``,
read modulo 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from hopfg.labels import Label

Obj = tuple  # tuple of (Label, Label)

# kind -> number of label parameters
GEN_ARITY = {
    "mu": 3, "eta": 1, "delta": 3, "eps": 1, "S": 2, "Sinv": 2,
    "v": 1, "vinv": 1, "lambda": 1,
}


class ExprError(ValueError):
    """Syntax or type error, with an optional source position."""

    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.line, self.col = line, col
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(msg + where)


@dataclass(frozen=True)
class Id:
    obj: Obj


@dataclass(frozen=True)
class Gen:
    kind: str
    labels: tuple


@dataclass(frozen=True)
class Braid:
    left: Obj
    right: Obj


@dataclass(frozen=True)
class Compose:
    outer: object
    inner: object


@dataclass(frozen=True)
class TensorE:
    left: object
    right: object


# -- signatures ----------------------------------------------------------------

def gen_signature(kind: str, labels: tuple) -> tuple[Obj, Obj]:
    """Source and target objects of a generator."""
    zero = Label(0)
    if kind == "mu":
        a, b, c = labels
        return ((a, b), (a, c)), ((a, b + c),)
    if kind == "eta":
        (a,) = labels
        return (), ((a, zero),)
    if kind == "delta":
        a, b, c = labels
        return ((a + b, c),), ((a, c), (b, c))
    if kind == "eps":
        (a,) = labels
        return ((zero, a),), ()
    if kind in ("S", "Sinv"):
        a, b = labels
        return ((a, b),), ((-a, -b),)
    if kind == "v":
        (a,) = labels
        return (), ((a, -a),)
    if kind == "vinv":
        (a,) = labels
        return (), ((a, a),)
    if kind == "lambda":
        (a,) = labels
        return ((a, zero),), ()
    raise ExprError(f"unknown generator kind {kind!r}")


@dataclass
class ValidationReport:
    ok: bool
    source: Obj | None = None
    target: Obj | None = None
    nodes: list = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "source": obj_json(self.source) if self.source is not None else None,
            "target": obj_json(self.target) if self.target is not None else None,
            "nodes": self.nodes,
            "error": self.error,
        }


def obj_json(obj: Obj) -> list:
    return [[str(a), str(b)] for a, b in obj]


def infer(e, path: str = "root", nodes: list | None = None) -> tuple[Obj, Obj]:
    """Source and target of e; raises ExprError naming the bad node."""
    if isinstance(e, Id):
        s = t = e.obj
    elif isinstance(e, Gen):
        s, t = gen_signature(e.kind, e.labels)
    elif isinstance(e, Braid):
        s, t = e.left + e.right, e.right + e.left
    elif isinstance(e, Compose):
        s1, t1 = infer(e.outer, path + ".outer", nodes)
        s2, t2 = infer(e.inner, path + ".inner", nodes)
        if t2 != s1:
            raise ExprError(f"composition mismatch at {path}: inner target "
                            f"{obj_text(t2)} != outer source {obj_text(s1)}")
        s, t = s2, t1
    elif isinstance(e, TensorE):
        s1, t1 = infer(e.left, path + ".left", nodes)
        s2, t2 = infer(e.right, path + ".right", nodes)
        s, t = s1 + s2, t1 + t2
    else:
        raise ExprError(f"not an expression: {e!r}")
    if nodes is not None:
        nodes.append({"node": path, "source": obj_json(s), "target": obj_json(t)})
    return s, t


def typecheck(e) -> ValidationReport:
    nodes: list = []
    try:
        s, t = infer(e, "root", nodes)
    except ExprError as exc:
        return ValidationReport(False, nodes=nodes, error=str(exc))
    return ValidationReport(True, s, t, nodes)


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def _tokens(text: str):
    line, col0, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        chunk = text[pos:start]
        for ch_i, ch in enumerate(chunk):
            if ch == "\n":
                line, col0 = line + 1, pos + ch_i + 1
        if m.lastindex is None:
            break
        yield m.group(m.lastindex), line, start - col0 + 1
        pos = m.end()


def _read(text: str):
    """Nested lists of (token, line, col) atoms."""
    stack: list = [[]]
    opens: list = []
    for tok, line, col in _tokens(text):
        if tok == "(":
            stack.append([])
            opens.append((line, col))
        elif tok == ")":
            if len(stack) == 1:
                raise ExprError("unexpected ')'", line, col)
            done = stack.pop()
            stack[-1].append((done, opens.pop()))
        else:
            stack[-1].append((tok, (line, col)))
    if opens:
        raise ExprError("unclosed '('", *opens[-1])
    if len(stack[0]) != 1:
        if not stack[0]:
            raise ExprError("empty input")
        raise ExprError("trailing input after expression", *stack[0][1][1])
    return stack[0][0]


def _label(atom) -> Label:
    tok, pos = atom
    if isinstance(tok, list):
        raise ExprError("expected a label", *pos)
    try:
        return Label(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise ExprError(f"bad label {tok!r}", *pos) from None


def _obj(node) -> Obj:
    items, pos = node
    if not isinstance(items, list):
        raise ExprError("expected an object ((a b) ...)", *pos)
    out = []
    for item in items:
        pair, ppos = item
        if not isinstance(pair, list) or len(pair) != 2:
            raise ExprError("object entries are pairs (a b)", *ppos)
        out.append((_label(pair[0]), _label(pair[1])))
    return tuple(out)


def _expr(node):
    items, pos = node
    if not isinstance(items, list) or not items:
        raise ExprError("expected an expression", *pos)
    head, hpos = items[0]
    args = items[1:]

    def need(n):
        if len(args) != n:
            raise ExprError(f"{head} takes {n} argument(s), got {len(args)}", *hpos)

    if head == "id":
        need(1)
        return Id(_obj(args[0]))
    if head == "braid":
        need(2)
        return Braid(_obj(args[0]), _obj(args[1]))
    if head == "compose":
        need(2)
        return Compose(_expr(args[0]), _expr(args[1]))
    if head == "tensor":
        need(2)
        return TensorE(_expr(args[0]), _expr(args[1]))
    if head == "gen":
        if not args or isinstance(args[0][0], list):
            raise ExprError("gen needs a kind", *hpos)
        kind, kpos = args[0]
        if kind not in GEN_ARITY:
            raise ExprError(f"unknown generator kind {kind!r}", *kpos)
        labels = args[1:]
        if len(labels) != GEN_ARITY[kind]:
            raise ExprError(f"{kind} takes {GEN_ARITY[kind]} label(s), got {len(labels)}", *kpos)
        return Gen(kind, tuple(_label(x) for x in labels))
    raise ExprError(f"unknown form {head!r}", *hpos)


def parse_expr(text: str):
    return _expr(_read(text))


# -- printing ------------------------------------------------------------------

def obj_text(obj: Obj) -> str:
    return "(" + " ".join(f"({a} {b})" for a, b in obj) + ")"


def to_text(e) -> str:
    if isinstance(e, Id):
        return f"(id {obj_text(e.obj)})"
    if isinstance(e, Gen):
        return "(gen " + " ".join([e.kind] + [str(x) for x in e.labels]) + ")"
    if isinstance(e, Braid):
        return f"(braid {obj_text(e.left)} {obj_text(e.right)})"
    if isinstance(e, Compose):
        return f"(compose {to_text(e.outer)} {to_text(e.inner)})"
    if isinstance(e, TensorE):
        return f"(tensor {to_text(e.left)} {to_text(e.right)})"
    raise ExprError(f"not an expression: {e!r}")
