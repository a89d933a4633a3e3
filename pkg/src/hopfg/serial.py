"""JSON-friendly views of scalars, elements and tensors."""

from __future__ import annotations

from hopfg.hopf import AlgElem, Tensor
from hopfg.scalars import CycScalar


def scalar_json(c: CycScalar, digits: int = 12) -> dict:
    z = c.to_complex()
    return {
        "coeffs": [str(x) for x in c.coefficients()],
        "approx": [round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0],
    }


def piece_json(piece) -> list[str]:
    low, up = piece
    return [str(low), str(up)]


def value_json(x) -> object:
    """Serialize a scalar, element, tensor or label tuple deterministically."""
    if x is None:
        return None
    if isinstance(x, CycScalar):
        return scalar_json(x)
    if isinstance(x, AlgElem):
        terms = sorted(x.coeffs.items())
        return {"piece": piece_json(x.piece),
                "terms": [[list(k), scalar_json(c)] for k, c in terms]}
    if isinstance(x, Tensor):
        terms = sorted(x.coeffs.items())
        return {"pieces": [piece_json(p) for p in x.pieces],
                "terms": [[[list(k) for k in key], scalar_json(c)] for key, c in terms]}
    if isinstance(x, (list, tuple)):
        return [value_json(y) for y in x]
    return str(x)
