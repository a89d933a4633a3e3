"""Sparse exact linear algebra over a CycField."""

from __future__ import annotations

from typing import Hashable, Sequence

from hopfg.scalars import CycField


def solve(field: CycField, unknowns: Sequence[Hashable], columns: Sequence[dict],
          rhs: dict) -> dict | None:
    """Solve sum_j x_j * columns[j] = rhs; return {unknown: value} or None.

    Columns and rhs are sparse vectors (row key -> scalar).  Gaussian
    elimination on the augmented system, rows eliminated in insertion order.
    """
    rows: dict = {}
    for j, col in enumerate(columns):
        for key, c in col.items():
            rows.setdefault(key, {})[j] = c
    for key, c in rhs.items():
        rows.setdefault(key, {})["rhs"] = c
    eqs = [row for row in rows.values() if row]
    pivots: list[tuple[int, dict]] = []
    for eq in eqs:
        for pj, prow in pivots:
            c = eq.get(pj)
            if c is None:
                continue
            for k, v in prow.items():
                nv = eq.get(k, field.zero) - c * v
                if nv.is_zero():
                    eq.pop(k, None)
                else:
                    eq[k] = nv
        cols = [k for k in eq if k != "rhs"]
        if not cols:
            if "rhs" in eq:
                return None
            continue
        pj = min(cols)
        inv = eq[pj].inverse()
        prow = {k: v * inv for k, v in eq.items()}
        # keep earlier pivot rows reduced
        for _, qrow in pivots:
            c = qrow.get(pj)
            if c is None:
                continue
            for k, v in prow.items():
                nv = qrow.get(k, field.zero) - c * v
                if nv.is_zero():
                    qrow.pop(k, None)
                else:
                    qrow[k] = nv
        pivots.append((pj, prow))
    # rows are fully reduced, so setting free variables to zero leaves x_pj = rhs
    sol = {unknowns[pj]: prow.get("rhs", field.zero) for pj, prow in pivots}
    return {k: v for k, v in sol.items() if not v.is_zero()}
