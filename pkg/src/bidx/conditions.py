"""Grid certificate for the dominating-vertex sufficient conditions.

For an extension f of psi, two differences are examined at every integer
tuple with ``x >= c > t >= 1``, ``c >= 2``, ``y >= 1``:

    delta1 = f(x+t, y) - f(x, y) + f(c-t, y) - f(c, y)
    delta2 = f(x+t, c-t) - f(x, c)

MAX mode needs both non-negative and either f strictly increasing in each
argument, or f weakly increasing with delta1 or delta2 positive at every
tuple.  MIN mode mirrors this with signs reversed.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .indices import IndexSpec

SIGN_TOL = 1e-12

STRICT_MONOTONE = "STRICT_MONOTONE"
WEAK_WITH_POSITIVE_DELTA = "WEAK_WITH_POSITIVE_DELTA"
FAILED = "FAILED"


@dataclass(frozen=True)
class Counterexample:
    """Offending point.  ``kind`` is ``delta1``, ``delta2``, ``no_strict_delta``
    (weakly monotone f with both differences zero) or ``monotone``
    (a unit step of f with the wrong sign; ``point`` is then ``(x, y, axis)``).
    """

    kind: str
    point: tuple
    values: dict = field(default_factory=dict)


@dataclass
class ConditionReport:
    spec_label: str
    mode: str
    grid_bound: int
    monotone_ok: bool
    delta1_ok: bool
    delta2_ok: bool
    strictness: str
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.strictness != FAILED

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _f(spec: IndexSpec, x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    k = spec.kind
    if k == "CHI":
        return (x + y) ** spec.param
    if k == "PL":
        base = x + y - 2
        if spec.param < 0 and np.any(base == 0):
            raise ValueError("PL with negative exponent is undefined at d_u + d_v = 2")
        return base ** spec.param
    if k == "SEI":
        return spec.param ** x + spec.param ** y
    if k == "M1":
        return x + y
    if k == "PLATT":
        return x + y - 2
    return np.vectorize(spec.custom_psi, otypes=[float])(x, y)


def _h(spec: IndexSpec, x):
    return spec.param ** np.asarray(x, dtype=float)


def deltas(spec: IndexSpec, x, c, t, y):
    """``(delta1, delta2)`` at the given tuple(s)."""
    if spec.kind == "SEI":
        # psi = h(x) + h(y): the y terms cancel exactly, so drop them before
        # they swamp the difference in floating point
        d1 = _h(spec, x + t) - _h(spec, x) + _h(spec, c - t) - _h(spec, c)
        d2 = _h(spec, x + t) + _h(spec, c - t) - _h(spec, x) - _h(spec, c)
        return d1, d2
    d1 = _f(spec, x + t, y) - _f(spec, x, y) + _f(spec, c - t, y) - _f(spec, c, y)
    d2 = _f(spec, x + t, c - t) - _f(spec, x, c)
    return d1, d2


def _grid(n: int):
    """All (x, c, t, y) tuples, in lexicographic order."""
    rows = [(x, c, t) for x in range(2, n + 1) for c in range(2, x + 1) for t in range(1, c)]
    xct = np.array(rows, dtype=np.int64)
    ys = np.arange(1, n + 1, dtype=np.int64)
    x = np.repeat(xct[:, 0], n)
    c = np.repeat(xct[:, 1], n)
    t = np.repeat(xct[:, 2], n)
    y = np.tile(ys, len(xct))
    return x, c, t, y


def check_conditions(spec: IndexSpec, mode: str = "MAX", grid_bound: int = 50) -> ConditionReport:
    mode = mode.upper()
    if mode not in ("MAX", "MIN"):
        raise ValueError(f"mode must be MAX or MIN, got {mode!r}")
    if grid_bound < 3:
        raise ValueError(f"grid_bound must be >= 3, got {grid_bound}")
    sign = 1.0 if mode == "MAX" else -1.0
    n = grid_bound

    x, c, t, y = _grid(n)
    d1, d2 = deltas(spec, x, c, t, y)
    s1, s2 = sign * d1, sign * d2
    bad1 = s1 <= -SIGN_TOL
    bad2 = s2 <= -SIGN_TOL
    delta1_ok = not bad1.any()
    delta2_ok = not bad2.any()

    # unit steps of f along each axis on [1, n]
    a = np.arange(1, n, dtype=np.int64)
    b = np.arange(1, n + 1, dtype=np.int64)
    A, B = np.meshgrid(a, b, indexing="ij")
    step_x = sign * _step(spec, A, B, "x")
    step_y = sign * _step(spec, A, B, "y")
    strict = bool((step_x > 0).all() and (step_y > 0).all())
    weak = bool((step_x > -SIGN_TOL).all() and (step_y > -SIGN_TOL).all())
    no_positive = ~((s1 >= SIGN_TOL) | (s2 >= SIGN_TOL))

    cex = None
    candidates = []
    if not delta1_ok:
        i = int(np.flatnonzero(bad1)[0])
        candidates.append((x[i], c[i], t[i], y[i], "delta1", i))
    if not delta2_ok:
        i = int(np.flatnonzero(bad2)[0])
        candidates.append((x[i], c[i], t[i], y[i], "delta2", i))
    if candidates:
        *pt, kind, i = min(candidates)
        cex = Counterexample(kind, tuple(int(v) for v in pt), {"delta1": float(d1[i]), "delta2": float(d2[i])})

    if strict:
        monotone_ok, strictness = True, STRICT_MONOTONE
    elif weak and not no_positive.any():
        monotone_ok, strictness = True, WEAK_WITH_POSITIVE_DELTA
    else:
        monotone_ok, strictness = False, FAILED
        if cex is None:
            if not weak:
                cex = _monotone_counterexample(step_x, step_y, A, B)
            else:
                i = int(np.flatnonzero(no_positive)[0])
                cex = Counterexample("no_strict_delta", (int(x[i]), int(c[i]), int(t[i]), int(y[i])),
                                     {"delta1": float(d1[i]), "delta2": float(d2[i])})
    if not (delta1_ok and delta2_ok):
        strictness = FAILED
    return ConditionReport(spec.label, mode, n, monotone_ok, delta1_ok, delta2_ok, strictness, cex)


def _step(spec: IndexSpec, p, q, axis: str):
    """f(p+1, q) - f(p, q) along ``x``, or f(q, p+1) - f(q, p) along ``y``."""
    if spec.kind == "SEI":
        return np.broadcast_to(_h(spec, p + 1) - _h(spec, p), np.broadcast(p, q).shape)
    if axis == "x":
        return _f(spec, p + 1, q) - _f(spec, p, q)
    return _f(spec, q, p + 1) - _f(spec, q, p)


def _monotone_counterexample(step_x, step_y, A, B) -> Counterexample:
    found = []
    for axis, steps in (("x", step_x), ("y", step_y)):
        idx = np.argwhere(steps <= -SIGN_TOL)
        if len(idx):
            i, j = idx[0]
            found.append((int(A[i, j]), int(B[i, j]), axis, float(steps[i, j])))
    if not found:
        # weak monotonicity held but strictness failed with a zero step
        for axis, steps in (("x", step_x), ("y", step_y)):
            idx = np.argwhere(steps <= 0)
            if len(idx):
                i, j = idx[0]
                found.append((int(A[i, j]), int(B[i, j]), axis, float(steps[i, j])))
    p, q, axis, val = min(found)
    return Counterexample("monotone", (p, q, axis), {"step": val})


def replay(spec: IndexSpec, mode: str, cex: Counterexample) -> bool:
    """True when the counterexample still violates the mode's sign requirement."""
    sign = 1.0 if mode.upper() == "MAX" else -1.0
    if cex.kind == "monotone":
        p, q, axis = cex.point
        step = _step(spec, p, q, axis)
        return bool(sign * step <= 0)
    d1, d2 = deltas(spec, *(np.int64(v) for v in cex.point))
    if cex.kind == "delta1":
        return bool(sign * d1 <= -SIGN_TOL)
    if cex.kind == "delta2":
        return bool(sign * d2 <= -SIGN_TOL)
    return bool(sign * d1 < SIGN_TOL and sign * d2 < SIGN_TOL)
