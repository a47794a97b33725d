"""White-noise sweeps over a state family: CSV rows, detection thresholds, crossovers."""

from __future__ import annotations

import csv
import io
from dataclasses import astuple, dataclass, fields
from typing import Callable, Sequence

import numpy as np

from . import bounds
from .config import Tolerances, resolve
from .qstate import MultipartiteState, dct_state, ghz, product_zero, white_noise_mix

FAMILIES = ("ghz", "dct", "product")
BOUND_NAMES = ("eq12", "eq13")

# One weight choice (lam0+, lam0-, lam1, lam2, lam3) whose noiseless lower
# bound is 1/3 and whose detection threshold is x = 3/7.
DCT_EXAMPLE_WEIGHTS = (1 / 2, 1 / 6, 0.0, 1 / 12, 1 / 12)


class SweepError(ValueError):
    pass


@dataclass(frozen=True)
class SweepRow:
    x: float
    lower_eq12: float
    lower_eq13: float
    upper_eq13: float
    upper_eq14: float
    b1: float
    b2: float
    b3: float


CSV_HEADER = tuple(f.name for f in fields(SweepRow))


def family_state(family: str, n: int = 3, weights: Sequence[float] | None = None) -> MultipartiteState:
    """The noiseless member of a builtin family."""
    if family == "ghz":
        return ghz(n).density()
    if family == "product":
        return product_zero(n).density()
    if family == "dct":
        if weights is None:
            weights = DCT_EXAMPLE_WEIGHTS
        if len(weights) != 5:
            raise SweepError(f"dct family needs 5 weights, got {len(weights)}")
        w = [float(v) for v in weights]
        return dct_state(w[0], w[1], w[2:])
    raise SweepError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def sweep_row(base: MultipartiteState, x: float, tol: Tolerances | None = None) -> SweepRow:
    rep = bounds.report(white_noise_mix(base, x), tol)
    return SweepRow(
        x=x,
        lower_eq12=rep.lower_eq12,
        lower_eq13=rep.lower_eq13,
        upper_eq13=rep.upper_eq13,
        upper_eq14=rep.upper_eq14,
        b1=max(c.b1 for c in rep.per_cut),
        b2=max(c.b2 for c in rep.per_cut),
        b3=max(c.b3 for c in rep.per_cut),
    )


def grid(xmin: float, xmax: float, steps: int) -> list[float]:
    if not (0.0 <= xmin < xmax <= 1.0):
        raise SweepError(f"need 0 <= xmin < xmax <= 1, got xmin={xmin}, xmax={xmax}")
    if steps < 2:
        raise SweepError(f"need at least 2 steps, got {steps}")
    return [xmin + (xmax - xmin) * i / steps for i in range(steps + 1)]


def scan(base: MultipartiteState, xmin: float, xmax: float, steps: int, tol: Tolerances | None = None) -> list[SweepRow]:
    return [sweep_row(base, x, tol) for x in grid(xmin, xmax, steps)]


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(f"{v:.12g}" for v in astuple(row))
    return buf.getvalue()


def lower_bound_fn(base: MultipartiteState, name: str, tol: Tolerances | None = None) -> Callable[[float], float]:
    """``x -> lower bound`` on ``white_noise_mix(base, x)`` for ``eq12`` or ``eq13``."""
    if name == "eq12":
        return lambda x: bounds.lower_theorem2(white_noise_mix(base, x), tol)[0]
    if name == "eq13":
        return lambda x: bounds.bounds_eq13(white_noise_mix(base, x), tol)[0]
    raise SweepError(f"unknown bound {name!r}; choose from {', '.join(BOUND_NAMES)}")


def _bisect(pred: Callable[[float], bool], lo: float, hi: float, xtol: float) -> float:
    """Midpoint of the final bracket, where ``pred(lo)`` is false and ``pred(hi)`` true."""
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def threshold(
    base: MultipartiteState,
    name: str,
    xtol: float = 1e-4,
    grid_steps: int = 20,
    tol: Tolerances | None = None,
) -> float:
    """Smallest noise weight ``x`` at which the named lower bound certifies entanglement.

    The bound is first tabulated on a uniform grid of ``[0, 1]`` to bracket
    the onset and to check it is nondecreasing there, then refined by
    bisection to ``xtol``.
    """
    tol = resolve(tol)
    f = lower_bound_fn(base, name, tol)
    xs = np.linspace(0.0, 1.0, grid_steps + 1)
    values = [f(float(x)) for x in xs]
    if any(b < a - 1e-12 for a, b in zip(values, values[1:])):
        raise SweepError(f"{name} lower bound is not monotone in x on the scan grid")
    hits = [i for i, v in enumerate(values) if v > tol.verdict]
    if not hits:
        raise SweepError(f"{name} lower bound is never positive on [0, 1]")
    i = hits[0]
    if i == 0:
        return 0.0
    return _bisect(lambda x: f(x) > tol.verdict, float(xs[i - 1]), float(xs[i]), xtol)


def crossover(
    base: MultipartiteState,
    xtol: float = 1e-6,
    grid_steps: int = 100,
    tol: Tolerances | None = None,
) -> float:
    """The ``x`` where the cut-based and purity-based lower bounds cross while both are positive.

    Looks for the single sign change of ``eq12 - eq13`` on grid points where
    both bounds exceed the verdict threshold, then bisects.
    """
    tol = resolve(tol)
    f12 = lower_bound_fn(base, "eq12", tol)
    f13 = lower_bound_fn(base, "eq13", tol)

    def diff(x: float) -> float:
        return f12(x) - f13(x)

    xs = [float(x) for x in np.linspace(0.0, 1.0, grid_steps + 1)]
    live = [x for x in xs if f12(x) > tol.verdict and f13(x) > tol.verdict]
    signs = [(x, diff(x) > 0) for x in live]
    changes = [(a, b) for (a, sa), (b, sb) in zip(signs, signs[1:]) if sa != sb]
    if len(changes) != 1:
        raise SweepError(f"expected one crossing of the eq12 and eq13 lower bounds, found {len(changes)}")
    lo, hi = changes[0]
    lo_positive = diff(lo) > 0
    return _bisect(lambda x: (diff(x) > 0) != lo_positive, lo, hi, xtol)
