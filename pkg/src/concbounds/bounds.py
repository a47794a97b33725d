"""Concurrence of pure states and computable bounds for mixed states.

Lower bounds come from three bipartite entanglement criteria (partial
transpose / realignment trace norms, the covariance matrix, and the
correlation matrix) evaluated on every bipartite cut and lifted to the
N-partite concurrence.  Upper bounds come from subsystem purities and from
the spectral decomposition of the state.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import linalg
from .config import Tolerances, resolve
from .generators import su_generators
from .partition import Cut, enumerate_cuts, enumerate_subsets
from .qstate import (
    MultipartiteState,
    PureState,
    bipartite_view,
    partial_trace,
    partial_transpose,
    pure_reduced_purity,
    realign,
)


@dataclass(frozen=True)
class CutBounds:
    cut: Cut
    m: int  # min(dA, dB)
    n_big: int  # max(dA, dB)
    ppt_norm: float
    realign_norm: float
    c_norm: float
    t_norm: float
    purity_a: float
    purity_b: float
    b1: float
    b2: float
    b3: float

    @property
    def best(self) -> float:
        return max(self.b1, self.b2, self.b3)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["cut"] = {"side_a": list(self.cut.side_a), "side_b": list(self.cut.side_b)}
        return d


@dataclass(frozen=True)
class BoundReport:
    per_cut: tuple[CutBounds, ...]
    lower_eq12: float
    lower_eq13: float
    upper_eq13: float
    upper_eq14: float
    best_lower: float
    best_upper: float
    entangled: bool

    def to_dict(self) -> dict:
        return {
            "per_cut": [c.to_dict() for c in self.per_cut],
            "lower_eq12": self.lower_eq12,
            "lower_eq13": self.lower_eq13,
            "upper_eq13": self.upper_eq13,
            "upper_eq14": self.upper_eq14,
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
            "entangled": self.entangled,
        }


def _sqrt_radicand(value: float, scale: float, tol: Tolerances) -> float:
    """``sqrt(value)``, with round-off-sized or negative ``value`` mapped to 0.

    ``value`` is a difference of O(``scale``) terms, so its rounding error is
    about ``scale * eps``; taking the square root of that directly would
    report ~1e-8 where the exact answer is 0.
    """
    if value <= tol.radicand_rounding * scale:
        return 0.0
    return math.sqrt(value)


# -- pure states ---------------------------------------------------------------


def pure_c2(psi: PureState, cut: Cut, tol: Tolerances | None = None) -> float:
    """Bipartite concurrence ``sqrt(2 (1 - Tr rho_A^2))`` across ``cut``."""
    if cut.n != psi.n:
        raise ValueError(f"cut is for {cut.n} subsystems, state has {psi.n}")
    p = pure_reduced_purity(psi, cut.side_a)
    return _sqrt_radicand(2.0 * (1.0 - p), 4.0, resolve(tol))


def pure_cn(psi: PureState, tol: Tolerances | None = None) -> float:
    """N-partite concurrence ``2^(1-N/2) sqrt((2^N - 2) - sum_alpha Tr rho_alpha^2)``."""
    n = psi.n
    if n < 2:
        raise ValueError("N-partite concurrence needs N >= 2")
    total = sum(pure_reduced_purity(psi, alpha) for alpha in enumerate_subsets(n))
    radicand = (2**n - 2) - total
    return 2.0 ** (1 - n / 2) * _sqrt_radicand(radicand, (2**n - 2) + total, resolve(tol))


# -- bipartite lower bounds ----------------------------------------------------


def _correlations(m: np.ndarray, d_a: int, d_b: int):
    """Generator expectations on a bipartite operator.

    Returns ``(joint, local_a, local_b, rho_a, rho_b)`` where
    ``joint[i, j] = Tr(rho l_i^A (x) l_j^B)`` and ``local_a[i] = Tr(rho_A l_i^A)``.
    """
    la = su_generators(d_a).mats
    lb = su_generators(d_b).mats
    rho4 = m.reshape(d_a, d_b, d_a, d_b)
    # Tr(rho (X (x) Y)) = sum rho[a,b,c,d] X[c,a] Y[d,b]
    joint = np.einsum("abcd,ica,jdb->ij", rho4, la, lb, optimize=True).real
    rho_a = np.einsum("abcb->ac", rho4)
    rho_b = np.einsum("abad->bd", rho4)
    local_a = np.einsum("ac,ica->i", rho_a, la).real
    local_b = np.einsum("ac,ica->i", rho_b, lb).real
    return joint, local_a, local_b, rho_a, rho_b


def cut_bounds(state: MultipartiteState, cut: Cut, tol: Tolerances | None = None) -> CutBounds:
    """All three bipartite lower bounds on ``C_2`` for one cut.

    The formulas assume ``dA <= dB``.  Only their scalar prefactors depend on
    which side is smaller: the trace norms of the partial transpose,
    realigned, covariance and correlation matrices are invariant under
    swapping A and B.  So they are computed in the cut's own orientation, and
    ``M = min(dA, dB)``, ``N = max(dA, dB)`` enter the prefactors.
    Values are not clamped and may be negative.
    """
    tol = resolve(tol)
    m, d_a, d_b = bipartite_view(state, cut)
    small, big = min(d_a, d_b), max(d_a, d_b)

    ppt = linalg.trace_norm(partial_transpose(m, d_a, d_b), tol)
    ccnr = linalg.trace_norm(realign(m, d_a, d_b), tol)
    b1 = math.sqrt(2.0 / (small * (small - 1))) * (max(ppt, ccnr) - 1.0)

    joint, local_a, local_b, rho_a, rho_b = _correlations(m, d_a, d_b)
    pa, pb = linalg.purity(rho_a), linalg.purity(rho_b)

    cov = joint - np.outer(local_a, local_b)
    c_norm = linalg.trace_norm(cov, tol)
    b2 = (2.0 * c_norm - (1.0 - pa) - (1.0 - pb)) / math.sqrt(2.0 * small * (small - 1))

    t_norm = linalg.trace_norm(d_a * d_b / 2.0 * joint, tol)
    offset = math.sqrt(small * big * (small - 1) * (big - 1)) / 2.0
    b3 = math.sqrt(8.0 / (small**3 * big**2 * (small - 1))) * (t_norm - offset)

    return CutBounds(cut, small, big, ppt, ccnr, c_norm, t_norm, pa, pb, b1, b2, b3)


def b1(state: MultipartiteState, cut: Cut, tol: Tolerances | None = None) -> float:
    return cut_bounds(state, cut, tol).b1


def b2(state: MultipartiteState, cut: Cut, tol: Tolerances | None = None) -> float:
    return cut_bounds(state, cut, tol).b2


def b3(state: MultipartiteState, cut: Cut, tol: Tolerances | None = None) -> float:
    return cut_bounds(state, cut, tol).b3


# -- multipartite bounds -------------------------------------------------------


def lift_factor(n: int) -> float:
    """Factor turning a bipartite concurrence bound into an N-partite one.

    ``2^((3-N)/2)`` for ``N >= 3``; for ``N = 2`` the bipartite bound is
    already the target, so 1.
    """
    return 1.0 if n == 2 else 2.0 ** ((3 - n) / 2)


def lower_theorem2(state: MultipartiteState, tol: Tolerances | None = None) -> tuple[float, list[CutBounds]]:
    """Best bipartite lower bound over all cuts, lifted to ``C_N`` and clamped at 0.

    Returns ``(value, per_cut)`` with ``per_cut`` in cut-bitmask order.
    """
    per_cut = [cut_bounds(state, cut, tol) for cut in enumerate_cuts(state.n)]
    best = max(cb.best for cb in per_cut)
    return max(0.0, lift_factor(state.n) * best), per_cut


def subset_purity_sum(state: MultipartiteState) -> float:
    return sum(linalg.purity(partial_trace(state, alpha)) for alpha in enumerate_subsets(state.n))


def bounds_eq13(state: MultipartiteState, tol: Tolerances | None = None) -> tuple[float, float]:
    """Purity-based sandwich ``(lower, upper)`` on ``C_N``.

    ``lower = sqrt((4 - 2^(3-N)) Tr rho^2 - 2^(2-N) S)`` (radicand clamped at 0)
    and ``upper = sqrt(2^(2-N) ((2^N - 2) - S))`` with ``S`` the sum of
    ``Tr rho_alpha^2`` over all proper subsets alpha.
    """
    tol = resolve(tol)
    n = state.n
    s = subset_purity_sum(state)
    p = linalg.purity(state.rho)
    lo_terms = ((4.0 - 2.0 ** (3 - n)) * p, 2.0 ** (2 - n) * s)
    up_terms = (2.0 ** (2 - n) * (2**n - 2), 2.0 ** (2 - n) * s)
    lower = _sqrt_radicand(lo_terms[0] - lo_terms[1], sum(lo_terms), tol)
    upper = _sqrt_radicand(up_terms[0] - up_terms[1], sum(up_terms), tol)
    return lower, upper


def upper_eq14(state: MultipartiteState, tol: Tolerances | None = None) -> float:
    """``sum_i lambda_i C_N(psi_i)`` over the eigendecomposition of ``rho``.

    Eigenvalues at or below ``tol.eig_cutoff`` are skipped.  Inside a
    degenerate eigenspace the Jacobi output basis is used as is, so the value
    is deterministic but not minimized over that freedom.
    """
    tol = resolve(tol)
    eig = linalg.hermitian_eig(state.rho, tol)
    total = 0.0
    for lam, vec in zip(eig.eigenvalues, eig.eigenvectors.T):
        if lam > tol.eig_cutoff:
            total += lam * pure_cn(PureState(state.dims, vec), tol)
    return total


def report(state: MultipartiteState, tol: Tolerances | None = None) -> BoundReport:
    tol = resolve(tol)
    low12, per_cut = lower_theorem2(state, tol)
    low13, up13 = bounds_eq13(state, tol)
    up14 = upper_eq14(state, tol)
    best_lower = max(low12, low13)
    return BoundReport(
        per_cut=tuple(per_cut),
        lower_eq12=low12,
        lower_eq13=low13,
        upper_eq13=up13,
        upper_eq14=up14,
        best_lower=best_lower,
        best_upper=min(up13, up14),
        entangled=best_lower > tol.verdict,
    )
