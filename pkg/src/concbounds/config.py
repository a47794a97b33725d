"""Numerical tolerances shared by every module.

All functions that need a tolerance take an optional ``tol`` argument;
``None`` means :data:`DEFAULT_TOLERANCES`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # hermitian_eig precondition, relative to max(1, ||h||_F)
    hermitian: float = 1e-8
    # Jacobi stops once every off-diagonal magnitude is below this times ||h||_F
    jacobi_offdiag: float = 1e-12
    jacobi_max_sweeps: int = 100
    # one-sided Jacobi: columns p, q count as orthogonal below this cosine
    svd_orthogonality: float = 1e-14
    svd_max_sweeps: int = 100

    # density-matrix validation
    state_hermitian: float = 1e-8
    state_trace: float = 1e-8
    state_positivity: float = 1e-8
    pure_norm: float = 1e-10
    weight_normalization: float = 1e-10

    # a square-root radicand within this factor of the magnitude of its
    # terms is round-off and is taken as exactly zero
    radicand_rounding: float = 1e-14
    # eigenvalues at or below this are dropped from the spectral upper bound
    eig_cutoff: float = 1e-12
    # a lower bound above this certifies entanglement
    verdict: float = 1e-9

    def with_verdict(self, verdict: float) -> "Tolerances":
        return replace(self, verdict=verdict)


DEFAULT_TOLERANCES = Tolerances()


def resolve(tol: Tolerances | None) -> Tolerances:
    return DEFAULT_TOLERANCES if tol is None else tol
