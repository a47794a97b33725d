"""Dense complex linear algebra.

Matrices are plain 2-D ``numpy`` arrays of dtype ``complex128``.  Products,
Kronecker products and traces delegate to numpy; the Hermitian eigensolver
and the singular-value kernel are cyclic Jacobi methods written here, so the
eigenbasis chosen inside degenerate eigenspaces is deterministic and does not
depend on the LAPACK build.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .config import Tolerances, resolve


class LinalgError(ValueError):
    """Malformed input to a linear-algebra kernel."""


class ConvergenceError(ArithmeticError):
    """A Jacobi iteration did not converge within the sweep limit."""


class EigResult(NamedTuple):
    eigenvalues: np.ndarray  # real, descending
    eigenvectors: np.ndarray  # column k belongs to eigenvalues[k]


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite complex 2-D array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise LinalgError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise LinalgError("matrix has non-finite entries")
    return m


def _require_square(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise LinalgError(f"expected a square matrix, got shape {m.shape}")


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise LinalgError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def trace(a) -> complex:
    m = as_matrix(a)
    _require_square(m)
    return complex(np.trace(m))


def frobenius(a) -> float:
    return float(np.linalg.norm(as_matrix(a)))


def purity(rho) -> float:
    """Return ``Re Tr(rho @ rho)``."""
    m = as_matrix(rho)
    _require_square(m)
    # Tr(A A) = sum_ij A_ij A_ji
    return float(np.sum(m * m.T).real)


def _jacobi_rotation(app: float, aqq: float, apq: complex):
    """Rotation parameters that annihilate ``apq`` in [[app, apq], [conj, aqq]].

    Returns ``(c, s, phase, t)``; the 2x2 unitary acting on columns (p, q) is
    ``[[c, s*phase], [-s*conj(phase), c]]`` and the diagonal becomes
    ``(app - t|apq|, aqq + t|apq|)``.
    """
    mag = abs(apq)
    phase = apq / mag
    theta = (aqq - app) / (2.0 * mag)
    t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(1.0 + t * t)
    return c, t * c, phase, t


def _rotate_columns(m: np.ndarray, p: int, q: int, c: float, s: float, phase: complex) -> None:
    mp = m[:, p].copy()
    mq = m[:, q]
    m[:, p] = c * mp - s * phase.conjugate() * mq
    m[:, q] = s * phase * mp + c * mq


def hermitian_eig(h, tol: Tolerances | None = None) -> EigResult:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Eigenvalues are returned in descending order (stable with respect to the
    Jacobi output order on ties) together with orthonormal eigenvectors as
    columns.

    Raises
    ------
    LinalgError
        If ``h`` is not square or not Hermitian within
        ``tol.hermitian * max(1, ||h||_F)``.
    ConvergenceError
        If the off-diagonal part does not fall below
        ``tol.jacobi_offdiag * ||h||_F`` within ``tol.jacobi_max_sweeps``.
    """
    tol = resolve(tol)
    m = as_matrix(h)
    _require_square(m)
    norm = frobenius(m)
    if frobenius(m - m.conj().T) > tol.hermitian * max(1.0, norm):
        raise LinalgError("matrix is not Hermitian")

    n = m.shape[0]
    a = (m + m.conj().T) / 2
    v = np.eye(n, dtype=np.complex128)
    threshold = tol.jacobi_offdiag * norm

    sweeps = 0
    while n > 1 and norm > 0.0 and np.abs(a - np.diag(np.diag(a))).max() >= threshold:
        if sweeps == tol.jacobi_max_sweeps:
            raise ConvergenceError(f"Jacobi eigensolver did not converge in {sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < threshold:
                    continue
                app, aqq = a[p, p].real, a[q, q].real
                c, s, phase, t = _jacobi_rotation(app, aqq, apq)
                mag = abs(apq)
                _rotate_columns(a, p, q, c, s, phase)
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * phase * rq
                a[q, :] = s * phase.conjugate() * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                _rotate_columns(v, p, q, c, s, phase)

    w = np.diag(a).real.copy()
    order = np.argsort(-w, kind="stable")
    return EigResult(w[order], v[:, order])


def singular_values(a, tol: Tolerances | None = None) -> np.ndarray:
    """Singular values in descending order, via one-sided (Hestenes) Jacobi.

    The columns of ``a`` (or of ``a^dagger`` when that has fewer columns) are
    rotated pairwise until mutually orthogonal; their norms are then the
    singular values.  Unlike taking square roots of Gram eigenvalues this
    keeps zero singular values at round-off level instead of ~1e-8.
    """
    tol = resolve(tol)
    m = as_matrix(a)
    w = m.conj().T.copy() if m.shape[1] > m.shape[0] else m.copy()
    k = w.shape[1]

    for _ in range(tol.svd_max_sweeps):
        rotated = False
        norms2 = np.einsum("ij,ij->j", w.conj(), w).real
        for p in range(k - 1):
            for q in range(p + 1, k):
                alpha, beta = norms2[p], norms2[q]
                if alpha == 0.0 or beta == 0.0:
                    continue
                gamma = complex(np.vdot(w[:, p], w[:, q]))
                if abs(gamma) <= tol.svd_orthogonality * math.sqrt(alpha * beta):
                    continue
                c, s, phase, _ = _jacobi_rotation(alpha, beta, gamma)
                _rotate_columns(w, p, q, c, s, phase)
                norms2[p] = np.vdot(w[:, p], w[:, p]).real
                norms2[q] = np.vdot(w[:, q], w[:, q]).real
                rotated = True
        if not rotated:
            break
    else:
        raise ConvergenceError(f"one-sided Jacobi did not converge in {tol.svd_max_sweeps} sweeps")

    sv = np.linalg.norm(w, axis=0)
    return np.sort(sv)[::-1]


def trace_norm(a, tol: Tolerances | None = None) -> float:
    """Sum of singular values."""
    return float(np.sum(singular_values(a, tol)))
