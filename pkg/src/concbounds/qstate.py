"""Multipartite density matrices and the index reshuffles built on them.

Index convention: subsystem 0 is the most significant digit of the
mixed-radix basis index, i.e. basis state ``|i_0 i_1 ... i_{N-1}>`` sits at
``((i_0 * d_1 + i_1) * d_2 + ...) ``, the same ordering as ``np.kron``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .config import Tolerances, resolve
from .partition import Cut, PartitionError


class StateError(ValueError):
    """Input does not describe a valid quantum state."""


class DimensionError(StateError):
    pass


class HermiticityError(StateError):
    pass


class TraceError(StateError):
    pass


class PositivityError(StateError):
    pass


@dataclass(frozen=True, eq=False)
class MultipartiteState:
    dims: tuple[int, ...]
    rho: np.ndarray

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def dim(self) -> int:
        return self.rho.shape[0]


@dataclass(frozen=True, eq=False)
class PureState:
    dims: tuple[int, ...]
    amplitudes: np.ndarray

    @property
    def n(self) -> int:
        return len(self.dims)

    def density(self) -> MultipartiteState:
        psi = self.amplitudes
        return MultipartiteState(self.dims, np.outer(psi, psi.conj()))


def _check_dims(dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims:
        raise DimensionError("dims must list at least one subsystem")
    if any(d < 2 for d in dims):
        raise DimensionError(f"every subsystem dimension must be >= 2, got {list(dims)}")
    return dims


def validate(dims: Sequence[int], matrix, tol: Tolerances | None = None) -> MultipartiteState:
    """Check ``matrix`` is a density matrix on ``dims`` and wrap it.

    Raises :class:`DimensionError`, :class:`HermiticityError`,
    :class:`TraceError` or :class:`PositivityError`.  The matrix is stored
    as given (no clamping or re-symmetrization).
    """
    tol = resolve(tol)
    dims = _check_dims(dims)
    try:
        m = linalg.as_matrix(matrix)
    except linalg.LinalgError as exc:
        raise DimensionError(str(exc)) from None
    total = math.prod(dims)
    if m.shape != (total, total):
        raise DimensionError(f"dims {list(dims)} need a {total}x{total} matrix, got {m.shape[0]}x{m.shape[1]}")
    if linalg.frobenius(m - m.conj().T) > tol.state_hermitian:
        raise HermiticityError("density matrix is not Hermitian")
    tr = linalg.trace(m)
    if abs(tr - 1.0) > tol.state_trace:
        raise TraceError(f"density matrix has trace {tr.real:.12g}, expected 1")
    lowest = linalg.hermitian_eig(m, tol).eigenvalues[-1]
    if lowest < -tol.state_positivity:
        raise PositivityError(f"density matrix has negative eigenvalue {lowest:.3e}")
    return MultipartiteState(dims, m)


def pure_state(dims: Sequence[int], amplitudes, tol: Tolerances | None = None) -> PureState:
    tol = resolve(tol)
    dims = _check_dims(dims)
    psi = np.asarray(amplitudes, dtype=np.complex128).ravel()
    if psi.size != math.prod(dims):
        raise DimensionError(f"dims {list(dims)} need {math.prod(dims)} amplitudes, got {psi.size}")
    if abs(np.linalg.norm(psi) - 1.0) > tol.pure_norm:
        raise StateError(f"state vector has norm {np.linalg.norm(psi):.12g}, expected 1")
    return PureState(dims, psi)


def maximally_mixed(dims: Sequence[int]) -> MultipartiteState:
    dims = _check_dims(dims)
    total = math.prod(dims)
    return MultipartiteState(dims, np.eye(total, dtype=np.complex128) / total)


def ghz(n: int) -> PureState:
    """``(|0...0> + |1...1>)/sqrt(2)`` on ``n`` qubits."""
    if n < 2:
        raise StateError(f"GHZ state needs n >= 2 qubits, got {n}")
    psi = np.zeros(2**n, dtype=np.complex128)
    psi[0] = psi[-1] = 1 / math.sqrt(2)
    return PureState((2,) * n, psi)


def product_zero(n: int) -> PureState:
    """``|0...0>`` on ``n`` qubits."""
    if n < 2:
        raise StateError(f"need n >= 2 qubits, got {n}")
    psi = np.zeros(2**n, dtype=np.complex128)
    psi[0] = 1.0
    return PureState((2,) * n, psi)


def ghz_basis_vector(j: int, sign: int) -> np.ndarray:
    """``(|j>_{12}|0>_3 + sign |3-j>_{12}|1>_3)/sqrt(2)`` for j in 0..3."""
    psi = np.zeros(8, dtype=np.complex128)
    psi[2 * j] = 1 / math.sqrt(2)
    psi[2 * (3 - j) + 1] = sign / math.sqrt(2)
    return psi


def dct_state(lam0p: float, lam0m: float, lam: Sequence[float], tol: Tolerances | None = None) -> MultipartiteState:
    """Three-qubit state diagonal in the GHZ basis (Dür-Cirac-Tarrach family).

    ``lam0p`` and ``lam0m`` weight the two ``j=0`` GHZ vectors; ``lam[j-1]``
    weights both signs of ``j = 1, 2, 3``.  The weights must be nonnegative
    and satisfy ``lam0p + lam0m + 2*sum(lam) == 1``.
    """
    tol = resolve(tol)
    lam = [float(v) for v in lam]
    if len(lam) != 3:
        raise StateError(f"expected 3 weights lambda_1..3, got {len(lam)}")
    weights = [float(lam0p), float(lam0m), *lam]
    if any(w < 0 for w in weights):
        raise StateError(f"weights must be nonnegative, got {weights}")
    total = lam0p + lam0m + 2 * sum(lam)
    if abs(total - 1.0) > tol.weight_normalization:
        raise StateError(f"weights give lam0+ + lam0- + 2(lam1+lam2+lam3) = {total:.12g}, expected 1")

    rho = np.zeros((8, 8), dtype=np.complex128)
    terms = [(lam0p, 0, +1), (lam0m, 0, -1)]
    terms += [(w, j, s) for j, w in enumerate(lam, start=1) for s in (+1, -1)]
    for w, j, s in terms:
        v = ghz_basis_vector(j, s)
        rho += w * np.outer(v, v.conj())
    return MultipartiteState((2, 2, 2), rho)


def white_noise_mix(state: MultipartiteState, x: float) -> MultipartiteState:
    """``(1-x)/D * I + x * rho``."""
    if not 0.0 <= x <= 1.0:
        raise StateError(f"noise parameter x must lie in [0, 1], got {x}")
    d = state.dim
    rho = (1 - x) / d * np.eye(d, dtype=np.complex128) + x * state.rho
    return MultipartiteState(state.dims, rho)


# -- index reshuffling -------------------------------------------------------


def _reshuffle(m: np.ndarray, shape: Sequence[int], axes: Sequence[int], out_shape: tuple[int, int]) -> np.ndarray:
    """View ``m`` as a tensor of ``shape``, permute its axes, flatten to ``out_shape``.

    Every reshuffle in this module is expressed through this one function.
    For an operator on factors ``f_0..f_{k-1}`` the tensor axes are
    ``(row f_0, ..., row f_{k-1}, col f_0, ..., col f_{k-1})``, mixed-radix
    with the lowest axis most significant.
    """
    return np.ascontiguousarray(np.reshape(m, tuple(shape)).transpose(tuple(axes))).reshape(out_shape)


def _regroup(m: np.ndarray, dims: Sequence[int], first: Sequence[int], second: Sequence[int]):
    """Reorder factors so ``first`` (in order) precede ``second``."""
    k = len(dims)
    order = list(first) + list(second)
    d1 = math.prod(dims[i] for i in first)
    d2 = math.prod(dims[i] for i in second)
    axes = order + [k + i for i in order]
    return _reshuffle(m, list(dims) * 2, axes, (d1 * d2, d1 * d2)), d1, d2


def _check_subset(keep, n: int) -> tuple[int, ...]:
    keep = tuple(int(i) for i in keep)
    if list(keep) != sorted(set(keep)) or not keep or len(keep) >= n or keep[0] < 0 or keep[-1] >= n:
        raise PartitionError(f"{list(keep)} is not a proper nonempty subset of range({n})")
    return keep


def reduced_density(rho: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Partial trace of ``rho`` onto the factors listed in ``keep``."""
    rest = [i for i in range(len(dims)) if i not in keep]
    m, dk, dr = _regroup(rho, dims, keep, rest)
    return np.einsum("ijkj->ik", m.reshape(dk, dr, dk, dr))


def partial_trace(state: MultipartiteState, keep: Sequence[int]) -> np.ndarray:
    keep = _check_subset(keep, state.n)
    return reduced_density(state.rho, state.dims, keep)


def bipartite_view(state: MultipartiteState, cut: Cut) -> tuple[np.ndarray, int, int]:
    """Re-index ``state.rho`` as an operator on ``H_A (x) H_B`` for ``cut``.

    Returns ``(matrix, dA, dB)``.  The map is a permutation similarity.
    """
    if cut.n != state.n:
        raise PartitionError(f"cut is for {cut.n} subsystems, state has {state.n}")
    return _regroup(state.rho, state.dims, cut.side_a, cut.side_b)


def _check_bipartite(m, d_a: int, d_b: int) -> np.ndarray:
    m = linalg.as_matrix(m)
    if m.shape != (d_a * d_b, d_a * d_b):
        raise DimensionError(f"expected a {d_a * d_b}x{d_a * d_b} matrix for dA={d_a}, dB={d_b}, got {m.shape}")
    return m


def partial_transpose(m, d_a: int, d_b: int) -> np.ndarray:
    """Transpose the A indices: ``out[(i,k),(j,l)] = m[(j,k),(i,l)]``."""
    m = _check_bipartite(m, d_a, d_b)
    n = d_a * d_b
    return _reshuffle(m, (d_a, d_b, d_a, d_b), (2, 1, 0, 3), (n, n))


def realign(m, d_a: int, d_b: int) -> np.ndarray:
    """Realignment: ``out[(i,j),(k,l)] = m[(i,k),(j,l)]``, a dA^2 x dB^2 matrix."""
    m = _check_bipartite(m, d_a, d_b)
    return _reshuffle(m, (d_a, d_b, d_a, d_b), (0, 2, 1, 3), (d_a * d_a, d_b * d_b))


def pure_reduced_purity(psi: PureState, keep: Sequence[int]) -> float:
    """``Tr rho_keep^2`` for a pure state, from its Schmidt matrix."""
    keep = list(keep)
    dims = psi.dims
    rest = [i for i in range(len(dims)) if i not in keep]
    dk = math.prod(dims[i] for i in keep)
    schmidt = psi.amplitudes.reshape(dims).transpose(keep + rest).reshape(dk, -1)
    gram = schmidt @ schmidt.conj().T
    return float(np.sum(np.abs(gram) ** 2))
