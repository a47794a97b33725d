"""Seeded random states for property checks.

Pure states are normalized standard complex Gaussian vectors; mixed states
are ``G G^dagger / Tr(G G^dagger)`` for a Gaussian matrix ``G``.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .qstate import MultipartiteState, PureState


def _gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_pure(rng: np.random.Generator, dims: Sequence[int]) -> PureState:
    psi = _gaussian(rng, math.prod(dims))
    return PureState(tuple(dims), psi / np.linalg.norm(psi))


def random_density(rng: np.random.Generator, dims: Sequence[int], rank: int | None = None) -> MultipartiteState:
    d = math.prod(dims)
    g = _gaussian(rng, (d, d if rank is None else rank))
    rho = g @ g.conj().T
    return MultipartiteState(tuple(dims), rho / np.trace(rho).real)


def random_product_pure(rng: np.random.Generator, dims: Sequence[int]) -> PureState:
    psi = np.ones(1, dtype=np.complex128)
    for d in dims:
        v = _gaussian(rng, d)
        psi = np.kron(psi, v / np.linalg.norm(v))
    return PureState(tuple(dims), psi)


def random_separable(rng: np.random.Generator, dims: Sequence[int], terms: int) -> MultipartiteState:
    """Convex mixture of ``terms`` random fully-product pure states."""
    weights = rng.random(terms)
    weights /= weights.sum()
    d = math.prod(dims)
    rho = np.zeros((d, d), dtype=np.complex128)
    for w in weights:
        psi = random_product_pure(rng, dims).amplitudes
        rho += w * np.outer(psi, psi.conj())
    return MultipartiteState(tuple(dims), rho)


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a Gaussian matrix."""
    q, r = np.linalg.qr(_gaussian(rng, (d, d)))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
