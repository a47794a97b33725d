"""Orthonormal generalized Gell-Mann basis of su(d)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


@dataclass(frozen=True, eq=False)
class GeneratorBasis:
    d: int
    mats: np.ndarray  # shape (d*d - 1, d, d)

    def __len__(self) -> int:
        return self.mats.shape[0]

    def __iter__(self):
        return iter(self.mats)


@lru_cache(maxsize=None)
def _build(d: int) -> np.ndarray:
    sym, asym, diag = [], [], []
    for j in range(d):
        for k in range(j + 1, d):
            s = np.zeros((d, d), dtype=np.complex128)
            s[j, k] = s[k, j] = 1 / math.sqrt(2)
            sym.append(s)
            a = np.zeros((d, d), dtype=np.complex128)
            a[j, k] = -1j / math.sqrt(2)
            a[k, j] = 1j / math.sqrt(2)
            asym.append(a)
    for l in range(1, d):
        entries = [1.0] * l + [-float(l)] + [0.0] * (d - l - 1)
        diag.append(np.diag(entries).astype(np.complex128) / math.sqrt(l * (l + 1)))
    mats = np.array(sym + asym + diag)
    mats.setflags(write=False)
    return mats


def su_generators(d: int) -> GeneratorBasis:
    """The ``d**2 - 1`` generalized Gell-Mann matrices with ``Tr(l_k l_m) = delta_km``.

    Order: symmetric ``(E_jk + E_kj)/sqrt(2)`` for ``j < k``, then
    antisymmetric ``-i(E_jk - E_kj)/sqrt(2)``, then the ``d - 1`` diagonal
    ones; each block lexicographic.  For ``d = 2`` this is the Pauli triple
    ``X, Y, Z`` over ``sqrt(2)``.
    """
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise ValueError(f"su(d) needs d >= 2, got {d!r}")
    return GeneratorBasis(int(d), _build(int(d)))
