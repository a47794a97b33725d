"""Quick property checks runnable from the command line (``concbounds selftest``)."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import bounds, linalg
from .partition import enumerate_cuts
from .qstate import maximally_mixed, partial_trace
from .randstates import random_density, random_pure, random_separable


def check_linear_entropy_subadditivity(rng, samples):
    for _ in range(samples):
        da, db = rng.integers(2, 5, size=2)
        s = random_density(rng, (int(da), int(db)))
        lhs = 1 - linalg.purity(s.rho)
        rhs = (1 - linalg.purity(partial_trace(s, [0]))) + (1 - linalg.purity(partial_trace(s, [1])))
        if lhs > rhs + 1e-9:
            return False
    return True


def check_bipartite_vs_multipartite(rng, samples):
    for i in range(samples):
        dims = [(2, 2, 2), (2, 3, 2), (2, 2, 2, 2)][i % 3]
        psi = random_pure(rng, dims)
        cn = bounds.pure_cn(psi)
        f = bounds.lift_factor(len(dims))
        if any(cn < f * bounds.pure_c2(psi, cut) - 1e-9 for cut in enumerate_cuts(len(dims))):
            return False
    return True


def check_pure_collapse(rng, samples):
    for i in range(samples):
        dims = [(2, 2, 2), (2, 3, 2), (2, 2, 2, 2)][i % 3]
        psi = random_pure(rng, dims)
        cn = bounds.pure_cn(psi)
        s = psi.density()
        if abs(bounds.bounds_eq13(s)[0] - cn) > 1e-9 or abs(bounds.upper_eq14(s) - cn) > 1e-9:
            return False
    return True


def check_spectral_upper_dominance(rng, samples):
    for _ in range(samples):
        s = random_density(rng, (2, 2, 2))
        if bounds.upper_eq14(s) > bounds.bounds_eq13(s)[1] + 1e-8:
            return False
    return True


def check_separable_undetected(rng, samples):
    for _ in range(samples):
        s = random_separable(rng, (2, 2, 2), int(rng.integers(1, 9)))
        if bounds.report(s).entangled:
            return False
    return True


def check_maximally_mixed(rng, samples):
    r = bounds.report(maximally_mixed((2, 2, 2)))
    return abs(r.upper_eq13 - math.sqrt(15 / 8)) < 1e-9 and abs(r.upper_eq14) < 1e-9 and not r.entangled


CHECKS: dict[str, Callable] = {
    "linear entropy subadditivity": check_linear_entropy_subadditivity,
    "C_N >= 2^((3-N)/2) C_2 on pure states": check_bipartite_vs_multipartite,
    "pure-state collapse of bounds": check_pure_collapse,
    "spectral upper bound <= purity upper bound": check_spectral_upper_dominance,
    "separable states undetected": check_separable_undetected,
    "maximally mixed 3-qubit bounds": check_maximally_mixed,
}


def run(samples: int = 20, seed: int = 2024, out=print) -> bool:
    ok = True
    for name, check in CHECKS.items():
        passed = bool(check(np.random.default_rng(seed), samples))
        out(f"{'PASS' if passed else 'FAIL'}  {name}")
        ok &= passed
    return ok
