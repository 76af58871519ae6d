"""Ergotropy via the passive-state construction, plus engine thermodynamics."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import StateVector, steady_state
from .errors import AffinityDegenerate, BaselineDegenerate, NonPhysical
from .generator import DEFAULT_VARIANT, Variant
from .params import BatteryParams, coherence_free, ensure_valid, occupations

EIGENVALUE_FLOOR = -1e-9
BASELINE_FLOOR = 1e-12
OCCUPATION_FLOOR = 1e-300


@dataclass(frozen=True)
class EnergeticsRecord:
    """Ergotropy, its coherence-free baseline, and the engine quantities."""

    ergotropy: float
    baseline: float
    ratio: float
    W: float
    F: float
    Q_h: float
    Q_c: float
    eta: float


def passive_spectrum(state: StateVector) -> np.ndarray:
    """Eigenvalues of the density matrix, sorted descending.

    Only the degenerate ground doublet carries a coherence, so the spectrum
    is the two eigenvalues of its symmetric 2x2 block plus the bare excited
    populations.  Eigenvalues in (EIGENVALUE_FLOOR, 0) are clamped to zero
    and the spectrum renormalized; anything lower is an error.
    """
    mean = (state.rho11 + state.rho22) / 2.0
    split = math.hypot((state.rho11 - state.rho22) / 2.0, state.re_rho12)
    spec = np.array([mean + split, mean - split, state.rho_bb, state.rho_aa])
    low = spec.min()
    if low < EIGENVALUE_FLOOR:
        raise NonPhysical(f"passive eigenvalue {low:.3e} below {EIGENVALUE_FLOOR:g}")
    if low < 0.0:
        total = spec.sum()
        spec = np.clip(spec, 0.0, None)
        if spec.sum() > 0:
            spec *= total / spec.sum()
    return np.sort(spec, kind="stable")[::-1]


def ergotropy(state: StateVector, energies: tuple[float, float, float, float]) -> float:
    """Maximum unitarily extractable work of a state.

    ``energies`` are the four level energies in ascending order (the two
    degenerate ground energies first).  The passive energy pairs the
    descending spectrum with the ascending energies.
    """
    e = np.asarray(energies, dtype=float)
    if e.shape != (4,):
        raise ValueError("energies must be a 4-tuple")
    if np.any(np.diff(e) < 0):
        raise ValueError("energies must be ascending")
    current = (
        e[0] * state.rho11 + e[1] * state.rho22 + e[2] * state.rho_bb + e[3] * state.rho_aa
    )
    passive = passive_spectrum(state) @ e
    return float(current - passive)


def _level_energies(params: BatteryParams) -> tuple[float, float, float, float]:
    return (params.eps, params.eps, params.eps_b, params.eps_a)


def thermo(params: BatteryParams) -> tuple[float, float, float, float, float]:
    """Work output, affinity, both heat gaps, and efficiency: (W, F, Q_h, Q_c, eta)."""
    ensure_valid(params)
    o = occupations(params)
    for name, val in (("n_c", o.n_c), ("tilde_n_h", o.tilde_n_h), ("n_l", o.n_l)):
        if val < OCCUPATION_FLOOR:
            raise AffinityDegenerate(f"occupation {name} = {val:.3e} underflows the affinity")
    Q_h = params.eps_a - params.eps
    Q_c = params.eps_b - params.eps
    F = (o.tilde_n_c * o.n_h * o.tilde_n_l) / (o.n_c * o.tilde_n_h * o.n_l)
    W = Q_h - params.T_c * math.log(F)
    return W, F, Q_h, Q_c, W / Q_h


def ergotropy_ratio(
    params: BatteryParams, variant: Variant = DEFAULT_VARIANT
) -> EnergeticsRecord:
    """Steady-state ergotropy against the coherence-free baseline.

    The baseline is the ergotropy of a different dynamical fixed point: the
    steady state recomputed with p_c = p_h = 0 and tau = 0 (not the coherent
    steady state with its coherence zeroed).
    """
    ensure_valid(params)
    energies = _level_energies(params)
    E = ergotropy(steady_state(params, variant), energies)
    E0 = ergotropy(steady_state(coherence_free(params), variant), energies)
    if abs(E0) <= BASELINE_FLOOR:
        raise BaselineDegenerate(f"coherence-free ergotropy {E0:.3e}")
    W, F, Q_h, Q_c, eta = thermo(params)
    return EnergeticsRecord(
        ergotropy=E,
        baseline=E0,
        ratio=E / E0,
        W=W,
        F=F,
        Q_h=Q_h,
        Q_c=Q_c,
        eta=eta,
    )
