"""Steady states, time evolution, and the charging/storage/leakage indicators."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DivisionDegenerate, NonPhysical, NullSpaceDegenerate, StepSizeUnderflow
from .generator import DEFAULT_VARIANT, Variant, build_generator
from .params import BatteryParams, ensure_valid

POPULATION_FLOOR = -1e-9
SINGULAR_GAP = 1e-8
DENOMINATOR_FLOOR = 1e-14


@dataclass(frozen=True)
class StateVector:
    """Populations (rho_11, rho_22, rho_bb, rho_aa) plus the real coherence."""

    rho11: float
    rho22: float
    rho_bb: float
    rho_aa: float
    re_rho12: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.rho11, self.rho22, self.rho_bb, self.rho_aa, self.re_rho12])

    @classmethod
    def from_array(cls, v) -> "StateVector":
        return cls(*(float(x) for x in v))

    @property
    def population_sum(self) -> float:
        return self.rho11 + self.rho22 + self.rho_bb + self.rho_aa


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: list[StateVector]


@dataclass(frozen=True)
class IndicatorSet:
    """Expectation values of the charging, storage and leakage operators."""

    e_charge: float
    e_store: float
    e_leak: float
    store_over_charge: float
    leak_over_store: float
    leak_over_charge: float


DEFAULT_INITIAL_STATE = StateVector(0.5, 0.5, 0.0, 0.0, 0.0)


def steady_state(params: BatteryParams, variant: Variant = DEFAULT_VARIANT) -> StateVector:
    """Stationary state of the untilted generator.

    The null direction is taken along the smallest singular value of L(0) and
    the population block normalized to unit sum.
    """
    ensure_valid(params)
    L = build_generator(params, 0.0, variant).entries
    _, s, vt = np.linalg.svd(L)
    if s[-2] - s[-1] < SINGULAR_GAP:
        raise NullSpaceDegenerate(
            f"two smallest singular values within {SINGULAR_GAP:g}: {s[-1]:.3e}, {s[-2]:.3e}"
        )
    v = vt[-1]
    pop = v[:4].sum()
    if abs(pop) < 1e-12:
        raise NullSpaceDegenerate("null direction carries no population weight")
    v = v / pop
    if v[:4].min() < POPULATION_FLOOR:
        raise NonPhysical(f"steady-state population {v[:4].min():.3e} below {POPULATION_FLOOR:g}")
    return StateVector.from_array(v)


def evolve(
    params: BatteryParams,
    rho0: StateVector = DEFAULT_INITIAL_STATE,
    t_end: float = 50.0,
    n_out: int = 200,
    variant: Variant = DEFAULT_VARIANT,
    rtol: float = 1e-8,
) -> Trajectory:
    """Integrate d rho / dt = L(0) rho with adaptive error control."""
    ensure_valid(params)
    if t_end <= 0:
        raise ValueError("t_end must be positive")
    L = build_generator(params, 0.0, variant).entries
    times = np.linspace(0.0, t_end, n_out)
    sol = solve_ivp(
        lambda t, y: L @ y,
        (0.0, t_end),
        rho0.as_array(),
        t_eval=times,
        rtol=rtol,
        atol=rtol * 1e-3,
        method="RK45",
    )
    if not sol.success:
        raise StepSizeUnderflow(sol.message)
    states = [StateVector.from_array(sol.y[:, i]) for i in range(sol.y.shape[1])]
    return Trajectory(times=times, states=states)


def indicators(state: StateVector, params: BatteryParams) -> IndicatorSet:
    """Charging, storage and leakage energies of a state, with their ratios.

    <H_c> = eps (rho11 + rho22) + eps_a rho_aa
    <H_s> = eps_a rho_aa + eps_b rho_bb
    <H_L> = eps (rho11 + rho22) + eps_b rho_bb
    """
    ground = params.eps * (state.rho11 + state.rho22)
    e_charge = ground + params.eps_a * state.rho_aa
    e_store = params.eps_a * state.rho_aa + params.eps_b * state.rho_bb
    e_leak = ground + params.eps_b * state.rho_bb
    for name, den in (("charge", e_charge), ("store", e_store)):
        if abs(den) < DENOMINATOR_FLOOR:
            raise DivisionDegenerate(f"{name} energy below {DENOMINATOR_FLOOR:g}")
    return IndicatorSet(
        e_charge=e_charge,
        e_store=e_store,
        e_leak=e_leak,
        store_over_charge=e_store / e_charge,
        leak_over_store=e_leak / e_store,
        leak_over_charge=e_leak / e_charge,
    )
