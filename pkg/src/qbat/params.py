"""Battery parameters, Bose-Einstein occupations, and derived rates.

Units: hbar = k_B = 1; every energy, temperature and rate is dimensionless.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import InvalidParams

# exp arguments beyond this underflow the occupation to exactly zero
EXP_CLAMP = 700.0


@dataclass(frozen=True)
class BatteryParams:
    """One battery configuration.

    ``eps`` is the energy of the two degenerate ground states, ``eps_b`` and
    ``eps_a`` the first and second excited energies (``eps < eps_b < eps_a``).
    ``p_c`` and ``p_h`` are the noise-induced coherence strengths of the leak
    and charging reservoirs, ``tau`` a phenomenological pure-dephasing rate.
    ``r`` is the common system-bath rate and ``g`` the cavity coupling.
    """

    T_c: float
    T_h: float
    T_l: float
    eps: float
    eps_b: float
    eps_a: float
    p_c: float
    p_h: float
    tau: float
    r: float = 1.0
    g: float = 1.0


@dataclass(frozen=True)
class Occupations:
    """Mean bosonic occupations and the derived rates built from them."""

    n_h: float
    n_c: float
    n_l: float
    tilde_n_h: float
    tilde_n_c: float
    tilde_n_l: float
    gbar: float
    gamma12: float


def bose_occupation(gap: float, T: float) -> float:
    """Mean boson number 1/(exp(gap/T) - 1) for a transition of energy ``gap``.

    Arguments beyond the exp clamp return 0 exactly (deep suppression).
    """
    if gap <= 0:
        raise ValueError(f"bose_occupation requires gap > 0, got {gap}")
    if T <= 0:
        raise ValueError(f"bose_occupation requires T > 0, got {T}")
    x = gap / T
    if x > EXP_CLAMP:
        return 0.0
    return 1.0 / math.expm1(x)


def validate_params(params: BatteryParams) -> list[str]:
    """Return every violated parameter invariant (empty list when valid)."""
    v = []
    if not params.eps > 0:
        v.append("eps > 0")
    if not params.eps < params.eps_b:
        v.append("eps < eps_b")
    if not params.eps_b < params.eps_a:
        v.append("eps_b < eps_a")
    for name in ("T_c", "T_h", "T_l"):
        if not getattr(params, name) > 0:
            v.append(f"{name} > 0")
    for name in ("p_c", "p_h"):
        p = getattr(params, name)
        if not (0.0 <= p <= 1.0):
            v.append(f"{name} in [0, 1]")
    if not params.tau >= 0:
        v.append("tau >= 0")
    if not params.r > 0:
        v.append("r > 0")
    if not params.g > 0:
        v.append("g > 0")
    return v


def ensure_valid(params: BatteryParams) -> None:
    violations = validate_params(params)
    if violations:
        raise InvalidParams(violations)


def occupations(params: BatteryParams) -> Occupations:
    """Bose-Einstein occupations for the three transitions plus derived rates.

    Gap conventions: the charging reservoir sees eps_a - eps at T_h, the leak
    reservoir eps_b - eps at T_c, and the (resonant) cavity eps_a - eps_b at
    T_l.
    """
    ensure_valid(params)
    n_h = bose_occupation(params.eps_a - params.eps, params.T_h)
    n_c = bose_occupation(params.eps_b - params.eps, params.T_c)
    n_l = bose_occupation(params.eps_a - params.eps_b, params.T_l)
    gbar = params.r * (n_h + n_c)
    gamma12 = params.r * (params.p_c * n_c + params.p_h * n_h) / 2.0
    return Occupations(
        n_h=n_h,
        n_c=n_c,
        n_l=n_l,
        tilde_n_h=1.0 + n_h,
        tilde_n_c=1.0 + n_c,
        tilde_n_l=1.0 + n_l,
        gbar=gbar,
        gamma12=gamma12,
    )


def coherence_free(params: BatteryParams) -> BatteryParams:
    """The same configuration with all coherence channels switched off."""
    return replace(params, p_c=0.0, p_h=0.0, tau=0.0)
