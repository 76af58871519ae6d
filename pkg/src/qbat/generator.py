"""Counting-field-tilted generator of the population-coherence master equation.

The generator acts on the state vector (rho_11, rho_22, rho_bb, rho_aa,
Re rho_12).  The counting field ``lam`` dresses only the two cavity-exchange
entries, (3,4) with exp(-lam) and (4,3) with exp(+lam) (1-based indices).

Three coefficient variants are provided:

* ``verbatim`` - the published matrix transcribed as printed.
* ``trace_preserving`` (default) - as printed, but with the coherence-to-
  population feed of row 3 doubled so that (1,1,1,1,0) is an exact left null
  vector at lam = 0.  All published trends (Fig.-style steady-state ratios,
  the ergotropy-ratio landscape, the cumulant dataset) are reproduced by this
  variant.
* ``detailed_balance`` - a thermally consistent correction in which each
  level's emission factor is paired with the reservoir that populates it and
  the cavity exchange uses n_l upward / (1+n_l) downward.  At a common
  temperature this variant relaxes to a Boltzmann state and carries zero
  cavity current; the published coefficients do not.  Kept for physics
  cross-checks; note its coherence-free steady states are passive for most
  of the sampled parameter space, so it does not reproduce the published
  ergotropy-ratio results.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .params import BatteryParams, Occupations, ensure_valid, occupations


class Variant(str, Enum):
    VERBATIM = "verbatim"
    TRACE_PRESERVING = "trace_preserving"
    DETAILED_BALANCE = "detailed_balance"


DEFAULT_VARIANT = Variant.TRACE_PRESERVING


@dataclass(frozen=True)
class GeneratorMatrix:
    entries: np.ndarray  # 5x5, real
    lam: float
    variant: Variant

    def __post_init__(self):
        self.entries.setflags(write=False)


def build_generator(
    params: BatteryParams,
    lam: float = 0.0,
    variant: Variant = DEFAULT_VARIANT,
    occ: Occupations | None = None,
) -> GeneratorMatrix:
    """Assemble the 5x5 tilted generator for one battery configuration."""
    ensure_valid(params)
    variant = Variant(variant)
    o = occ if occ is not None else occupations(params)
    r, g2 = params.r, params.g * params.g
    nh, nc, nl = o.n_h, o.n_c, o.n_l
    th, tc, tl = o.tilde_n_h, o.tilde_n_c, o.tilde_n_l
    G12 = o.gamma12
    em, ep = math.exp(-lam), math.exp(lam)
    loss_g = r * (nh + nc)  # each ground state loses to both reservoirs

    if variant is Variant.DETAILED_BALANCE:
        L = np.array(
            [
                [-loss_g, 0.0, r * tc, r * th, -2.0 * G12],
                [0.0, -loss_g, r * tc, r * th, -2.0 * G12],
                [r * nc, r * nc, -2.0 * r * tc - g2 * nl, g2 * tl * em, 2.0 * r * params.p_c * nc],
                [r * nh, r * nh, g2 * nl * ep, -g2 * tl - 2.0 * r * th, 2.0 * r * params.p_h * nh],
                [-G12, -G12, r * params.p_c * tc, r * params.p_h * th, -o.gbar - params.tau],
            ]
        )
    else:
        feed_bb = r * params.p_c * nc
        if variant is Variant.TRACE_PRESERVING:
            feed_bb *= 2.0
        L = np.array(
            [
                [-loss_g, 0.0, r * th, r * tc, -2.0 * G12],
                [0.0, -loss_g, r * th, r * tc, -2.0 * G12],
                [r * nc, r * nc, -2.0 * r * th - g2 * tl, g2 * nl * em, feed_bb],
                [r * nh, r * nh, g2 * tl * ep, -g2 * nl - 2.0 * r * tc, 2.0 * r * params.p_h * nh],
                [-G12, -G12, r * params.p_h * th, 2.0 * r * params.p_c * tc, -o.gbar - params.tau],
            ]
        )
    return GeneratorMatrix(entries=L, lam=float(lam), variant=variant)
