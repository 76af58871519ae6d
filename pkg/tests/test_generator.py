from __future__ import annotations

import dataclasses
import math

import numpy as np
import pytest

from refcases import BLUE, random_params
from qbat import Variant, build_generator, occupations
from qbat.params import coherence_free


def test_trace_preserving_population_columns_sum_to_zero():
    rng = np.random.default_rng(3)
    for _ in range(100):
        L = build_generator(random_params(rng), 0.0, Variant.TRACE_PRESERVING).entries
        assert np.abs(L[:4].sum(axis=0)).max() < 1e-12


def test_counting_field_dresses_only_the_exchange_entries():
    rng = np.random.default_rng(4)
    for lam in (-0.3, 0.05, 0.4):
        p = random_params(rng)
        L0 = build_generator(p, 0.0).entries
        L = build_generator(p, lam).entries
        diff = np.argwhere(L != L0)
        assert {tuple(ij) for ij in diff} <= {(2, 3), (3, 2)}
        assert L[2, 3] == pytest.approx(L0[2, 3] * math.exp(-lam), rel=1e-14)
        assert L[3, 2] == pytest.approx(L0[3, 2] * math.exp(lam), rel=1e-14)


def test_variants_differ_only_in_coherence_feed_of_row_three():
    Lv = build_generator(BLUE, 0.0, Variant.VERBATIM).entries
    Lt = build_generator(BLUE, 0.0, Variant.TRACE_PRESERVING).entries
    diff = np.argwhere(Lv != Lt)
    assert [tuple(ij) for ij in diff] == [(2, 4)]
    assert Lt[2, 4] == pytest.approx(2.0 * Lv[2, 4], rel=1e-14)


def test_coherence_decouples_without_noise_induced_terms():
    p = coherence_free(BLUE)
    o = occupations(p)
    L = build_generator(p, 0.0).entries
    assert np.all(L[4, :4] == 0.0)
    assert np.all(L[:4, 4] == 0.0)
    assert L[4, 4] == pytest.approx(-o.gbar, rel=1e-14)


def test_entries_match_printed_coefficients():
    # spot-check the verbatim matrix against the defining rate expressions
    p = BLUE
    o = occupations(p)
    g2 = p.g * p.g
    L = build_generator(p, 0.0, Variant.VERBATIM).entries
    assert L[0, 0] == pytest.approx(-(o.n_h + o.n_c), rel=1e-14)
    assert L[0, 2] == pytest.approx(o.tilde_n_h, rel=1e-14)
    assert L[0, 4] == pytest.approx(-2.0 * o.gamma12, rel=1e-14)
    assert L[2, 2] == pytest.approx(-2.0 * o.tilde_n_h - g2 * o.tilde_n_l, rel=1e-14)
    assert L[2, 3] == pytest.approx(g2 * o.n_l, rel=1e-14)
    assert L[2, 4] == pytest.approx(p.p_c * o.n_c, rel=1e-14)
    assert L[3, 2] == pytest.approx(g2 * o.tilde_n_l, rel=1e-14)
    assert L[3, 4] == pytest.approx(2.0 * p.p_h * o.n_h, rel=1e-14)
    assert L[4, 2] == pytest.approx(p.p_h * o.tilde_n_h, rel=1e-14)
    assert L[4, 3] == pytest.approx(2.0 * p.p_c * o.tilde_n_c, rel=1e-14)
    assert L[4, 4] == pytest.approx(-o.gbar - p.tau, rel=1e-14)


def test_detailed_balance_variant_is_trace_preserving():
    rng = np.random.default_rng(5)
    for _ in range(50):
        L = build_generator(random_params(rng), 0.0, Variant.DETAILED_BALANCE).entries
        assert np.abs(L[:4].sum(axis=0)).max() < 1e-12


def test_generator_entries_are_read_only():
    L = build_generator(BLUE).entries
    with pytest.raises(ValueError):
        L[0, 0] = 1.0


def test_variant_accepts_string_names():
    a = build_generator(BLUE, 0.1, "verbatim").entries
    b = build_generator(BLUE, 0.1, Variant.VERBATIM).entries
    assert np.array_equal(a, b)


def test_coupling_scales_only_the_exchange_block():
    weak = dataclasses.replace(BLUE, g=1e-6)
    L = build_generator(weak, 0.0).entries
    Ldressed = build_generator(weak, 0.4).entries
    # the counting factors multiply g^2, so a weak coupling suppresses them
    assert np.abs(Ldressed - L).max() < 1e-11
