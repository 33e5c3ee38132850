import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import displayed_difference, occupancies, pairs, random_bloch, random_pair
from qubit_thermometry.channel import delta_infinity, distance, evolve_bloch
from qubit_thermometry.entangled import (
    DISPLAY_ORDER,
    apply_kraus,
    bloch_to_density,
    delta_entangled,
    delta_entangled_phi_plus,
    density_to_bloch,
    evolve_two_qubit,
    family_state,
    fujiwara,
    gad_kraus,
    optimize_alpha,
    phi_plus,
    phi_plus_difference,
    phi_plus_like,
    product_state,
    two_qubit_state,
)
from qubit_thermometry.exceptions import DomainError
from qubit_thermometry.optimizer import optimal_curve, t_crossing
from qubit_thermometry.oracle import locate_kink, trace_distance_numeric

# 50-digit mpmath evolution + eigenvalues at (12, 20), t = 0.2, frozen
PHI_PLUS_REF_T02 = 0.20259606011517106375
FUJIWARA_HALF_REF_T02 = 0.20259606011517106375


def qubit_from_bloch(r):
    theta = math.acos(max(-1.0, min(1.0, r[2])))
    phi = math.atan2(r[1], r[0])
    return np.array([math.cos(theta / 2), math.sin(theta / 2) * np.exp(1j * phi)])


class TestKraus:
    @given(occupancies, st.floats(0, 10))
    @settings(max_examples=200)
    def test_completeness(self, n, t):
        ks = gad_kraus(n, t)
        total = sum(k.conj().T @ k for k in ks)
        assert np.max(np.abs(total - np.eye(2))) < 1e-12

    def test_identity_at_zero(self, rng):
        rho = bloch_to_density(random_bloch(rng))
        assert np.allclose(apply_kraus(gad_kraus(7.0, 0.0), rho), rho, atol=1e-15)

    def test_equilibrium(self, rng):
        for n in (1.0, 3.0, 12.0):
            out = apply_kraus(gad_kraus(n, 80.0), bloch_to_density(random_bloch(rng)))
            assert np.allclose(density_to_bloch(out), [0, 0, -1 / n], atol=1e-14)

    def test_matches_bloch_evolution(self, rng):
        for n, t in [(12.0, 0.1), (1.0, 0.7), (3.3, 2.0)]:
            ks = gad_kraus(n, t)
            for _ in range(10):
                r = random_bloch(rng, pure=False)
                out = density_to_bloch(apply_kraus(ks, bloch_to_density(r)))
                assert np.max(np.abs(out - evolve_bloch(r, n, t))) < 1e-12

    def test_rejects_negative_time(self):
        with pytest.raises(DomainError):
            gad_kraus(2.0, -0.1)


class TestStates:
    def test_families(self):
        assert np.allclose(phi_plus_like(0.5), phi_plus())
        assert np.allclose(fujiwara(0.25), [0, math.sqrt(0.75), -0.5, 0])
        assert np.allclose(family_state("fujiwara", 0.1), fujiwara(0.1))
        with pytest.raises(DomainError):
            family_state("ghz", 0.5)
        with pytest.raises(DomainError):
            fujiwara(1.2)

    def test_normalisation_enforced(self):
        with pytest.raises(DomainError):
            two_qubit_state([1, 1, 0, 0])
        with pytest.raises(DomainError):
            two_qubit_state([1, 0, 0])


class TestEvolveTwoQubit:
    def test_identity_at_zero(self):
        psi = fujiwara(0.3)
        assert np.allclose(evolve_two_qubit(psi, 5.0, 0.0), np.outer(psi, psi.conj()), atol=1e-15)

    def test_product_state_factorises(self, rng):
        q = qubit_from_bloch(random_bloch(rng))
        out = evolve_two_qubit(product_state(q, [1, 0]), 12.0, 0.3)
        rho_q = apply_kraus(gad_kraus(12.0, 0.3), np.outer(q, q.conj()))
        assert np.allclose(out, np.kron(rho_q, np.diag([1, 0])), atol=1e-14)

    def test_valid_density(self, rng):
        for _ in range(20):
            psi = rng.normal(size=4) + 1j * rng.normal(size=4)
            psi /= np.linalg.norm(psi)
            rho = evolve_two_qubit(psi, rng.uniform(1, 30), rng.uniform(0, 3))
            assert np.max(np.abs(rho - rho.conj().T)) < 1e-12
            assert abs(np.trace(rho) - 1) < 1e-12
            assert np.linalg.eigvalsh(rho).min() > -1e-10

    def test_phi_plus_difference_closed_form(self, ref_pair):
        diff = evolve_two_qubit(phi_plus(), 12, 0.2) - evolve_two_qubit(phi_plus(), 20, 0.2)
        assert np.max(np.abs(diff - phi_plus_difference(ref_pair, 0.2))) < 1e-12

    def test_displayed_layout(self, ref_pair):
        diff = evolve_two_qubit(phi_plus(), 12, 0.2) - evolve_two_qubit(phi_plus(), 20, 0.2)
        shown = diff[np.ix_(DISPLAY_ORDER, DISPLAY_ORDER)]
        assert np.max(np.abs(shown - displayed_difference(ref_pair, 0.2))) < 1e-12


class TestPhiPlusDistance:
    def test_limits(self, ref_pair):
        assert delta_entangled_phi_plus(ref_pair, 0.0) == 0
        assert delta_entangled_phi_plus(ref_pair, 60.0) == pytest.approx(delta_infinity(ref_pair), rel=1e-12)

    def test_frozen_value(self, ref_pair):
        assert delta_entangled_phi_plus(ref_pair, 0.2) == pytest.approx(PHI_PLUS_REF_T02, rel=1e-14)
        assert delta_entangled(phi_plus(), ref_pair, 0.2) == pytest.approx(PHI_PLUS_REF_T02, rel=1e-13)

    def test_eigen_route(self, rng):
        for _ in range(5):
            pair = random_pair(rng)
            for t in np.linspace(0, 3, 40):
                closed = delta_entangled_phi_plus(pair, t)
                numeric = trace_distance_numeric(phi_plus_difference(pair, t))
                assert abs(closed - numeric) < 1e-10
                assert abs(closed - np.abs(np.linalg.eigvalsh(phi_plus_difference(pair, t))).sum()) < 1e-12

    def test_advantage_over_single_qubit(self, ref_pair):
        ts = np.linspace(0, 2, 1000)
        _, single = optimal_curve(ref_pair, ts)
        assert np.all(delta_entangled_phi_plus(ref_pair, ts) >= single - 1e-15)

    @given(pairs(), st.floats(0, 10))
    def test_bounded(self, pair, t):
        assert 0 <= delta_entangled_phi_plus(pair, t) <= 2

    def test_kink_at_crossing(self, ref_pair):
        closed = locate_kink(lambda t: delta_entangled_phi_plus(ref_pair, t), 0.0, 2.0)
        numeric = locate_kink(lambda ts: [delta_entangled(phi_plus(), ref_pair, t) for t in ts], 0.0, 2.0)
        assert closed == pytest.approx(t_crossing(ref_pair), abs=1e-6)
        assert numeric == pytest.approx(t_crossing(ref_pair), abs=1e-6)


class TestGeneralProbes:
    def test_product_probe_reduces_to_single_qubit(self, rng, ref_pair):
        for _ in range(10):
            r = random_bloch(rng)
            q = qubit_from_bloch(r)
            t = rng.uniform(0.01, 1.0)
            two = delta_entangled(product_state(q, [0.6, 0.8j]), ref_pair, t)
            single = np.linalg.norm(evolve_bloch(r, 12, t) - evolve_bloch(r, 20, t))
            assert two == pytest.approx(single, abs=1e-12)

    def test_fujiwara_half(self, ref_pair):
        assert delta_entangled(fujiwara(0.5), ref_pair, 0.2) == pytest.approx(FUJIWARA_HALF_REF_T02, rel=1e-13)

    def test_endpoints_are_single_qubit(self, ref_pair):
        t = 0.3
        assert delta_entangled(phi_plus_like(0.0), ref_pair, t) == pytest.approx(distance(ref_pair, t, 0.0), abs=1e-12)
        assert delta_entangled(phi_plus_like(1.0), ref_pair, t) == pytest.approx(distance(ref_pair, t, math.pi), abs=1e-12)
        assert delta_entangled(fujiwara(0.0), ref_pair, t) == pytest.approx(distance(ref_pair, t, 0.0), abs=1e-12)
        assert delta_entangled(fujiwara(1.0), ref_pair, t) == pytest.approx(distance(ref_pair, t, math.pi), abs=1e-12)


class TestOptimizeAlpha:
    @pytest.mark.parametrize("family", ["phi-plus-like", "fujiwara"])
    def test_dominates(self, ref_pair, family):
        t = 0.3
        alpha, best = optimize_alpha(ref_pair, t, family, points=201)
        assert 0 <= alpha <= 1
        assert best >= delta_entangled(family_state(family, 0.5), ref_pair, t)
        assert best >= delta_entangled(family_state(family, 0.0), ref_pair, t)
        assert best >= delta_entangled(family_state(family, 1.0), ref_pair, t)
        assert best == pytest.approx(delta_entangled(family_state(family, alpha), ref_pair, t), abs=1e-14)

    def test_optimum_is_not_maximally_entangled(self, ref_pair):
        alpha, best = optimize_alpha(ref_pair, 0.3, "fujiwara")
        assert abs(alpha - 0.5) > 1e-3
        assert best > delta_entangled(fujiwara(0.5), ref_pair, 0.3)

    def test_rejects_zero_time(self, ref_pair):
        with pytest.raises(DomainError):
            optimize_alpha(ref_pair, 0.0)
