import json
import warnings
from fractions import Fraction

import pytest

from minertia.hermitian_core import HermitianMatrix, inertia
from minertia.search import (
    GrowReport,
    ProfileReport,
    SearchConfig,
    SearchReport,
    SubspaceBasis,
    Witness,
    empirical_min_inertia_profile,
    falsify_min_inertia,
    grow_subspace,
    random_subspace,
    run_search,
)


def unit_matrix(q, i, j, re=1, im=0):
    entries = [[0] * q for _ in range(q)]
    entries[i][j] = (Fraction(re), Fraction(im))
    if i != j:
        entries[j][i] = (Fraction(re), Fraction(-im))
    return HermitianMatrix(entries)


FAST = SearchConfig(seed=11, samples=60, descent_steps=25, descent_starts=4)


class TestSubspaceBasis:
    def test_dimension_and_element(self):
        b1 = unit_matrix(3, 0, 0)
        b2 = unit_matrix(3, 0, 1)
        L = SubspaceBasis(3, [b1, b2])
        assert L.dim == 2
        el = L.element([Fraction(2), Fraction(-1, 2)])
        assert el.entries[0][0].re == 2
        assert el.entries[0][1].re == Fraction(-1, 2)
        assert el.entries[1][0].re == Fraction(-1, 2)

    def test_rejects_dependent(self):
        b1 = unit_matrix(3, 0, 0)
        with pytest.raises(ValueError):
            SubspaceBasis(3, [b1, b1.scale(2)])

    def test_rejects_mixed_sizes(self):
        with pytest.raises(ValueError):
            SubspaceBasis(3, [unit_matrix(3, 0, 0), unit_matrix(2, 0, 0)])

    def test_json_round_trip(self):
        L = random_subspace(3, 4, seed=5)
        assert SubspaceBasis.from_json(L.to_json()).basis == L.basis


class TestRandomSubspace:
    def test_requested_dimension(self):
        L = random_subspace(5, 8, seed=1)
        assert L.q == 5 and L.dim == 8

    def test_full_space(self):
        L = random_subspace(3, 9, seed=2)
        assert L.dim == 9

    def test_dim_out_of_range(self):
        with pytest.raises(ValueError):
            random_subspace(5, 26, seed=3)
        with pytest.raises(ValueError):
            random_subspace(5, 0, seed=3)

    def test_seed_determinism(self):
        a = random_subspace(4, 6, seed=99)
        b = random_subspace(4, 6, seed=99)
        assert a.basis == b.basis
        c = random_subspace(4, 6, seed=100)
        assert a.basis != c.basis


class TestFalsifier:
    def test_rank_one_psd_span_gives_witness(self):
        L = SubspaceBasis(5, [unit_matrix(5, 0, 0)])
        w = falsify_min_inertia(L, FAST)
        assert w is not None
        assert w.inertia.m == 0
        assert w.inertia.rank == 1
        assert inertia(w.element) == w.inertia

    def test_balanced_diagonal_span_is_inconclusive(self):
        L = SubspaceBasis(5, [HermitianMatrix.diagonal([1, 1, -1, -1, 0])])
        rep = run_search(L, FAST)
        assert rep.witness is None
        assert rep.histogram == {2: FAST.samples}

    def test_nine_dimensional_subspace_has_witness(self):
        L = random_subspace(5, 9, seed=424242)
        cfg = SearchConfig(seed=424242)
        w = falsify_min_inertia(L, cfg)
        assert w is not None
        assert w.inertia.m <= 1

    def test_witness_is_exactly_certified(self):
        L = random_subspace(5, 9, seed=7)
        rep = run_search(L, SearchConfig(seed=7))
        w = rep.witness
        assert w is not None
        element = L.element(w.coefficients)
        assert element == w.element
        assert not element.is_zero()
        assert inertia(element) == w.inertia
        assert min(w.inertia.n_plus, w.inertia.n_minus) <= 1

    def test_report_determinism(self):
        L = random_subspace(5, 9, seed=13)
        cfg = SearchConfig(seed=13)
        r1 = run_search(L, cfg)
        r2 = run_search(L, cfg)
        assert r1.to_json() == r2.to_json()

    def test_worker_count_does_not_change_results(self):
        L = random_subspace(5, 9, seed=17)
        r1 = run_search(L, SearchConfig(seed=17, samples=200, workers=1))
        r3 = run_search(L, SearchConfig(seed=17, samples=200, workers=3))
        d1, d3 = r1.to_json(), r3.to_json()
        d1.pop("workers"), d3.pop("workers")
        assert d1 == d3

    def test_report_json_round_trip(self):
        L = random_subspace(5, 9, seed=19)
        rep = run_search(L, SearchConfig(seed=19))
        doc = json.loads(json.dumps(rep.to_json()))
        assert SearchReport.from_json(doc).to_json() == rep.to_json()


def standard_basis(q):
    basis = [unit_matrix(q, i, i) for i in range(q)]
    basis += [unit_matrix(q, i, j) for i in range(q) for j in range(i + 1, q)]
    basis += [unit_matrix(q, i, j, 0, 1) for i in range(q) for j in range(i + 1, q)]
    return SubspaceBasis(q, basis)


class TestProfile:
    def test_full_space_q3_mass_at_low_m(self):
        # every 3x3 Hermitian matrix has m <= 1; under the standard basis
        # definite samples (m = 0) must also show up in a large draw
        L = standard_basis(3)
        rep = empirical_min_inertia_profile(L, SearchConfig(seed=23, samples=4000))
        assert set(rep.histogram) <= {0, 1}
        assert rep.histogram.get(1, 0) > 0
        assert rep.histogram.get(0, 0) > 0
        assert sum(rep.histogram.values()) == 4000

    def test_single_projective_point(self):
        L = SubspaceBasis(5, [HermitianMatrix.diagonal([1, 1, -1, -1, 0])])
        rep = empirical_min_inertia_profile(L, SearchConfig(seed=29, samples=500))
        assert rep.histogram == {2: 500}

    def test_worker_invariance(self):
        L = random_subspace(4, 7, seed=31)
        r1 = empirical_min_inertia_profile(L, SearchConfig(seed=31, samples=1000, workers=1))
        r2 = empirical_min_inertia_profile(L, SearchConfig(seed=31, samples=1000, workers=4))
        assert r1.histogram == r2.histogram

    def test_spot_checks_recorded(self):
        L = random_subspace(4, 5, seed=37)
        rep = empirical_min_inertia_profile(
            L, SearchConfig(seed=37, samples=100, verify_fraction=0.1)
        )
        assert rep.spot_checked == 10
        assert rep.spot_mismatches == 0

    def test_json_round_trip(self):
        L = random_subspace(3, 3, seed=41)
        rep = empirical_min_inertia_profile(L, SearchConfig(seed=41, samples=50))
        assert ProfileReport.from_json(rep.to_json()).to_json() == rep.to_json()


class TestGrow:
    def test_target_zero_trivial(self):
        rep = grow_subspace(5, 0, FAST)
        assert rep.achieved_dim == 0
        assert rep.steps == ()
        assert not rep.certified

    def test_growth_at_q5(self):
        cfg = SearchConfig(seed=47, samples=80, descent_steps=30, descent_starts=4)
        rep = grow_subspace(5, 3, cfg)
        assert 0 <= rep.achieved_dim <= 3
        assert len(rep.steps) >= rep.achieved_dim
        assert not rep.certified
        # every accepted basis element must be exactly independent
        assert rep.basis.dim == rep.achieved_dim

    def test_warning_above_limit(self):
        cfg = SearchConfig(seed=53, samples=30, descent_steps=10, descent_starts=2)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            rep = grow_subspace(5, 9, cfg)
        assert rep.warning is not None
        assert any("dimension limit" in str(w.message) for w in caught)

    def test_no_warning_for_other_q(self):
        cfg = SearchConfig(seed=59, samples=30, descent_steps=10, descent_starts=2)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            rep = grow_subspace(6, 2, cfg)
        assert rep.warning is None

    def test_report_json(self):
        rep = grow_subspace(5, 2, FAST)
        doc = json.loads(json.dumps(rep.to_json()))
        assert doc["q"] == 5
        assert doc["certified"] is False
        assert len(doc["basis"]) == doc["achieved_dim"]
        assert GrowReport.from_json(doc).to_json() == doc


class TestWitnessSerialization:
    def test_round_trip(self):
        L = SubspaceBasis(5, [unit_matrix(5, 0, 0)])
        w = falsify_min_inertia(L, FAST)
        doc = json.loads(json.dumps(w.to_json()))
        back = Witness.from_json(doc)
        assert back.coefficients == w.coefficients
        assert back.element == w.element
        assert back.inertia == w.inertia


class TestConfigValidation:
    def test_bad_values(self):
        with pytest.raises(ValueError):
            SearchConfig(seed=1, samples=0)
        with pytest.raises(ValueError):
            SearchConfig(seed=1, workers=0)
        with pytest.raises(ValueError):
            SearchConfig(seed=1, float_tolerance=0)
        with pytest.raises(ValueError):
            SearchConfig(seed=1, verify_fraction=1.5)
