import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoq import (
    ALPHA_WINDOW,
    AlphaMu,
    DensityMatrix,
    DomainError,
    ParameterError,
    SizeError,
    StateVector,
    coa_search,
    coa_two_qubit,
    concurrence_pure,
    convex_roof_oracle,
    f_alpha,
    haar_random_state,
    partial_trace,
    pure_to_density,
    random_mixed_state,
    renyi_entanglement_pure,
    renyi_entanglement_two_qubit,
    renyi_entropy,
    w_state,
    wootters_concurrence,
)
from monoq.errors import InvalidSubsystemError
from monoq.harness import REFERENCE_ALPHA, reference_schmidt_state

ALPHA_LO, ALPHA_HI = ALPHA_WINDOW

# mpmath cross-checks, 30 significant digits
F_SIXTH_823 = 0.318619967382228888
F_HALF_823 = 0.654205127845905331
F_FOUR_NINTHS_823 = 0.607217561225096754
F_EIGHT_NINTHS_823 = 0.932107626871049128
F_HALF_EXACT = 0.654245275382445879
S_W_EXACT = 0.932117451946034941
F1_HALF_LIMIT = 0.600876036692856101


def bell_projector():
    amps = np.array([1, 0, 0, 1]) / np.sqrt(2)
    return DensityMatrix(np.outer(amps, amps.conj()))


def w_marginal():
    return partial_trace(pure_to_density(w_state()), {"A", "B1"})


class TestRenyiEntropy:
    def test_pure_spectrum_is_zero(self):
        for alpha in (0.5, ALPHA_LO, 1.0, 2.0):
            assert renyi_entropy([1.0, 0.0], alpha) == 0.0

    def test_maximally_mixed_qubit(self):
        for alpha in (0.5, ALPHA_LO, 0.9999999, 2.0):
            assert abs(renyi_entropy([0.5, 0.5], alpha) - 1.0) < 1e-12

    def test_w_spectrum_reference_value(self):
        # quoted at order 0.823; the exact window endpoint shifts it to 0.9321174...
        assert abs(renyi_entropy([2 / 3, 1 / 3], 0.823) - 0.932108) < 1e-6
        assert abs(renyi_entropy([2 / 3, 1 / 3], ALPHA_LO) - S_W_EXACT) < 1e-12

    def test_continuity_at_one(self):
        spec = [0.6, 0.3, 0.1]
        vn = renyi_entropy(spec, 1.0)
        assert abs(renyi_entropy(spec, 1.0 + 1e-7) - vn) < 1e-5
        assert abs(renyi_entropy(spec, 1.0 - 1e-7) - vn) < 1e-5

    def test_rejects_nonpositive_alpha(self):
        with pytest.raises(ParameterError):
            renyi_entropy([0.5, 0.5], 0.0)
        with pytest.raises(ParameterError):
            renyi_entropy([0.5, 0.5], -1.0)


class TestFAlpha:
    def test_endpoints(self):
        for alpha in (ALPHA_LO, 0.9, 1.0, 1.1, ALPHA_HI):
            assert f_alpha(0.0, alpha) == 0.0
            assert abs(f_alpha(1.0, alpha) - 1.0) < 1e-12

    def test_reference_values(self):
        assert abs(f_alpha(0.5, 0.823) - F_HALF_823) < 1e-14
        assert abs(f_alpha(4 / 9, 0.823) - F_FOUR_NINTHS_823) < 1e-14
        assert abs(f_alpha(1 / 6, 0.823) - F_SIXTH_823) < 1e-14
        assert abs(f_alpha(0.5, ALPHA_LO) - F_HALF_EXACT) < 1e-14

    def test_alpha_one_limit_branch(self):
        assert abs(f_alpha(0.5, 1.0) - F1_HALF_LIMIT) < 1e-12
        assert abs(f_alpha(0.5, 1.0 + 9e-7) - F1_HALF_LIMIT) < 1e-5

    def test_monotone_on_grid(self):
        xs = np.linspace(0.0, 1.0, 1001)
        for alpha in np.linspace(ALPHA_LO, ALPHA_HI, 7):
            vals = f_alpha(xs, alpha)
            assert np.min(np.diff(vals)) >= -1e-12

    def test_squared_argument_convex_in_concurrence(self):
        cs = np.linspace(0.0, 1.0, 801)
        for alpha in (ALPHA_LO, 1.0, ALPHA_HI):
            vals = f_alpha(cs**2, alpha)
            second = np.diff(vals, 2)
            assert np.min(second) >= -1e-9

    def test_subadditive_in_squared_arguments(self):
        grid = np.linspace(0.0, 1.0, 201)
        xx, yy = np.meshgrid(grid, grid)
        mask = xx**2 + yy**2 <= 1.0
        x2, y2 = xx[mask] ** 2, yy[mask] ** 2
        for alpha in (ALPHA_LO, 1.3027):
            lhs = f_alpha(x2 + y2, alpha)
            rhs = f_alpha(x2, alpha) + f_alpha(y2, alpha)
            assert np.max(lhs - rhs) <= 1e-12

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            f_alpha(-0.01, 0.9)
        with pytest.raises(DomainError):
            f_alpha(1.01, 0.9)
        with pytest.raises(ParameterError):
            f_alpha(0.5, 0.0)

    @given(st.floats(min_value=0.0, max_value=1.0), st.floats(min_value=0.83, max_value=1.3))
    @settings(max_examples=200, deadline=None)
    def test_range_property(self, x, alpha):
        val = f_alpha(x, alpha)
        assert -1e-12 <= val <= 1.0 + 1e-10


class TestConcurrencePure:
    def test_product_state(self):
        psi = StateVector(np.kron([1, 0], [1 / np.sqrt(2), 1j / np.sqrt(2)]))
        assert concurrence_pure(psi, {"A"}) < 1e-10

    def test_bell_state(self):
        psi = StateVector(np.array([1, 0, 0, 1]) / np.sqrt(2))
        assert abs(concurrence_pure(psi, {"A"}) - 1.0) < 1e-12

    def test_reference_state_cut(self):
        # 2 l0 sqrt(l2^2 + l3^2 + l4^2) = sqrt(1/2) for the reference parameters
        psi = reference_schmidt_state()
        assert abs(concurrence_pure(psi, {"A"}) - np.sqrt(0.5)) < 1e-12

    def test_trivial_partition_rejected(self):
        psi = w_state()
        with pytest.raises(InvalidSubsystemError):
            concurrence_pure(psi, set())
        with pytest.raises(InvalidSubsystemError):
            concurrence_pure(psi, {"A", "B1", "B2"})


class TestWoottersConcurrence:
    def test_maximally_mixed(self):
        assert wootters_concurrence(DensityMatrix(np.eye(4) / 4)) == 0.0

    def test_bell_projector(self):
        assert abs(wootters_concurrence(bell_projector()) - 1.0) < 1e-12

    def test_w_marginal(self):
        assert abs(wootters_concurrence(w_marginal()) - 2 / 3) < 1e-12

    def test_w_marginal_agrees_with_decomposition_search(self):
        # C = C^a on this marginal, so the assisted search pins the same value
        est = coa_search(w_marginal(), n_trials=4000, seed=5)
        assert abs(est - 2 / 3) < 1e-6

    def test_wrong_dimension(self):
        with pytest.raises(SizeError):
            wootters_concurrence(DensityMatrix(np.eye(2) / 2))

    def test_pure_states_match_cut_concurrence(self):
        for seed in range(10):
            psi = haar_random_state(2, seed=seed)
            rho = pure_to_density(psi)
            assert abs(wootters_concurrence(rho) - concurrence_pure(psi, {"A"})) < 1e-10


class TestCoaTwoQubit:
    def test_pure_state_equals_concurrence(self):
        for seed in range(10):
            rho = pure_to_density(haar_random_state(2, seed=seed))
            assert abs(coa_two_qubit(rho) - wootters_concurrence(rho)) < 1e-10

    def test_w_marginal(self):
        assert abs(coa_two_qubit(w_marginal()) - 2 / 3) < 1e-12

    def test_dominates_concurrence(self):
        for seed in range(200):
            rho = random_mixed_state(2, rank=np.random.default_rng(seed).integers(2, 5), seed=seed)
            assert coa_two_qubit(rho) >= wootters_concurrence(rho) - 1e-12

    def test_close_to_best_random_decomposition(self):
        for seed in range(10):
            rho = random_mixed_state(2, rank=2, seed=1000 + seed)
            est = coa_search(rho, n_trials=10_000, seed=seed)
            value = coa_two_qubit(rho)
            assert est <= value + 1e-9
            assert value - est <= 1e-3

    def test_wrong_dimension(self):
        with pytest.raises(SizeError):
            coa_two_qubit(DensityMatrix(np.eye(8) / 8))


class TestRenyiEntanglement:
    def test_product_marginal_zero(self):
        psi = StateVector(np.kron([1, 0], [0, 1]).astype(complex))
        rho = pure_to_density(psi)
        assert renyi_entanglement_two_qubit(rho, 0.9) == 0.0

    def test_reference_pair_value(self):
        rho = pure_to_density(reference_schmidt_state())
        for partner in ("B1", "B2"):
            marginal = partial_trace(rho, {"A", partner})
            assert abs(renyi_entanglement_two_qubit(marginal, 0.823) - 0.318620) < 1e-6

    def test_bell_is_one_for_any_alpha(self):
        assert abs(renyi_entanglement_two_qubit(bell_projector(), 1.3) - 1.0) < 1e-12

    def test_pure_cut_values(self):
        psi = reference_schmidt_state()
        assert abs(renyi_entanglement_pure(psi, {"A"}, 0.823) - 0.654205) < 1e-6
        assert abs(renyi_entanglement_pure(w_state(), {"A"}, 0.823) - 0.932108) < 1e-6

    def test_two_qubit_routes_agree_on_pure_states(self):
        for seed in range(20):
            psi = haar_random_state(2, seed=300 + seed)
            rho = pure_to_density(psi)
            via_formula = renyi_entanglement_two_qubit(rho, REFERENCE_ALPHA)
            via_spectrum = renyi_entanglement_pure(psi, {"A"}, REFERENCE_ALPHA)
            assert abs(via_formula - via_spectrum) < 1e-10


class TestConvexRoofOracle:
    def test_pure_input_exact(self):
        rho = pure_to_density(haar_random_state(2, seed=9))
        exact = renyi_entanglement_two_qubit(rho, ALPHA_LO)
        assert abs(convex_roof_oracle(rho, ALPHA_LO, n_trials=1, seed=0) - exact) < 1e-10

    def test_bell_projector(self):
        assert abs(convex_roof_oracle(bell_projector(), ALPHA_LO, 100, seed=0) - 1.0) < 1e-10

    def test_w_marginal_converges(self):
        # equality of assisted and plain concurrence pins the roof at f(4/9)
        val = convex_roof_oracle(w_marginal(), 0.823, n_trials=10_000, seed=1)
        assert abs(val - F_FOUR_NINTHS_823) < 1e-3
        assert val >= F_FOUR_NINTHS_823 - 1e-9

    def test_upper_bounds_analytic_value(self):
        for seed in range(5):
            rho = random_mixed_state(2, rank=2, seed=2000 + seed)
            analytic = renyi_entanglement_two_qubit(rho, ALPHA_LO)
            est = convex_roof_oracle(rho, ALPHA_LO, n_trials=3000, seed=seed)
            assert est >= analytic - 1e-9

    def test_rank_three_and_four_supported(self):
        for rank in (3, 4):
            rho = random_mixed_state(2, rank=rank, seed=40 + rank)
            analytic = renyi_entanglement_two_qubit(rho, ALPHA_LO)
            est = convex_roof_oracle(rho, ALPHA_LO, n_trials=2000, seed=rank)
            assert est >= analytic - 1e-9

    def test_bad_trial_count(self):
        with pytest.raises(ParameterError):
            convex_roof_oracle(bell_projector(), ALPHA_LO, n_trials=0, seed=0)


class TestAlphaMu:
    def test_validation(self):
        with pytest.raises(ParameterError):
            AlphaMu(0.0, 2.0)
        with pytest.raises(ParameterError):
            AlphaMu(0.9, -1.0)

    def test_monogamy_mode(self):
        AlphaMu(0.9, 2.0).require_monogamy()
        with pytest.raises(ParameterError):
            AlphaMu(0.9, 1.5).require_monogamy()
        with pytest.raises(ParameterError):
            AlphaMu(0.5, 3.0).require_monogamy()

    def test_polygamy_mode(self):
        AlphaMu(1.3, 0.5).require_polygamy()
        with pytest.raises(ParameterError):
            AlphaMu(1.3, 1.5).require_polygamy()
        with pytest.raises(ParameterError):
            AlphaMu(2.0, 0.5).require_polygamy()

    def test_window(self):
        assert AlphaMu(0.8229, 2.0).in_theorem_window
        assert AlphaMu(1.3027, 2.0).in_theorem_window
        assert not AlphaMu(0.5, 2.0).in_theorem_window
