import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transferlab.dynamics import (
    cyclic_system,
    orbit_trace,
    random_permutation_system,
    rotation_system,
)
from transferlab.line_ops import LineOperatorSpec
from transferlab.spaces import SampledSequence, VectorField
from transferlab.transfer import (
    ConfigurationError,
    TransferredOperator,
    check_equimeasurability,
    ergodic_maximal,
    evaluate_transferred,
    transfer_apply,
    truncate_trace,
)

OPS = [LineOperatorSpec("osmax", 5), LineOperatorSpec("hl", 3), LineOperatorSpec("avg", 4)]


def naive_ergodic_maximal(fwd, f, n_max):
    # direct evaluation of max_n (1/n) sum_{k<n} |f(tau^k x)|
    out = np.zeros_like(f)
    for j in range(f.shape[0]):
        for x in range(f.shape[1]):
            best, s, y = 0.0, 0.0, x
            for n in range(1, n_max + 1):
                s += abs(f[j, y])
                best = max(best, s / n)
                y = fwd[y]
            out[j, x] = best
    return out


def delta_field(system, atom):
    v = np.zeros((1, system.n_atoms))
    v[0, atom] = 1.0
    return VectorField(v, system.space)


systems = st.one_of(
    st.integers(1, 30).map(cyclic_system),
    st.tuples(st.integers(1, 30), st.integers(-40, 40)).map(lambda t: rotation_system(*t)),
    st.tuples(st.integers(1, 30), st.integers(0, 2**32)).map(lambda t: random_permutation_system(*t)),
)


class TestTransferApply:
    def test_avg1_is_abs(self):
        s = random_permutation_system(9, 4)
        f = VectorField(np.random.default_rng(0).uniform(-1, 1, (3, 9)), s.space)
        out = transfer_apply(TransferredOperator(LineOperatorSpec("avg", 1), s), f)
        assert np.array_equal(out.values, np.abs(f.values))

    @pytest.mark.parametrize("n", [1, 4, 8])
    def test_fixed_points(self, n):
        s = rotation_system(6, 0)
        f = VectorField(np.random.default_rng(1).uniform(-1, 1, (2, 6)), s.space)
        out = transfer_apply(TransferredOperator(LineOperatorSpec("osmax", n), s), f)
        np.testing.assert_allclose(out.values, np.abs(f.values), rtol=1e-15)

    def test_delta_matches_ergodic_maximal(self):
        s = cyclic_system(10)
        for atom in range(10):
            f = delta_field(s, atom)
            out = transfer_apply(TransferredOperator(LineOperatorSpec("osmax", 8), s), f)
            assert np.array_equal(out.values, ergodic_maximal(s, f, 8).values)

    def test_window_too_small(self):
        with pytest.raises(ConfigurationError):
            TransferredOperator(LineOperatorSpec("hl", 4), cyclic_system(5), window_halfwidth=7)

    def test_default_window(self):
        top = TransferredOperator(LineOperatorSpec("osmax", 8), cyclic_system(5))
        assert top.window_halfwidth == 7 + 8 + 1

    @settings(max_examples=40, deadline=None)
    @given(systems, st.sampled_from(OPS), st.integers(0, 20), st.integers(0, 2**32))
    def test_window_stability(self, system, op, extra, seed):
        f = VectorField(np.random.default_rng(seed).uniform(-1, 1, (2, system.n_atoms)), system.space)
        base = transfer_apply(TransferredOperator(op, system), f)
        wide = TransferredOperator(op, system, TransferredOperator.minimum_halfwidth(op) + extra)
        assert np.array_equal(base.values, transfer_apply(wide, f).values)

    @settings(max_examples=40, deadline=None)
    @given(systems, st.sampled_from(OPS), st.integers(0, 2**32))
    def test_commutes_with_system_action(self, system, op, seed):
        f = VectorField(np.random.default_rng(seed).uniform(-1, 1, (2, system.n_atoms)), system.space)
        top = TransferredOperator(op, system)
        lhs = system.compose_field(transfer_apply(top, f))
        rhs = transfer_apply(top, system.compose_field(f))
        assert np.array_equal(lhs.values, rhs.values)

    def test_matches_line_operator_on_single_trace(self):
        s = random_permutation_system(15, 2)
        op = LineOperatorSpec("hl", 3)
        f = VectorField(np.random.default_rng(3).uniform(-1, 1, (2, 15)), s.space)
        out = transfer_apply(TransferredOperator(op, s), f)
        for x in range(15):
            g = op.apply(orbit_trace(s, f, x, -3, 3))
            assert np.array_equal(g.at(0), out.values[:, x])


class TestErgodicMaximal:
    def test_delta_law(self):
        s = cyclic_system(10)
        a = 6
        out = ergodic_maximal(s, delta_field(s, a), 12).values[0]
        for x in range(10):
            d = (a - x) % 10
            assert out[x] == 1 / (d + 1)

    def test_constant(self):
        s = random_permutation_system(7, 1)
        out = ergodic_maximal(s, VectorField(np.full((1, 7), 0.4), s.space), 9)
        np.testing.assert_allclose(out.values, 0.4, rtol=1e-15)

    def test_identity_system(self):
        s = rotation_system(5, 0)
        f = VectorField(np.random.default_rng(5).uniform(-1, 1, (2, 5)), s.space)
        np.testing.assert_allclose(ergodic_maximal(s, f, 6).values, np.abs(f.values), rtol=1e-15)

    @settings(max_examples=60, deadline=None)
    @given(systems, st.integers(1, 12), st.integers(0, 2**32))
    def test_matches_naive_loop(self, system, n_max, seed):
        f = np.random.default_rng(seed).uniform(-1, 1, (2, system.n_atoms))
        expected = naive_ergodic_maximal(system.forward, f, n_max)
        got = ergodic_maximal(system, VectorField(f, system.space), n_max).values
        assert np.array_equal(got, expected)
        assert np.all(got >= np.abs(f))


class TestTruncation:
    def test_large_radius_unchanged(self):
        seq = SampledSequence(np.arange(1.0, 8.0)[None, :], offset=-3)
        assert np.array_equal(truncate_trace(seq, 4).values, seq.values)

    def test_radius_one_keeps_origin(self):
        seq = SampledSequence(np.arange(1.0, 8.0)[None, :], offset=-3)
        out = truncate_trace(seq, 1)
        assert out.values[0].tolist() == [0, 0, 0, 4, 0, 0, 0]

    def test_boundary_is_dropped(self):
        seq = SampledSequence(np.eye(7)[6][None, :], offset=-3)
        assert np.all(truncate_trace(seq, 3).values == 0)

    @pytest.mark.parametrize("op", OPS, ids=str)
    def test_domination_with_lattice_cutoff(self, op):
        # G <= G^{a+eps} on |t| <= a when the cutoff keeps |t| <= a + eps
        rng = np.random.default_rng(8)
        a, eps = 6, op.semilocal_radius
        seq = SampledSequence(rng.uniform(-1, 1, (2, 61)), offset=-30)
        full = op.apply(seq)
        trunc = op.apply(truncate_trace(seq, a + eps + 1))
        for t in range(-a, a + 1):
            assert np.all(full.at(t) <= trunc.at(t))

    def test_strict_cutoff_is_not_enough(self):
        # keeping only |t| < a + eps leaves mass at distance exactly eps from t = a
        op = LineOperatorSpec("osmax", 4)
        a, eps = 5, op.semilocal_radius
        seq = SampledSequence(np.eye(41)[20 + a + eps][None, :], offset=-20)
        full = op.apply(seq)
        trunc = op.apply(truncate_trace(seq, a + eps))
        assert full.at(a)[0] > trunc.at(a)[0]


class TestEquimeasurability:
    def test_identity_system(self):
        rep = check_equimeasurability(rotation_system(6, 0), None, OPS[0], s=3, n_trials=5)
        assert rep.passed and rep.n_cases == 5

    def test_cyclic16_shift5(self):
        rep = check_equimeasurability(cyclic_system(16), None, LineOperatorSpec("osmax", 4), s=5, n_trials=50, seed=2)
        assert rep.passed, rep.violations

    def test_sorted_distributions(self):
        s = random_permutation_system(20, 9)
        op = LineOperatorSpec("hl", 2)
        f = VectorField(np.random.default_rng(4).uniform(-1, 1, (2, 20)), s.space)
        G = evaluate_transferred(op, s, f, -3, 3)
        key = lambda t: sorted(map(tuple, G[:, :, t + 3].T.tolist()))
        for t in range(-3, 4):
            assert key(t) == key(0)

    def test_detects_a_broken_operator(self):
        class Drifting(LineOperatorSpec):
            # not translation-invariant: weights samples by absolute position
            def apply_values(self, values):
                out = super().apply_values(values)
                return out * (1 + np.arange(out.shape[-1]))

        rep = check_equimeasurability(cyclic_system(8), None, Drifting("avg", 1), s=1, n_trials=3)
        assert not rep.passed
