import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transferlab.dynamics import (
    PermutationSystem,
    cyclic_system,
    orbit_trace,
    parse_system,
    random_permutation_system,
    rotation_system,
)
from transferlab.spaces import VectorField


def enumerate_orbit(fwd, x):
    orbit = [x]
    while True:
        nxt = int(fwd[orbit[-1]])
        if nxt == x:
            return orbit
        orbit.append(nxt)


def cycle_lengths(system):
    seen, lengths = set(), []
    for x in range(system.n_atoms):
        if x not in seen:
            orb = enumerate_orbit(system.forward, x)
            seen.update(orb)
            lengths.append(len(orb))
    return sorted(lengths)


systems = st.one_of(
    st.integers(1, 40).map(cyclic_system),
    st.tuples(st.integers(1, 40), st.integers(-50, 50)).map(lambda t: rotation_system(*t)),
    st.tuples(st.integers(1, 40), st.integers(0, 2**32)).map(
        lambda t: random_permutation_system(*t)
    ),
)


def test_cyclic_one_atom_is_identity():
    assert cyclic_system(1).forward.tolist() == [0]


def test_cyclic_orbit():
    s = cyclic_system(3)
    assert enumerate_orbit(s.forward, 0) == [0, 1, 2]
    assert s.power(5)[2] == 7 % 3
    assert cyclic_system(10).power(5)[2] == 7


def test_cyclic_rejects_zero():
    with pytest.raises(ValueError):
        cyclic_system(0)


def test_rotation_cycles():
    assert cycle_lengths(rotation_system(8, 3)) == [8]
    assert cycle_lengths(rotation_system(8, 2)) == [4, 4]
    assert rotation_system(5, 0).forward.tolist() == list(range(5))
    assert rotation_system(8, 3).is_ergodic()
    assert not rotation_system(8, 2).is_ergodic()


def test_random_system_determinism():
    assert random_permutation_system(1, 99).forward.tolist() == [0]
    a = random_permutation_system(50, 7)
    b = random_permutation_system(50, 7)
    assert np.array_equal(a.forward, b.forward)
    assert sorted(a.forward.tolist()) == list(range(50))


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        PermutationSystem([0, 0, 1])


def test_rejects_non_invariant_weights():
    with pytest.raises(ValueError):
        PermutationSystem([1, 0, 2], weights=[0.2, 0.3, 0.5])
    s = PermutationSystem([1, 0, 2], weights=[0.25, 0.25, 0.5])
    assert s.weights.tolist() == [0.25, 0.25, 0.5]


@settings(max_examples=60, deadline=None)
@given(systems)
def test_inverse_consistent(system):
    n = system.n_atoms
    assert np.array_equal(system.forward[system.inverse], np.arange(n))
    assert np.array_equal(system.inverse[system.forward], np.arange(n))


@settings(max_examples=60, deadline=None)
@given(systems, st.integers(-30, 30), st.integers(0, 2**32))
def test_measure_preservation(system, s, seed):
    rng = np.random.default_rng(seed)
    indicator = (rng.random(system.n_atoms) < 0.5).astype(float)
    moved = indicator[system.power(s)]
    w = system.weights
    assert math.fsum(w * moved) == math.fsum(w * indicator)
    assert sorted(moved.tolist()) == sorted(indicator.tolist())


def test_identity_trace_is_constant():
    s = rotation_system(4, 0)
    f = VectorField(np.arange(8.0).reshape(2, 4), s.space)
    tr = orbit_trace(s, f, 2, -3, 3)
    assert np.all(tr.values == f.values[:, [2]])


def test_delta_trace_on_cycle():
    s = cyclic_system(4)
    f = VectorField([[1.0, 0, 0, 0]], s.space)
    assert orbit_trace(s, f, 0, -2, 2).values[0].tolist() == [0, 0, 1, 0, 0]
    assert orbit_trace(s, f, 0, -4, 4).values[0].tolist() == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_trace_rejects_bad_atom():
    s = cyclic_system(4)
    f = VectorField(np.zeros((1, 4)), s.space)
    with pytest.raises(IndexError):
        orbit_trace(s, f, 4, -1, 1)


@settings(max_examples=60, deadline=None)
@given(systems, st.integers(-20, 20), st.integers(0, 2**32))
def test_group_law(system, s, seed):
    rng = np.random.default_rng(seed)
    n = system.n_atoms
    f = VectorField(rng.uniform(-1, 1, (2, n)), system.space)
    x = int(rng.integers(n))
    wide = orbit_trace(system, f, x, -40, 40)
    moved = orbit_trace(system, f, int(system.power(s)[x]), -10, 10)
    # F(t, tau^s x) = F(t + s, x)
    assert np.array_equal(moved.values, wide.restrict(-10 + s, 10 + s).values)


def test_single_cycle_periodicity():
    s = rotation_system(7, 3)
    f = VectorField(np.random.default_rng(1).uniform(size=(1, 7)), s.space)
    tr = orbit_trace(s, f, 0, -14, 14).values[0]
    assert np.array_equal(tr[:-7], tr[7:])


def test_orbit_indices_match_single_traces():
    s = random_permutation_system(12, 3)
    idx = s.orbit_indices(-5, 6)
    f = VectorField(np.arange(12.0)[None, :], s.space)
    for x in range(12):
        assert np.array_equal(idx[x], orbit_trace(s, f, x, -5, 6).values[0].astype(int))


@pytest.mark.parametrize(
    "text,n",
    [("cyclic:5", 5), ("rotation:8,3", 8), ("random:1,0", 1), ("random:20,7", 20)],
)
def test_parse_system(text, n):
    assert parse_system(text).n_atoms == n


@pytest.mark.parametrize("text", ["cyclic:", "cyclic:0", "rotation:8", "spiral:3", "random:5,-1", "cyclic:3,1"])
def test_parse_system_errors(text):
    with pytest.raises(ValueError):
        parse_system(text)
