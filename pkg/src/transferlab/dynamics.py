"""Finite measure-preserving systems given by a permutation of the atoms.

An invertible map ``tau`` of ``{0, ..., N-1}`` preserves the weights ``mu``
exactly when ``mu`` is constant on every cycle of ``tau``.  Iterating
``tau`` (and its inverse for negative times) is the discrete-time group
action along which functions are sampled.
"""

from __future__ import annotations

import re

import numpy as np

from .spaces import SampledSequence, VectorField, WeightedSpace

__all__ = [
    "PermutationSystem",
    "cyclic_system",
    "rotation_system",
    "random_permutation_system",
    "orbit_trace",
    "parse_system",
]


class PermutationSystem:
    """Atoms, invariant weights, and a bijection ``forward`` (the map ``tau``).

    Parameters
    ----------
    forward : array_like of int
        ``forward[i] = tau(i)``; must be a permutation of ``0..N-1``.
    weights : array_like of float, optional
        Atom masses, constant along cycles.  Defaults to uniform ``1/N``.
    name : str, optional
        Text descriptor used in reports.
    """

    __slots__ = ("forward", "inverse", "space", "name")

    def __init__(self, forward, weights=None, name=None):
        fwd = np.array(forward, dtype=np.int64)
        n = fwd.size
        if fwd.ndim != 1 or n == 0:
            raise ValueError("forward map must be a non-empty 1-d array")
        if fwd.min() < 0 or fwd.max() >= n or np.unique(fwd).size != n:
            raise ValueError("forward map is not a permutation")
        inv = np.empty_like(fwd)
        inv[fwd] = np.arange(n)
        space = WeightedSpace.uniform(n) if weights is None else WeightedSpace(weights)
        if space.n_atoms != n:
            raise ValueError("weights and forward map differ in size")
        if not np.array_equal(space.weights[fwd], space.weights):
            raise ValueError("weights are not invariant under the map")
        fwd.setflags(write=False)
        inv.setflags(write=False)
        self.forward = fwd
        self.inverse = inv
        self.space = space
        self.name = name or f"perm:{n}"

    @property
    def n_atoms(self):
        return self.forward.size

    @property
    def weights(self):
        return self.space.weights

    def power(self, s):
        """Index array of ``tau^s`` (negative ``s`` uses the inverse)."""
        base = self.forward if s >= 0 else self.inverse
        out = np.arange(self.n_atoms)
        for _ in range(abs(int(s))):
            out = base[out]
        return out

    def orbit_indices(self, t_min, t_max):
        """``(N, t_max - t_min + 1)`` array whose ``[x, k]`` entry is ``tau^(t_min + k) x``."""
        if t_min > t_max:
            raise ValueError("empty time window")
        n = self.n_atoms
        out = np.empty((n, t_max - t_min + 1), dtype=np.int64)
        start = self.power(t_min)
        cur = start
        for k in range(t_max - t_min + 1):
            out[:, k] = cur
            cur = self.forward[cur]
        return out

    def cycles(self):
        """Cycle decomposition, each cycle starting at its smallest atom."""
        seen = np.zeros(self.n_atoms, dtype=bool)
        result = []
        for i in range(self.n_atoms):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = int(self.forward[i])
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = int(self.forward[j])
            result.append(cyc)
        return result

    def is_ergodic(self):
        return len(self.cycles()) == 1

    def compose_field(self, field, s=1):
        """The field ``f o tau^s``."""
        return VectorField(field.values[:, self.power(s)], field.space)

    def __repr__(self):
        return f"PermutationSystem({self.name})"


def cyclic_system(n):
    """``tau(i) = i + 1 mod n`` with uniform weights."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return PermutationSystem((np.arange(n) + 1) % n, name=f"cyclic:{n}")


def rotation_system(q, a):
    """Rational rotation ``tau(i) = i + a mod q``; a single cycle iff gcd(a, q) = 1."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return PermutationSystem((np.arange(q) + a) % q, name=f"rotation:{q},{a}")


def random_permutation_system(n, seed):
    """Uniform random permutation drawn from ``numpy.random.default_rng(seed)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    perm = np.random.default_rng(seed).permutation(n)
    return PermutationSystem(perm, name=f"random:{n},{seed}")


def orbit_trace(system, field, x, t_min, t_max):
    """Sample ``t -> f(tau^t x)`` on ``[t_min, t_max]``; requires ``t_min <= 0 <= t_max``."""
    if field.space != system.space:
        raise ValueError("field does not live on the system's space")
    if not 0 <= x < system.n_atoms:
        raise IndexError(f"atom {x} out of range")
    if not t_min <= 0 <= t_max:
        raise ValueError("window must contain t = 0")
    idx = np.empty(t_max - t_min + 1, dtype=np.int64)
    cur = int(x)
    for t in range(0, t_min - 1, -1):
        idx[t - t_min] = cur
        cur = int(system.inverse[cur])
    cur = int(system.forward[x])
    for t in range(1, t_max + 1):
        idx[t - t_min] = cur
        cur = int(system.forward[cur])
    return SampledSequence(field.values[:, idx], t_min)


_SYSTEM_RE = re.compile(r"^(cyclic|rotation|random):(-?\d+)(?:,(-?\d+))?$")


def parse_system(text):
    """Build a system from ``cyclic:N``, ``rotation:q,a`` or ``random:N,seed``."""
    m = _SYSTEM_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed system spec {text!r}")
    kind, first, second = m.group(1), int(m.group(2)), m.group(3)
    if kind == "cyclic":
        if second is not None:
            raise ValueError("cyclic takes a single argument")
        return cyclic_system(first)
    if second is None:
        raise ValueError(f"{kind} takes two arguments")
    if kind == "rotation":
        return rotation_system(first, int(second))
    seed = int(second)
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    return random_permutation_system(first, seed)

