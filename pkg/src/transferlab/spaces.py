"""Vector-valued functions on finite atom spaces and integer windows.

Everything here is plain float64 numpy.  A :class:`VectorField` lives on a
:class:`WeightedSpace` (finitely many atoms with positive masses); a
:class:`SampledSequence` lives on a contiguous window of the integers with
unit mass per lattice point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DegenerateInputError",
    "ExponentPair",
    "WeightedSpace",
    "VectorField",
    "SampledSequence",
    "lr_norm_pointwise",
    "lp_norm",
    "lp_integral",
    "distribution_measure",
    "weak_ratio",
    "weak_sup",
]


class DegenerateInputError(ValueError):
    """Raised when a ratio is requested for an input of zero norm."""


def _frozen(values, dtype=np.float64):
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


def _check_exponent(value, name, allow_inf):
    value = float(value)
    if math.isnan(value) or value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    if math.isinf(value) and not allow_inf:
        raise ValueError(f"{name} must be finite")
    return value


@dataclass(frozen=True)
class ExponentPair:
    """Integrability exponent ``p`` (finite) and mixing exponent ``r``.

    ``r`` may be ``math.inf``; ``p`` may not.
    """

    p: float
    r: float

    def __post_init__(self):
        object.__setattr__(self, "p", _check_exponent(self.p, "p", False))
        object.__setattr__(self, "r", _check_exponent(self.r, "r", True))

    def describe(self):
        return {"p": self.p, "r": "inf" if math.isinf(self.r) else self.r}


class WeightedSpace:
    """Finite measure space: atoms ``0..n_atoms-1`` with positive masses."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        w = _frozen(weights)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty 1-d array")
        if not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise ValueError("weights must be finite and strictly positive")
        self.weights = w

    @classmethod
    def uniform(cls, n_atoms):
        """Probability space with ``n_atoms`` atoms of mass ``1/n_atoms``."""
        if n_atoms < 1:
            raise ValueError("n_atoms must be >= 1")
        return cls(np.full(n_atoms, 1.0 / n_atoms))

    @property
    def n_atoms(self):
        return self.weights.size

    @property
    def total_measure(self):
        return math.fsum(self.weights)

    def __eq__(self, other):
        if not isinstance(other, WeightedSpace):
            return NotImplemented
        return self.weights.shape == other.weights.shape and bool(
            np.array_equal(self.weights, other.weights)
        )

    def __hash__(self):
        return hash(self.weights.tobytes())

    def __repr__(self):
        return f"WeightedSpace(n_atoms={self.n_atoms}, total={self.total_measure:g})"


class VectorField:
    """``J`` real functions on a :class:`WeightedSpace`, stored ``J x n_atoms``."""

    __slots__ = ("values", "space")

    def __init__(self, values, space):
        v = _frozen(values)
        if v.ndim == 1:
            v = _frozen(v[None, :])
        if v.ndim != 2 or v.shape[0] < 1:
            raise ValueError("values must have shape (J, n_atoms) with J >= 1")
        if v.shape[1] != space.n_atoms:
            raise ValueError(
                f"field has {v.shape[1]} atoms but space has {space.n_atoms}"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("field entries must be finite")
        self.values = v
        self.space = space

    @property
    def J(self):
        return self.values.shape[0]

    @property
    def n_atoms(self):
        return self.values.shape[1]

    def scaled(self, c):
        return VectorField(c * self.values, self.space)

    def __repr__(self):
        return f"VectorField(J={self.J}, n_atoms={self.n_atoms})"


class SampledSequence:
    """``J`` real sequences on the integer window ``[offset, offset + width)``.

    Entry ``values[j, k]`` is component ``j`` at integer time ``offset + k``.
    """

    __slots__ = ("values", "offset")

    def __init__(self, values, offset=0):
        v = _frozen(values)
        if v.ndim == 1:
            v = _frozen(v[None, :])
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError("values must have shape (J, width) with J, width >= 1")
        if not np.all(np.isfinite(v)):
            raise ValueError("sequence entries must be finite")
        self.values = v
        self.offset = int(offset)

    @property
    def J(self):
        return self.values.shape[0]

    @property
    def width(self):
        return self.values.shape[1]

    @property
    def t_min(self):
        return self.offset

    @property
    def t_max(self):
        return self.offset + self.width - 1

    @property
    def times(self):
        return np.arange(self.t_min, self.t_max + 1)

    def at(self, t):
        """Column ``(f_1(t), ..., f_J(t))``."""
        if not self.t_min <= t <= self.t_max:
            raise IndexError(f"t={t} outside window [{self.t_min}, {self.t_max}]")
        return self.values[:, t - self.offset]

    def restrict(self, t_min, t_max):
        if t_min < self.t_min or t_max > self.t_max or t_min > t_max:
            raise IndexError(
                f"[{t_min}, {t_max}] not inside [{self.t_min}, {self.t_max}]"
            )
        return SampledSequence(
            self.values[:, t_min - self.offset : t_max - self.offset + 1], t_min
        )

    def shifted(self, s):
        """Same samples, relabelled so that old time ``t`` becomes ``t + s``."""
        return SampledSequence(self.values, self.offset + s)

    def padded(self, left, right):
        """Extend the window with zeros on both sides."""
        v = np.pad(self.values, ((0, 0), (left, right)))
        return SampledSequence(v, self.offset - left)

    def __repr__(self):
        return f"SampledSequence(J={self.J}, window=[{self.t_min}, {self.t_max}])"


def _component_array(obj):
    if isinstance(obj, (VectorField, SampledSequence)):
        return obj.values
    arr = np.asarray(obj, dtype=np.float64)
    return arr[None, :] if arr.ndim == 1 else arr


def _lr_norm_axis0(values, r):
    a = np.abs(values)
    if math.isinf(r):
        return a.max(axis=0)
    if r == 1:
        return a.sum(axis=0)
    # scale by the pointwise max: no overflow, and exact for a single component
    m = a.max(axis=0)
    safe = np.where(m > 0, m, 1.0)
    return m * np.sum((a / safe) ** r, axis=0) ** (1.0 / r)


def lr_norm_pointwise(obj, r):
    """Pointwise ``l^r`` norm across components.

    Parameters
    ----------
    obj : VectorField, SampledSequence or array_like
        Arrays are read as ``(J, n_points)``; a 1-d array is a single component.
    r : float
        Exponent in ``[1, inf]``.

    Returns
    -------
    numpy.ndarray
        Shape ``(n_points,)``, nonnegative.
    """
    r = _check_exponent(r, "r", True)
    return _lr_norm_axis0(_component_array(obj), r)


def _weights_for(g, space):
    if space is None:
        return np.ones(g.shape[-1])
    w = space.weights if isinstance(space, WeightedSpace) else np.asarray(space, float)
    if w.shape[-1] != g.shape[-1]:
        raise ValueError("function and space sizes differ")
    return w


def lp_integral(g, space=None, p=1.0):
    """``sum_i mu_i |g_i|^p`` computed with ``math.fsum``.

    ``space=None`` means an integer window: unit mass per lattice point.
    """
    p = _check_exponent(p, "p", False)
    g = np.asarray(g, dtype=np.float64)
    w = _weights_for(g, space)
    return math.fsum((w * np.abs(g) ** p).tolist())


def lp_norm(g, space=None, p=1.0):
    """``(sum_i mu_i |g_i|^p)^(1/p)``; see :func:`lp_integral`."""
    g = np.abs(np.asarray(g, dtype=np.float64))
    m = float(g.max()) if g.size else 0.0
    if m == 0:
        return 0.0
    return m * lp_integral(g / m, space, p) ** (1.0 / float(p))


def distribution_measure(g, lam, space=None):
    """Measure of the strict level set ``{i : g_i > lam}``."""
    if not lam > 0:
        raise ValueError(f"lambda must be > 0, got {lam}")
    g = np.asarray(g, dtype=np.float64)
    w = _weights_for(g, space)
    return math.fsum(w[g > lam].tolist())


def weak_ratio(output_field, input_field, pr, lam):
    """Smallest ``C`` with ``mu{|output| > lam} <= C^p / lam^p * int |input|^p``.

    Norms are the pointwise ``l^r`` norms across components.  Raises
    :class:`DegenerateInputError` if the input integral vanishes.
    """
    if output_field.space != input_field.space:
        raise ValueError("fields live on different spaces")
    if not lam > 0:
        raise ValueError(f"lambda must be > 0, got {lam}")
    space = input_field.space
    denom = lp_integral(lr_norm_pointwise(input_field, pr.r), space, pr.p)
    if denom == 0:
        raise DegenerateInputError("input field has zero L^p norm")
    level = distribution_measure(lr_norm_pointwise(output_field, pr.r), lam, space)
    return (lam**pr.p * level / denom) ** (1.0 / pr.p)


def weak_sup(g, space=None, p=1.0):
    """Exact ``sup_{lam > 0} lam^p * mu{g > lam}`` for a finitely-valued ``g >= 0``.

    The supremum is approached as ``lam`` rises to one of the values ``v`` of
    ``g``, where it equals ``v^p * mu{g >= v}``.
    """
    p = _check_exponent(p, "p", False)
    g = np.asarray(g, dtype=np.float64)
    w = _weights_for(g, space)
    pos = g > 0
    if not np.any(pos):
        return 0.0
    vals, wts = g[pos], w[pos]
    order = np.argsort(-vals, kind="stable")
    vals, wts = vals[order], wts[order]
    mass = np.cumsum(wts)
    # last index of each run of equal values carries mu{g >= v}
    last = np.append(vals[1:] != vals[:-1], True)
    return float(np.max(vals[last] ** p * mass[last]))
