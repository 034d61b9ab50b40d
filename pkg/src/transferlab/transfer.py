"""Transferring line operators to a permutation system.

For an atom ``x`` the orbit trace ``F(t, x) = f(tau^t x)`` is a sequence in
``t``.  Running a line operator ``S`` on it gives ``G(t, x)``, and the
transferred operator reads off ``G(0, x)``.  Because the trace of
``tau^s x`` is the trace of ``x`` shifted by ``s``, ``G(t, tau^s x) =
G(t + s, x)``; every inequality for ``S`` on the integers then carries over
to the system.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .seeding import trial_rng
from .spaces import SampledSequence, VectorField

__all__ = [
    "ConfigurationError",
    "TransferredOperator",
    "transfer_apply",
    "evaluate_transferred",
    "ergodic_maximal",
    "truncate_trace",
    "EquimeasurabilityReport",
    "check_equimeasurability",
]


class ConfigurationError(ValueError):
    """A window or parameter choice cannot support the requested evaluation."""


class TransferredOperator:
    """A line operator paired with a system and an evaluation half-width ``w``.

    The orbit trace is sampled on ``[-w, w]``.  ``w`` must be at least the
    operator's semilocal radius plus its averaging length; the default adds
    one more sample of headroom.
    """

    __slots__ = ("line_op", "system", "window_halfwidth")

    def __init__(self, line_op, system, window_halfwidth=None):
        self.line_op = line_op
        self.system = system
        minimum = self.minimum_halfwidth(line_op)
        if window_halfwidth is None:
            window_halfwidth = minimum + 1
        if window_halfwidth < minimum:
            raise ConfigurationError(
                f"window half-width {window_halfwidth} too small for {line_op}; "
                f"minimum is {minimum}"
            )
        self.window_halfwidth = int(window_halfwidth)

    @staticmethod
    def minimum_halfwidth(line_op):
        return line_op.semilocal_radius + line_op.size

    def __repr__(self):
        return (
            f"TransferredOperator({self.line_op}, {self.system.name}, "
            f"w={self.window_halfwidth})"
        )


def evaluate_transferred(line_op, system, field, t_min, t_max):
    """``G(t, x)`` for ``t`` in ``[t_min, t_max]`` and every atom ``x``.

    Returns an array of shape ``(J, N, t_max - t_min + 1)``.
    """
    if field.space != system.space:
        raise ValueError("field does not live on the system's space")
    left, right = line_op.reach
    idx = system.orbit_indices(t_min - left, t_max + right)
    traces = field.values[:, idx]
    return line_op.apply_values(traces)


def transfer_apply(top, field):
    """Evaluate the transferred operator: ``x -> S(F(., x))(0)``."""
    w = top.window_halfwidth
    left, right = top.line_op.reach
    if w < max(left, right):
        raise ConfigurationError(f"window half-width {w} cannot evaluate t = 0")
    if field.space != top.system.space:
        raise ValueError("field does not live on the system's space")
    idx = top.system.orbit_indices(-w, w)
    out = top.line_op.apply_values(field.values[:, idx])
    return VectorField(out[:, :, w - left], field.space)


def ergodic_maximal(system, field, n_max):
    """``max_{n <= n_max} (1/n) sum_{k<n} |f(tau^k x)|`` per component, by direct iteration."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    a = np.abs(field.values)
    cur = np.arange(system.n_atoms)
    s = np.zeros_like(a)
    best = np.zeros_like(a)
    for n in range(1, n_max + 1):
        s = s + a[:, cur]
        best = np.maximum(best, s / n)
        cur = system.forward[cur]
    return VectorField(best, field.space)


def truncate_trace(seq, a):
    """Zero every sample with ``|t| >= a``; the window is unchanged."""
    if a < 1:
        raise ValueError("truncation radius must be >= 1")
    keep = np.abs(seq.times) < a
    return SampledSequence(np.where(keep[None, :], seq.values, 0.0), seq.offset)


@dataclass
class EquimeasurabilityReport:
    operator: str
    system: str
    n_cases: int = 0
    shift_violations: int = 0
    distribution_violations: int = 0
    violations: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return self.shift_violations == 0 and self.distribution_violations == 0

    def to_dict(self):
        return {
            "operator": self.operator,
            "system": self.system,
            "n_cases": self.n_cases,
            "shift_violations": self.shift_violations,
            "distribution_violations": self.distribution_violations,
            "violations": self.violations,
            "passed": self.passed,
        }


def _sorted_rows(vectors, weights):
    rows = np.column_stack([vectors, weights])
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def check_equimeasurability(system, field, line_op, s=None, n_trials=1, seed=0, t_radius=3, J=2):
    """Check ``G(t, tau^s x) = G(t + s, x)`` and equal distributions of ``G(t, .)``.

    With ``field=None`` each trial draws a seeded random field (``J``
    components, uniform on ``[-1, 1]``); with ``s=None`` each trial draws a
    shift in ``[-2N, 2N]``.  Comparisons are exact.
    """
    report = EquimeasurabilityReport(str(line_op), system.name)
    n = system.n_atoms
    for trial in range(n_trials):
        rng, _ = trial_rng(seed, trial)
        f = field
        if f is None:
            f = VectorField(rng.uniform(-1, 1, size=(J, n)), system.space)
        shift = int(rng.integers(-2 * n, 2 * n + 1)) if s is None else int(s)
        lo = -t_radius - abs(shift)
        hi = t_radius + abs(shift)
        G = evaluate_transferred(line_op, system, f, lo, hi)
        moved = system.power(shift)
        ts = np.arange(-t_radius, t_radius + 1)
        lhs = G[:, moved][:, :, ts - lo]
        rhs = G[:, :, ts + shift - lo]
        report.n_cases += 1
        if not np.array_equal(lhs, rhs):
            report.shift_violations += 1
            report.violations.append(
                {"trial": trial, "check": "shift", "s": shift,
                 "max_diff": float(np.max(np.abs(lhs - rhs)))}
            )
        ref = _sorted_rows(G[:, :, -lo].T, system.weights)
        for t in ts:
            if not np.array_equal(_sorted_rows(G[:, :, t - lo].T, system.weights), ref):
                report.distribution_violations += 1
                report.violations.append({"trial": trial, "check": "distribution", "t": int(t)})
    return report
