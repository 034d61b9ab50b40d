"""Positive sublinear operators on integer sequences.

Three families ship, all acting on ``|f|``:

``avg:m``
    forward average ``(1/m) sum_{k<m} |f(t+k)|``
``osmax:n``
    ``max_{m<=n}`` of the forward averages (one-sided maximal function)
``hl:n``
    ``max`` over intervals ``[t-a, t+b]`` with ``0 <= a, b <= n`` (uncentred
    Hardy-Littlewood maximal function, truncated)

Outputs live on a shrunken window: a sample is produced only where every
input value it depends on is present.  Nothing is zero-padded.

Sums are accumulated left to right in the same order a direct evaluation
would use, so the vectorised kernels agree bit for bit with naive loops.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .seeding import trial_rng
from .spaces import SampledSequence

__all__ = [
    "EmptyWindowError",
    "LineOperatorSpec",
    "one_sided_average",
    "one_sided_maximal",
    "uncentered_maximal",
    "apply_componentwise",
    "AxiomReport",
    "check_operator_axioms",
    "parse_operator",
]

KINDS = ("avg", "osmax", "hl")


class EmptyWindowError(ValueError):
    """The input window is too short to produce any output sample."""


def _avg_kernel(a, m):
    out_w = a.shape[-1] - m + 1
    s = np.zeros(a.shape[:-1] + (out_w,))
    for k in range(m):
        s = s + a[..., k : k + out_w]
    return s / m


def _osmax_kernel(a, n):
    out_w = a.shape[-1] - n + 1
    s = np.zeros(a.shape[:-1] + (out_w,))
    best = np.zeros_like(s)
    for m in range(1, n + 1):
        s = s + a[..., m - 1 : m - 1 + out_w]
        best = np.maximum(best, s / m)
    return best


def _hl_kernel(a, n):
    out_w = a.shape[-1] - 2 * n
    best = np.zeros(a.shape[:-1] + (out_w,))
    for left in range(n + 1):
        base = n - left
        s = np.zeros_like(best)
        for length in range(1, left + n + 2):
            k = base + length - 1
            s = s + a[..., k : k + out_w]
            if length > left:
                best = np.maximum(best, s / length)
    return best


_KERNELS = {"avg": _avg_kernel, "osmax": _osmax_kernel, "hl": _hl_kernel}


@dataclass(frozen=True)
class LineOperatorSpec:
    """One operator family member, e.g. ``LineOperatorSpec("osmax", 8)``.

    ``size`` is the averaging length ``m`` for ``avg`` and ``n_max`` for the
    maximal kinds.
    """

    kind: str
    size: int
    positive: bool = field(default=True, init=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if int(self.size) != self.size or self.size < 1:
            raise ValueError("operator size must be a positive integer")
        object.__setattr__(self, "size", int(self.size))

    @property
    def semilocal_radius(self):
        """Output support lies within this distance of the input support."""
        return self.size if self.kind == "hl" else self.size - 1

    @property
    def reach(self):
        """``(left, right)``: how far before/after ``t`` the value at ``t`` looks."""
        if self.kind == "hl":
            return self.size, self.size
        return 0, self.size - 1

    def apply_values(self, values):
        """Apply along the last axis of a raw array; leading axes are independent."""
        a = np.abs(np.asarray(values, dtype=np.float64))
        left, right = self.reach
        if a.shape[-1] - left - right < 1:
            raise EmptyWindowError(
                f"{self} needs a window of width >= {left + right + 1}, got {a.shape[-1]}"
            )
        return _KERNELS[self.kind](a, self.size)

    def apply(self, seq):
        out = self.apply_values(seq.values)
        return SampledSequence(out, seq.offset + self.reach[0])

    def __str__(self):
        return f"{self.kind}:{self.size}"


def one_sided_average(seq, m):
    """Forward average of ``|seq|`` over ``m`` samples."""
    return LineOperatorSpec("avg", m).apply(seq)


def one_sided_maximal(seq, n_max):
    """Pointwise max over ``m <= n_max`` of :func:`one_sided_average`."""
    return LineOperatorSpec("osmax", n_max).apply(seq)


def uncentered_maximal(seq, n_max):
    """Max of interval averages of ``|seq|`` over ``[t-a, t+b]``, ``0 <= a, b <= n_max``."""
    return LineOperatorSpec("hl", n_max).apply(seq)


def apply_componentwise(op, seq):
    """Run the scalar operator on each component separately and restack."""
    rows = [op.apply(SampledSequence(row, seq.offset)) for row in seq.values]
    return SampledSequence(np.vstack([r.values for r in rows]), rows[0].offset)


_OP_RE = re.compile(r"^(avg|osmax|hl):(\d+)$")


def parse_operator(text):
    """Parse ``avg:m``, ``osmax:n_max`` or ``hl:n_max``."""
    m = _OP_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed operator spec {text!r}")
    return LineOperatorSpec(m.group(1), int(m.group(2)))


@dataclass
class AxiomReport:
    operator: str
    n_trials: int
    seed: int
    sublinearity_failures: int = 0
    translation_failures: int = 0
    semilocality_failures: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self):
        return not (
            self.sublinearity_failures
            or self.translation_failures
            or self.semilocality_failures
        )

    def to_dict(self):
        return {
            "operator": self.operator,
            "n_trials": self.n_trials,
            "seed": self.seed,
            "sublinearity_failures": self.sublinearity_failures,
            "translation_failures": self.translation_failures,
            "semilocality_failures": self.semilocality_failures,
            "counterexamples": self.counterexamples,
            "passed": self.passed,
        }


def _random_interior(rng, J, width, margin):
    inner = width - 2 * margin
    density = rng.uniform(0.05, 0.6)
    vals = rng.uniform(-1.0, 1.0, size=(J, inner))
    vals *= rng.random((J, inner)) < density
    out = np.zeros((J, width))
    out[:, margin : margin + inner] = vals
    return out


def check_operator_axioms(op, n_trials=100, seed=0, J=1, width=48, max_shift=5, tol=1e-12):
    """Randomised check of sublinearity, translation commutation and semilocality.

    Each trial draws sparse random inputs supported away from the window
    edges, so that every output sample that could be nonzero is evaluated.
    Violations are recorded in the returned :class:`AxiomReport` rather than
    raised.
    """
    left, right = op.reach
    eps = op.semilocal_radius
    margin = eps + max(left, right) + max_shift
    width = max(width, 2 * margin + 4)
    report = AxiomReport(str(op), n_trials, seed)

    for trial in range(n_trials):
        rng, _ = trial_rng(seed, trial)
        f = _random_interior(rng, J, width, margin)
        g = _random_interior(rng, J, width, margin)
        out_f = op.apply_values(f)
        out_g = op.apply_values(g)
        out_sum = op.apply_values(f + g)

        excess = out_sum - (out_f + out_g)
        scale = max(1.0, float(np.max(out_f + out_g)))
        if np.max(excess) > tol * scale:
            report.sublinearity_failures += 1
            report.counterexamples.append(
                {"trial": trial, "axiom": "sublinearity", "excess": float(np.max(excess))}
            )

        s = int(rng.integers(-max_shift, max_shift + 1))
        out_shift = op.apply_values(np.roll(f, s, axis=-1))
        w = out_f.shape[-1]
        lo, hi = max(0, -s), min(w, w - s)
        diff = np.abs(out_shift[:, lo + s : hi + s] - out_f[:, lo:hi])
        if diff.size and np.max(diff) > tol * scale:
            report.translation_failures += 1
            report.counterexamples.append(
                {"trial": trial, "axiom": "translation", "shift": s, "diff": float(np.max(diff))}
            )

        support = np.flatnonzero(np.any(f != 0, axis=0))
        out_support = np.flatnonzero(np.any(out_f != 0, axis=0)) + left
        if support.size == 0 or out_support.size == 0:
            bad = out_support
        else:
            dist = np.min(np.abs(out_support[:, None] - support[None, :]), axis=1)
            bad = out_support[dist > eps]
        if bad.size:
            report.semilocality_failures += 1
            report.counterexamples.append(
                {"trial": trial, "axiom": "semilocality", "positions": bad[:8].tolist()}
            )
    return report
