"""Empirical constants and per-trial certificates for transferred inequalities.

Two kinds of evidence are produced.

*Constant estimates* draw a seeded ensemble of inputs, evaluate the
operator, and keep the worst ratio.  They are lower bounds on the true
operator norm and are labelled ``"empirical"``.

*Certificates* replay the truncation argument for one input on one system.
With ``eps`` the operator's semilocal radius and ``a`` a truncation radius,
``F^{a+eps}`` keeps the orbit trace on ``|t| <= a + eps``.  The lattice
counts ``2a + 1`` and ``2(a + eps) + 1`` replace interval lengths, which turns
the averaging steps into exact identities and gives the slack factor
``(2(a + eps) + 1) / (2a + 1)``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .line_ops import LineOperatorSpec
from .seeding import trial_rng
from .spaces import (
    DegenerateInputError,
    ExponentPair,
    VectorField,
    _lr_norm_axis0,
    lp_integral,
    lr_norm_pointwise,
    weak_ratio,
)
from .transfer import ConfigurationError, TransferredOperator, transfer_apply

__all__ = [
    "LINK_TOL",
    "LambdaGrid",
    "EnsembleSpec",
    "ConstantEstimate",
    "strong_ratio",
    "estimate_constant",
    "slack_factor",
    "minimum_certificate_window",
    "Link",
    "CertificateReport",
    "TruncatedTraces",
    "strong_certificate",
    "weak_certificate",
    "TrialComparison",
    "ComparisonReport",
    "transfer_comparison",
    "j_sweep",
]

LINK_TOL = 1e-9
DISTRIBUTIONS = ("uniform", "sparse", "mixed", "dyadic")


def _map(fn, items, workers):
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class LambdaGrid:
    """Log-spaced levels ``lo * scale .. hi * scale`` (``points`` of them).

    With ``relative=True`` (the default) ``scale`` is the largest pointwise
    norm of the output being tested, so the grid adapts to each trial.
    """

    lo: float = 0.01
    hi: float = 1.0
    points: int = 32
    relative: bool = True

    def __post_init__(self):
        if self.points < 1:
            raise ValueError("lambda grid must contain at least one point")
        if not (0 < self.lo <= self.hi) or math.isinf(self.hi):
            raise ValueError("lambda grid needs 0 < lo <= hi < inf")

    def values(self, scale=1.0):
        if self.relative:
            if scale <= 0:
                return np.empty(0)
            return np.geomspace(self.lo * scale, self.hi * scale, self.points)
        return np.geomspace(self.lo, self.hi, self.points)

    def describe(self):
        return {"lo": self.lo, "hi": self.hi, "points": self.points, "relative": self.relative}


@dataclass(frozen=True)
class EnsembleSpec:
    """Seeded input ensemble.

    ``distribution`` is ``"uniform"`` (entries uniform on ``[-1, 1]``),
    ``"sparse"`` (each entry nonzero with probability 0.1, then uniform on
    ``(0, 1]``), ``"mixed"`` (uniform on even trials, sparse on odd ones) or
    ``"dyadic"`` (integer multiples of ``2**-8`` in ``[-1, 1]``).  ``width`` is
    the support length of line-side inputs.
    """

    n_trials: int
    seed: int
    J: int = 1
    distribution: str = "mixed"
    width: int = 64

    def __post_init__(self):
        if self.n_trials < 1:
            raise ValueError("n_trials must be >= 1")
        if self.J < 1:
            raise ValueError("J must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}")
        if self.width < 1:
            raise ValueError("width must be >= 1")

    def draw(self, trial, n_points):
        """``(values, seed)`` with ``values`` of shape ``(J, n_points)``."""
        rng, seed = trial_rng(self.seed, trial)
        shape = (self.J, n_points)
        kind = self.distribution
        if kind == "mixed":
            kind = "uniform" if trial % 2 == 0 else "sparse"
        if kind == "uniform":
            vals = rng.uniform(-1.0, 1.0, size=shape)
        elif kind == "sparse":
            mask = rng.random(shape) < 0.1
            vals = np.where(mask, 1.0 - rng.random(shape), 0.0)
        else:
            vals = rng.integers(-256, 257, size=shape) / 256.0
        return vals, seed

    def draw_field(self, system, trial):
        vals, seed = self.draw(trial, system.n_atoms)
        return VectorField(vals, system.space), seed

    def describe(self):
        return {
            "n_trials": self.n_trials,
            "seed": self.seed,
            "J": self.J,
            "distribution": self.distribution,
            "width": self.width,
        }


def _r_label(r):
    return "inf" if math.isinf(r) else r


@dataclass
class ConstantEstimate:
    """Worst ratio over a seeded ensemble; a lower bound on the operator norm."""

    kind: str
    p: float
    r: float
    value: float
    n_trials: int
    n_degenerate: int
    ensemble_seed: int
    operator: str
    space: str
    J: int
    distribution: str
    per_trial: list = dc_field(default_factory=list)
    label: str = "empirical"

    def to_dict(self):
        return {
            "label": self.label,
            "kind": self.kind,
            "p": self.p,
            "r": _r_label(self.r),
            "value": self.value,
            "n_trials": self.n_trials,
            "n_degenerate": self.n_degenerate,
            "ensemble_seed": self.ensemble_seed,
            "operator": self.operator,
            "space": self.space,
            "J": self.J,
            "distribution": self.distribution,
            "per_trial": self.per_trial,
        }


def strong_ratio(op_output, input_field, pr):
    """``|| ||output||_r ||_p / || ||input||_r ||_p`` on the shared space."""
    if op_output.space != input_field.space:
        raise ValueError("fields live on different spaces")
    space = input_field.space
    denom = lp_integral(lr_norm_pointwise(input_field, pr.r), space, pr.p)
    if denom == 0:
        raise DegenerateInputError("input field has zero L^p norm")
    num = lp_integral(lr_norm_pointwise(op_output, pr.r), space, pr.p)
    return (num / denom) ** (1.0 / pr.p)


def _line_ratios(op, values, pr, kind, grid):
    """Ratio for a compactly supported line input; the output is evaluated on its whole support."""
    left, right = op.reach
    pad = op.semilocal_radius + max(left, right)
    padded = np.pad(values, ((0, 0), (pad, pad)))
    out = op.apply_values(padded)
    denom = lp_integral(lr_norm_pointwise(values, pr.r), None, pr.p)
    if denom == 0:
        raise DegenerateInputError("line input is identically zero")
    g = lr_norm_pointwise(out, pr.r)
    if kind == "strong":
        return (lp_integral(g, None, pr.p) / denom) ** (1.0 / pr.p)
    lams = grid.values(float(g.max()))
    best = 0.0
    for lam in lams:
        level = float(np.count_nonzero(g > lam))
        best = max(best, (lam**pr.p * level / denom) ** (1.0 / pr.p))
    return best


def _system_ratio(top, field, pr, kind, grid):
    out = transfer_apply(top, field)
    if kind == "strong":
        return strong_ratio(out, field, pr)
    lams = grid.values(float(lr_norm_pointwise(out, pr.r).max()))
    # degenerate inputs must still raise even when the output is zero
    best = weak_ratio(out, field, pr, 1.0) if lams.size == 0 else 0.0
    for lam in lams:
        best = max(best, weak_ratio(out, field, pr, lam))
    return best


def estimate_constant(operator, ensemble, pr, kind="strong", lambda_grid=None, workers=1):
    """Empirical strong or weak constant of a line or transferred operator.

    Parameters
    ----------
    operator : LineOperatorSpec or TransferredOperator
        Line operators are fed compactly supported sequences of length
        ``ensemble.width``; transferred operators are fed fields on their
        system.
    ensemble : EnsembleSpec
    pr : ExponentPair
    kind : {"strong", "weak"}
    lambda_grid : LambdaGrid, optional
        Levels for the weak kind; defaults to ``LambdaGrid()``.
    workers : int
        Trials run on a thread pool when > 1.  The result does not depend
        on this.

    Returns
    -------
    ConstantEstimate
        ``value`` is the max over non-degenerate trials (and levels).
        Trials with identically zero input are counted in ``n_degenerate``.
    """
    if kind not in ("strong", "weak"):
        raise ValueError(f"kind must be 'strong' or 'weak', got {kind!r}")
    grid = lambda_grid if lambda_grid is not None else LambdaGrid()

    if isinstance(operator, TransferredOperator):
        space_desc = operator.system.name
        op_desc = f"transferred:{operator.line_op}"

        def run(trial):
            field, seed = ensemble.draw_field(operator.system, trial)
            try:
                return trial, seed, _system_ratio(operator, field, pr, kind, grid)
            except DegenerateInputError:
                return trial, seed, None

    elif isinstance(operator, LineOperatorSpec):
        space_desc = f"line:{ensemble.width}"
        op_desc = str(operator)

        def run(trial):
            vals, seed = ensemble.draw(trial, ensemble.width)
            try:
                return trial, seed, _line_ratios(operator, vals, pr, kind, grid)
            except DegenerateInputError:
                return trial, seed, None

    else:
        raise TypeError("operator must be a LineOperatorSpec or TransferredOperator")

    results = _map(run, range(ensemble.n_trials), workers)
    ratios = [r for _, _, r in results if r is not None]
    return ConstantEstimate(
        kind=kind,
        p=pr.p,
        r=pr.r,
        value=max(ratios) if ratios else 0.0,
        n_trials=ensemble.n_trials,
        n_degenerate=len(results) - len(ratios),
        ensemble_seed=ensemble.seed,
        operator=op_desc,
        space=space_desc,
        J=ensemble.J,
        distribution=ensemble.distribution,
        per_trial=[{"trial": t, "seed": s, "ratio": r} for t, s, r in results],
    )


def slack_factor(a, eps):
    """``(2(a + eps) + 1) / (2a + 1)``."""
    return (2 * (a + eps) + 1) / (2 * a + 1)


def minimum_certificate_window(line_op, a):
    """Smallest trace half-width holding ``S(F^{a+eps})`` on its whole support."""
    left, right = line_op.reach
    return a + 2 * line_op.semilocal_radius + max(left, right)


@dataclass
class Link:
    """One inequality ``lhs <= rhs`` (or identity ``lhs == rhs``) in the chain."""

    name: str
    lhs: float
    rhs: float
    relation: str = "<="
    tol: float = LINK_TOL

    @property
    def passed(self):
        if self.relation == "==":
            return bool(abs(self.lhs - self.rhs) <= self.tol)
        return bool(self.lhs <= self.rhs + self.tol)

    def to_dict(self):
        return {
            "name": self.name,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "passed": self.passed,
        }


@dataclass
class CertificateReport:
    trial: int
    kind: str
    a: int
    epsilon: int
    p: float
    r: float
    slack: float
    ratio_line: float
    ratio_sys: float
    links: list
    lam: float | None = None
    trivial: bool = False
    seed: int | None = None
    J: int | None = None

    @property
    def passed(self):
        return all(link.passed for link in self.links)

    def to_dict(self):
        return {
            "trial": self.trial,
            "seed": self.seed,
            "kind": self.kind,
            "a": self.a,
            "epsilon": self.epsilon,
            "p": self.p,
            "r": _r_label(self.r),
            "J": self.J,
            "lambda": self.lam,
            "slack": self.slack,
            "ratio_line": self.ratio_line,
            "ratio_sys": self.ratio_sys,
            "trivial": self.trivial,
            "passed": self.passed,
            "links": [link.to_dict() for link in self.links],
        }


def _integrate(phi, w):
    return math.fsum((w * phi).tolist())


class TruncatedTraces:
    """All orbit-trace data one certificate needs, computed once per ``(field, a)``.

    Attributes (``K`` is ``-a..a``, ``H`` the trace half-width):

    ``G_K``  untruncated ``G(t, x)`` for ``t`` in ``K``, shape ``(J, N, 2a+1)``
    ``GT``   ``S(F^{a+eps})(t, x)`` on the full output window
    ``GT_K`` the same restricted to ``K``
    ``FT``   the truncated traces ``F^{a+eps}(t, x)`` on ``[-H, H]``
    """

    def __init__(self, line_op, system, field, a, window=None):
        if a < 1:
            raise ValueError("truncation radius a must be >= 1")
        if field.space != system.space:
            raise ValueError("field does not live on the system's space")
        minimum = minimum_certificate_window(line_op, a)
        if window is None:
            window = minimum
        if window < minimum:
            raise ConfigurationError(
                f"trace window half-width {window} too small for a={a} with "
                f"{line_op}; minimum window is {minimum}"
            )
        self.line_op = line_op
        self.system = system
        self.field = field
        self.a = int(a)
        self.eps = line_op.semilocal_radius
        self.H = int(window)
        left, _ = line_op.reach
        H, cut = self.H, self.a + self.eps

        idx = system.orbit_indices(-H, H)
        F = field.values[:, idx]
        G = line_op.apply_values(F)
        k0 = H - left  # output index of t = 0
        self.G_K = G[:, :, k0 - self.a : k0 + self.a + 1]

        times = np.arange(-H, H + 1)
        self.FT = np.where(np.abs(times) <= cut, F, 0.0)
        self.GT = line_op.apply_values(self.FT)
        self.GT_K = self.GT[:, :, k0 - self.a : k0 + self.a + 1]
        self.weights = system.weights
        self._cache = {}

    @property
    def slack(self):
        return slack_factor(self.a, self.eps)

    def _norms(self, pr):
        key = (pr.p, pr.r)
        if key not in self._cache:
            p, r = pr.p, pr.r
            nG_K = _lr_norm_axis0(self.G_K, r)
            nGT_K = _lr_norm_axis0(self.GT_K, r)
            nGT = _lr_norm_axis0(self.GT, r)
            nFT = _lr_norm_axis0(self.FT, r)
            f0 = _lr_norm_axis0(self.field.values, r)
            psi = np.array([math.fsum(row) for row in (nFT**p).tolist()])
            line_mass = np.array([math.fsum(row) for row in (nGT**p).tolist()])
            live = psi > 0
            strong_line = 0.0
            weak_line = 0.0
            if np.any(live):
                strong_line = float(np.max(line_mass[live] / psi[live])) ** (1.0 / p)
                # per-atom weak_sup on unit masses: the k-th largest value v has
                # mu{g >= v} >= k, with equality at the last of its ties
                desc = -np.sort(-nGT[live], axis=1)
                counts = np.arange(1, desc.shape[1] + 1, dtype=np.float64)
                sup = np.max(desc**p * counts, axis=1)
                weak_line = float(np.max(sup / psi[live])) ** (1.0 / p)
            self._cache[key] = {
                "nG_K": nG_K,
                "nGT_K": nGT_K,
                "psi": psi,
                "f0p": f0**p,
                "strong_line": strong_line,
                "weak_line": weak_line,
            }
        return self._cache[key]

    def _sys_strong(self, pr, d):
        denom = _integrate(d["f0p"], self.weights)
        if denom == 0:
            return 0.0
        num = _integrate(d["nG_K"][:, self.a] ** pr.p, self.weights)
        return (num / denom) ** (1.0 / pr.p)

    def strong(self, pr, trial=0):
        """Strong-branch certificate for exponents ``pr``."""
        d = self._norms(pr)
        p, w, a = pr.p, self.weights, self.a
        count = 2 * a + 1
        phi = d["nG_K"] ** p
        phiT = d["nGT_K"] ** p
        C = d["strong_line"]

        per_t = [_integrate(phi[:, k], w) for k in range(count)]
        per_t_T = [_integrate(phiT[:, k], w) for k in range(count)]
        total = math.fsum(per_t)
        total_T = math.fsum(per_t_T)
        g0 = per_t[a]
        f0 = _integrate(d["f0p"], w)

        per_atom_lhs = np.array([math.fsum(row) for row in phiT.tolist()])
        per_atom_rhs = C**p * d["psi"]
        worst = int(np.argmax(per_atom_lhs - per_atom_rhs))
        dom = float(np.max(self.G_K - self.GT_K)) if self.G_K.size else 0.0

        links = [
            Link("averaging_identity", total, count * g0, "=="),
            Link("pointwise_domination", dom, 0.0),
            Link("integrated_domination", total, total_T),
            Link("line_inequality", float(per_atom_lhs[worst]), float(per_atom_rhs[worst])),
            Link("integrated_line_bound", total_T, C**p * _integrate(d["psi"], w)),
            Link("input_identity", _integrate(d["psi"], w),
                 (2 * (a + self.eps) + 1) * f0, "=="),
            Link("final_bound", g0, self.slack * C**p * f0),
        ]
        return CertificateReport(
            trial=trial, kind="strong", a=a, epsilon=self.eps, p=p, r=pr.r,
            slack=self.slack, ratio_line=C, ratio_sys=self._sys_strong(pr, d),
            links=links, trivial=(f0 == 0), J=self.field.J,
        )

    def weak(self, pr, lam, trial=0):
        """Weak-branch certificate at level ``lam``."""
        if not lam > 0:
            raise ValueError(f"lambda must be > 0, got {lam}")
        d = self._norms(pr)
        p, w, a = pr.p, self.weights, self.a
        count = 2 * a + 1
        C2 = d["weak_line"]

        in_E = d["nG_K"][:, a] > lam
        mu_E = math.fsum(w[in_E].tolist())
        level_counts = np.count_nonzero(d["nG_K"] > lam, axis=1)
        E_tilde = np.count_nonzero(d["nGT_K"] > lam, axis=1)
        f0 = _integrate(d["f0p"], w)
        scale = C2**p / lam**p

        per_atom_rhs = scale * d["psi"]
        worst = int(np.argmax(E_tilde - per_atom_rhs))

        links = [
            Link("level_identity", _integrate(level_counts, w), count * mu_E, "=="),
            Link("level_containment", count * mu_E, _integrate(E_tilde, w)),
            Link("line_weak_bound", float(E_tilde[worst]), float(per_atom_rhs[worst])),
            Link("final_bound", mu_E, self.slack * scale * f0),
        ]
        sys_ratio = 0.0
        if f0 > 0:
            sys_ratio = (lam**p * mu_E / f0) ** (1.0 / p)
        return CertificateReport(
            trial=trial, kind="weak", a=a, epsilon=self.eps, p=p, r=pr.r,
            slack=self.slack, ratio_line=C2, ratio_sys=sys_ratio, links=links,
            lam=float(lam), trivial=bool(mu_E == 0 and not np.any(E_tilde)),
            J=self.field.J,
        )

    def output_max(self, pr):
        """Largest ``||G(0, x)||_r``, the scale for relative level grids."""
        return float(self._norms(pr)["nG_K"][:, self.a].max())


def strong_certificate(line_op, system, field, pr, a, window=None, trial=0):
    """Replay the strong-type truncation argument for one field.

    Links checked (``K = {|t| <= a}``, ``phi = ||.||_r^p``):

    - ``averaging_identity``: ``sum_K int phi(G(t, .)) == (2a+1) int phi(G(0, .))``
    - ``pointwise_domination``: ``G <= G^{a+eps}`` on ``K``
    - ``integrated_domination``: the same after integrating
    - ``line_inequality``: per atom, ``sum_K phi(G^{a+eps}) <= C^p sum_t phi(F^{a+eps})``
      with ``C`` the worst line ratio over the truncated traces
    - ``integrated_line_bound``: the same integrated over atoms
    - ``input_identity``: ``int sum_t phi(F^{a+eps}) == (2(a+eps)+1) int phi(f)``
    - ``final_bound``: ``int phi(G(0, .)) <= slack * C^p * int phi(f)``
    """
    return TruncatedTraces(line_op, system, field, a, window).strong(pr, trial)


def weak_certificate(line_op, system, field, pr, lam, a, window=None, trial=0):
    """Replay the weak-type truncation argument for one field at level ``lam``.

    ``E = {x : ||G(0, x)|| > lam}`` and ``E~_x = {t in K : ||G^{a+eps}(t, x)|| > lam}``.
    The line weak constant is the exact supremum over all levels, taken over
    the truncated traces.
    """
    return TruncatedTraces(line_op, system, field, a, window).weak(pr, lam, trial)


@dataclass
class TrialComparison:
    trial: int
    seed: int
    J: int
    slack: float
    strong_line: float
    strong_sys: float
    weak_line: float
    weak_sys: float
    degenerate: bool = False

    @property
    def strong_ok(self):
        return bool(self.degenerate or self.strong_sys <= self.slack * self.strong_line + LINK_TOL)

    @property
    def weak_ok(self):
        return bool(self.degenerate or self.weak_sys <= self.slack * self.weak_line + LINK_TOL)

    @property
    def passed(self):
        return self.strong_ok and self.weak_ok

    def to_dict(self):
        return {
            "trial": self.trial,
            "seed": self.seed,
            "J": self.J,
            "slack": self.slack,
            "strong_line": self.strong_line,
            "strong_sys": self.strong_sys,
            "weak_line": self.weak_line,
            "weak_sys": self.weak_sys,
            "degenerate": self.degenerate,
            "passed": self.passed,
        }


@dataclass
class ComparisonReport:
    operator: str
    system: str
    p: float
    r: float
    a: int
    ensemble: dict
    lambda_grid: dict
    trials: list

    def _live(self):
        return [t for t in self.trials if not t.degenerate]

    def summary(self):
        live = self._live()

        def top(attr):
            return max((getattr(t, attr) for t in live), default=0.0)

        return {
            "C_line_strong": top("strong_line"),
            "C_sys_strong": top("strong_sys"),
            "C_line_weak": top("weak_line"),
            "C_sys_weak": top("weak_sys"),
            "strong_violations": sum(not t.strong_ok for t in self.trials),
            "weak_violations": sum(not t.weak_ok for t in self.trials),
            "n_degenerate": len(self.trials) - len(live),
            "label": "empirical",
        }

    @property
    def violations(self):
        return sum(not t.passed for t in self.trials)

    @property
    def passed(self):
        return self.violations == 0

    def to_dict(self):
        return {
            "operator": self.operator,
            "system": self.system,
            "p": self.p,
            "r": _r_label(self.r),
            "a": self.a,
            "ensemble": self.ensemble,
            "lambda_grid": self.lambda_grid,
            "summary": self.summary(),
            "passed": self.passed,
            "trials": [t.to_dict() for t in self.trials],
        }


def _compare_one(line_op, system, ensemble, pr, grid, a, trial):
    field, seed = ensemble.draw_field(system, trial)
    bundle = TruncatedTraces(line_op, system, field, a)
    slack_p = bundle.slack ** (1.0 / pr.p)
    cert = bundle.strong(pr, trial)
    d = bundle._norms(pr)
    if _integrate(d["f0p"], system.weights) == 0:
        return TrialComparison(trial, seed, ensemble.J, slack_p, 0.0, 0.0, 0.0, 0.0, True)
    out = VectorField(bundle.G_K[:, :, a], system.space)
    weak_sys = 0.0
    for lam in grid.values(bundle.output_max(pr)):
        weak_sys = max(weak_sys, weak_ratio(out, field, pr, float(lam)))
    return TrialComparison(
        trial, seed, ensemble.J, slack_p,
        strong_line=cert.ratio_line, strong_sys=cert.ratio_sys,
        weak_line=d["weak_line"], weak_sys=weak_sys,
    )


def transfer_comparison(line_op, system, ensemble, pr, lambda_grid=None, a=32, workers=1):
    """Per trial, compare system-side constants with line-side constants on the same traces.

    A trial passes when ``C_sys <= slack**(1/p) * C_line + 1e-9`` for both the
    strong and the weak constant.  The line constants are measured on the
    truncated orbit traces of that trial's field.
    """
    grid = lambda_grid if lambda_grid is not None else LambdaGrid()
    trials = _map(
        lambda t: _compare_one(line_op, system, ensemble, pr, grid, a, t),
        range(ensemble.n_trials),
        workers,
    )
    return ComparisonReport(
        operator=str(line_op),
        system=system.name,
        p=pr.p,
        r=pr.r,
        a=a,
        ensemble=ensemble.describe(),
        lambda_grid=grid.describe(),
        trials=trials,
    )


def j_sweep(operator, J_values, n_trials, seed, pr=None, distribution="mixed", workers=1):
    """Strong constants of one operator for several component counts ``J``."""
    pr = pr if pr is not None else ExponentPair(2, 2)
    return {
        J: estimate_constant(
            operator, EnsembleSpec(n_trials, seed, J, distribution), pr, "strong",
            workers=workers,
        )
        for J in J_values
    }
