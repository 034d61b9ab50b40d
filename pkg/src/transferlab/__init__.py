"""Vector-valued transference of maximal inequalities to finite measure-preserving systems.

Line operators (forward averages, one-sided and uncentred maximal functions)
are transferred to permutation systems through orbit traces.  The package
measures empirical strong and weak constants on both sides and checks, trial
by trial, the truncation argument that carries a line inequality over to the
system with the same constant.
"""

from .dynamics import (
    PermutationSystem,
    cyclic_system,
    orbit_trace,
    parse_system,
    random_permutation_system,
    rotation_system,
)
from .inequalities import (
    CertificateReport,
    ComparisonReport,
    ConstantEstimate,
    EnsembleSpec,
    LambdaGrid,
    TruncatedTraces,
    estimate_constant,
    j_sweep,
    slack_factor,
    strong_certificate,
    strong_ratio,
    transfer_comparison,
    weak_certificate,
)
from .line_ops import (
    EmptyWindowError,
    LineOperatorSpec,
    apply_componentwise,
    check_operator_axioms,
    one_sided_average,
    one_sided_maximal,
    parse_operator,
    uncentered_maximal,
)
from .seeding import DEFAULT_SEED, trial_rng, trial_seed
from .spaces import (
    DegenerateInputError,
    ExponentPair,
    SampledSequence,
    VectorField,
    WeightedSpace,
    distribution_measure,
    lp_norm,
    lr_norm_pointwise,
    weak_ratio,
    weak_sup,
)
from .transfer import (
    ConfigurationError,
    TransferredOperator,
    check_equimeasurability,
    ergodic_maximal,
    evaluate_transferred,
    transfer_apply,
    truncate_trace,
)

__version__ = "0.1.0"
