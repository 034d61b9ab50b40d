# %% [markdown]
# # Orbit traces
#
# A field on a permutation system becomes a sequence on the integers by
# reading it along the orbit of each atom.  Any line operator applied to that
# sequence and read at time zero gives an operator on the system.

# %%
import numpy as np

from transferlab import (
    LineOperatorSpec,
    TransferredOperator,
    orbit_trace,
    random_permutation_system,
    transfer_apply,
)
from transferlab.spaces import VectorField
from transferlab.transfer import check_equimeasurability

system = random_permutation_system(12, seed=3)
print(system.cycles())
rng = np.random.default_rng(0)
field = VectorField(rng.uniform(-1, 1, (2, 12)), system.space)

# %%
trace = orbit_trace(system, field, 0, -4, 4)
trace.values.round(3)

# %%
op = LineOperatorSpec("hl", 3)
out = transfer_apply(TransferredOperator(op, system), field)
print(out.values[:, 0], op.apply(trace).at(0))

# %% [markdown]
# Shifting along the orbit and shifting time are the same thing, so every
# time slice of the traced output has the same distribution.

# %%
rep = check_equimeasurability(system, field, op, n_trials=20, seed=1)
print(rep.n_cases, rep.passed)
