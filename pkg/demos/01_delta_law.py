# %% [markdown]
# # A single atom on a cycle
#
# Put mass one on atom 6 of a ten-point cycle and apply the one-sided
# ergodic maximal function.  Atom x sees the mass after d = (6 - x) mod 10
# steps, so the best average it can form is 1/(d+1).

# %%
import numpy as np

from transferlab import LineOperatorSpec, TransferredOperator, cyclic_system, transfer_apply
from transferlab.spaces import VectorField
from transferlab.transfer import ergodic_maximal

system = cyclic_system(10)
f = np.zeros((1, 10))
f[0, 6] = 1.0
field = VectorField(f, system.space)

# %%
# the transferred line operator and the direct orbit average agree bit for bit
top = TransferredOperator(LineOperatorSpec("osmax", 10), system)
m = transfer_apply(top, field).values[0]
print(m)
print(np.array_equal(m, ergodic_maximal(system, field, 10).values[0]))

# %%
d = (6 - np.arange(10)) % 10
print(np.array_equal(m, 1 / (d + 1)))

# %% [markdown]
# The level sets give the weak (1,1) bound with constant one:
# lam * mu{M f > lam} never exceeds ||f||_1 = 0.1.

# %%
for lam in np.geomspace(0.01, 1.0, 8):
    level = system.weights[m > lam].sum()
    print(f"lam={lam:.3f}  lam*mu={lam * level:.4f}")
