# %% [markdown]
# # Replaying the truncation argument
#
# For one field the certificate records every step from the line inequality
# to the system inequality as a numbered link, with both sides stored.  Only
# the lattice slack (2(a+eps)+1)/(2a+1) separates the two constants, and it
# shrinks as the truncation radius a grows.

# %%
import numpy as np

from transferlab import LineOperatorSpec, TruncatedTraces, rotation_system
from transferlab.spaces import ExponentPair, VectorField

system = rotation_system(97, 13)
op = LineOperatorSpec("osmax", 8)
field = VectorField(np.random.default_rng(4).uniform(-1, 1, (3, 97)), system.space)
pr = ExponentPair(2, 2)

# %%
tt = TruncatedTraces(op, system, field, a=32)
rep = tt.strong(pr)
for link in rep.links:
    print(f"{link.name:24s} {link.lhs:12.6f} {link.relation} {link.rhs:12.6f}  {link.passed}")

# %%
for a in (4, 8, 16, 32, 64, 128):
    rep = TruncatedTraces(op, system, field, a).strong(pr)
    print(a, round(rep.slack, 4), round(rep.ratio_sys, 4), round(rep.ratio_line, 4))

# %% [markdown]
# The weak branch works level by level.

# %%
scale = tt.output_max(pr)
for lam in np.geomspace(0.1, 1.0, 4) * scale:
    rep = tt.weak(pr, lam)
    print(f"lam={lam:.3f} passed={rep.passed} ratio_sys={rep.ratio_sys:.4f} line={rep.ratio_line:.4f}")
