# %% [markdown]
# # Does the constant grow with the number of components?
#
# The vector-valued maximal inequality holds with a constant that does not
# depend on J.  The sweep below is a directional sanity check: empirical
# constants are lower bounds, and a flat profile only says nothing grew.

# %%
from transferlab import LineOperatorSpec, TransferredOperator, cyclic_system, j_sweep
from transferlab.spaces import ExponentPair

top = TransferredOperator(LineOperatorSpec("hl", 4), cyclic_system(64))
sweep = j_sweep(top, [1, 2, 4, 8, 16], n_trials=100, seed=0xC0FFEE, pr=ExponentPair(2, 2))
for J, est in sweep.items():
    print(J, round(est.value, 4), est.label)

# %%
values = [est.value for est in sweep.values()]
print("spread", max(values) / min(values))
