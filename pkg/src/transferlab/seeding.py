"""Per-trial random streams derived from one master seed.

Trial ``i`` always gets the same stream no matter which worker runs it or
in what order, so aggregated results do not depend on parallelism.
"""

import numpy as np

DEFAULT_SEED = 0xC0FFEE


def trial_seed(master_seed, trial):
    """64-bit seed for trial ``trial``, a pure function of ``(master_seed, trial)``."""
    if master_seed < 0 or trial < 0:
        raise ValueError("seeds and trial indices must be nonnegative")
    ss = np.random.SeedSequence(entropy=int(master_seed), spawn_key=(int(trial),))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def trial_rng(master_seed, trial):
    """``(Generator, seed)`` for one trial."""
    seed = trial_seed(master_seed, trial)
    return np.random.default_rng(seed), seed
