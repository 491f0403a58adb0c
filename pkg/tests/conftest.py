import random

import numpy as np
import pytest

from moonlab import analysis, counting, iso
from moonlab.core import build_path_extremal


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every compiled kernel once so JIT time lands here, not in
    whichever test happens to run first."""
    t = build_path_extremal(5)
    counting.cycle_counts(t)
    counting.cycle_counts_through(t, 0)
    counting.strong_sub_counts(t)
    counting.hamiltonian_path_count(t)
    analysis.analyze(t)
    iso.canonical_form(t)
    iso.count_classes(4)
    from moonlab import _kernels
    from moonlab.counting import masks_of
    m = masks_of(t)
    out = np.empty(5, np.int64)
    _kernels.deleted_diameters(5, m, out)
    _kernels.delta_kinds(5, m)
    from naive_oracle import dfs_cycle_census
    dfs_cycle_census(5, m)


@pytest.fixture
def rng():
    return random.Random(0x5eed)
