import os

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def weight_arrays(draw, max_n=5, distinct=True, missing=False):
    """n x m arrays with n >= m and at least one finite assignment."""
    from bapsens.corpus import has_assignment
    from bapsens.core import INF

    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, n))
    if distinct:
        vals = draw(st.permutations(range(1, 4 * n * m + 1)))[: n * m]
    else:
        vals = draw(st.lists(st.integers(0, 6), min_size=n * m, max_size=n * m))
    w = np.array(vals, dtype=float).reshape(n, m)
    if missing:
        mask = np.array(draw(st.lists(st.booleans(), min_size=n * m, max_size=n * m)))
        w2 = w.copy()
        w2[mask.reshape(n, m)] = INF
        if has_assignment(w2):
            w = w2
    return w
