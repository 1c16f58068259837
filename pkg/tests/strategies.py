"""Hypothesis strategies shared by the test modules."""

import numpy as np
from hypothesis import strategies as st

from signtope.signmat import PartialSignMatrix


@st.composite
def sign_matrices(draw, max_rows=5, max_cols=5, total=False):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    vals = [1, -1] if total else [1, -1, 0]
    rows = []
    for _ in range(m):
        row = draw(st.lists(st.sampled_from(vals), min_size=n, max_size=n))
        if all(v == 0 for v in row):
            row[draw(st.integers(0, n - 1))] = draw(st.sampled_from([1, -1]))
        rows.append(row)
    return PartialSignMatrix(np.array(rows, dtype=np.int8))
