import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfint._accel import howell_mod
from hopfint.linalg import Submodule
from hopfint.rings import IntegersMod


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 4, 6, 8, 9, 12, 30, 360]), st.integers(1, 5), st.integers(1, 5),
       st.integers(0, 2**32 - 1))
def test_backends_give_identical_howell_forms(m, rows, cols, seed):
    A = np.random.default_rng(seed).integers(0, m, size=(rows, cols))
    a, b = howell_mod(A, m, "numpy"), howell_mod(A, m, "numba")
    assert np.array_equal(a, b)
    # same row span as the input
    R = IntegersMod(m)
    assert Submodule(R, cols, a.tolist()) == Submodule(R, cols, A.tolist())


def test_hermite_form_over_integers():
    H = howell_mod(np.array([[2, 0], [3, 0]], dtype=object), 0)
    assert H.tolist() == [[1, 0]]


def _run(env_value, code):
    env = dict(os.environ, HOPFINT_BACKEND=env_value)
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)


def test_environment_selects_backend():
    code = ("from hopfint import _accel; from hopfint.semigroups import all_semigroups;"
            "print(_accel.BACKEND, sum(1 for _ in all_semigroups(3)))")
    assert _run("numpy", code).stdout.split() == ["numpy", "113"]
    assert _run("numba", code).stdout.split() == ["numba", "113"]
    bad = _run("fortran", code)
    assert bad.returncode != 0 and "HOPFINT_BACKEND" in bad.stderr
