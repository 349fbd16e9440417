import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from halfroot import kernels

PAIRS = ["half_square_adjacency", "find_gamma", "gamma_free_exists", "cop_exists"]


def small_matrices(max_r=6, max_c=6):
    return st.tuples(st.integers(0, max_r), st.integers(0, max_c)).flatmap(
        lambda s: arrays(np.uint8, s, elements=st.integers(0, 1))
    )


@given(small_matrices(12, 12))
def test_half_square_backends_agree(a):
    np.testing.assert_array_equal(kernels.half_square_adjacency_numba(a), kernels.half_square_adjacency_numpy(a))


@given(small_matrices(10, 10))
def test_find_gamma_backends_agree(a):
    assert kernels.find_gamma_numba(a) == kernels.find_gamma_numpy(a)


@given(small_matrices(6, 5))
def test_brute_kernels_agree_on_existence(a):
    # the returned permutation index may differ only when both succeed
    g1, g2 = kernels.gamma_free_exists_numba(a), kernels.gamma_free_exists_numpy(a)
    assert (g1 >= 0) == (g2 >= 0)
    c1, c2 = kernels.cop_exists_numba(a), kernels.cop_exists_numpy(a)
    assert (c1 >= 0) == (c2 >= 0)


def test_find_gamma_reports_a_real_gamma():
    a = np.array([[1, 1], [1, 0]], dtype=np.uint8)
    i, j, k, l = kernels.find_gamma(a)
    assert (a[i, k], a[i, l], a[j, k], a[j, l]) == (1, 1, 1, 0) and i < j and k < l
    assert kernels.find_gamma(np.array([[0, 1], [1, 1]])) is None


def test_permutation_table():
    assert kernels.permutation_table(0).shape == (1, 0)
    t = kernels.permutation_table(3)
    assert t.shape == (6, 3) and tuple(t[0]) == (0, 1, 2) and tuple(t[-1]) == (2, 1, 0)


@pytest.mark.parametrize("flag, want", [("1", "numpy"), ("", "numba" if kernels.HAVE_NUMBA else "numpy")])
def test_env_flag_selects_backend(flag, want):
    env = dict(os.environ, HALFROOT_DISABLE_NUMBA=flag)
    code = "from halfroot import kernels; print(kernels.backend(), kernels.cop_exists.__name__)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout.split()
    assert out == [want, f"cop_exists_{want}"]


def test_numpy_backend_runs_the_recognizers():
    env = dict(os.environ, HALFROOT_DISABLE_NUMBA="1")
    code = (
        "from halfroot.graph import Graph\n"
        "from halfroot.halfsquare import RECOGNIZERS\n"
        "g = Graph.path(5)\n"
        "print(' '.join(str(fn(g).verdict) for fn in RECOGNIZERS.values()))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    from halfroot.graph import Graph
    from halfroot.halfsquare import RECOGNIZERS

    assert out.strip() == " ".join(str(fn(Graph.path(5)).verdict) for fn in RECOGNIZERS.values())
