import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfint.errors import UnsupportedRingTier
from hopfint.linalg import (
    Matrix,
    Submodule,
    canonical_form,
    kernel,
    mat_vec,
    smith_normal_form,
    solve_affine,
    submodule_membership,
)
from hopfint.rings import parse_ring


def M(ring_text, rows, ncols=None):
    R = parse_ring(ring_text)
    return Matrix.from_values(R, rows, ncols)


def span(ring_text, gens, n):
    R = parse_ring(ring_text)
    return Submodule(R, n, [[R.coerce(x) for x in g] for g in gens])


def test_kernel_examples():
    assert kernel(M("GF(2)", [[1, 1]])) == span("GF(2)", [[1, 1]], 2)
    assert kernel(M("Z/4", [[2]])) == span("Z/4", [[2]], 1)
    assert kernel(M("Z", [[2, -2]])) == span("Z", [[1, 1]], 2)


def test_solve_affine_examples():
    assert solve_affine(M("Z", [[2]]), [1]) is None
    x, K = solve_affine(M("Z/4", [[3]]), [1])
    assert x == [3] and K.is_zero()
    x, _ = solve_affine(M("Q", [[2]]), [1])
    assert parse_ring("Q").format_element(x[0]) == "1/2"


def test_canonical_form_examples():
    assert canonical_form(M("GF(3)", [[1, 2], [2, 1]])).rows == [[1, 2]]
    assert canonical_form(M("Z", [[2, 0], [3, 0]])).rows == [[1, 0]]
    assert canonical_form(M("Z/4", [[2, 0]])).rows == [[2, 0]]


def test_membership_examples():
    assert submodule_membership(span("Q", [[1, 1]], 2), [2, 2])
    assert not submodule_membership(span("Z/4", [[2]], 1), [1])
    assert submodule_membership(span("Q", [], 3), [0, 0, 0])


def test_verify_only_tier_refuses_solving():
    with pytest.raises(UnsupportedRingTier):
        kernel(M("Z[1/2]", [[1, 1]]))


def test_howell_form_catches_hidden_generators():
    # row echelon alone would miss (0, 2): 2*(1, 2) = (2, 0) in Z/4
    S = span("Z/4", [[1, 2]], 2)
    assert [0, 2] not in S
    T = span("Z/4", [[2, 1]], 2)
    assert [0, 2] in T and (2 * 2) % 4 == 0
    assert S != T


# oracles -------------------------------------------------------------------


def _span_by_enumeration(R, gens, n):
    elems = R.elements()
    out = {tuple([R.zero] * n)}
    for g in gens:
        out = {tuple(R.add(a, R.mul(c, b)) for a, b in zip(v, g)) for v in out for c in elems}
    return out


@pytest.mark.parametrize("m", [2, 3, 4, 6])
def test_kernel_complete_over_zmod_by_enumeration(m):
    R = parse_ring(f"Z/{m}")
    rng = random.Random(m)
    for _ in range(12):
        n = rng.randint(1, 4 if m <= 4 else 3)
        rows = [[rng.randrange(m) for _ in range(n)] for _ in range(rng.randint(1, 3))]
        A = Matrix(R, rows, n)
        K = kernel(A)
        for g in K.generators:
            assert all(x == 0 for x in mat_vec(R, rows, g))
        brute = {v for v in itertools.product(range(m), repeat=n)
                 if all(x == 0 for x in mat_vec(R, rows, list(v)))}
        assert _span_by_enumeration(R, K.generators, n) == brute


def _sympy_invariants(rows):
    from sympy import Matrix as SM
    from sympy import ZZ
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    D = sympy_snf(SM(rows), domain=ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


def _matmul(X, Y):
    return [[sum(a * b for a, b in zip(r, c)) for c in zip(*Y)] for r in X]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_normal_form_matches_sympy(m, n, data):
    rows = [[data.draw(st.integers(-9, 9)) for _ in range(n)] for _ in range(m)]
    U, D, V = smith_normal_form(rows, n)
    assert _matmul(_matmul(U, rows), V) == D
    diag = [D[i][i] for i in range(min(m, n))]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    nz = [d for d in diag if d != 0]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert sorted(abs(d) for d in nz) == _sympy_invariants(rows)


# properties ----------------------------------------------------------------

RINGS = ["Q", "GF(3)", "Z", "Z/4", "Z/6", "Z/12", "Q x Z/4", "GF(2) x Z/9"]


@st.composite
def random_matrix(draw):
    R = parse_ring(draw(st.sampled_from(RINGS)))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    n = draw(st.integers(1, 4))
    k = draw(st.integers(0, 4))

    def small():
        v = R.random_element(rng)
        return v if R.tier != "PID" else rng.randint(-6, 6)

    return R, [[small() for _ in range(n)] for _ in range(k)], n


@settings(max_examples=120, deadline=None)
@given(random_matrix())
def test_kernel_generators_are_solutions(data):
    R, rows, n = data
    K = kernel(Matrix(R, rows, n))
    for g in K.canonical:
        assert all(x == R.zero for x in mat_vec(R, rows, list(g)))


@settings(max_examples=120, deadline=None)
@given(random_matrix(), st.randoms(use_true_random=False))
def test_canonical_form_idempotent_and_order_free(data, shuffler):
    R, rows, n = data
    A = Matrix(R, rows, n)
    C = canonical_form(A)
    assert canonical_form(C) == C
    shuffled = list(rows)
    shuffler.shuffle(shuffled)
    assert Submodule(R, n, shuffled) == Submodule(R, n, rows)
    half = len(rows) // 2
    S, T = Submodule(R, n, rows[:half]), Submodule(R, n, rows[half:])
    assert S + T == T + S == Submodule(R, n, rows)


@settings(max_examples=80, deadline=None)
@given(random_matrix(), st.integers(0, 2**32 - 1))
def test_solutions_are_solutions(data, seed):
    R, rows, n = data
    if not rows:
        return
    rng = random.Random(seed)
    x0 = [R.random_element(rng) if R.tier != "PID" else rng.randint(-5, 5) for _ in range(n)]
    b = mat_vec(R, rows, x0)
    res = solve_affine(Matrix(R, rows, n), b)
    assert res is not None
    x, K = res
    assert mat_vec(R, rows, x) == b
    diff = [R.sub(p, q) for p, q in zip(x0, x)]
    assert diff in K


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_product_kernel_is_interleaving_of_factor_kernels(seed):
    rng = random.Random(seed)
    P = parse_ring("Z/4 x GF(3)")
    n = rng.randint(1, 3)
    rows = [[P.random_element(rng) for _ in range(n)] for _ in range(rng.randint(1, 3))]
    K = kernel(Matrix(P, rows, n))
    for k, F in enumerate(P.factors):
        Kf = kernel(Matrix(F, [[x[k] for x in r] for r in rows], n))
        assert Submodule(F, n, K.component_generators(k)) == Kf
