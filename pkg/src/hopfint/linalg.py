"""Exact linear algebra over the ring tower.

Every routine works on dense lists of raw ring values.  The engine per
tier is

    FIELD       reduced row echelon form (Q with Fractions, GF(p) modular)
    FINITE-PIR  Howell form over Z/m
    PID         Hermite normal form for spans, Smith normal form for solving
    PRODUCT     componentwise, reassembled by interleaving
    VERIFY-ONLY refused with UnsupportedRingTier

Kernels and affine solutions over fields and Z/m come from the canonical
form of the augmented matrix ``[A^T | I]``: its rows span the graph
``{(Ax, x)}``, and the Howell property makes the rows with zero left block
a complete generating set of ``{x : Ax = 0}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _accel
from .errors import DimensionMismatch, UnsupportedRingTier
from .rings import (
    FIELD,
    FINITE_PIR,
    PID,
    PRODUCT,
    IntegersMod,
    Integers,
    Product,
    Rationals,
    Ring,
)


@dataclass
class Matrix:
    ring: Ring
    rows: list
    ncols: int = None

    def __post_init__(self):
        self.rows = [list(r) for r in self.rows]
        if self.ncols is None:
            self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def from_values(cls, ring, rows, ncols=None):
        return cls(ring, [[ring.coerce(v) for v in r] for r in rows], ncols)

    @property
    def nrows(self):
        return len(self.rows)

    def transpose(self):
        return Matrix(self.ring, transpose(self.rows, self.ncols), self.nrows)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.ncols == other.ncols
            and self.rows == other.rows
        )


def transpose(rows, ncols):
    return [[r[j] for r in rows] for j in range(ncols)]


def mat_vec(ring, rows, v):
    return [ring.dot(r, v) for r in rows]


def _check_tier(ring):
    if ring.tier not in (FIELD, FINITE_PIR, PID, PRODUCT):
        raise UnsupportedRingTier(f"{ring} ({ring.tier}) supports verification only")
    if isinstance(ring, Product):
        for f in ring.factors:
            _check_tier(f)


# ---------------------------------------------------------------------------
# per-tier canonical echelon forms; all return (rows, pivot_columns)


def _rref_fraction(rows, ncols):
    M = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return [[Fraction(x) for x in row] for row in M[:r]], pivots


def _pivots(rows):
    out = []
    for r in rows:
        out.append(next(j for j, x in enumerate(r) if x != 0))
    return out


def _howell(rows, ncols, m):
    if not rows:
        return [], []
    dtype = object if m == 0 or m >= _accel.INT64_SAFE_MODULUS else np.int64
    A = np.array(rows, dtype=dtype).reshape(len(rows), ncols)
    H = _accel.howell_mod(A, m)
    out = [[int(x) for x in r] for r in H]
    return out, _pivots(out)


def echelon(ring, rows, ncols):
    """Canonical echelon form over a non-product ring."""
    if isinstance(ring, Rationals):
        return _rref_fraction(rows, ncols)
    if isinstance(ring, IntegersMod):
        return _howell(rows, ncols, ring.modulus)
    if isinstance(ring, Integers):
        return _howell(rows, ncols, 0)
    raise UnsupportedRingTier(f"no canonical form over {ring}")


def _split(ring, rows, k):
    return [[x[k] for x in r] for r in rows]


def _embed_rows(ring, k, rows):
    return [[ring.embed(x, k) for x in r] for r in rows]


def canonical_rows(ring, rows, ncols):
    _check_tier(ring)
    if isinstance(ring, Product):
        out = []
        for k, f in enumerate(ring.factors):
            out.extend(_embed_rows(ring, k, canonical_rows(f, _split(ring, rows, k), ncols)))
        return out
    return echelon(ring, rows, ncols)[0]


def canonical_form(A):
    """RREF / Howell / Hermite form of the row span of ``A``; zero rows dropped."""
    return Matrix(A.ring, canonical_rows(A.ring, A.rows, A.ncols), A.ncols)


# ---------------------------------------------------------------------------
# Smith normal form over Z


def smith_normal_form(rows, ncols):
    """Return ``(U, D, V)`` with ``U*A*V == D`` diagonal, each d_i | d_(i+1).

    ``U`` and ``V`` are unimodular integer matrices (lists of rows).
    """
    m, n = len(rows), ncols
    D = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]

    def add_row(M, dst, src, q):
        M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]

    def add_col(M, dst, src, q):
        for row in M:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not entries:
                return U, D, V
            _, i, j = min(entries)
            swap_rows(D, t, i)
            swap_rows(U, t, i)
            swap_cols(D, t, j)
            swap_cols(V, t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(D, i, t, -q)
                    add_row(U, i, t, -q)
                if D[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(D, j, t, -q)
                    add_col(V, j, t, -q)
                if D[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(D, t, bad, 1)
            add_row(U, t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


def _int_kernel(rows, ncols):
    U, D, V = smith_normal_form(rows, ncols)
    rank = sum(1 for i in range(min(len(rows), ncols)) if D[i][i])
    return [[V[r][c] for r in range(ncols)] for c in range(rank, ncols)]


def _int_solve(rows, ncols, b):
    U, D, V = smith_normal_form(rows, ncols)
    c = mat_vec(Integers(), U, b)
    y = [0] * ncols
    for i, ci in enumerate(c):
        d = D[i][i] if i < ncols else 0
        if d == 0:
            if ci != 0:
                return None
        elif ci % d:
            return None
        else:
            y[i] = ci // d
    return mat_vec(Integers(), V, y)


# ---------------------------------------------------------------------------
# kernels and affine solving


def _reduce(ring, vec, canon, pivots, must_vanish):
    """Reduce ``vec`` by canonical rows; fail if any of the first
    ``must_vanish`` coordinates survives."""
    vec = list(vec)
    by_col = dict(zip(pivots, canon))
    for c in range(len(vec)):
        x = vec[c]
        if c not in by_col:
            if c < must_vanish and x != ring.zero:
                return None
            continue
        if x == ring.zero:
            continue
        row = by_col[c]
        p = row[c]
        if isinstance(ring, Rationals):
            q = x / p
        else:
            if c < must_vanish and x % p:
                return None
            q = x // p
        if q:
            vec = [ring.sub(a, ring.mul(q, b)) for a, b in zip(vec, row)]
    return vec


def _augmented(ring, rows, ncols):
    nrows = len(rows)
    aug = []
    for j in range(ncols):
        left = [rows[i][j] for i in range(nrows)]
        right = [ring.one if k == j else ring.zero for k in range(ncols)]
        aug.append(left + right)
    return aug


def _kernel_plain(ring, rows, ncols):
    if isinstance(ring, Integers):
        return _int_kernel(rows, ncols)
    nrows = len(rows)
    canon, _ = echelon(ring, _augmented(ring, rows, ncols), nrows + ncols)
    return [r[nrows:] for r in canon if all(x == ring.zero for x in r[:nrows])]


def _solve_plain(ring, rows, ncols, b):
    if isinstance(ring, Integers):
        return _int_solve(rows, ncols, b)
    nrows = len(rows)
    canon, pivots = echelon(ring, _augmented(ring, rows, ncols), nrows + ncols)
    rest = _reduce(ring, list(b) + [ring.zero] * ncols, canon, pivots, nrows)
    if rest is None:
        return None
    return [ring.neg(x) for x in rest[nrows:]]


def kernel_rows(ring, rows, ncols):
    _check_tier(ring)
    if isinstance(ring, Product):
        out = []
        for k, f in enumerate(ring.factors):
            out.extend(_embed_rows(ring, k, kernel_rows(f, _split(ring, rows, k), ncols)))
        return out
    return _kernel_plain(ring, rows, ncols)


def solve_rows(ring, rows, ncols, b):
    """A particular solution of ``rows * x = b`` or ``None``."""
    _check_tier(ring)
    if len(b) != len(rows):
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {len(rows)}")
    if isinstance(ring, Product):
        parts = []
        for k, f in enumerate(ring.factors):
            x = solve_rows(f, _split(ring, rows, k), ncols, [v[k] for v in b])
            if x is None:
                return None
            parts.append(x)
        return [tuple(p[i] for p in parts) for i in range(ncols)]
    return _solve_plain(ring, rows, ncols, b)


def kernel(A):
    """Submodule ``{x : A x = 0}`` with a complete generating set."""
    return Submodule(A.ring, A.ncols, kernel_rows(A.ring, A.rows, A.ncols))


def solve_affine(A, b):
    """``(x, kernel)`` with ``A x = b``, or ``None`` when there is no solution."""
    b = [A.ring.coerce(v) for v in b]
    x = solve_rows(A.ring, A.rows, A.ncols, b)
    if x is None:
        return None
    return x, kernel(A)


# ---------------------------------------------------------------------------
# submodules


@dataclass(eq=False)
class Submodule:
    """Finitely generated submodule of ``ring**ambient_rank``."""

    ring: Ring
    ambient_rank: int
    generators: list = field(default_factory=list)

    def __post_init__(self):
        self.generators = [list(g) for g in self.generators]
        for g in self.generators:
            if len(g) != self.ambient_rank:
                raise DimensionMismatch(
                    f"generator of length {len(g)} in rank-{self.ambient_rank} module"
                )
        self._canonical = None

    @property
    def canonical(self):
        if self._canonical is None:
            rows = canonical_rows(self.ring, self.generators, self.ambient_rank)
            self._canonical = tuple(tuple(r) for r in rows)
        return self._canonical

    def canonical_matrix(self):
        return Matrix(self.ring, [list(r) for r in self.canonical], self.ambient_rank)

    def is_zero(self):
        return not self.canonical

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.ring == other.ring
            and self.ambient_rank == other.ambient_rank
            and self.canonical == other.canonical
        )

    def __hash__(self):
        return hash((self.ring, self.ambient_rank, self.canonical))

    def __add__(self, other):
        if self.ring != other.ring or self.ambient_rank != other.ambient_rank:
            raise DimensionMismatch("sum of submodules in different ambient modules")
        return Submodule(self.ring, self.ambient_rank, self.generators + other.generators)

    def __contains__(self, v):
        return submodule_membership(self, v)

    def contains_module(self, other):
        return all(submodule_membership(self, g) for g in other.generators)

    def dimension(self):
        """Number of canonical generators (the dimension over a field)."""
        return len(self.canonical)

    def component_generators(self, k):
        """Canonical generators of the k-th factor of a product-ring module."""
        return canonical_rows(self.ring.factors[k], _split(self.ring, self.generators, k),
                              self.ambient_rank)

    def __repr__(self):
        return f"Submodule({self.ring}, rank={self.ambient_rank}, canonical={list(self.canonical)})"


def submodule_membership(S, v):
    """True iff ``v`` lies in the row span of ``S`` (solves ``G^T y = v``)."""
    v = [S.ring.coerce(x) for x in v]
    if len(v) != S.ambient_rank:
        raise DimensionMismatch("vector length differs from ambient rank")
    if not S.generators:
        return all(x == S.ring.zero for x in v)
    gt = transpose(S.generators, S.ambient_rank)
    return solve_rows(S.ring, gt, len(S.generators), v) is not None
