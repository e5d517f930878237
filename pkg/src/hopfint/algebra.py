"""Finite-rank algebras, bialgebras and Hopf algebras by structure constants.

Elements are coefficient lists over the basis.  Tensors of two elements are
flat lists indexed ``i * n2 + j`` for ``e_i (x) f_j``.

``support`` handles product Hopf algebras ``H1 x H2`` over ``R1 x R2``: the
module is ``e1*R^n1 (+) e2*R^n2`` inside ``R^(n1+n2)`` and basis vector ``i``
is ``support[i] * e_i``, not the plain unit vector.  Everything else is
oblivious to it because all structure maps commute with the mask.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    AntipodeRequired,
    DimensionMismatch,
    HopfIntError,
    MalformedTable,
    NotAGroup,
)
from .linalg import solve_rows
from .rings import Product


class StructureAlgebra:
    def __init__(self, ring, labels, mul, unit, support=None):
        n = len(labels)
        if n == 0:
            raise DimensionMismatch("rank-0 algebras are not supported")
        if len(set(labels)) != n:
            raise ValueError(f"duplicate basis labels in {labels}")
        if len(mul) != n or any(len(row) != n for row in mul):
            raise DimensionMismatch("multiplication tensor must be n x n")
        self.ring = ring
        self.labels = list(labels)
        self.mul = [[list(v) for v in row] for row in mul]
        for row in self.mul:
            for v in row:
                if len(v) != n:
                    raise DimensionMismatch("structure constant vector of wrong length")
        self.unit = None if unit is None else list(unit)
        self.support = None if support is None else list(support)

    @property
    def rank(self):
        return len(self.labels)

    def mask(self, i):
        return self.ring.one if self.support is None else self.support[i]

    def basis(self, i):
        v = [self.ring.zero] * self.rank
        v[i] = self.mask(i)
        return v

    def zero(self):
        return [self.ring.zero] * self.rank

    def one(self):
        if self.unit is None:
            raise HopfIntError(f"algebra {self.labels} has no unit")
        return list(self.unit)

    def index(self, label):
        return self.labels.index(label)

    # -- arithmetic -----------------------------------------------------------
    def add(self, x, y):
        return [self.ring.add(a, b) for a, b in zip(x, y)]

    def sub(self, x, y):
        return [self.ring.sub(a, b) for a, b in zip(x, y)]

    def scale(self, c, x):
        return [self.ring.mul(c, a) for a in x]

    def multiply(self, x, y):
        R = self.ring
        z = R.zero
        out = [z] * self.rank
        for i, xi in enumerate(x):
            if xi == z:
                continue
            row = self.mul[i]
            for j, yj in enumerate(y):
                if yj == z:
                    continue
                c = R.mul(xi, yj)
                for k, v in enumerate(row[j]):
                    if v != z:
                        out[k] = R.add(out[k], R.mul(c, v))
        return out

    def left_matrix(self, x):
        """Matrix ``M`` with ``M v == x * v`` (column convention)."""
        cols = [self.multiply(x, self.basis(c)) for c in range(self.rank)]
        return [[cols[c][r] for c in range(self.rank)] for r in range(self.rank)]

    def right_matrix(self, x):
        cols = [self.multiply(self.basis(c), x) for c in range(self.rank)]
        return [[cols[c][r] for c in range(self.rank)] for r in range(self.rank)]

    def is_commutative(self):
        return all(
            self.multiply(self.basis(i), self.basis(j)) == self.multiply(self.basis(j), self.basis(i))
            for i in range(self.rank)
            for j in range(i)
        )

    def is_central(self, x):
        return all(
            self.multiply(x, self.basis(i)) == self.multiply(self.basis(i), x)
            for i in range(self.rank)
        )

    def format(self, x):
        return format_vector(self.ring, self.labels, x)

    def as_algebra(self):
        return StructureAlgebra(self.ring, self.labels, self.mul, self.unit, self.support)


class Bialgebra(StructureAlgebra):
    """Algebra plus comultiplication ``comul[i][j][k]`` (coefficient of
    ``e_j (x) e_k`` in ``Delta(e_i)``) and counit vector."""

    def __init__(self, ring, labels, mul, unit, comul, counit, support=None):
        super().__init__(ring, labels, mul, unit, support)
        n = self.rank
        if len(comul) != n or any(len(m) != n or any(len(r) != n for r in m) for m in comul):
            raise DimensionMismatch("comultiplication must be n x n x n")
        if len(counit) != n:
            raise DimensionMismatch("counit must have length n")
        self.comul = [[list(r) for r in m] for m in comul]
        self.counit = list(counit)

    @classmethod
    def from_algebra(cls, alg, comul, counit):
        return cls(alg.ring, alg.labels, alg.mul, alg.unit, comul, counit, alg.support)

    def as_bialgebra(self):
        return Bialgebra(self.ring, self.labels, self.mul, self.unit, self.comul, self.counit,
                         self.support)


class HopfAlgebra(Bialgebra):
    """Bialgebra plus antipode; ``antipode[i]`` is the vector ``S(e_i)``."""

    def __init__(self, ring, labels, mul, unit, comul, counit, antipode, support=None):
        super().__init__(ring, labels, mul, unit, comul, counit, support)
        if len(antipode) != self.rank or any(len(v) != self.rank for v in antipode):
            raise DimensionMismatch("antipode must be n x n")
        self.antipode = [list(v) for v in antipode]

    @classmethod
    def from_bialgebra(cls, b, antipode):
        return cls(b.ring, b.labels, b.mul, b.unit, b.comul, b.counit, antipode, b.support)


def require_hopf(h):
    if not isinstance(h, HopfAlgebra):
        raise AntipodeRequired(f"operation needs an antipode; got a {type(h).__name__}")
    return h


def format_vector(ring, labels, x):
    terms = []
    for lab, c in zip(labels, x):
        if c == ring.zero:
            continue
        if c == ring.one:
            terms.append(lab)
        else:
            terms.append(f"{ring.format_element(c)}*{lab}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# tensors


def outer(ring, x, y):
    z = ring.zero
    return [ring.mul(a, b) if a != z and b != z else z for a in x for b in y]


def _check_len(v, n, what):
    if len(v) != n:
        raise DimensionMismatch(f"{what} has length {len(v)}, expected {n}")


def map_tensor(ring, u, n1, n2, f, g):
    """``(f (x) g)(u)`` for linear maps given on basis indices."""
    _check_len(u, n1 * n2, "tensor")
    fs = [f(i) for i in range(n1)]
    gs = [g(j) for j in range(n2)]
    m1, m2 = len(fs[0]), len(gs[0])
    out = [ring.zero] * (m1 * m2)
    for i in range(n1):
        for j in range(n2):
            c = u[i * n2 + j]
            if c == ring.zero:
                continue
            for k, a in enumerate(outer(ring, fs[i], gs[j])):
                if a != ring.zero:
                    out[k] = ring.add(out[k], ring.mul(c, a))
    return out


def tensor_mul(h, u, v):
    """Product in ``H (x) H`` with componentwise multiplication."""
    n = h.rank
    _check_len(u, n * n, "left tensor")
    _check_len(v, n * n, "right tensor")
    R = h.ring
    out = [R.zero] * (n * n)
    for a, b in itertools.product(range(n), repeat=2):
        ca = u[a * n + b]
        if ca == R.zero:
            continue
        for c, d in itertools.product(range(n), repeat=2):
            cb = v[c * n + d]
            if cb == R.zero:
                continue
            coeff = R.mul(ca, cb)
            left = h.mul[a][c]
            right = h.mul[b][d]
            for k, x in enumerate(outer(R, left, right)):
                if x != R.zero:
                    out[k] = R.add(out[k], R.mul(coeff, x))
    return out


def left_mul_tensor(h, x, u):
    """``(x (x) 1) u``: multiply the left leg by ``x``."""
    n = h.rank
    _check_len(x, n, "element")
    return map_tensor(h.ring, u, n, n, lambda i: h.multiply(x, h.basis(i)), h.basis)


def right_mul_tensor(h, u, x):
    """``u (1 (x) x)``: multiply the right leg by ``x``."""
    n = h.rank
    _check_len(x, n, "element")
    return map_tensor(h.ring, u, n, n, h.basis, lambda j: h.multiply(h.basis(j), x))


def mu(h, u):
    """Multiplication map ``H (x) H -> H``."""
    n = h.rank
    _check_len(u, n * n, "tensor")
    R = h.ring
    out = [R.zero] * n
    for i in range(n):
        for j in range(n):
            c = u[i * n + j]
            if c != R.zero:
                out = h.add(out, h.scale(c, h.mul[i][j]))
    return out


def tensor_flip(n1, n2, u):
    return [u[i * n2 + j] for j in range(n2) for i in range(n1)]


def apply_delta(h, x):
    n = h.rank
    _check_len(x, n, "element")
    R = h.ring
    out = [R.zero] * (n * n)
    for i, c in enumerate(x):
        if c == R.zero:
            continue
        for j in range(n):
            for k in range(n):
                v = h.comul[i][j][k]
                if v != R.zero:
                    out[j * n + k] = R.add(out[j * n + k], R.mul(c, v))
    return out


def apply_counit(h, x):
    _check_len(x, h.rank, "element")
    return h.ring.dot(h.counit, x)


def apply_antipode(h, x):
    require_hopf(h)
    _check_len(x, h.rank, "element")
    out = h.zero()
    for i, c in enumerate(x):
        if c != h.ring.zero:
            out = h.add(out, h.scale(c, h.antipode[i]))
    return out


def is_cocommutative(h):
    n = h.rank
    for i in range(n):
        d = apply_delta(h, h.basis(i))
        if d != tensor_flip(n, n, d):
            return False
    return True


def antipode_bijective(h):
    """True iff S is invertible on H (surjectivity suffices at finite rank)."""
    require_hopf(h)
    n = h.rank
    if all(apply_antipode(h, h.antipode[i]) == h.basis(i) for i in range(n)):
        return True
    S = [[h.antipode[c][r] for c in range(n)] for r in range(n)]
    return all(solve_rows(h.ring, S, n, h.basis(i)) is not None for i in range(n))


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerificationReport:
    """Outcome of an axiom check.  ``status`` is PASS, BIALGEBRA-ONLY or FAIL."""

    status: str
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def to_record(self):
        return {"status": self.status, "checks": dict(self.checks), "violations": list(self.violations)}


def _check_algebra(a, checks, violations):
    n = a.rank
    B = [a.basis(i) for i in range(n)]
    prods = [[a.multiply(B[i], B[j]) for j in range(n)] for i in range(n)]
    count = 0
    for i, j, k in itertools.product(range(n), repeat=3):
        count += 1
        if a.multiply(prods[i][j], B[k]) != a.multiply(B[i], prods[j][k]):
            violations.append(
                f"associativity fails on ({a.labels[i]}, {a.labels[j]}, {a.labels[k]})"
            )
            break
    checks["associativity"] = count
    if a.unit is None:
        checks["unit"] = "non-unital"
        return
    for i in range(n):
        if a.multiply(a.unit, B[i]) != B[i] or a.multiply(B[i], a.unit) != B[i]:
            violations.append(f"unit law fails on {a.labels[i]}")
            break
    checks["unit"] = n


def verify_algebra(a):
    checks, violations = {}, []
    _check_algebra(a, checks, violations)
    return VerificationReport("FAIL" if violations else "PASS", checks, violations)


def verify_hopf(h):
    """Check bialgebra axioms, and the antipode axiom when S is present."""
    checks, violations = {}, []
    _check_algebra(h, checks, violations)
    n = h.rank
    R = h.ring
    B = [h.basis(i) for i in range(n)]
    deltas = [apply_delta(h, b) for b in B]

    def delta_of(i):
        return deltas[i]

    for i in range(n):
        left = map_tensor(R, deltas[i], n, n, delta_of, h.basis)
        right = map_tensor(R, deltas[i], n, n, h.basis, delta_of)
        if left != right:
            violations.append(f"coassociativity fails on {h.labels[i]}")
            break
    checks["coassociativity"] = n

    for i in range(n):
        left = [R.zero] * n
        right = [R.zero] * n
        for j in range(n):
            for k in range(n):
                c = deltas[i][j * n + k]
                if c == R.zero:
                    continue
                left = h.add(left, h.scale(R.mul(c, h.counit[j]), B[k]))
                right = h.add(right, h.scale(R.mul(c, h.counit[k]), B[j]))
        if left != B[i] or right != B[i]:
            violations.append(f"counit law fails on {h.labels[i]}")
            break
    checks["counit"] = n

    bad = None
    for i, j in itertools.product(range(n), repeat=2):
        prod = h.multiply(B[i], B[j])
        if apply_delta(h, prod) != tensor_mul(h, deltas[i], deltas[j]):
            bad = f"Delta not multiplicative on ({h.labels[i]}, {h.labels[j]})"
        elif apply_counit(h, prod) != R.mul(apply_counit(h, B[i]), apply_counit(h, B[j])):
            bad = f"counit not multiplicative on ({h.labels[i]}, {h.labels[j]})"
        if bad:
            violations.append(bad)
            break
    if bad is None and h.unit is not None:
        if apply_delta(h, h.unit) != outer(R, h.unit, h.unit):
            violations.append("Delta(1) != 1 (x) 1")
        elif apply_counit(h, h.unit) != R.one:
            violations.append("counit(1) != 1")
    checks["compatibility"] = n * n

    if not isinstance(h, HopfAlgebra):
        checks["antipode"] = "skipped"
        status = "FAIL" if violations else "BIALGEBRA-ONLY"
        return VerificationReport(status, checks, violations)

    for i in range(n):
        target = h.scale(h.counit[i], h.one()) if h.unit is not None else None
        left = mu(h, map_tensor(R, deltas[i], n, n, lambda j: h.antipode[j], h.basis))
        right = mu(h, map_tensor(R, deltas[i], n, n, h.basis, lambda j: h.antipode[j]))
        if left != target or right != target:
            violations.append(f"antipode axiom fails on {h.labels[i]}")
            break
    checks["antipode"] = n
    return VerificationReport("FAIL" if violations else "PASS", checks, violations)


def _assert_verified(obj):
    report = verify_hopf(obj) if isinstance(obj, Bialgebra) else verify_algebra(obj)
    if not report.ok:
        raise HopfIntError(f"constructor produced an invalid object: {report.violations}")
    return obj


# ---------------------------------------------------------------------------
# constructors


def _grouplike_structure(ring, n, table):
    def e(i):
        v = [ring.zero] * n
        v[i] = ring.one
        return v

    mul = [[e(table[i][j]) for j in range(n)] for i in range(n)]
    comul = []
    for i in range(n):
        m = [[ring.zero] * n for _ in range(n)]
        m[i][i] = ring.one
        comul.append(m)
    counit = [ring.one] * n
    return e, mul, comul, counit


def _validate_table(table):
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise MalformedTable("Cayley table must be a non-empty square")
    if any(not (0 <= x < n) for row in table for x in row):
        raise MalformedTable("Cayley table entry out of range")


def group_algebra(ring, cayley, labels=None):
    """R[G] with grouplike basis: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    try:
        _validate_table(cayley)
    except MalformedTable as exc:
        raise NotAGroup(str(exc)) from None
    n = len(cayley)
    labels = labels or [f"g{i}" for i in range(n)]
    ident = next((e for e in range(n)
                  if all(cayley[e][x] == x and cayley[x][e] == x for x in range(n))), None)
    if ident is None:
        raise NotAGroup("no identity element")
    for x, y, z in itertools.product(range(n), repeat=3):
        if cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]]:
            raise NotAGroup(f"not associative on ({labels[x]}, {labels[y]}, {labels[z]})")
    inverse = []
    for x in range(n):
        inv = next((y for y in range(n) if cayley[x][y] == ident and cayley[y][x] == ident), None)
        if inv is None:
            raise NotAGroup(f"{labels[x]} has no inverse")
        inverse.append(inv)
    e, mul, comul, counit = _grouplike_structure(ring, n, cayley)
    antipode = [e(inverse[i]) for i in range(n)]
    return _assert_verified(HopfAlgebra(ring, labels, mul, e(ident), comul, counit, antipode))


def cyclic_group_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def cyclic_group_algebra(ring, n):
    labels = ["1"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    return group_algebra(ring, cyclic_group_table(n), labels)


def symmetric_group_s3():
    """Cayley table of S3 with labels; A3 = {e, r, r2} comes first."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    labels = ["e", "r", "r2", "s", "sr", "sr2"]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        return tuple(p[q[k]] for k in range(3))

    table = [[index[compose(p, q)] for q in perms] for p in perms]
    return table, labels


def semigroup_bialgebra(ring, semigroup):
    """R[S] with every basis element grouplike; unital iff S has an identity."""
    from .semigroups import FiniteSemigroup

    if not isinstance(semigroup, FiniteSemigroup):
        semigroup = FiniteSemigroup(semigroup)
    n = semigroup.order
    e, mul, comul, counit = _grouplike_structure(ring, n, semigroup.table)
    ident = semigroup.identity
    unit = None if ident is None else e(ident)
    # FiniteSemigroup checked associativity on construction; with every basis
    # element grouplike that is the only axiom that could fail.
    return Bialgebra(ring, semigroup.labels, mul, unit, comul, counit)


def product_hopf(h1, h2):
    """``H1 x H2`` over ``R1 x R2`` with componentwise structure."""
    for h in (h1, h2):
        _assert_verified(h)
    ring = Product([h1.ring, h2.ring])
    k1 = len(h1.ring.factors) if isinstance(h1.ring, Product) else 1

    def lift(side, value):
        parts = list(value) if isinstance((h1, h2)[side].ring, Product) else [value]
        if side == 0:
            return tuple(parts + [f.zero for f in ring.factors[k1:]])
        return tuple([f.zero for f in ring.factors[:k1]] + parts)

    n1, n2 = h1.rank, h2.rank
    n = n1 + n2
    offsets = (0, n1)

    def vec(side, v):
        out = [ring.zero] * n
        for i, c in enumerate(v):
            out[offsets[side] + i] = lift(side, c)
        return out

    def mat(side, m):
        size = len(m)
        out = [[ring.zero] * n for _ in range(n)]
        for j in range(size):
            for k in range(size):
                out[offsets[side] + j][offsets[side] + k] = lift(side, m[j][k])
        return out

    mul = [[[ring.zero] * n for _ in range(n)] for _ in range(n)]
    comul, counit, antipode, support = [], [], [], []
    for side, h in enumerate((h1, h2)):
        for i in range(h.rank):
            for j in range(h.rank):
                mul[offsets[side] + i][offsets[side] + j] = vec(side, h.mul[i][j])
            comul.append(mat(side, h.comul[i]))
            counit.append(lift(side, h.counit[i]))
            antipode.append(vec(side, h.antipode[i]))
            support.append(lift(side, h.mask(i)))
    unit = [ring.add(a, b) for a, b in zip(vec(0, h1.unit), vec(1, h2.unit))]
    labels = [f"{lab}_1" for lab in h1.labels] + [f"{lab}_2" for lab in h2.labels]
    return _assert_verified(
        HopfAlgebra(ring, labels, mul, unit, comul, counit, antipode, support)
    )


# ---------------------------------------------------------------------------
# product-ring components


def component_coords(obj, k):
    """Indices of basis vectors that live in factor ``k`` of a product ring."""
    f = obj.ring.factors[k]
    return [i for i in range(obj.rank) if obj.mask(i)[k] != f.zero]


def project_component(obj, k):
    """The structure of ``obj`` over the k-th factor ring, on its own coordinates."""
    f = obj.ring.factors[k]
    coords = component_coords(obj, k)

    def v(vec):
        return [vec[c][k] for c in coords]

    labels = [obj.labels[c] for c in coords]
    mul = [[v(obj.mul[a][b]) for b in coords] for a in coords]
    unit = None if obj.unit is None else v(obj.unit)
    if isinstance(obj, Bialgebra):
        comul = [[[obj.comul[a][b][c][k] for c in coords] for b in coords] for a in coords]
        counit = [obj.counit[a][k] for a in coords]
        if isinstance(obj, HopfAlgebra):
            antipode = [v(obj.antipode[a]) for a in coords]
            return HopfAlgebra(f, labels, mul, unit, comul, counit, antipode), coords
        return Bialgebra(f, labels, mul, unit, comul, counit), coords
    return StructureAlgebra(f, labels, mul, unit), coords


def embed_component(ring, n, k, coords, vec):
    out = [ring.zero] * n
    for c, x in zip(coords, vec):
        out[c] = ring.embed(x, k)
    return out
