"""Finite semigroups, their ideal-groups and integrals of semigroup rings.

An *ideal-group* of S is a left (or right) ideal I of S that is a group
under the restricted multiplication.  For a finite S the left integrals of
R[S] are exactly the R-span of the sums ``sum(x for x in I)`` over the
left ideal-groups I, and they form the right ideal ``t' R[S]`` for any
single such sum ``t'``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedTable, NotAssociative, UnsupportedRingTier
from .rings import VERIFY_ONLY, Product

LEFT, RIGHT = "left", "right"


def _check_side(side):
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


@dataclass(frozen=True)
class AssociativityResult:
    ok: bool
    triple: tuple | None = None
    checked: int = 0


def check_associative(table):
    """Return ``ok`` or the lexicographically first triple (i, j, k) that fails."""
    T = np.asarray(table, dtype=np.int64)
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise MalformedTable("Cayley table must be a non-empty square")
    n = T.shape[0]
    if T.min() < 0 or T.max() >= n:
        raise MalformedTable("Cayley table entry out of range")
    lhs = T[T]  # lhs[i, j, k] = (ij)k
    rhs = T[np.arange(n)[:, None, None], T[None, :, :]]  # i(jk)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        return AssociativityResult(False, tuple(int(x) for x in bad[0]), n**3)
    return AssociativityResult(True, None, n**3)


class FiniteSemigroup:
    def __init__(self, table, labels=None):
        res = check_associative(table)
        self.table = [[int(x) for x in row] for row in table]
        self.labels = list(labels) if labels is not None else [f"x{i}" for i in range(self.order)]
        if len(self.labels) != self.order:
            raise MalformedTable("label count does not match table size")
        if not res.ok:
            i, j, k = res.triple
            lab = self.labels
            raise NotAssociative(f"({lab[i]}{lab[j]}){lab[k]} != {lab[i]}({lab[j]}{lab[k]})")

    @property
    def order(self):
        return len(self.table)

    def mul(self, i, j):
        return self.table[i][j]

    @property
    def identity(self):
        n = self.order
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                return e
        return None

    @property
    def zero(self):
        n = self.order
        for z in range(n):
            if all(self.table[z][x] == z and self.table[x][z] == z for x in range(n)):
                return z
        return None

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, labels={self.labels})"


@dataclass(frozen=True)
class IdealGroup:
    elements: tuple
    identity: int
    inverse_map: dict = field(hash=False, compare=False)


def _group_structure(S, elems):
    """(identity, inverse map) if the subtable on ``elems`` is a group, else None."""
    es = set(elems)
    for a in elems:
        if {S.mul(a, b) for b in elems} != es or {S.mul(b, a) for b in elems} != es:
            return None
    ident = next((e for e in elems if all(S.mul(e, a) == a == S.mul(a, e) for a in elems)), None)
    if ident is None:
        return None
    inv = {a: next(b for b in elems if S.mul(a, b) == ident) for a in elems}
    return ident, inv


def principal_ideal(S, x, side=LEFT):
    """``S^1 x`` (left) or ``x S^1`` (right)."""
    if side == LEFT:
        return frozenset([x] + [S.mul(s, x) for s in range(S.order)])
    return frozenset([x] + [S.mul(x, s) for s in range(S.order)])


def ideal_groups(S, side=LEFT):
    """All one-sided ideals of S that are groups, sorted by element tuple."""
    _check_side(side)
    principals = {principal_ideal(S, x, side) for x in range(S.order)}
    minimal = [P for P in principals if not any(Q < P for Q in principals)]
    out = []
    for P in minimal:
        elems = tuple(sorted(P))
        gs = _group_structure(S, elems)
        if gs is not None:
            out.append(IdealGroup(elems, gs[0], gs[1]))
    out.sort(key=lambda g: g.elements)
    for a in range(len(out)):
        for b in range(a):
            assert not set(out[a].elements) & set(out[b].elements), "ideal-groups overlap"
    return out


def is_ideal_group(S, group, side=LEFT):
    elems = set(group.elements)
    for s in range(S.order):
        for x in elems:
            y = S.mul(s, x) if side == LEFT else S.mul(x, s)
            if y not in elems:
                return False
    return _group_structure(S, group.elements) is not None


# ---------------------------------------------------------------------------
# integrals of R[S]


@dataclass
class CyclicWitness:
    """Integral module versus the cyclic one-sided ideal generated by t'."""

    integral_module: object
    ideal_module: object
    equal: bool


@dataclass
class SemigroupIntegrals:
    side: str
    generator: list
    basis: list
    groups: list
    witness: CyclicWitness | None
    note: str = ""

    @property
    def is_zero(self):
        return not self.basis


def _indicator(ring, n, elems):
    v = [ring.zero] * n
    for x in elems:
        v[x] = ring.one
    return v


def _verify_only(ring):
    if isinstance(ring, Product):
        return any(_verify_only(f) for f in ring.factors)
    return ring.tier == VERIFY_ONLY


def semigroup_integrals(ring, S, side=LEFT):
    """Integral formula for R[S]; the witness compares against a direct kernel solve."""
    from .algebra import semigroup_bialgebra
    from .integrals import integrals
    from .linalg import Submodule

    _check_side(side)
    n = S.order
    groups = ideal_groups(S, side)
    basis = [_indicator(ring, n, g.elements) for g in groups]
    generator = basis[0] if basis else [ring.zero] * n
    if _verify_only(ring):
        return SemigroupIntegrals(side, generator, basis, groups, None,
                                  f"witness skipped: no kernel solver over {ring}")
    alg = semigroup_bialgebra(ring, S)
    solved = integrals(alg, side).module
    if basis:
        # left integrals = t' R[S]; right integrals = R[S] t'
        if side == LEFT:
            spans = [alg.multiply(generator, alg.basis(s)) for s in range(n)]
        else:
            spans = [alg.multiply(alg.basis(s), generator) for s in range(n)]
        spans.append(generator)
    else:
        spans = []
    ideal = Submodule(ring, n, spans)
    formula = Submodule(ring, n, basis)
    equal = solved == ideal == formula
    return SemigroupIntegrals(side, generator, basis, groups, CyclicWitness(solved, ideal, equal))


def two_sided_check(ring, S):
    """``t`` with ``int_l = int_r = R t`` when both sides are nonzero, else None."""
    from .linalg import Submodule

    left = ideal_groups(S, LEFT)
    right = ideal_groups(S, RIGHT)
    if not left or not right:
        return None
    both = [g for g in left if any(g.elements == h.elements for h in right)]
    if len(both) != 1 or len(left) != 1 or len(right) != 1:
        raise AssertionError("left and right ideal-groups do not collapse to one two-sided ideal")
    n = S.order
    t = _indicator(ring, n, both[0].elements)
    if not _verify_only(ring):
        L = Submodule(ring, n, semigroup_integrals(ring, S, LEFT).basis)
        R = Submodule(ring, n, semigroup_integrals(ring, S, RIGHT).basis)
        if not (L == R == Submodule(ring, n, [t])):
            raise AssertionError("left and right integral modules differ")
    return t


def is_cancellative(S, side):
    """Right cancellative: ``ba = ca => b = c`` (columns injective); left mirrors."""
    _check_side(side)
    T = np.asarray(S.table)
    lines = T.T if side == RIGHT else T
    return all(len(set(line.tolist())) == S.order for line in lines)


def is_group(S):
    if S.identity is None:
        return False
    return _group_structure(S, tuple(range(S.order))) is not None


def finite_group_criterion(S):
    """For right-cancellative S: a left ideal-group exists iff S is a group.

    Returns True when the equivalence holds (vacuously when S is not right
    cancellative).  The mirrored statement is checked for left cancellative S.
    """
    ok = True
    if is_cancellative(S, RIGHT):
        ok &= bool(ideal_groups(S, LEFT)) == is_group(S)
    if is_cancellative(S, LEFT):
        ok &= bool(ideal_groups(S, RIGHT)) == is_group(S)
    return ok


# ---------------------------------------------------------------------------
# constructions


def rectangular_band(p, q):
    """``I x J`` with ``(i, j)(i', j') = (i, j')``."""
    if p < 1 or q < 1:
        raise ValueError("rectangular band sizes must be positive")
    cells = [(i, j) for i in range(p) for j in range(q)]
    index = {c: k for k, c in enumerate(cells)}
    table = [[index[(a[0], b[1])] for b in cells] for a in cells]
    return FiniteSemigroup(table, [f"b{i}_{j}" for i, j in cells])


def _fresh(labels, want):
    lab = want
    while lab in labels:
        lab += "'"
    return lab


def adjoin_identity(S):
    """S^1; S itself when it already has an identity."""
    if S.identity is not None:
        return S
    n = S.order
    table = [row + [i] for i, row in enumerate(S.table)]
    table.append(list(range(n + 1)))
    return FiniteSemigroup(table, S.labels + [_fresh(S.labels, "1")])


def adjoin_zero(S):
    n = S.order
    table = [row + [n] for row in S.table]
    table.append([n] * (n + 1))
    return FiniteSemigroup(table, S.labels + [_fresh(S.labels, "0")])


def cyclic_group(n):
    labels = ["1"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)], labels)


def right_zero(n):
    """``xy = y``: every singleton is a left ideal-group."""
    return FiniteSemigroup([list(range(n)) for _ in range(n)], [f"r{i}" for i in range(n)])


def left_zero(n):
    return FiniteSemigroup([[i] * n for i in range(n)], [f"l{i}" for i in range(n)])


def zmod_mul(n):
    """The multiplicative monoid (Z/n, *, 1)."""
    return FiniteSemigroup([[(i * j) % n for j in range(n)] for i in range(n)],
                           [f"x{i}" for i in range(n)])


def trivial_monoid():
    return FiniteSemigroup([[0]], ["e"])


_NAMED = {
    "cyclic": (1, cyclic_group),
    "right_zero": (1, right_zero),
    "left_zero": (1, left_zero),
    "zmod_mul": (1, zmod_mul),
    "rect_band": (2, rectangular_band),
    "trivial": (0, trivial_monoid),
}


def named_semigroup(text):
    """Build from strings like ``"rect_band 2 2 + 1"`` or ``"cyclic 2 + 0"``.

    ``+ 1`` adjoins an identity, ``+ 0`` a zero; modifiers apply left to right.
    """
    parts = text.split("+")
    head = parts[0].split()
    if not head or head[0] not in _NAMED:
        raise ValueError(f"unknown semigroup {text!r}; known: {sorted(_NAMED)}")
    arity, build = _NAMED[head[0]]
    args = head[1:]
    if len(args) != arity:
        raise ValueError(f"{head[0]} takes {arity} integer argument(s)")
    S = build(*(int(a) for a in args))
    for mod in parts[1:]:
        mod = mod.strip()
        if mod == "1":
            S = adjoin_identity(S)
        elif mod == "0":
            S = adjoin_zero(S)
        else:
            raise ValueError(f"unknown modifier '+ {mod}'")
    return S


def all_semigroups(n, backend=None):
    """Every associative table on n labeled elements, as FiniteSemigroups."""
    from ._accel import enumerate_semigroup_tables

    for T in enumerate_semigroup_tables(n, backend=backend):
        yield FiniteSemigroup(T.tolist())
