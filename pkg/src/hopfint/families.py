"""Infinite-rank Hopf algebras in truncated form.

``R[X]/<nX>`` with X primitive is stored as coefficient lists up to a degree
bound ``d``.  Coefficients of ``X^k`` for ``k >= 1`` live in ``R/(n)`` and are
kept as canonical representatives.  Products that would push a nonzero
term past degree ``d`` raise :class:`TruncationOverflow` instead of silently
dropping it, so every check that completes is exact on the degrees it saw.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import InvalidModulus, NotIdempotent, TruncationOverflow
from .linalg import Submodule, kernel_rows
from .rings import Product

DEFAULT_DEGREE = 16
RANDOM_SAMPLES = 16


@dataclass
class FamilyReport:
    name: str
    ring: str
    parameter: str
    degree: int
    verdict: bool
    checks: dict = field(default_factory=dict)
    scope: str = ""

    def to_record(self):
        return {
            "family": self.name,
            "ring": self.ring,
            "parameter": self.parameter,
            "degree": self.degree,
            "verdict": self.verdict,
            "checks": dict(self.checks),
            "scope": self.scope,
        }


class TruncatedPolyHopf:
    """``R[X]/<nX>`` restricted to degrees ``0..d``."""

    def __init__(self, ring, n, d):
        n = ring.coerce(n)
        if n == ring.zero:
            raise InvalidModulus("n must be nonzero")
        if ring.is_unit(n):
            raise InvalidModulus(f"{ring.format_element(n)} is a unit in {ring}")
        if d < 0:
            raise ValueError("degree bound must be non-negative")
        self.ring = ring
        self.n = n
        self.d = d

    def normalize(self, coeffs):
        R = self.ring
        if len(coeffs) > self.d + 1:
            if any(R.reduce_mod_ideal(c, self.n) != R.zero for c in coeffs[self.d + 1:]):
                raise TruncationOverflow(f"nonzero term above degree {self.d}")
            coeffs = coeffs[: self.d + 1]
        out = [R.coerce(c) for c in coeffs] + [R.zero] * (self.d + 1 - len(coeffs))
        return [out[0]] + [R.reduce_mod_ideal(c, self.n) for c in out[1:]]

    def element(self, coeffs):
        return self.normalize(list(coeffs))

    def constant(self, c):
        return self.element([c])

    def monomial(self, k):
        return self.element([0] * k + [1])

    def add(self, f, g):
        return self.normalize([self.ring.add(a, b) for a, b in zip(f, g)])

    def scale(self, c, f):
        return self.normalize([self.ring.mul(c, a) for a in f])

    def multiply(self, f, g):
        R = self.ring
        out = [R.zero] * (2 * self.d + 1)
        for i, a in enumerate(f):
            if a == R.zero:
                continue
            for j, b in enumerate(g):
                if b != R.zero:
                    out[i + j] = R.add(out[i + j], R.mul(a, b))
        return self.normalize(out)

    def counit(self, f):
        return f[0]

    def antipode(self, f):
        R = self.ring
        return self.normalize([a if k % 2 == 0 else R.neg(a) for k, a in enumerate(f)])

    def delta(self, f):
        """``Delta(f)`` as ``{(i, j): coeff}`` using ``Delta(X^k) = sum C(k, i) X^i (x) X^(k-i)``."""
        R = self.ring
        out = {}
        for k, a in enumerate(f):
            if a == R.zero:
                continue
            for i in range(k + 1):
                c = R.mul(a, R.from_int(math.comb(k, i)))
                if k > 0:
                    c = R.reduce_mod_ideal(c, self.n)
                if c != R.zero:
                    key = (i, k - i)
                    out[key] = R.add(out.get(key, R.zero), c)
        return {key: v for key, v in out.items() if v != R.zero}

    def random_element(self, rng):
        return self.element([self.ring.random_element(rng) for _ in range(self.d + 1)])


def truncated_quotient_hopf(ring, n, d=DEFAULT_DEGREE):
    return TruncatedPolyHopf(ring, n, d)


def verify_truncated_axioms(model):
    """Antipode and counit laws on every monomial ``X^k`` with ``k <= d``."""
    R = model.ring
    for k in range(model.d + 1):
        f = model.monomial(k)
        terms = model.delta(f)
        left = model.constant(0)
        right = model.constant(0)
        eps_left = model.constant(0)
        for (i, j), c in terms.items():
            xi, xj = model.monomial(i), model.monomial(j)
            left = model.add(left, model.scale(c, model.multiply(model.antipode(xi), xj)))
            right = model.add(right, model.scale(c, model.multiply(xi, model.antipode(xj))))
            eps_left = model.add(eps_left, model.scale(R.mul(c, model.counit(xi)), xj))
        target = model.constant(model.counit(f))
        if left != target or right != target or eps_left != f:
            return False
    return True


def verify_integral_family(model, t=None, samples=RANDOM_SAMPLES, seed=0):
    """``t f = eps(f) t = f t`` for all monomials and ``samples`` seeded random f.

    ``t`` defaults to ``n`` as a degree-0 element, for which no product can
    overflow.  Any overflow aborts with :class:`TruncationOverflow`.
    """
    t = model.constant(model.n) if t is None else model.element(t)
    rng = random.Random(seed)
    tests = [model.monomial(k) for k in range(model.d + 1)]
    tests += [model.random_element(rng) for _ in range(samples)]
    for f in tests:
        expected = model.scale(model.counit(f), t)
        if model.multiply(t, f) != expected or model.multiply(f, t) != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# projective member of the family


def _check_idempotent(ring, e):
    e = ring.coerce(e)
    if ring.mul(e, e) != e or e in (ring.zero, ring.one):
        raise NotIdempotent(f"{ring.format_element(e)} is not a nontrivial idempotent of {ring}")
    return e


@dataclass
class DirectSumWitness:
    """Orthogonal idempotent projections onto ``I``, ``Re`` and ``R(1-e)[X]``."""

    ideal: list
    constant: list
    rest: list
    checks: dict

    @property
    def ok(self):
        return all(self.checks.values())


def projective_family(ring, e, d=DEFAULT_DEGREE):
    """Truncated ``R[X]/<eX>`` plus a verified splitting of degree <= d coefficients."""
    R = ring
    e = _check_idempotent(R, e)
    model = TruncatedPolyHopf(R, e, d)
    f = R.sub(R.one, e)
    size = d + 1
    diagonals = {
        "ideal": [R.zero] + [e] * d,
        "constant": [e] + [R.zero] * d,
        "rest": [f] * size,
    }

    def apply(diag, v):
        return [R.mul(a, x) for a, x in zip(diag, v)]

    def raw_reduce(v):
        return [v[0]] + [R.reduce_mod_ideal(x, e) for x in v[1:]]

    units = [[R.one if i == k else R.zero for i in range(size)] for k in range(size)]
    rng = random.Random(0)
    probes = units + [[R.random_element(rng) for _ in range(size)] for _ in range(RANDOM_SAMPLES)]
    names = list(diagonals)
    checks = {
        "idempotent": all(
            R.mul(x, x) == x for diag in diagonals.values() for x in diag),
        "orthogonal": all(
            R.mul(x, y) == R.zero
            for a in names for b in names if a < b
            for x, y in zip(diagonals[a], diagonals[b])),
        "sum_is_identity": all(
            R.add(R.add(x, y), z) == R.one for x, y, z in zip(*diagonals.values())),
        "ideal_part_vanishes_in_H": all(
            all(x == R.zero for x in raw_reduce(apply(diagonals["ideal"], v))[1:])
            and apply(diagonals["ideal"], v)[0] == R.zero
            for v in probes),
        "complement_maps_onto_H": all(
            raw_reduce([R.add(x, y) for x, y in zip(apply(diagonals["constant"], v),
                                                    apply(diagonals["rest"], v))])
            == raw_reduce(v) for v in probes),
        "complement_injective_into_H": all(
            raw_reduce(w) != [R.zero] * size or all(x == R.zero for x in w)
            for w in ([R.add(x, y) for x, y in zip(apply(diagonals["constant"], v),
                                                   apply(diagonals["rest"], v))]
                      for v in probes)),
    }
    witness = DirectSumWitness(diagonals["ideal"], diagonals["constant"], diagonals["rest"], checks)
    return model, witness


# ---------------------------------------------------------------------------
# A # H with A = R(1-e) and trivial action


@dataclass
class CounterexampleResult:
    invariants: Submodule
    degree: int
    checks: dict
    scope: str

    @property
    def is_zero(self):
        return self.invariants.is_zero()


def counterexample_4_6(ring, e, d=DEFAULT_DEGREE):
    """Invariants of degree <= d in ``A # R[X]/<eX>`` for ``A = R(1-e)``.

    An element is ``sum (1-e) b_k # X^k``.  On ``A (x) R/(e)`` multiplication by
    ``1-e`` is injective, so ``(1 # X) g = sum (1-e) b_k X^(k+1)`` vanishes iff
    every ``(1-e) b_k`` does.  ``(1 # 1) g = g`` holds for every ``g``.
    """
    R = ring
    e = _check_idempotent(R, e)
    model = TruncatedPolyHopf(R, e, d + 1)
    f = R.sub(R.one, e)
    size = d + 1
    rows = [[R.zero] * size for _ in range(d + 2)]
    for k in range(size):
        rows[k + 1][k] = f  # coefficient of X^(k+1) in (1 # X) g
    gens = kernel_rows(R, rows, size)
    gammas = [[R.mul(f, b) for b in g] for g in gens]
    inv = Submodule(R, size, gammas)

    def x_times(g):
        return [R.zero] + list(g)

    checks = {
        "generators_killed_by_X": all(
            all(x == R.zero for x in x_times(g)) for g in gammas),
        "generators_fixed_by_1": all(
            model.multiply(model.constant(1), model.element(g)) == model.element(g)
            for g in gammas),
        "model_product_agrees": all(
            model.multiply(model.monomial(1), model.element(g)) == model.element(x_times(g))
            for g in gammas) if gammas else True,
    }
    scope = f"invariants computed for elements of degree <= {d} only"
    return CounterexampleResult(inv, d, checks, scope)


# ---------------------------------------------------------------------------
# k x k[x]


class ProductPolyModel:
    """``k x k[x]`` over ``k x k`` with ``k[x]`` truncated at degree d."""

    def __init__(self, field, d):
        self.field = field
        self.ring = Product([field, field])
        self.d = d

    @property
    def basis(self):
        """``(1, 0)`` followed by ``(0, x^j)`` for ``j = 0..d``."""
        k = self.field
        out = [(k.one, [k.zero] * (self.d + 1))]
        for j in range(self.d + 1):
            out.append((k.zero, [k.one if i == j else k.zero for i in range(self.d + 1)]))
        return out

    def multiply(self, a, b):
        k = self.field
        prod = [k.zero] * (2 * self.d + 1)
        for i, x in enumerate(a[1]):
            if x == k.zero:
                continue
            for j, y in enumerate(b[1]):
                if y != k.zero:
                    prod[i + j] = k.add(prod[i + j], k.mul(x, y))
        if any(v != k.zero for v in prod[self.d + 1:]):
            raise TruncationOverflow(f"k[x] product above degree {self.d}")
        return (k.mul(a[0], b[0]), prod[: self.d + 1])

    def counit(self, a):
        return (a[0], a[1][0])

    def scale(self, r, a):
        k = self.field
        return (k.mul(r[0], a[0]), [k.mul(r[1], x) for x in a[1]])


def product_with_polynomial_factor(field, d=DEFAULT_DEGREE, t=None):
    """Check ``h t = eps(h) t = t h`` on every basis element of degree <= d."""
    model = ProductPolyModel(field, d)
    k = field
    if t is None:
        t = (k.one, [k.zero] * (d + 1))
    ok = True
    for h in model.basis:
        expected = model.scale(model.counit(h), t)
        if model.multiply(h, t) != expected or model.multiply(t, h) != expected:
            ok = False
            break
    return model, ok


def family_names():
    return ["rxmodnx", "projective", "ctrex46", "kxkx"]


def run_family(name, ring, parameter=None, degree=DEFAULT_DEGREE):
    """Dispatch used by the command line."""
    label = "" if parameter is None else ring.format_element(ring.coerce(parameter))
    if name == "rxmodnx":
        model = truncated_quotient_hopf(ring, parameter, degree)
        checks = {"integral": verify_integral_family(model), "axioms": verify_truncated_axioms(model)}
        return FamilyReport(name, str(ring), label, degree, all(checks.values()), checks,
                            f"t = n checked against X^k for k <= {degree} and "
                            f"{RANDOM_SAMPLES} seeded random elements")
    if name == "projective":
        model, witness = projective_family(ring, parameter, degree)
        checks = dict(witness.checks)
        checks["integral"] = verify_integral_family(model)
        return FamilyReport(name, str(ring), label, degree, all(checks.values()), checks,
                            f"direct-sum splitting checked on coefficients of degree <= {degree}")
    if name == "ctrex46":
        res = counterexample_4_6(ring, parameter, degree)
        checks = dict(res.checks)
        checks["invariants_zero"] = res.is_zero
        return FamilyReport(name, str(ring), label, degree, all(checks.values()), checks,
                            res.scope)
    if name == "kxkx":
        if isinstance(ring, Product):
            raise InvalidModulus("kxkx takes the field k, not a product ring")
        _, ok = product_with_polynomial_factor(ring, degree)
        return FamilyReport(name, str(ring), "(1,0)", degree, ok, {"t_is_integral": ok},
                            f"basis (1,0) and (0,x^j) for j <= {degree}")
    raise ValueError(f"unknown family {name!r}; known: {family_names()}")
