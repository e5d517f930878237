"""Module algebras, smash products ``A # H`` and their certificates.

The action is stored per basis element of H as an ``m x m`` matrix over R
in column convention: ``action[i][r][c]`` is the coefficient of ``a_r`` in
``h_i . a_c``.  The smash product has basis ``a_i # h_j`` at index
``i * n + j`` and multiplication ``(a # h)(b # g) = sum a (h1 . b) # h2 g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import (
    Bialgebra,
    HopfAlgebra,
    StructureAlgebra,
    VerificationReport,
    antipode_bijective,
    apply_antipode,
    apply_counit,
    apply_delta,
    format_vector,
    is_cocommutative,
    left_mul_tensor,
    mu,
    outer,
    require_hopf,
    right_mul_tensor,
    semigroup_bialgebra,
    verify_algebra,
    verify_hopf,
)
from .errors import (
    DimensionMismatch,
    HopfIntError,
    HypothesisUnsatisfied,
    NotAMonoid,
    NotAnEndomorphismAction,
    NotCocommutative,
    RingMismatch,
)
from .integrals import ENUMERATION_LIMIT, left_integrals, right_integrals, verify_integral
from .linalg import Submodule, kernel_rows, solve_rows, transpose

FOUND = "FOUND"
PROVABLY_NONE = "PROVABLY-NONE"
NOT_FOUND = "NOT-FOUND"
COCOMMUTATIVE = "COCOMMUTATIVE"
EPSILON_UNIT = "EPSILON-UNIT"


def _identity(ring, m):
    return [[ring.one if r == c else ring.zero for c in range(m)] for r in range(m)]


def _matmul(ring, X, Y):
    k = len(Y)
    return [[ring.dot([X[r][j] for j in range(k)], [Y[j][c] for j in range(k)])
             for c in range(len(Y[0]))] for r in range(len(X))]


def _matvec(ring, M, v):
    return [ring.dot(row, v) for row in M]


class ModuleAlgebra:
    def __init__(self, alg, hopf, action):
        if alg.ring != hopf.ring:
            raise RingMismatch(f"algebra over {alg.ring}, Hopf algebra over {hopf.ring}")
        m, n = alg.rank, hopf.rank
        if len(action) != n or any(len(M) != m or any(len(r) != m for r in M) for M in action):
            raise DimensionMismatch(f"need {n} action matrices of size {m} x {m}")
        self.alg = alg
        self.hopf = hopf
        self.action = [[list(r) for r in M] for M in action]

    @property
    def ring(self):
        return self.alg.ring

    def act_matrix(self, h):
        """Matrix of the action of the element ``h`` of H."""
        R = self.ring
        m = self.alg.rank
        out = [[R.zero] * m for _ in range(m)]
        for i, c in enumerate(h):
            if c == R.zero:
                continue
            M = self.action[i]
            for r in range(m):
                for k in range(m):
                    if M[r][k] != R.zero:
                        out[r][k] = R.add(out[r][k], R.mul(c, M[r][k]))
        return out

    def act(self, h, a):
        return _matvec(self.ring, self.act_matrix(h), a)


def trivial_module_algebra(alg, hopf):
    """``h . a = eps(h) a``."""
    R = alg.ring
    m = alg.rank
    action = [[[R.mul(hopf.counit[i], x) for x in row] for row in _identity(R, m)]
              for i in range(hopf.rank)]
    return ModuleAlgebra(alg, hopf, action)


def verify_module_algebra(ma):
    A, H, R = ma.alg, ma.hopf, ma.ring
    m, n = A.rank, H.rank
    checks, violations = {}, []
    for name, rep in (("algebra", verify_algebra(A)), ("hopf", verify_hopf(H))):
        violations.extend(f"{name}: {v}" for v in rep.violations)
    if H.unit is None:
        violations.append("H has no unit, so the action cannot be unital")
    elif ma.act_matrix(H.unit) != _identity(R, m):
        violations.append("1_H does not act as the identity")
    checks["module-unit"] = 1
    for i, j in itertools.product(range(n), repeat=2):
        lhs = ma.act_matrix(H.multiply(H.basis(i), H.basis(j)))
        if lhs != _matmul(R, ma.action[i], ma.action[j]):
            violations.append(f"action not multiplicative on ({H.labels[i]}, {H.labels[j]})")
            break
    checks["module-mult"] = n * n
    B = [A.basis(k) for k in range(m)]
    deltas = [apply_delta(H, H.basis(i)) for i in range(n)]
    moved = [[ma.act(H.basis(p), B[k]) for k in range(m)] for p in range(n)]
    bad = False
    for i in range(n):
        for a, b in itertools.product(range(m), repeat=2):
            lhs = ma.act(H.basis(i), A.multiply(B[a], B[b]))
            rhs = A.zero()
            for p, q in itertools.product(range(n), repeat=2):
                c = deltas[i][p * n + q]
                if c != R.zero:
                    rhs = A.add(rhs, A.scale(c, A.multiply(moved[p][a], moved[q][b])))
            if lhs != rhs:
                violations.append(
                    f"h.(ab) != sum (h1.a)(h2.b) at h={H.labels[i]}, a={A.labels[a]}, b={A.labels[b]}")
                bad = True
                break
        if bad:
            break
    checks["module-algebra-mult"] = n * m * m
    for i in range(n):
        if ma.act(H.basis(i), A.one()) != A.scale(H.counit[i], A.one()):
            violations.append(f"h.1 != eps(h) 1 at h={H.labels[i]}")
            break
    checks["module-algebra-unit"] = n
    return VerificationReport("FAIL" if violations else "PASS", checks, violations)


@dataclass
class SmashProduct:
    base: ModuleAlgebra
    alg: StructureAlgebra
    alpha: list  # m x (m n) matrix of a # h -> a eps(h)

    def element(self, a, h):
        """``a # h`` for vectors ``a`` in A and ``h`` in H."""
        return outer(self.alg.ring, a, h)

    def act_on_A(self, w, x):
        """The A#H-module structure on A: ``(a # h) . x = a (h . x)``."""
        A, H = self.base.alg, self.base.hopf
        m, n = A.rank, H.rank
        out = A.zero()
        for i in range(m):
            for j in range(n):
                c = w[i * n + j]
                if c != A.ring.zero:
                    out = A.add(out, A.scale(c, A.multiply(A.basis(i), self.base.act(H.basis(j), x))))
        return out


def smash_product(ma):
    report = verify_module_algebra(ma)
    if not report.ok:
        raise HopfIntError(f"not a module algebra: {report.violations}")
    A, H, R = ma.alg, ma.hopf, ma.ring
    m, n = A.rank, H.rank
    N = m * n
    labels = [f"{a}#{h}" for a in A.labels for h in H.labels]
    deltas = [apply_delta(H, H.basis(j)) for j in range(n)]
    moved = [[ma.act(H.basis(p), A.basis(k)) for k in range(m)] for p in range(n)]
    mul = [[None] * N for _ in range(N)]
    for i, j, k, l in itertools.product(range(m), range(n), range(m), range(n)):
        out = [R.zero] * N
        for p, q in itertools.product(range(n), repeat=2):
            c = deltas[j][p * n + q]
            if c == R.zero:
                continue
            left = A.multiply(A.basis(i), moved[p][k])
            right = H.multiply(H.basis(q), H.basis(l))
            for idx, v in enumerate(outer(R, left, right)):
                if v != R.zero:
                    out[idx] = R.add(out[idx], R.mul(c, v))
        mul[i * n + j][k * n + l] = out
    unit = outer(R, A.one(), H.one())
    alg = StructureAlgebra(R, labels, mul, unit)
    check = verify_algebra(alg)
    if not check.ok:
        raise HopfIntError(f"smash product is not associative/unital: {check.violations}")
    alpha = [[R.mul(R.one if r == i else R.zero, H.counit[j]) for i in range(m) for j in range(n)]
             for r in range(m)]
    return SmashProduct(ma, alg, alpha)


# ---------------------------------------------------------------------------
# invariants


def smash_invariants(sp):
    """``{g : (1 # h) g = eps(h) g}``, cross-checked against ``r.ann(Ker alpha)``."""
    A, H = sp.base.alg, sp.base.hopf
    R = A.ring
    N = sp.alg.rank
    rows = []
    for j in range(H.rank):
        w = sp.element(A.one(), H.basis(j))
        L = sp.alg.left_matrix(w)
        eps = H.counit[j]
        for r in range(N):
            rows.append([R.sub(L[r][c], eps if r == c else R.zero) for c in range(N)])
    inv = Submodule(R, N, kernel_rows(R, rows, N))
    ker_alpha = kernel_rows(R, sp.alpha, N)
    ann_rows = []
    for x in ker_alpha:
        ann_rows.extend(sp.alg.left_matrix(x))
    ann = Submodule(R, N, kernel_rows(R, ann_rows, N) if ann_rows else _identity(R, N))
    if inv != ann:
        raise HopfIntError("H-invariants differ from the right annihilator of Ker(alpha)")
    return inv


def lemma_4_4_sides(ma):
    """Both sides of ``(A#H)^H = (1 # int_l)(A # 1)`` as submodules."""
    H = require_hopf(ma.hopf)
    if not antipode_bijective(H):
        raise HypothesisUnsatisfied("S bijective", "the antipode is not invertible")
    sp = smash_product(ma)
    A = ma.alg
    lhs = smash_invariants(sp)
    gens = []
    for t in left_integrals(H).generators:
        for k in range(A.rank):
            gens.append(sp.alg.multiply(sp.element(A.one(), t), sp.element(A.basis(k), H.one())))
    rhs = Submodule(A.ring, sp.alg.rank, gens)
    return lhs, rhs


def verify_lemma_4_4(ma):
    lhs, rhs = lemma_4_4_sides(ma)
    return lhs == rhs


# ---------------------------------------------------------------------------
# trace one


@dataclass
class TraceOneCertificate:
    t: list
    a: list
    beta: list  # (m n) x m matrix, column c is beta(a_c)
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())


@dataclass
class TraceOneResult:
    status: str
    certificate: TraceOneCertificate | None = None
    note: str = ""


def _combos(R, gens, zero):
    if not R.is_finite:
        return None
    elems = R.elements()
    if len(elems) ** len(gens) > ENUMERATION_LIMIT:
        return None

    def gen():
        for coeffs in itertools.product(elems, repeat=len(gens)):
            t = list(zero)
            for c, g in zip(coeffs, gens):
                if c != R.zero:
                    t = [R.add(x, R.mul(c, y)) for x, y in zip(t, g)]
            yield t

    return gen()


def _solve_in(R, M, target, basis=None):
    """Solve ``M x = target`` with ``x`` restricted to the span of ``basis`` columns."""
    m = len(target)
    if basis is None:
        return solve_rows(R, M, m, target)
    if not basis:
        return None if any(v != R.zero for v in target) else [R.zero] * m
    MB = _matmul(R, M, transpose(basis, m))
    y = solve_rows(R, MB, len(basis), target)
    if y is None:
        return None
    return [R.dot([b[i] for b in basis], y) for i in range(m)]


def build_trace_one_certificate(ma, t, a):
    sp = smash_product(ma)
    A, H = ma.alg, ma.hopf
    R = A.ring
    m = A.rank
    right = sp.element(a, H.one())
    cols = [sp.alg.multiply(sp.element(A.basis(c), t), right) for c in range(m)]
    beta = transpose(cols, sp.alg.rank)

    def beta_of(x):
        out = sp.alg.zero()
        for c, v in enumerate(x):
            if v != R.zero:
                out = sp.alg.add(out, sp.alg.scale(v, cols[c]))
        return out

    checks = {
        "t_left_integral": verify_integral(H, t),
        "t_dot_a_is_one": ma.act(t, a) == A.one(),
        "alpha_beta_is_identity": all(
            _matvec(R, sp.alpha, cols[c]) == A.basis(c) for c in range(m)),
        "beta_linear": all(
            beta_of(sp.act_on_A(sp.alg.basis(w), A.basis(x))) ==
            sp.alg.multiply(sp.alg.basis(w), cols[x])
            for w in range(sp.alg.rank) for x in range(m)),
    }
    return TraceOneCertificate(t, a, beta, checks)


def trace_one_search(ma, candidates=None, require_central=False):
    """Find a left integral ``t`` and ``a`` in A with ``t . a = 1``."""
    A, H = ma.alg, ma.hopf
    R = A.ring
    basis = center(A) if require_central else None
    if candidates is not None:
        pool, exhaustive = iter(candidates), False
        gens = list(candidates)
    else:
        gens = left_integrals(H).generators
        if not gens:
            return TraceOneResult(PROVABLY_NONE, note="integral module is zero")
        pool = _combos(R, gens, H.zero())
        exhaustive = pool is not None
        if pool is None:
            pool = iter(gens)
    for t in pool:
        a = _solve_in(R, ma.act_matrix(t), A.one(), basis)
        if a is not None:
            cert = build_trace_one_certificate(ma, t, a)
            if not cert.ok:
                raise HopfIntError(f"trace-one certificate failed re-verification: {cert.checks}")
            return TraceOneResult(FOUND, cert)
    if exhaustive:
        return TraceOneResult(PROVABLY_NONE, note="every integral combination was tried")
    return TraceOneResult(NOT_FOUND, note="only integral generators were tried")


def center(A):
    """Generators of the centre of A."""
    R = A.ring
    m = A.rank
    rows = []
    for i in range(m):
        L = A.right_matrix(A.basis(i))  # x -> x b_i
        Lb = A.left_matrix(A.basis(i))  # x -> b_i x
        rows.extend([R.sub(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(Lb, L))
    return kernel_rows(R, rows, m)


# ---------------------------------------------------------------------------
# smash separability


@dataclass
class SmashSeparabilityCertificate:
    t: list  # right integral used in the formula
    z: list
    omega: list
    relation_span: Submodule
    mode: str
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())


def relation_span(sp):
    """Span of ``x (a#1) (x) y - x (x) (a#1) y`` inside ``(A#H) (x) (A#H)``."""
    S = sp.alg
    R = S.ring
    A, H = sp.base.alg, sp.base.hopf
    N = S.rank
    gens = []
    for k in range(A.rank):
        ak = sp.element(A.basis(k), H.one())
        for x in range(N):
            xa = S.multiply(S.basis(x), ak)
            for y in range(N):
                ay = S.multiply(ak, S.basis(y))
                gens.append([R.sub(p, q) for p, q in zip(outer(R, xa, S.basis(y)),
                                                         outer(R, S.basis(x), ay))])
    return Submodule(R, N * N, gens)


def _omega(sp, t, z):
    """``sum (1 # S(t1)) (x) (z # t2)``."""
    A, H = sp.base.alg, sp.base.hopf
    R = A.ring
    n = H.rank
    d = apply_delta(H, t)
    N = sp.alg.rank
    out = [R.zero] * (N * N)
    for p in range(n):
        for q in range(n):
            c = d[p * n + q]
            if c == R.zero:
                continue
            left = sp.element(A.one(), H.antipode[p])
            right = sp.element(z, H.basis(q))
            out = [R.add(o, R.mul(c, v)) for o, v in zip(out, outer(R, left, right))]
    return out


def _find_right_integral_with_unit_counit(ma, candidates):
    A, H = ma.alg, ma.hopf
    R = A.ring
    if candidates is not None:
        pool = candidates
    else:
        gens = right_integrals(H).generators
        pool = _combos(R, gens, H.zero()) or gens
    last = None
    for t in pool:
        if not verify_integral(H, t, "right"):
            continue
        e = A.scale(apply_counit(H, t), A.one())
        z = solve_rows(R, A.left_matrix(e), A.rank, A.one())
        if z is not None and A.multiply(z, e) == A.one():
            return t, z
        last = t
    return last, None


def smash_separability(ma, mode, candidates=None):
    """Build and verify the separability element ``Omega`` of ``A # H`` over A."""
    H = require_hopf(ma.hopf)
    A = ma.alg
    R = A.ring
    if mode == COCOMMUTATIVE:
        if not is_cocommutative(H):
            raise NotCocommutative("Delta differs from its flip")
        res = trace_one_search(ma, candidates=candidates, require_central=True)
        if res.certificate is None:
            raise HypothesisUnsatisfied("t.z = 1", f"no central trace-one element ({res.status})")
        t_left, z = res.certificate.t, res.certificate.a
        t = apply_antipode(H, t_left)  # right integral since S^2 = id
        hypothesis = ma.act(apply_antipode(H, t), z) == A.one()
        hyp_name = "S(t).z = 1"
    elif mode == EPSILON_UNIT:
        t, z = _find_right_integral_with_unit_counit(ma, candidates)
        if z is None:
            raise HypothesisUnsatisfied("eps(t).z = 1", "no right integral with eps(t) invertible in A")
        hypothesis = A.multiply(A.scale(apply_counit(H, t), A.one()), z) == A.one()
        hyp_name = "eps(t).z = 1"
    else:
        raise ValueError(f"unknown mode {mode!r}")

    sp = smash_product(ma)
    S = sp.alg
    N = S.rank
    omega = _omega(sp, t, z)
    rel = relation_span(sp)
    one = S.one()
    checks = {
        hyp_name: hypothesis,
        "t_right_integral": verify_integral(H, t, "right"),
        "z_central": A.is_central(z),
        "mu_is_one": mu(S, omega) == one,
        "mu_kills_relations": all(not any(x != R.zero for x in mu(S, g)) for g in rel.generators),
        "centralizing_mod_relations": all(
            [R.sub(p, q) for p, q in zip(left_mul_tensor(S, S.basis(w), omega),
                                         right_mul_tensor(S, omega, S.basis(w)))] in rel
            for w in range(N)),
    }
    if mode == EPSILON_UNIT:
        checks["z_invariant"] = all(
            ma.act(H.basis(i), z) == A.scale(H.counit[i], z) for i in range(H.rank))
    cert = SmashSeparabilityCertificate(t, z, omega, rel, mode, checks)
    if not cert.ok:
        raise HopfIntError(f"smash separability certificate failed: {checks}")
    return cert


# ---------------------------------------------------------------------------
# skew semigroup rings


def skew_semigroup_ring(A, S, action):
    """``A * S = A # R[S]`` for a monoid S acting by unital algebra endomorphisms.

    ``action[s]`` is the matrix of ``a -> a^s`` in column convention.
    """
    R = A.ring
    m = A.rank
    if S.identity is None:
        raise NotAMonoid("skew semigroup rings need a monoid")
    if len(action) != S.order:
        raise DimensionMismatch("one action matrix per semigroup element is required")
    for s, M in enumerate(action):
        lab = S.labels[s]
        if _matvec(R, M, A.one()) != A.one():
            raise NotAnEndomorphismAction(f"{lab} does not fix 1_A")
        for a, b in itertools.product(range(m), repeat=2):
            lhs = _matvec(R, M, A.multiply(A.basis(a), A.basis(b)))
            rhs = A.multiply(_matvec(R, M, A.basis(a)), _matvec(R, M, A.basis(b)))
            if lhs != rhs:
                raise NotAnEndomorphismAction(f"{lab} is not multiplicative on ({A.labels[a]}, {A.labels[b]})")
    if action[S.identity] != _identity(R, m):
        raise NotAnEndomorphismAction("the identity of S does not act as the identity")
    for s, u in itertools.product(range(S.order), repeat=2):
        if action[S.mul(s, u)] != _matmul(R, action[s], action[u]):
            raise NotAnEndomorphismAction(f"action not compatible with {S.labels[s]}{S.labels[u]}")
    H = semigroup_bialgebra(R, S)
    return smash_product(ModuleAlgebra(A, H, action))


@dataclass
class SkewInvariants:
    invariants: Submodule
    cyclic_ideal: Submodule
    generator: list
    equal: bool


def verify_thm_4_2(sp, S):
    """S-invariants of ``A * S`` equal the right ideal ``(1 * t)(A * S)``."""
    from .semigroups import semigroup_integrals

    A = sp.base.alg
    R = A.ring
    inv = smash_invariants(sp)
    t = semigroup_integrals(R, S, "left").generator
    gen = sp.element(A.one(), t)
    ideal = Submodule(R, sp.alg.rank, [sp.alg.multiply(gen, sp.alg.basis(w))
                                       for w in range(sp.alg.rank)])
    return SkewInvariants(inv, ideal, gen, inv == ideal)


def format_smash(sp, v):
    return format_vector(sp.alg.ring, sp.alg.labels, v)


def dual_numbers(ring):
    """``R[x]/(x^2)`` with basis 1, x."""
    z, o = ring.zero, ring.one
    mul = [[[o, z], [z, o]], [[z, o], [z, z]]]
    return StructureAlgebra(ring, ["1", "x"], mul, [o, z])


def sign_action(ring, hopf):
    """C2 = {1, g} acting on ``R[x]/(x^2)`` by ``x -> -x``."""
    z, o = ring.zero, ring.one
    return ModuleAlgebra(dual_numbers(ring), hopf,
                         [[[o, z], [z, o]], [[o, z], [z, ring.neg(o)]]])


def split_algebra(ring, m):
    """``R^m`` with componentwise multiplication (orthogonal idempotents)."""
    z, o = ring.zero, ring.one

    def e(k):
        return [o if i == k else z for i in range(m)]

    mul = [[e(i) if i == j else [z] * m for j in range(m)] for i in range(m)]
    return StructureAlgebra(ring, [f"e{i}" for i in range(m)], mul, [o] * m)


def swap_action(ring, hopf):
    """C2 acting on ``R x R`` by swapping the two idempotents."""
    z, o = ring.zero, ring.one
    return ModuleAlgebra(split_algebra(ring, 2), hopf, [[[o, z], [z, o]], [[z, o], [o, z]]])
