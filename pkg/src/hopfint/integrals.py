"""Integrals, Casimir elements, separability and normal quotients.

A left integral is a ``t`` with ``h t = eps(h) t`` for every ``h``: the
eps-invariants of the left regular module.  Integrals with ``eps(t)`` a unit
give separability idempotents ``(1 (x) S) Delta(t)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import (
    HopfAlgebra,
    apply_antipode,
    apply_counit,
    apply_delta,
    embed_component,
    format_vector,
    left_mul_tensor,
    map_tensor,
    mu,
    outer,
    project_component,
    require_hopf,
    right_mul_tensor,
    verify_hopf,
)
from .errors import (
    DimensionMismatch,
    HopfIntError,
    InducedStructureIllDefined,
    NotAnIntegral,
    NotASubbialgebra,
    NotCentralizing,
    NotNormal,
    UnsupportedRingTier,
)
from .linalg import Submodule, echelon, kernel_rows, solve_rows, transpose
from .rings import FIELD, PID, Product, xgcd

LEFT, RIGHT = "left", "right"
ENUMERATION_LIMIT = 10**6

FOUND = "FOUND"
NOT_SEPARABLE = "NOT-SEPARABLE"
NOT_FOUND = "NOT-FOUND"


def _check_side(side):
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def _check_vec(v, n, what="element"):
    if len(v) != n:
        raise DimensionMismatch(f"{what} has length {len(v)}, expected {n}")


@dataclass
class IntegralSpace:
    side: str
    module: Submodule
    labels: list

    @property
    def generators(self):
        return [list(r) for r in self.module.canonical]

    def is_zero(self):
        return self.module.is_zero()

    def generators_labeled(self):
        return [format_vector(self.module.ring, self.labels, g) for g in self.generators]


def epsilon_invariants(side, action, counit, ring):
    """``{m : rho(e_i) m = eps(e_i) m for all i}`` for action matrices ``rho(e_i)``.

    ``side`` only names the module; the action matrices already encode it.
    """
    _check_side(side)
    if len(action) != len(counit):
        raise DimensionMismatch("one action matrix per basis element of H is required")
    if not action:
        raise DimensionMismatch("empty action")
    dim = len(action[0])
    rows = []
    for M, c in zip(action, counit):
        if len(M) != dim or any(len(r) != dim for r in M):
            raise DimensionMismatch("action matrices must be square of equal size")
        for r in range(dim):
            rows.append([ring.sub(M[r][k], c if k == r else ring.zero) for k in range(dim)])
    return Submodule(ring, dim, kernel_rows(ring, rows, dim))


def integrals(h, side=LEFT):
    """Left or right integrals of a bialgebra or Hopf algebra."""
    _check_side(side)
    n = h.rank
    action, counit = [], []
    for i in range(n):
        b = h.basis(i)
        action.append(h.left_matrix(b) if side == LEFT else h.right_matrix(b))
        counit.append(apply_counit(h, b))
    raw = epsilon_invariants(side, action, counit, h.ring)
    # restrict to the support of H (only matters over product rings)
    gens = [[h.ring.mul(h.mask(i), x) for i, x in enumerate(g)] for g in raw.generators]
    return IntegralSpace(side, Submodule(h.ring, n, gens), h.labels)


def left_integrals(h):
    return integrals(h, LEFT)


def right_integrals(h):
    return integrals(h, RIGHT)


def verify_integral(h, t, side=LEFT):
    """Exact check of the integral identity on every basis element."""
    _check_side(side)
    _check_vec(t, h.rank)
    for i in range(h.rank):
        b = h.basis(i)
        prod = h.multiply(b, t) if side == LEFT else h.multiply(t, b)
        if prod != h.scale(apply_counit(h, b), t):
            return False
    return True


# ---------------------------------------------------------------------------
# Casimir correspondence


def centralizing_check(a, u):
    """``h u == u h`` in ``A (x) A`` for every basis ``h``."""
    _check_vec(u, a.rank * a.rank, "tensor")
    return all(
        left_mul_tensor(a, a.basis(i), u) == right_mul_tensor(a, u, a.basis(i))
        for i in range(a.rank)
    )


def casimir_il(h, t):
    """``(1 (x) S) Delta(t)`` for a left integral ``t``."""
    require_hopf(h)
    if not verify_integral(h, t, LEFT):
        raise NotAnIntegral("casimir_il needs a left integral")
    n = h.rank
    return map_tensor(h.ring, apply_delta(h, t), n, n, h.basis, lambda j: h.antipode[j])


def casimir_ir(h, t):
    """``(S (x) 1) Delta(t)`` for a right integral ``t``."""
    require_hopf(h)
    if not verify_integral(h, t, RIGHT):
        raise NotAnIntegral("casimir_ir needs a right integral")
    n = h.rank
    return map_tensor(h.ring, apply_delta(h, t), n, n, lambda j: h.antipode[j], h.basis)


def _contract(h, u, leg):
    n = h.rank
    R = h.ring
    out = h.zero()
    for j in range(n):
        for k in range(n):
            c = u[j * n + k]
            if c == R.zero:
                continue
            keep, drop = (j, k) if leg == 1 else (k, j)
            out = h.add(out, h.scale(R.mul(c, h.counit[drop]), h.basis(keep)))
    return out


def casimir_pl(h, u):
    """``(1 (x) eps)(u)``, a left integral for centralizing ``u``."""
    if not centralizing_check(h, u):
        raise NotCentralizing("casimir_pl needs an H-centralizing tensor")
    return _contract(h, u, 1)


def casimir_pr(h, u):
    """``(eps (x) 1)(u)``, a right integral for centralizing ``u``."""
    if not centralizing_check(h, u):
        raise NotCentralizing("casimir_pr needs an H-centralizing tensor")
    return _contract(h, u, 2)


# ---------------------------------------------------------------------------
# separability


@dataclass
class SeparabilityCertificate:
    element: list
    origin: str  # FROM-INTEGRAL or GENERIC-SOLVE
    integral: list | None
    centralizing: bool
    mu_is_one: bool

    def recheck(self, a):
        return centralizing_check(a, self.element) and mu(a, self.element) == a.one()

    def to_record(self, a):
        n = a.rank
        terms = {}
        for j in range(n):
            for k in range(n):
                c = self.element[j * n + k]
                if c != a.ring.zero:
                    terms[f"{a.labels[j]}@{a.labels[k]}"] = a.ring.format_element(c)
        rec = {
            "origin": self.origin,
            "element": terms,
            "centralizing": self.centralizing,
            "mu_is_one": self.mu_is_one,
        }
        if self.integral is not None:
            rec["integral"] = format_vector(a.ring, a.labels, self.integral)
        return rec


@dataclass
class SeparabilityResult:
    status: str
    certificate: SeparabilityCertificate | None = None
    note: str = ""

    @property
    def found(self):
        return self.certificate is not None


def _certificate_from_integral(h, t):
    R = h.ring
    t = h.scale(R.inv(apply_counit(h, t)), t)
    omega = casimir_il(h, t)
    cert = SeparabilityCertificate(omega, "FROM-INTEGRAL", t,
                                   centralizing_check(h, omega), mu(h, omega) == h.one())
    if not (cert.centralizing and cert.mu_is_one):
        raise HopfIntError("separability element failed re-verification")
    return cert


def _search_integral(h, gens):
    """Some R-combination of ``gens`` with unit counit, or a status string."""
    R = h.ring
    if not gens:
        return NOT_SEPARABLE
    for g in gens:
        if R.is_unit(apply_counit(h, g)):
            return g
    eps = [apply_counit(h, g) for g in gens]
    if R.tier == FIELD:
        return NOT_SEPARABLE  # every counit is zero, so every combination's is
    if R.tier == PID:
        # unit counit is reachable iff the counits generate the unit ideal
        g, coeffs = 0, []
        for e in eps:
            g, s, t = xgcd(g, e)
            coeffs = [s * c for c in coeffs] + [t]
        if g != 1:
            return NOT_SEPARABLE
        t = h.zero()
        for c, v in zip(coeffs, gens):
            t = h.add(t, h.scale(c, v))
        return t
    if not R.is_finite:
        return NOT_FOUND
    elems = R.elements()
    if len(elems) ** len(gens) > ENUMERATION_LIMIT:
        return NOT_FOUND
    for coeffs in itertools.product(elems, repeat=len(gens)):
        if R.is_unit(R.dot(coeffs, eps)):
            t = h.zero()
            for c, g in zip(coeffs, gens):
                t = h.add(t, h.scale(c, g))
            return t
    return NOT_SEPARABLE


def separability_from_integral(h, candidate=None):
    """Separability idempotent ``(1 (x) S) Delta(t)`` from an integral with unit counit."""
    require_hopf(h)
    R = h.ring
    if candidate is not None:
        t = [R.coerce(x) for x in candidate]
        _check_vec(t, h.rank)
        if not verify_integral(h, t, LEFT):
            raise NotAnIntegral("supplied candidate is not a left integral")
        if not R.is_unit(apply_counit(h, t)):
            return SeparabilityResult(NOT_FOUND, note="candidate has non-unit counit")
        return SeparabilityResult(FOUND, _certificate_from_integral(h, t))

    if isinstance(R, Product):
        parts = []
        for k in range(len(R.factors)):
            sub, coords = project_component(h, k)
            res = separability_from_integral(sub)
            if not res.found:
                return SeparabilityResult(res.status, note=f"factor {k}: {res.note}".strip())
            parts.append(embed_component(R, h.rank, k, coords, res.certificate.integral))
        t = h.zero()
        for p in parts:
            t = h.add(t, p)
        return SeparabilityResult(FOUND, _certificate_from_integral(h, t))

    gens = left_integrals(h).generators
    found = _search_integral(h, gens)
    if isinstance(found, str):
        note = "integral module is zero" if not gens else "no integral with unit counit"
        return SeparabilityResult(found, note=note)
    return SeparabilityResult(FOUND, _certificate_from_integral(h, found))


def _tensor_mask(a):
    n = a.rank
    return [a.ring.mul(a.mask(j), a.mask(k)) for j in range(n) for k in range(n)]


def separability_generic(a):
    """Solve ``{u in A (x) A : u centralizing, mu(u) = 1}`` directly."""
    n = a.rank
    R = a.ring
    if a.unit is None:
        return SeparabilityResult(NOT_SEPARABLE, note="algebra has no unit")
    B = [a.basis(i) for i in range(n)]
    P = [[a.multiply(B[i], B[j]) for j in range(n)] for i in range(n)]
    N = n * n
    columns = []
    for j in range(n):
        for k in range(n):
            col = []
            for i in range(n):
                # (b_i e_j) (x) e_k - e_j (x) (e_k b_i)
                col.extend(R.sub(x, y) for x, y in zip(outer(R, P[i][j], B[k]),
                                                      outer(R, B[j], P[k][i])))
            col.extend(P[j][k])
            columns.append(col)
    rows = transpose(columns, len(columns[0]))
    rhs = [R.zero] * (n * N) + a.one()
    u = solve_rows(R, rows, N, rhs)
    if u is None:
        return SeparabilityResult(NOT_SEPARABLE, note="affine system has no solution")
    u = [R.mul(m, x) for m, x in zip(_tensor_mask(a), u)]
    cert = SeparabilityCertificate(u, "GENERIC-SOLVE", None,
                                   centralizing_check(a, u), mu(a, u) == a.one())
    if not (cert.centralizing and cert.mu_is_one):
        raise HopfIntError("generic separability solution failed re-verification")
    return SeparabilityResult(FOUND, cert)


# ---------------------------------------------------------------------------
# Hopf subalgebras and quotients (fields only)


def _require_field(ring, what):
    if ring.tier != FIELD:
        raise UnsupportedRingTier(f"{what} is implemented over fields only, not {ring}")


def _tensor_span(K):
    gens = [outer(K.ring, x, y) for x in K.generators for y in K.generators]
    return Submodule(K.ring, K.ambient_rank ** 2, gens)


def check_hopf_subalgebra(h, K):
    """Raise NotASubbialgebra naming the first closure property that fails."""
    require_hopf(h)
    _require_field(h.ring, "Hopf subalgebra checks")
    gens = [list(g) for g in K.canonical]
    if h.one() not in K:
        raise NotASubbialgebra("unit", "1 is not in K")
    for x in gens:
        for y in gens:
            if h.multiply(x, y) not in K:
                raise NotASubbialgebra("multiplication", "K K is not inside K")
    KK = _tensor_span(K)
    for x in gens:
        if apply_delta(h, x) not in KK:
            raise NotASubbialgebra("comultiplication", "Delta(K) is not inside K (x) K")
    for x in gens:
        if apply_antipode(h, x) not in K:
            raise NotASubbialgebra("antipode", "S(K) is not inside K")
    return gens


def _adjoint(h, i, k, side):
    n = h.rank
    d = apply_delta(h, h.basis(i))
    out = h.zero()
    for a in range(n):
        for b in range(n):
            c = d[a * n + b]
            if c == h.ring.zero:
                continue
            if side == LEFT:  # h1 k S(h2)
                term = h.multiply(h.multiply(h.basis(a), k), h.antipode[b])
            else:  # S(h1) k h2
                term = h.multiply(h.multiply(h.antipode[a], k), h.basis(b))
            out = h.add(out, h.scale(c, term))
    return out


def normal_subalgebra_check(h, K):
    """Closed under both adjoint actions (after the Hopf subalgebra checks)."""
    gens = check_hopf_subalgebra(h, K)
    return all(
        _adjoint(h, i, k, side) in K
        for side in (LEFT, RIGHT)
        for i in range(h.rank)
        for k in gens
    )


def _coordinates(ring, gens, v):
    y = solve_rows(ring, transpose(gens, len(v)), len(gens), v)
    if y is None:
        raise HopfIntError("vector is not in the span")
    return y


def hopf_subalgebra(h, K, prefix="k"):
    """K as a Hopf algebra in its own canonical basis."""
    gens = check_hopf_subalgebra(h, K)
    R = h.ring
    r = len(gens)

    def coords(v):
        return _coordinates(R, gens, v)

    labels = [f"{prefix}{i}" for i in range(r)]
    mul = [[coords(h.multiply(x, y)) for y in gens] for x in gens]
    unit = coords(h.one())
    KK = [outer(R, x, y) for x in gens for y in gens]
    comul = []
    for x in gens:
        c = coords_in(R, KK, apply_delta(h, x))
        comul.append([c[j * r:(j + 1) * r] for j in range(r)])
    counit = [apply_counit(h, x) for x in gens]
    antipode = [coords(apply_antipode(h, x)) for x in gens]
    sub = HopfAlgebra(R, labels, mul, unit, comul, counit, antipode)
    report = verify_hopf(sub)
    if not report.ok:
        raise HopfIntError(f"restricted structure is not a Hopf algebra: {report.violations}")
    return sub, gens


def coords_in(ring, gens, v):
    return _coordinates(ring, gens, v)


@dataclass
class HopfQuotient:
    hopf: HopfAlgebra
    k_plus: Submodule
    ideal: Submodule
    complement: list  # indices of H basis vectors spanning a complement of the ideal
    two_sided: bool


def hopf_quotient(h, K):
    """``H / K^+ H`` with the induced Hopf structure on a coordinate complement."""
    require_hopf(h)
    R = h.ring
    _require_field(R, "hopf_quotient")
    if not normal_subalgebra_check(h, K):
        raise NotNormal("K is not closed under the adjoint actions")
    n = h.rank
    gens = [list(g) for g in K.canonical]
    eps_row = [[apply_counit(h, g) for g in gens]]
    combos = kernel_rows(R, eps_row, len(gens))
    kplus = []
    for c in combos:
        v = h.zero()
        for coeff, g in zip(c, gens):
            v = h.add(v, h.scale(coeff, g))
        kplus.append(v)
    Kp = Submodule(R, n, kplus)
    B = [h.basis(i) for i in range(n)]
    right_ideal = Submodule(R, n, [h.multiply(k, b) for k in kplus for b in B])
    left_ideal = Submodule(R, n, [h.multiply(b, k) for k in kplus for b in B])
    two_sided = right_ideal == left_ideal
    if not two_sided:
        raise NotNormal("K^+ H differs from H K^+")
    canon, pivots = echelon(R, [list(r) for r in right_ideal.canonical], n)
    comp = [c for c in range(n) if c not in pivots]

    def reduce(v):
        v = list(v)
        for row, p in zip(canon, pivots):
            if v[p] != R.zero:
                q = R.mul(v[p], R.inv(row[p]))
                v = [R.sub(a, R.mul(q, b)) for a, b in zip(v, row)]
        return v

    def project(v):
        return [reduce(v)[c] for c in comp]

    q = len(comp)
    J = [list(r) for r in right_ideal.canonical]
    for j in J:
        for b in B:
            if any(x != R.zero for x in project(h.multiply(j, b))) or any(
                x != R.zero for x in project(h.multiply(b, j))
            ):
                raise InducedStructureIllDefined("K^+ H is not a two-sided ideal")
        if apply_counit(h, j) != R.zero:
            raise InducedStructureIllDefined("counit does not vanish on K^+ H")
        if any(x != R.zero for x in project(apply_antipode(h, j))):
            raise InducedStructureIllDefined("S(K^+ H) is not inside K^+ H")

    def project_tensor(u):
        out = []
        rows = [project(u[a * n:(a + 1) * n]) for a in range(n)]
        # rows[a][c] = coefficient of e_a (x) comp_c after projecting the right leg
        for c1 in range(q):
            for c2 in range(q):
                left = [rows[a][c2] for a in range(n)]
                out.append(project(left)[c1])
        return out

    for j in J:
        if any(x != R.zero for x in project_tensor(apply_delta(h, j))):
            raise InducedStructureIllDefined("Delta(K^+ H) is not inside J (x) H + H (x) J")

    E = [h.basis(c) for c in comp]
    labels = [h.labels[c] for c in comp]
    mul = [[project(h.multiply(x, y)) for y in E] for x in E]
    unit = project(h.one())
    comul = []
    for x in E:
        flat = project_tensor(apply_delta(h, x))
        comul.append([flat[a * q:(a + 1) * q] for a in range(q)])
    counit = [apply_counit(h, x) for x in E]
    antipode = [project(apply_antipode(h, x)) for x in E]
    quotient = HopfAlgebra(R, labels, mul, unit, comul, counit, antipode)
    report = verify_hopf(quotient)
    if not report.ok:
        raise InducedStructureIllDefined(f"quotient fails the axioms: {report.violations}")
    return HopfQuotient(quotient, Kp, right_ideal, comp, two_sided)


def permutation_isomorphism(h1, h2):
    """A basis permutation carrying every structure tensor of h1 onto h2, or None."""
    if h1.ring != h2.ring or h1.rank != h2.rank:
        return None
    n = h1.rank

    def permute(v, p):
        out = [None] * n
        for i, x in enumerate(v):
            out[p[i]] = x
        return out

    for p in itertools.permutations(range(n)):
        ok = permute(h1.unit, p) == h2.unit and all(
            h1.counit[i] == h2.counit[p[i]] for i in range(n))
        for i in range(n):
            if not ok:
                break
            if permute(h1.antipode[i], p) != h2.antipode[p[i]]:
                ok = False
            for j in range(n):
                if permute(h1.mul[i][j], p) != h2.mul[p[i]][p[j]]:
                    ok = False
                    break
                for k in range(n):
                    if h1.comul[i][j][k] != h2.comul[p[i]][p[j]][p[k]]:
                        ok = False
                        break
        if ok:
            return list(p)
    return None


@dataclass
class ExtensionSeparability:
    """Separability of H assembled from K and H / K^+ H."""

    sub_integral: list
    quotient_integral: list
    product_integral: list
    result: SeparabilityResult
    checks: dict = field(default_factory=dict)


def separability_via_normal_subalgebra(h, K):
    """If K and the quotient are separable, ``s t`` is a normalized left integral of H."""
    sub, gens = hopf_subalgebra(h, K)
    quotient = hopf_quotient(h, K)
    rk = separability_from_integral(sub)
    rq = separability_from_integral(quotient.hopf)
    if not (rk.found and rq.found):
        return None
    R = h.ring
    t = h.zero()
    for c, g in zip(rk.certificate.integral, gens):
        t = h.add(t, h.scale(c, g))
    s = h.zero()
    for c, idx in zip(rq.certificate.integral, quotient.complement):
        s = h.add(s, h.scale(c, h.basis(idx)))
    st = h.multiply(s, t)
    checks = {
        "t_left_integral_in_H_for_K": all(
            h.multiply(k, t) == h.scale(apply_counit(h, k), t) for k in gens),
        "st_left_integral": verify_integral(h, st, LEFT),
        "eps_st_is_one": apply_counit(h, st) == R.one,
    }
    result = separability_from_integral(h, candidate=st)
    return ExtensionSeparability(t, s, st, result, checks)
