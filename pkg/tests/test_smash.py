import pytest

from hopfint.algebra import (
    apply_counit,
    cyclic_group_algebra,
    semigroup_bialgebra,
    verify_algebra,
)
from hopfint.errors import (
    HopfIntError,
    HypothesisUnsatisfied,
    NotAMonoid,
    NotAnEndomorphismAction,
    NotCocommutative,
)
from hopfint.integrals import left_integrals, separability_generic
from hopfint.linalg import Submodule
from hopfint.rings import parse_ring
from hopfint.semigroups import (
    adjoin_identity,
    cyclic_group,
    rectangular_band,
    zmod_mul,
)
from hopfint.smash import (
    COCOMMUTATIVE,
    EPSILON_UNIT,
    FOUND,
    PROVABLY_NONE,
    ModuleAlgebra,
    build_trace_one_certificate,
    dual_numbers,
    relation_span,
    sign_action,
    skew_semigroup_ring,
    smash_invariants,
    smash_product,
    smash_separability,
    split_algebra,
    swap_action,
    trace_one_search,
    trivial_module_algebra,
    verify_lemma_4_4,
    verify_module_algebra,
    verify_thm_4_2,
)

Q = parse_ring("Q")
GF2 = parse_ring("GF(2)")
GF3 = parse_ring("GF(3)")
Z2 = parse_ring("Z/2")


def ground(ring):
    return cyclic_group_algebra(ring, 1).as_algebra()


def qc2():
    return cyclic_group_algebra(Q, 2)


def test_module_algebra_examples():
    assert verify_module_algebra(trivial_module_algebra(dual_numbers(Q), qc2())).ok
    assert verify_module_algebra(sign_action(Q, qc2())).ok
    o, z = Q.one, Q.zero
    shift = ModuleAlgebra(dual_numbers(Q), qc2(), [[[o, z], [z, o]], [[o, o], [z, o]]])
    rep = verify_module_algebra(shift)
    assert not rep.ok and rep.violations


def test_smash_product_examples():
    h = qc2()
    sp = smash_product(trivial_module_algebra(ground(Q), h))
    assert sp.alg.rank == 2 and sp.alg.mul == h.mul
    sp = smash_product(sign_action(Q, h))
    assert sp.alg.rank == 4 and verify_algebra(sp.alg).ok
    assert sp.alg.labels == ["1#1", "1#g", "x#1", "x#g"]


def test_smash_multiplication_formula():
    # (x#g)(x#1) = x (g.x) # g = -x^2 # g = 0 and (1#g)(x#1) = -x#g
    sp = smash_product(sign_action(Q, qc2()))
    A = sp.base.alg
    one, x = A.basis(0), A.basis(1)
    h = qc2()
    g = h.basis(1)
    lhs = sp.alg.multiply(sp.element(one, g), sp.element(x, h.one()))
    assert lhs == sp.element(A.scale(Q.coerce(-1), x), g)


def test_invariants_examples():
    h = qc2()
    sp = smash_product(trivial_module_algebra(ground(Q), h))
    assert smash_invariants(sp) == Submodule(Q, 2, [[Q.one, Q.one]])
    sp = smash_product(sign_action(Q, h))
    assert smash_invariants(sp).dimension() == 2


def test_invariant_factorization_instances():
    assert verify_lemma_4_4(sign_action(Q, qc2()))
    for p in (2, 3, 5):
        F = parse_ring(f"GF({p})")
        assert verify_lemma_4_4(trivial_module_algebra(ground(F), cyclic_group_algebra(F, 3)))
    assert verify_lemma_4_4(swap_action(GF3, cyclic_group_algebra(GF3, 2)))
    assert verify_lemma_4_4(swap_action(parse_ring("Z/4"), cyclic_group_algebra(parse_ring("Z/4"), 2)))


def test_invariant_factorization_needs_an_antipode():
    H = semigroup_bialgebra(Z2, zmod_mul(3))
    with pytest.raises(HopfIntError):
        verify_lemma_4_4(trivial_module_algebra(ground(Z2), H))


def test_trace_one_examples():
    res = trace_one_search(trivial_module_algebra(ground(Q), qc2()))
    assert res.status == FOUND
    c = res.certificate
    assert c.ok and apply_counit(qc2(), c.t) * c.a[0] == 1
    H = semigroup_bialgebra(Z2, zmod_mul(3))
    res = trace_one_search(trivial_module_algebra(ground(Z2), H))
    assert res.status == FOUND and res.certificate.t == [1, 0, 0] and res.certificate.ok
    res = trace_one_search(trivial_module_algebra(ground(GF2), cyclic_group_algebra(GF2, 2)))
    assert res.status == PROVABLY_NONE and res.certificate is None


def test_trace_one_certificate_checks():
    ma = sign_action(Q, qc2())
    half = Q.parse_element("1/2")
    cert = build_trace_one_certificate(ma, [half, half], ma.alg.one())
    assert cert.ok
    bad = build_trace_one_certificate(ma, [half, half], ma.alg.basis(1))
    assert not bad.checks["t_dot_a_is_one"]


def test_smash_separability_instances():
    half = Q.parse_element("1/2")
    for ma in (trivial_module_algebra(ground(Q), qc2()), sign_action(Q, qc2())):
        for mode in (COCOMMUTATIVE, EPSILON_UNIT):
            cert = smash_separability(ma, mode)
            assert cert.ok
    sp = smash_product(trivial_module_algebra(ground(Q), qc2()))
    cert = smash_separability(sp.base, COCOMMUTATIVE)
    # Omega = 1/2 (1#1 (x) 1#1 + 1#g (x) 1#g)
    assert cert.omega == [half, 0, 0, half]
    assert relation_span(sp).is_zero()


def test_smash_separability_failures():
    F = GF3
    ma = trivial_module_algebra(ground(F), cyclic_group_algebra(F, 3))
    for mode in (COCOMMUTATIVE, EPSILON_UNIT):
        with pytest.raises(HypothesisUnsatisfied):
            smash_separability(ma, mode)
    with pytest.raises(ValueError):
        smash_separability(sign_action(Q, qc2()), "SOMETHING")


def test_cocommutative_mode_checks_cocommutativity():
    h = qc2()
    o, z = Q.one, Q.zero
    twisted = type(h)(Q, h.labels, h.mul, h.unit,
                      [[[o, z], [z, z]], [[z, o], [z, z]]], h.counit, h.antipode)
    ma = ModuleAlgebra(ground(Q), twisted, [[[o]], [[o]]])
    with pytest.raises(NotCocommutative):
        smash_separability(ma, COCOMMUTATIVE)


def test_bialgebra_composite():
    H = semigroup_bialgebra(Z2, zmod_mul(3))
    assert trace_one_search(trivial_module_algebra(ground(Z2), H)).certificate.ok
    assert not separability_generic(H).found


# skew semigroup rings ---------------------------------------------------------


def _identity_action(ring, m, order):
    eye = [[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)]
    return [eye] * order


def test_skew_ring_examples():
    A = dual_numbers(Q)
    o, z = Q.one, Q.zero
    sp = skew_semigroup_ring(A, cyclic_group(2), [[[o, z], [z, o]], [[o, z], [z, -o]]])
    assert verify_thm_4_2(sp, cyclic_group(2)).equal
    band = adjoin_identity(rectangular_band(2, 2))
    sp = skew_semigroup_ring(ground(Q), band, _identity_action(Q, 1, band.order))
    res = verify_thm_4_2(sp, band)
    assert res.equal and res.invariants.is_zero()
    M = zmod_mul(3)
    sp = skew_semigroup_ring(ground(GF2), M, _identity_action(GF2, 1, 3))
    res = verify_thm_4_2(sp, M)
    assert res.equal and res.generator == [1, 0, 0]


def test_skew_ring_rejects_bad_actions():
    A = dual_numbers(Q)
    o, z = Q.one, Q.zero
    with pytest.raises(NotAnEndomorphismAction):
        skew_semigroup_ring(A, cyclic_group(2), [[[o, z], [z, o]], [[o, o], [z, o]]])
    with pytest.raises(NotAMonoid):
        skew_semigroup_ring(A, rectangular_band(2, 2), _identity_action(Q, 2, 4))


def test_smash_products_are_associative():
    cases = [
        sign_action(Q, qc2()),
        swap_action(GF3, cyclic_group_algebra(GF3, 2)),
        trivial_module_algebra(split_algebra(Z2, 2), semigroup_bialgebra(Z2, zmod_mul(3))),
        trivial_module_algebra(dual_numbers(GF3), cyclic_group_algebra(GF3, 3)),
    ]
    for ma in cases:
        assert verify_algebra(smash_product(ma).alg).ok


def test_invariants_nonzero_when_integrals_exist():
    ma = swap_action(GF3, cyclic_group_algebra(GF3, 2))
    inv = smash_invariants(smash_product(ma))
    assert not inv.is_zero()
    assert left_integrals(ma.hopf).module.dimension() == 1
