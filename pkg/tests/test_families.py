import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfint.errors import InvalidModulus, NotIdempotent, TruncationOverflow
from hopfint.families import (
    counterexample_4_6,
    family_names,
    product_with_polynomial_factor,
    projective_family,
    run_family,
    truncated_quotient_hopf,
    verify_integral_family,
    verify_truncated_axioms,
)
from hopfint.rings import parse_ring


def test_quotient_model_examples():
    m = truncated_quotient_hopf(parse_ring("Z/4"), 2, 8)
    assert m.scale(2, m.monomial(3)) == m.constant(0)
    assert m.monomial(1)[1] == 1
    assert m.element([3, 3, 2]) == m.element([3, 1, 0])
    m6 = truncated_quotient_hopf(parse_ring("Z/6"), 2, 8)
    assert m6.element([5, 5, 4, 3]) == [5, 1, 0, 1] + [0] * 5
    with pytest.raises(InvalidModulus):
        truncated_quotient_hopf(parse_ring("Q"), 2, 8)
    with pytest.raises(InvalidModulus):
        truncated_quotient_hopf(parse_ring("Z/4"), 0, 8)


def test_truncated_axioms():
    for ring, n in [("Z/4", 2), ("Z/6", 2), ("Z/6", 3), ("Z", 2), ("Z/9", 3)]:
        assert verify_truncated_axioms(truncated_quotient_hopf(parse_ring(ring), n, 12))


def test_integral_family_examples():
    for ring, n in [("Z/4", 2), ("Z/6", 2), ("Z/6", 3)]:
        assert verify_integral_family(truncated_quotient_hopf(parse_ring(ring), n, 32))
    m = truncated_quotient_hopf(parse_ring("Z/4"), 2, 32)
    assert not verify_integral_family(m, t=m.monomial(1))


def test_overflow_is_raised_not_dropped():
    m = truncated_quotient_hopf(parse_ring("Z"), 2, 4)
    with pytest.raises(TruncationOverflow):
        m.multiply(m.monomial(3), m.monomial(2))
    # 2 X^5 vanishes in the quotient, so this truncation loses nothing
    m4 = truncated_quotient_hopf(parse_ring("Z/4"), 2, 4)
    assert m4.multiply(m4.element([0, 0, 2]), m4.monomial(3)) == m4.constant(0)


@pytest.mark.parametrize("ring,n", [("Z/4", 2), ("Z/6", 3), ("Z/12", 6)])
def test_integral_outcome_independent_of_degree(ring, n):
    R = parse_ring(ring)
    outcomes = {d: verify_integral_family(truncated_quotient_hopf(R, n, d)) for d in (8, 16, 32)}
    assert len(set(outcomes.values())) == 1 and outcomes[8]


def test_projective_family_examples():
    _, w = projective_family(parse_ring("Z/6"), 3, 12)
    assert all(w.checks.values())
    _, w = projective_family(parse_ring("Q x Q"), "(1,0)", 12)
    assert all(w.checks.values())
    F = parse_ring("GF(5)")
    for e in F.elements():
        with pytest.raises(NotIdempotent):
            projective_family(F, e, 4)


def test_counterexample_examples():
    for ring, e in [("Q x Q", "(1,0)"), ("Z/6", 3), ("Z/6", 4), ("Z/10", 5)]:
        R = parse_ring(ring)
        res = counterexample_4_6(R, R.coerce(e), 16)
        assert res.is_zero and all(res.checks.values())
        assert "16" in res.scope
    assert counterexample_4_6(parse_ring("Z/6"), 3, 0).is_zero


def test_counterexample_zero_is_monotone():
    R = parse_ring("Z/6")
    assert all(counterexample_4_6(R, 3, d).is_zero for d in (0, 1, 4, 8, 16, 24))


def test_product_with_polynomial_factor():
    for field, d in [("Q", 16), ("GF(3)", 8)]:
        k = parse_ring(field)
        _, ok = product_with_polynomial_factor(k, d)
        assert ok
    k = parse_ring("Q")
    bad = (k.zero, [k.one] + [k.zero] * 16)
    _, ok = product_with_polynomial_factor(k, 16, t=bad)
    assert not ok


def test_run_family_dispatch():
    assert set(family_names()) == {"rxmodnx", "projective", "ctrex46", "kxkx"}
    R = parse_ring("Z/4")
    rep = run_family("rxmodnx", R, R.coerce(2), 32)
    assert rep.verdict and rep.parameter == "2"
    Q2 = parse_ring("Q x Q")
    rep = run_family("ctrex46", Q2, Q2.parse_element("(1,0)"), 16)
    assert rep.verdict and rep.parameter == "(1,0)"
    assert run_family("kxkx", parse_ring("Q"), None, 16).verdict
    with pytest.raises(ValueError):
        run_family("nope", R, 2, 4)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("Z/4", 2), ("Z/6", 2), ("Z/6", 3), ("Z/8", 4), ("Z/9", 3)]),
       st.integers(0, 2**32 - 1))
def test_random_elements_commute_with_n(case, seed):
    ring, n = case
    m = truncated_quotient_hopf(parse_ring(ring), n, 10)
    rng = random.Random(seed)
    f = m.random_element(rng)
    t = m.constant(n)
    assert m.multiply(t, f) == m.scale(m.counit(f), t) == m.multiply(f, t)
