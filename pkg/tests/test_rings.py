from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfint.errors import NotAUnit, ParseError, RingMismatch
from hopfint.rings import (
    FIELD,
    FINITE_PIR,
    PID,
    PRODUCT,
    VERIFY_ONLY,
    IntegersMod,
    Localization,
    PrimeField,
    Product,
    Rationals,
    is_unit,
    nontrivial_idempotents,
    parse_ring,
    ring_add,
    ring_is_semisimple,
    ring_mul,
    ring_neg,
    unit_inverse,
)

DESCRIPTORS = ["Z", "Q", "Z/4", "Z/6", "Z/12", "GF(2)", "GF(7)", "Z[1/6]", "Z[1/2]",
               "Q x Z/4", "GF(2) x GF(3)", "Z/4 x Z[1/3]"]


@pytest.mark.parametrize("text", DESCRIPTORS)
def test_descriptor_round_trip(text):
    assert str(parse_ring(text)) == text
    assert parse_ring(str(parse_ring(text))) == parse_ring(text)


def test_descriptor_tiers():
    assert parse_ring("Q").tier == FIELD
    assert parse_ring("GF(5)").tier == FIELD
    assert parse_ring("Z").tier == PID
    assert parse_ring("Z/6").tier == FINITE_PIR
    assert parse_ring("Z[1/6]").tier == VERIFY_ONLY
    assert parse_ring("Q x Q").tier == PRODUCT


def test_construction_guards():
    with pytest.raises(ValueError):
        IntegersMod(1)
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        Product([Rationals()])
    with pytest.raises(ParseError):
        parse_ring("R")


def test_products_flatten_and_localizations_use_radical():
    inner = Product([Rationals(), IntegersMod(4)])
    assert Product([inner, PrimeField(3)]).factors == (Rationals(), IntegersMod(4), PrimeField(3))
    assert Localization(12) == Localization(6)
    assert str(Localization(8)) == "Z[1/2]"


def el(ring_text, value):
    return parse_ring(ring_text).element(value)


def test_small_arithmetic_examples():
    assert ring_add(el("Z/4", 2), el("Z/4", 2)).value == 0
    # 2/3 is not an element of Z[1/2]; the product is taken in Z[1/6]
    with pytest.raises(ParseError):
        el("Z[1/2]", "2/3")
    assert ring_mul(el("Z[1/6]", "3/4"), el("Z[1/6]", "2/3")) == el("Z[1/6]", "1/2")
    assert ring_mul(el("Q x Q", "(1,0)"), el("Q x Q", "(0,1)")) == el("Q x Q", "(0,0)")
    assert ring_neg(el("Z/5", 2)).value == 3


def test_mixed_rings_rejected():
    with pytest.raises(RingMismatch):
        ring_add(el("Z/4", 1), el("Z/6", 1))


def test_unit_examples():
    assert is_unit(el("Z/4", 3)) and unit_inverse(el("Z/4", 3)).value == 3
    assert is_unit(el("Z[1/2]", 2))
    assert not is_unit(el("Z[1/2]", 3))
    assert not is_unit(el("GF(2)", 0))
    with pytest.raises(NotAUnit):
        unit_inverse(el("GF(2)", 0))
    assert is_unit(el("Z[1/6]", "-8/3"))


def test_semisimplicity():
    assert ring_is_semisimple(parse_ring("Z/6"))
    assert not ring_is_semisimple(parse_ring("Z/4"))
    assert ring_is_semisimple(parse_ring("Q x Q"))
    assert not ring_is_semisimple(parse_ring("Z"))
    assert not ring_is_semisimple(parse_ring("Z[1/2]"))


def test_nontrivial_idempotents():
    assert sorted(e.value for e in nontrivial_idempotents(parse_ring("Z/6"))) == [3, 4]
    assert nontrivial_idempotents(parse_ring("GF(5)")) == []
    got = {e.value for e in nontrivial_idempotents(parse_ring("Q x Q"))}
    assert got == {(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))}


def test_localization_against_fractions():
    # rational-arithmetic oracle: Z[1/6] embeds in Q
    R = parse_ring("Z[1/6]")
    Q = parse_ring("Q")
    for a, b in [("3/4", "2/3"), ("-5/36", "7/2"), ("0", "1/6"), ("9", "-1/8")]:
        x, y = R.parse_element(a), R.parse_element(b)
        assert Q.parse_element(R.format_element(R.mul(x, y))) == Fraction(a) * Fraction(b)
        assert Q.parse_element(R.format_element(R.add(x, y))) == Fraction(a) + Fraction(b)


# property tests ------------------------------------------------------------

ring_names = st.sampled_from(DESCRIPTORS)


@st.composite
def ring_and_triple(draw):
    R = parse_ring(draw(ring_names))
    seed = draw(st.integers(0, 2**32 - 1))
    import random

    rng = random.Random(seed)
    return R, [R.random_element(rng) for _ in range(3)]


@settings(max_examples=150, deadline=None)
@given(ring_and_triple())
def test_commutative_ring_axioms(data):
    R, (a, b, c) = data
    assert R.add(R.add(a, b), c) == R.add(a, R.add(b, c))
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.add(a, b) == R.add(b, a) and R.mul(a, b) == R.mul(b, a)
    assert R.mul(a, R.one) == a and R.add(a, R.zero) == a
    assert R.add(a, R.neg(a)) == R.zero  # canonical zero representation
    if R.is_unit(a):
        assert R.mul(a, R.inv(a)) == R.one


@settings(max_examples=80, deadline=None)
@given(ring_and_triple())
def test_format_parse_round_trip(data):
    R, values = data
    for v in values:
        assert R.parse_element(R.format_element(v)) == v


@settings(max_examples=80, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50))
def test_product_is_componentwise(x, y):
    P = parse_ring("Z/4 x GF(3) x Q")
    a, b = P.from_int(x), P.from_int(y)
    for op in ("add", "mul"):
        got = getattr(P, op)(a, b)
        assert got == tuple(getattr(f, op)(u, v) for f, u, v in zip(P.factors, a, b))


@pytest.mark.parametrize("m", [2, 4, 6, 8, 9, 12])
def test_zmod_units_match_gcd(m):
    import math

    R = IntegersMod(m)
    assert [R.is_unit(x) for x in R.elements()] == [math.gcd(x, m) == 1 for x in range(m)]
