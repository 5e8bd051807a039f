import pytest
from hypothesis import given, settings, strategies as st

from taufact import (
    AssociateKind,
    ElementClass,
    InfiniteSetError,
    IntegersSpec,
    ModIntSpec,
    PolyQuotSpec,
    ProductSpec,
    RingConstructionError,
    build_ring,
    enumerate_elements,
    ring_predicates,
)
from conftest import small_finite_rings

A, S, V = AssociateKind.ASSOCIATE, AssociateKind.STRONG, AssociateKind.VERY_STRONG


def test_build_validates_modulus():
    with pytest.raises(RingConstructionError, match="n"):
        build_ring(ModIntSpec(1))


def test_build_validates_polyquot():
    with pytest.raises(RingConstructionError, match="prime"):
        build_ring(PolyQuotSpec(4, (1, 1)))
    with pytest.raises(RingConstructionError, match="monic"):
        build_ring(PolyQuotSpec(2, (1, 0)))
    with pytest.raises(RingConstructionError, match="degree"):
        build_ring(PolyQuotSpec(2, (1,)))
    with pytest.raises(RingConstructionError, match="reduced"):
        build_ring(PolyQuotSpec(2, (3, 1)))


def test_finiteness_flag():
    assert build_ring(ModIntSpec(6)).is_finite
    assert build_ring(ProductSpec(ModIntSpec(3), ModIntSpec(3))).order == 9
    assert not build_ring(ProductSpec(IntegersSpec(), IntegersSpec())).is_finite


def test_enumerate_elements_order(z6):
    assert enumerate_elements(z6) == [0, 1, 2, 3, 4, 5]
    r = build_ring(ProductSpec(ModIntSpec(2), ModIntSpec(3)))
    assert enumerate_elements(r) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    with pytest.raises(InfiniteSetError):
        enumerate_elements(build_ring(IntegersSpec()))


def test_classify_examples(z6, zz):
    assert z6.classify(5) == ElementClass.UNIT  # 5*5 = 25 = 1 mod 6
    assert z6.classify(4) == ElementClass.ZERO_DIVISOR  # 4*3 = 0 mod 6
    assert z6.classify(0) == ElementClass.ZERO
    assert zz.classify((2, 3)) == ElementClass.REGULAR_NON_UNIT


def test_finite_rings_have_no_regular_nonunits():
    for ring in small_finite_rings():
        for a in ring.elements():
            assert ring.classify(a) != ElementClass.REGULAR_NON_UNIT, ring.spec_string()


def test_divisors_examples(z6, zint):
    assert z6.divisors(3) == frozenset({1, 3, 5})
    assert zint.divisors(12) == frozenset({1, -1, 2, -2, 3, -3, 4, -4, 6, -6, 12, -12})
    with pytest.raises(InfiniteSetError):
        zint.divisors(0)


def test_divisors_cofactors_consistency():
    for ring in small_finite_rings():
        for a in ring.elements():
            divs = ring.divisors(a)
            for b in ring.elements():
                assert (b in divs) == (not ring.cofactors(a, b).is_empty())


def test_cofactors_examples(z6):
    assert z6.cofactors(4, 2).as_frozenset() == frozenset({2, 5})
    assert z6.cofactors(3, 2).as_frozenset() == frozenset()
    assert z6.cofactors(0, 0).is_all()


def test_cofactors_product_all_propagation(zz):
    cof = zz.cofactors((0, 6), (0, 2))
    assert not cof.is_empty()
    assert not cof.contains_unit()
    assert not cof.is_all()
    with pytest.raises(InfiniteSetError):
        cof.as_frozenset()
    assert zz.cofactors((0, 0), (0, 0)).is_all()


def test_associated_examples(z6, f3xf3):
    assert z6.associated(2, 4, S)  # 2 = 5*4 mod 6
    assert not z6.associated(2, 2, V)  # 2 = 4*2 with 4 not a unit
    assert f3xf3.associated((1, 0), (2, 0), S)
    assert not f3xf3.associated((1, 0), (2, 0), V)


def test_associate_strength_and_symmetry():
    for ring in small_finite_rings():
        elems = list(ring.elements())
        for a in elems:
            for b in elems:
                if ring.associated(a, b, V):
                    assert ring.associated(a, b, S)
                if ring.associated(a, b, S):
                    assert ring.associated(a, b, A)
                assert ring.associated(a, b, A) == ring.associated(b, a, A)
                assert ring.associated(a, b, S) == ring.associated(b, a, S)


def test_associate_transitivity_exhaustive(z6, f2x2):
    for ring in (z6, f2x2):
        elems = list(ring.elements())
        for a in elems:
            for b in elems:
                if not ring.associated(a, b, A):
                    continue
                for c in elems:
                    if ring.associated(b, c, A):
                        assert ring.associated(a, c, A)


def test_regular_elements_collapse_relations(zz, zint):
    # for regular elements the three relations coincide, and self-very holds
    samples = [(2, 3), (4, 1), (-6, 5), (1, 7)]
    for a in samples:
        assert zz.associated(a, a, V)
        for b in samples:
            assert zz.associated(a, b, A) == zz.associated(a, b, S) == zz.associated(a, b, V)
    for a in (2, -9, 30):
        assert zint.associated(a, a, V)


def test_ring_predicates(z4, z6):
    assert ring_predicates(z4) == {"presimplifiable": True, "strongly_associate": True}
    preds = ring_predicates(z6)
    assert preds["presimplifiable"] is False  # 3 = 3*3 with 3 neither 0 nor a unit
    assert preds["strongly_associate"] is True


def test_ring_predicates_infinite_raises(zint):
    with pytest.raises(Exception):
        ring_predicates(zint)


def test_unit_inverse_roundtrip():
    for ring in small_finite_rings():
        for u in ring.units():
            assert ring.mul(u, ring.unit_inverse(u)) == ring.one


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 30), x=st.integers(0, 200), y=st.integers(0, 200))
def test_modring_arithmetic_matches_int_mod(n, x, y):
    ring = build_ring(ModIntSpec(n))
    a, b = x % n, y % n
    assert ring.add(a, b) == (x + y) % n
    assert ring.mul(a, b) == (x * y) % n
    assert ring.neg(a) == (-x) % n


@settings(max_examples=40, deadline=None)
@given(
    x=st.tuples(st.integers(0, 1), st.integers(0, 1)),
    y=st.tuples(st.integers(0, 1), st.integers(0, 1)),
    z=st.tuples(st.integers(0, 1), st.integers(0, 1)),
)
def test_f4_field_laws(x, y, z, f4):
    assert f4.mul(x, y) == f4.mul(y, x)
    assert f4.mul(x, f4.mul(y, z)) == f4.mul(f4.mul(x, y), z)
    assert f4.mul(x, f4.add(y, z)) == f4.add(f4.mul(x, y), f4.mul(x, z))
    if x != f4.zero:
        assert f4.is_unit(x)  # F_4 is a field


def test_element_json_roundtrip(zz, f4):
    for ring, samples in ((zz, [(2, -3), (0, 5)]), (f4, [(0, 1), (1, 1)])):
        for a in samples:
            assert ring.element_from_json(ring.element_to_json(a)) == a


def test_regular_scope_relations_coincide_corpuswide():
    """Over the corpus scopes, the three associate relations agree on
    pairs of regular elements, and each regular element is very strongly
    self-associate."""
    from taufact.corpus import default_corpus_spec
    from taufact import build_ring_from_text

    spec = default_corpus_spec()
    for ring_str in ("Z", "prod(Z,Z)"):
        ring = build_ring_from_text(ring_str)
        scope = [ring.element_from_json(e) for e in spec["scopes"][ring_str]]
        regs = [a for a in scope if ring.classify(a) == ElementClass.REGULAR_NON_UNIT]
        sample = regs[:40]
        for a in sample:
            assert ring.associated(a, a, V)
            for b in sample:
                assert (
                    ring.associated(a, b, A)
                    == ring.associated(a, b, S)
                    == ring.associated(a, b, V)
                )


def test_corpus_finite_rings_have_no_regular_nonunits():
    from taufact.corpus import default_corpus_spec, generate_corpus

    entries, _ = generate_corpus(default_corpus_spec())
    seen = set()
    for ce in entries:
        if not ce.ring.is_finite or ce.ring_str in seen:
            continue
        seen.add(ce.ring_str)
        for a in ce.ring.elements():
            assert ce.ring.classify(a) != ElementClass.REGULAR_NON_UNIT, ce.ring_str
