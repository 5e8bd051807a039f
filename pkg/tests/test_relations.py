import pytest

from taufact import (
    AssociateKind,
    ComaximalTau,
    EmptyTau,
    FullTau,
    RegCapTau,
    RegularTau,
    SubsetTau,
    TauConstructionError,
    TauProperty,
    UnsupportedOperationError,
    ZeroProductTau,
    build_tau,
    check_tau_property,
)
from conftest import small_finite_rings

ALL_SPECS = (
    FullTau(),
    EmptyTau(),
    ZeroProductTau(),
    ComaximalTau(),
    RegularTau(),
    RegCapTau(FullTau()),
    RegCapTau(ComaximalTau()),
)


def test_zero_product_examples(z6):
    t = build_tau(ZeroProductTau(), z6)
    assert t.holds(2, 3)
    assert not t.holds(2, 4)


def test_comaximal_examples(zint, z6):
    t = build_tau(ComaximalTau(), zint)
    assert t.holds(3, 4)
    assert not t.holds(2, 6)
    t6 = build_tau(ComaximalTau(), z6)
    assert t6.holds(2, 3)  # 2*2 + 3*(-1) = 1 mod 6
    assert not t6.holds(2, 4)


def test_regcap_empty_on_finite_rings(z6):
    t = build_tau(RegCapTau(FullTau()), z6)
    for a in z6.nonzero_nonunits():
        for b in z6.nonzero_nonunits():
            assert not t.holds(a, b)


def test_subset_validation(z6):
    t = build_tau(SubsetTau((2, 4)), z6)
    assert t.holds(2, 4) and not t.holds(2, 3)
    with pytest.raises(TauConstructionError):
        build_tau(SubsetTau((5,)), z6)  # 5 is a unit
    with pytest.raises(TauConstructionError):
        build_tau(SubsetTau((0,)), z6)


def test_symmetry_exhaustive():
    for ring in small_finite_rings():
        sharp = ring.nonzero_nonunits()
        for spec in ALL_SPECS:
            t = build_tau(spec, ring)
            for a in sharp:
                for b in sharp:
                    assert t.holds(a, b) == t.holds(b, a)


def test_regcap_implies_inner_and_regular():
    for ring in small_finite_rings():
        sharp = ring.nonzero_nonunits()
        inner = build_tau(FullTau(), ring)
        t = build_tau(RegCapTau(FullTau()), ring)
        for a in sharp:
            for b in sharp:
                if t.holds(a, b):
                    assert inner.holds(a, b)
                    assert ring.is_regular(a) and ring.is_regular(b)


def test_full_multiplicative_divisive(z6):
    t = build_tau(FullTau(), z6)
    assert check_tau_property(t, TauProperty.MULTIPLICATIVE).holds
    assert check_tau_property(t, TauProperty.DIVISIVE).holds


def test_empty_vacuously_multiplicative(z6):
    t = build_tau(EmptyTau(), z6)
    assert check_tau_property(t, TauProperty.MULTIPLICATIVE).holds
    assert check_tau_property(t, TauProperty.DIVISIVE).holds


def test_zero_product_divisive(z6):
    t = build_tau(ZeroProductTau(), z6)
    v = check_tau_property(t, TauProperty.DIVISIVE)
    assert v.holds, v.witness


def test_subset_multiplicative_iff_closed(z6):
    # {2, 4} is multiplicatively closed in Z/6; {3, 4} is not (3*4 = 0)
    closed = build_tau(SubsetTau((2, 4)), z6)
    assert check_tau_property(closed, TauProperty.MULTIPLICATIVE).holds
    open_ = build_tau(SubsetTau((2, 3)), z6)
    v = check_tau_property(open_, TauProperty.MULTIPLICATIVE)
    assert not v.holds
    a, b, c = v.witness  # a genuine counterexample: bc stays in R#, unrelated
    bc = z6.mul(b, c)
    assert open_.holds(a, b) and open_.holds(a, c)
    assert bc != 0 and not z6.is_unit(bc) and not open_.holds(a, bc)


def test_infinite_ring_needs_scope(zint):
    t = build_tau(FullTau(), zint)
    with pytest.raises(UnsupportedOperationError):
        check_tau_property(t, TauProperty.MULTIPLICATIVE)
    v = check_tau_property(t, TauProperty.MULTIPLICATIVE, scope=range(2, 12))
    assert v.holds and v.scoped


def test_refinable_verdicts(z6, z8):
    assert check_tau_property(build_tau(FullTau(), z6), TauProperty.REFINABLE).holds
    assert check_tau_property(build_tau(EmptyTau(), z6), TauProperty.REFINABLE).holds
    assert check_tau_property(build_tau(ZeroProductTau(), z8), TauProperty.REFINABLE).holds


def test_comaximal_refinable_on_integers(zint):
    # divisors of comaximal elements stay comaximal
    t = build_tau(ComaximalTau(), zint)
    scope = [a for a in range(-40, 41) if abs(a) > 1]
    assert check_tau_property(t, TauProperty.REFINABLE, scope=scope).holds


def test_subset_not_refinable(z8):
    # 0 = 1*2*4 is a factorization over S = {2, 4}; refining 2 by its
    # trivial variant 2 = 3*6 drags in 6, and (6, 4) leaves S
    t = build_tau(SubsetTau((2, 4)), z8)
    v = check_tau_property(t, TauProperty.REFINABLE)
    assert not v.holds


def test_combinable_witness(z6, z8):
    # merging 2 and 3 inside 0 = 2*2*3 produces a zero factor
    v = check_tau_property(build_tau(FullTau(), z6), TauProperty.COMBINABLE)
    assert not v.holds
    v8 = check_tau_property(build_tau(ZeroProductTau(), z8), TauProperty.COMBINABLE)
    assert not v8.holds  # 0 = 2*4*4 merges to a zero factor
    assert check_tau_property(build_tau(EmptyTau(), z6), TauProperty.COMBINABLE).holds


def test_associate_preserving(z6):
    t = build_tau(ZeroProductTau(), z6)
    for kind in AssociateKind:
        assert check_tau_property(t, TauProperty.ASSOCIATE_PRESERVING, kind=kind).holds
    # a subset that splits an associate class is not associate preserving
    s = build_tau(SubsetTau((2, 3)), z6)
    v = check_tau_property(s, TauProperty.ASSOCIATE_PRESERVING, kind=AssociateKind.ASSOCIATE)
    assert not v.holds  # 2 ~ 4 but 4 is outside the subset
