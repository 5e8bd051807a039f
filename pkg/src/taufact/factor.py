"""Enumeration of factorizations whose factors pairwise satisfy a relation.

A factorization of a non-unit ``a`` is ``a = u * x1 * ... * xn`` with ``u`` a
unit, the ``xi`` non-units, and every pair of distinct positions related by
the ambient relation (a repeated factor must relate to itself).  ``n = 1`` is
the trivial case and carries no pair condition.

Candidate factors are drawn from the divisors of the target, which keeps the
search finite even over the integers.  Enumeration is exhaustive up to a
length cap; unbounded length is detected by a pumping rule (a factor x with
x related to everything in the factorization and x * P strongly associate to
the product P can be inserted any number of times), reported as a tri-state
so a cap never silently masquerades as a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rings import (
    AssociateKind,
    ElementClass,
    InfiniteSetError,
    Ring,
    UnsupportedOperationError,
)
from .relations import (
    ComaximalTau,
    EmptyTau,
    FullTau,
    RegCapTau,
    RegularTau,
    TauRelation,
    ZeroProductTau,
)


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    """unit * product(factors) = target, factors sorted canonically."""

    ring: Ring
    unit: object
    factors: tuple
    target: object

    @property
    def trivial(self) -> bool:
        return len(self.factors) == 1

    def product(self):
        return self.ring.product(self.factors)

    def to_json(self):
        r = self.ring
        return {
            "unit": r.element_to_json(self.unit),
            "factors": [r.element_to_json(x) for x in self.factors],
            "target": r.element_to_json(self.target),
            "trivial": self.trivial,
        }

    def __repr__(self):
        r = self.ring
        facs = "*".join(r.format_element(x) for x in self.factors)
        return f"{r.format_element(self.target)}={r.format_element(self.unit)}*{facs}"


@dataclass(frozen=True)
class Rejection:
    """A refinement that is not a valid factorization; names the bad pair."""

    pair: tuple
    reason: str


@dataclass(frozen=True)
class PumpWitness:
    x: object
    base: Factorization


@dataclass
class FactorizationSet:
    """All factorizations of one target up to rearrangement and an associate kind."""

    ring: Ring
    target: object
    beta: AssociateKind
    cap: int
    classes: dict  # canonical key -> representative Factorization
    candidates: tuple
    raw_total: int
    max_length: int
    unbounded: str  # "no" | "yes" | "unknown"
    pump: Optional[PumpWitness]
    budget_exhausted: bool = False
    note: str = ""

    @property
    def complete(self) -> bool:
        return not self.budget_exhausted and self.unbounded != "unknown"

    @property
    def items(self) -> tuple:
        return tuple(
            self.classes[k] for k in sorted(self.classes, key=lambda k: (len(k), k))
        )

    @property
    def nontrivial_items(self) -> tuple:
        return tuple(f for f in self.items if not f.trivial)

    def to_json(self):
        out = {
            "target": self.ring.element_to_json(self.target),
            "cap": self.cap,
            "complete": self.complete,
            "unbounded": self.unbounded,
            "items": [f.to_json() for f in self.items],
        }
        if self.pump is not None:
            out["pump"] = {
                "x": self.ring.element_to_json(self.pump.x),
                "base": self.pump.base.to_json(),
            }
        if self.note:
            out["note"] = self.note
        return out


def _in_sharp(ring: Ring, x) -> bool:
    return x != ring.zero and not ring.is_unit(x)


def validate_factorization(tau: TauRelation, f: Factorization) -> Optional[str]:
    """Re-check every invariant directly from the definitions.

    Returns None when valid, else a human-readable violation.
    """
    ring = f.ring
    if not ring.is_unit(f.unit):
        return f"unit slot holds a non-unit: {ring.format_element(f.unit)}"
    if not f.factors:
        return "empty factor list"
    for x in f.factors:
        if ring.is_unit(x):
            return f"factor {ring.format_element(x)} is a unit"
    if ring.mul(f.unit, f.product()) != f.target:
        return "unit * factors does not equal the target"
    if len(f.factors) >= 2:
        for i in range(len(f.factors)):
            for j in range(i + 1, len(f.factors)):
                x, y = f.factors[i], f.factors[j]
                if not _in_sharp(ring, x) or not _in_sharp(ring, y):
                    return "paired factor outside the nonzero non-units"
                if not tau.holds(x, y):
                    return (
                        f"pair ({ring.format_element(x)}, {ring.format_element(y)})"
                        " not related"
                    )
    return None


# ---------------------------------------------------------------------------
# Canonical forms

_rep_cache: dict = {}


def _rep_pool(ring: Ring, target) -> tuple:
    """Deterministic pool the canonical class representatives are drawn from."""
    key = (ring, target)
    got = _rep_cache.get(key)
    if got is not None:
        return got
    try:
        pool = sorted(
            (d for d in ring.divisors(target) if not ring.is_unit(d)),
            key=ring.sort_key,
        )
    except InfiniteSetError:
        # Only trivial factorizations are enumerable here; their factors are
        # the unit multiples of the target.
        pool = sorted(
            {ring.mul(ring.unit_inverse(u), target) for u in ring.units()},
            key=ring.sort_key,
        )
    got = tuple(pool)
    _rep_cache[key] = got
    return got


def _factor_key(ring: Ring, target, x, beta: AssociateKind):
    ck = (ring, target, beta, x)
    got = _rep_cache.get(ck)
    if got is not None:
        return got
    pool = _rep_pool(ring, target)
    if beta == AssociateKind.VERY_STRONG and not ring.associated(x, x, beta):
        # not self-related: the element is its own class, tagged by identity
        got = (1, ring.sort_key(x))
    else:
        reps = [y for y in pool if ring.associated(x, y, beta)]
        if not reps:
            reps = [x]
        got = (0, min(ring.sort_key(y) for y in reps))
    _rep_cache[ck] = got
    return got


def canonicalize(ring: Ring, f: Factorization, beta: AssociateKind) -> tuple:
    """Key equal for two factorizations iff their factor multisets match

    bijectively with beta-associated factors (rearrangement and unit variation
    quotiented away)."""
    return tuple(sorted(_factor_key(ring, f.target, x, beta) for x in f.factors))


# ---------------------------------------------------------------------------
# Enumeration


def default_cap(ring: Ring, tau: TauRelation, target) -> int:
    """max(8, number of associate classes of non-unit divisors + 1)."""
    try:
        divs = [d for d in ring.divisors(target) if not ring.is_unit(d)]
    except InfiniteSetError:
        return 8
    reps: list = []
    for d in sorted(divs, key=ring.sort_key):
        if not any(ring.associated(d, r, AssociateKind.ASSOCIATE) for r in reps):
            reps.append(d)
    return max(8, len(reps) + 1)


def _associate_stable(spec) -> bool:
    """Relations invariant under replacing arguments by associates."""
    if isinstance(spec, (FullTau, EmptyTau, ComaximalTau, ZeroProductTau, RegularTau)):
        return True
    if isinstance(spec, RegCapTau):
        return _associate_stable(spec.inner)
    return False


def _strongly_associate_cached(ring: Ring) -> bool:
    got = getattr(ring, "_strongly_assoc_flag", None)
    if got is None:
        got = ring.is_strongly_associate()
        ring._strongly_assoc_flag = got
    return got


def _nontrivial_candidates(
    ring: Ring, tau: TauRelation, target, reduce_assoc: bool = False
) -> list:
    """Elements that can appear in a factorization of length >= 2.

    With ``reduce_assoc`` (sound only for associate-stable relations on
    strongly associate rings, and for canonical views no finer than the
    strong-associate one), candidates shrink to one per associate class:
    any factorization normalizes factor-wise onto class representatives
    with the unit slot absorbing the difference.
    """
    got = tau._cand_cache.get((target, reduce_assoc), False)
    if got is not False:
        if got is None:
            raise UnsupportedOperationError(
                f"divisor set of {ring.format_element(target)} is infinite; "
                "nontrivial factorizations cannot be enumerated"
            )
        return got
    if isinstance(tau.spec, EmptyTau):
        return []
    if tau.regular_only and not ring.is_regular(target):
        # a product of two or more pairwise-regular factors is regular
        return []
    if isinstance(tau.spec, ZeroProductTau) and target != ring.zero:
        # pairwise zero products force the whole product to zero
        return []
    try:
        divs = ring.divisors(target)
    except InfiniteSetError:
        tau._cand_cache[(target, reduce_assoc)] = None
        raise UnsupportedOperationError(
            f"divisor set of {ring.format_element(target)} is infinite; "
            "nontrivial factorizations cannot be enumerated"
        )
    cands = sorted(
        (d for d in divs if _in_sharp(ring, d)), key=ring.sort_key
    )
    if tau.regular_only:
        cands = [d for d in cands if ring.is_regular(d)]
    if reduce_assoc and _associate_stable(tau.spec) and _strongly_associate_cached(ring):
        reps: list = []
        for d in cands:
            if not any(
                ring.associated(d, r, AssociateKind.ASSOCIATE) for r in reps
            ):
                reps.append(d)
        cands = reps
    # a factor needs at least one partner (possibly itself)
    cands = [x for x in cands if any(tau.holds(x, y) for y in cands)]
    tau._cand_cache[(target, reduce_assoc)] = cands
    return cands


def enumerate_factorizations(
    ring: Ring,
    tau: TauRelation,
    target,
    beta: AssociateKind = AssociateKind.ASSOCIATE,
    cap: Optional[int] = None,
    budget: Optional[int] = None,
) -> FactorizationSet:
    """All factorizations of ``target`` with length 1..cap, canonicalized.

    ``budget`` caps the number of search nodes; exceeding it is reported via
    ``budget_exhausted`` (the result is then incomplete).
    """
    cls = ring.classify(target)
    if cls == ElementClass.UNIT:
        raise PreconditionError("target must be a non-unit")
    if not ring.is_finite and target == ring.zero:
        raise PreconditionError("cannot factor 0 in an infinite ring")
    if cap is None:
        cap = default_cap(ring, tau, target)
    if cap < 2:
        raise PreconditionError("cap must be at least 2")

    zero = ring.zero
    mul = ring.mul
    classes: dict = {}
    raw_seen: set = set()
    pump: Optional[PumpWitness] = None
    max_length = 0

    def consider(factors: tuple, product, unit) -> None:
        nonlocal pump, max_length
        if factors in raw_seen:
            return
        raw_seen.add(factors)
        f = Factorization(ring=ring, unit=unit, factors=factors, target=target)
        max_length = max(max_length, len(factors))
        key = canonicalize(ring, f, beta)
        if key not in classes:
            classes[key] = f
        if pump is None:
            for x in dict.fromkeys(factors):  # preserves order, dedups
                if x == zero or ring.is_unit(x):
                    continue
                others = set(factors)
                if zero in others:
                    continue
                if not tau.holds(x, x):
                    continue
                if any(not tau.holds(x, y) for y in others):
                    continue
                if ring.associated(mul(x, product), product, AssociateKind.STRONG):
                    pump = PumpWitness(x=x, base=f)
                    break

    # trivial factorizations, one per distinct factor value, smallest unit first
    for u in sorted(ring.units(), key=ring.sort_key):
        x = mul(ring.unit_inverse(u), target)
        if (x,) not in raw_seen:
            consider((x,), x, u)

    candidates = _nontrivial_candidates(
        ring, tau, target, reduce_assoc=beta != AssociateKind.VERY_STRONG
    )
    budget_exhausted = False

    if candidates:
        unit_cof: dict = {}

        def unit_for(product):
            got = unit_cof.get(product, False)
            if got is False:
                got = ring.cofactors(target, product).pick_unit()
                unit_cof[product] = got
            return got

        divisor_set = set(ring.divisors(target))
        nodes = 0

        # depth-first over nondecreasing candidate index sequences
        def extend(pool: list, chosen: list, product) -> bool:
            nonlocal nodes, budget_exhausted
            for idx, x in enumerate(pool):
                nodes += 1
                if budget is not None and nodes > budget:
                    budget_exhausted = True
                    return False
                prod2 = mul(product, x)
                # every partial product divides the target (0 divides only 0)
                if prod2 == zero:
                    if target != zero:
                        continue
                elif prod2 not in divisor_set:
                    continue
                chosen.append(x)
                if len(chosen) >= 2:
                    u = unit_for(prod2)
                    if u is not None:
                        consider(tuple(chosen), prod2, u)
                if len(chosen) < cap:
                    # keep candidates >= x that relate to x (self only if x rel x)
                    pool2 = [
                        y
                        for y in pool[idx:]
                        if tau.holds(x, y) and (y != x or tau.holds(x, x))
                    ]
                    if pool2 and not extend(pool2, chosen, prod2):
                        chosen.pop()
                        return False
                chosen.pop()
            return True

        extend(candidates, [], ring.one)

    if pump is not None:
        unbounded = "yes"
    elif max_length >= cap:
        unbounded = "unknown"
    else:
        unbounded = "no"

    return FactorizationSet(
        ring=ring,
        target=target,
        beta=beta,
        cap=cap,
        classes=classes,
        candidates=tuple(candidates),
        raw_total=len(raw_seen),
        max_length=max_length,
        unbounded=unbounded,
        pump=pump,
        budget_exhausted=budget_exhausted,
    )


def tau_divides(ring: Ring, tau: TauRelation, b, a, cap: Optional[int] = None) -> bool:
    """b occurs as a factor in some factorization of a (trivial ones count).

    Decided exactly by a dedicated search for a valid factor multiset
    containing b, so class-representative collapsing cannot hide b.
    """
    # trivial factorization: b = (some unit)^-1 * a
    if ring.associated(b, a, AssociateKind.STRONG):
        return True
    candidates = _nontrivial_candidates(ring, tau, a)
    if b not in candidates:
        return False
    if cap is None:
        cap = default_cap(ring, tau, a)
    zero = ring.zero
    mul = ring.mul
    divisor_set = set(ring.divisors(a))
    unit_cof: dict = {}

    def completes(product) -> bool:
        got = unit_cof.get(product)
        if got is None:
            got = ring.cofactors(a, product).contains_unit()
            unit_cof[product] = got
        return got

    def search(pool: list, size: int, product) -> bool:
        if size >= 2 and completes(product):
            return True
        if size >= cap:
            return False
        for idx, x in enumerate(pool):
            prod2 = mul(product, x)
            if prod2 == zero:
                if a != zero:
                    continue
            elif prod2 not in divisor_set:
                continue
            pool2 = [
                y for y in pool[idx:] if tau.holds(x, y) and (y != x or tau.holds(x, x))
            ]
            if search(pool2, size + 1, prod2):
                return True
        return False

    pool0 = [y for y in candidates if tau.holds(b, y) and (y != b or tau.holds(b, b))]
    return search(pool0, 1, b)


def refine(ring: Ring, tau: TauRelation, f: Factorization, x, sub: Factorization):
    """Replace one occurrence of factor x by sub's factors; unit slots multiply.

    Returns the refined Factorization, or a Rejection naming a violating pair
    (a rejection is a result, not an error: it witnesses non-refinability).
    """
    if x not in f.factors:
        raise PreconditionError(f"{ring.format_element(x)} is not a factor")
    if sub.target != x:
        raise PreconditionError("substitute factorization has the wrong target")
    factors = list(f.factors)
    factors.remove(x)
    factors.extend(sub.factors)
    factors.sort(key=ring.sort_key)
    refined = Factorization(
        ring=ring,
        unit=ring.mul(f.unit, sub.unit),
        factors=tuple(factors),
        target=f.target,
    )
    if len(refined.factors) >= 2:
        for i in range(len(refined.factors)):
            for j in range(i + 1, len(refined.factors)):
                a, b = refined.factors[i], refined.factors[j]
                if (
                    not _in_sharp(ring, a)
                    or not _in_sharp(ring, b)
                    or not tau.holds(a, b)
                ):
                    return Rejection(pair=(a, b), reason="pair not related")
    return refined
