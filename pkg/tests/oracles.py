"""Independent brute-force oracles the engine is checked against.

These deliberately avoid the engine's divisor-restricted search: candidate
factors are all nonzero non-units, multisets are generated by itertools, and
class equality is decided by explicit bijective matching.
"""

import itertools

from taufact import AssociateKind, Factorization, canonicalize
from taufact.factor import _factor_key


def oracle_factorization_classes(ring, tau, cap, beta):
    """Map each non-unit to its set of canonical factorization keys, by
    enumerating every factor multiset over the nonzero non-units."""
    sharp = ring.nonzero_nonunits()
    units = ring.units()
    unit_multiples = {
        a: {ring.mul(ring.unit_inverse(u), a) for u in units} for a in ring.nonunits()
    }
    out = {a: set() for a in ring.nonunits()}
    for a in ring.nonunits():
        for u in units:
            x = ring.mul(ring.unit_inverse(u), a)
            f = Factorization(ring=ring, unit=u, factors=(x,), target=a)
            out[a].add(canonicalize(ring, f, beta))
    for k in range(2, cap + 1):
        for combo in itertools.combinations_with_replacement(sharp, k):
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    if not tau.holds(combo[i], combo[j]):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            prod = ring.product(combo)
            for a in ring.nonunits():
                if prod in unit_multiples[a]:
                    u = ring.cofactors(a, prod).pick_unit()
                    f = Factorization(ring=ring, unit=u, factors=combo, target=a)
                    out[a].add(canonicalize(ring, f, beta))
    return out


def matching_equivalent(ring, f, g, beta):
    """Factor multisets match bijectively with beta-associated pairs;
    identical elements always match (identity tagging for the non-reflexive
    very-strong relation)."""
    if len(f.factors) != len(g.factors):
        return False
    for perm in itertools.permutations(g.factors):
        if all(
            x == y
            or (
                ring.associated(x, x, beta)
                and ring.associated(y, y, beta)
                and ring.associated(x, y, beta)
            )
            for x, y in zip(f.factors, perm)
        ):
            return True
    return False


def oracle_atomic(ring, tau, a, cap):
    """Does a have a factorization whose factors all admit only
    factorizations with an associate of themselves?  (Irreducible flavor,
    decided entirely from the oracle enumeration.)"""
    classes = oracle_factorization_classes(ring, tau, cap, AssociateKind.ASSOCIATE)

    def raw_factorizations(target):
        sharp = ring.nonzero_nonunits()
        units = ring.units()
        unit_multiples = {ring.mul(ring.unit_inverse(u), target) for u in units}
        for u in units:
            yield (ring.mul(ring.unit_inverse(u), target),)
        for k in range(2, cap + 1):
            for combo in itertools.combinations_with_replacement(sharp, k):
                ok = all(
                    tau.holds(combo[i], combo[j])
                    for i in range(k)
                    for j in range(i + 1, k)
                )
                if ok and ring.product(combo) in unit_multiples:
                    yield combo

    def is_atom(x):
        return all(
            any(ring.associated(x, y, AssociateKind.ASSOCIATE) for y in fac)
            for fac in raw_factorizations(x)
        )

    return any(all(is_atom(x) for x in fac) for fac in raw_factorizations(a))


def oracle_classes_fast(ring, tau, cap, beta):
    """Index-table variant of the multiset oracle for the acceptance sweep:
    same quantification (all pairwise-related factor multisets over the
    nonzero non-units), table-driven arithmetic."""
    elems = list(ring.elements())
    idx = {e: i for i, e in enumerate(elems)}
    mul = [[idx[ring.mul(a, b)] for b in elems] for a in elems]
    sharp = [idx[a] for a in ring.nonzero_nonunits()]
    partners = {
        i: frozenset(j for j in sharp if tau.holds(elems[i], elems[j])) for i in sharp
    }
    units = ring.units()
    nonunits = [idx[a] for a in ring.nonunits()]
    by_unit_multiple = {}
    for a in nonunits:
        for u in units:
            by_unit_multiple.setdefault(idx[ring.mul(ring.unit_inverse(u), elems[a])], []).append(a)
    out = {elems[a]: set() for a in nonunits}
    for a in nonunits:
        target = elems[a]
        for u in units:
            x = ring.mul(ring.unit_inverse(u), target)
            out[target].add((_factor_key(ring, target, x, beta),))
    one = idx[ring.one]
    key_cache = [dict() for _ in elems]  # target index -> factor index -> key

    def record(chosen, prod):
        for a in by_unit_multiple.get(prod, ()):
            target = elems[a]
            kc = key_cache[a]
            keys = []
            for i in chosen:
                k = kc.get(i)
                if k is None:
                    k = _factor_key(ring, target, elems[i], beta)
                    kc[i] = k
                keys.append(k)
            keys.sort()
            out[target].add(tuple(keys))

    full_pool = frozenset(sharp)

    def rec(pool, chosen, prod):
        for k, i in enumerate(pool):
            prod2 = mul[prod][i]
            chosen.append(i)
            if len(chosen) >= 2:
                record(chosen, prod2)
            if len(chosen) < cap:
                if partners[i] == full_pool:
                    sub = pool[k:]
                else:
                    sub = [j for j in pool[k:] if j in partners[i]]
                if sub:
                    rec(sub, chosen, prod2)
            chosen.pop()

    rec(sharp, [], one)
    return out
