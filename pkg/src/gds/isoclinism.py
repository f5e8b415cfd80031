"""Isoclinism machinery: stem test, exhaustive isoclinism search for tiny
groups, degree-multiplicity proportions, and the structure cases used by the
three-eighths classification.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError
from .groups import PermutationGroup, QuotientGroup, Subgroup, quotient_group
from .perms import Perm, pcomm, perm_order, pmul

DEFAULT_ISOCLINISM_CAP = 24


def stem_check(G: PermutationGroup) -> bool:
    """True iff the center is contained in the derived subgroup."""
    return G.center().is_subset_of(G.derived_subgroup())


@dataclass
class CommutatorPairing:
    """The commutator map of G, seen on the central quotient.

    ``pairing[(a, b)]`` is the commutator in G of (any) preimages of the
    central-quotient elements a, b; centrality of the kernel makes the value
    independent of the chosen preimages.
    """

    central_quotient: QuotientGroup
    derived: Subgroup
    pairing: dict[tuple[Perm, Perm], Perm]

    def check_well_defined(self) -> None:
        """Recompute the pairing from every pair of coset representatives."""
        quot = self.central_quotient
        parent = self.derived.parent
        cosets: dict[int, list[Perm]] = {}
        for g in parent.elements:
            cosets.setdefault(quot.coset_of(g), []).append(g)
        by_point = {tau[0]: tau for tau in quot.group.elements}
        for ia, reps_a in cosets.items():
            for ib, reps_b in cosets.items():
                key = (by_point[ia], by_point[ib])
                expected = self.pairing[key]
                for a in reps_a:
                    for b in reps_b:
                        if pcomm(a, b) != expected:
                            raise AssertionError("commutator depends on coset choice")


def commutator_pairing(G: PermutationGroup) -> CommutatorPairing:
    quot = quotient_group(G, G.center(), name=f"{G.name}/Z")
    Q = quot.group
    by_point = {tau[0]: tau for tau in Q.elements}
    # one representative per coset: first element of G found in each coset
    rep_of: dict[int, Perm] = {}
    for g in G.elements:
        c = quot.coset_of(g)
        if c not in rep_of:
            rep_of[c] = g
    pairing = {}
    for ca, a in rep_of.items():
        for cb, b in rep_of.items():
            pairing[(by_point[ca], by_point[cb])] = pcomm(a, b)
    derived = G.derived_subgroup()
    values = set(pairing.values())
    if not values <= derived.element_set():
        raise AssertionError("pairing values must lie in the derived subgroup")
    if G.subgroup_generated_by(values).order != derived.order:
        raise AssertionError("pairing values must generate the derived subgroup")
    return CommutatorPairing(quot, derived, pairing)


def _element_word_tree(G: PermutationGroup) -> list[tuple[Perm, Perm | None, Perm | None]]:
    """Each element as (elem, parent, generator) with elem = parent * gen."""
    out = [(G.identity, None, None)]
    seen = {G.identity}
    qi = 0
    order: list[Perm] = [G.identity]
    while qi < len(order):
        x = order[qi]
        qi += 1
        for g in G.generators:
            y = pmul(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
                out.append((y, x, g))
    return out


def _isomorphisms(A: PermutationGroup, B: PermutationGroup):
    """Yield all isomorphisms A -> B as element dicts (A, B tiny)."""
    if A.order != B.order:
        return
    orders_a = Counter(perm_order(x) for x in A.elements)
    orders_b = Counter(perm_order(x) for x in B.elements)
    if orders_a != orders_b:
        return
    gens = list(A.generators)
    if not gens:  # trivial group
        yield {A.identity: B.identity}
        return
    tree = _element_word_tree(A)
    # candidate images must match both element order and class size
    ca = A.conjugacy_classes()
    cb = B.conjugacy_classes()
    size_a = {x: len(ca.classes[ca.index_of[x]]) for x in A.elements}
    size_b = {y: len(cb.classes[cb.index_of[y]]) for y in B.elements}
    candidates = [
        [
            y
            for y in B.elements
            if perm_order(y) == perm_order(g) and size_b[y] == size_a[g]
        ]
        for g in gens
    ]

    def build(images):
        gen_image = dict(zip(gens, images))
        phi = {A.identity: B.identity}
        for elem, parent, gen in tree[1:]:
            phi[elem] = pmul(phi[parent], gen_image[gen])
        if len(set(phi.values())) != B.order:
            return None
        for x in A.elements:
            for g in gens:
                if phi[pmul(x, g)] != pmul(phi[x], gen_image[g]):
                    return None
        return phi

    def rec(i, chosen):
        if i == len(gens):
            phi = build(chosen)
            if phi is not None:
                yield phi
            return
        for y in candidates[i]:
            yield from rec(i + 1, chosen + [y])

    yield from rec(0, [])


def are_isoclinic(
    G: PermutationGroup,
    H: PermutationGroup,
    quotient_cap: int = DEFAULT_ISOCLINISM_CAP,
) -> bool:
    """Exhaustive isoclinism test for tiny central quotients.

    True iff some isomorphism of central quotients carries the commutator
    pairing of G onto that of H (the induced derived-subgroup map is then
    forced on commutator values and must extend to an isomorphism).
    """
    zg = G.center()
    zh = H.center()
    qg_order = G.order // zg.order
    qh_order = H.order // zh.order
    if qg_order != qh_order or G.derived_subgroup().order != H.derived_subgroup().order:
        return False
    if qg_order > quotient_cap:
        raise CapacityError(
            f"isoclinism search cap {quotient_cap} exceeded (|G/Z| = {qg_order})"
        )
    pg = commutator_pairing(G)
    ph = commutator_pairing(H)
    target = ph.pairing
    for phi in _isomorphisms(pg.central_quotient.group, ph.central_quotient.group):
        forced: dict[Perm, Perm] = {}
        ok = True
        for (a, b), c in pg.pairing.items():
            image = target[(phi[a], phi[b])]
            if forced.setdefault(c, image) != image:
                ok = False
                break
        if ok and _extends_to_isomorphism(forced, pg.derived, ph.derived):
            return True
    return False


def _extends_to_isomorphism(seed: dict[Perm, Perm], D1: Subgroup, D2: Subgroup) -> bool:
    """Does the partial map (domain generates D1) extend to an isomorphism?"""
    known = dict(seed)
    if len(set(known.values())) != len(known):
        return False
    changed = True
    while changed:
        changed = False
        items = list(known.items())
        for x, u in items:
            for y, v in items:
                z = pmul(x, y)
                w = pmul(u, v)
                prev = known.get(z)
                if prev is None:
                    known[z] = w
                    changed = True
                elif prev != w:
                    return False
    if len(known) != D1.order:
        return False
    if set(known.values()) != set(D2.elements):
        return False
    return len(set(known.values())) == len(known)


@dataclass(frozen=True)
class ProportionCheck:
    """Outcome of the degree-multiplicity proportion test for a pair."""

    ok: bool
    details: tuple[tuple[int, int, int], ...]  # (degree, mult_G, mult_H)
    degree_sum_ratio_equal: bool


def multiplicity_proportion_check(
    G: PermutationGroup,
    H: PermutationGroup,
    degrees_G,
    degrees_H,
) -> ProportionCheck:
    """Check m_d * |H| = n_d * |G| for every irreducible degree d.

    The caller is responsible for the hypothesis that G and H are isoclinic;
    a failed check is a returned verdict, not an error.
    """
    mg = Counter(degrees_G)
    mh = Counter(degrees_H)
    details = []
    ok = True
    for d in sorted(set(mg) | set(mh)):
        a, b = mg.get(d, 0), mh.get(d, 0)
        details.append((d, a, b))
        if (a == 0) != (b == 0) or a * H.order != b * G.order:
            ok = False
    ratio_equal = Fraction(sum(degrees_G), G.order) == Fraction(sum(degrees_H), H.order)
    return ProportionCheck(ok=ok, details=tuple(details), degree_sum_ratio_equal=ratio_equal)


class RusinCase(enum.Enum):
    TWO_GROUP = "TWO_GROUP"
    THREE_GROUP = "THREE_GROUP"
    S3_TYPE = "S3_TYPE"
    D10_TYPE = "D10_TYPE"
    NONE = "NONE"


@dataclass(frozen=True)
class RusinClassification:
    case_id: RusinCase
    central_quotient_order: int
    derived_order: int


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def rusin_case_classify(G: PermutationGroup) -> RusinClassification:
    """First matching structure case for groups of high commuting probability."""
    zq_order = G.order // G.center().order
    d_order = G.derived_subgroup().order
    case = RusinCase.NONE
    if _is_power_of(zq_order, 2) and _is_power_of(d_order, 2):
        case = RusinCase.TWO_GROUP
    elif _is_power_of(zq_order, 3) and _is_power_of(d_order, 3):
        case = RusinCase.THREE_GROUP
    elif zq_order == 6 and d_order == 3 and _central_quotient_nonabelian(G):
        case = RusinCase.S3_TYPE
    elif zq_order == 10 and d_order == 5 and _central_quotient_nonabelian(G):
        case = RusinCase.D10_TYPE
    return RusinClassification(case, zq_order, d_order)


def _central_quotient_nonabelian(G: PermutationGroup) -> bool:
    return not quotient_group(G, G.center()).group.is_abelian()
