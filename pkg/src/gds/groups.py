"""Finite permutation groups with full element enumeration.

Everything downstream (classes, subgroup series, quotients, predicates) works
off the complete, lexicographically sorted element list, so results are
deterministic and exact.  Intended scale: orders up to a few times 10^4.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import CapacityError, DomainError, InputError, UndefinedValueError
from .perms import (
    Perm,
    identity_perm,
    is_involution_or_identity,
    perm_from_one_based,
    perm_order,
    pconj,
    pcomm,
    pinv,
    pmul,
)

DEFAULT_ELEMENT_CAP = 200_000


class _Closure:
    """Incrementally maintained closure of a generated subgroup.

    ``add_generator`` keeps the set closed; each effective addition at least
    doubles the subgroup, so total work stays near |H| * len(gens).
    """

    def __init__(self, degree: int, cap: int | None = None):
        e = identity_perm(degree)
        self.elems: set[Perm] = {e}
        self.order_list: list[Perm] = [e]
        self.gens: list[Perm] = []
        self.cap = cap

    def add_generator(self, c: Perm) -> None:
        if c in self.elems:
            return
        self.gens.append(c)
        new: list[Perm] = []
        for x in self.order_list:
            y = pmul(x, c)
            if y not in self.elems:
                self.elems.add(y)
                new.append(y)
        qi = 0
        while qi < len(new):
            x = new[qi]
            qi += 1
            for g in self.gens:
                y = pmul(x, g)
                if y not in self.elems:
                    self.elems.add(y)
                    new.append(y)
            if self.cap is not None and len(self.elems) > self.cap:
                raise CapacityError(
                    f"element cap {self.cap} exceeded during enumeration"
                )
        self.order_list.extend(new)


def _close_generators(degree: int, gens, cap: int | None = None) -> _Closure:
    state = _Closure(degree, cap)
    for g in gens:
        state.add_generator(g)
    return state


@dataclass(frozen=True)
class ConjugacyClasses:
    """Class partition; classes ordered by their lex-minimal representative."""

    classes: tuple[tuple[Perm, ...], ...]
    representatives: tuple[Perm, ...]
    index_of: dict[Perm, int]

    @property
    def count(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def inverse_class(self, i: int) -> int:
        return self.index_of[pinv(self.representatives[i])]


class PermutationGroup:
    """A fully enumerated group of permutations on points 0..degree-1."""

    def __init__(self, degree: int, generators, elements, name: str = "G"):
        self.name = name
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(generators)
        self.elements: tuple[Perm, ...] = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        self._classes: ConjugacyClasses | None = None
        self._center: Subgroup | None = None
        self._derived: Subgroup | None = None
        self._class_ncl: dict[int, Subgroup] = {}
        self._char_cache: dict[int, object] = {}

    # -- basics ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return identity_perm(self.degree)

    def __contains__(self, p: Perm) -> bool:
        return p in self._index

    def __repr__(self) -> str:
        return f"PermutationGroup({self.name!r}, order={self.order}, degree={self.degree})"

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            pmul(a, b) == pmul(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
        )

    def exponent(self) -> int:
        e = 1
        for rep in self.conjugacy_classes().representatives:
            e = lcm(e, perm_order(rep))
        return e

    def involution_count(self) -> int:
        return sum(1 for x in self.elements if is_involution_or_identity(x))

    # -- conjugacy ------------------------------------------------------

    def conjugacy_classes(self) -> ConjugacyClasses:
        if self._classes is not None:
            return self._classes
        gens = self.generators
        ginv = [pinv(g) for g in gens]
        assigned: dict[Perm, int] = {}
        classes: list[tuple[Perm, ...]] = []
        reps: list[Perm] = []
        for x in self.elements:
            if x in assigned:
                continue
            idx = len(classes)
            orbit = [x]
            assigned[x] = idx
            qi = 0
            while qi < len(orbit):
                y = orbit[qi]
                qi += 1
                for g, gi in zip(gens, ginv):
                    z = pmul(pmul(gi, y), g)
                    if z not in assigned:
                        assigned[z] = idx
                        orbit.append(z)
            orbit.sort()
            classes.append(tuple(orbit))
            reps.append(orbit[0])
        self._classes = ConjugacyClasses(tuple(classes), tuple(reps), assigned)
        return self._classes

    def class_count(self) -> int:
        return self.conjugacy_classes().count

    # -- subgroups ------------------------------------------------------

    def subgroup(self, elements, name: str = "H") -> "Subgroup":
        elems = tuple(sorted(set(elements)))
        state = _Closure(self.degree)
        for x in elems:
            if x not in state.elems:
                state.add_generator(x)
        if len(state.elems) != len(elems):
            raise DomainError("element set is not closed under the group operation")
        return Subgroup(self, elems, tuple(state.gens), name=name)

    def subgroup_generated_by(self, gens, name: str = "H") -> "Subgroup":
        state = _close_generators(self.degree, sorted(set(gens)))
        return Subgroup(
            self, tuple(sorted(state.elems)), tuple(state.gens), name=name
        )

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), (), name="1")

    def whole_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.elements, self.generators, name=self.name)

    def center(self) -> "Subgroup":
        if self._center is None:
            gens = self.generators
            central = [
                x for x in self.elements if all(pmul(x, g) == pmul(g, x) for g in gens)
            ]
            self._center = self.subgroup(central, name=f"Z({self.name})")
        return self._center

    def derived_subgroup(self) -> "Subgroup":
        # G' is generated by the commutators [x, s] over all x and generators s.
        if self._derived is None:
            state = _Closure(self.degree)
            for s in self.generators:
                sinv = pinv(s)
                for x in self.elements:
                    state.add_generator(pmul(pmul(pmul(pinv(x), sinv), x), s))
            self._derived = Subgroup(
                self,
                tuple(sorted(state.elems)),
                tuple(state.gens),
                name=f"[{self.name},{self.name}]",
            )
        return self._derived

    def normal_closure(self, seed) -> "Subgroup":
        state = _Closure(self.degree)
        for c in sorted(set(seed)):
            state.add_generator(c)
        gi = 0
        while gi < len(state.gens):
            h = state.gens[gi]
            gi += 1
            for g in self.generators:
                c = pconj(h, g)
                if c not in state.elems:
                    state.add_generator(c)
        return Subgroup(self, tuple(sorted(state.elems)), tuple(state.gens))

    def class_normal_closure(self, class_index: int) -> "Subgroup":
        sub = self._class_ncl.get(class_index)
        if sub is None:
            rep = self.conjugacy_classes().representatives[class_index]
            sub = self.normal_closure([rep])
            self._class_ncl[class_index] = sub
        return sub


@dataclass(frozen=True)
class Subgroup:
    """Subset of a parent group, closed under the group operation."""

    parent: PermutationGroup
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...]
    name: str = "H"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.element_set()

    def element_set(self) -> frozenset:
        cached = getattr(self, "_elemset", None)
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_elemset", cached)
        return cached

    @property
    def normal(self) -> bool:
        cached = getattr(self, "_normal", None)
        if cached is None:
            elemset = self.element_set()
            cached = all(
                pconj(h, g) in elemset
                for g in self.parent.generators
                for h in self.generators
            )
            object.__setattr__(self, "_normal", cached)
        return cached

    def as_group(self, name: str | None = None) -> PermutationGroup:
        return PermutationGroup(
            self.parent.degree,
            self.generators,
            self.elements,
            name=name or self.name,
        )

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.element_set() <= other.element_set()

    def intersection_order(self, other: "Subgroup") -> int:
        return len(self.element_set() & other.element_set())


def group_from_generators(
    degree: int,
    generators,
    name: str = "G",
    cap: int = DEFAULT_ELEMENT_CAP,
) -> PermutationGroup:
    """Enumerate the group generated by 1-based image arrays.

    Elements come out sorted lexicographically, so all downstream outputs are
    reproducible bit-for-bit.
    """
    if degree < 1:
        raise InputError(f"degree must be positive, got {degree}")
    gens = [perm_from_one_based(arr, degree) for arr in generators]
    return group_from_perms(degree, gens, name=name, cap=cap)


def group_from_perms(
    degree: int,
    gens,
    name: str = "G",
    cap: int = DEFAULT_ELEMENT_CAP,
) -> PermutationGroup:
    """Same as group_from_generators but with internal 0-based tuples."""
    ident = identity_perm(degree)
    kept = []
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise InputError(f"generator {p!r} is not a permutation of degree {degree}")
        if p != ident and p not in kept:
            kept.append(p)
    state = _close_generators(degree, kept, cap=cap)
    return PermutationGroup(degree, kept, sorted(state.elems), name=name)


# -- quotients ------------------------------------------------------------


@dataclass
class QuotientGroup:
    """G/N acting on the right cosets of N, with the projection retained."""

    group: PermutationGroup
    coset_index: dict[Perm, int]
    coset_reps: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return self.group.order

    def coset_of(self, g: Perm) -> int:
        return self.coset_index[g]

    def project(self, g: Perm) -> Perm:
        """Image of a parent element as a permutation of cosets."""
        idx = self.coset_index
        return tuple(idx[pmul(r, g)] for r in self.coset_reps)


def quotient_group(G: PermutationGroup, N: Subgroup, name: str | None = None) -> QuotientGroup:
    if N.parent is not G:
        raise DomainError("subgroup does not belong to this group")
    if not N.normal:
        raise DomainError(f"{N.name} is not normal in {G.name}")
    coset_index: dict[Perm, int] = {}
    reps: list[Perm] = []
    for x in G.elements:
        if x in coset_index:
            continue
        i = len(reps)
        reps.append(x)
        for h in N.elements:
            coset_index[pmul(h, x)] = i
    m = len(reps)
    images = []
    for g in G.generators:
        images.append(tuple(coset_index[pmul(r, g)] for r in reps))
    Q = group_from_perms(m, images, name=name or f"{G.name}/{N.name}")
    if Q.order * N.order != G.order:
        raise AssertionError("quotient enumeration disagrees with Lagrange")
    return QuotientGroup(Q, coset_index, tuple(reps))


# -- normal structure ------------------------------------------------------


def minimal_normal_subgroup(G: PermutationGroup) -> Subgroup:
    """A minimal nontrivial normal subgroup (G must be nontrivial).

    Every minimal normal subgroup is the normal closure of a prime-order
    element, and normal closures are constant on conjugacy classes, so it
    suffices to scan class representatives of prime element order.
    """
    if G.order == 1:
        raise DomainError("the trivial group has no minimal normal subgroup")
    classes = G.conjugacy_classes()
    candidates = []
    for i, rep in enumerate(classes.representatives):
        o = perm_order(rep)
        if o > 1 and _is_prime_small(o):
            candidates.append((len(classes.classes[i]), i))
    candidates.sort()
    smallest_prime = min(p for p in range(2, G.order + 1) if G.order % p == 0)
    best: Subgroup | None = None
    for size, i in candidates:
        if best is not None and size + 1 >= best.order:
            continue
        sub = G.class_normal_closure(i)
        if best is None or sub.order < best.order:
            best = sub
            if best.order == smallest_prime:
                break
    assert best is not None
    return best


def _is_prime_small(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def chief_series(G: PermutationGroup) -> list[Subgroup]:
    """A chief series 1 = N_0 < N_1 < ... < N_r = G, as subgroups of G."""
    series = [G.trivial_subgroup()]
    if G.order == 1:
        return series
    # pi maps each element of G to its image in the current quotient Q
    pi = {g: g for g in G.elements}
    Q = G
    while Q.order > 1:
        M = minimal_normal_subgroup(Q)
        quot = quotient_group(Q, M)
        # pi(g) lies in M exactly when it sits in the identity coset of Q/M
        term = [g for g in G.elements if quot.coset_index[pi[g]] == 0]
        series.append(G.subgroup(term, name=f"N{len(series)}"))
        Q = quot.group
        # Q acts regularly on the cosets, so point 0 identifies its elements
        by_point = {tau[0]: tau for tau in Q.elements}
        pi = {g: by_point[quot.coset_index[pi[g]]] for g in G.elements}
    return series


def chief_factor_orders(G: PermutationGroup) -> list[int]:
    series = chief_series(G)
    return [
        series[i + 1].order // series[i].order for i in range(len(series) - 1)
    ]


def derived_series(G: PermutationGroup) -> list[Subgroup]:
    """G >= G' >= G'' >= ... down to the stable term (inclusive)."""
    series = [G.whole_subgroup()]
    current = G.derived_subgroup()
    while current.order < series[-1].order:
        series.append(current)
        current = _derived_of_subgroup(G, current)
    return series


def _derived_of_subgroup(G: PermutationGroup, H: Subgroup) -> Subgroup:
    state = _Closure(G.degree)
    for s in H.generators:
        sinv = pinv(s)
        for x in H.elements:
            state.add_generator(pmul(pmul(pmul(pinv(x), sinv), x), s))
    return G.subgroup(sorted(state.elems))


def lower_central_series(G: PermutationGroup) -> list[Subgroup]:
    """G >= [G,G] >= [[G,G],G] >= ... down to the stable term."""
    series = [G.whole_subgroup()]
    current = G.derived_subgroup()
    while current.order < series[-1].order:
        series.append(current)
        seed = [
            pcomm(x, s) for x in current.generators for s in G.generators
        ]
        current = G.normal_closure(seed)
    return series


def is_solvable(G: PermutationGroup) -> bool:
    return derived_series(G)[-1].order == 1


def is_nilpotent(G: PermutationGroup) -> bool:
    return lower_central_series(G)[-1].order == 1


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime_power(n: int) -> int | None:
    """Return p if n is a positive power of the prime p, else None."""
    if n < 2:
        return None
    ps = _prime_factors(n)
    return ps[0] if len(ps) == 1 else None


def p_core(G: PermutationGroup, p: int) -> Subgroup:
    """O_p(G): the largest normal p-subgroup.

    An element lies in O_p(G) exactly when its normal closure is a p-group,
    and that predicate is constant on conjugacy classes.
    """
    classes = G.conjugacy_classes()
    members: set[Perm] = {G.identity}
    for i, rep in enumerate(classes.representatives):
        o = perm_order(rep)
        if o == 1:
            continue
        q = _is_prime_power(o)
        if q != p:
            continue
        sub = G.class_normal_closure(i)
        if _is_prime_power(sub.order) == p:
            members.update(sub.elements)
    # the membership set is closed by construction; subgroup() re-verifies that
    return G.subgroup(sorted(members), name=f"O_{p}({G.name})")


def fitting_subgroup(G: PermutationGroup) -> Subgroup:
    seeds: set[Perm] = {G.identity}
    expected = 1
    for p in _prime_factors(G.order):
        core = p_core(G, p)
        expected *= core.order
        seeds.update(core.elements)
    fit = G.subgroup_generated_by(sorted(seeds), name=f"F({G.name})")
    if fit.order != expected:
        raise AssertionError("Fitting subgroup is not the product of the p-cores")
    return fit


def fitting_data(G: PermutationGroup) -> tuple[Subgroup, int | None]:
    """Fitting subgroup and Fitting height (None when G is not solvable)."""
    fit = fitting_subgroup(G)
    if not is_solvable(G):
        return fit, None
    height = 0
    Q = G
    current_fit = fit
    while Q.order > 1:
        height += 1
        Q = quotient_group(Q, current_fit).group
        if Q.order > 1:
            current_fit = fitting_subgroup(Q)
    return fit, height


def fitting_height(G: PermutationGroup) -> int:
    _, h = fitting_data(G)
    if h is None:
        raise UndefinedValueError(
            f"Fitting height is undefined for non-solvable input {G.name}"
        )
    return h


@dataclass(frozen=True)
class StructuralProfile:
    """Structure predicates of one group, all decided exactly."""

    abelian: bool
    nilpotent: bool
    supersolvable: bool
    solvable: bool
    p_solvable: dict[int, bool]
    fitting_height: int | None
    center_order: int
    derived_order: int
    derived_length: int
    chief_factors: tuple[int, ...]


def structural_predicates(G: PermutationGroup) -> StructuralProfile:
    factors = tuple(chief_factor_orders(G))
    primes = _prime_factors(G.order)
    p_solv = {}
    for p in primes:
        p_solv[p] = all(
            _is_prime_power(f) == p or f % p != 0 for f in factors
        )
    d_series = derived_series(G)
    solvable = d_series[-1].order == 1
    supersolvable = all(_is_prime_small(f) for f in factors)
    nilpotent = is_nilpotent(G)
    abelian = G.is_abelian()
    height = fitting_data(G)[1] if solvable else None
    profile = StructuralProfile(
        abelian=abelian,
        nilpotent=nilpotent,
        supersolvable=supersolvable,
        solvable=solvable,
        p_solvable=p_solv,
        fitting_height=height,
        center_order=G.center().order,
        derived_order=G.derived_subgroup().order,
        derived_length=len(d_series) - 1,
        chief_factors=factors,
    )
    _check_profile(profile, G.order)
    return profile


def _check_profile(profile: StructuralProfile, order: int) -> None:
    chain = (profile.abelian, profile.nilpotent, profile.supersolvable, profile.solvable)
    for earlier, later in zip(chain, chain[1:]):
        if earlier and not later:
            raise AssertionError(f"predicate monotonicity violated: {profile}")
    if profile.solvable != all(profile.p_solvable.values() or [True]):
        raise AssertionError("solvable must equal p-solvable for all prime divisors")
    if profile.fitting_height is not None and (profile.fitting_height == 0) != (order == 1):
        raise AssertionError("Fitting height 0 must characterize the trivial group")


def normal_subgroups(G: PermutationGroup, cap: int = 200) -> list[Subgroup]:
    """All normal subgroups, as closures of unions of conjugacy classes.

    Exponential in the class count in principle, hence the order cap.
    """
    if G.order > cap:
        raise CapacityError(
            f"normal subgroup enumeration cap {cap} exceeded (|G| = {G.order})"
        )
    classes = G.conjugacy_classes()
    trivial = G.trivial_subgroup()
    found: dict[frozenset, Subgroup] = {trivial.element_set(): trivial}
    frontier = [trivial]
    while frontier:
        current = frontier.pop()
        cur_set = current.element_set()
        for cls in classes.classes:
            if cls[0] in cur_set:
                continue
            # generated by a conjugation-invariant set, hence normal
            sub = G.subgroup_generated_by(list(current.generators) + list(cls))
            key = sub.element_set()
            if key not in found:
                found[key] = sub
                frontier.append(sub)
    return sorted(found.values(), key=lambda s: (s.order, s.elements))
