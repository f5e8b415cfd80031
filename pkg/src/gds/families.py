"""Exact order/class-number/commuting-probability formulas for six families
of simple groups of Lie type, with big-integer parameter sweeps.

Class numbers are exact for PSL2 (split by parity), SUZUKI, REE, TRIALITY_D4
and for PSL3 at q = 3; for PSL3 with q >= 4 and for PSU3 only an upper bound
is carried, and the commuting-probability value is flagged as a bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import factorize, is_prime, prime_power_base
from .errors import DomainError, FactorizationError


class Family(enum.Enum):
    PSL2 = "psl2"
    PSL3 = "psl3"
    PSU3 = "psu3"
    SUZUKI = "suzuki"
    REE = "ree"
    TRIALITY_D4 = "triality_d4"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    q: int

    def __post_init__(self):
        p = prime_power_base(self.q)
        if p is None:
            raise DomainError(f"q = {self.q} is not a prime power")
        fam = self.family
        if fam is Family.PSL2 and self.q < 4:
            raise DomainError("PSL(2,q) requires q >= 4 to be simple")
        if fam is Family.PSL3 and self.q < 3:
            raise DomainError(
                "PSL(3,q) is covered for q >= 3 only (PSL(3,2) is PSL(2,7))"
            )
        if fam is Family.PSU3 and self.q < 3:
            raise DomainError("PSU(3,2) is not simple; q must be at least 3")
        if fam is Family.SUZUKI and not _odd_power_of(self.q, 2):
            raise DomainError("Suzuki groups require q = 2^(2n+1), n >= 1")
        if fam is Family.REE and not _odd_power_of(self.q, 3):
            raise DomainError("Ree groups require q = 3^(2n+1), n >= 1")


def _odd_power_of(q: int, base: int) -> bool:
    k = 0
    n = q
    while n % base == 0:
        n //= base
        k += 1
    return n == 1 and k >= 3 and k % 2 == 1


@dataclass(frozen=True)
class FamilyInvariants:
    spec: FamilySpec
    order: int
    class_number: int
    class_number_exact: bool
    d_value: Fraction
    d_exact: bool
    largest_prime: int


def family_order(spec: FamilySpec) -> int:
    q = spec.q
    fam = spec.family
    if fam is Family.PSL2:
        return q * (q * q - 1) // gcd(2, q - 1)
    if fam is Family.PSL3:
        return q**3 * (q**2 - 1) * (q**3 - 1) // gcd(3, q - 1)
    if fam is Family.PSU3:
        return q**3 * (q**2 - 1) * (q**3 + 1) // gcd(3, q + 1)
    if fam is Family.SUZUKI:
        return q**2 * (q**2 + 1) * (q - 1)
    if fam is Family.REE:
        return q**3 * (q**3 + 1) * (q - 1)
    if fam is Family.TRIALITY_D4:
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    raise DomainError(f"unknown family {fam}")


def family_class_number(spec: FamilySpec) -> tuple[int, bool]:
    """Class number (exact) or an upper bound (flag False)."""
    q = spec.q
    fam = spec.family
    if fam is Family.PSL2:
        return (q + 1, True) if q % 2 == 0 else ((q + 5) // 2, True)
    if fam is Family.PSL3:
        if q == 3:
            return 12, True
        return q * q + 3 * q, False
    if fam is Family.PSU3:
        return q * q + q + 2, False
    if fam is Family.SUZUKI:
        return q + 3, True
    if fam is Family.REE:
        return q + 8, True
    if fam is Family.TRIALITY_D4:
        return q**4 + q**3 + q**2 + q + 6, True
    raise DomainError(f"unknown family {fam}")


def family_d(spec: FamilySpec) -> tuple[Fraction, bool]:
    """Commuting probability, exact or as an upper bound (flag False).

    Bound values divide the class-number bound by a lower bound for the
    order, so they stay valid upper bounds in every congruence case.
    """
    q = spec.q
    fam = spec.family
    k, exact = family_class_number(spec)
    if fam is Family.PSL2:
        if q % 2 == 0:
            value = Fraction(1, (q - 1) * q)
        else:
            value = Fraction(q + 5, (q * q - 1) * q)
        if value != Fraction(k, family_order(spec)):
            raise AssertionError("closed form disagrees with k/order")
        return value, True
    if fam is Family.PSL3:
        if q == 3:
            return Fraction(1, 468), True
        return Fraction(3 * (q * q + 3 * q), q**3 * (q**2 - 1) * (q**3 - 1)), False
    if fam is Family.PSU3:
        return Fraction(k, family_order(spec)), False
    # remaining families are exact: d = k / |G|
    return Fraction(k, family_order(spec)), True


def _order_factor_pieces(spec: FamilySpec) -> tuple[int, list[int], int]:
    """Algebraic split: order = q^exp * (product of pieces) / divisor.

    The q-power is kept symbolic (its prime base is already known) and every
    remaining piece stays at most about q^4, so factoring is fast even at
    q = 2^10.
    """
    q = spec.q
    fam = spec.family
    if fam is Family.PSL2:
        return 1, [q - 1, q + 1], gcd(2, q - 1)
    if fam is Family.PSL3:
        return 3, [q - 1, q + 1, q - 1, q**2 + q + 1], gcd(3, q - 1)
    if fam is Family.PSU3:
        return 3, [q - 1, q + 1, q + 1, q**2 - q + 1], gcd(3, q + 1)
    if fam is Family.SUZUKI:
        return 2, [q**2 + 1, q - 1], 1
    if fam is Family.REE:
        return 3, [q + 1, q**2 - q + 1, q - 1], 1
    if fam is Family.TRIALITY_D4:
        return 12, [
            q**2 + q + 1,
            q**2 - q + 1,
            q**4 - q**2 + 1,
            q - 1,
            q + 1,
            q**2 + q + 1,
            q**2 - q + 1,
            q - 1,
            q + 1,
        ], 1
    raise DomainError(f"unknown family {fam}")


def largest_prime_divisor(spec: FamilySpec, budget: int | None = None) -> int:
    q_exp, pieces, divisor = _order_factor_pieces(spec)
    base = prime_power_base(spec.q)
    base_multiplicity = 0
    n = spec.q
    while n > 1:
        n //= base
        base_multiplicity += 1
    counts: dict[int, int] = {base: base_multiplicity * q_exp}
    product = spec.q**q_exp
    for piece in pieces:
        product *= piece
        for prime, e in factorize(piece, budget=budget).items():
            counts[prime] = counts.get(prime, 0) + e
    if product != family_order(spec) * divisor:
        raise AssertionError("algebraic factor pieces do not multiply to the order")
    for prime, e in factorize(divisor).items():
        counts[prime] -= e
    return max(prime for prime, e in counts.items() if e > 0)


def family_invariants(spec: FamilySpec) -> FamilyInvariants:
    k, k_exact = family_class_number(spec)
    d, d_exact = family_d(spec)
    return FamilyInvariants(
        spec=spec,
        order=family_order(spec),
        class_number=k,
        class_number_exact=k_exact,
        d_value=d,
        d_exact=d_exact,
        largest_prime=largest_prime_divisor(spec),
    )


def valid_q_values(family: Family, q_max: int) -> list[int]:
    out = []
    for q in range(2, q_max + 1):
        try:
            FamilySpec(family, q)
        except DomainError:
            continue
        out.append(q)
    return out


@dataclass(frozen=True)
class SweepRow:
    family: Family
    q: int
    order: int
    largest_prime: int
    d_value: Fraction
    d_is_bound: bool
    below_threshold: bool  # d (or its bound) < 3 / p^2, exact
    lemma31_holds: bool  # p^2/3 < sqrt(order), i.e. p^4 < 9 * order
    skipped: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "family": self.family.value,
            "q": self.q,
            "order": self.order,
            "p": self.largest_prime,
            "d_num": self.d_value.numerator,
            "d_den": self.d_value.denominator,
            "bound_flag": self.d_is_bound,
            "lemma31_holds": self.lemma31_holds,
        }


def sweep_family(
    family: Family, q_max: int = 1024, budget: int | None = None
) -> tuple[list[SweepRow], list[str]]:
    """Evaluate every valid parameter; returns (rows, violation messages).

    A factoring budget overrun skips the parameter with a notice; it is never
    silently counted as a pass.
    """
    rows: list[SweepRow] = []
    violations: list[str] = []
    for q in valid_q_values(family, q_max):
        spec = FamilySpec(family, q)
        try:
            p = largest_prime_divisor(spec, budget=budget)
        except FactorizationError as exc:
            rows.append(
                SweepRow(family, q, family_order(spec), 0, Fraction(0), False, False, False,
                         skipped=str(exc))
            )
            violations.append(f"SKIPPED {family.value} q={q}: {exc}")
            continue
        order = family_order(spec)
        d, d_exact = family_d(spec)
        below = d < Fraction(3, p * p)
        lemma31 = p**4 < 9 * order
        rows.append(SweepRow(family, q, order, p, d, not d_exact, below, lemma31))
        if not below:
            violations.append(
                f"VIOLATION {family.value} q={q}: d = {d} is not below 3/{p}^2"
            )
    return rows, violations


def sweep_all(q_max: int = 1024, budget: int | None = None):
    rows: list[SweepRow] = []
    violations: list[str] = []
    for family in Family:
        r, v = sweep_family(family, q_max=q_max, budget=budget)
        rows.extend(r)
        violations.extend(v)
    return rows, violations


def suzuki_middle_factor_never_prime(q_max: int = 1024) -> bool:
    """For every Suzuki parameter, q^2 + 1 is composite with all prime
    factors at most (q^2 + 1) / 3."""
    for q in valid_q_values(Family.SUZUKI, q_max):
        n = q * q + 1
        if is_prime(n):
            return False
        if max(factorize(n)) > n // 3:
            return False
    return True
