"""Per-group analysis: one serializable record with every exact invariant
the claim suite consumes.  Records are deterministic functions of the group
and the analysis configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .builders import builtin_group, direct_product
from .chartable import (
    character_degrees,
    character_table_mod_p,
    restriction_multiplicities,
    subgroup_character_data,
)
from .groups import (
    PermutationGroup,
    Subgroup,
    fitting_subgroup,
    normal_subgroups,
    quotient_group,
    structural_predicates,
)
from .isoclinism import rusin_case_classify, stem_check
from .metrics import commuting_pairs_bruteforce, compute_metrics, half_bound_witness
from .perms import pconj


@dataclass(frozen=True)
class AnalysisConfig:
    max_prime: int = 31
    nagao_cap: int = 200
    gallagher_cap: int = 48
    commuting_cap: int = 6000
    iso_product_cap: int = 100

    def fingerprint(self) -> dict:
        return {
            "max_prime": self.max_prime,
            "nagao_cap": self.nagao_cap,
            "gallagher_cap": self.gallagher_cap,
            "commuting_cap": self.commuting_cap,
            "iso_product_cap": self.iso_product_cap,
        }


SCHEMA_VERSION = 1

ISO_FACTORS = (
    ("C2", "cyclic:2"),
    ("C3", "cyclic:3"),
    ("C2xC2", "product:cyclic:2,cyclic:2"),
)


@dataclass(frozen=True)
class AnalysisRecord:
    schema_version: int
    name: str
    order: int
    degree: int
    class_number: int
    degree_sum: int
    involution_count: int
    exponent: int
    t: Fraction
    d: Fraction
    i: Fraction
    degrees: tuple[int, ...]
    abelian: bool
    nilpotent: bool
    supersolvable: bool
    solvable: bool
    p_solvable: dict[int, bool]
    fitting_height: int | None
    fitting_index: int
    center_order: int
    derived_order: int
    derived_length: int
    chief_factors: tuple[int, ...]
    derived_is_perfect: bool
    derived_center_intersection: int
    stem: bool
    rusin_case: str
    rusin_quotient_order: int
    commuting_pairs: Fraction | None
    half_lhs: int
    half_rhs: int
    half_verdict: bool
    nagao_rows: tuple[dict, ...] | None
    gallagher_rows: tuple[dict, ...] | None
    iso_rows: tuple[dict, ...]
    theorems: dict[str, dict] = field(default_factory=dict)

    def with_theorems(self, theorems: dict) -> "AnalysisRecord":
        return replace(self, theorems=theorems)

    # -- JSON round trip ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "name": self.name,
            "order": self.order,
            "degree": self.degree,
            "class_number": self.class_number,
            "degree_sum": self.degree_sum,
            "involution_count": self.involution_count,
            "exponent": self.exponent,
            "t": _frac_str(self.t),
            "d": _frac_str(self.d),
            "i": _frac_str(self.i),
            "degrees": list(self.degrees),
            "abelian": self.abelian,
            "nilpotent": self.nilpotent,
            "supersolvable": self.supersolvable,
            "solvable": self.solvable,
            "p_solvable": {str(p): v for p, v in sorted(self.p_solvable.items())},
            "fitting_height": self.fitting_height,
            "fitting_index": self.fitting_index,
            "center_order": self.center_order,
            "derived_order": self.derived_order,
            "derived_length": self.derived_length,
            "chief_factors": list(self.chief_factors),
            "derived_is_perfect": self.derived_is_perfect,
            "derived_center_intersection": self.derived_center_intersection,
            "stem": self.stem,
            "rusin_case": self.rusin_case,
            "rusin_quotient_order": self.rusin_quotient_order,
            "commuting_pairs": _frac_str(self.commuting_pairs)
            if self.commuting_pairs is not None
            else None,
            "half_lhs": self.half_lhs,
            "half_rhs": self.half_rhs,
            "half_verdict": self.half_verdict,
            "nagao_rows": list(self.nagao_rows) if self.nagao_rows is not None else None,
            "gallagher_rows": list(self.gallagher_rows)
            if self.gallagher_rows is not None
            else None,
            "iso_rows": list(self.iso_rows),
            "theorems": self.theorems,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "AnalysisRecord":
        return AnalysisRecord(
            schema_version=data["schema_version"],
            name=data["name"],
            order=data["order"],
            degree=data["degree"],
            class_number=data["class_number"],
            degree_sum=data["degree_sum"],
            involution_count=data["involution_count"],
            exponent=data["exponent"],
            t=_frac_parse(data["t"]),
            d=_frac_parse(data["d"]),
            i=_frac_parse(data["i"]),
            degrees=tuple(data["degrees"]),
            abelian=data["abelian"],
            nilpotent=data["nilpotent"],
            supersolvable=data["supersolvable"],
            solvable=data["solvable"],
            p_solvable={int(p): v for p, v in data["p_solvable"].items()},
            fitting_height=data["fitting_height"],
            fitting_index=data["fitting_index"],
            center_order=data["center_order"],
            derived_order=data["derived_order"],
            derived_length=data["derived_length"],
            chief_factors=tuple(data["chief_factors"]),
            derived_is_perfect=data["derived_is_perfect"],
            derived_center_intersection=data["derived_center_intersection"],
            stem=data["stem"],
            rusin_case=data["rusin_case"],
            rusin_quotient_order=data["rusin_quotient_order"],
            commuting_pairs=_frac_parse(data["commuting_pairs"])
            if data["commuting_pairs"] is not None
            else None,
            half_lhs=data["half_lhs"],
            half_rhs=data["half_rhs"],
            half_verdict=data["half_verdict"],
            nagao_rows=tuple(data["nagao_rows"]) if data["nagao_rows"] is not None else None,
            gallagher_rows=tuple(data["gallagher_rows"])
            if data["gallagher_rows"] is not None
            else None,
            iso_rows=tuple(data["iso_rows"]),
            theorems=data.get("theorems", {}),
        )


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _frac_parse(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def analyze_group(G: PermutationGroup, config: AnalysisConfig | None = None) -> AnalysisRecord:
    """Compute the full exact record for one group."""
    config = config or AnalysisConfig()
    degrees = character_degrees(G)
    metrics = compute_metrics(G, degrees)
    profile = structural_predicates(G)
    rusin = rusin_case_classify(G)
    half = half_bound_witness(G, degrees)
    derived = G.derived_subgroup()
    center = G.center()
    derived_is_perfect = _subgroup_is_perfect(G, derived)
    fit = fitting_subgroup(G)
    commuting = None
    if G.order <= config.commuting_cap:
        commuting = commuting_pairs_bruteforce(G, cap=config.commuting_cap)
        if commuting != metrics.d:
            raise AssertionError(
                f"pair-count oracle {commuting} disagrees with k/|G| = {metrics.d}"
            )
    nagao_rows = _nagao_rows(G, config) if G.order <= config.nagao_cap else None
    gallagher_rows = (
        _gallagher_rows(G, config) if G.order <= config.gallagher_cap else None
    )
    iso_rows = _iso_rows(G, config) if G.order <= config.iso_product_cap else ()
    return AnalysisRecord(
        schema_version=SCHEMA_VERSION,
        name=G.name,
        order=G.order,
        degree=G.degree,
        class_number=metrics.class_number,
        degree_sum=metrics.degree_sum,
        involution_count=metrics.involution_count,
        exponent=G.exponent(),
        t=metrics.t,
        d=metrics.d,
        i=metrics.i,
        degrees=tuple(degrees),
        abelian=profile.abelian,
        nilpotent=profile.nilpotent,
        supersolvable=profile.supersolvable,
        solvable=profile.solvable,
        p_solvable=dict(profile.p_solvable),
        fitting_height=profile.fitting_height,
        fitting_index=G.order // fit.order,
        center_order=center.order,
        derived_order=derived.order,
        derived_length=profile.derived_length,
        chief_factors=profile.chief_factors,
        derived_is_perfect=derived_is_perfect,
        derived_center_intersection=derived.intersection_order(center),
        stem=stem_check(G),
        rusin_case=rusin.case_id.value,
        rusin_quotient_order=rusin.central_quotient_order,
        commuting_pairs=commuting,
        half_lhs=half.lhs,
        half_rhs=half.rhs,
        half_verdict=half.verdict,
        nagao_rows=nagao_rows,
        gallagher_rows=gallagher_rows,
        iso_rows=iso_rows,
    )


def _subgroup_is_perfect(G: PermutationGroup, H: Subgroup) -> bool:
    from .groups import _derived_of_subgroup

    return _derived_of_subgroup(G, H).order == H.order


def _nagao_rows(G: PermutationGroup, config: AnalysisConfig) -> tuple[dict, ...]:
    """Class-count submultiplicativity data over every normal subgroup."""
    rows = []
    k_g = G.class_count()
    for N in normal_subgroups(G, cap=config.nagao_cap):
        if N.order in (1, G.order):
            continue
        k_n = N.as_group().class_count()
        quot = quotient_group(G, N)
        k_q = quot.group.class_count()
        ok = k_g * N.order * quot.group.order <= k_n * k_q * G.order
        rows.append(
            {
                "n_order": N.order,
                "k_n": k_n,
                "k_q": k_q,
                "ok": bool(ok),
            }
        )
    return tuple(rows)


def _gallagher_rows(G: PermutationGroup, config: AnalysisConfig) -> tuple[dict, ...]:
    """Orbit-counting bound data for every normal subgroup."""
    chars_G = character_table_mod_p(G)
    rows = []
    for N in normal_subgroups(G, cap=config.gallagher_cap):
        rows.extend(gallagher_orbit_rows(G, N, chars_G))
    return tuple(rows)


def gallagher_orbit_rows(G: PermutationGroup, N: Subgroup, chars_G=None) -> list[dict]:
    """For each orbit of G on the characters of normal N: the number of
    characters of G lying over the orbit, and the class count of the
    stabilizer quotient that bounds it."""
    if chars_G is None:
        chars_G = character_table_mod_p(G)
    H = N.as_group()
    chars_N = subgroup_character_data(G, N, chars_G.modulus)
    mult = restriction_multiplicities(G, N, chars_G, chars_N)
    classes_N = H.conjugacy_classes()
    kN = classes_N.count
    # per-element permutation of N-classes induced by conjugation
    def class_perm(g):
        return tuple(
            classes_N.index_of[pconj(rep, g)] for rep in classes_N.representatives
        )

    gen_perms = [class_perm(g) for g in G.generators]
    # orbits of rows of the N-table under the induced permutations
    row_index = {row: j for j, row in enumerate(chars_N.table)}
    seen: set[int] = set()
    orbits: list[list[int]] = []
    for j in range(kN):
        if j in seen:
            continue
        orbit = [j]
        seen.add(j)
        qi = 0
        while qi < len(orbit):
            cur = chars_N.table[orbit[qi]]
            qi += 1
            for sigma in gen_perms:
                moved = tuple(cur[sigma[c]] for c in range(kN))
                idx = row_index[moved]
                if idx not in seen:
                    seen.add(idx)
                    orbit.append(idx)
        orbits.append(sorted(orbit))
    out = []
    for orbit in orbits:
        over_any = [i for i in range(len(mult)) if any(mult[i][j] for j in orbit)]
        over_rep = [i for i in range(len(mult)) if mult[i][orbit[0]]]
        if over_any != over_rep:
            raise AssertionError("constituents of a restriction must form one orbit")
        bound = _inertia_quotient_class_count(G, N, chars_N, orbit[0], class_perm)
        out.append(
            {
                "n_order": N.order,
                "orbit_size": len(orbit),
                "over_count": len(over_any),
                "bound": bound,
                "ok": bool(len(over_any) <= bound),
            }
        )
    return out


def _inertia_quotient_class_count(G, N, chars_N, row_idx, class_perm) -> int:
    row = chars_N.table[row_idx]
    kN = len(row)
    members = []
    for g in G.elements:
        sigma = class_perm(g)
        if all(row[sigma[c]] == row[c] for c in range(kN)):
            members.append(g)
    inertia = G.subgroup(members, name="I")
    IG = inertia.as_group()
    N_in_I = IG.subgroup(N.elements)
    return quotient_group(IG, N_in_I).group.class_count()


def _iso_rows(G: PermutationGroup, config: AnalysisConfig) -> tuple[dict, ...]:
    """Degree-sum-ratio and commuting-probability invariance under direct
    products with small abelian factors."""
    rows = []
    for label, spec in ISO_FACTORS:
        A = builtin_group(spec)
        P = direct_product(G, A)
        degrees_p = character_degrees(P)
        t_equal = Fraction(sum(degrees_p), P.order) == Fraction(
            sum(character_degrees(G)), G.order
        )
        d_equal = Fraction(P.class_count(), P.order) == Fraction(
            G.class_count(), G.order
        )
        rows.append(
            {
                "factor": label,
                "product_order": P.order,
                "t_equal": bool(t_equal),
                "d_equal": bool(d_equal),
            }
        )
    return tuple(rows)
