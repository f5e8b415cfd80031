"""Every theorem and bound as a falsifiable implication over analysis records.

A claim evaluates one record exactly (integer/rational comparisons only) and
reports (triggered, ok).  A counterexample is a record whose hypothesis held
while its conclusion failed; on a correct implementation every claim comes
back clean, so any counterexample flags a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .analysis import AnalysisConfig, AnalysisRecord, gallagher_orbit_rows
from .errors import CapacityError, DomainError
from .groups import PermutationGroup, Subgroup
from .isoclinism import are_isoclinic, stem_check

CLAIM_IDS = (
    "THM_1_1",
    "THM_1_2",
    "THM_1_3",
    "THM_1_4",
    "LEM_2_1",
    "LEM_2_2",
    "LEM_2_3",
    "LEM_2_4",
    "LEM_2_5",
    "CITED_4_15",
    "CITED_2_3",
    "HALF_EQUIV",
    "ISO_INVARIANCE",
    "GALLAGHER",
)


@dataclass
class ClaimReport:
    claim_id: str
    groups_checked: int = 0
    hypotheses_triggered: int = 0
    triggered_groups: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)

    def merge_result(self, record: AnalysisRecord, triggered: bool, ok: bool, detail=None):
        self.groups_checked += 1
        if triggered:
            self.hypotheses_triggered += 1
            self.triggered_groups.append(record.name)
        if triggered and not ok:
            entry = {"group": record.name, "order": record.order,
                     "t": str(record.t), "d": str(record.d), "i": str(record.i)}
            if detail:
                entry["detail"] = detail
            self.counterexamples.append(entry)

    @property
    def clean(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "type": "summary",
            "claim": self.claim_id,
            "groups_checked": self.groups_checked,
            "hypotheses_triggered": self.hypotheses_triggered,
            "triggered_groups": sorted(self.triggered_groups),
            "counterexamples": self.counterexamples,
        }


def _primes_upto(n: int) -> list[int]:
    out = []
    for c in range(2, n + 1):
        if all(c % p for p in out):
            out.append(c)
    return out


def _p_solvable(record: AnalysisRecord, p: int) -> bool:
    # primes not dividing the order impose no condition on chief factors
    return record.p_solvable.get(p, True)


def _a5_times_abelian(record: AnalysisRecord) -> bool:
    """Structural recognition of (perfect simple of order 60) x (abelian)."""
    return (
        record.derived_order == 60
        and record.derived_is_perfect
        and record.derived_center_intersection == 1
        and record.derived_order * record.center_order == record.order
    )


def claim_thm_1_1(record: AnalysisRecord, config: AnalysisConfig):
    triggered = False
    failures = []
    for p in _primes_upto(config.max_prime):
        hyp_k = record.class_number * p * p >= 3 * record.order
        hyp_t = record.degree_sum**2 * p * p >= 3 * record.order**2
        if hyp_t and not hyp_k:
            # t^2 <= d makes the degree-sum form imply the class-count form
            failures.append(f"p={p}: degree-sum hypothesis without class-count hypothesis")
        if hyp_k or hyp_t:
            triggered = True
            if not _p_solvable(record, p):
                failures.append(f"p={p}: hypothesis held but group is not p-solvable")
    return triggered, not failures, "; ".join(failures) or None


def claim_thm_1_2(record: AnalysisRecord, config: AnalysisConfig):
    triggered = 4 * record.degree_sum > record.order
    if not triggered:
        return False, True, None
    solvable_branch = record.solvable and record.fitting_height is not None and record.fitting_height <= 4
    ok = solvable_branch or _a5_times_abelian(record)
    return True, ok, None


def claim_thm_1_3(record: AnalysisRecord, config: AnalysisConfig):
    # the commuting-probability form; the degree-sum form implies it exactly
    triggered = 8 * record.class_number > 3 * record.order
    hyp_t = 8 * record.degree_sum**2 > 3 * record.order**2
    if hyp_t and not triggered:
        return True, False, "degree-sum hypothesis without commuting-probability hypothesis"
    if not triggered:
        return False, True, None
    ok = record.abelian or record.rusin_case != "NONE"
    return True, ok, None


def claim_thm_1_4(record: AnalysisRecord, config: AnalysisConfig):
    triggered = 2 * record.degree_sum > record.order
    if not triggered:
        return False, True, None
    return True, record.supersolvable, None


def claim_lem_2_1(record: AnalysisRecord, config: AnalysisConfig):
    ok = record.i * record.i <= record.t * record.t <= record.d
    ok = ok and record.involution_count <= record.degree_sum
    ok = ok and record.degree_sum**2 <= record.class_number * record.order
    return True, ok, None


def claim_lem_2_2(record: AnalysisRecord, config: AnalysisConfig):
    if record.abelian:
        return False, True, None
    return True, record.d <= Fraction(5, 8), None


def claim_lem_2_3(record: AnalysisRecord, config: AnalysisConfig):
    if record.nagao_rows is None or not record.nagao_rows:
        return False, True, None
    bad = [r for r in record.nagao_rows if not r["ok"]]
    detail = f"{len(bad)} normal subgroup pairs failed" if bad else None
    return True, not bad, detail


def claim_lem_2_4(record: AnalysisRecord, config: AnalysisConfig):
    ok = record.d * record.d * record.fitting_index <= 1
    return True, ok, None


def claim_gallagher(record: AnalysisRecord, config: AnalysisConfig):
    if record.gallagher_rows is None or not record.gallagher_rows:
        return False, True, None
    bad = [r for r in record.gallagher_rows if not r["ok"]]
    detail = f"{len(bad)} orbits exceeded the stabilizer bound" if bad else None
    return True, not bad, detail


def claim_cited_4_15(record: AnalysisRecord, config: AnalysisConfig):
    triggered = 15 * record.degree_sum > 4 * record.order
    if not triggered:
        return False, True, None
    return True, record.solvable, None


def claim_cited_2_3(record: AnalysisRecord, config: AnalysisConfig):
    triggered = 3 * record.degree_sum > 2 * record.order
    if not triggered:
        return False, True, None
    return True, record.nilpotent, None


def claim_half_equiv(record: AnalysisRecord, config: AnalysisConfig):
    direct = 2 * record.degree_sum > record.order
    witness = record.half_lhs < record.half_rhs
    ok = (direct == witness) and (record.half_verdict == direct)
    return True, ok, None


def claim_iso_invariance(record: AnalysisRecord, config: AnalysisConfig):
    if not record.iso_rows:
        return False, True, None
    bad = [r for r in record.iso_rows if not (r["t_equal"] and r["d_equal"])]
    detail = (
        "; ".join(f"product with {r['factor']} broke invariance" for r in bad) or None
    )
    return True, not bad, detail


_CLAIM_FUNCS = {
    "THM_1_1": claim_thm_1_1,
    "THM_1_2": claim_thm_1_2,
    "THM_1_3": claim_thm_1_3,
    "THM_1_4": claim_thm_1_4,
    "LEM_2_1": claim_lem_2_1,
    "LEM_2_2": claim_lem_2_2,
    "LEM_2_3": claim_lem_2_3,
    "LEM_2_4": claim_lem_2_4,
    "LEM_2_5": claim_gallagher,
    "CITED_4_15": claim_cited_4_15,
    "CITED_2_3": claim_cited_2_3,
    "HALF_EQUIV": claim_half_equiv,
    "ISO_INVARIANCE": claim_iso_invariance,
    "GALLAGHER": claim_gallagher,
}


def evaluate_claim(claim_id: str, record: AnalysisRecord, config: AnalysisConfig):
    """(triggered, ok, detail) for one claim against one record."""
    func = _CLAIM_FUNCS.get(claim_id)
    if func is None:
        raise DomainError(f"unknown claim id {claim_id!r}")
    return func(record, config)


def verify_claims(
    records,
    claim_ids=None,
    config: AnalysisConfig | None = None,
) -> list[ClaimReport]:
    """Evaluate claims over a corpus of records; deterministic output order."""
    config = config or AnalysisConfig()
    claim_ids = tuple(claim_ids) if claim_ids else CLAIM_IDS
    ordered = sorted(records, key=lambda r: r.name)
    reports = []
    for claim_id in claim_ids:
        report = ClaimReport(claim_id)
        for record in ordered:
            triggered, ok, detail = evaluate_claim(claim_id, record, config)
            report.merge_result(record, triggered, ok, detail)
        reports.append(report)
    return reports


def verify_theorem(claim_id: str, records, config: AnalysisConfig | None = None) -> ClaimReport:
    return verify_claims(records, [claim_id], config)[0]


def verify_classical_bounds(records, config: AnalysisConfig | None = None) -> list[ClaimReport]:
    return verify_claims(
        records, ["LEM_2_1", "LEM_2_2", "LEM_2_3", "LEM_2_4", "CITED_4_15", "CITED_2_3"], config
    )


def theorem_verdicts(record: AnalysisRecord, config: AnalysisConfig | None = None) -> dict:
    """Per-theorem hypothesis/conclusion summary stored on analysis records."""
    config = config or AnalysisConfig()
    out = {}
    for claim_id in ("THM_1_1", "THM_1_2", "THM_1_3", "THM_1_4"):
        triggered, ok, detail = evaluate_claim(claim_id, record, config)
        entry = {"hypothesis": bool(triggered), "consistent": bool(ok)}
        if detail:
            entry["detail"] = detail
        out[claim_id] = entry
    return out


def gallagher_check(G: PermutationGroup, N: Subgroup, max_order: int = 48) -> ClaimReport:
    """Direct orbit-bound check for one (group, normal subgroup) pair."""
    if G.order > max_order:
        raise CapacityError(f"orbit-bound check cap {max_order} exceeded (|G| = {G.order})")
    if not N.normal:
        raise DomainError(f"{N.name} is not normal in {G.name}")
    rows = gallagher_orbit_rows(G, N)
    report = ClaimReport("GALLAGHER")
    report.groups_checked = 1
    report.hypotheses_triggered = 1
    report.triggered_groups.append(G.name)
    for row in rows:
        if not row["ok"]:
            report.counterexamples.append({"group": G.name, **row})
    return report


def stem_partner_report(groups, search_cap: int = 24, order_cap: int = 24) -> list[dict]:
    """For small non-stem groups, look for a stem-compatible smaller partner.

    Informational: rows record whether some corpus group of at most the same
    order is isoclinic to the given one; capacity misses are reported, never
    asserted away.
    """
    small = [G for G in groups if G.order <= order_cap]
    rows = []
    for G in small:
        if stem_check(G):
            continue
        partner = None
        capped = False
        for H in sorted(small, key=lambda x: (x.order, x.name)):
            if H.order > G.order or H.name == G.name:
                continue
            try:
                if are_isoclinic(G, H, quotient_cap=search_cap):
                    partner = H.name
                    break
            except CapacityError:
                capped = True
        rows.append(
            {
                "group": G.name,
                "order": G.order,
                "partner": partner,
                "search_capped": capped,
            }
        )
    return rows
