"""Corpus verification: criterion predictions versus brute force.

For every requested criterion the driver evaluates the invariant-level
predicate, computes the two automorphism subgroups it talks about with
the search engine, compares them as sets, and records whether prediction
and observation agree.  The parameterised criteria (COR_2_3, COR_2_4,
COR_2_5) are swept over every admissible tuple of normal subgroups; each
tuple contributes one row.

JSON reports are line-delimited with exactly the fields {group, order,
prime, criterion, predicted, observed, match, clause, elapsed_ms}; rows
are sorted by (group name, criterion id) with the deterministic sweep
order preserved inside a criterion.  Skipped brute-force confirmations
(automorphism bound exceeded without --force) leave observed and match
null; the reason only appears in the text rendering.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import automorphisms as aut
from . import criteria as crit
from .catalog import GroupSpec, build_group, catalog
from .errors import (
    AbelianInputError,
    ClassNotTwoError,
    OrderBoundExceededError,
)
from .groups import FiniteGroup, Subgroup, subgroup_product

SINGLE_CRITERIA = {
    crit.COR_2_6: (aut.IA_STAR, aut.CENTRAL, crit.cor_2_6),
    crit.COR_2_7: (aut.CENTRAL, aut.C_STAR, crit.cor_2_7),
    crit.COR_2_8: (aut.IA, aut.IA_STAR, crit.cor_2_8),
    crit.COR_2_9: (aut.IA_STAR, aut.C_STAR, crit.cor_2_9),
    crit.COR_2_10: (aut.IA, aut.C_STAR, crit.cor_2_10),
    crit.THM_2_12: (aut.IA, aut.CENTRAL, crit.thm_2_12),
}

SWEEP_CRITERIA = (crit.COR_2_3, crit.COR_2_4, crit.COR_2_5)


@dataclass
class Row:
    group: str
    order: int
    prime: int
    criterion: str
    predicted: bool | None
    observed: bool | None
    match: bool | None
    clause: str
    elapsed_ms: float
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(
            {
                "group": self.group,
                "order": self.order,
                "prime": self.prime,
                "criterion": self.criterion,
                "predicted": self.predicted,
                "observed": self.observed,
                "match": self.match,
                "clause": self.clause,
                "elapsed_ms": self.elapsed_ms,
            }
        )


@dataclass
class Report:
    group: str
    order: int
    prime: int | None
    summary: dict[str, str]
    rows: list[Row] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(r.match is not False for r in self.rows)

    @property
    def mismatches(self) -> list[Row]:
        return [r for r in self.rows if r.match is False]


def group_summary(g: FiniteGroup, p: int | None) -> dict[str, str]:
    """The invariant block printed by analyze and at the top of reports."""
    summary: dict[str, str] = {"order": str(g.n)}
    summary["prime"] = str(p) if p else "-"
    if g.n == 1:
        summary["abelian"] = "yes"
        return summary
    if g.is_abelian():
        summary["abelian"] = "yes"
        summary["type"] = str(g.abelian_partition(p))
        summary["exp"] = str(g.exponent())
        summary["d"] = str(g.burnside_rank())
        summary["cl"] = "1"
        return summary
    z = g.center()
    d = g.derived_subgroup()
    summary["abelian"] = "no"
    summary["|Z|"] = str(z.order)
    summary["Z"] = str(z.partition(p))
    summary["|G'|"] = str(d.order)
    dg, _ = d.as_group()
    summary["G'"] = str(dg.abelian_partition(p)) if dg.is_abelian() else "(non-abelian)"
    summary["G/G'"] = str(g.quotient(d).group.abelian_partition(p))
    gz = g.quotient(subgroup_product(d, z)).group
    summary["G/G'Z"] = str(gz.abelian_partition(p))
    qz = g.quotient(z).group
    summary["G/Z"] = str(qz.abelian_partition(p)) if qz.is_abelian() else "(non-abelian)"
    summary["cl"] = str(g.nilpotence_class())
    summary["d"] = str(g.burnside_rank())
    summary["exp"] = str(g.exponent())
    summary["purely_nonabelian"] = "yes" if g.is_purely_nonabelian()[0] else "no"
    return summary


def center_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """All subgroups of Z(G), as subgroups of G, deterministically ordered."""
    def compute():
        z = g.center()
        zg, back = z.as_group()
        subs = [
            g.subgroup(frozenset(back[i] for i in s.members), check=False)
            for s in zg.all_subgroups()
        ]
        subs.sort(key=lambda s: (s.order, s.sorted_members))
        return subs

    return g._memo("center_subgroups", compute)


def sweep_2_3(g: FiniteGroup):
    """Admissible (M1, N1, M2, N2) tuples: all normal, M_i <= Z(G) and
    M_i <= N_i, M1 <= M2, N2 <= N1."""
    normals = g.normal_subgroups()
    zsubs = center_subgroups(g)
    for n1 in normals:
        for n2 in normals:
            if not n2.members <= n1.members:
                continue
            m2_cands = [m for m in zsubs if m.members <= n2.members]
            for m2 in m2_cands:
                for m1 in m2_cands:
                    if m1.members <= m2.members:
                        yield m1, n1, m2, n2


def sweep_2_45(g: FiniteGroup):
    """Admissible (M, N) pairs with M <= Z(G) <= N, both normal."""
    z = g.center()
    normals = [n for n in g.normal_subgroups() if z.members <= n.members]
    for n in normals:
        for m in center_subgroups(g):
            yield m, n


class _Engine:
    """Memoised access to the brute-force automorphism subgroups of one
    group."""

    def __init__(self, g: FiniteGroup, bound: int | None):
        self.g = g
        self.bound = bound
        self._pairs: dict = {}

    def distinguished(self, tag: str) -> aut.AutSet:
        return aut.distinguished(self.g, tag, bound=self.bound)

    def upper_lower(self, m: Subgroup, n: Subgroup) -> aut.AutSet:
        key = (m.members, n.members)
        if key not in self._pairs:
            self._pairs[key] = aut.aut_upper_lower(self.g, m, n, bound=self.bound)
        return self._pairs[key]


def verify_group(
    name: str,
    g: FiniteGroup,
    criteria_filter: list[str] | None = None,
    force: bool = False,
    explicit: bool = False,
) -> Report:
    """Run criteria against brute force for one group.

    ``explicit`` means the caller asked for these criteria by id, so an
    inapplicable criterion raises instead of being skipped.
    """
    pp = g.prime_power()
    p = pp[0] if pp else None
    report = Report(name, g.n, p, group_summary(g, p))
    selected = list(criteria_filter) if criteria_filter else list(crit.CRITERION_IDS)
    for c in selected:
        if c not in crit.CRITERION_IDS:
            raise ValueError(f"unknown criterion id {c!r}")
    if g.n == 1 or g.is_abelian():
        if explicit:
            raise AbelianInputError(
                f"{name} is abelian; criteria apply to non-abelian p-groups only"
            )
        report.notes.append("abelian input: all criteria skipped (ABELIAN_INPUT)")
        return report
    bound = max(aut.aut_bound(), g.n) if force else None
    engine = _Engine(g, bound)
    for cid in selected:
        if cid in SINGLE_CRITERIA:
            _run_single(report, engine, name, g, p, cid, explicit)
        else:
            _run_sweep(report, engine, name, g, p, cid)
    report.rows.sort(key=lambda r: (r.group, r.criterion))
    return report


def _run_single(report, engine, name, g, p, cid, explicit):
    left_tag, right_tag, predicate = SINGLE_CRITERIA[cid]
    t0 = time.perf_counter()
    try:
        verdict = predicate(g)
    except ClassNotTwoError as exc:
        if explicit:
            raise
        report.notes.append(f"{cid}: skipped ({exc})")
        return
    observed, note = _observe(
        lambda: aut.autset_equal(engine.distinguished(left_tag),
                                 engine.distinguished(right_tag))
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    report.rows.append(
        Row(
            name, g.n, p, cid,
            verdict.predicted_equal, observed,
            None if observed is None else observed == verdict.predicted_equal,
            verdict.clause, round(elapsed, 3), note,
        )
    )


def _run_sweep(report, engine, name, g, p, cid):
    if cid == crit.COR_2_3:
        tuples = sweep_2_3(g)
    else:
        tuples = ((m, n) for m, n in sweep_2_45(g))
    for tup in tuples:
        t0 = time.perf_counter()
        if cid == crit.COR_2_3:
            m1, n1, m2, n2 = tup
            verdict = crit.cor_2_3(g, m1, n1, m2, n2)
            observed, note = _observe(
                lambda: aut.autset_equal(engine.upper_lower(m1, n1),
                                         engine.upper_lower(m2, n2))
            )
            desc = (f"M1={m1.describe()} N1={n1.describe()} "
                    f"M2={m2.describe()} N2={n2.describe()}")
        else:
            m, n = tup
            if cid == crit.COR_2_4:
                verdict = crit.cor_2_4(g, m, n)
                target = aut.C_STAR
            else:
                verdict = crit.cor_2_5(g, m, n)
                target = aut.CENTRAL
            observed, note = _observe(
                lambda: aut.autset_equal(engine.upper_lower(m, n),
                                         engine.distinguished(target))
            )
            desc = f"M={m.describe()} N={n.describe()}"
        elapsed = (time.perf_counter() - t0) * 1000.0
        report.rows.append(
            Row(
                name, g.n, p, cid,
                verdict.predicted_equal, observed,
                None if observed is None else observed == verdict.predicted_equal,
                verdict.clause, round(elapsed, 3),
                note or desc,
            )
        )


def _observe(thunk):
    try:
        return thunk(), ""
    except OrderBoundExceededError as exc:
        return None, f"skipped: {exc}"


def verify_specs(
    specs: list[GroupSpec],
    criteria_filter: list[str] | None = None,
    force: bool = False,
) -> list[Report]:
    reports = []
    for spec in sorted(specs, key=lambda s: s.name):
        g = build_group(spec)
        reports.append(verify_group(spec.name, g, criteria_filter, force))
    return reports


def select_specs(max_order: int | None = None, prime: int | None = None) -> list[GroupSpec]:
    specs = []
    for spec in catalog():
        if prime is not None and spec.prime != prime:
            continue
        if max_order is not None and build_group(spec).n > max_order:
            continue
        specs.append(spec)
    return specs


def reports_to_json_lines(reports: list[Report]) -> str:
    return "\n".join(row.to_json() for rep in reports for row in rep.rows) + "\n"


def report_to_text(report: Report, verbose: bool = False) -> str:
    lines = [f"== {report.group} =="]
    lines.append("  " + "  ".join(f"{k}={v}" for k, v in report.summary.items()))
    for note in report.notes:
        lines.append(f"  note: {note}")
    by_crit: dict[str, list[Row]] = {}
    for row in report.rows:
        by_crit.setdefault(row.criterion, []).append(row)
    for cid, rows in sorted(by_crit.items()):
        n_match = sum(1 for r in rows if r.match)
        n_skip = sum(1 for r in rows if r.match is None)
        n_bad = sum(1 for r in rows if r.match is False)
        if len(rows) == 1:
            r = rows[0]
            status = "MATCH" if r.match else ("SKIPPED" if r.match is None else "MISMATCH")
            lines.append(
                f"  {cid:10s} predicted={_tf(r.predicted)} observed={_tf(r.observed)}"
                f" clause={r.clause:20s} {status}"
            )
        else:
            status = "MISMATCH" if n_bad else ("PARTIAL" if n_skip else "MATCH")
            lines.append(
                f"  {cid:10s} tuples={len(rows)} match={n_match} skipped={n_skip}"
                f" mismatch={n_bad} {status}"
            )
        shown = rows if verbose else [r for r in rows if r.match is False]
        for r in shown:
            if len(rows) > 1:
                lines.append(
                    f"    predicted={_tf(r.predicted)} observed={_tf(r.observed)}"
                    f" clause={r.clause} {r.note}"
                )
    return "\n".join(lines)


def _tf(v) -> str:
    return "-" if v is None else ("true" if v else "false")
