"""Executable verification checks with pass/fail results and numeric evidence.

Each check returns a :class:`CheckResult` whose evidence rows carry every
value compared, so a failure localizes immediately (enumeration, spectra, or
family constructors). Checks are deterministic given their seed.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
import time
from dataclasses import dataclass, field

from .census import enumerate_connected, get_census
from .classify import ClassKind, classify, is_bipartite, is_edge_cut
from .graphs import (
    FamilySpec,
    Graph,
    disjoint_union,
    delete_edges,
    family_graph,
    make_b_graph,
    make_cycle,
    make_s_graph,
)
from .graph6 import graph6_decode
from .spectral import (
    b_coeffs,
    char_poly,
    closed_form_charpoly,
    eigenvalues,
    energy,
    energy_coulson,
)
from .canon import canonical_g6

ENERGY_TIE_TOL = 1e-8

# Reference counts for the census classes; the (8,11) and (9,12) values are
# derived here by two independent generation strategies and frozen.
KNOWN_CLASS_COUNTS = {
    (4, 4): 2,
    (5, 5): 5,
    (5, 6): 5,
    (5, 7): 4,
    (5, 8): 2,
    (6, 7): 19,
    (6, 8): 22,
    (6, 9): 20,
    (7, 10): 132,
}
DERIVED_CLASS_COUNTS = {
    (8, 11): 814,
    (9, 12): 4495,
}


@dataclass(frozen=True)
class RankedGraph:
    graph6: str
    energy: float
    charpoly_digest: str


@dataclass(frozen=True)
class RankReport:
    """Energy-ordered census of one (n,e) class with tie diagnostics."""

    n: int
    e: int
    entries: tuple[RankedGraph, ...]
    ties: tuple[tuple[int, int, bool], ...]  # (index, index, cospectral)

    @property
    def minimal(self) -> RankedGraph:
        return self.entries[0]

    @property
    def second_minimal(self) -> RankedGraph:
        return self.entries[1]

    @property
    def third_minimal(self) -> RankedGraph:
        return self.entries[2]

    def nth(self, k: int) -> RankedGraph:
        return self.entries[k]


@dataclass
class CheckResult:
    name: str
    passed: bool
    evidence: list[dict] = field(default_factory=list)
    runtime: float = 0.0

    def failures(self) -> list[dict]:
        return [row for row in self.evidence if not row.get("ok", True)]


def _digest_poly(coeffs) -> str:
    payload = ",".join(str(c) for c in coeffs).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def rank_class(n: int, e: int, cache_dir=None) -> RankReport:
    """Enumerate the class, compute authoritative energies, sort, mark ties."""
    census = get_census(n, e, cache_dir)
    rows = []
    for s in census.graphs:
        g = graph6_decode(s)
        p = char_poly(g)
        rows.append((eigenvalues(g).energy, s, _digest_poly(p.coeffs), p.coeffs))
    rows.sort(key=lambda r: (r[0], r[1]))
    ties = []
    for i in range(len(rows) - 1):
        if rows[i + 1][0] - rows[i][0] <= ENERGY_TIE_TOL:
            ties.append((i, i + 1, rows[i][3] == rows[i + 1][3]))
    entries = tuple(RankedGraph(s, en, dig) for en, s, dig, _ in rows)
    return RankReport(n, e, entries, tuple(ties))


def _canon_of_family(text: str) -> str:
    g = family_graph(text)
    return canonical_g6(g.n, g.adj)


def _expect_rank(report: RankReport, index: int, family: str) -> dict:
    got = report.nth(index)
    want = _canon_of_family(family)
    gap = None
    if index + 1 < len(report.entries):
        gap = report.nth(index + 1).energy - got.energy
    return {
        "n": report.n,
        "e": report.e,
        "rank": index,
        "expected_family": family,
        "expected_graph6": want,
        "actual_graph6": got.graph6,
        "energy": got.energy,
        "gap_to_next": gap,
        "ok": got.graph6 == want,
    }


def _theorem_check(name: str, claims, cache_dir=None) -> CheckResult:
    t0 = time.time()
    evidence = []
    for n, e, rank_expect in claims:
        report = rank_class(n, e, cache_dir)
        for index, family in rank_expect:
            evidence.append(_expect_rank(report, index, family))
    evidence.append(
        {
            "item": "coverage-note",
            "detail": "exhaustive enumeration covers the orders listed above; "
            "larger orders are covered numerically by the family-inequalities check",
            "ok": True,
        }
    )
    passed = all(row["ok"] for row in evidence)
    return CheckResult(name, passed, evidence, time.time() - t0)


def check_theorem_bicyclic(cache_dir=None) -> CheckResult:
    """Minimal-energy families among connected (n, n+1)-graphs, 4 <= n <= 9."""
    claims = [
        (4, 5, [(0, "S 4 5")]),
        (5, 6, [(0, "B 5 6"), (1, "S 5 6")]),
        (6, 7, [(0, "B 6 7"), (2, "S 6 7")]),
        (7, 8, [(0, "B 7 8"), (1, "S 7 8")]),
        (8, 9, [(0, "S 8 9")]),
        (9, 10, [(0, "S 9 10")]),
    ]
    return _theorem_check("bicyclic", claims, cache_dir)


def check_theorem_tricyclic(cache_dir=None) -> CheckResult:
    """Minimal-energy families among connected (n, n+2)-graphs, 4 <= n <= 9."""
    claims = [
        (4, 6, [(0, "K 4")]),
        (5, 7, [(0, "S 5 7")]),
        (6, 8, [(0, "B 6 8"), (1, "S 6 8")]),
        (7, 9, [(0, "B 7 9")]),
        (8, 10, [(0, "B 8 10")]),
        (9, 11, [(0, "B 9 11")]),
    ]
    return _theorem_check("tricyclic", claims, cache_dir)


def check_theorem_tetracyclic(cache_dir=None) -> CheckResult:
    """Minimal-energy families among connected (n, n+3)-graphs, 5 <= n <= 9."""
    claims = [
        (5, 8, [(0, "W 5")]),
        (6, 9, [(0, "Kb 3 3"), (1, "S 6 9")]),
        (7, 10, [(0, "B 7 10"), (1, "S 7 10")]),
        (8, 11, [(0, "B 8 11")]),
        (9, 12, [(0, "B 9 12")]),
    ]
    return _theorem_check("tetracyclic", claims, cache_dir)


def _ineq(evidence: list, label: str, n: int, lhs_name: str, lhs: float,
          rel: str, rhs_name: str, rhs: float, margin_floor: float = 1e-9):
    ok = lhs < rhs - margin_floor if rel == "<" else lhs > rhs + margin_floor
    evidence.append(
        {
            "item": label,
            "n": n,
            "lhs": f"{lhs_name}={lhs:.10f}",
            "rel": rel,
            "rhs": f"{rhs_name}={rhs:.10f}",
            "margin": abs(rhs - lhs),
            "ok": ok,
        }
    )


def _union_energy_s_c3(n: int) -> float:
    return energy(disjoint_union(make_s_graph(n - 3, n - 3), make_cycle(3)))


def default_inequality_range() -> list[int]:
    return list(range(6, 21)) + [25, 30, 35, 40]


def check_family_inequalities(n_values=None) -> CheckResult:
    """Numeric verification of the pairwise family-energy inequalities."""
    t0 = time.time()
    ns = sorted(n_values) if n_values else default_inequality_range()
    ev: list[dict] = []

    # fixed reference energies, five decimals
    for fam, want in [
        ("K 4", 6.0),
        ("S 4 4", 4.96239),
        ("B 7 9", 7.21110),
        ("S 7 7", 6.64681),
        ("B 8 10", 7.91375),
        ("S 8 8", 7.07326),
        ("B 9 11", 8.46834),
        ("S 9 9", 7.46410),
        ("S 5 7", 6.0),
        ("S 5 5", 5.62721),
    ]:
        got = energy(family_graph(fam))
        ev.append(
            {
                "item": "reference-energies",
                "family": fam,
                "expected": want,
                "actual": got,
                "ok": abs(got - want) < 1e-5,
            }
        )

    for n in ns:
        # star-versus-bipartite regimes at e = n+1, n+2, n+3
        for e in (n + 1, n + 2, n + 3):
            if e > 2 * n - 3 or e > 2 * (n - 2):
                continue
            es, eb = energy(make_s_graph(n, e)), energy(make_b_graph(n, e))
            if e <= 1.5 * n - 3:
                _ineq(ev, "star-vs-bipartite", n, f"E(S({n},{e}))", es, "<", f"E(B({n},{e}))", eb)
            elif e >= 1.5 * n - 2.5:
                _ineq(ev, "star-vs-bipartite", n, f"E(B({n},{e}))", eb, "<", f"E(S({n},{e}))", es)

        u3 = _union_energy_s_c3(n)
        _ineq(ev, "triangle-union-vs-bicyclic", n, f"E(S({n - 3},{n - 3})+C3)", u3, ">",
              f"E(S({n},{n + 1}))", energy(make_s_graph(n, n + 1)))
        _ineq(ev, "bicyclic-vs-unicyclic", n, f"E(S({n},{n + 1}))",
              energy(make_s_graph(n, n + 1)), ">", f"E(S({n},{n}))", energy(make_s_graph(n, n)))
        _ineq(ev, "triangle-union-vs-tricyclic", n, f"E(S({n - 3},{n - 3})+C3)", u3, ">",
              f"E(S({n},{n + 2}))", energy(make_s_graph(n, n + 2)))
        _ineq(ev, "tricyclic-vs-unicyclic", n, f"E(S({n},{n + 2}))",
              energy(make_s_graph(n, n + 2)), ">", f"E(S({n},{n}))", energy(make_s_graph(n, n)))

        # quadrilateral union sits strictly below the triangle union
        if n >= 7:
            u4 = energy(disjoint_union(make_cycle(4), make_s_graph(n - 4, n - 4)))
            _ineq(ev, "quadrilateral-union-vs-triangle-union", n,
                  f"E(C4+S({n - 4},{n - 4}))", u4, "<", f"E(S({n - 3},{n - 3})+C3)", u3)

        # triangle union versus tetracyclic star family
        et = energy(make_s_graph(n, n + 3))
        if n <= 14:
            _ineq(ev, "triangle-union-vs-tetracyclic", n,
                  f"E(S({n - 3},{n - 3})+C3)", u3, ">", f"E(S({n},{n + 3}))", et)
        else:
            upper = 4 + math.sqrt(n - 1) + math.sqrt(n + 3)
            lower = 4 + math.sqrt(2) + 2 * math.sqrt(n - 4)
            _ineq(ev, "tetracyclic-star-upper-bound", n, f"E(S({n},{n + 3}))", et, "<",
                  "4+sqrt(n-1)+sqrt(n+3)", upper)
            _ineq(ev, "triangle-union-lower-bound", n, f"E(S({n - 3},{n - 3})+C3)", u3, ">",
                  "4+sqrt(2)+2*sqrt(n-4)", lower)
            _ineq(ev, "bound-chain", n, "upper", upper, "<", "lower", lower)

        # tetracyclic star/bipartite crossover at n = 12
        if n >= 7:
            es3, eb3 = energy(make_s_graph(n, n + 3)), energy(make_b_graph(n, n + 3))
            if n <= 11:
                _ineq(ev, "tetracyclic-crossover", n, f"E(B({n},{n + 3}))", eb3, "<",
                      f"E(S({n},{n + 3}))", es3)
            else:
                _ineq(ev, "tetracyclic-crossover", n, f"E(S({n},{n + 3}))", es3, "<",
                      f"E(B({n},{n + 3}))", eb3)

    # tricyclic-bipartite family against the unicyclic star family, 7..9
    for n in (7, 8, 9):
        _ineq(ev, "tricyclic-bipartite-vs-unicyclic", n, f"E(B({n},{n + 2}))",
              energy(make_b_graph(n, n + 2)), ">", f"E(S({n},{n}))", energy(make_s_graph(n, n)))
    _ineq(ev, "tricyclic-bipartite-vs-unicyclic", 4, "E(K4)", 6.0, ">",
          "E(S(4,4))", energy(make_s_graph(4, 4)))

    passed = all(row["ok"] for row in ev)
    return CheckResult("family-inequalities", passed, ev, time.time() - t0)


def check_closed_forms(n_values=range(6, 13)) -> CheckResult:
    """Exact agreement of computed polynomials with the reference closed forms."""
    t0 = time.time()
    ev = []
    for n in n_values:
        for e_off in (0, 2, 3):
            e = n + e_off
            spec = FamilySpec("s", (n, e))
            got = char_poly(make_s_graph(n, e)).coeffs
            want = closed_form_charpoly(spec).coeffs
            ev.append(
                {
                    "item": "closed-form",
                    "family": f"S({n},{e})",
                    "computed": list(got),
                    "closed_form": list(want),
                    "ok": got == want,
                }
            )
        b4 = b_coeffs(char_poly(make_s_graph(n, n + 3))).values[4]
        ev.append(
            {
                "item": "b4-correction",
                "n": n,
                "b4": b4,
                "expected": 4 * n - 24,
                "rejected_variant": 4 * n - 18,
                "ok": b4 == 4 * n - 24 and b4 != 4 * n - 18,
            }
        )
    passed = all(row["ok"] for row in ev)
    return CheckResult("closed-forms", passed, ev, time.time() - t0)


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def check_edge_cut_lemma(trials: int = 500, seed: int = 1729) -> CheckResult:
    """Energy never increases when an edge cut is deleted; seeded trials."""
    t0 = time.time()
    rng = random.Random(seed)
    ev = []
    violations = 0
    non_cut_logged = 0
    done = 0
    while done < trials:
        n = rng.randint(3, 10)
        g = _random_graph(rng, n, rng.uniform(0.25, 0.8))
        if g.e == 0:
            continue
        side = [v for v in range(n) if rng.random() < 0.5]
        if not side or len(side) == n:
            continue
        in_side = set(side)
        cut = [
            (u, v) for u, v in g.edges() if (u in in_side) != (v in in_side)
        ]
        if not cut:
            continue
        if not is_edge_cut(g, cut):
            raise RuntimeError("internal: crossing edge set failed the cut predicate")
        before, after = energy(g), energy(delete_edges(g, cut))
        ok = after <= before + 1e-9
        if not ok:
            violations += 1
        done += 1
        if not ok or done <= 5:
            ev.append(
                {
                    "item": "edge-cut-monotonicity",
                    "n": n,
                    "edges": g.e,
                    "cut_size": len(cut),
                    "energy_before": before,
                    "energy_after": after,
                    "ok": ok,
                }
            )
        # non-cut deletions may move energy either way; log the first few
        if non_cut_logged < 3 and g.e > len(cut):
            others = [ed for ed in g.edges() if ed not in cut]
            sub = rng.sample(others, 1)
            if not is_edge_cut(g, sub):
                ev.append(
                    {
                        "item": "non-cut-deletion (informational)",
                        "n": n,
                        "energy_before": before,
                        "energy_after": energy(delete_edges(g, sub)),
                        "ok": True,
                    }
                )
                non_cut_logged += 1
    ev.append(
        {
            "item": "summary",
            "trials": trials,
            "violations": violations,
            "seed": seed,
            "ok": violations == 0,
        }
    )
    return CheckResult("edge-cut", violations == 0, ev, time.time() - t0)


def check_census_counts(include_derived: bool = True) -> CheckResult:
    """Reference class counts, plus two-strategy agreement on the derived ones."""
    t0 = time.time()
    ev = []
    for (n, e), want in sorted(KNOWN_CLASS_COUNTS.items()):
        got = len(enumerate_connected(n, e))
        ev.append(
            {"item": "known-count", "n": n, "e": e, "expected": want, "actual": got,
             "ok": got == want}
        )
    if include_derived:
        for (n, e), want in sorted(DERIVED_CLASS_COUNTS.items()):
            edge = enumerate_connected(n, e)
            vertex = enumerate_connected(n, e, strategy="vertex")
            ev.append(
                {
                    "item": "derived-count",
                    "n": n,
                    "e": e,
                    "edge_strategy": len(edge),
                    "vertex_strategy": len(vertex),
                    "frozen": want,
                    "identical_censuses": edge.graphs == vertex.graphs,
                    "ok": len(edge) == len(vertex) == want
                    and edge.graphs == vertex.graphs,
                }
            )
    passed = all(row["ok"] for row in ev)
    return CheckResult("census", passed, ev, time.time() - t0)


# Vertex-disjoint class-2 counts per bicyclic census, frozen from enumeration,
# plus how many members flip to class 2 under an edge-disjoint reading (cycle
# pairs sharing a vertex but no edge exist from n = 5 on).
CLASS_SPLIT_EXPECTED = {
    (4, 5): {"class2": 0, "edge_reading_extra": 0},
    (5, 6): {"class2": 0, "edge_reading_extra": 1},
    (6, 7): {"class2": 1, "edge_reading_extra": 2},
    (7, 8): {"class2": 3, "edge_reading_extra": 7},
    (8, 9): {"class2": 13, "edge_reading_extra": 19},
}


def check_class_split(cache_dir=None) -> CheckResult:
    """Class-1/class-2 split of bicyclic censuses under both disjointness readings."""
    t0 = time.time()
    ev = []
    for (n, e), want in sorted(CLASS_SPLIT_EXPECTED.items()):
        census = get_census(n, e, cache_dir)
        class2 = 0
        edge_extra = 0
        witness_ok = True
        bipartite_ok = True
        for s in census.graphs:
            g = graph6_decode(s)
            label = classify(g)
            edge_label = classify(g, disjointness="edge")
            if label.kind == ClassKind.CLASS2:
                class2 += 1
                a, b = label.witness
                if (
                    len(a) % 2 == 0
                    or len(b) % 2 == 0
                    or (len(a) + len(b)) % 4 != 2
                    or set(a) & set(b)
                ):
                    witness_ok = False
            elif edge_label.kind == ClassKind.CLASS2:
                edge_extra += 1
            if is_bipartite(g) and label.kind != ClassKind.CLASS1:
                bipartite_ok = False
        ok = (
            class2 == want["class2"]
            and edge_extra == want["edge_reading_extra"]
            and witness_ok
            and bipartite_ok
        )
        ev.append(
            {
                "item": "class-split",
                "n": n,
                "e": e,
                "class1": len(census) - class2,
                "class2": class2,
                "edge_reading_extra_class2": edge_extra,
                "expected": want,
                "witnesses_valid": witness_ok,
                "bipartite_all_class1": bipartite_ok,
                "ok": ok,
            }
        )
    passed = all(row["ok"] for row in ev)
    return CheckResult("class-split", passed, ev, time.time() - t0)


def check_dual_energy(classes=((4, 4), (5, 6), (6, 8), (7, 10)), tol=1e-6) -> CheckResult:
    """Eigenvalue energy versus contour-integral energy over whole censuses."""
    t0 = time.time()
    ev = []
    worst = 0.0
    for n, e in classes:
        census = enumerate_connected(n, e)
        bad = 0
        for s in census.graphs:
            g = graph6_decode(s)
            diff = abs(energy(g) - energy_coulson(char_poly(g)).value)
            worst = max(worst, diff)
            if diff > tol:
                bad += 1
                ev.append(
                    {"item": "dual-energy", "graph6": s, "difference": diff, "ok": False}
                )
        ev.append(
            {
                "item": "dual-energy-class",
                "n": n,
                "e": e,
                "graphs": len(census),
                "violations": bad,
                "ok": bad == 0,
            }
        )
    ev.append({"item": "summary", "worst_difference": worst, "tolerance": tol, "ok": worst <= tol})
    passed = all(row["ok"] for row in ev)
    return CheckResult("dual-energy", passed, ev, time.time() - t0)


CHECKS = {
    "census": check_census_counts,
    "bicyclic": check_theorem_bicyclic,
    "tricyclic": check_theorem_tricyclic,
    "tetracyclic": check_theorem_tetracyclic,
    "closed-forms": check_closed_forms,
    "family-inequalities": check_family_inequalities,
    "edge-cut": check_edge_cut_lemma,
    "class-split": check_class_split,
    "dual-energy": check_dual_energy,
}


def run_checks(names=None, **kwargs) -> list[CheckResult]:
    selected = list(CHECKS) if not names or names == ["all"] else list(names)
    unknown = [x for x in selected if x not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    results = []
    for name in selected:
        fn = CHECKS[name]
        results.append(fn(**_filter_kwargs(fn, kwargs)))
    return results


def _filter_kwargs(fn, kwargs):
    import inspect

    params = inspect.signature(fn).parameters
    return {k: v for k, v in kwargs.items() if k in params and v is not None}


def render_text(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"=== {r.name}: {'PASS' if r.passed else 'FAIL'} "
                     f"({len(r.evidence)} evidence rows, {r.runtime:.2f}s)")
        rows = r.evidence if not r.passed else r.evidence[:12]
        for row in rows:
            mark = "ok " if row.get("ok", True) else "FAIL"
            detail = ", ".join(f"{k}={v}" for k, v in row.items() if k != "ok")
            lines.append(f"  [{mark}] {detail}")
        if r.passed and len(r.evidence) > 12:
            lines.append(f"  ... {len(r.evidence) - 12} more rows (all ok)")
    lines.append(
        f"result: {sum(r.passed for r in results)}/{len(results)} checks passed"
    )
    return "\n".join(lines)


def render_json(results: list[CheckResult]) -> str:
    payload = [
        {
            "name": r.name,
            "passed": r.passed,
            "runtime_seconds": round(r.runtime, 3),
            "evidence": r.evidence,
        }
        for r in results
    ]
    return json.dumps(payload, indent=2, sort_keys=True)
