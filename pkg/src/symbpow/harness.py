"""Batch machinery: named checks, suites over one ideal, randomized scans.

A suite runs a selection of checks over small parameter grids against one
ideal and tallies the outcomes.  A scan generates a pseudo-random corpus
(square-free ideals come from intersecting a minimal family of monomial
primes, which doubles as a free oracle for the associated primes) and runs
a suite on each member, collecting failures of proven statements (bugs)
and failures of conjectured ones (candidate counterexamples) into a
findings list with enough detail to reproduce each one.

Reports serialize two ways: human-oriented text, and line-delimited JSON
with sorted keys, exact "p/q" rationals, and no wall-clock timings, so a
rerun with the same seed is byte-identical.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import product

from . import results as R
from .decomposition import associated_primes
from .errors import ResourceLimitError
from .geometry import check_stairs_containment, member_scaled, symbolic_polyhedron
from .invariants import (check_alpha_equality, check_alpha_lower,
                         check_alpha_slope, check_chudnovsky,
                         check_equigenerated_containment,
                         check_integrally_closed_bound)
from .monomial import Monomial, MonomialIdeal, intersect
from .parsing import default_names, format_ideal
from .results import CheckResult, encode_value
from .rng import SplitRng
from .symbolic import (check_equal_exponent_containment,
                       check_refined_containment, check_squarefree_containment,
                       check_support_step, check_symbolic_step, symbolic_power)


@dataclass(frozen=True)
class SuiteRanges:
    m_max: int = 3
    t_max: int = 3
    r_max: int = 3
    alpha_m_cap: int = 6
    stairs_samples: int = 8
    slope_threshold_cap: int = 12


def check_polyhedron_bound(I: MonomialIdeal, m: int) -> CheckResult:
    """Every minimal generator of the m-th symbolic power has exponent
    vector inside m times the symbolic polyhedron."""
    if m < 1:
        raise ValueError("m must be at least 1")
    start = time.perf_counter()
    Q = symbolic_polyhedron(I)
    sym = symbolic_power(I, m)
    bad = next((g for g in sym.gens
                if not member_scaled(Q, g.exponents, m)), None)
    return CheckResult(
        name="polyhedron_bound",
        verdict=R.HOLDS if bad is None else R.FAILS,
        params={"m": m},
        details={"gens_checked": len(sym.gens)},
        witness=bad,
        elapsed=time.perf_counter() - start)


def _suite_plan(names, ranges: SuiteRanges, seed: int):
    """Yield (check_name, params, thunk) for each selected run."""
    grids = {
        "squarefree_containment": lambda I: [
            ({"m": m, "t": t, "r": r},
             lambda I=I, m=m, t=t, r=r: check_squarefree_containment(I, m, t, r))
            for m, t, r in product(range(1, ranges.m_max + 1),
                                   range(1, ranges.t_max + 1),
                                   range(1, ranges.r_max + 1))],
        "equal_exponent_containment": lambda I: [
            ({"m": m, "t": t, "r": r},
             lambda I=I, m=m, t=t, r=r: check_equal_exponent_containment(I, m, t, r))
            for m, t, r in product(range(1, ranges.m_max + 1),
                                   range(1, ranges.t_max + 1),
                                   range(1, ranges.r_max + 1))],
        "symbolic_step": lambda I: [
            ({"r": r}, lambda I=I, r=r: check_symbolic_step(I, r))
            for r in range(1, ranges.r_max + 1)],
        "support_step": lambda I: [
            ({"r": r}, lambda I=I, r=r: check_support_step(I, r))
            for r in range(1, ranges.r_max + 1)],
        "refined_containment": lambda I: [
            ({"r": r}, lambda I=I, r=r: check_refined_containment(I, r))
            for r in range(1, ranges.r_max + 1)],
        "polyhedron_bound": lambda I: [
            ({"m": m}, lambda I=I, m=m: check_polyhedron_bound(I, m))
            for m in range(1, ranges.m_max + 1)],
        "alpha_lower": lambda I: [
            ({"m": m}, lambda I=I, m=m: check_alpha_lower(I, m))
            for m in range(1, ranges.alpha_m_cap + 1)],
        "stairs": lambda I: [
            ({"r": r}, lambda I=I, r=r: check_stairs_containment(
                I, r, ranges.stairs_samples, seed))
            for r in range(1, ranges.r_max + 1)],
        "alpha_slope": lambda I: [
            ({"r": r}, lambda I=I, r=r: check_alpha_slope(
                I, r, threshold_cap=ranges.slope_threshold_cap))
            for r in range(1, ranges.r_max + 1)],
        "chudnovsky": lambda I: [({}, lambda I=I: check_chudnovsky(I))],
        "equigenerated_containment": lambda I: [
            ({"r": r}, lambda I=I, r=r: check_equigenerated_containment(I, r))
            for r in range(1, ranges.r_max + 1)],
        "alpha_equality": lambda I: [
            ({"r": r}, lambda I=I, r=r: check_alpha_equality(I, r))
            for r in range(1, ranges.r_max + 1)],
        "integrally_closed_bound": lambda I: [
            ({}, lambda I=I: check_integrally_closed_bound(I))],
    }
    for name in names:
        if name not in grids:
            raise ValueError(f"unknown check {name!r}")
    return grids, list(names)


CHECK_NAMES = (
    "squarefree_containment",
    "equal_exponent_containment",
    "symbolic_step",
    "support_step",
    "refined_containment",
    "polyhedron_bound",
    "alpha_lower",
    "stairs",
    "alpha_slope",
    "chudnovsky",
    "equigenerated_containment",
    "alpha_equality",
    "integrally_closed_bound",
)


@dataclass(frozen=True)
class SuiteReport:
    ideal: MonomialIdeal
    names: tuple[str, ...]
    results: tuple[CheckResult, ...]
    label: str | None = None

    @property
    def summary(self) -> dict:
        tally = {"holds": 0, "bug": 0, "candidate": 0, "fails": 0,
                 "not_applicable": 0, "resource_limit": 0}
        for res in self.results:
            tally[res.classify()] += 1
        return tally

    @property
    def has_bug(self) -> bool:
        return any(res.classify() == "bug" for res in self.results)


def run_suite(I: MonomialIdeal, checks=None, ranges: SuiteRanges | None = None,
              seed: int = 0, names=None, label: str | None = None) -> SuiteReport:
    if I.is_zero or I.is_unit:
        raise ValueError("suites need a proper non-zero ideal")
    ranges = ranges or SuiteRanges()
    selected = tuple(checks) if checks else CHECK_NAMES
    grids, order = _suite_plan(selected, ranges, seed)
    results = []
    for name in order:
        for params, thunk in grids[name](I):
            try:
                results.append(thunk())
            except ResourceLimitError as exc:
                results.append(CheckResult(
                    name=name, verdict=R.RESOURCE_LIMIT, params=params,
                    details={"reason": str(exc)}))
    if names is None:
        names = default_names(I.ambient_dim)
    return SuiteReport(I, tuple(names), tuple(results), label)


# ---------------------------------------------------------------------------
# randomized scans


@dataclass(frozen=True)
class ScanConfig:
    count: int = 20
    seed: int = 0
    num_vars: tuple[int, ...] = (3, 4)
    max_exp: int = 4
    max_gens: int = 6
    squarefree_only: bool = False
    checks: tuple[str, ...] | None = None
    ranges: SuiteRanges = field(default_factory=SuiteRanges)


def _random_prime_family(rng: SplitRng, nvars: int):
    """A minimal family (no containments) of at least two variable subsets."""
    for _ in range(64):
        count = rng.randint(2, min(4, nvars + 1))
        fam: list[tuple[int, ...]] = []
        for j in range(count):
            size = rng.child(f"size{j}").randint(1, max(1, nvars - 1))
            fam.append(tuple(rng.child(f"pick{j}").subset(range(nvars), size)))
        fam = sorted(set(fam))
        fam = [p for p in fam
               if not any(q != p and set(q) <= set(p) for q in fam)]
        if len(fam) >= 2:
            return fam
        rng = rng.child("retry")
    raise RuntimeError("could not draw a minimal prime family")


def _random_squarefree(rng: SplitRng, nvars: int):
    fam = _random_prime_family(rng, nvars)
    ideal = None
    for p in fam:
        gens = [Monomial(tuple(1 if i == v else 0 for i in range(nvars)))
                for v in p]
        prime = MonomialIdeal.make(nvars, gens)
        ideal = prime if ideal is None else intersect(ideal, prime)
    return ideal, fam


def _random_general(rng: SplitRng, nvars: int, max_exp: int, max_gens: int):
    for attempt in range(64):
        sub = rng.child(f"try{attempt}")
        count = sub.randint(2, max_gens)
        gens = []
        for j in range(count):
            g = sub.child(f"gen{j}")
            vec = tuple(g.randint(0, max_exp) for _ in range(nvars))
            gens.append(Monomial(vec))
        I = MonomialIdeal.make(nvars, gens)
        if I.is_proper:
            return I
    raise RuntimeError("could not draw a proper ideal")


def _ass_oracle_result(I: MonomialIdeal, fam) -> CheckResult:
    """The associated primes of an intersection of a minimal prime family
    must be exactly that family; anything else is a bug."""
    start = time.perf_counter()
    expected = sorted(tuple(p) for p in fam)
    got = sorted(P.variables for P in associated_primes(I))
    return CheckResult(
        name="ass_oracle",
        verdict=R.HOLDS if expected == got else R.FAILS,
        details={"expected": [list(p) for p in expected],
                 "got": [list(p) for p in got]},
        elapsed=time.perf_counter() - start)


@dataclass(frozen=True)
class ScanReport:
    config: ScanConfig
    suites: tuple[SuiteReport, ...]

    @property
    def summary(self) -> dict:
        tally = {"ideals": len(self.suites), "holds": 0, "bug": 0,
                 "candidate": 0, "fails": 0, "not_applicable": 0,
                 "resource_limit": 0}
        for suite in self.suites:
            for key, val in suite.summary.items():
                tally[key] += val
        return tally

    @property
    def has_bug(self) -> bool:
        return any(s.has_bug for s in self.suites)

    def findings(self) -> list[dict]:
        out = []
        for suite in self.suites:
            for res in suite.results:
                cls = res.classify()
                if cls in ("bug", "candidate"):
                    out.append({
                        "classification": cls,
                        "label": suite.label,
                        "ideal": format_ideal(suite.ideal, suite.names),
                        "result": result_to_dict(res, suite.names),
                    })
        return out


def scan(config: ScanConfig) -> ScanReport:
    root = SplitRng(config.seed, ("scan",))
    suites = []
    for i in range(config.count):
        rng = root.child(f"ideal{i}")
        nvars = config.num_vars[rng.randint(0, len(config.num_vars) - 1)]
        sqfree = config.squarefree_only or rng.randint(0, 1) == 0
        extra = []
        if sqfree:
            I, fam = _random_squarefree(rng.child("sqfree"), nvars)
            extra.append(_ass_oracle_result(I, fam))
        else:
            I = _random_general(rng.child("general"), nvars,
                                config.max_exp, config.max_gens)
        label = f"scan-{config.seed}-{i:03d}"
        suite = run_suite(I, checks=config.checks, ranges=config.ranges,
                          seed=config.seed, label=label)
        suite = SuiteReport(suite.ideal, suite.names,
                            tuple(extra) + suite.results, label)
        suites.append(suite)
    return ScanReport(config, tuple(suites))


# ---------------------------------------------------------------------------
# serialization


def result_to_dict(res: CheckResult, names) -> dict:
    return {
        "check": res.name,
        "verdict": res.verdict,
        "kind": res.kind,
        "classification": res.classify(),
        "in_hypothesis": res.in_hypothesis,
        "params": {k: encode_value(v) for k, v in sorted(res.params.items())},
        "details": {k: encode_value(v) for k, v in sorted(res.details.items())},
        "witness": None if res.witness is None else res.witness.render(names),
    }


def _result_line(res: CheckResult, names, timings: bool) -> str:
    bits = [res.name]
    if res.params:
        bits.append(" ".join(f"{k}={encode_value(v)}"
                             for k, v in sorted(res.params.items())))
    verdict = res.classify()
    line = f"  {' '.join(bits)}: {verdict}"
    if verdict == "candidate":
        line += " (conjecture fails)"
    if res.witness is not None:
        line += f"  witness={res.witness.render(names)}"
    if timings:
        line += f"  [{res.elapsed:.3f}s]"
    return line


def suite_text(report: SuiteReport, timings: bool = False) -> str:
    head = report.label or report.ideal.render(report.names)
    lines = [f"ideal: {head}"]
    lines.extend(_result_line(res, report.names, timings)
                 for res in report.results)
    s = report.summary
    lines.append(
        f"summary: {s['holds']} holds, {s['bug']} bugs, "
        f"{s['candidate']} candidates, {s['not_applicable']} not applicable, "
        f"{s['resource_limit']} resource-limited")
    return "\n".join(lines) + "\n"


def suite_jsonl(report: SuiteReport) -> str:
    lines = [json.dumps({
        "type": "ideal",
        "label": report.label,
        "vars": list(report.names),
        "gens": [g.render(report.names) for g in report.ideal.gens],
    }, sort_keys=True)]
    for res in report.results:
        lines.append(json.dumps({"type": "check"} | result_to_dict(res, report.names),
                                sort_keys=True))
    lines.append(json.dumps({"type": "summary"} | report.summary, sort_keys=True))
    return "\n".join(lines) + "\n"


def scan_text(report: ScanReport, timings: bool = False) -> str:
    parts = [suite_text(s, timings) for s in report.suites]
    s = report.summary
    parts.append(
        f"scan summary: {s['ideals']} ideals, {s['holds']} holds, "
        f"{s['bug']} bugs, {s['candidate']} candidates, "
        f"{s['not_applicable']} not applicable, "
        f"{s['resource_limit']} resource-limited\n")
    return "\n".join(parts)


def scan_jsonl(report: ScanReport) -> str:
    lines = []
    for suite in report.suites:
        lines.append(suite_jsonl(suite).rstrip("\n"))
    lines.append(json.dumps({"type": "scan_summary"} | report.summary,
                            sort_keys=True))
    return "\n".join(lines) + "\n"


def findings_jsonl(report: ScanReport) -> str:
    return "".join(json.dumps(f, sort_keys=True) + "\n"
                   for f in report.findings())
