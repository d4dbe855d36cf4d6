"""Verification suites behind ``sl2ext verify``.

Each suite returns a list of :class:`Check` records; a suite passes when
every record passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .engine import ExtEngine, LeafStatus, expand_trace, stability_profile
from .golden import GoldenRow, load_table
from .h2 import ext2_self_tower, h2_cross_check
from .strings import (
    count_c_strings,
    doubling_family,
    enumerate_b_strings,
    growth_bounds,
    is_c_string,
    partitions_of_unity,
)

__all__ = ["Check", "SUITES", "run_suite", "check_table_rows"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    expected: object = None
    actual: object = None

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        if self.ok:
            return f"{status:4} {self.name}"
        return f"{status:4} {self.name}: expected {self.expected}, actual {self.actual}"


def check_table_rows(rows: Iterable[GoldenRow], golden: Iterable[GoldenRow], label: str) -> list[Check]:
    """Compare rows (from the engine or a parsed file) against golden rows by degree."""
    got = {r.m: r for r in rows}
    out = []
    for g in golden:
        r = got.get(g.m)
        name = f"{label} m={g.m} weight={g.weight}"
        if r is None:
            out.append(Check(name, False, g.expected, "missing"))
        elif r.weight != g.weight:
            out.append(Check(name, False, f"weight {g.weight}", f"weight {r.weight}"))
        else:
            out.append(Check(name, r.expected == g.expected, g.expected, r.expected))
    return out


def suite_tables(engine: ExtEngine) -> list[Check]:
    out = []
    for label in ("self-twist", "r3-twist"):
        golden = load_table(label)
        rows = [GoldenRow(g.m, g.weight, engine.cohomology_dim(g.m, g.weight, 2)) for g in golden]
        out += check_table_rows(rows, golden, label)
    return out


def suite_theorem1(engine: ExtEngine) -> list[Check]:
    return [
        Check(f"p={p} n={n}", ext2_self_tower(n, p) == n, n, ext2_self_tower(n, p))
        for p in (5, 7)
        for n in range(0, 9)
    ]


def suite_h2_cross(engine: ExtEngine) -> list[Check]:
    out = []
    for p in (5, 7):
        bad = h2_cross_check(p, 2 * p**3, engine)
        out.append(Check(f"p={p} mu<={2 * p**3} disagreements", not bad, [], bad))
    return out


def suite_bijection(engine: ExtEngine) -> list[Check]:
    out = []
    for m in range(1, 11):
        for n in range(1, 11):
            bs = list(enumerate_b_strings(m, n))
            dim = engine.cohomology_dim(m, 2**n, 2)
            ok = len(bs) == dim
            if ok and m <= 8 and n <= 8 and bs:
                nontrivial = {
                    t.a_string for t in expand_trace(m, 2**n) if t.status is LeafStatus.NONTRIVIAL
                }
                recovered = [b.a_string for b in bs]
                ok = len(set(recovered)) == len(recovered) and set(recovered) <= nontrivial
            out.append(Check(f"m={m} n={n} |b-strings| = dim", ok, dim, len(bs)))
    return out


def suite_stability(engine: ExtEngine) -> list[Check]:
    out = []
    for m in range(2, 11):
        prof = stability_profile(m, m + 3, engine)
        stable = prof[m]
        ok = all(v < stable for v in prof[:m]) and all(v == stable for v in prof[m:])
        out.append(Check(f"m={m} profile", ok, f"< {stable} below r={m}, = {stable} after", prof))
    return out


def suite_bounds(engine: ExtEngine) -> list[Check]:
    out = []
    for m in range(2, 32):
        triple = (partitions_of_unity(m), count_c_strings(m - 1), engine.cohomology_dim(m, 2**m, 2))
        out.append(Check(f"chain m={m}", len(set(triple)) == 1, "all equal", triple))
    for m in range(3, 13):
        dim = engine.cohomology_dim(2 * m, 2 ** (2 * m), 2)
        out.append(Check(f"theorem bound m={m}", dim >= 2 ** (m - 1), f">= {2 ** (m - 1)}", dim))
    for t in range(0, 13):
        fam = doubling_family(t)
        ok = len(fam) == 2**t and all(len(c) == 2 * t + 1 and is_c_string(c) for c in fam)
        out.append(Check(f"doubling t={t}", ok, 2**t, len(fam)))
    report = growth_bounds(30)
    for k in sorted(report.counts):
        if k in report.upper_ok:
            ok = report.upper_ok[k] and report.lower_ok[k]
            out.append(Check(f"fib/2^(k-1) bounds k={k}", ok, "within", report.counts[k]))
    ratio = report.ratios[30]
    out.append(Check("ratio count(31)/count(30) (approx.)", 1.79 <= ratio <= 1.80, "[1.79, 1.80]", round(ratio, 6)))
    return out


SUITES: dict[str, Callable[[ExtEngine], list[Check]]] = {
    "tables": suite_tables,
    "theorem1": suite_theorem1,
    "h2-cross": suite_h2_cross,
    "bijection": suite_bijection,
    "stability": suite_stability,
    "bounds": suite_bounds,
}


def run_suite(name: str, engine: ExtEngine | None = None) -> list[Check]:
    engine = engine or ExtEngine()
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(engine)]
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return suite(engine)
