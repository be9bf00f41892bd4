"""Named instances with known automorphism orders and normality verdicts.

Each row pins reference values for one concrete graph. Generators
are written in coordinates of the listed group: in ``Z2xZ2``, ``a=(1,0)``
and ``b=(0,1)``; in ``ZnxZ2`` the cyclic part comes first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import make_group
from .graphs import ConnectionSpec
from .theory import Verdict, evaluate


@dataclass(frozen=True)
class GoldenCase:
    name: str
    source: str
    factors: tuple[int, ...]
    R: tuple
    L: tuple
    expected: dict = field(default_factory=dict)

    def spec(self) -> ConnectionSpec:
        return ConnectionSpec.make(make_group(self.factors), self.R, self.L)


@dataclass(frozen=True)
class GoldenRow:
    case: GoldenCase
    field: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


def _cyc(n, k=1):
    return ((k % n,), (-k % n,))


def golden_cases() -> list[GoldenCase]:
    cases = [
        GoldenCase("P4", "empty L", (2,), ((1,),), (),
                   dict(aut_order=2, vertex_transitive=False, normal=True)),
        GoldenCase("pendant C4 over Z2xZ2", "empty L", (2, 2), ((1, 0), (0, 1)), (),
                   dict(aut_order=8, vertex_transitive=False, normal=True)),
        GoldenCase("C4", "small cycle", (2,), ((1,),), ((1,),),
                   dict(aut_order=8, vertex_transitive=True, normal=False)),
        GoldenCase("C8", "small cycle", (2, 2), ((1, 0),), ((0, 1),),
                   dict(aut_order=16, vertex_transitive=True, normal=False)),
        GoldenCase("L inside R", "one-element L", (2, 2), ((1, 0), (0, 1)), ((1, 0),),
                   dict(aut_order=4, normal=True)),
        GoldenCase("Z4, L={2}", "one-element L", (4,), _cyc(4), ((2,),),
                   dict(aut_order=8, normal=True)),
        GoldenCase("Z4xZ2, L={b}", "one-element L", (4, 2), ((1, 0), (3, 0)), ((0, 1),),
                   dict(aut_order=16, normal=True)),
        GoldenCase("Z6, L={3}", "one-element L", (6,), _cyc(6), ((3,),),
                   dict(aut_order=12, normal=True)),
        GoldenCase("cube from involutions", "prism", (2, 2), ((1, 0), (0, 1)), ((1, 0), (0, 1)),
                   dict(aut_order=48, vertex_transitive=True, arc_transitive=True, normal=False)),
        GoldenCase("cube as 4-prism", "prism", (4,), _cyc(4), _cyc(4),
                   dict(aut_order=48, vertex_transitive=True, arc_transitive=True, normal=False)),
        GoldenCase("Z2xZ2, L={a+b,b}", "elementary 2-group", (2, 2), ((1, 0), (0, 1)), ((1, 1), (0, 1)),
                   dict(vertex_transitive=True, normal=False)),
        GoldenCase("Z2^3, L={b,c}", "elementary 2-group", (2, 2, 2), ((1, 0, 0), (0, 1, 0)), ((0, 1, 0), (0, 0, 1)),
                   dict(vertex_transitive=True, normal=False)),
        GoldenCase("Z2^3, L={a+b,c}", "two involutions", (2, 2, 2), ((1, 0, 0), (0, 1, 0)), ((1, 1, 0), (0, 0, 1)),
                   dict(vertex_transitive=False, normal=True)),
        GoldenCase("Z2^4, L={c,d}", "two involutions", (2, 2, 2, 2),
                   ((1, 0, 0, 0), (0, 1, 0, 0)), ((0, 0, 1, 0), (0, 0, 0, 1)),
                   dict(aut_order=128, vertex_transitive=True, normal=True)),
        GoldenCase("Z6xZ2, R={b,3a}", "two involutions", (6, 2), ((0, 1), (3, 0)), ((1, 0), (5, 0)),
                   dict(aut_order=24, vertex_transitive=False, normal=True)),
        GoldenCase("Z6xZ2, R={b,3a+b}", "two involutions", (6, 2), ((0, 1), (3, 1)), ((1, 0), (5, 0)),
                   dict(aut_order=24, vertex_transitive=False, normal=True)),
        GoldenCase("Z4xZ2, R={b,2a+b}", "two involutions", (4, 2), ((0, 1), (2, 1)), ((1, 0), (3, 0)),
                   dict(vertex_transitive=True, normal=False)),
        GoldenCase("Z10xZ2, L={+-3a+b}", "cyclic R", (10, 2), _cyc2(10), ((3, 1), (7, 1)),
                   dict(arc_transitive=True, normal=False)),
        GoldenCase("Z10xZ2, L={+-2a+b}", "cyclic R", (10, 2), _cyc2(10), ((2, 1), (8, 1)),
                   dict(arc_transitive=True, normal=False)),
        GoldenCase("Z4xZ2, L={+-a+b}", "cyclic R", (4, 2), _cyc2(4), ((1, 1), (3, 1)),
                   dict(vertex_transitive=True, normal=False)),
        GoldenCase("Z3xZ3, L={+-b}", "cyclic R and L", (3, 3), ((1, 0), (2, 0)), ((0, 1), (0, 2)),
                   dict(vertex_transitive=True, normal=True)),
        GoldenCase("Z3xZ4, L={+-b}", "cyclic R and L", (3, 4), ((1, 0), (2, 0)), ((0, 1), (0, 3)),
                   dict(vertex_transitive=False, normal=True)),
    ]
    for n in (3, 5, 6, 7, 8, 12):
        cases.append(GoldenCase(f"pendant C{n}", "empty L", (n,), _cyc(n), (),
                                dict(aut_order=2 * n, vertex_transitive=False, normal=True)))
    for k in (3, 5, 6, 7, 8):
        cases.append(GoldenCase(f"{k}-prism", "prism", (k,), _cyc(k), _cyc(k),
                                dict(aut_order=4 * k, vertex_transitive=True, arc_transitive=False, normal=True)))
    for n in (3, 4, 5, 6):
        normal = n != 4
        cases.append(GoldenCase(f"Z2xZ2xZ{n}, L={{+-c}}", "two involutions", (2, 2, n),
                                ((1, 0, 0), (0, 1, 0)), ((0, 0, 1), (0, 0, n - 1)),
                                dict(vertex_transitive=not normal, normal=normal)))
    for n, k in ((5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)):
        cases.append(GoldenCase(f"GP({n},{k})", "Petersen family", (n,), _cyc(n), _cyc(n, k),
                                dict(vertex_transitive=True, arc_transitive=True, normal=False)))
    for n, k in ((6, 2), (7, 2), (9, 2)):
        cases.append(GoldenCase(f"GP({n},{k})", "Petersen family", (n,), _cyc(n), _cyc(n, k),
                                dict(normal=True)))
    return cases


def _cyc2(n):
    return ((1, 0), (n - 1, 0))


def run_golden_suite(cases: list[GoldenCase] | None = None) -> list[GoldenRow]:
    rows = []
    for case in cases or golden_cases():
        verdict: Verdict = evaluate(case.spec())
        for key, expected in case.expected.items():
            rows.append(GoldenRow(case, key, expected, getattr(verdict, key)))
    return rows


def format_golden(rows: list[GoldenRow]) -> str:
    lines = []
    for row in rows:
        status = "PASS" if row.passed else "FAIL"
        lines.append(
            f"{status}  {row.case.source:<19} {row.case.name:<26} {row.field}: "
            f"expected {row.expected}, got {row.actual}"
        )
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} golden checks passed")
    return "\n".join(lines)
