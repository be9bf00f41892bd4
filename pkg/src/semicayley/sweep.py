"""Instance enumeration and the exhaustive normality sweep."""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .abelian import AbelianGroup, Element, enumerate_abelian_groups, enumerate_automorphisms
from .errors import PreconditionError, SemiCayleyError
from .graphs import ConnectionSpec, build_sc_graph
from .theory import Verdict, evaluate

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepConfig:
    max_group_order: int = 24
    include_disconnected: bool = False
    workers: int = 1
    output_format: str = "json"
    dump_graphs: bool = False
    dedupe: bool = True

    def __post_init__(self):
        if self.max_group_order < 2:
            raise PreconditionError("max_group_order must be at least 2")
        if self.output_format not in ("json", "csv", "text"):
            raise PreconditionError(f"unknown output format {self.output_format!r}")
        if self.workers < 1:
            raise PreconditionError("workers must be at least 1")


def connection_sets(G: AbelianGroup, max_size: int = 2) -> list[frozenset[Element]]:
    """Inverse-closed subsets of ``G`` without the identity, of size <= ``max_size``.

    Ordered largest first, then lexicographically on sorted elements.
    """
    out = {frozenset()}
    nonzero = [x for x in G.elements if x != G.identity]
    for x in nonzero:
        closed = frozenset([x, G.neg(x)])
        if len(closed) <= max_size:
            out.add(closed)
    if max_size >= 2:
        invol = [x for x in nonzero if G.neg(x) == x]
        for x, y in itertools.combinations(invol, 2):
            out.add(frozenset([x, y]))
    return sorted(out, key=lambda s: (-len(s), sorted(s)))


def enumerate_instances(cfg: SweepConfig) -> Iterator[ConnectionSpec]:
    """Connection specs for every abelian group of order 2..max_group_order.

    With ``dedupe`` only one representative per orbit of ``Aut(G)`` acting on
    ``(R, L)`` pairs, with ``(R, L) ~ (L, R)``, is emitted; the first pair met
    in enumeration order (so ``|R| >= |L|``) represents its orbit.
    """
    for order in range(2, cfg.max_group_order + 1):
        for G in enumerate_abelian_groups(order):
            yield from _group_instances(G, cfg)


def _group_instances(G: AbelianGroup, cfg: SweepConfig) -> Iterator[ConnectionSpec]:
    sets = connection_sets(G)
    auts = enumerate_automorphisms(G) if cfg.dedupe else []
    seen: set[tuple[frozenset, frozenset]] = set()
    for R, L in itertools.product(sets, repeat=2):
        if not R and not L:
            continue
        if (R, L) in seen:
            continue
        spec = ConnectionSpec(G, R, L)
        if not cfg.include_disconnected and not spec.connected:
            continue
        if cfg.dedupe:
            for sigma in auts:
                R2 = frozenset(G.elements[sigma.table[G.index(x)]] for x in R)
                L2 = frozenset(G.elements[sigma.table[G.index(x)]] for x in L)
                seen.add((R2, L2))
                seen.add((L2, R2))
        yield spec


def _evaluate_safe(spec: ConnectionSpec) -> Verdict:
    try:
        return evaluate(spec)
    except SemiCayleyError as exc:
        return Verdict(
            group=spec.group.name, R=spec.format_set(spec.R), L=spec.format_set(spec.L),
            group_order=spec.group.order, connected=spec.connected, aut_order=0, normal=False,
            vertex_transitive=False, edge_transitive=False, arc_transitive=False, x_size=0,
            y_size=0, stabilizer_order=0, normalizer_order=None, lifts_in_aut=False,
            theorem_case="n/a", matched_cases=[], witness=None,
            error=f"{type(exc).__name__}: {exc}",
        )


@dataclass
class SweepReport:
    verdicts: list[Verdict]
    config: SweepConfig
    discrepancies: list[Verdict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    errors: list[Verdict] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.discrepancies and not self.errors

    def summary(self) -> dict:
        per_case: dict[str, int] = {}
        for v in self.verdicts:
            if not v.normal and v.connected and not v.error:
                per_case[v.theorem_case] = per_case.get(v.theorem_case, 0) + 1
        covered = sorted({c for v in self.verdicts for c in v.matched_cases})
        return {
            "max_group_order": self.config.max_group_order,
            "instances": len(self.verdicts),
            "normal": sum(v.normal for v in self.verdicts if not v.error),
            "non_normal": sum(not v.normal for v in self.verdicts if not v.error),
            "non_normal_by_case": dict(sorted(per_case.items())),
            "cases_covered": covered,
            "discrepancies": len(self.discrepancies),
            "structural_violations": len(self.violations),
            "errors": len(self.errors),
        }

    def to_json(self) -> str:
        data = {
            "verdicts": [v.to_dict() for v in self.verdicts],
            "summary": self.summary(),
            "discrepancies": [_row_key(v) for v in self.discrepancies],
            "violations": self.violations,
        }
        return json.dumps(data, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for v in self.verdicts:
            w.writerow([
                v.group, v.R, v.L, v.aut_order, int(v.normal), int(v.vertex_transitive),
                int(v.edge_transitive), int(v.arc_transitive), v.theorem_case, v.x_size, v.y_size,
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for v in self.verdicts:
            flag = " <-- DISCREPANCY" if v.discrepancy else ""
            if v.error:
                lines.append(f"SC({v.group}; {v.R}, {v.L})  ERROR {v.error}")
                continue
            lines.append(
                f"SC({v.group}; {v.R}, {v.L})  |Aut|={v.aut_order} "
                f"{'normal' if v.normal else 'non-normal'} "
                f"vt={int(v.vertex_transitive)} et={int(v.edge_transitive)} at={int(v.arc_transitive)} "
                f"{v.theorem_case}{flag}"
            )
        for k, val in self.summary().items():
            lines.append(f"# {k}: {val}")
        for item in self.violations:
            lines.append(f"# violation: {item['instance']}: {item['property']}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str | None = None) -> str:
        fmt = fmt or self.config.output_format
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()


CSV_COLUMNS = ("group", "R", "L", "aut_order", "normal", "vt", "et", "at", "case", "x_size", "y_size")


def _row_key(v: Verdict) -> str:
    return f"SC({v.group}; {v.R}, {v.L})"


def structural_violations(v: Verdict) -> list[str]:
    """Properties every connected instance must satisfy; returns the ones that fail."""
    if v.error or not v.connected:
        return []
    out = []
    if not v.lifts_in_aut:
        out.append("X u Y not contained in Aut")
    if v.y_size and not v.vertex_transitive:
        out.append("Y nonempty but intransitive")
    if v.normal and v.stabilizer_order != v.x_size:
        out.append("normal but vertex stabilizer differs from X")
    if v.edge_transitive and v.normal:
        out.append("edge-transitive but normal")
    if v.theorem_case != "none" and not v.vertex_transitive:
        out.append("exceptional case but intransitive")
    if not v.normal and not v.vertex_transitive:
        out.append("non-normal but intransitive")
    if v.normalizer_order is not None and v.normalizer_order != v.group_order * (v.x_size + v.y_size):
        out.append("normalizer order differs from |G|*|X u Y|")
    return out


def run_sweep(cfg: SweepConfig, dump_dir: str | None = None) -> SweepReport:
    """Evaluate every enumerated instance; row order never depends on ``workers``."""
    specs = sorted(enumerate_instances(cfg), key=lambda s: s.key)
    log.info("sweep over groups of order <= %d: %d instances", cfg.max_group_order, len(specs))
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            verdicts = list(pool.map(_evaluate_safe, specs, chunksize=4))
    else:
        verdicts = [_evaluate_safe(s) for s in specs]
    if cfg.dump_graphs and dump_dir:
        _dump(specs, dump_dir)
    report = SweepReport(verdicts, cfg)
    for v in verdicts:
        if v.error:
            report.errors.append(v)
        elif v.discrepancy:
            report.discrepancies.append(v)
        for prop in structural_violations(v):
            report.violations.append({"instance": _row_key(v), "property": prop})
    return report


def _dump(specs, dump_dir: str):
    path = Path(dump_dir)
    path.mkdir(parents=True, exist_ok=True)
    for i, spec in enumerate(specs):
        graph = build_sc_graph(spec)
        (path / f"instance_{i:04d}.txt").write_text(f"c {spec}\n" + graph.to_edge_list())
        (path / f"instance_{i:04d}.json").write_text(graph.to_json())
