import csv
import io
import json

import pytest

from semicayley import ConnectionSpec, make_group
from semicayley.cli import main
from semicayley.errors import ParseError, PreconditionError
from semicayley.golden import golden_cases, run_golden_suite
from semicayley.parse import parse_element, parse_element_set, parse_group
from semicayley.sweep import CSV_COLUMNS, SweepConfig, connection_sets, enumerate_instances, run_sweep


# --- enumeration -----------------------------------------------------------


def test_order_two_has_two_instances():
    specs = list(enumerate_instances(SweepConfig(max_group_order=2)))
    assert [(sorted(s.R), sorted(s.L)) for s in specs] == [([(1,)], [(1,)]), ([(1,)], [])]


def test_connection_sets_are_inverse_closed():
    for G in (make_group([8]), make_group([4, 2]), make_group([2, 2, 2])):
        for S in connection_sets(G):
            assert G.identity not in S
            assert all(G.neg(x) in S for x in S)
            assert len(S) <= 2


def test_emitted_specs_are_valid_and_connected():
    for spec in enumerate_instances(SweepConfig(max_group_order=12)):
        assert isinstance(spec, ConnectionSpec)
        assert spec.connected
        assert spec.one_matching


def test_dedupe_keeps_one_representative_per_orbit():
    cfg = SweepConfig(max_group_order=8, dedupe=False)
    full = list(enumerate_instances(cfg))
    reduced = list(enumerate_instances(SweepConfig(max_group_order=8)))
    assert len(reduced) < len(full)
    assert set(map(str, reduced)) <= set(map(str, full))


def test_dedupe_does_not_change_the_outcome():
    def profile(report):
        return {(v.group, v.aut_order, v.normal, v.vertex_transitive, v.edge_transitive, v.theorem_case)
                for v in report.verdicts}

    deduped = run_sweep(SweepConfig(max_group_order=10))
    full = run_sweep(SweepConfig(max_group_order=10, dedupe=False))
    assert profile(deduped) == profile(full)
    assert bool(deduped.discrepancies) == bool(full.discrepancies)


def test_sweep_config_validation():
    with pytest.raises(PreconditionError):
        SweepConfig(max_group_order=1)
    with pytest.raises(PreconditionError):
        SweepConfig(output_format="xml")
    with pytest.raises(PreconditionError):
        SweepConfig(workers=0)


# --- sweep reports ---------------------------------------------------------


def test_small_sweep_exceptional_members_are_non_normal_and_transitive():
    report = run_sweep(SweepConfig(max_group_order=4))
    assert not report.violations
    assert not report.errors
    members = [v for v in report.verdicts if v.theorem_case != "none"]
    assert {v.theorem_case for v in members} == {"case1", "case2", "case3"}
    for v in members:
        assert not v.normal
        assert v.vertex_transitive


def test_order_three_sweep_is_verified():
    assert run_sweep(SweepConfig(max_group_order=3)).verified


def test_reports_identical_across_worker_counts():
    one = run_sweep(SweepConfig(max_group_order=12, workers=1))
    two = run_sweep(SweepConfig(max_group_order=12, workers=2))
    for fmt in ("json", "csv", "text"):
        assert one.render(fmt) == two.render(fmt)


def test_sweep_covers_every_family(sweep24):
    covered = set(sweep24.summary()["cases_covered"])
    assert covered == set(range(1, 9))
    gp_pairs = {(int(v.witness["n"]), int(v.witness["k"])) for v in sweep24.verdicts
                if v.witness and v.witness["case"] == 6}
    assert gp_pairs == {(5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)}


def test_intransitive_instances_are_normal(sweep24):
    for v in sweep24.verdicts:
        if not v.vertex_transitive:
            assert v.normal, v


def test_known_gaps_in_the_classifier(sweep24):
    # The two non-normal instances outside the eight families (kept as a regression record).
    gaps = {(v.group, v.R, v.L) for v in sweep24.discrepancies}
    assert gaps == {
        ("Z2xZ2", "{(0,1),(1,0)}", "{(0,1),(1,0)}"),
        ("Z2xZ2xZ2", "{(0,0,1),(0,1,0)}", "{(1,0,0),(1,1,1)}"),
    }


def test_json_and_csv_schema():
    report = run_sweep(SweepConfig(max_group_order=4))
    data = json.loads(report.to_json())
    assert set(data) == {"verdicts", "summary", "discrepancies", "violations"}
    assert data["summary"]["instances"] == len(report.verdicts)
    rows = list(csv.reader(io.StringIO(report.to_csv())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == len(report.verdicts) + 1


def test_dump_graphs(tmp_path):
    run_sweep(SweepConfig(max_group_order=3, dump_graphs=True), dump_dir=str(tmp_path))
    assert sorted(p.name for p in tmp_path.iterdir())[:2] == ["instance_0000.json", "instance_0000.txt"]


# --- golden table ----------------------------------------------------------


def test_golden_rows_are_well_formed():
    cases = golden_cases()
    assert len({c.name for c in cases}) == len(cases)
    for case in cases:
        assert case.expected
        case.spec()


def test_golden_suite_failures_are_limited_to_the_known_row():
    failed = [r for r in run_golden_suite() if not r.passed]
    assert [(r.case.name, r.field, r.expected, r.actual) for r in failed] == [
        ("Z6xZ2, R={b,3a+b}", "aut_order", 24, 48)
    ]


# --- parsing ---------------------------------------------------------------


def test_parse_group():
    assert parse_group("Z10xZ2").factors == (10, 2)
    assert parse_group(" Z4 x Z2 x Z2 ").factors == (4, 2, 2)
    assert parse_group("Z4*Z2").factors == (4, 2)


@pytest.mark.parametrize("text,position", [("Z4xY2", 3), ("Z1", 1), ("Z4Z2", 2), ("", 0)])
def test_parse_group_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_group(text)
    assert info.value.position == position


def test_parse_elements():
    G = make_group([4, 2])
    assert parse_element("(1,0)", G) == (1, 0)
    assert parse_element("(-1, 1)", G) == (3, 1)
    assert parse_element("3", make_group([5])) == (3,)
    assert parse_element_set("{(1,0),(3,0)}", G) == {(1, 0), (3, 0)}
    assert parse_element_set("", G) == frozenset()
    assert parse_element_set("(1),(3)", make_group([4])) == {(1,), (3,)}


def test_parse_element_set_positions():
    G = make_group([4])
    with pytest.raises(ParseError) as info:
        parse_element_set("(1),(x)", G)
    assert info.value.position == 5
    assert info.value.text == "(1),(x)"
    with pytest.raises(ParseError) as info:
        parse_element_set("(1),(3", G)
    assert info.value.position == 6
    with pytest.raises(ParseError):
        parse_element_set("(1,0)", G)


# --- command line ----------------------------------------------------------


def test_cli_classify_case3(capsys):
    assert main(["classify", "Z4", "--R", "(1),(3)", "--L", "(1),(3)"]) == 0
    out = capsys.readouterr().out
    assert "case3" in out
    assert "normal: False" in out
    assert "vertex-transitive: True" in out


def test_cli_classify_json(capsys):
    assert main(["classify", "Z5", "--R", "(1),(4)", "--L", "(2),(3)", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["theorem_case"] == "case6"
    assert data["normal"] is False
    assert data["arc_transitive"] is True


def test_cli_classify_reports_discrepancy(capsys):
    assert main(["classify", "Z2xZ2", "--R", "(1,0),(0,1)", "--L", "(1,0),(0,1)"]) == 1
    assert "DISCREPANCY" in capsys.readouterr().out


def test_cli_gp(capsys):
    assert main(["gp", "5", "2"]) == 0
    out = capsys.readouterr().out
    assert "arc-transitive" in out and "120" in out


def test_cli_aut(capsys, tmp_path):
    target = tmp_path / "g.json"
    assert main(["aut", "Z6", "--R", "(1),(5)", "--L", "(3)", "--dump-graph", str(target)]) == 0
    assert "|Aut| = 12" in capsys.readouterr().out
    assert json.loads(target.read_text())["n"] == 12


def test_cli_sweep(capsys):
    assert main(["sweep", "--max-order", "2", "--format", "json"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["summary"]["instances"] == 2
    assert data["discrepancies"] == []
    assert "2 instances, 0 discrepancies" in captured.err


def test_cli_sweep_csv_to_file(tmp_path, capsys):
    out = tmp_path / "s.csv"
    # order 4 contains the cube over Z2xZ2, a discrepancy, so the exit status is 1
    assert main(["sweep", "--max-order", "6", "--format", "csv", "--no-dedupe", "--output", str(out)]) == 1
    assert out.read_text().startswith(",".join(CSV_COLUMNS))
    assert "3 discrepancies" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "Z4", "--R", "(1),(x)", "--L", ""],
        ["classify", "Z4", "--R", "(1)", "--L", ""],
        ["classify", "Z4x", "--R", "(1),(3)", "--L", ""],
        ["classify", "Z4", "--R", "", "--L", ""],
        ["gp", "6", "3"],
        ["nonsense"],
        [],
    ],
)
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_cli_parse_error_points_at_column(capsys):
    main(["classify", "Z4", "--R", "(1),(x)", "--L", ""])
    err = capsys.readouterr().err
    lines = err.splitlines()
    assert "position 5" in lines[0]
    assert lines[2].index("^") == lines[1].index("(x)") + 1


def test_cli_golden_exit_code(capsys):
    assert main(["golden"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "golden checks passed" in out
