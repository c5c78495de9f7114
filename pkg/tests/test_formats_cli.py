"""Input formats and the command-line interface."""

import contextlib
import io
import json
from pathlib import Path

import jsonschema
import pytest

from roundnorm.cli import main
from roundnorm.clutters import Clutter, Graph, cycle_graph, incidence_matrix
from roundnorm.errors import DomainError, ParseError
from roundnorm.exact import ExactMatrix
from roundnorm.formats import InputDocument, format_input, parse_input

DATA = Path(__file__).parent / "data"
SCHEMA = json.loads(
    (Path(__file__).parent.parent / "src" / "roundnorm"
     / "report_schema.json").read_text())


def run(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, (argv, code, err)
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    return report


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("inputs")
    (tmp / "pentagon.txt").write_text(
        format_input(InputDocument("matrix", incidence_matrix(cycle_graph(5)))))
    (tmp / "c3.txt").write_text(
        format_input(InputDocument("matrix", incidence_matrix(cycle_graph(3)))))
    (tmp / "c4g.txt").write_text(
        format_input(InputDocument("graph", cycle_graph(4))))
    (tmp / "c5g.txt").write_text(
        format_input(InputDocument("graph", cycle_graph(5))))
    (tmp / "tri.txt").write_text("clutter 3 / 1 2 / 2 3 / 1 3\n")
    (tmp / "bad.txt").write_text("matrix 2 2 / 1 0 / oops 1\n")
    return tmp


class TestTextParsing:
    def test_matrix_with_slash_rows(self):
        doc = parse_input("matrix 3 3 / 1 1 0 / 0 1 1 / 1 0 1")
        assert doc.kind == "matrix"
        assert sorted(doc.payload.columns()) == sorted(
            incidence_matrix(cycle_graph(3)).columns())

    def test_graph(self):
        doc = parse_input("graph 5 / 1 2 / 2 3 / 3 4 / 4 5 / 5 1")
        assert doc.kind == "graph" and doc.payload == cycle_graph(5)

    def test_clutter(self):
        doc = parse_input("clutter 3 / 1 2 / 2 3 / 1 3")
        assert doc.payload == cycle_graph(3).clutter()

    def test_newline_rows(self):
        doc = parse_input("matrix 2 2\n1 0\n0 1\n")
        assert doc.payload == ExactMatrix(((1, 0), (0, 1)))


class TestJsonParsing:
    def test_graph(self):
        doc = parse_input('{"kind": "graph", "vertices": 3, "edges": [[1,2],[2,3]]}')
        assert doc.payload == Graph.from_edges(3, [(1, 2), (2, 3)])

    def test_matrix(self):
        doc = parse_input('{"kind": "matrix", "entries": [[1,0],[1,1]]}')
        assert doc.payload == ExactMatrix(((1, 0), (1, 1)))

    def test_clutter_with_forced_format(self):
        doc = parse_input('{"kind": "clutter", "vertices": 2, "edges": [[1],[2]]}',
                          fmt="json")
        assert doc.payload == Clutter.from_edges(2, [(1,), (2,)])


class TestRoundTrips:
    @pytest.mark.parametrize("text", [
        "matrix 3 3 / 1 1 0 / 0 1 1 / 1 0 1",
        "graph 5 / 1 2 / 2 3 / 3 4 / 4 5 / 5 1",
        "clutter 4 / 1 2 / 2 3 4 / 1 3",
    ])
    def test_lossless(self, text):
        doc = parse_input(text)
        for fmt in ("text", "json"):
            assert parse_input(format_input(doc, fmt)) == doc


class TestParseErrors:
    @pytest.mark.parametrize("text,fragment", [
        ("", "empty"),
        ("widget 3 / 1 2", "unknown input kind"),
        ("matrix 2 / 1 0", "two dimensions"),
        ("matrix 2 2 / 1 0 / 0", "expected 2"),
        ("matrix 2 2 / 1 x / 0 1", "expected an integer"),
        ("matrix 0 2 / ", "must be positive"),
        ("graph 3 / 1 2 3", "expected 2"),
        ('{"kind": "matrix"}', "entries"),
        ('{"kind": "pasta"}', "unknown input kind"),
        ("{not json", "invalid JSON"),
    ])
    def test_messages(self, text, fragment):
        with pytest.raises(ParseError, match=fragment):
            parse_input(text)

    def test_positions_reported(self):
        with pytest.raises(ParseError) as e:
            parse_input("matrix 2 2 / 1 0 / 0 x")
        assert e.value.line == 1 and e.value.column is not None

    @pytest.mark.parametrize("text", [
        "matrix 2 2 / 0 0 / 1 1",
        "clutter 3 / 1 / 1 2",
        "graph 3 / 1 1",
        "graph 2 / 1 3",
    ])
    def test_semantic_violations_are_domain_errors(self, text):
        with pytest.raises(DomainError):
            parse_input(text)


class TestCommands:
    def test_ainvariant(self, files):
        r = run_json("ainvariant", "--matrix", str(files / "pentagon.txt"))
        assert r["result"]["a_invariant"] == -3 and r["result"]["gorenstein"]
        assert r["command"] == "ainvariant"
        assert len(r["input"]["sha256"]) == 64

    def test_irp_with_oracle(self, files):
        r = run_json("irp", "--system", "eq1", "--matrix", str(files / "c3.txt"),
                     "--oracle", "--box", "3")
        assert r["result"]["theorem_route"] is False
        assert r["result"]["oracle_route"] is False
        ce = r["result"]["counterexample"]
        assert ce[0] == [1, 1, 1] and ce[1] == "3/2" and ce[2] == 2
        assert ce[3] is None
        assert r["caps"]["oracle_box"] == 3

    def test_mfmc(self, files):
        r = run_json("mfmc", "--matrix", str(files / "c3.txt"))
        assert r["result"]["verdict"] is False
        assert r["result"]["fractional_vertex"] == ["1/2", "1/2", "1/2"]

    def test_duality(self, files):
        r = run_json("duality", "--clutter", str(files / "tri.txt"))
        assert r["result"]["verdict"] is True

    def test_normality(self, files):
        r = run_json("normality", "--matrix", str(files / "c3.txt"),
                     "--algebra", "rees")
        assert r["result"]["normal"] is True

    def test_canmod(self, files):
        r = run_json("canmod", "--matrix", str(files / "pentagon.txt"))
        assert r["result"]["a_invariant"] == -3
        assert r["result"]["omega_generators"] == [[1, 1, 1, 1, 1, 3]]
        assert r["result"]["gorenstein_route"] == "exact-degree-condition"

    def test_gorenstein(self, files):
        r = run_json("gorenstein", "--matrix", str(files / "pentagon.txt"))
        assert r["result"]["exact_degree_condition"] is True

    def test_ci_check(self, files):
        r = run_json("ci-check", "--graph", str(files / "c4g.txt"))
        assert r["result"]["complete_intersection"] is True
        assert r["result"]["primitive_cycle_count"] == 1

    def test_alexander_dual(self, files):
        r = run_json("alexander-dual", "--clutter", str(files / "tri.txt"))
        assert sorted(r["result"]["edges"]) == [[1, 2], [1, 3], [2, 3]]

    def test_vertices_downset_polytope(self, files):
        r = run_json("vertices", "--matrix", str(files / "c3.txt"))
        assert ["1/2", "1/2", "1/2"] in r["result"]["vertices"]
        assert r["result"]["integral"] is False

    def test_vertices_covering_polyhedron(self, files):
        r = run_json("vertices", "--matrix", str(files / "c3.txt"),
                     "--polyhedron", "geq1")
        assert r["result"]["rays"]

    def test_hilbert_basis(self, files):
        r = run_json("hilbert-basis", "--matrix", str(files / "c3.txt"))
        assert len(r["result"]["basis"]) >= 3

    def test_sweep_duality(self):
        r = run_json("sweep", "--kind", "duality", "--trials", "60", "--seed", "7")
        assert r["result"]["valid"] > 0 and r["result"]["all_agree"] is True
        assert r["input"]["kind"] == "none" and r["input"]["sha256"] is None

    def test_sweep_gorenstein_experiment(self):
        r = run_json("sweep", "--kind", "gorenstein", "--experiment",
                     "--max-vertices", "3")
        assert r["result"]["mismatch_count"] == 0
        assert all(row["denominators_in_one_two"]
                   for row in r["result"]["records"])


def strip_volatile(report):
    report = json.loads(json.dumps(report))
    report.pop("timings", None)
    report["input"].pop("source", None)
    return report


class TestGoldenReports:
    @pytest.mark.parametrize("name,argv_tail", [
        ("golden_canmod_pentagon", ("canmod",)),
        ("golden_mfmc_triangle", ("mfmc",)),
    ])
    def test_report_matches_golden(self, files, name, argv_tail):
        source = {"golden_canmod_pentagon": "pentagon.txt",
                  "golden_mfmc_triangle": "c3.txt"}[name]
        report = run_json(*argv_tail, "--matrix", str(files / source))
        golden = json.loads((DATA / f"{name}.json").read_text())
        assert strip_volatile(report) == golden


class TestStdinInput:
    def test_text(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("matrix 2 2 / 1 0 / 0 1"))
        r = run_json("ainvariant", "--stdin")
        assert r["result"]["a_invariant"] == -3
        assert r["input"]["source"] == "stdin"

    def test_json(self, monkeypatch):
        monkeypatch.setattr(
            "sys.stdin", io.StringIO('{"kind":"matrix","entries":[[1,0],[0,1]]}'))
        r = run_json("ainvariant", "--stdin", "--json")
        assert r["result"]["a_invariant"] == -3


class TestExitCodes:
    def test_parse_error(self, files):
        code, out, err = run("ainvariant", "--matrix", str(files / "bad.txt"))
        assert code == 1 and "error:" in err and out == ""

    def test_domain_error(self, files):
        code, _, err = run("ci-check", "--graph", str(files / "c5g.txt"))
        assert code == 1 and "bipartite" in err

    def test_wrong_input_kind_for_command(self, files):
        code, _, err = run("ci-check", "--matrix", str(files / "c3.txt"))
        assert code == 1 and "requires a graph" in err

    def test_missing_file(self, files):
        code, _, err = run("ainvariant", "--matrix", str(files / "missing.txt"))
        assert code == 1 and "cannot read" in err

    def test_two_inputs(self, files):
        code, _, err = run("ainvariant", "--graph", str(files / "c4g.txt"),
                           "--clutter", str(files / "tri.txt"))
        assert code == 1 and "exactly one" in err

    def test_kind_mismatch(self, files):
        code, _, err = run("ainvariant", "--clutter", str(files / "c4g.txt"))
        assert code == 1 and "passed as --clutter" in err

    def test_gorenstein_sweep_needs_experiment_flag(self):
        code, _, err = run("sweep", "--kind", "gorenstein")
        assert code == 1 and "--experiment" in err

    def test_missing_required_option(self, files):
        code, _, _ = run("irp", "--matrix", str(files / "c3.txt"))
        assert code == 1

    def test_unknown_command(self):
        code, _, _ = run("nonsense")
        assert code == 1

    def test_help(self):
        code, out, _ = run("irp", "--help")
        assert code == 0 and "usage" in out
