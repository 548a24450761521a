from __future__ import annotations

import json

import pytest

from starroute.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_neighbors_lists_links_and_directions(capsys):
    code, out, _ = run(capsys, "neighbors", "1234")
    assert code == 0
    assert out.splitlines() == ["2 2134 out", "3 3214 out", "4 4231 in"]


def test_neighbors_other_scheme(capsys):
    code, out, _ = run(capsys, "neighbors", "12345", "--scheme", "day-tripathi")
    assert code == 0
    assert [line.split()[2] for line in out.splitlines()] == ["out", "in", "out", "in"]


def test_classify_output(capsys):
    code, out, _ = run(capsys, "classify", "21435", "12345")
    assert code == 0
    assert out.splitlines() == [
        "S: 5",
        "SL:",
        "SR: 5",
        "ULL:",
        "URR:",
        "ULR: 4",
        "URL: 3",
        "X: 3 4",
        "chi=1 cycles=2",
    ]


def test_route_default_prints_length_only(capsys):
    code, out, _ = run(capsys, "route", "24135", "12345")
    assert code == 0
    assert out == "hops=5\n"


def test_route_trace_lines(capsys):
    code, out, _ = run(capsys, "route", "24135", "12345", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 24135 --4--> 34125 final-crossing case=3.1 phase=2"
    assert lines[-1] == "hops=5"
    assert len(lines) == 6


def test_route_json_document(capsys):
    code, out, _ = run(capsys, "route", "24135", "12345", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["source"] == "24135" and doc["target"] == "12345"
    assert doc["scheme"] == "fujita"
    assert doc["length"] == 5
    assert doc["hops"][0] == {
        "index": 1,
        "node": "24135",
        "link": 4,
        "move": "final-crossing",
        "case": "3.1",
        "phase": 2,
    }


def test_route_classic_has_null_scheme(capsys):
    code, out, _ = run(capsys, "route", "14523", "12345", "--classic", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["scheme"] is None
    assert doc["length"] == 6


def test_distance_undirected_and_directed(capsys):
    code, out, _ = run(capsys, "distance", "12345", "32145")
    assert code == 0 and out == "1\n"
    code, out, _ = run(capsys, "distance", "12345", "32145", "--directed")
    assert code == 0 and out == "1\n"
    code, out, _ = run(capsys, "distance", "32145", "12345", "--directed")
    assert code == 0 and out.strip().isdigit() and int(out) > 1


def test_diameter_lines(capsys):
    code, out, _ = run(capsys, "diameter", "4", "--directed")
    assert code == 0
    assert out == "n=4 scheme=fujita directed=true diameter=9 witness=1243->1423\n"
    code, out, _ = run(capsys, "diameter", "5")
    assert code == 0
    assert out.startswith("n=5 scheme=- directed=false diameter=6 witness=")


def test_verify_pass_output_and_exit(capsys):
    code, out, _ = run(capsys, "verify", "4", "--checks", "route-validity,split-merge")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("route-validity: pass population=576 elapsed=")
    assert lines[1].startswith("split-merge: pass population=1728 elapsed=")
    assert lines[-1] == "overall: pass"


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "3..5", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "n,undirected,fujita,daytripathi,lower,upper,mode",
        "3,3,5,5,,,exhaustive",
        "4,4,9,9,,,exhaustive",
        "5,6,10,10,9,12,exhaustive",
    ]


def test_table_comma_list(capsys):
    code, out, _ = run(capsys, "table", "3,5", "--format", "csv")
    assert code == 0
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["3", "5"]


def test_witness_plain_and_bound(capsys):
    code, out, _ = run(capsys, "witness", "6")
    assert code == 0 and out == "134265\n"
    code, out, _ = run(capsys, "witness", "5", "--bound")
    assert code == 0
    assert out == (
        "n=5 witness=13254 variant=default distance=10 required=9 "
        "ok=true supports_2n=true\n"
    )


def test_bad_permutation_exits_two(capsys):
    code, out, err = run(capsys, "route", "123", "999")
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")


def test_mismatched_orders_exit_two(capsys):
    code, _, err = run(capsys, "distance", "1234", "12345")
    assert code == 2 and "error:" in err


def test_parser_knows_all_subcommands():
    parser = build_parser()
    text = parser.format_help()
    for name in (
        "neighbors",
        "classify",
        "route",
        "distance",
        "diameter",
        "verify",
        "table",
        "witness",
    ):
        assert name in text
