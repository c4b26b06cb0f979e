import io
import json

import pytest

from srgcover import constructions as c
from srgcover.cli import main
from srgcover.edgelist import (
    export_graph,
    format_edgelist,
    graph_from_json,
    graph_to_json,
    import_graph,
    parse_edgelist,
)
from srgcover.errors import ParseError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# ------------------------------------------------------------------ edge lists

@pytest.mark.parametrize("name", ["petersen", "paley:13", "crown:4", "kmm:2"])
def test_edgelist_round_trip(name):
    g = c.build(name)
    assert parse_edgelist(format_edgelist(g)) == g
    assert graph_from_json(graph_to_json(g)) == g


def test_edgelist_text_form():
    assert format_edgelist(c.cycle(3)) == "3 3\n0 1\n0 2\n1 2\n"


@pytest.mark.parametrize("text, line", [
    ("3 1\na b c\n", 2),
    ("3 2\n0 1\n", 2),
    ("3 1\n0 3\n", 2),
    ("3 1\n1 1\n", 2),
    ("x\n", 1),
    ("", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edgelist(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_json_errors():
    with pytest.raises(ParseError):
        graph_from_json({"order": 3})
    with pytest.raises(ParseError):
        graph_from_json({"order": 3, "edges": [[0, 5]]})


def test_file_round_trip(tmp_path):
    g = c.clebsch()
    for fmt, suffix in (("edgelist", ".txt"), ("json", ".json")):
        path = tmp_path / f"g{suffix}"
        export_graph(g, path, fmt)
        assert import_graph(path) == g


# ------------------------------------------------------------------------ CLI

def test_catalog_lists_every_entry():
    code, out, _ = run("catalog")
    assert code == 0
    assert all(name in out for name in c.CATALOG)
    code, out, _ = run("catalog", "--format", "json")
    assert len(json.loads(out)["entries"]) == len(c.CATALOG)


def test_show():
    code, out, _ = run("show", "petersen", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["srg"] == [10, 3, 0, 1] and info["diameter"] == 2


def test_cover_output_parses():
    code, out, _ = run("cover", "petersen")
    assert code == 0
    assert parse_edgelist(out).order == 20


def test_dspec_petersen():
    code, out, _ = run("dspec", "petersen")
    assert code == 0
    assert "{50^1, 0^14, (-2)^1, (-12)^4}" in out
    assert "PASS" in out


def test_dspec_from_file(tmp_path):
    path = tmp_path / "p.txt"
    export_graph(c.petersen(), path)
    code, out, _ = run("dspec", str(path))
    assert code == 0 and "PASS" in out


def test_dspec_mutated_claim_exits_1(tmp_path):
    _, out, _ = run("dspec", "petersen", "--format", "json")
    doc = json.loads(out)["spectrum"]
    doc["eigs"][1]["mult"] += 1
    claim = tmp_path / "claim.json"
    claim.write_text(json.dumps(doc))
    code, out, _ = run("dspec", "petersen", "--claim", str(claim))
    assert code == 1 and "FAIL" in out


def test_dspec_exit_codes():
    assert run("dspec", "kmm:3")[0] == 3
    assert run("dspec", "crown:5")[0] == 2      # not an SRG
    assert run("dspec", "no-such-graph")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("dspec")[0] == 2


def test_params_matches_dspec():
    code, out, _ = run("params", "25", "8", "3", "2", "--format", "json")
    assert code == 0
    from_params = json.loads(out)
    _, out, _ = run("dspec", "rook:5", "--format", "json")
    assert json.loads(out)["spectrum"] == from_params["distance_spectrum"]
    assert from_params["verified"] is False


def test_params_text_and_errors():
    code, out, _ = run("params", "50", "7", "0", "1")
    assert code == 0 and "unverified: no construction" in out
    assert run("params", "6", "3", "0", "3")[0] == 3
    assert run("params", "10", "3", "0", "2")[0] == 2    # counting identity fails
    assert run("params", "7", "3", "0", "2")[0] == 2     # infeasible spectrum


def test_verify_single_and_usage():
    code, out, _ = run("verify", "petersen")
    assert code == 0 and "overall: PASS" in out
    assert run("verify")[0] == 2
    assert run("verify", "petersen", "--all")[0] == 2


def test_verify_output_is_deterministic():
    first = run("verify", "clebsch", "--seed", "3", "--trials", "20", "--format", "json")
    second = run("verify", "clebsch", "--seed", "3", "--trials", "20", "--format", "json")
    assert first == second
    assert json.loads(first[1])["random"]["trials"] == 20


def test_export(tmp_path):
    target = tmp_path / "h.json"
    code, out, _ = run("export", "petersen", "--format", "json", "-o", str(target))
    assert code == 0 and import_graph(target) == c.petersen()
