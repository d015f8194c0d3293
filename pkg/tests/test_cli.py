import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from rdn.cli import EXIT_OK, EXIT_PARSE_ERROR, EXIT_USAGE, EXIT_VIOLATIONS, main
from rdn.corpus import lewis_full
from rdn.turtle import parse

DATA = Path(__file__).parent / "data"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


# -- validate --------------------------------------------------------------------


def test_validate_lewis_conforms():
    code, out, err = run("validate", DATA / "lewis-full.ttl")
    assert code == EXIT_OK
    assert out == ""
    assert "conforms" in err


def test_validate_tolkien_reports_c4():
    code, out, _ = run("validate", DATA / "lewis-plus-tolkien.ttl")
    assert code == EXIT_VIOLATIONS
    assert out.splitlines() == [
        "C4 https://example.org/rdn#sibAuthorRole 2",
        "C9 https://example.org/rdn#csLewisNameCV 2",
    ]


def test_validate_json():
    code, out, _ = run("validate", "--json", DATA / "lewis-plus-tolkien.ttl")
    assert code == EXIT_VIOLATIONS
    doc = json.loads(out)
    assert doc["version"] == 1
    assert [v["constraint"] for v in doc["violations"]] == ["C4", "C9"]
    assert all(set(v) == {"constraint", "focus", "witnesses", "message"} for v in doc["violations"])


def test_validate_flags():
    code, out, err = run("validate", "--no-una", DATA / "lewis-plus-tolkien.ttl")
    assert code == EXIT_OK
    assert "C4 not evaluated" in err
    code, _, _ = run("validate", "--no-materialize", DATA / "lewis-plus-tolkien.ttl")
    assert code == EXIT_OK
    code, out, _ = run("validate", "--json", "--no-materialize", "--no-una", DATA / "lewis-full.ttl")
    doc = json.loads(out)
    assert doc["materialized"] is False and doc["unique_names"] is False


def test_validate_truncated_is_parse_error():
    code, out, err = run("validate", DATA / "truncated.ttl")
    assert code == EXIT_PARSE_ERROR
    assert out == ""
    assert "truncated.ttl:2:1: UnexpectedToken" in err


def test_bad_flag_is_usage_error():
    code, _, _ = run("validate", "--frobnicate", DATA / "lewis-full.ttl")
    assert code == EXIT_USAGE
    assert run()[0] == EXIT_USAGE
    assert run("nonsense")[0] == EXIT_USAGE


def test_missing_file_is_usage_error(tmp_path):
    code, _, err = run("validate", tmp_path / "nope.ttl")
    assert code == EXIT_USAGE
    assert "cannot read" in err


def test_bad_base_is_usage_error():
    assert run("--base", "not an iri", "example")[0] == EXIT_USAGE


# -- materialize -----------------------------------------------------------------


def test_materialize_lewis():
    code, out, err = run("materialize", DATA / "lewis-full.ttl")
    assert code == EXIT_OK
    assert len(parse(out)) == 18
    assert "12 asserted, 6 inferred" in err


def test_materialize_trace_lines():
    code, _, err = run("materialize", "--trace", DATA / "lewis-full.ttl")
    derived = [line for line in err.splitlines() if line.startswith("DERIVED ")]
    assert len(derived) == 6
    assert "DERIVED :sibAuthorRole a :AgentRole BY R8 FROM " \
           ":spiritInBondage :providesAgentRole :sibAuthorRole" in derived


def test_materialize_to_file(tmp_path):
    target = tmp_path / "out.ttl"
    code, out, _ = run("materialize", "-o", target, DATA / "lewis-full.ttl")
    assert code == EXIT_OK and out == ""
    assert len(parse(target.read_text())) == 18


def test_materialize_empty():
    code, out, _ = run("materialize", DATA / "empty.ttl")
    assert code == EXIT_OK
    assert all(line.startswith("@prefix") for line in out.splitlines() if line)


def test_materialize_is_byte_stable():
    assert run("materialize", DATA / "lewis-full.ttl")[1] == run("materialize", DATA / "lewis-full.ttl")[1]


def test_materialize_parse_error():
    assert run("materialize", DATA / "truncated.ttl")[0] == EXIT_PARSE_ERROR


# -- explain ---------------------------------------------------------------------


def test_explain_r16_tree():
    code, out, _ = run("explain", DATA / "lewis-min.ttl", ":csLewis", ":assumesAgentRole", ":goAuthorRole")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == ":csLewis :assumesAgentRole :goAuthorRole  [R16, round 1]"
    assert sorted(lines[1:]) == [
        "  :csLewis :hasName :csLewisNameNWC  [asserted]",
        "  :goAuthorRole :hasRoleUnderName :csLewisNameNWC  [asserted]",
    ]


def test_explain_nested_tree():
    code, out, _ = run("explain", DATA / "lewis-full.ttl", ":csLewis", "a", ":Agent")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].endswith("[R3, round 2]")
    assert any(line.startswith("    ") and line.endswith("[asserted]") for line in lines)


def test_explain_asserted_and_absent():
    code, out, _ = run("explain", DATA / "lewis-full.ttl", ":csLewis", ":hasName", ":csLewisNameCV")
    assert code == EXIT_OK and "[asserted]" in out
    code, out, _ = run("explain", DATA / "lewis-full.ttl", ":x", ":y", ":z")
    assert code == EXIT_VIOLATIONS and "[not derivable]" in out


@pytest.mark.parametrize("triple", [(":a", ":b :c", ":d"), ("nope:a", ":b", ":c"),
                                    ('"lit"', ":b", ":c")])
def test_explain_malformed_triple(triple):
    code, _, err = run("explain", DATA / "lewis-full.ttl", *triple)
    assert code == EXIT_USAGE
    assert "malformed triple" in err


# -- example / tbox / parse ------------------------------------------------------


def test_example_is_the_corpus():
    code, out, _ = run("example")
    assert code == EXIT_OK
    g = parse(out)
    assert len(g) == 12 and g == lewis_full()
    assert out == run("example")[1]


def test_example_validates(tmp_path):
    path = tmp_path / "ex.ttl"
    path.write_text(run("example")[1])
    assert run("validate", path)[0] == EXIT_OK


def test_tbox():
    code, out, _ = run("tbox")
    assert code == EXIT_OK
    assert out.count("owl:propertyChainAxiom") == 2
    assert out.count("owl:disjointWith") == 3
    parse(out)


def test_parse_normalizes():
    code, out, err = run("parse", DATA / "lewis-naive.ttl")
    assert code == EXIT_OK and "10 triples" in err
    assert len(parse(out)) == 10


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rdn", "validate", str(DATA / "lewis-plus-tolkien.ttl")],
        capture_output=True, text=True,
    )
    assert proc.returncode == EXIT_VIOLATIONS
    assert proc.stdout.startswith("C4 ")
