import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

import pwordle

SCHEMAS = Path(os.environ.get("PWORDLE_SCHEMAS", Path(__file__).resolve().parents[2] / "docs" / "schemas"))
CLI = os.environ.get("PWORDLE_CLI")


def _registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def validate(doc, name):
    registry = _registry()
    schema = registry.contents(f"{name}.schema.json")
    jsonschema.Draft202012Validator(schema, registry=registry).validate(doc)


def test_inductive_table_rows():
    rows = {
        (2, 3, 4, 1): [1, 11, 11, 1],
        (2, 4, 1, 3): [1, 11, 9, 3],
        (4, 1, 2, 3): [1, 11, 7, 5],
        (2, 3, 4, 5, 1): [1, 26, 66, 26, 1],
        (4, 3, 1, 5, 2): [1, 26, 60, 25, 8],
        (3, 5, 2, 1, 4): [1, 26, 55, 27, 10, 1],
        (5, 1, 2, 3, 4): [1, 26, 51, 26, 11, 5],
    }
    for top, coeffs in rows.items():
        got, loops = pwordle.coefficients(pwordle.inductive(list(top)))
        assert got == coeffs and loops == 0


def test_gf_dict_matches_cli_example():
    gf = pwordle.generating_function("inductive:2,3,4,1")
    assert gf == {"n": 4, "coeffs": {"1": 1, "2": 11, "3": 11, "4": 1}, "loops": 0}
    validate(gf, "gf")


def test_play_and_loop():
    trace = pwordle.play([4, 2, 5, 3, 1], "cs")
    assert [r["guess"] for r in trace["rounds"]] == [[1, 2, 3, 4, 5], [5, 2, 1, 3, 4], [4, 2, 5, 3, 1]]
    validate(trace, "trace")
    looped = pwordle.play([3, 4, 1, 2], "1;2,1;2,3,1;2,1,4,3")
    assert looped["status"] == "looped"
    assert pwordle.average_guesses("1;2,1;2,3,1;2,1,4,3") == float("inf")


def test_averages_and_closed_forms():
    assert pwordle.average_guesses(pwordle.cyclic_shift(4)) == Fraction(5, 2)
    assert pwordle.rho_class_counts("cs:6") == (251, 50, 1)
    assert pwordle.closedform.csl_cubic(8) == 4093
    assert pwordle.average_j2_over_derangements([2, 3, 4, 1]) == Fraction(4, 3)


def test_strategy_round_trip():
    s = pwordle.parse_strategy("csl", 5)
    assert pwordle.parse_strategy(str(s)) == s
    assert s.label() == "[5,1,2,3,4]"
    assert pwordle.generating_function(pwordle.mirror(s)) == pwordle.generating_function(s)


def test_scan_and_verify():
    res = pwordle.scan(4, "deranged")
    validate(res, "scan")
    assert res["summary"]["strategies_with_loops"] > 0
    rep = pwordle.verify("csl-cubic", 3, 8)
    validate(rep, "verify")
    assert rep["status"] == "pass"


def test_errors():
    with pytest.raises(pwordle.PwordleError):
        pwordle.parse_permutation("1,1,2")
    with pytest.raises(pwordle.ScanRefused):
        pwordle.scan(7, "cyclic")


@pytest.mark.skipif(not CLI, reason="CLI path not provided")
@pytest.mark.parametrize(
    "args,schema",
    [
        (["gf", "--strategy", "inductive:2,3,4,1", "--n", "4"], "gf"),
        (["avg", "--strategy", "cs:5"], "average"),
        (["play", "--secret", "4,1,2,3", "--strategy", "cs"], "trace"),
        (["scan", "--n", "4", "--class", "cyclic"], "scan"),
        (["verify", "--id", "csl-cubic", "--min", "3", "--max", "8"], "verify"),
        (["verify", "--id", "table2"], "verify"),
    ],
)
def test_cli_json_validates(args, schema):
    out = subprocess.run([CLI, *args, "--format", "json"], capture_output=True, text=True, check=True)
    validate(json.loads(out.stdout), schema)
