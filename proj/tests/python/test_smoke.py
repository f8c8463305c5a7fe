import os
import subprocess

import pytest

import conicrank

EXAMPLE = "(x^2-1)*T + x^3 - x + 4"


def test_example_report():
    r = conicrank.analyze(EXAMPLE)
    assert list(r)[:3] == ["curve", "conic_fibers", "kodaira_fibers"]
    assert (r["delta"], r["rank_geometric"], r["defect"]["direct"], r["delta_k"]) == (2, 2, 0, 2)
    assert r["rank_exact"] == 2
    assert [f["name"] for f in r["conic_fibers"]] == ["A3", "A3", "D5"]
    assert r["kodaira_fibers"][-1]["type"] == "I2*"


def test_cubic_b_with_points():
    r = conicrank.analyze("(x^3-x)*T + 4", verify_points=True)
    assert r["family"]["mu"] == ["4", "1"]
    assert r["rank_exact"] == 2
    assert all(v["status"] in ("pass", "holds") for v in r["verifications"])


def test_factor_and_resultant():
    unit, factors = conicrank.factor("2x^3 - 2x")
    assert unit == "2"
    assert sorted(factors) == [("x", 1), ("x + 1", 1), ("x - 1", 1)]
    assert conicrank.resultant("x^2 - 2", "x - 1") == "-1"


def test_square_in_field():
    root = conicrank.is_square_in_field("x^2 + x + 1", "-3")
    assert root in ("2*x + 1", "-2*x - 1")
    assert conicrank.is_square_in_field("x^2 - 2", "3") is None


def test_classify_kodaira():
    assert conicrank.classify_kodaira(0, 0, 7) == ("I7", 7, 7)
    assert conicrank.classify_kodaira(2, 3, 8) == ("I2*", 7, 8)
    assert conicrank.classify_kodaira(None, 1, 2)[0] == "II"


def test_errors():
    with pytest.raises(conicrank.ParseError):
        conicrank.analyze("x^^3")
    with pytest.raises(conicrank.ValidationError):
        conicrank.analyze("x^3")
    with pytest.raises(ValueError):
        conicrank.analyze("x + ")


def test_self_test():
    ok, out = conicrank.self_test(20, seed=5)
    assert ok
    assert "self-test passed" in out
    assert conicrank.self_test(0) == (True, "")


@pytest.mark.skipif("CONICRANK_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module():
    out = subprocess.run(
        [os.environ["CONICRANK_CLI"], "--expr", EXAMPLE, "--format", "json"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert out.strip() == conicrank.analyze_json(EXAMPLE).strip()
