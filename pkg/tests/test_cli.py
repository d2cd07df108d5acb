import csv
import io
import json
import random
from fractions import Fraction

import pytest

from polydecomp.cli import main
from polydecomp.polynomial import Polynomial, compose, format_polynomial, parse_polynomial


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompose:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "compose", "1,1,0", "1,2,0")
        assert code == 0
        assert out.strip() == "1,4,5,2,0"

    def test_identity_right_factor(self, capsys):
        code, out, _ = run(capsys, "compose", "1,0,-3,0", "1,0")
        assert code == 0
        assert out.strip() == "1,0,-3,0"

    def test_malformed_input(self, capsys):
        code, _, err = run(capsys, "compose", "1,,2", "1,0")
        assert code == 2
        assert err

    def test_non_monic(self, capsys):
        code, _, err = run(capsys, "compose", "2,1,0", "1,0")
        assert code == 2
        assert "monic" in err

    def test_non_original(self, capsys):
        code, _, _ = run(capsys, "compose", "1,1,5", "1,0")
        assert code == 2


class TestDecompose:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "decompose", "1,4,5,2,0")
        assert code == 0
        assert json.loads(out) == [{"d": 2, "g": "1,1,0", "h": "1,2,0"}]

    def test_prime_degree(self, capsys):
        code, _, err = run(capsys, "decompose", "1,0,0,0,1,0")
        assert code == 3
        assert "prime" in err

    def test_pure_power_two_entries(self, capsys):
        code, out, _ = run(capsys, "decompose", "1,0,0,0,0,0,0")
        assert code == 0
        rows = json.loads(out)
        assert [r["d"] for r in rows] == [2, 3]
        assert rows[0] == {"d": 2, "g": "1,0,0", "h": "1,0,0,0"}

    def test_indecomposable_composite(self, capsys):
        code, out, _ = run(capsys, "decompose", "1,0,0,1,0")
        assert code == 0
        assert json.loads(out) == []

    def test_explicit_divisor(self, capsys):
        code, out, _ = run(capsys, "decompose", "1,4,5,2,0", "--d", "2")
        assert code == 0
        assert json.loads(out) == [{"d": 2, "g": "1,1,0", "h": "1,2,0"}]

    def test_explicit_divisor_required_but_absent(self, capsys):
        code, out, err = run(capsys, "decompose", "1,0,0,1,0", "--d", "2")
        assert code == 3
        assert json.loads(out) == []
        assert err

    def test_bad_divisor(self, capsys):
        code, _, _ = run(capsys, "decompose", "1,4,5,2,0", "--d", "3")
        assert code == 2


class TestRoundtrip:
    def test_twenty_fixtures(self, capsys):
        rng = random.Random(999)
        for _ in range(20):
            n, d = rng.choice([(4, 2), (6, 2), (6, 3), (8, 4), (9, 3), (12, 3)])
            e = n // d
            g = Polynomial([0] + [Fraction(rng.randint(-6, 6)) for _ in range(d - 1)] + [1])
            h = Polynomial([0] + [Fraction(rng.randint(-6, 6)) for _ in range(e - 1)] + [1])
            g_text, h_text = format_polynomial(g), format_polynomial(h)
            code, out, _ = run(capsys, "compose", g_text, h_text)
            assert code == 0
            code, out, _ = run(capsys, "decompose", out.strip(), "--d", str(d))
            assert code == 0
            rows = json.loads(out)
            assert rows == [{"d": d, "g": g_text, "h": h_text}]


class TestEstimate:
    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "estimate", "--n", "4", "--d", "2", "--eps", "0.1",
            "--samples", "20000", "--seed", "42", "--mode", "conditional",
        )
        assert code == 0
        row = json.loads(out)
        assert row["n"] == 4 and row["d"] == 2
        assert row["lower_bound"] == pytest.approx(0.081)
        assert row["upper_bound"] == pytest.approx(0.1)
        assert 0.081 - 3 * row["std_error"] - 1e-12 <= row["mean"] <= 0.1 + 3 * row["std_error"] + 1e-12

    def test_union(self, capsys):
        code, out, _ = run(
            capsys, "estimate", "--n", "6", "--union", "--eps", "0.1",
            "--samples", "50000", "--seed", "7",
        )
        assert code == 0
        row = json.loads(out)
        assert row["d"] == "union"
        assert row["lower_bound"] == pytest.approx(0.01458)
        assert row["upper_bound"] == pytest.approx(0.02)

    def test_deterministic_output(self, capsys):
        argv = ["estimate", "--n", "6", "--d", "2", "--eps", "0.15",
                "--samples", "30000", "--seed", "5", "--mode", "conditional"]
        _, out1, _ = run(capsys, *argv)
        _, out2, _ = run(capsys, *argv)
        assert out1 == out2

    def test_csv_sweep(self, capsys):
        code, out, _ = run(
            capsys, "estimate", "--n", "6", "--d", "2,3", "--eps", "0.05,0.1",
            "--samples", "5000", "--seed", "1", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 4
        assert set(r["d"] for r in rows) == {"2", "3"}
        assert list(rows[0].keys()) == [
            "n", "d", "field", "epsilon", "B", "mode", "samples", "seed",
            "mean", "std_error", "lower_bound", "upper_bound", "cheng_bound",
        ]

    def test_eps_equal_B_rejected(self, capsys):
        code, _, err = run(
            capsys, "estimate", "--n", "4", "--d", "2", "--eps", "1", "--B", "1",
        )
        assert code == 2
        assert err

    def test_rational_field_rejected(self, capsys):
        code, _, _ = run(
            capsys, "estimate", "--n", "4", "--d", "2", "--eps", "0.1",
            "--field", "rational",
        )
        assert code == 2

    def test_conditional_union_rejected(self, capsys):
        code, _, _ = run(
            capsys, "estimate", "--n", "6", "--union", "--eps", "0.1",
            "--mode", "conditional",
        )
        assert code == 2

    def test_complex_field(self, capsys):
        code, out, _ = run(
            capsys, "estimate", "--n", "4", "--d", "2", "--eps", "0.1",
            "--samples", "20000", "--field", "complex64", "--mode", "conditional",
        )
        assert code == 0
        row = json.loads(out)
        assert row["field"] == "complex"
        assert row["upper_bound"] == pytest.approx(0.01)

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "result.json"
        code, out, _ = run(
            capsys, "estimate", "--n", "4", "--d", "2", "--eps", "0.1",
            "--samples", "1000", "--out", str(path),
        )
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["n"] == 4


class TestCollide:
    def test_trig_example(self, capsys):
        params = json.dumps(
            {"variant": "trig", "n": 6, "d": 2, "u": "1,0", "v": "1,0", "a": "0", "z": "1"}
        )
        code, out, _ = run(capsys, "collide", params)
        assert code == 0
        report = json.loads(out)
        assert report["f"] == "1,0,-6,0,9,0,0"
        assert report["decomposes_at_d"] and report["decomposes_at_e"]

    def test_exp_power_collapse(self, capsys):
        params = json.dumps(
            {"variant": "exp", "n": 6, "d": 2, "u": "1,0", "v": "1,0", "a": "0", "w": ["0"]}
        )
        code, out, _ = run(capsys, "collide", params)
        assert code == 0
        report = json.loads(out)
        assert parse_polynomial(report["f"]).degree == 6
        assert report["f"] == "1,0,0,0,0,0,0"
        assert report["decomposes_at_d"] and report["decomposes_at_e"]

    def test_exp_degenerate_rejected(self, capsys):
        params = json.dumps(
            {"variant": "exp", "n": 12, "d": 2, "u": "1,1,0", "v": "1,0,0",
             "a": "0", "w": ["1", "0", "0"]}
        )
        code, _, err = run(capsys, "collide", params)
        assert code == 2
        assert "degenerate" in err

    def test_invalid_json(self, capsys):
        code, _, _ = run(capsys, "collide", "{not json")
        assert code == 2

    def test_missing_payload(self, capsys):
        params = json.dumps({"variant": "exp", "n": 6, "d": 2, "u": "1,0", "v": "1,0"})
        code, _, _ = run(capsys, "collide", params)
        assert code == 2


class TestUsage:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_no_command(self, capsys):
        assert main([]) == 2
