"""Black-box tests of the eggcalc binary.

EGGCALC points at the executable; the schema and golden directories default to
the source tree.
"""

import csv
import io
import json
import math
import os
import re
import subprocess
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(__file__).resolve().parents[2]
EGGCALC = os.environ.get("EGGCALC", str(ROOT / "build" / "tools" / "eggcalc"))
SCHEMAS = ROOT / "schemas"
GOLDEN = ROOT / "tests" / "golden"


def run(*args):
    return subprocess.run([EGGCALC, *args], capture_output=True, check=False)


def ok_json(*args):
    proc = run(*args, "--format", "json")
    assert proc.returncode == 0, proc.stderr.decode()
    return json.loads(proc.stdout)


def validate(command, document):
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text())
    jsonschema.validate(document, schema)


def implicit_fq(a, b, w, x, y):
    q = 1.0 if w <= a else a / w
    return (2 * q * q * w * x * y * y + q * q * b * b * x * x + (a * a + q**4 * w * w) * y * y
            - a * a * b * b * q * q)


class TestArea:
    def test_subarea_difference_is_16(self):
        doc = ok_json("area", "--a", "4", "--b", "3", "--w", "2", "--method", "exact")
        validate("area", doc)
        assert list(doc) == ["total", "part1", "part2", "q", "k", "u", "gamma", "method"]
        assert doc["part2"] - doc["part1"] == pytest.approx(16, abs=1e-12)

    def test_degenerate_total(self):
        doc = ok_json("area", "--a", "2", "--b", "2", "--w", "2", "--method", "exact")
        assert doc["total"] == pytest.approx(32 / 3, rel=1e-15)

    def test_series_matches_exact(self):
        exact = ok_json("area", "--a", "4", "--b", "3", "--w", "2", "--method", "exact")
        series = ok_json("area", "--a", "4", "--b", "3", "--w", "2", "--method", "series")
        assert abs(series["total"] - exact["total"]) <= 1e-10
        assert series["method"] == "series"

    def test_taylor_brackets_exact(self):
        args = ["area", "--a", "4", "--b", "3", "--w", "2"]
        exact = ok_json(*args)["total"]
        upper = ok_json(*args, "--method", "taylor", "--n", "6")["total"]
        lower = ok_json(*args, "--method", "taylor", "--n", "6", "--kind", "second")["total"]
        assert lower < exact < upper

    def test_text_and_csv(self):
        text = run("area", "--a", "4", "--b", "3", "--w", "2").stdout.decode()
        assert re.search(r"^method\s+exact$", text, re.M)
        rows = list(csv.reader(io.StringIO(run("area", "--a", "4", "--b", "3", "--w", "2",
                                                "--format", "csv").stdout.decode())))
        assert rows[0] == ["total", "part1", "part2", "q", "k", "u", "gamma", "method"]
        assert len(rows) == 2

    def test_exit_codes(self):
        assert run("area", "--a", "-1", "--b", "2", "--w", "2").returncode == 1
        assert run("area", "--a", "4", "--b", "3", "--w", "2", "--method", "taylor",
                   "--kind", "second", "--beta", "1.5").returncode == 1
        assert run("area", "--a", "x", "--b", "2", "--w", "2").returncode == 2
        assert run("area", "--a", "1", "--b", "2").returncode == 2
        assert run("area", "--a", "1", "--b", "1", "--w", "1", "--method", "magic").returncode == 2
        assert run("area", "--a", "1", "--b", "1", "--w", "1", "--format", "svg").returncode == 2
        assert run("frobnicate").returncode == 2
        assert run().returncode == 2
        assert run("--help").returncode == 0


class TestBounds:
    def test_coarse_bounds(self):
        doc = ok_json("bounds", "--a", "4", "--b", "3", "--w", "2")
        validate("bounds", doc)
        assert doc["lower_coarse"] == 32
        assert doc["upper_coarse"] == pytest.approx(12 * math.pi, rel=1e-15)
        assert doc["ordered"] is True
        assert doc["lower_coarse"] < doc["lower_refined"] < doc["exact"] < doc["upper_refined"]
        assert doc["pi_form_consistent"] is False
        assert doc["lower_pi_form"] > doc["exact"]

    def test_degenerate_collapse(self):
        doc = ok_json("bounds", "--a", "2", "--b", "2", "--w", "2")
        assert doc["lower_refined"] == doc["exact"]

    def test_nabla_for_w_greater_than_a(self):
        doc = ok_json("bounds", "--a", "2", "--b", "3", "--w", "4")
        assert abs(doc["nabla"] - math.pi * 16 * 3 / 512) <= 1e-12
        assert abs(doc["nabla_piecewise"] - math.pi * 16 * 3 / 512) <= 1e-12


class TestSample:
    def test_quarter_point(self):
        out = run("sample", "--a", "2", "--b", "2", "--w", "4", "--n", "5", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out.stdout.decode())))
        assert len(rows) == 5
        quarter = rows[1]
        assert float(quarter["t"]) == pytest.approx(math.pi / 2, abs=1e-15)
        # q = 1/2: (-q²w, qb) = (-1, 1)
        assert float(quarter["x"]) == pytest.approx(-1.0, abs=1e-15)
        assert float(quarter["y"]) == 1.0

    def test_csv_round_trip_on_curve(self):
        for a, b, w in [(3, 2, 2), (2, 3, 4), (1.5, 0.7, 1.5)]:
            out = run("sample", "--a", str(a), "--b", str(b), "--w", str(w), "--n", "257",
                      "--format", "csv").stdout.decode()
            q = 1.0 if w <= a else a / w
            scale = a * a * b * b * q * q
            assert out.splitlines()[0] == "t,x,y"
            for row in csv.DictReader(io.StringIO(out)):
                assert abs(implicit_fq(a, b, w, float(row["x"]), float(row["y"]))) <= 1e-9 * scale

    def test_svg_structure(self):
        svg = run("sample", "--a", "3", "--b", "2", "--w", "2", "--n", "32", "--circles",
                  "--format", "svg").stdout.decode()
        assert svg.count("<path ") == 1
        assert svg.count("<circle ") == 2
        assert 'version="1.1"' in svg
        plain = run("sample", "--a", "3", "--b", "2", "--w", "2", "--format", "svg").stdout.decode()
        assert plain.count("<circle ") == 0

    def test_json(self):
        doc = ok_json("sample", "--a", "3", "--b", "2", "--w", "2", "--n", "9", "--circles")
        validate("sample", doc)
        assert len(doc["points"]) == 9
        assert doc["circles"]["inner"] == {"cx": -2, "cy": 0, "r": 2}

    def test_usage(self):
        assert run("sample", "--a", "3", "--b", "2", "--w", "2", "--circles").returncode == 2
        assert run("sample", "--a", "3", "--b", "2", "--w", "2", "--n", "1").returncode == 1


class TestApproxTable:
    def test_k_coefficient_dump(self):
        doc = ok_json("approx-table", "--target", "K", "--max-degree", "10")
        validate("approx-table", doc)
        assert doc["coefficients"]["first"][10]["exact"] == "3969/131072·π"
        assert doc["chain_ok"] is True
        assert doc["violations"] == []

    def test_area_correction_constant(self):
        doc = ok_json("approx-table", "--target", "A", "--max-degree", "9")
        assert doc["coefficients"]["second_top"][9]["exact"] == "8/3 - 13965/16384·π"
        text = run("approx-table", "--target", "A", "--max-degree", "9").stdout.decode()
        assert "8/3 - 13965/16384·π" in text

    def test_error_signs(self):
        for target, first_below in [("K", True), ("D", True), ("E", False), ("A", False)]:
            doc = ok_json("approx-table", "--target", target)
            for row in doc["rows"]:
                for e in row["first_error"]:
                    assert (e <= 1e-14) if first_below else (e >= -1e-14)
                for e in row["second_error"]:
                    assert (e >= -1e-14) if first_below else (e <= 1e-14)

    def test_csv_header(self):
        out = run("approx-table", "--target", "E", "--max-degree", "2", "--format", "csv")
        header = out.stdout.decode().splitlines()[0]
        assert header == "x,f,T_0,T_1,T_2,S_0,S_1,S_2,T_0-f,T_1-f,T_2-f,S_0-f,S_1-f,S_2-f"

    def test_divergent_endpoint_pulled_in(self):
        doc = ok_json("approx-table", "--target", "K", "--beta", "1", "--max-degree", "4")
        assert doc["beta"] == 0.999999

    def test_usage(self):
        assert run("approx-table", "--target", "Z").returncode == 2
        assert run("approx-table").returncode == 2
        assert run("approx-table", "--target", "E", "--beta", "1.5").returncode == 1


class TestPiSeries:
    def test_first_term(self):
        doc = ok_json("pi-series", "--terms", "1")
        validate("pi-series", doc)
        assert doc["partial_sum"] == 0.328125

    def test_partial_sum_matches_exact_rational(self):
        total = Fraction(0)
        b = Fraction(1)
        for i in range(1, 101):
            b *= Fraction(2 * i - 1, 2 * i) ** 2
            total += b / ((2 * i - 1) * (i + 1))
        doc = ok_json("pi-series", "--terms", "100")
        assert doc["partial_sum"] == float(Fraction(3, 8) * (1 - total))

    def test_error_bound_and_monotone(self):
        assert ok_json("pi-series", "--terms", "10000")["abs_error"] <= 1e-8
        errors = [ok_json("pi-series", "--terms", str(n))["abs_error"] for n in (10, 100, 1000)]
        assert errors[0] > errors[1] > errors[2]

    def test_zero_terms(self):
        assert run("pi-series", "--terms", "0").returncode == 1
        assert run("pi-series", "--terms", "-3").returncode == 2


class TestVerify:
    def test_default_passes(self):
        proc = run("verify", "--format", "json")
        doc = json.loads(proc.stdout)
        validate("verify", doc)
        assert proc.returncode == 0
        assert doc["passed"] is True
        assert {c["criterion"] for c in doc["checks"]} >= set(range(1, 10))

    def test_looser_tolerance_passes(self):
        assert run("verify", "--tol", "1e-3").returncode == 0

    def test_impossible_tolerance_fails(self):
        proc = run("verify", "--tol", "1e-30")
        assert proc.returncode == 1
        assert b"FAIL" in proc.stdout

    def test_bad_tolerance(self):
        assert run("verify", "--tol", "-1").returncode == 1


class TestDeterminism:
    @pytest.mark.parametrize("args,golden", [
        (["sample", "--a", "3", "--b", "2", "--w", "2", "--n", "64", "--format", "csv"],
         "sample_a3_b2_w2_n64.csv"),
        (["pi-series", "--terms", "100", "--format", "json"], "pi_series_100.json"),
    ])
    def test_golden(self, args, golden):
        first = run(*args).stdout
        second = run(*args).stdout
        assert first == second
        assert first == (GOLDEN / golden).read_bytes()

    def test_every_command_repeats(self):
        for args in (["area", "--a", "3.3", "--b", "1.7", "--w", "4.1", "--format", "json"],
                     ["bounds", "--a", "3.3", "--b", "1.7", "--w", "4.1"],
                     ["sample", "--a", "1", "--b", "2", "--w", "0.5", "--circles", "--format", "svg"],
                     ["approx-table", "--target", "D", "--format", "csv"]):
            assert run(*args).stdout == run(*args).stdout
