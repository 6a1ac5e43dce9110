"""CLI surface: subcommands, exit codes, schema-valid JSON, determinism."""

import json
from importlib import resources

import jsonschema
import pytest

import ratcos.cli as cli
import ratcos.dynatomic
from ratcos.cyclotomic import PsiPoly
from ratcos.polycore import IntPoly


@pytest.fixture(scope="module")
def schema():
    text = resources.files("ratcos").joinpath("schemas/output.schema.json").read_text()
    return json.loads(text)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, schema, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    return doc


class TestBasicCommands:
    def test_psi_text(self, capsys):
        code, out, _ = run_cli(capsys, "psi", "15")
        assert code == 0
        assert out.splitlines() == ["1,4,-4,-1,1", "x^4 - x^3 - 4x^2 + 4x + 1"]

    def test_psi_json(self, capsys, schema):
        doc = run_json(capsys, schema, "psi", "15", "--json")
        assert doc["results"]["coeffs"] == [1, 4, -4, -1, 1]
        assert doc["results"]["degree"] == 4
        assert doc["results"]["squared"] is False

    def test_psi_squared_flag(self, capsys, schema):
        doc = run_json(capsys, schema, "psi", "1", "--json")
        assert doc["results"]["squared"] is True
        assert doc["results"]["coeffs"] == [-2, 1]

    def test_cyclotomic(self, capsys, schema):
        doc = run_json(capsys, schema, "cyclotomic", "12", "--json")
        assert doc["results"]["coeffs"] == [1, 0, -1, 0, 1]

    def test_iterate(self, capsys, schema):
        doc = run_json(capsys, schema, "iterate", "2", "--json")
        assert doc["results"]["pretty"] == "x^4 - 4x^2 + 2"

    def test_dynatomic_with_rational_c(self, capsys, schema):
        doc = run_json(capsys, schema, "dynatomic", "1", "--c", "1/4", "--json")
        assert doc["results"]["coeffs"] == [
            {"num": "1", "den": "4"},
            {"num": "-1", "den": "1"},
            {"num": "1", "den": "1"},
        ]

    def test_dynatomic_at_minus_two_lists_psi_factors(self, capsys, schema):
        doc = run_json(capsys, schema, "dynatomic", "4", "--json")
        factors = doc["results"]["factors"]
        assert [(f["psi_index"], f["exponent"], f["degree"]) for f in factors] == [
            (15, 1, 4), (17, 1, 8),
        ]

    def test_dynatomic_generic_c_has_no_factor_list(self, capsys, schema):
        doc = run_json(capsys, schema, "dynatomic", "2", "--c", "1/4", "--json")
        assert "factors" not in doc["results"]

    def test_factor_iterate(self, capsys, schema):
        doc = run_json(capsys, schema, "factor-iterate", "5", "--json")
        degrees = [f["degree"] for f in doc["results"]["factors"]]
        assert sorted(degrees) == [1, 1, 5, 10, 15]
        indices = [f["psi_index"] for f in doc["results"]["factors"]]
        assert indices == [1, 3, 11, 31, 33]

    def test_factor(self, capsys, schema):
        doc = run_json(capsys, schema, "factor", "--poly", "2,-1,-4,0,1", "--json")
        assert doc["results"]["unit"] == 1
        assert [f["pretty"] for f in doc["results"]["factors"]] == [
            "x - 2", "x + 1", "x^2 + x - 1",
        ]

    def test_bound(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "1")
        assert code == 0 and out.strip() == "22"

    def test_bound_json(self, capsys, schema):
        doc = run_json(capsys, schema, "bound", "2", "--json")
        assert doc["results"] == {"degree": 2, "scan_limit": 32, "bound": 324}

    def test_classify_json(self, capsys, schema):
        doc = run_json(capsys, schema, "classify", "1", "--json")
        assert doc["results"]["count"] == 5
        assert len(doc["results"]["values"]) == 5
        assert len(doc["results"]["edges"]) == 5

    def test_classify_rpi_convention(self, capsys, schema):
        doc = run_json(capsys, schema, "classify", "1", "--json", "--angles", "rpi")
        angles = [v["angle"] for v in doc["results"]["values"]]
        # r = 2m/n: 0, 1, 2/3, 1/2, 1/3
        assert angles == ["0/1", "1/1", "2/3", "1/2", "1/3"]

    def test_membership_json(self, capsys, schema):
        doc = run_json(capsys, schema, "membership", "--poly=-1,-1,1", "--json")
        assert doc["results"]["count"] == 9
        elements = {v["element_pretty"] for v in doc["results"]["values"]}
        assert {"y", "y - 1", "-y", "-y + 1"} <= elements

    def test_verify_passes(self, capsys, schema):
        doc = run_json(capsys, schema, "verify", "6", "--json")
        assert doc["results"]["all_passed"] is True
        names = {c["name"] for c in doc["results"]["checks"]}
        assert "moebius-vs-closed-form" in names

    def test_verify_trivial_bound(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "1")
        assert code == 0
        assert out.count("PASS") == 5 and "FAIL" not in out


class TestExitCodes:
    def test_unknown_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            cli.main(["frobnicate"])
        assert err.value.code == 2

    def test_malformed_flag_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            cli.main(["classify", "not-a-number"])
        assert err.value.code == 2

    def test_cap_violation(self, capsys):
        code, _, err = run_cli(capsys, "dynatomic", "13")
        assert code == cli.EXIT_CAP
        assert "cap" in err

    def test_invalid_input(self, capsys):
        code, _, err = run_cli(capsys, "membership", "--poly=-2,-1,1")
        assert code == cli.EXIT_INVALID
        assert "reducible" in err

    def test_bad_rational(self, capsys):
        code, _, err = run_cli(capsys, "dynatomic", "2", "--c", "x/y")
        assert code == cli.EXIT_INVALID

    def test_bad_index(self, capsys):
        code, _, err = run_cli(capsys, "psi", "0")
        assert code == cli.EXIT_INVALID

    def test_verify_failure_on_corrupted_table(self, capsys, monkeypatch):
        real_psi = ratcos.dynatomic.psi

        def corrupt(n):
            if n == 5:
                return PsiPoly(5, IntPoly([7, 1, 1]), False)
            return real_psi(n)

        monkeypatch.setattr(ratcos.dynatomic, "psi", corrupt)
        code, out, _ = run_cli(capsys, "verify", "3")
        assert code == cli.EXIT_VERIFY_FAILED
        assert "FAIL" in out


class TestDeterminism:
    def test_classify_byte_identical(self, capsys):
        _, out1, _ = run_cli(capsys, "classify", "2", "--json")
        _, out2, _ = run_cli(capsys, "classify", "2", "--json")
        assert out1 == out2

    def test_membership_byte_identical(self, capsys):
        args = ("membership", "--poly=-1,-1,1", "--json", "--seed", "9")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_factor_byte_identical(self, capsys):
        args = ("factor", "--poly", "2,-1,-4,0,1", "--json", "--seed", "5")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_dot_file_deterministic(self, capsys, tmp_path):
        f1 = tmp_path / "a.dot"
        f2 = tmp_path / "b.dot"
        run_cli(capsys, "classify", "2", "--dot", str(f1))
        run_cli(capsys, "classify", "2", "--dot", str(f2))
        assert f1.read_bytes() == f2.read_bytes()
        text = f1.read_text()
        assert text.count("digraph") == 3
        assert '"1/5" -> "2/5";' in text


class TestDotOutput:
    def test_membership_dot_labels_elements(self, capsys, tmp_path):
        dot = tmp_path / "m.dot"
        run_cli(capsys, "membership", "--poly=-1,-1,1", "--dot", str(dot))
        text = dot.read_text()
        assert '[label="y - 1"];' in text
        assert text.count("digraph") == 3
