import json
import math

import pytest

from lt_spectral.cli import (DEFAULT_SEED, EXIT_INEQUALITY, EXIT_NUMERICAL,
                             EXIT_PASS, EXIT_USAGE, main, random_piecewise,
                             splitmix64)
from lt_spectral.potential import SquareWell


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def well_file(tmp_path):
    path = tmp_path / "well.json"
    path.write_text(json.dumps(SquareWell(2.0, -1.0, 1.0).to_json_dict()))
    return str(path)


@pytest.fixture
def half_well_file(tmp_path):
    V = SquareWell(3.0, 0.0, 2.0, domain="half_line")
    path = tmp_path / "half.json"
    path.write_text(json.dumps(V.to_json_dict()))
    return str(path)


class TestRng:
    def test_splitmix_deterministic(self):
        a = splitmix64(1)
        b = splitmix64(1)
        assert [next(a) for _ in range(5)] == [next(b) for _ in range(5)]

    def test_seed_sensitivity(self):
        xs = [next(splitmix64(s)) for s in range(20)]
        assert len(set(xs)) == 20
        assert all(0.0 <= x < 1.0 for x in xs)

    def test_default_seed_potential(self):
        V = random_piecewise(DEFAULT_SEED)
        assert len(V.values) >= 3


class TestCertify:
    def test_pass_on_random(self, capsys):
        code, out = run(capsys, "certify")
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["verdict"] == "pass"
        assert doc["lower"] <= doc["sum_sqrt"] + doc["sum_sqrt_error"]

    def test_from_file(self, capsys, well_file):
        code, out = run(capsys, "certify", "--potential", well_file)
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["integral_V"] == pytest.approx(4.0, rel=1e-9)

    def test_deterministic_bytes(self, capsys):
        _, out1 = run(capsys, "certify", "--seed", "7")
        _, out2 = run(capsys, "certify", "--seed", "7")
        assert out1 == out2

    def test_out_file(self, tmp_path, capsys, well_file):
        target = tmp_path / "cert.json"
        code, out = run(capsys, "certify", "--potential", well_file,
                        "--out", str(target))
        assert code == EXIT_PASS
        assert out == ""
        json.loads(target.read_text())


class TestConstants:
    def test_default_grid(self, capsys):
        code, out = run(capsys, "constants")
        assert code == EXIT_PASS
        lines = out.strip().splitlines()
        assert lines[0].startswith("gamma,")
        assert lines[0].endswith(",L_best")
        assert len([l for l in lines if not l.startswith("#")]) == 12
        assert lines[-1].startswith("# crossover_gamma = 1.16")

    def test_single_gamma(self, capsys):
        code, out = run(capsys, "constants", "--gamma", "1.0")
        assert code == EXIT_PASS
        row = out.strip().splitlines()[1].split(",")
        assert float(row[0]) == 1.0
        assert float(row[1]) == pytest.approx(2.0 / (3.0 * math.pi))

    def test_grid_argument(self, capsys):
        code, out = run(capsys, "constants", "--gamma-grid", "0.6:1.4:5")
        assert code == EXIT_PASS
        data = [l for l in out.strip().splitlines()[1:]
                if not l.startswith("#")]
        assert len(data) == 5
        assert float(data[0].split(",")[0]) == pytest.approx(0.6)

    def test_gamma_out_of_range(self, capsys):
        code, _ = run(capsys, "constants", "--gamma", "0.3")
        assert code == EXIT_USAGE

    def test_bad_grid_syntax(self, capsys):
        code, _ = run(capsys, "constants", "--gamma-grid", "nope")
        assert code == EXIT_USAGE


class TestPartition:
    def test_half_line_json(self, capsys, half_well_file):
        code, out = run(capsys, "partition", "--potential", half_well_file)
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["breakpoints"][0] == 0.0
        assert doc["breakpoints"][-1] == "inf"
        assert doc["breakpoints"][1] == pytest.approx(1.0, abs=1e-9)
        assert not doc["degenerate"]
        assert len(doc["lambda_lower"]) == len(doc["masses"])

    def test_rejects_full_line(self, capsys, well_file):
        code, _ = run(capsys, "partition", "--potential", well_file)
        assert code == EXIT_USAGE

    def test_random_default_is_half_line(self, capsys):
        code, out = run(capsys, "partition")
        assert code == EXIT_PASS
        json.loads(out)


class TestScatter:
    def test_csv_output(self, capsys, well_file):
        code, out = run(capsys, "scatter", "--potential", well_file)
        assert code == EXIT_PASS
        lines = out.strip().splitlines()
        assert lines[0] == "k,re_R,im_R,abs_R2,unitarity_defect"
        assert len(lines) >= 401
        assert all(len(l.split(",")) == 5 for l in lines[1:])

    def test_deterministic_bytes(self, capsys):
        _, out1 = run(capsys, "scatter", "--seed", "3")
        _, out2 = run(capsys, "scatter", "--seed", "3")
        assert out1 == out2


class TestSumRule:
    def test_pass(self, capsys, well_file):
        code, out = run(capsys, "sumrule", "--potential", well_file)
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["pass"]
        assert abs(doc["residual"]) < 1e-3
        assert doc["integral_V"] == pytest.approx(4.0)


class TestKyfan:
    def test_even_split(self, capsys, well_file):
        code, out = run(capsys, "kyfan", "--potential", well_file)
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["ok"]
        assert len(doc["margins"]) == 6
        assert all(m >= 0.0 for m in doc["margins"])
        assert doc["factor0"] == doc["factor1"]


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_missing_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_missing_potential_file(self, capsys):
        code = main(["certify", "--potential", "/nonexistent.json"])
        assert code == EXIT_USAGE

    def test_malformed_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["certify", "--potential", str(bad)]) == EXIT_USAGE

    def test_unknown_family(self, tmp_path, capsys):
        bad = tmp_path / "fam.json"
        bad.write_text('{"family": "mystery", "params": {}}')
        assert main(["certify", "--potential", str(bad)]) == EXIT_USAGE

    def test_signed_potential_for_kyfan(self, tmp_path, capsys):
        from lt_spectral.potential import PiecewiseConstant
        signed = PiecewiseConstant([0.0, 1.0], [-1.0])
        path = tmp_path / "signed.json"
        path.write_text(json.dumps(signed.to_json_dict()))
        assert main(["kyfan", "--potential", str(path)]) == EXIT_USAGE

    def test_bad_tolerance(self, capsys, well_file):
        code = main(["certify", "--potential", well_file, "--tol", "-1"])
        assert code == EXIT_USAGE


class TestRounding:
    def test_fifteen_digits(self, capsys, well_file):
        _, out = run(capsys, "sumrule", "--potential", well_file)
        doc = json.loads(out)
        for v in (doc["integral_V"], doc["residual"]):
            assert v == float(f"{v:.15g}")
