import json

import numpy as np
import pytest

from cazac.cli import run


def lines_of(capsys):
    return capsys.readouterr().out.strip().splitlines()


class TestGen:
    def test_emits_samples(self, capsys):
        assert run(["gen", "--p", "7"]) == 0
        out = lines_of(capsys)
        assert len(out) == 7
        for line in out:
            re_s, im_s = line.split(",")
            assert abs(complex(float(re_s), float(im_s))) == pytest.approx(1.0, abs=1e-12)

    def test_chirp_variant(self, capsys):
        assert run(["gen", "--p", "5", "--chirp", "1", "0"]) == 0
        out = lines_of(capsys)
        z = complex(*map(float, out[1].split(",")))
        assert z == pytest.approx(np.exp(2j * np.pi / 5), abs=1e-12)

    def test_rejects_non_prime(self, capsys):
        assert run(["gen", "--p", "8"]) == 1
        assert "8 is not an odd prime" in capsys.readouterr().err

    def test_out_file_written_atomically(self, tmp_path, capsys):
        target = tmp_path / "seq.txt"
        assert run(["gen", "--p", "7", "--out", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert len(target.read_text().strip().splitlines()) == 7
        assert list(tmp_path.iterdir()) == [target]  # no temp file left behind


class TestVerify:
    def test_report_flags(self, capsys):
        assert run(["verify", "--p", "13", "--tol", "1e-9"]) == 0
        out = capsys.readouterr().out
        assert "ca_ok=true" in out
        assert "zac_ok=true" in out
        assert "biunimodular=true" in out


class TestAmbiguity:
    def test_max(self, capsys):
        assert run(["ambiguity", "--p", "7", "--max"]) == 0
        out = capsys.readouterr().out
        assert "max_abs=0.59907420" in out
        assert "argmax_m=1" in out

    def test_row(self, capsys):
        assert run(["ambiguity", "--p", "7", "--row", "0"]) == 0
        out = lines_of(capsys)
        assert out[0] == "m,n,re,im,abs"
        assert len(out) == 8
        assert out[1].startswith("0,0,1,")

    def test_table(self, capsys):
        assert run(["ambiguity", "--p", "5", "--table"]) == 0
        assert len(lines_of(capsys)) == 1 + 25

    def test_requires_exactly_one_mode(self, capsys):
        assert run(["ambiguity", "--p", "7"]) == 1
        assert run(["ambiguity", "--p", "7", "--max", "--table"]) == 1


class TestSums:
    def test_kloosterman(self, capsys):
        assert run(["sums", "--p", "5", "--kloosterman", "1", "1"]) == 0
        value = float(capsys.readouterr().out)
        assert value == pytest.approx((3 - 5**0.5) / 2, abs=1e-12)

    def test_gauss(self, capsys):
        assert run(["sums", "--p", "5", "--gauss", "1"]) == 0
        re_s, im_s = capsys.readouterr().out.strip().split(",")
        assert float(re_s) == pytest.approx(5**0.5, abs=1e-10)
        assert float(im_s) == pytest.approx(0.0, abs=1e-10)

    def test_salie(self, capsys):
        assert run(["sums", "--p", "7", "--salie", "1"]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(2.0489173, abs=1e-6)

    def test_jacobsthal(self, capsys):
        assert run(["sums", "--p", "7", "--jacobsthal", "2", "1"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_weil_audit_json(self, capsys):
        assert run(["sums", "--p", "7", "--weil-audit"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["p"] == 7
        assert obj["max_ratio"] <= 1.0
        assert 1 <= obj["worst_a"] < 7

    def test_salie_divisible_a_is_validation_error(self, capsys):
        assert run(["sums", "--p", "7", "--salie", "14"]) == 1


class TestScan:
    def test_csv_output(self, capsys):
        assert run(["scan", "--range", "3:30"]) == 0
        out = lines_of(capsys)
        assert len(out) == 10
        assert out[0].startswith("p,class,")

    def test_jsonl_output(self, capsys):
        assert run(["scan", "--range", "3:30", "--format", "jsonl"]) == 0
        out = lines_of(capsys)
        assert len(out) == 9
        assert json.loads(out[0])["p"] == 3

    def test_jobs_do_not_change_csv(self, capsys):
        assert run(["scan", "--range", "3:30"]) == 0
        serial = capsys.readouterr().out
        assert run(["scan", "--range", "3:30", "--jobs", "2"]) == 0
        assert capsys.readouterr().out == serial

    def test_class_filter(self, capsys):
        assert run(["scan", "--range", "3:30", "--class", "3mod4"]) == 0
        out = lines_of(capsys)
        assert [int(line.split(",")[0]) for line in out[1:]] == [3, 7, 11, 19, 23]

    def test_malformed_range(self, capsys):
        assert run(["scan", "--range", "3-30"]) == 1
        assert "malformed range" in capsys.readouterr().err

    def test_reversed_range(self, capsys):
        assert run(["scan", "--range", "30:3"]) == 1


class TestTableAndFigure:
    def test_table(self, capsys):
        assert run(["table", "--primes", "7,13,139"]) == 0
        out = lines_of(capsys)
        assert len(out) == 4
        assert out[1] == "7,0.599074,0.755929,0.971909,false"
        assert out[3].startswith("139,0.171326,0.169638,")
        assert out[3].endswith("true")

    def test_table_rejects_composites(self, capsys):
        assert run(["table", "--primes", "7,8"]) == 1

    def test_figure(self, capsys):
        assert run(["figure", "--range", "3:30"]) == 0
        out = lines_of(capsys)
        assert out[0] == "p,max_ambiguity,two_over_sqrt_p,two_over_sqrt_p_plus_4_over_p"
        assert len(out) == 10


class TestParsing:
    def test_unknown_flag(self, capsys):
        assert run(["scan", "--range", "3:30", "--nope"]) == 1

    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 1

    def test_no_arguments(self, capsys):
        assert run([]) == 1

    def test_help_exits_zero(self, capsys):
        assert run(["--help"]) == 0
        assert "gen" in capsys.readouterr().out
