import json

import pytest

from heckegaps.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_primes_text(capsys):
    code, out, err = run_cli(capsys, "primes", "--hi", "30")
    assert code == 0
    assert out.splitlines() == ["2", "3", "5", "7", "11", "13", "17", "19", "23", "29"]


def test_primes_count_json(capsys):
    code, out, _ = run_cli(capsys, "primes", "--hi", "1e6", "--count-only",
                           "--format", "json")
    assert code == 0
    assert json.loads(out) == {"lo": 2, "hi": 1000000, "count": 78498}


def test_split_single_json(capsys):
    code, out, _ = run_cli(capsys, "split", "--p", "13", "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert got["representable"] is True
    assert (got["a"], got["b"]) == (-3, 2)


def test_split_not_representable(capsys):
    code, out, _ = run_cli(capsys, "split", "--p", "7")
    assert code == 0
    assert "not representable" in out
    code, out, _ = run_cli(capsys, "split", "--p", "7", "--format", "json")
    assert json.loads(out) == {"p": 7, "representable": False}


def test_split_range_csv(capsys):
    code, out, _ = run_cli(capsys, "split", "--lo", "2", "--hi", "30",
                           "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,a,b,ratio,theta"
    assert [ln.split(",")[0] for ln in lines[1:]] == ["5", "13", "17", "29"]


def test_split_flag_conflict(capsys):
    code, _, err = run_cli(capsys, "split")
    assert code == 1
    assert err.startswith("error:")


def test_curve_trace_single(capsys):
    code, out, _ = run_cli(capsys, "curve-trace", "--curve", "1,1,1,3,3",
                           "--p", "7", "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert got["g"] == 1
    assert got["rows"][0] == {"p": 7, "nd": 3, "affine": 6, "trace": -1,
                              "normalized": got["rows"][0]["normalized"]}


def test_curve_trace_range_with_cache(tmp_path, capsys):
    cache = tmp_path / "c.csv"
    args = ("curve-trace", "--curve", "1,1,1,3,3", "--lo", "2", "--hi", "100",
            "--cache", str(cache), "--format", "csv")
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    assert cache.exists()
    code, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_curve_trace_charsum_backend(capsys):
    code, out, _ = run_cli(capsys, "curve-trace", "--curve", "1,1,1,3,3",
                           "--p", "13", "--backend", "charsum", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith("13,3,6,5")


def test_equidist_ks_json(capsys):
    code, out, _ = run_cli(capsys, "equidist", "--set", "peps", "--eps", "1.0",
                           "--x", "10000", "--stat", "ks", "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert set(got) == {"n", "ks", "measure_kind"}
    assert got["measure_kind"] == "arcsine"
    assert 0.0 <= got["ks"] <= 1.0
    assert got["n"] == 609


def test_equidist_et(capsys):
    code, out, _ = run_cli(capsys, "equidist", "--set", "peps", "--eps", "1.0",
                           "--x", "2000", "--stat", "et", "--measure", "uniform",
                           "--interval", "0.2,0.6", "--T", "5", "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert got["lhs"] <= got["rhs"]


def test_bv_check_csv(capsys):
    code, out, _ = run_cli(capsys, "bv-check", "--set", "primes", "--x", "2000",
                           "--Q", "6", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "q,worst_a,worst_y,observed,expected,abs_err"
    assert lines[-1].startswith("# aggregate")


def test_tuple_narrow(capsys):
    code, out, _ = run_cli(capsys, "tuple", "--k", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["offsets"] == [0, 2, 6]


def test_tuple_check(capsys):
    code, out, _ = run_cli(capsys, "tuple", "--check", "0,2,4", "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert got["admissible"] is False
    assert got["witness"] == 3


def test_tuple_flag_conflict(capsys):
    code, _, err = run_cli(capsys, "tuple", "--k", "3", "--check", "0,2")
    assert code == 1
    assert "error:" in err


def test_sieve_opt_json(capsys):
    code, out, _ = run_cli(capsys, "sieve-opt", "--k", "5", "--degree", "2",
                           "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert got["k"] == 5
    assert got["basis_size"] == 4
    assert got["Mk_lower"] == pytest.approx(1.9905525591659496)
    assert all(set(row) == {"theta", "m"} for row in got["m_at_theta"])


def test_gap_scan_records(capsys):
    code, out, _ = run_cli(capsys, "gap-scan", "--set", "peps", "--eps", "0.95",
                           "--x", "100", "--records", "2", "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert got["records"][0] == {"gap": 4, "p": 13, "q": 17}


def test_gap_scan_tuple(capsys):
    code, out, _ = run_cli(capsys, "gap-scan", "--set", "primes", "--x", "50",
                           "--tuple", "0,2", "--format", "json")
    assert code == 0
    got = json.loads(out)
    assert sum(got["histogram"].values()) == 50


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "tuple", "--k", "4", "--format", "json",
                           "--output", str(target))
    assert code == 0
    assert out == ""
    code, out2, _ = run_cli(capsys, "tuple", "--k", "4", "--format", "json")
    assert target.read_text() == out2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["equidist", "--x", "abc"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_bad_threads_rejected(capsys):
    code, _, err = run_cli(capsys, "primes", "--hi", "10", "--threads", "0")
    assert code == 2
    assert "threads" in err


def test_computation_error_exit_1(capsys):
    code, _, err = run_cli(capsys, "bv-check", "--set", "primes", "--x", "100",
                           "--Q", "1000")
    assert code == 1
    assert err.startswith("error:")


def test_repeat_runs_identical(capsys):
    args = ("equidist", "--set", "peps", "--eps", "0.8", "--x", "5000",
            "--stat", "ks", "--format", "json")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
