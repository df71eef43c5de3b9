import json
import math

import pytest

from vmlattice.cli import main
from vmlattice.numtheory import mod_inverse


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_weights_optimal(capsys):
    code, out, _ = run(capsys, "weights", "--N", "13", "--z", "1,8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "corner,weight"
    assert len(lines) == 5
    total = sum(float(ln.rsplit(",", 1)[1]) for ln in lines[1:])
    assert total == pytest.approx(1 / 13, rel=1e-12)


def test_weights_trapezoidal(capsys):
    code, out, _ = run(capsys, "weights", "--N", "10", "--z", "1",
                       "--scheme", "trapezoidal")
    assert code == 0
    vals = [float(ln.rsplit(",", 1)[1]) for ln in out.strip().splitlines()[1:]]
    assert vals == [0.05, 0.05]


def test_weights_rejects_shared_factor(capsys):
    code, _, err = run(capsys, "weights", "--N", "10", "--z", "2")
    assert code == 2
    assert "2" in err and "10" in err


def test_weights_json_schema(capsys):
    code, out, _ = run(capsys, "weights", "--N", "13", "--z", "1,8",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["N"] == 13 and doc["z"] == [1, 8] and doc["scheme"] == "optimal"
    assert [e["corner"] for e in doc["vertex_weights"]] == [
        [0, 0], [1, 0], [0, 1], [1, 1],
    ]


def test_wce_optimal_with_closed_form(capsys):
    code, out, _ = run(capsys, "wce", "--N", "17", "--z", "1,5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "sq_total,sq_korobov,sq_multilinear,mixture"
    vals = dict(zip(lines[0].split(","), map(float, lines[1].split(","))))
    assert vals["mixture"] == pytest.approx(2.39e-4, abs=0.005e-4)
    assert "# closed_form_agrees=true" in lines
    assert any(ln.startswith("# mixture_lower=") for ln in lines)


def test_wce_trapezoid_value(capsys):
    code, out, _ = run(capsys, "wce", "--N", "4", "--z", "1", "--s", "1",
                       "--scheme", "trapezoidal")
    assert code == 0
    wce_line = next(ln for ln in out.splitlines() if ln.startswith("# wce="))
    assert float(wce_line.split("=")[1]) == pytest.approx(0.0721688, abs=5e-8)


def test_wce_plain_has_multilinear_part(capsys):
    code, out, _ = run(capsys, "wce", "--N", "13", "--z", "1,8",
                       "--scheme", "plain", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["sq_multilinear"] > 1e-4
    assert set(doc) >= {"sq_total", "sq_korobov", "sq_multilinear", "mixture"}


def test_wce_dimension_mismatch_exits_2(capsys):
    code, _, err = run(capsys, "wce", "--N", "17", "--z", "1,5", "--s", "3")
    assert code == 2 and "disagrees" in err


def test_wce_internal_mismatch_exits_3(capsys, monkeypatch):
    import vmlattice.cli as cli

    class FakePair:
        total = 99.0

    monkeypatch.setattr(cli, "mixture_term_s2", lambda rule, gamma: FakePair())
    code, _, err = run(capsys, "wce", "--N", "17", "--z", "1,5")
    assert code == 3
    assert "disagrees" in err


def test_search_rows(capsys):
    code, out, _ = run(capsys, "search", "--N", "17,37,67")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "N,z,wce2_total,wce2_korobov,mixture"
    got = {int(ln.split(",")[0]): int(ln.split(",")[1]) for ln in lines[1:]}
    for n, z_ref in [(17, 5), (37, 11), (67, 18)]:
        zinv = mod_inverse(z_ref, n)
        assert got[n] in {z_ref, n - z_ref, zinv, n - zinv}


def test_search_composite_exits_2(capsys):
    code, _, err = run(capsys, "search", "--N", "16")
    assert code == 2 and "16" in err


def test_search_full_dump(capsys):
    code, out, _ = run(capsys, "search", "--N", "521", "--full")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 520
    best = min(lines[1:], key=lambda ln: float(ln.split(",")[2]))
    z_best = int(best.split(",")[1])
    zinv = mod_inverse(377, 521)
    assert z_best in {377, 521 - 377, zinv, 521 - zinv}


def test_search_range_keeps_primes_only(capsys):
    code, out, _ = run(capsys, "search", "--N", "8..12")
    assert code == 0
    ns = [int(ln.split(",")[0]) for ln in out.strip().splitlines()[1:]]
    assert ns == [11]


def test_fib_single(capsys):
    code, out, _ = run(capsys, "fib", "--k", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("k,")
    assert lines[1].startswith("7,") and lines[1].endswith(",true")


def test_fib_range(capsys):
    code, out, _ = run(capsys, "fib", "--k", "4..12")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 9
    assert all(row.endswith(",true") for row in rows)


def test_fib_below_range_exits_2(capsys):
    code, _, _ = run(capsys, "fib", "--k", "3")
    assert code == 2


def test_conjecture_single(capsys):
    code, out, _ = run(capsys, "conjecture", "--N", "101")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert float(row[1]) < 1e-8
    assert row[3] == "true"


def test_conjecture_range_all_pass(capsys):
    code, out, _ = run(capsys, "conjecture", "--N", "3..60")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 58
    assert all(r.endswith(",true") for r in rows)


def test_conjecture_single_z(capsys):
    code, out, _ = run(capsys, "conjecture", "--N", "13", "--z", "8")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert row[:2] == ["13", "8"]
    assert abs(float(row[2])) < 1e-13


def test_plotdata_columns_and_reference(capsys):
    code, out, _ = run(capsys, "plotdata", "--N", "17..257")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "N,sqrt_sq_total,sqrt_mixture,ref_loghalf,ref_log2"
    first = lines[1].split(",")
    assert first[0] == "17"
    assert float(first[1]) == pytest.approx(4.65e-2, abs=0.005e-2)
    for ln in lines[1:]:
        n, _tot, mix, loghalf, _log2 = ln.split(",")
        ratio = float(mix) / float(loghalf)
        assert 0.05 < ratio < 5.0


def test_plotdata_empty_prime_range_exits_2(capsys):
    code, _, _ = run(capsys, "plotdata", "--N", "24..28")
    assert code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "search", "--N", "17", "--output", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("N,z,")


def test_search_deterministic_across_jobs(capsys, monkeypatch):
    monkeypatch.delenv("VMLATTICE_JOBS", raising=False)
    code1, out1, _ = run(capsys, "search", "--N", "17..131", "--jobs", "1")
    code2, out2, _ = run(capsys, "search", "--N", "17..131", "--jobs", "4")
    assert code1 == code2 == 0
    assert out1 == out2


def test_jobs_env_wins(capsys, monkeypatch):
    monkeypatch.setenv("VMLATTICE_JOBS", "2")
    code, out, _ = run(capsys, "search", "--N", "17..67", "--jobs", "8")
    assert code == 0
    assert out.startswith("N,z,")


def test_unknown_subcommand_exits_2(capsys):
    assert main(["bogus"]) == 2


def test_search_json(capsys):
    code, out, _ = run(capsys, "search", "--N", "17", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["N"] == 17 and doc[0]["z"] == 5
    assert set(doc[0]) == {"N", "z", "wce2_total", "wce2_korobov", "mixture"}
