import csv
import io
import json
import math

import numpy as np
import pytest

from concbounds import cli, sweep
from concbounds.qstate import ghz
from concbounds.statefile import StateFileError, dump_state, load_state, parse_state

from conftest import bell


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_state(tmp_path, dims, matrix, name="state.json"):
    doc = {"dims": dims, "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in matrix]}
    path = tmp_path / name
    path.write_text(json.dumps(doc, indent=1))
    return path


# -- state files ---------------------------------------------------------------


def test_state_file_roundtrip(tmp_path):
    s = bell().density()
    path = tmp_path / "bell.json"
    path.write_text(dump_state(s))
    loaded = load_state(path)
    assert loaded.dims == (2, 2)
    np.testing.assert_allclose(loaded.rho, s.rho)


def test_state_file_trace_error(tmp_path):
    path = write_state(tmp_path, [2, 2], np.eye(4) * 0.9 / 4)
    with pytest.raises(StateFileError, match="trace"):
        load_state(path)


def test_state_file_syntax_error_has_line():
    text = '{\n  "dims": [2],\n  "matrix": [[[1, 0], [0, 0]],\n  [[0, 0] [0, 0]]]\n}'
    with pytest.raises(StateFileError) as info:
        parse_state(text, "x.json")
    assert info.value.line == 4
    assert str(info.value).startswith("x.json:4:")


def test_state_file_bad_entry_reports_row_line():
    text = '{"dims": [2],\n "matrix": [\n  [[1, 0], [0, 0]],\n  [[0, 0], [0]]\n ]\n}'
    with pytest.raises(StateFileError) as info:
        parse_state(text, "y.json")
    assert info.value.line == 4
    assert "matrix[1][1]" in str(info.value)


@pytest.mark.parametrize(
    "text,match",
    [
        ('{"dims": [2]}', "dims"),
        ('{"dims": "2", "matrix": [[[1,0]]]}', "dims"),
        ('{"dims": [2], "matrix": [[[1, 0], [0, 0]], [[0, 0]]]}', "entries"),
        ('{"dims": [2, 3], "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}', "6x6"),
    ],
)
def test_state_file_structural_errors(text, match):
    with pytest.raises(StateFileError, match=match):
        parse_state(text)


# -- bound ---------------------------------------------------------------------


def test_bound_ghz_entangled(capsys):
    code, out, _ = run(capsys, "bound", "--family", "ghz", "--n", "3")
    assert code == cli.EXIT_ENTANGLED
    assert "entangled    yes" in out


def test_bound_ghz_json(capsys):
    code, out, _ = run(capsys, "bound", "--family", "ghz", "--n", "3", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["entangled"]
    assert rep["best_lower"] >= 1 - 1e-12
    assert rep["upper_eq14"] == pytest.approx(math.sqrt(1.5), abs=1e-9)


def test_bound_noisy_ghz_undetected(capsys):
    code, out, _ = run(capsys, "bound", "--family", "ghz", "--n", "3", "--noise", "0.1")
    assert code == cli.EXIT_UNDETECTED
    assert "not detected" in out


def test_bound_file_trace_error(tmp_path, capsys):
    path = write_state(tmp_path, [2, 2], np.eye(4) * 0.9 / 4, "bad.json")
    code, _, err = run(capsys, "bound", "--file", str(path))
    assert code == cli.EXIT_ERROR
    assert "bad.json" in err and "trace" in err


def test_bound_file_ok(tmp_path, capsys):
    path = write_state(tmp_path, [2, 2], bell().density().rho)
    code, out, _ = run(capsys, "bound", "--file", str(path), "--json")
    assert code == 0
    assert json.loads(out)["lower_eq12"] == pytest.approx(1, abs=1e-12)


def test_bound_dct_weights(capsys):
    code, _, _ = run(capsys, "bound", "--family", "dct", "--weights", "0.125", "0.125", "0.125", "0.125", "0.125")
    assert code == cli.EXIT_UNDETECTED
    code, _, err = run(capsys, "bound", "--family", "dct", "--weights", "0.5", "0.5", "0.1", "0", "0")
    assert code == cli.EXIT_ERROR and "expected 1" in err


def test_bound_bad_noise(capsys):
    code, _, err = run(capsys, "bound", "--family", "ghz", "--noise", "1.5")
    assert code == cli.EXIT_ERROR


def test_tol_override(capsys):
    # at x = 0.3 the lower bound is 0.125; a stricter verdict threshold hides it
    assert run(capsys, "bound", "--family", "ghz", "--noise", "0.3")[0] == 0
    assert run(capsys, "--tol", "0.2", "bound", "--family", "ghz", "--noise", "0.3")[0] == 1


# -- scan ----------------------------------------------------------------------


def read_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_scan_ghz(tmp_path, capsys):
    out = tmp_path / "ghz.csv"
    assert run(capsys, "scan", "ghz", "--xmin", "0", "--xmax", "1", "--steps", "100", "--out", str(out))[0] == 0
    text = out.read_text()
    assert text.splitlines()[0] == "x,lower_eq12,lower_eq13,upper_eq13,upper_eq14,b1,b2,b3"
    rows = read_rows(text)
    assert len(rows) == 101
    xs = [float(r["x"]) for r in rows]
    assert all(b > a for a, b in zip(xs, xs[1:]))
    last = rows[-1]
    assert float(last["x"]) == 1.0
    assert float(last["lower_eq13"]) == pytest.approx(math.sqrt(1.5), abs=1e-9)
    assert float(last["upper_eq13"]) == pytest.approx(math.sqrt(1.5), abs=1e-9)
    first = next(float(r["x"]) for r in rows if float(r["lower_eq12"]) > 0)
    assert 0.2 < first <= 0.21
    for r in rows:
        x, l12, l13 = float(r["x"]), float(r["lower_eq12"]), float(r["lower_eq13"])
        if x <= 0.72:
            assert l12 >= l13
        if x >= 0.73:
            assert l12 <= l13
        assert all(math.isfinite(float(v)) for v in r.values())


def test_scan_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        run(capsys, "scan", "ghz", "--steps", "10", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_scan_uniform_dct_is_undetected(capsys):
    code, out, _ = run(capsys, "scan", "dct", "--weights", *["0.125"] * 5, "--steps", "10")
    assert code == 0
    for r in read_rows(out):
        assert float(r["lower_eq12"]) == 0 and float(r["lower_eq13"]) == 0


def test_scan_bad_grid_and_path(tmp_path, capsys):
    assert run(capsys, "scan", "ghz", "--xmin", "0.5", "--xmax", "0.5")[0] == cli.EXIT_ERROR
    assert run(capsys, "scan", "ghz", "--steps", "1")[0] == cli.EXIT_ERROR
    missing = tmp_path / "nope" / "x.csv"
    code, _, err = run(capsys, "scan", "ghz", "--steps", "2", "--out", str(missing))
    assert code == cli.EXIT_ERROR and "cannot write" in err


def test_csv_formatting():
    row = sweep.SweepRow(0.1, 1 / 3, 0, 2, 0.5, -1e-20, 1, 1)
    assert sweep.rows_to_csv([row]).splitlines()[1] == "0.1,0.333333333333,0,2,0.5,-1e-20,1,1"


# -- threshold -----------------------------------------------------------------


def test_threshold_ghz(capsys):
    code, out, _ = run(capsys, "threshold", "ghz", "eq12")
    assert code == 0 and float(out) == pytest.approx(0.2, abs=1e-3)
    code, out, _ = run(capsys, "threshold", "ghz", "eq13")
    assert code == 0 and float(out) == pytest.approx(1 / math.sqrt(3), abs=1e-3)


def test_threshold_product_never_positive(capsys):
    code, _, err = run(capsys, "threshold", "product", "eq12")
    assert code == 1 and "never positive" in err
    with pytest.raises(sweep.SweepError, match="never positive"):
        sweep.threshold(sweep.family_state("product"), "eq13")


def test_threshold_dct_example_weights():
    x = sweep.threshold(sweep.family_state("dct"), "eq12", xtol=1e-7)
    assert x == pytest.approx(3 / 7, abs=1e-6)


def test_crossover_ghz():
    x = sweep.crossover(sweep.family_state("ghz"))
    assert x == pytest.approx((-10 + math.sqrt(100 + 4 * 11 * 13)) / 22, abs=1e-5)


def test_unknown_family_and_bound():
    with pytest.raises(sweep.SweepError):
        sweep.family_state("werner")
    with pytest.raises(sweep.SweepError):
        sweep.lower_bound_fn(ghz(3).density(), "eq99")


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--samples", "5")
    assert code == 0
    assert out.count("PASS") == len(out.strip().splitlines())
