import json
import subprocess
import sys
from fractions import Fraction

import pytest

from partial_cramer.affine import AffineSolution
from partial_cramer.cli import (
    EXIT_CHECK_FAILED,
    EXIT_DIMENSION,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_SINGULAR,
    EXIT_ZERO_MINOR,
    main,
)
from partial_cramer.sampling import random_rational_system
from partial_cramer.scalars import to_json_value

from conftest import DATA_DIR

CHAIN5 = str(DATA_DIR / "chain5.json")
SWAP2 = str(DATA_DIR / "swap2.json")
MIXED3 = str(DATA_DIR / "mixed3.json")
MODEL = str(DATA_DIR / "chain_model.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(path)


def test_det_chain(capsys):
    code, out, err = run(capsys, "det", CHAIN5)
    assert (code, out, err) == (EXIT_OK, "det = 1\n", "")


def test_det_methods_agree(capsys):
    _, fast, _ = run(capsys, "det", MIXED3)
    _, leib, _ = run(capsys, "det", MIXED3, "--method", "leibniz")
    assert fast == leib == "det = -137/6\n"


def test_det_identity_file(tmp_path, capsys):
    path = write(tmp_path, "id.json", {"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "rhs": [1, 2, 3]})
    code, out, _ = run(capsys, "det", path, "--json")
    assert code == EXIT_OK
    assert json.loads(out)["det"] == 1


def test_minors(capsys):
    code, out, _ = run(capsys, "minors", MIXED3)
    assert code == EXIT_OK
    assert out.splitlines() == ["D1 = 2", "D2 = 4", "D3 = -137/6"]
    code, out, _ = run(capsys, "minors", SWAP2, "--json")
    assert json.loads(out)["minors"] == [0, -1]


def test_full_solve_chain(capsys):
    code, out, _ = run(capsys, "solve", CHAIN5)
    assert code == EXIT_OK
    assert out.splitlines() == ["det(R) = 1", "x1 = 30", "x2 = 28", "x3 = 24", "x4 = 18", "x5 = 10"]


def test_partial_chain_expressions(capsys):
    code, out, _ = run(capsys, "solve", CHAIN5, "--partial", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "D3 = 1"
    assert lines[1] == "x1 = 1·x'1 + 1·x'2 + 1·x'3 + 1·x4"
    assert lines[3] == "x3 = 1·x'3 + 1·x4"


def test_partial_json_round_trip(capsys):
    _, text, _ = run(capsys, "solve", MIXED3, "--partial", "2")
    _, js, _ = run(capsys, "solve", MIXED3, "--partial", "2", "--json")
    sol = AffineSolution.from_json(json.loads(js))
    assert sol.d_j == 4
    assert sol.expressions() == text.splitlines()[1:]


def test_partial_columns_method_same_output(capsys):
    _, a, _ = run(capsys, "solve", MIXED3, "--partial", "2")
    _, b, _ = run(capsys, "solve", MIXED3, "--partial", "2", "--method", "columns")
    assert a == b


def test_partial_out_of_range(capsys):
    code, out, err = run(capsys, "solve", CHAIN5, "--partial", "9")
    assert code == EXIT_DIMENSION
    assert out == ""
    assert err.startswith("partial-cramer:")


def test_zero_minor_exit(capsys):
    code, out, err = run(capsys, "solve", SWAP2, "--partial", "1")
    assert code == EXIT_ZERO_MINOR
    assert out == ""
    assert "D1" in err and "--reorder" in err


def test_zero_minor_trace_goes_to_stderr(tmp_path, capsys):
    path = write(tmp_path, "z.json", {"matrix": [[1, 2, 0], [2, 4, 1], [0, 1, 1]], "rhs": [1, 1, 1]})
    code, out, err = run(capsys, "solve", path, "--trace")
    assert code == EXIT_ZERO_MINOR
    assert out == ""
    assert "step 1: D1 = 1" in err


def test_trace_cut_before_zero_minor(tmp_path, capsys):
    path = write(tmp_path, "z.json", {"matrix": [[1, 2, 0], [2, 4, 1], [0, 1, 1]], "rhs": [1, 1, 1]})
    code, out, _ = run(capsys, "solve", path, "--trace", "--partial", "1")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "step 1: D1 = 1"


def test_reorder(capsys):
    code, out, _ = run(capsys, "solve", SWAP2, "--partial", "1", "--reorder")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "equation order: 2 1"
    assert "x1 = 1·x'1" in lines
    code, out, _ = run(capsys, "solve", SWAP2, "--reorder", "--json")
    payload = json.loads(out)
    assert payload["row_permutation"] == [2, 1]
    assert payload["x"] == ["1/2", 3]


def test_trace_chain(capsys):
    code, out, _ = run(capsys, "solve", CHAIN5, "--trace")
    assert code == EXIT_OK
    heads = [line for line in out.splitlines() if line.startswith("step")]
    assert heads == [f"step {j}: D{j} = 1" for j in range(1, 6)]
    assert "  x5 = 1·x'5" in out.splitlines()


def test_float_mode(capsys):
    code, out, _ = run(capsys, "solve", MIXED3, "--float", "--json")
    assert code == EXIT_OK
    x = json.loads(out)["x"]
    assert all(isinstance(v, float) for v in x)
    _, exact, _ = run(capsys, "solve", MIXED3, "--json")
    for a, b in zip(x, json.loads(exact)["x"]):
        assert a == pytest.approx(float(Fraction(b)), rel=1e-12)


def test_singular_exit(tmp_path, capsys):
    path = write(tmp_path, "s.json", {"matrix": [[1, 2], [2, 4]], "rhs": [1, 1]})
    code, out, err = run(capsys, "solve", path)
    assert code == EXIT_SINGULAR
    assert out == "" and err.startswith("partial-cramer:")


@pytest.mark.parametrize(
    "content",
    [
        '{"matrix": [[1, 2], [3, 4]], "rhs": [1,',
        '{"matrix": [[1, "x"], [3, 4]], "rhs": [1, 2]}',
        '{"matrix": [[1, 0.5], [3, 4]], "rhs": [1, 2]}',
        "[1, 2, 3]",
    ],
)
def test_parse_errors(tmp_path, capsys, content):
    code, out, err = run(capsys, "solve", write(tmp_path, "bad.json", content))
    assert code == EXIT_PARSE
    assert out == ""
    assert err.startswith("partial-cramer:")


def test_parse_error_has_location(tmp_path, capsys):
    path = write(tmp_path, "bad.json", '{\n  "matrix": [[1, 2], [3, 4]],\n  "rhs": [1,\n')
    _, _, err = run(capsys, "det", path)
    assert f"{path}:4:1:" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "det", str(tmp_path / "nope.json"))
    assert code == EXIT_PARSE
    assert "cannot read" in err


@pytest.mark.parametrize(
    "data",
    [
        {"matrix": [[1, 2, 3], [3, 4, 5]], "rhs": [1, 2]},
        {"matrix": [[1, 2], [3, 4]], "rhs": [1, 2, 3]},
        {"n": 3, "matrix": [[1, 2], [3, 4]], "rhs": [1, 2]},
    ],
)
def test_dimension_errors(tmp_path, capsys, data):
    code, out, _ = run(capsys, "solve", write(tmp_path, "d.json", data))
    assert code == EXIT_DIMENSION
    assert out == ""


def test_model_pass(capsys):
    code, out, _ = run(capsys, "model", MODEL)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("# chain model")
    assert "x1 = 12" in lines and "x3 = 6" in lines
    assert lines[-1] == "closed-form check: PASS"


def test_model_partial_and_json(capsys):
    code, out, _ = run(capsys, "model", MODEL, "--partial", "2", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["closed_form"] == [12, 10, 6]
    assert payload["closed_form_check"] == "PASS"


def test_model_single_mass(tmp_path, capsys):
    path = write(tmp_path, "m.json", {"model": "chain", "masses": ["3/2"], "acceleration": 4})
    code, out, _ = run(capsys, "model", path)
    assert code == EXIT_OK
    assert "x1 = 6" in out.splitlines()


def test_model_float(capsys):
    code, out, _ = run(capsys, "model", MODEL, "--float")
    assert code == EXIT_OK
    assert "closed-form check: PASS" in out


@pytest.mark.parametrize(
    "data",
    [
        {"model": "chain", "masses": [], "acceleration": 1},
        {"model": "chain", "masses": [1, -2], "acceleration": 1},
        {"model": "pulley", "masses": [1], "acceleration": 1},
        {"model": "chain", "masses": [1]},
    ],
)
def test_model_invalid(tmp_path, capsys, data):
    code, out, err = run(capsys, "model", write(tmp_path, "m.json", data))
    assert code == EXIT_PARSE
    assert out == "" and err


def test_model_check_failure_exit(monkeypatch, capsys):
    import partial_cramer.cli as cli
    from partial_cramer.matrix import ColumnVector

    monkeypatch.setattr(cli, "chain_closed_form", lambda spec: ColumnVector.of([0] * spec.n))
    code, out, err = run(capsys, "model", MODEL)
    assert code == EXIT_CHECK_FAILED
    assert out.splitlines()[-1] == "closed-form check: FAIL"
    assert "closed-form check failed" in err


def test_check_all(capsys):
    code, out, _ = run(capsys, "check", MIXED3, "--all")
    assert code == EXIT_OK
    assert out.splitlines() == ["p=2: PASS (10/10 points)", "p=3: PASS (10/10 points)"]


def test_check_random_file(tmp_path, rng, capsys):
    sys_ = random_rational_system(6, rng, nonzero_minors=True)
    data = {
        "matrix": [[to_json_value(v) for v in row] for row in sys_.r.to_rows()],
        "rhs": [to_json_value(v) for v in sys_.x_prime],
    }
    path = write(tmp_path, "r6.json", data)
    code, out, _ = run(capsys, "check", path, "--all", "--trials", "5")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 5
    assert all("PASS" in line for line in out.splitlines())
    code, out, _ = run(capsys, "check", path, "--identity", "4", "--float")
    assert code == EXIT_OK and "p=4: PASS" in out


def test_check_needs_nonzero_minors(capsys):
    code, _, err = run(capsys, "check", SWAP2, "--all")
    assert code == EXIT_ZERO_MINOR
    assert "D1" in err


def test_check_identity_out_of_range(capsys):
    assert run(capsys, "check", CHAIN5, "--identity", "1")[0] == EXIT_DIMENSION


def test_exit_code_constants_distinct():
    codes = [EXIT_OK, EXIT_PARSE, EXIT_DIMENSION, EXIT_SINGULAR, EXIT_ZERO_MINOR, EXIT_CHECK_FAILED]
    assert len(set(codes)) == len(codes)


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "partial_cramer", "det", CHAIN5],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "det = 1\n"
