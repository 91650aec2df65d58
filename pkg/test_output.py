"""CSV/JSON rendering."""
import io
import json
import math

import numpy as np
import pytest

from gup_systems import output

ROWS = [
    {"n": 1, "energy": 1.8557571281, "psi": complex(0.25, -1e-7), "ok": True},
    {"n": 2, "energy": 3.2446076794, "psi": complex(-0.5, 2.0), "ok": False},
]


@pytest.mark.parametrize("value", [0.1, 1.0 / 3.0, 1.8557571281147, -0.5, 123456.789, 2.5e-9, -7.1e12, 0.0])
def test_format_number_round_trips(value):
    assert float(output.format_number(value)) == value


def test_format_number_notation():
    assert output.format_number(0.5) == "0.5"
    assert output.format_number(0.0) == "0.0"
    assert "e" in output.format_number(1e-5)
    assert "e" in output.format_number(2e6)
    assert "e" not in output.format_number(999999.5)
    assert output.format_number(float("nan")) == "nan"
    assert output.format_number(-math.inf) == "-inf"


def test_flatten_splits_complex_and_numpy_scalars():
    flat = output.flatten_row({"S": np.complex128(0.5 - 0.5j), "T": np.float64(0.5), "n": np.int64(3)})
    assert flat == {"S_re": 0.5, "S_im": -0.5, "T": 0.5, "n": 3}
    assert type(flat["T"]) is float and type(flat["n"]) is int


def test_csv_round_trip():
    text = output.to_csv(ROWS)
    assert text.splitlines()[0] == "n,energy,psi_re,psi_im,ok"
    assert text.endswith("\n") and "\r" not in text
    frame = output.read_csv(io.StringIO(text))
    assert list(frame["n"]) == [1, 2]
    assert list(frame["energy"]) == [1.8557571281, 3.2446076794]
    assert frame["psi_im"][0] == -1e-7
    assert list(frame["ok"]) == [True, False]


def test_csv_of_nothing_is_empty():
    assert output.to_csv([]) == ""


def test_json_envelope():
    text = output.render("json", "linear", {"mass": 1.0, "lam": np.float64(0.5)}, ROWS)
    document = json.loads(text)
    assert tuple(document) == output.ENVELOPE_KEYS
    assert document["command"] == "linear"
    assert document["params"] == {"mass": 1.0, "lam": 0.5}
    assert document["rows"][0]["psi_re"] == 0.25
    assert document["rows"][1]["energy"] == 3.2446076794
    assert document["checks"] == []
    assert text.endswith("}\n")


def test_csv_falls_back_to_checks():
    checks = [{"name": "airy_wronskian", "passed": True, "value": 1e-15}]
    text = output.render("csv", "verify", {}, [], checks)
    assert text.splitlines() == ["name,passed,value", "airy_wronskian,true,1.0e-15"]


def test_rendering_is_deterministic():
    first = output.render("json", "barrier", {"lam": 0.3}, ROWS)
    assert output.render("json", "barrier", {"lam": 0.3}, ROWS) == first
    assert output.render("csv", "barrier", {"lam": 0.3}, ROWS) == output.render("csv", "barrier", {}, ROWS)


def test_unknown_format():
    with pytest.raises(ValueError):
        output.render("xml", "linear", {}, ROWS)


def test_json_non_finite_values_become_null():
    checks = [{"name": "boom", "passed": False, "value": float("nan"), "tolerance": math.inf}]
    text = output.render("json", "verify", {}, [], checks)

    def reject(token):
        raise ValueError(f"non-standard JSON constant {token}")

    document = json.loads(text, parse_constant=reject)
    assert document["checks"][0]["value"] is None
    assert document["checks"][0]["tolerance"] is None
