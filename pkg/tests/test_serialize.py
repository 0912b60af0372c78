import json

import numpy as np
import pytest

from finiteweyl.basis import cartan_partition_prime, cartan_partition_prime_power
from finiteweyl.mub import hadamard_h_a
from finiteweyl.operators import MonomialOperator, weyl_pair
from finiteweyl.phases import PhaseExponent
from finiteweyl.serialize import (
    export,
    import_exact,
    json_dumps,
    matrix_to_csv,
    parse_index,
)


def test_phase_round_trip():
    p = PhaseExponent(7, 5)
    text = export(p, "json")
    payload = json.loads(text)
    assert payload["schema"] == 1
    assert payload["tau_exp"] == 7 and payload["tau_denominator"] == 10
    assert import_exact(text) == p


def test_monomial_round_trip():
    x, _ = weyl_pair(3)
    text = export(x, "json")
    payload = json.loads(text)
    assert payload == {
        "schema": 1,
        "type": "monomial",
        "d": 3,
        "tau_exp": 0,
        "shift": 1,
        "clock": 0,
    }
    assert import_exact(text) == x
    fancy = MonomialOperator.from_tau_exponent(6, 11, 4, 5)
    assert import_exact(export(fancy, "json")) == fancy


def test_partition_round_trip_bit_identical():
    part = cartan_partition_prime(7)
    text = export(part, "json")
    rebuilt = import_exact(text)
    assert rebuilt.classes == part.classes
    assert rebuilt.complete == part.complete
    assert export(rebuilt, "json") == text


def test_tensor_partition_round_trip():
    part = cartan_partition_prime_power(2, 2)
    text = export(part, "json")
    rebuilt = import_exact(text)
    assert rebuilt.classes == part.classes
    assert rebuilt.tensor_dims == (2, 2)
    assert export(rebuilt, "json") == text


def test_hadamard_round_trip():
    h = hadamard_h_a(4, 3)
    text = export(h, "json")
    rebuilt = import_exact(text)
    assert np.array_equal(rebuilt.exponents, h.exponents)
    assert export(rebuilt, "json") == text


def test_csv_format():
    _, z = weyl_pair(2)
    text = export(z, "csv")
    assert text == "1,0,0,0\n0,0,-1,0\n"
    # row 0 of the a=1 qubit Hadamard is (i, -i), row 1 is (1, 1)
    h = hadamard_h_a(2, 1)
    lines = export(h, "dense-csv").strip().split("\n")
    assert lines[0] == "0,1,0,-1"
    assert lines[1] == "1,0,1,0"


def test_csv_seventeen_digits():
    mat = np.array([[1 / 3 + 0j]])
    assert matrix_to_csv(mat) == "0.33333333333333331,0\n"


def test_parse_index():
    assert parse_index("(12)") == (1, 2)
    assert parse_index("(1011)") == (1, 0, 1, 1)
    assert parse_index("(1,11)") == (1, 11)


def test_export_rejects_unknown():
    with pytest.raises(TypeError):
        export(object(), "json")
    with pytest.raises(ValueError):
        export(PhaseExponent(0, 2), "yaml")
    with pytest.raises(ValueError):
        import_exact(json.dumps({"schema": 1, "type": "mystery"}))
    with pytest.raises(ValueError):
        import_exact(json.dumps({"schema": 99, "type": "phase"}))


def test_json_dumps_deterministic():
    payload = {"schema": 1, "b": [1, 2], "a": "x"}
    assert json_dumps(payload) == json_dumps(payload)
    assert json_dumps(payload).endswith("\n")
