import json
from importlib import resources

import pytest
from jsonschema import Draft202012Validator

from bergmanops.cli import main


@pytest.fixture(scope="module")
def schema():
    text = resources.files("bergmanops.schemas").joinpath("cli_output.schema.json").read_text()
    return json.loads(text)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, (code, err)
    return json.loads(out)


def validate(schema, name, instance):
    validator = Draft202012Validator(
        {"$defs": schema["$defs"], "$ref": f"#/$defs/{name}"}
    )
    validator.validate(instance)


# -- documented example invocations (values pinned byte-for-byte mod whitespace) --

def test_documented_innerprod_example(capsys, schema):
    payload = run_json(
        capsys,
        "innerprod", "--domain", "mball", "--xi", "0",
        "--n", "1,0,0,1", "--m", "0,1,1,0", "--normalized", "--output", "json",
    )
    assert payload == {"coefficient": "-1/60", "unit": "1"}
    validate(schema, "exact_ip_value", payload)


def test_documented_classify_example(capsys, schema):
    payload = run_json(
        capsys,
        "classify", "--domain", "ball", "--N", "2", "--xi", "0",
        "--op", "z1*d1 + z2*d2", "--output", "json",
    )
    expected = {
        "symmetric": True,
        "c": "-2",
        "basis_coefficients": {
            "X1:1": "1/3", "X1:2": "1/3",
            "X2:1,2": "0", "X3:1,2": "0",
            "X4:1": "0", "X4:2": "0", "X5:1": "0", "X5:2": "0",
        },
        "Y": {
            "algebra": "su(2,1)",
            "matrix": [
                [{"re": "0", "im": "1/3"}, {"re": "0", "im": "0"}, {"re": "0", "im": "0"}],
                [{"re": "0", "im": "0"}, {"re": "0", "im": "1/3"}, {"re": "0", "im": "0"}],
                [{"re": "0", "im": "0"}, {"re": "0", "im": "0"}, {"re": "0", "im": "-2/3"}],
            ],
        },
        "verified_degree": 4,
        "violations": [],
    }
    assert payload == expected
    validate(schema, "classification", payload)


def test_documented_symcheck_example(capsys, schema):
    payload = run_json(
        capsys,
        "symcheck", "--domain", "ball", "--N", "1", "--xi", "0",
        "--degree", "2", "--op", "d1", "--output", "json",
    )
    expected = {
        "symmetric": False,
        "degree_checked": 2,
        "witnesses": [
            {"n": [0], "m": [1],
             "lhs": {"coefficient": {"re": "0", "im": "0"}, "unit": "1"},
             "rhs": {"coefficient": {"re": "1", "im": "0"}, "unit": "1"}},
            {"n": [1], "m": [0],
             "lhs": {"coefficient": {"re": "1", "im": "0"}, "unit": "1"},
             "rhs": {"coefficient": {"re": "0", "im": "0"}, "unit": "1"}},
            {"n": [1], "m": [2],
             "lhs": {"coefficient": {"re": "0", "im": "0"}, "unit": "1"},
             "rhs": {"coefficient": {"re": "1", "im": "0"}, "unit": "1"}},
            {"n": [2], "m": [1],
             "lhs": {"coefficient": {"re": "1", "im": "0"}, "unit": "1"},
             "rhs": {"coefficient": {"re": "0", "im": "0"}, "unit": "1"}},
        ],
    }
    assert payload == expected
    validate(schema, "symmetry_report", payload)


# -- schema conformance for the other commands --------------------------------------

def test_pi_schema_and_content(capsys, schema):
    payload = run_json(capsys, "pi", "--algebra", "su(2,2)", "--xi", "1/2",
                       "--element", "A12", "--output", "json")
    validate(schema, "pi_output", payload)
    assert payload["element"] == "A12"
    assert payload["bracket_sign"] == -1
    f0 = payload["operator"]["f0"]
    assert f0 == [{"index": [1, 0, 0, 0], "re": "0", "im": "9/2"}]


def test_euler_bounds_schema(capsys, schema):
    payload = run_json(capsys, "euler", "--N", "1", "--xi", "0", "--c", "1",
                       "--bounds", "--output", "json")
    assert payload == {
        "N": 1, "xi": "0", "c": "1",
        "inf_ratio": "1", "sup_ratio": "6",
        "inf_attained_at": 0, "sup_attained_at": None,
    }
    validate(schema, "euler_bounds", payload)


def test_euler_apply_invert(capsys, schema):
    payload = run_json(capsys, "euler", "--N", "2", "--xi", "0", "--c", "1",
                       "--apply", "z1*z2", "--output", "json")
    assert payload == {"polynomial": [{"index": [1, 1], "re": "3", "im": "0"}]}
    validate(schema, "euler_polynomial", payload)
    payload = run_json(capsys, "euler", "--N", "2", "--xi", "0", "--c", "1",
                       "--invert", "3*z1*z2", "--output", "json")
    assert payload == {"polynomial": [{"index": [1, 1], "re": "1", "im": "0"}]}


def test_oracle_schema_and_determinism(capsys, schema):
    args = ("oracle", "--domain", "ball", "--N", "1", "--xi", "0",
            "--n", "1", "--m", "1", "--samples", "20000", "--seed", "7",
            "--output", "json")
    a = run_json(capsys, *args)
    b = run_json(capsys, *args)
    assert a == b
    validate(schema, "oracle_estimate", a)
    assert abs(a["estimate_re"] - 0.5) < 6 * a["stderr"]


def test_innerprod_ball_text(capsys):
    code, out, _ = run_cli(capsys, "innerprod", "--domain", "ball", "--N", "2",
                           "--xi", "0", "--n", "1,0", "--m", "1,0")
    assert code == 0
    assert out.strip() == "1/3"


# -- exit codes -----------------------------------------------------------------------

def test_exit_2_expression_syntax(capsys):
    code, _, err = run_cli(capsys, "symcheck", "--domain", "ball", "--N", "2",
                           "--xi", "0", "--op", "z1 +")
    assert code == 2 and "error" in err


def test_exit_2_second_order(capsys):
    code, _, err = run_cli(capsys, "classify", "--domain", "ball", "--N", "2",
                           "--xi", "0", "--op", "d1*d2")
    assert code == 2 and "order" in err


def test_exit_2_decimal_xi(capsys):
    code, _, _ = run_cli(capsys, "innerprod", "--domain", "ball", "--N", "1",
                         "--xi", "0.5", "--n", "1", "--m", "1")
    assert code == 2


def test_exit_2_index_out_of_range(capsys):
    code, _, _ = run_cli(capsys, "symcheck", "--domain", "ball", "--N", "2",
                         "--xi", "0", "--op", "z5*d1")
    assert code == 2


def test_exit_3_invalid_xi(capsys):
    code, _, err = run_cli(capsys, "innerprod", "--domain", "ball", "--N", "1",
                           "--xi", "-2", "--n", "1", "--m", "1")
    assert code == 3 and "xi" in err


def test_exit_3_bad_c(capsys):
    code, _, err = run_cli(capsys, "euler", "--N", "1", "--xi", "0", "--c", "-2", "--bounds")
    assert code == 3


def test_exit_3_wrong_index_length(capsys):
    code, _, _ = run_cli(capsys, "innerprod", "--domain", "mball", "--xi", "0",
                         "--n", "1,0", "--m", "1,0")
    assert code == 3


def test_exit_3_missing_ball_dimension(capsys):
    code, _, _ = run_cli(capsys, "innerprod", "--domain", "ball",
                         "--xi", "0", "--n", "1", "--m", "1")
    assert code == 3


def test_exit_3_unknown_basis_tag(capsys):
    code, _, _ = run_cli(capsys, "pi", "--algebra", "su(2,2)", "--xi", "0",
                         "--element", "A16")
    assert code == 3


def test_exit_4_classification_refused(capsys, schema):
    code, out, _ = run_cli(capsys, "classify", "--domain", "ball", "--N", "1",
                           "--xi", "0", "--op", "d1", "--output", "json")
    assert code == 4
    payload = json.loads(out)
    assert payload["symmetric"] is False
    assert payload["violations"]
    validate(schema, "classification", payload)


def test_selftest_quick(capsys, schema):
    code, out, _ = run_cli(capsys, "selftest", "--quick", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    validate(schema, "selftest_report", payload)
