"""Command-line interface: parsing, commands, formats, exit codes."""

import json
import random

import pytest

from qtorus.phases import GaussianRational, PhaseScalar, phase_pow
from qtorus.algebra import ALGEBRAS, CIRCLE, P2, TORUS
from qtorus.cli import main, parse_expression
from qtorus.suite import TrialConfig, random_element


# --- expression parsing ---

def test_parse_product_forms():
    v_u = TORUS.basis((1, 1)) * phase_pow(-2)
    assert parse_expression(TORUS, "V*U") == v_u
    assert parse_expression(TORUS, "V U") == v_u
    assert parse_expression(TORUS, "VU") == v_u


def test_parse_scaled_monomial():
    got = parse_expression(P2, "q^(-1/2) U1 V1 U2 V2")
    assert got == phase_pow(-1) * P2.basis((1, 1, 1, 1))


def test_parse_sums_and_powers():
    got = parse_expression(TORUS, "U^2V + 3*V")
    assert got == TORUS.basis((2, 1)) + 3 * TORUS.generator("V")
    assert parse_expression(TORUS, "U*U^(-1)") == TORUS.unit()
    assert parse_expression(TORUS, "U^-1") == TORUS.basis((-1, 0))


def test_parse_juxtaposed_generators_without_spaces():
    got = parse_expression(P2, "U1U2V1V2")
    assert got == phase_pow(-1) * P2.basis((1, 1, 1, 1))


def test_parse_scalars_and_unary_minus():
    assert parse_expression(TORUS, "2") == 2 * TORUS.unit()
    assert parse_expression(TORUS, "-U") == -TORUS.generator("U")
    assert parse_expression(TORUS, "i V") == PhaseScalar(GaussianRational(0, 1)) * TORUS.generator("V")
    assert parse_expression(TORUS, "(1 + q^(1)) U") == (phase_pow(0) + phase_pow(2)) * TORUS.generator("U")
    assert parse_expression(TORUS, "q") == phase_pow(2) * TORUS.unit()


def test_parse_unknown_generator_reports_algebra():
    with pytest.raises(ValueError, match="unknown generator 'W' for algebra 'torus'"):
        parse_expression(TORUS, "W")
    with pytest.raises(ValueError, match="unknown generator"):
        parse_expression(CIRCLE, "U")
    # in the torus, "U3" is the product U * 3, not a generator name
    assert parse_expression(TORUS, "U3") == 3 * TORUS.generator("U")


def test_parse_syntax_errors():
    for text in ("U +", "(U", "U ^ q", "q^(1/3)", "* U"):
        with pytest.raises(ValueError):
            parse_expression(TORUS, text)


def test_round_trip_small_sample():
    rng = random.Random(2024)
    cfg = TrialConfig(seed=2024)
    for algebra in ALGEBRAS.values():
        for _ in range(25):
            x = random_element(algebra, cfg, rng)
            assert parse_expression(algebra, x.render()) == x


# --- commands ---

def test_normalize_command(capsys):
    assert main(["normalize", "--algebra", "torus", "V U"]) == 0
    assert capsys.readouterr().out.strip() == "q^(-1) * U V"


def test_mul_command(capsys):
    assert main(["mul", "--algebra", "torus", "V", "U"]) == 0
    assert capsys.readouterr().out.strip() == "q^(-1) * U V"


def test_apply_delta(capsys):
    assert main(["apply", "--map", "delta", "U"]) == 0
    assert capsys.readouterr().out.strip() == "U1 U2"


def test_apply_scalar_valued_map(capsys):
    assert main(["apply", "--map", "epsilon", "U V"]) == 0
    assert capsys.readouterr().out.strip() == "q^(1/2)"


def test_apply_map_algebra_mismatch(capsys):
    code = main(["apply", "--map", "mu", "--algebra", "torus", "U"])
    assert code == 2
    err = capsys.readouterr().err
    assert "mu" in err and "p2" in err and "torus" in err


def test_apply_unknown_map(capsys):
    assert main(["apply", "--map", "nope", "U"]) == 2
    assert "unknown map" in capsys.readouterr().err


def test_parse_error_exit_code(capsys):
    assert main(["normalize", "--algebra", "torus", "U +"]) == 2
    assert "parse error" in capsys.readouterr().err


def test_check_command_pass(capsys):
    code = main(["check", "--suite", "antipode-law", "--seed", "7", "--trials", "50"])
    out = capsys.readouterr().out
    assert code == 0
    assert "PASS antipode-law" in out


def test_check_command_unknown_suite(capsys):
    assert main(["check", "--suite", "bogus"]) == 2
    assert "unknown check name" in capsys.readouterr().err


def test_check_command_failure_exit_code(capsys):
    from qtorus import suite as suite_mod

    def _failing(cfg, rng):
        return suite_mod.CheckReport("tmp-fail", ("torus",), 1, ("forced counterexample",))

    suite_mod.CHECKS["tmp-fail"] = _failing
    try:
        code = main(["check", "--suite", "tmp-fail"])
    finally:
        del suite_mod.CHECKS["tmp-fail"]
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL tmp-fail (trials=1): forced counterexample" in out


def test_check_command_json(capsys):
    code = main(
        ["check", "--suite", "torus-relation,counit-laws", "--trials", "10",
         "--format", "json"]
    )
    assert code == 0
    records = json.loads(capsys.readouterr().out)
    assert [r["name"] for r in records] == ["torus-relation", "counit-laws"]
    assert all(r["status"] == "pass" for r in records)


def test_check_json_output_is_stable(capsys):
    args = ["check", "--suite", "counit-laws", "--trials", "15", "--seed", "3",
            "--format", "json-like"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    second = capsys.readouterr().out
    assert first == second


def test_normalize_json(capsys):
    assert main(["normalize", "--algebra", "torus", "V U", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["algebra"] == "torus"
    assert payload["terms"] == [[[1, 1], [[-2, 1, 1, 0, 1]]]]


def test_eval_command(capsys):
    assert main(["eval", "--theta", "0.5", "--algebra", "torus", "q U"]) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("U:")
    assert "-1" in out


def test_eval_json(capsys):
    assert main(
        ["eval", "--theta", "0.5", "--algebra", "torus", "q U + V", "--format", "json"]
    ) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["theta"] == 0.5
    coeffs = {tuple(c["index"]): complex(c["re"], c["im"]) for c in payload["coefficients"]}
    assert abs(coeffs[(1, 0)] - (-1)) < 1e-12
    assert abs(coeffs[(0, 1)] - 1) < 1e-12


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["normalize", "--algebra", "nope", "U"])
    assert exc.value.code == 2
