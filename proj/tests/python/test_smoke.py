import math
import pathlib

import pytest

import sfmode

CONFIGS = pathlib.Path(__file__).resolve().parents[2] / "tools" / "configs"


def cfg(name):
    return str(CONFIGS / name)


def test_l0_squared_on_vacuum():
    out = sfmode.act("L[0] L[0]", "1*<vacuum>", cfg("birkhoff_xi.json"))
    assert out == "xi*psi-[-1] psi+[0] + -xi*psi-[0] psi+[-1]"


def test_untwisted_l_minus_one():
    assert sfmode.act("L[-1]") == "1*psi-[-1] psi+[0] + 1*psi-[0] psi+[-1]"


def test_parse_errors_raise_value_error():
    with pytest.raises(ValueError):
        sfmode.act("L[")


def test_bracket_and_constants():
    assert sfmode.bracket("+", 1, "-", 0, cfg("birkhoff.json")) == "xi"
    assert sfmode.bracket("+", 3, "-", -3) == "3"
    assert sfmode.c_const(2, cfg("birkhoff.json")) == "1/2*xi^2"


def test_virasoro_relations():
    r = sfmode.check_virasoro(2, -2, 8, cfg("birkhoff.json"))
    assert r["ok"] and r["checked"] > 0


def test_whittaker_and_descendants():
    w = sfmode.whittaker(2, cfg("triangular.json"))
    assert "1*psi-[-1] psi-[0]" in w["w"] and w["unknowns"] > 0
    assert w["a2"] == "1/2"
    r = sfmode.descendant_rank(0, 4, cfg("birkhoff_1_0.json"))
    assert r["ok"] and r["rank"] == 12 and r["module_dim"] == 12


def test_gauss_binomial_and_identities():
    assert sfmode.gauss_binomial(4, 2) == ["1", "1", "2", "1", "1"]
    for k in range(3):
        assert sfmode.identity_check("sum", k, 4, 3)["pass"]
        assert sfmode.identity_check("split", k, 4, 3)["pass"]


def test_bijection_roundtrip():
    x, left, right = sfmode.bijection_forward([2, 1], 0, 2, 2)
    assert (x, left, right) == (1, [1], [1])
    assert sfmode.bijection_inverse(x, left, right, 0, 2, 2) == [2, 1]


def test_schur():
    assert sfmode.schur([2, 1], "psi-[-1] psi-[0]") == "1*psi-[-3] psi-[-1]"


def test_stokes():
    assert sfmode.phi_b(1, "1", "0", "2") == "-1"
    assert abs(sfmode.stokes_probe(100000, 1.0, 0.25, 1.0) - 2 / math.sqrt(math.pi)) < 1e-3
    assert abs(sfmode.inc_gamma_upper(1.0, 2.0) - math.exp(-2.0)) < 1e-14
    assert abs(sfmode.ode_residual_B(0.5, 1.0, 0.25, 1.0)) < 1e-10
