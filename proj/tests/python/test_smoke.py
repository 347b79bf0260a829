import json

import pytest

import eqlv


def test_primes_in_degree_then_lex_order():
    assert eqlv.primes(2, 2) == ["t", "t+1", "t^2+t+1"]
    assert len(eqlv.primes(2, 5)) == 2 + 1 + 2 + 3 + 6


def test_zeta_matches_known_expansion():
    assert eqlv.zeta_monic_sum(2, 1, 5) == "1 + t^-2 + t^-3 + t^-4 + O(t^-5)"
    [value] = eqlv.euler_product(2, n=1, prec=8)
    assert value == eqlv.zeta_monic_sum(2, 1, 8)


def test_equivariant_product_has_one_entry_per_character():
    assert len(eqlv.euler_product(2, context="constant", m=3, prec=5)) == 3


def test_class_formula_constant_context():
    r = eqlv.class_formula(2, context="constant", m=3, prec=6)
    assert r["verdict"] == "pass"
    assert r["lhs"] == r["rhs"]
    assert r["certified"] and r["class_module_dim"] == 0


def test_carlitz_exp_coefficients():
    # e_1 = 1/(t^2 - t) for the Carlitz module over F_2
    e = eqlv.exp_coefficients(2, 1, 2)
    assert e[0] == [["1"]]
    assert "t^2" in e[1][0][0]


def test_run_report_and_config_round_trip():
    verdict, report = eqlv.run("zeta", q=2, carlitz=1, prec=8)
    assert verdict == "pass"
    assert report["schema"] == eqlv.REPORT_SCHEMA
    again = eqlv._core.run(report["config"])
    assert json.loads(again["json"]) == report
    text = eqlv.render_config_text(report["config"])
    assert eqlv.parse_config_text(text) == report["config"]


def test_trace_and_artin():
    assert eqlv.trace_check_qpower(2, 6) == "pass"
    verdict, report = eqlv.run("artin", context="cyclotomic", conductor="t^2 + t + 1", prec=5)
    assert verdict == "pass"
    assert len(report["representations"]) == 3


def test_usage_errors_raise():
    with pytest.raises(eqlv.ConfigError):
        eqlv.run("zeta", q=4)
    with pytest.raises(ValueError):
        eqlv.run("nothing")
