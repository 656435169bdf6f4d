import json
from fractions import Fraction

import pytest

import kappacert as kc


def test_tango_invariants():
    params = kc.validate_params(5, 2, 2)
    assert (params.r, params.qS, params.genusC) == (3, 1, 36)
    assert kc.curve_invariants(params)["deg_canonical"] == 70
    assert kc.check_kc_equals_pd(params)
    assert all(kc.class_identities(params).values())


def test_invalid_params_raise():
    with pytest.raises(kc.KappacertError, match="GcdViolation"):
        kc.validate_params(3, 3, 2)
    with pytest.raises(ValueError):
        kc.CyclicQuotient(4, [1, 2])


def test_certificates():
    cert = kc.certify_kappa_negative(kc.validate_params(5, 2, 2), 11)
    assert cert["status"] == "NegInfinityAllN"
    assert kc.certify_kappa_negative(kc.validate_params(5, 2, 2), 1, 4)["status"] == "Inconclusive"
    assert kc.m0_bounds(kc.validate_params(2, 3, 3)) == (1, 6)
    assert kc.kappa_surface(kc.validate_params(3, 2, 2)) == "KappaOne"


def test_pushforward_and_report():
    terms = kc.pushforward_product(kc.validate_params(2, 3, 3), 1, 1)
    assert len(terms) == 1
    report = kc.assemble_counterexample_1(kc.validate_params(5, 2, 2), 10)
    assert (report["base_dim"], report["total_dim"]) == (11, 12)


def test_quotients():
    cq = kc.CyclicQuotient(4, [1, 1, 1, 1])
    assert kc.reid_tai(cq).kind == "CanonicalNotTerminal"
    assert kc.reid_tai(cq) == kc.box_points_oracle(cq)
    assert kc.min_age(kc.CyclicQuotient(3, [1, 1])) == Fraction(2, 3)
    assert kc.chart_weights(2, 5, ["R", "One"]).weights == [1, 1, 3]
    assert [c.weights for c in kc.enumerate_charts(3, 2, 5)] == [[1, 1, 1], [1, 1, 3], [1, 3, 3]]
    assert kc.classify_y(4, 2, 3).kind == "Terminal"


def test_fano():
    fp = kc.FanoParams(3, 1, 2, 4)
    assert kc.anticanonical_coefficient(fp) == -1
    assert kc.conductor(2, 3) == 4
    assert kc.is_fano(fp)
    assert not kc.is_fano(kc.FanoParams(3, 1, 2, 3))
    assert [kc.min_counterexample_dim(p).dim for p in (2, 3, 7)] == [4, 5, 13]
    assert kc.assemble_counterexample_2(kc.FanoParams(5, 1, 2, 8))["total_dim"] == 9


def test_cli_in_process():
    code, out, _ = kc.run_cli(["search", "--p", "3,5,7"])
    assert code == 0
    rows = json.loads(out)["results"]["rows"]
    assert sorted(r["total_dim"] for r in rows if r["construction"] == "FanoProduct") == [5, 9, 13]
    assert kc.run_cli(["tango", "--p", "5"])[0] == 64
