import galtrunc
import pytest


def test_version_and_names():
    assert galtrunc.version().count(".") == 2
    assert "exp" in galtrunc.series_names()
    assert "exp-pade" in galtrunc.table_ids()


def test_taylor_exp():
    assert galtrunc.taylor("exp", 3) == ["1", "1", "1/2", "1/6"]


def test_pade_exp_10():
    p = galtrunc.pade("exp", 10)
    assert p["numerator_coefficients"] == ["3024", "1344", "252", "24", "1"]
    assert p["denominator_coefficients"][-1] == "1"
    assert len(p["denominator_coefficients"]) == 6


def test_pade_factor_invsqrt_15():
    p = galtrunc.pade("invsqrt-minus", 15, factor=True)
    degrees = sorted(len(f["coefficients"]) - 1 for f in p["numerator_factors"]["factors"])
    assert degrees == [1, 2, 4]


def test_factor_and_newton():
    f = galtrunc.factor("x^4-1")
    assert len(f["factors"]) == 3
    n = galtrunc.newton("x^5/120+x^4/24+x^3/6+x^2/2+x+1", 3)
    assert n["vertices"][0] == [0, 0]


def test_galois_quartic():
    g = galtrunc.galois("x^4+120")
    assert g["group_name"] == "D4"
    assert g["t_notation"] == "4T3"
    assert g["certainty"]["tag"] == "Proven"
    assert g["verified"]


def test_schur_report():
    r = galtrunc.schur(3)
    assert r["discriminant"]["oracle_sign"] == -1
    assert r["discriminant"]["closed_form_sign"] == 1
    assert r["derivative_identity"]


def test_reproduce_truncation_table():
    report = galtrunc.reproduce("invsqrt-trunc", verify=True)
    assert report["summary"]["ok"]
    assert [row["cells"][0]["observed"] for row in report["rows"]] == ["S3", "A4", "S5", "A12", "S16", "S20", "S21", "A24"]


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        galtrunc.pade("nope", 3)
    with pytest.raises(ValueError):
        galtrunc.pade("sin", 6)
