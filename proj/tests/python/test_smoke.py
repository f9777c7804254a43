import pytest

import modcurve


def test_field_inverse():
    a = modcurve.NFElement(["0", "1"])
    inv = a.inv()
    assert inv == modcurve.NFElement(["-3", "6", "4", "-5", "-1", "1"])
    assert (a * inv) == modcurve.NFElement(["1"])
    with pytest.raises(modcurve.Error):
        modcurve.NFElement([]).inv()


def test_minimal_polynomial_splitting():
    f = modcurve.minimal_polynomial()
    assert f == ["-1", "-3", "6", "4", "-5", "-1", "1"]
    assert sorted(len(c) - 1 for c, _ in modcurve.factor_mod_p(f, 3)) == [3, 3]
    assert sorted(len(c) - 1 for c, _ in modcurve.factor_mod_p(f, 5, seed=11)) == [2, 2, 2]


def test_jacobian_orders():
    f = ["1", "2", "1", "2", "6", "4", "1"]
    assert modcurve.jacobian_order(f, 3, 3) == 1444
    assert modcurve.jacobian_order(f, 5, 2) == 361
    with pytest.raises(modcurve.BadReduction):
        modcurve.jacobian_order(f, 13, 1)


def test_division_polynomial():
    assert modcurve.division_polynomial("-1", "0", 3) == ["-1", "0", "-6", "0", "3"]


def test_e37_multiples():
    assert modcurve.e37_multiple(1) == ("0", "0")
    assert modcurve.e37_multiple(4) == ("2", "-3")
    assert modcurve.e37_multiple(5) == ("1/4", "-5/8")


def test_table():
    recs = modcurve.generate_table(5)
    assert [r["k"] for r in recs] == [1, 2, 4, 5]
    assert [r["D"] for r in recs] == ["-3", "-7", "-11", "-1"]
    assert recs[0]["x"] == "(1/2) + (1/2)*sqrt(-3)"
    assert modcurve.table_csv(2).splitlines()[0] == "k,D,x,y,j,A,B"
    with pytest.raises(modcurve.Error):
        modcurve.generate_table(0)


def test_suites():
    r13 = modcurve.run_x1_13(only=["x13.cusps", "x13.d_pair", "x13.pullback"])
    status = {c["check_id"]: c["status"] for c in r13["checks"]}
    assert status["x13.cusps"] == "pass"
    assert status["x13.pullback"] == "pass"
    assert status["x13.closure"] == "skip"
    r37 = modcurve.run_x0_37(rng_seed=5)
    assert r37["rng_seed"] == 5
    status = {c["check_id"]: c["status"] for c in r37["checks"]}
    assert status["x37.table_points"] == "pass"
    assert status["x37.table_curves"] == "skip"
    with pytest.raises(modcurve.Error):
        modcurve.run_x0_37(jmap="/nonexistent-file")
