"""Smoke tests for the dualcat python module."""

from fractions import Fraction

import pytest

import dualcat


def test_eval_basics():
    assert dualcat.eval_d(0, "1/2", 7, 11) == 1
    assert dualcat.eval_d(2, 1, 2, 7) == 5
    assert dualcat.eval_d_ljunggren(2, 1, 2, 7) == 5
    assert dualcat.eval_s(0, "-1/3", 2, 13) == 1
    assert dualcat.eval_j2(1, 5) == dualcat.reduce_mod("3/4", 5)
    assert dualcat.eval_catalan_inner(4, 1, 59) == 51


def test_rational_inputs_accept_fractions():
    assert dualcat.eval_d(3, Fraction(-1, 2), Fraction(-4, 3), "7^2") == dualcat.eval_d(
        3, "-1/2", "-4/3", "7^2"
    )
    assert dualcat.least_residue(Fraction(-1, 2), 5) == 2
    assert dualcat.legendre(2, 7) == 1
    assert dualcat.legendre(Fraction(-1), 5) == 1


def test_exact_oracle():
    assert dualcat.exact_d(2, "-1/2", 1) == Fraction(3, 8)
    assert dualcat.exact_j2(2) == Fraction(41, 64)
    assert dualcat.exact_catalan(5) == 42
    assert dualcat.exact_binom("-1/2", 2) == Fraction(3, 8)
    assert dualcat.exact_catalan_inner(4, 1) == 51
    assert dualcat.exact_statement_lhs("eq1.6", 5, {"a": 1}) == 2856
    assert dualcat.reduce_mod(Fraction(294), 5) == 4


def test_dual_transform_involution():
    seq = [Fraction(1), Fraction(2), Fraction(5)]
    dual = [dualcat.dual_transform(seq, n) for n in range(3)]
    back = [dualcat.dual_transform(dual, n) for n in range(3)]
    assert back == seq


def test_check_records():
    rec = dualcat.check("eq1.6", 5, {"a": 1})
    assert rec["pass"] is True
    assert rec["lhs"] == 1 and rec["rhs"] == 1
    assert rec["skip_reason"] is None

    kw = dualcat.check("kw-p3", 5)
    assert kw["e"] == 3 and kw["rhs"] == 1 and kw["pass"] is True

    with pytest.raises(dualcat.DualcatError):
        dualcat.check("eq1.6", 4, {"a": 1})
    with pytest.raises(dualcat.DualcatError):
        dualcat.check("eq1.6", 5, {"a": 0})
    with pytest.raises(dualcat.DualcatError):
        dualcat.check("nope", 5, {})


def test_sweep():
    out = dualcat.sweep(["eq1.3"], p_min=3, p_max=5, x_grid=[0, 1], y_grid=[0, 1])
    assert len(out["records"]) == 32
    assert out["summary"] == {"passed": 32, "failed": 0, "skipped": 0}

    serial = dualcat.sweep(["lemma3.1"], p_min=3, p_max=13, m_grid=[1, 2, -6], jobs=1)
    parallel = dualcat.sweep(["lemma3.1"], p_min=3, p_max=13, m_grid=[1, 2, -6], jobs=4)
    assert serial == parallel


def test_telescope():
    records = dualcat.telescope(5)
    assert len(records) == 5
    assert all(r["pass"] for r in records)
    assert records[4]["lhs"] == 25  # n^2 pairs checked at n = 5


def test_statement_ids():
    ids = dualcat.statement_ids()
    assert set(ids) == {
        "eq1.3",
        "eq1.4",
        "eq1.6",
        "eq2.3",
        "cor2.4",
        "cor2.5",
        "lemma3.1",
        "kw-p3",
    }


def test_misc_number_theory():
    assert dualcat.is_prime(499)
    assert not dualcat.is_prime(561)
    assert dualcat.binom_mod("-1/2", 2, 7) == 3
    with pytest.raises(dualcat.DualcatError):
        dualcat.binom_mod("1/3", 1, 3)
