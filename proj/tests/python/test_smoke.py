from fractions import Fraction

import pytest

import fermicalc as fc


def e(dim, *gens, coeff=1):
    return fc.Multivector.blade(dim, list(gens), coeff)


def test_scalars_exact():
    r2 = fc.Scalar.sqrt2()
    assert (1 + r2) * (r2 - 1) == 1
    assert 1 / r2 == fc.Scalar(0, 0, Fraction(1, 2))
    assert str(fc.Scalar.i()) == "0+1i"
    assert fc.Scalar("3/6") == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        fc.Scalar(1) / 0


def test_wedge_and_blades():
    e1, e2 = fc.Multivector.generator(2, 1), fc.Multivector.generator(2, 2)
    assert (e2 ^ e1) == -1 * (e1 ^ e2)
    assert e(2, 2, 1) == -1 * e(2, 1, 2)
    assert (e1 ^ e1).is_zero()
    assert (e1 ^ e2).terms() == {(1, 2): fc.Scalar(1)}


def test_clifford_product():
    c1, c2 = fc.CliffordElement.generator(2, 1), fc.CliffordElement.generator(2, 2)
    assert c1 * c1 == fc.CliffordElement.scalar(2, 1)
    assert (c1 * c2 + c2 * c1).is_zero()
    e12 = c1 * c2
    assert fc.trace(e12 * e12) == -1
    assert fc.star(e12) == -1 * e12


def test_hand_values_m1():
    ctx = fc.Context(fc.Structure.standard(1))
    e12 = e(2, 1, 2)
    i = fc.Scalar.i()
    assert ctx.gamma == e(2, 1, 2, coeff=i)
    assert ctx.omega == e(2, 1, 2, coeff=-i)
    assert ctx.expectation(e12) == i
    nu = ctx.nu(e12)
    assert str(nu) == "(0+1i) 1 + (1) e1 e2"
    assert fc.trace(nu) == ctx.expectation(e12)
    assert ctx.expectation_normal(e12) == -i


def test_main_theorem_random_structure():
    s = fc.Structure.random(2, 5)
    ctx = fc.Context(s)
    for mask in range(16):
        gens = [k + 1 for k in range(4) if mask >> k & 1]
        b = e(4, *gens)
        assert ctx.expectation(b) == fc.trace(ctx.nu(b))
        assert ctx.expectation_normal(b) == fc.trace(ctx.nu_normal(b))


def test_explicit_structure():
    s = fc.Structure([["0", "1"], ["-1", "0"]], [[1, 0]])
    assert fc.Context(s).expectation(e(2, 1, 2)) == -fc.Scalar.i()
    with pytest.raises(ValueError):
        fc.Structure([[1, 0], [0, 1]], [[1, 0]])


def test_eval_and_errors():
    assert fc.eval("E(e1 ^ e2)", M=1) == "0+1i"
    assert fc.eval("E(e1 ^ e2)", M=1, backend="float") == "0+1i"
    assert fc.eval("tau(nu(e1 ^ e2))", M=1) == "0+1i"
    with pytest.raises(ValueError):
        fc.eval("e1 ^ e2 * e3")
    with pytest.raises(ValueError):
        fc.eval("E(e1 ^")


def test_verify_report():
    report = fc.verify(M=1, trials=10)
    assert report["passed"] is True
    assert report["backend"] == "exact"
    names = {c["name"] for c in report["checks"]}
    assert "berezin.main_theorem_blades" in names
