import pytest

from dpsymbol.arith import legendre, odd_primes, sym_pow
from dpsymbol.detcore import dp_symbol
from dpsymbol.errors import CDivisible
from dpsymbol.lucas import v_zero_indices
from dpsymbol.predict import (
    PREDICTORS,
    predict,
    predict_cor11,
    predict_cor21,
    predict_cor22,
    predict_cor23,
    predict_shewu,
    predict_thm12,
    predict_thm13,
    relation_neg_b,
    scale_reduce,
    scaled_symbol,
)


def test_shewu_examples():
    assert predict_shewu(1, 5).value == -1
    pred = predict_shewu(3, 7)
    assert pred.value == 0 and pred.hypotheses["v_zeros"] == [2, 6]
    pred = predict_shewu(2, 11)
    assert not pred.applicable and "b^2-4" in pred.reason


def test_thm12_examples():
    assert predict_thm12(3, 13).value == -1 == dp_symbol(3, 1, 13)
    assert predict_thm12(1, 5).value == -1
    pred = predict_thm12(1, 13)
    assert not pred.applicable and pred.display() == "NA"


def test_cor11_examples():
    assert predict_cor11(1, 13).value == 1
    assert predict_cor11(2, 5).value == -1
    assert not predict_cor11(1, 7).applicable


def test_thm13_examples():
    assert predict_thm13(5).value == -1 == dp_symbol(1, 16, 5)
    assert predict_thm13(13).value == -1
    assert not predict_thm13(11).applicable
    assert not predict_thm13(7).applicable
    assert not predict_thm13(31).applicable  # 31 = 15 mod 16


def test_cor2x_examples():
    assert predict_cor21(13).value == 1
    assert not predict_cor21(7).applicable
    assert predict_cor22(5).value == -1
    pred = predict_cor22(17)
    assert pred.value is None and pred.allowed == {0, 1}
    assert pred.display() == "0|1" and pred.matches(0) and pred.matches(1) and not pred.matches(-1)
    assert predict_cor22(7).value == 0
    assert predict_cor23(7).value == 0
    assert predict_cor23(13).value == -1 == legendre(6, 13)
    assert not predict_cor23(11).applicable


def test_relation_neg_b_examples():
    assert relation_neg_b(1, 1, 5)
    assert relation_neg_b(2, 3, 7)
    for p in (3, 5, 7):
        for c in range(p):
            assert relation_neg_b(0, c, p)


def test_scale_reduce_examples():
    assert scale_reduce(5, 1, 13) == (5, 0, 1)
    assert scale_reduce(5, 1, 11) == (5, 1, 1)
    assert scale_reduce(1, 16, 13) == (10, 0, 4)
    assert scale_reduce(1, 3, 7) is None
    with pytest.raises(CDivisible):
        scale_reduce(1, 14, 7)


@pytest.mark.slow
def test_scale_reduce_soundness():
    for p in odd_primes(3, 100):
        for c in range(1, p):
            for b in range(p):
                got = scaled_symbol(b, c, p)
                if got is not None:
                    assert got == dp_symbol(b, c, p)


def test_shewu_inert_case_sound():
    for p in odd_primes(3, 100):
        for b in range(p):
            if legendre(b * b - 4, p) == -1:
                assert predict_shewu(b, p).value == dp_symbol(b, 1, p)


def test_shewu_split_case_counterexamples():
    # the stated split-case zero criterion disagrees with the oracle here
    assert predict_shewu(1, 7).value == 1 and dp_symbol(1, 1, 7) == 0
    assert predict_shewu(4, 13).value == 0 and dp_symbol(4, 1, 13) == 1


def test_thm12_and_shewu_agree_and_no_lucas_zero():
    for p in odd_primes(5, 200):
        for b in range(p):
            t = predict_thm12(b, p)
            if not t.applicable:
                continue
            assert predict_shewu(b, p).value == t.value
            assert v_zero_indices((-b, 1), p, 2, p - 1) == []


def test_soundness_cor11_and_thm13():
    for p in odd_primes(3, 100):
        for b in range(p):
            pred = predict_cor11(b, p)
            if pred.applicable:
                assert pred.value == dp_symbol(b, -1, p)
    for p in odd_primes(5, 200):
        pred = predict_thm13(p)
        if pred.applicable:
            assert pred.value == dp_symbol(1, 16, p)


def test_dispatch():
    assert predict("thm12", 3, 1, 13).value == -1
    assert predict("thm12", 3, 2, 13).reason == "c != 1 (mod p)"
    assert predict("cor11", 1, 12, 13).value == 1
    assert predict("thm13", 1, 3, 13).value == -1  # 16 = 3 mod 13
    assert predict("thm13", 2, 16, 13).reason == "b != 1 (mod p)"
    assert predict("lemma11", 1, 1, 5).value == -1
    assert not predict("lemma11", 1, 0, 5).applicable
    assert predict("eq17", 2, 3, 7).value == dp_symbol(2, 3, 7)
    assert set(PREDICTORS) == {"shewu", "thm12", "cor11", "thm13", "cor21", "cor22", "cor23", "lemma11", "eq17"}
    with pytest.raises(ValueError):
        predict("nope", 1, 1, 5)


def test_parity_helper():
    assert sym_pow(-1, 3) == -1 and sym_pow(-1, 2) == 1 and sym_pow(0, 1) == 0 and sym_pow(0, 0) == 1
