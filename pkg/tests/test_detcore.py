import random

import numpy as np
import pytest
from sympy import Matrix

from dpsymbol.arith import legendre, odd_primes
from dpsymbol.detcore import build_matrix, det_mod_p, dp_det, dp_symbol


def cofactor_det(m, p):
    n = len(m)
    if n == 1:
        return m[0][0] % p
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor, p)
    return total % p


def test_build_matrix_examples():
    assert build_matrix(1, 1, 3).tolist() == [[0, 1], [1, 0]]
    assert build_matrix(1, 1, 5).tolist() == [[2, 3, 2, 1], [3, 3, 4, 2], [2, 4, 3, 3], [1, 2, 3, 2]]


@pytest.mark.parametrize("b,c,p", [(1, 1, 7), (2, 3, 11), (-4, 9, 13), (0, 0, 5)])
def test_build_matrix_definition(b, c, p):
    m = build_matrix(b, c, p)
    assert m.dim == p - 1
    for i in range(1, p):
        for j in range(1, p):
            base = i * i + b * i * j + c * j * j
            assert m.entries[i - 1, j - 1] == pow(base, p - 2, p)
        assert m.entries[i - 1, i - 1] == pow((1 + b + c) * i * i, p - 2, p)


def test_det_examples():
    assert det_mod_p(np.eye(6, dtype=np.int64), 7) == 1
    assert det_mod_p([[1, 2, 3], [1, 2, 3], [4, 5, 6]], 7) == 0
    assert dp_det(1, 1, 5) == 3
    assert dp_det(1, 1, 3) == 2


def test_det_against_cofactor_expansion():
    rng = random.Random(3)
    for _ in range(200):
        p = rng.choice([3, 5, 7, 11, 13, 101, 7919])
        n = rng.choice([4, 5])
        m = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        assert det_mod_p(m, p) == cofactor_det(m, p)


@pytest.mark.parametrize("b,c,p", [(1, 1, 7), (6, 1, 7), (4, 1, 13), (1, 16, 3), (2, 5, 11)])
def test_det_against_exact_integer_determinant(b, c, p):
    M = Matrix(p - 1, p - 1, lambda i, j: ((i + 1) ** 2 + b * (i + 1) * (j + 1) + c * (j + 1) ** 2) ** (p - 2))
    assert dp_det(b, c, p) == M.det() % p


def test_symbol_examples():
    assert dp_symbol(1, 1, 5) == -1
    assert dp_symbol(1, 1, 3) == -1


def test_residue_dependence():
    for p in (3, 5, 7, 11):
        for b in range(-p, p):
            for c in range(-p, p, 2):
                assert dp_symbol(b, c, p) == dp_symbol(b + p, c + p, p) == dp_symbol(b % p, c % p, p)


def test_wsn_anchor():
    for p in odd_primes(3, 100):
        if p % 3 == 2:
            assert dp_symbol(1, 1, p) == legendre(-2, p)
