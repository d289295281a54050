import random

import pytest

from dpsymbol.arith import legendre, odd_primes
from dpsymbol.lucas import (
    LucasParams,
    check_identity_116,
    half_index_zero_claim,
    lucas_uv,
    lucas_uv_linear,
    v_zero_indices,
)


def integer_uv(A, B, n):
    u0, u1, v0, v1 = 0, 1, 2, A
    for _ in range(n):
        u0, u1 = u1, A * u1 - B * u0
        v0, v1 = v1, A * v1 - B * v0
    return u0, v0


def test_uv_examples():
    pair = lucas_uv((5, 3), 0, 7)
    assert (pair.u, pair.v) == (0, 2)
    pair = lucas_uv(LucasParams(1, -1), 6, 101)
    assert (pair.u, pair.v) == (8, 18)
    pair = lucas_uv((-3, 1), 4, 101)
    assert (pair.u, pair.v) == (-21 % 101, 47)


def test_uv_against_integer_sequences():
    for A in range(-4, 5):
        for B in range(-4, 5):
            for n in range(30):
                u, v = integer_uv(A, B, n)
                for p in (3, 7, 101):
                    pair = lucas_uv((A, B), n, p)
                    assert (pair.u, pair.v) == (u % p, v % p)


def test_fast_doubling_matches_linear():
    rng = random.Random(1)
    primes = odd_primes(3, 10_000)
    for _ in range(500):
        p = rng.choice(primes)
        A, B, n = rng.randrange(-10**4, 10**4), rng.randrange(-10**4, 10**4), rng.randrange(10**4)
        fast, slow = lucas_uv((A, B), n, p), lucas_uv_linear((A, B), n, p)
        assert (fast.u, fast.v) == (slow.u, slow.v)
        assert fast.norm_holds()


def test_u_at_p_minus_one_large_p():
    p = 9973
    pair = lucas_uv((-7, 3), p - 1, p)
    assert pair.u == lucas_uv_linear((-7, 3), p - 1, p).u


def test_v_zero_examples():
    assert v_zero_indices((-1, 1), 5, 2, 4) == []
    assert v_zero_indices((-3, 1), 7, 0, 6) == [2, 6]
    assert v_zero_indices((4, 9), 7, 5, 3) == []


def test_v_zero_indices_brute():
    for p in (5, 7, 11, 13):
        for A in range(p):
            for B in range(p):
                want = [k for k in range(3, 2 * p) if lucas_uv((A, B), k, p).v == 0]
                assert v_zero_indices((A, B), p, 3, 2 * p - 1) == want


def test_identity_116_examples():
    assert check_identity_116(0, 101)
    assert check_identity_116(1, 11)
    assert check_identity_116(2, 37)
    assert lucas_uv((1, 16), 2, 37).v == -31 % 37
    assert lucas_uv((-3, 4), 4, 37).v == -31 % 37


def test_identity_116_range():
    for p in odd_primes(3, 200):
        for k in range(201):
            assert check_identity_116(k, p)


def test_period_sanity():
    rng = random.Random(5)
    primes = odd_primes(3, 2000)
    done = 0
    while done < 200:
        p = rng.choice(primes)
        A, B = rng.randrange(p), rng.randrange(1, p)
        if legendre(A * A - 4 * B, p) != -1:
            continue
        assert lucas_uv((A, B), p + 1, p).v == 2 * B % p
        done += 1


def test_half_index_claim_probe():
    # v_4(-3,1) = 47 = 5 mod 7 but v_2(-3,1) = 7
    assert not half_index_zero_claim(7)
    assert lucas_uv((-3, 1), 2, 7).v == 0
