"""Modular arithmetic over a prime field.

Residues are plain ``int`` values kept in the canonical range ``[0, p)``.
Legendre symbols are ints restricted to ``{-1, 0, 1}`` and never mixed up
with the residue ``p - 1``.
"""

from __future__ import annotations

import math
from typing import Literal, Optional

from .errors import DenominatorDivisible, NotPrimeError, ZeroInverse

Symbol = Literal[-1, 0, 1]


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class Prime(int):
    """An odd prime, validated on construction.

    Behaves exactly like ``int`` afterwards, so it can be passed anywhere a
    modulus is expected.
    """

    def __new__(cls, value: int) -> "Prime":
        if isinstance(value, Prime):
            return value
        if isinstance(value, bool) or int(value) != value:
            raise NotPrimeError(f"not an integer: {value!r}")
        value = int(value)
        if value < 3 or not is_prime(value):
            raise NotPrimeError(f"{value} is not an odd prime")
        return super().__new__(cls, value)


def sieve_primes(limit: int) -> list[int]:
    """All primes ``<= limit`` in ascending order (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def odd_primes(lo: int, hi: int) -> list[int]:
    return [q for q in sieve_primes(hi) if q >= max(lo, 3)]


def mod_pow(base: int, exp: int, p: int) -> int:
    """Square-and-multiply ``base**exp mod p``."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    result = 1 % p
    base %= p
    while exp:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    return result


def mod_inv(a: int, p: int) -> int:
    """Inverse of ``a`` modulo the prime ``p`` as ``a**(p-2)``."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse modulo {p}")
    return mod_pow(a, p - 2, p)


def egcd_inv(a: int, m: int) -> int:
    """Inverse via the extended Euclidean algorithm; works for any modulus."""
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ZeroInverse(f"{a} is not invertible modulo {m}")
    return old_s % m


def legendre(a: int, p: int) -> Symbol:
    """Legendre symbol ``(a/p)`` by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if mod_pow(a, (p - 1) // 2, p) == 1 else -1


def legendre_ratio(num: int, den: int, p: int) -> Symbol:
    """Symbol of the rational ``num/den`` seen as a residue modulo ``p``."""
    if den % p == 0:
        raise DenominatorDivisible(f"{p} divides the denominator {den}")
    return legendre(num * mod_inv(den, p), p)


def sym_pow(s: int, e: int) -> int:
    """Raise a symbol value in ``{-1, 0, 1}`` to a non-negative power."""
    if e == 0:
        return 1
    if s == 0:
        return 0
    return s if e % 2 else 1


def _nonresidue(p: int) -> int:
    z = 2
    while legendre(z, p) != -1:
        z += 1
    return z


def sqrt_mod(a: int, p: int) -> Optional[int]:
    """Smaller square root of ``a`` modulo ``p`` or ``None`` if there is none.

    Tonelli-Shanks.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = _nonresidue(p)
    m, c, t, r = s, mod_pow(z, q, p), mod_pow(a, q, p), mod_pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = mod_pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def half_factorial(p: int) -> int:
    """``((p-1)/2)! mod p``."""
    q = 1
    for k in range(2, (p - 1) // 2 + 1):
        q = q * k % p
    return q
