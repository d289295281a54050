"""Arithmetic in R = (Z/p)[x]/(x^2 - delta).

When ``delta`` is a non-residue modulo ``p`` the ring is the field with
``p**2`` elements; this is where the roots alpha, beta of ``x^2 - A x + B``
and the ratio ``theta = alpha/beta`` live.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .arith import legendre, mod_inv, mod_pow
from .errors import BNotInvertible, NotAField, NotApplicable, RingMismatch, ZeroElement


@dataclass(frozen=True)
class QuadRing:
    p: int
    delta: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", self.delta % self.p)

    @property
    def is_field(self) -> bool:
        return legendre(self.delta, self.p) == -1

    def __call__(self, a: int, b: int = 0) -> "QuadElem":
        return QuadElem(a, b, self)

    @property
    def one(self) -> "QuadElem":
        return QuadElem(1, 0, self)

    @property
    def omega(self) -> "QuadElem":
        return QuadElem(0, 1, self)


@dataclass(frozen=True)
class QuadElem:
    """``a + b*omega`` with ``omega**2 == ring.delta``."""

    a: int
    b: int
    ring: QuadRing

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", self.a % self.ring.p)
        object.__setattr__(self, "b", self.b % self.ring.p)

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, int):
            return QuadElem(other, 0, self.ring)
        if isinstance(other, QuadElem):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a + other.a, self.b + other.b, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.a - other.a, self.b - other.b, self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return qr_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadElem":
        return qr_pow(self, n)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other % self.ring.p
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.ring) == (other.a, other.b, other.ring)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.ring))

    def __repr__(self) -> str:
        return f"{self.a}+{self.b}w (mod {self.ring.p}, w^2={self.ring.delta})"

    @property
    def is_scalar(self) -> bool:
        return self.b == 0

    def norm(self) -> int:
        p = self.ring.p
        return (self.a * self.a - self.ring.delta * self.b * self.b) % p

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self!r} is not invertible")
        inv = mod_inv(n, self.ring.p)
        return QuadElem(self.a * inv, -self.b * inv, self.ring)


def qr_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    if x.ring != y.ring:
        raise RingMismatch(f"{x.ring} vs {y.ring}")
    p, d = x.ring.p, x.ring.delta
    return QuadElem(
        (x.a * y.a + x.b * y.b % p * d) % p, (x.a * y.b + x.b * y.a) % p, x.ring
    )


def qr_pow(x: QuadElem, n: int) -> QuadElem:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = x.ring.one
    while n:
        if n & 1:
            result = qr_mul(result, x)
        x = qr_mul(x, x)
        n >>= 1
    return result


def conj(x: QuadElem) -> QuadElem:
    return QuadElem(x.a, -x.b, x.ring)


def alpha_of(A: int, B: int, p: int) -> QuadElem:
    """Root ``(A + omega)/2`` of ``x^2 - A x + B`` in R with delta = A^2 - 4B."""
    half = mod_inv(2, p)
    ring = QuadRing(p, A * A - 4 * B)
    return QuadElem(A * half, half, ring)


def theta_of(A: int, B: int, p: int) -> QuadElem:
    """``alpha / beta``, computed as ``alpha**2 / B``."""
    if B % p == 0:
        raise BNotInvertible(f"{p} divides B={B}")
    alpha = alpha_of(A, B, p)
    return qr_mul(alpha, alpha) * mod_inv(B, p)


def verify_sun_lemma(A: int, B: int, p: int) -> bool:
    """Check ``((A +- omega)/2)**(p - (D/p)) == B**((1 - (D/p))/2)`` in R.

    Raises NotApplicable when p divides ``B * D``.
    """
    delta = A * A - 4 * B
    if (B * delta) % p == 0:
        raise NotApplicable(f"{p} divides B*delta = {B * delta}")
    chi = legendre(delta, p)
    target = mod_pow(B, (1 - chi) // 2, p)
    alpha = alpha_of(A, B, p)
    return all(qr_pow(r, p - chi) == target for r in (alpha, conj(alpha)))


def factorize(n: int) -> Counter:
    """Prime factorization of ``n >= 1`` as a Counter ``{prime: multiplicity}``."""
    if n < 1:
        raise ValueError("n must be positive")
    out: Counter = Counter()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] += 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] += 1
    return out


def _check_field_elem(x: QuadElem) -> None:
    if not x.ring.is_field:
        raise NotAField(f"delta={x.ring.delta} is not a non-residue mod {x.ring.p}")
    if x.a == 0 and x.b == 0:
        raise ZeroElement("zero has no multiplicative order")


def mult_order(x: QuadElem) -> int:
    """Multiplicative order in the field R.

    Starts from the group order ``p**2 - 1`` and strips prime factors while
    the power stays 1.
    """
    _check_field_elem(x)
    p = x.ring.p
    order = p * p - 1
    for q, e in factorize(order).items():
        for _ in range(e):
            if qr_pow(x, order // q) == 1:
                order //= q
            else:
                break
    return order


def has_minus_one_power(x: QuadElem) -> bool:
    """Whether ``x**k == -1`` for some ``k >= 1``.

    The multiplicative group is cyclic, so -1 is its only element of order
    2 and it is a power of ``x`` exactly when the order of ``x`` is even.
    """
    return mult_order(x) % 2 == 0
