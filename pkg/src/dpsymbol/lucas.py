"""Lucas sequences u_n(A, B), v_n(A, B) reduced modulo an odd prime."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import mod_inv, mod_pow


@dataclass(frozen=True)
class LucasParams:
    A: int
    B: int

    @property
    def delta(self) -> int:
        return self.A * self.A - 4 * self.B


@dataclass(frozen=True)
class LucasPair:
    n: int
    u: int
    v: int
    params: LucasParams
    p: int

    def norm_holds(self) -> bool:
        """``v**2 - delta*u**2 == 4*B**n`` modulo p."""
        p = self.p
        lhs = (self.v * self.v - self.params.delta * self.u * self.u) % p
        return lhs == 4 * mod_pow(self.params.B, self.n, p) % p


def _as_params(params) -> LucasParams:
    if isinstance(params, LucasParams):
        return params
    A, B = params
    return LucasParams(A, B)


def lucas_uv(params, n: int, p: int) -> LucasPair:
    """``(u_n, v_n) mod p`` by fast doubling over the bits of ``n``.

    ``params`` is a LucasParams or an ``(A, B)`` tuple; negative values are
    reduced modulo ``p``.
    """
    params = _as_params(params)
    if n < 0:
        raise ValueError("n must be non-negative")
    A, B = params.A % p, params.B % p
    D = (A * A - 4 * B) % p
    half = mod_inv(2, p)
    u, v, q = 0, 2 % p, 1  # u_k, v_k, B^k at k = 0
    for bit in bin(n)[2:]:
        u, v, q = u * v % p, (v * v - 2 * q) % p, q * q % p
        if bit == "1":
            u, v = (A * u + v) * half % p, (D * u + A * v) * half % p
            q = q * B % p
    return LucasPair(n, u, v, params, p)


def lucas_uv_linear(params, n: int, p: int) -> LucasPair:
    """Same as :func:`lucas_uv` by stepping the recurrence ``n`` times."""
    params = _as_params(params)
    A, B = params.A % p, params.B % p
    u0, u1 = 0, 1
    v0, v1 = 2 % p, A
    for _ in range(n):
        u0, u1 = u1, (A * u1 - B * u0) % p
        v0, v1 = v1, (A * v1 - B * v0) % p
    return LucasPair(n, u0, v0, params, p)


def v_zero_indices(params, p: int, kmin: int, kmax: int) -> list[int]:
    """Indices ``k`` in ``[kmin, kmax]`` with ``v_k == 0 (mod p)``."""
    params = _as_params(params)
    if kmin < 0:
        raise ValueError("kmin must be non-negative")
    A, B = params.A % p, params.B % p
    out = []
    v0, v1 = 2 % p, A
    for k in range(kmax + 1):
        if k >= kmin and v0 == 0:
            out.append(k)
        v0, v1 = v1, (A * v1 - B * v0) % p
    return out


def check_identity_116(k: int, p: int) -> bool:
    """``(-4)^k v_k(-1/4, 1) == v_k(1, 16) == v_2k(-3, 4)`` modulo p."""
    a = -mod_inv(4, p) % p
    lhs = mod_pow(-4, k, p) * lucas_uv((a, 1), k, p).v % p
    mid = lucas_uv((1, 16), k, p).v
    rhs = lucas_uv((-3, 4), 2 * k, p).v
    return lhs == mid == rhs


def half_index_zero_claim(p: int) -> bool:
    """Whether ``v_{(p+1)/2}(-3, 1) == 0 (mod p)``.

    Empirical probe of a cited claim; it does not hold at every prime in the
    class it is cited for (it fails at p = 7, for instance).
    """
    return lucas_uv((-3, 1), (p + 1) // 2, p).v == 0
