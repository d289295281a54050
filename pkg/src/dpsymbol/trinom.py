"""Generalized trinomial coefficients and the U(k) predictor for D_p(b, c).

Three indexings of the coefficient symbol ``binom(n, k)_{b,c}`` are
supported:

``poly``
    ``[x^k] (x^2 + b x + c)^n``, k in ``[0, 2n]``.
``reversed``
    ``[x^k] (1 + b x + c x^2)^n``.
``laurent``
    ``[x^k] (x + b + c/x)^n``, k in ``[-n, n]``; the classical trinomial
    coefficient indexing. This is the one that agrees with the determinant
    oracle (see :func:`calibrate`) and is the default for predictions.

``sign=-1`` replaces the ``+`` between the two terms of U(k) with ``-``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .arith import legendre, sym_pow
from .lucas import lucas_uv

CONVENTIONS = ("poly", "reversed", "laurent")
DEFAULT_CONVENTION = "laurent"


@dataclass(frozen=True)
class CoeffVector:
    """Coefficients of ``(x^2 + b x + c)^n`` modulo p, lowest degree first."""

    n: int
    coeffs: tuple[int, ...]
    b: int
    c: int
    p: int
    _rev: Optional[tuple[int, ...]] = field(default=None, repr=False, compare=False)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def symbol(self, k: int, convention: str = "poly") -> int:
        """``binom(n, k)_{b,c}`` under ``convention``; out-of-range k gives 0."""
        if convention == "poly":
            idx, vec = k, self.coeffs
        elif convention == "laurent":
            idx, vec = k + self.n, self.coeffs
        elif convention == "reversed":
            idx, vec = k, self._reversed()
        else:
            raise ValueError(f"unknown convention {convention!r}")
        return vec[idx] if 0 <= idx < len(vec) else 0

    def _reversed(self) -> tuple[int, ...]:
        # (1 + b x + c x^2)^n has the coefficients of (c x^2 + b x + 1)^n
        if self._rev is None:
            rev = trinomial_expand(self.b, self.c, self.n, self.p, reverse=True).coeffs
            object.__setattr__(self, "_rev", rev)
        return self._rev


@lru_cache(maxsize=4096)
def trinomial_expand(b: int, c: int, n: int, p: int, reverse: bool = False) -> CoeffVector:
    """Expand ``(x^2 + b x + c)^n`` mod p by ``n`` successive multiplications.

    With ``reverse=True`` the base polynomial is ``1 + b x + c x^2`` instead.
    """
    b, c = b % p, c % p
    base = np.array([1, b, c] if reverse else [c, b, 1], dtype=np.int64)
    co = np.ones(1, dtype=np.int64)
    for _ in range(n):
        co = np.convolve(co, base) % p
    return CoeffVector(n, tuple(int(v) for v in co), b, c, p)


def u_cap(
    b: int,
    c: int,
    p: int,
    k: int,
    convention: str = "poly",
    sign: int = 1,
    coeffs: Optional[CoeffVector] = None,
) -> int:
    """``U(k) = binom(p-2, k) + c^(p-1-k) binom(p-2, p-1-k)`` modulo p."""
    if not 0 <= k <= p - 1:
        raise ValueError(f"k={k} outside [0, {p - 1}]")
    if coeffs is None:
        coeffs = trinomial_expand(b, c, p - 2, p)
    first = coeffs.symbol(k, convention)
    second = coeffs.symbol(p - 1 - k, convention)
    return (first + sign * pow(c % p, p - 1 - k, p) * second) % p


def lemma11_predict(
    b: int, c: int, p: int, convention: str = DEFAULT_CONVENTION, sign: int = 1
) -> Optional[int]:
    """Predict ``(D_p(b, c)/p)`` from the U(k) values, or ``None`` if p | c(b^2-4c).

    Returns 0 when some U(k) with ``2 <= k <= p-2`` vanishes. Otherwise the
    symbol is the product of the three Legendre factors built from
    ``4c - b^2 + 2c (delta/p)``, ``2c u_{p-1}(-b, c) - b`` and
    ``U(p-2) U((p-1)/2)``, times ``(c/p)^((p-1)(p-3)/8)``.
    """
    delta = b * b - 4 * c
    if (c * delta) % p == 0:
        return None
    coeffs = trinomial_expand(b, c, p - 2, p)
    U = lambda k: u_cap(b, c, p, k, convention, sign, coeffs)  # noqa: E731
    if any(U(k) == 0 for k in range(2, p - 1)):
        return 0
    chi = legendre(delta, p)
    f1 = legendre(4 * c - b * b + 2 * c * chi, p)
    f2 = legendre(2 * c * lucas_uv((-b, c), p - 1, p).u - b, p)
    f3 = legendre(U(p - 2) * U((p - 1) // 2), p)
    return f1 * f2 * f3 * sym_pow(legendre(c, p), (p - 1) * (p - 3) // 8)


CANDIDATES: tuple[tuple[str, int], ...] = tuple(
    (conv, sign) for conv in CONVENTIONS for sign in (1, -1)
)


@dataclass
class CalibrationResult:
    pmax: int
    checked: int
    # (convention, sign) -> list of (p, b, c, oracle, predicted)
    mismatches: dict[tuple[str, int], list[tuple[int, int, int, int, int]]]

    @property
    def matching(self) -> list[tuple[str, int]]:
        return [cand for cand, rows in self.mismatches.items() if not rows]

    @property
    def adopted(self) -> Optional[tuple[str, int]]:
        m = self.matching
        return m[0] if m else None

    def table(self) -> str:
        lines = ["convention,sign,mismatches,first_mismatch"]
        for (conv, sign), rows in self.mismatches.items():
            first = " ".join(map(str, rows[0])) if rows else ""
            lines.append(f"{conv},{sign:+d},{len(rows)},{first}")
        return "\n".join(lines)


def calibrate(
    oracle: Callable[[int, int, int], int],
    primes,
    candidates=CANDIDATES,
) -> CalibrationResult:
    """Compare every candidate indexing against ``oracle(b, c, p)``.

    Runs over all admissible ``(b, c)`` for each prime in ``primes``.
    """
    mism: dict = {cand: [] for cand in candidates}
    checked = 0
    for p in primes:
        for b in range(p):
            for c in range(1, p):
                if (b * b - 4 * c) % p == 0:
                    continue
                checked += 1
                want = oracle(b, c, p)
                for conv, sign in candidates:
                    got = lemma11_predict(b, c, p, conv, sign)
                    if got != want:
                        mism[(conv, sign)].append((p, b, c, want, got))
    return CalibrationResult(max(primes, default=0), checked, mism)
