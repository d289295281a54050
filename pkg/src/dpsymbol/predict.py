"""Closed-form predictors for the Legendre symbol of D_p(b, c).

Every predictor is a pure formula evaluation and never consults the
determinant oracle, with the exception of :func:`relation_neg_b` and
:func:`predict_eq17` which express a relation between two oracle values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arith import legendre, mod_inv, sqrt_mod, sym_pow
from .detcore import dp_det, dp_symbol
from .errors import CDivisible
from .lucas import v_zero_indices
from .trinom import lemma11_predict


@dataclass(frozen=True)
class Prediction:
    """Outcome of one predictor.

    ``value`` is set when every hypothesis held and the result is a single
    symbol. ``allowed`` is set instead when the result only constrains the
    symbol to a set. Both are absent when the predictor does not apply, in
    which case ``reason`` names the first failed hypothesis.
    """

    source: str
    value: Optional[int] = None
    allowed: Optional[frozenset[int]] = None
    reason: Optional[str] = None
    hypotheses: dict = field(default_factory=dict, compare=False)

    @property
    def applicable(self) -> bool:
        return self.value is not None or self.allowed is not None

    def matches(self, oracle: int) -> bool:
        if self.value is not None:
            return self.value == oracle
        if self.allowed is not None:
            return oracle in self.allowed
        return True

    def display(self) -> str:
        if self.value is not None:
            return str(self.value)
        if self.allowed is not None:
            return "|".join(str(v) for v in sorted(self.allowed))
        return "NA"


def _na(source: str, reason: str, **hyp) -> Prediction:
    return Prediction(source, reason=reason, hypotheses=hyp)


def predict_shewu(b: int, p: int) -> Prediction:
    """``(D_p(b,1)/p)`` from the zeros of ``v_k(-b, 1)``.

    Split residue case: 0 if a zero exists for ``0 <= k <= p-3``, else
    ``((-b-2)/p)^((p-1)/2)``. Inert case: 0 if a zero exists for
    ``2 <= k <= p-1``, else the same value times ``(2b/p)``.
    """
    chi = legendre(b * b - 4, p)
    hyp = {"p": p, "legendre(b^2-4)": chi}
    if chi == 0:
        return _na("shewu", "p divides b^2-4", **hyp)
    lo, hi = (0, p - 3) if chi == 1 else (2, p - 1)
    zeros = v_zero_indices((-b, 1), p, lo, hi)
    hyp["v_zeros"] = zeros
    if zeros:
        return Prediction("shewu", 0, hypotheses=hyp)
    val = sym_pow(legendre(-b - 2, p), (p - 1) // 2)
    if chi == -1:
        val *= legendre(2 * b, p)
    return Prediction("shewu", val, hypotheses=hyp)


def predict_thm12(b: int, p: int) -> Prediction:
    """``(2b/p)`` when ``p = 1 (mod 4)`` and ``b^2 - 4`` is a non-residue."""
    hyp = {"p mod 4": p % 4, "legendre(b^2-4)": legendre(b * b - 4, p)}
    if p % 4 != 1:
        return _na("thm12", "p != 1 (mod 4)", **hyp)
    if hyp["legendre(b^2-4)"] != -1:
        return _na("thm12", "(b^2-4)/p != -1", **hyp)
    return Prediction("thm12", legendre(2 * b, p), hypotheses=hyp)


def predict_cor11(b: int, p: int) -> Prediction:
    """``(D_p(b,-1)/p) = (b/p)`` when ``p = 1 (mod 4)`` and ``b^2 + 4`` is a non-residue."""
    hyp = {"p mod 4": p % 4, "legendre(b^2+4)": legendre(b * b + 4, p)}
    if p % 4 != 1:
        return _na("cor11", "p != 1 (mod 4)", **hyp)
    if hyp["legendre(b^2+4)"] != -1:
        return _na("cor11", "(b^2+4)/p != -1", **hyp)
    return Prediction("cor11", legendre(b, p), hypotheses=hyp)


def predict_thm13(p: int) -> Prediction:
    """``(D_p(1,16)/p) = (-2/p)`` when ``(p/7) = -1`` and ``p != 15 (mod 16)``."""
    hyp = {"legendre(p,7)": legendre(p, 7), "p mod 16": p % 16}
    if hyp["legendre(p,7)"] != -1:
        return _na("thm13", "(p/7) != -1", **hyp)
    if p % 16 == 15:
        return _na("thm13", "p = 15 (mod 16)", **hyp)
    return Prediction("thm13", legendre(-2, p), hypotheses=hyp)


def predict_cor21(p: int) -> Prediction:
    """``(D_p(1,-1)/p) = 1`` for ``p = 1 (mod 4)``, ``p = +-2 (mod 5)``."""
    hyp = {"p mod 4": p % 4, "p mod 5": p % 5}
    if p % 4 != 1:
        return _na("cor21", "p != 1 (mod 4)", **hyp)
    if p % 5 not in (2, 3):
        return _na("cor21", "p != +-2 (mod 5)", **hyp)
    return Prediction("cor21", 1, hypotheses=hyp)


def predict_cor22(p: int) -> Prediction:
    """``(D_p(2,-1)/p)``: 0 for ``p = 3 (mod 4)``, -1 for ``p = 5 (mod 8)``, in {0, 1} otherwise."""
    hyp = {"p mod 8": p % 8}
    if p % 4 == 3:
        return Prediction("cor22", 0, hypotheses=hyp)
    if p % 8 == 5:
        return Prediction("cor22", -1, hypotheses=hyp)
    return Prediction("cor22", allowed=frozenset({0, 1}), hypotheses=hyp)


def predict_cor23(p: int) -> Prediction:
    """``(D_p(3,1)/p)`` for ``p = +-2 (mod 5)``: ``(6/p)`` or 0 by ``p mod 4``."""
    hyp = {"p mod 4": p % 4, "p mod 5": p % 5}
    if p % 5 not in (2, 3):
        return _na("cor23", "p != +-2 (mod 5)", **hyp)
    if p % 4 == 1:
        return Prediction("cor23", legendre(6, p), hypotheses=hyp)
    return Prediction("cor23", 0, hypotheses=hyp)


def predict_lemma11(b: int, c: int, p: int) -> Prediction:
    hyp = {"c": c % p, "b^2-4c": (b * b - 4 * c) % p}
    val = lemma11_predict(b, c, p)
    if val is None:
        return _na("lemma11", "p divides c(b^2-4c)", **hyp)
    return Prediction("lemma11", val, hypotheses=hyp)


def predict_eq17(b: int, c: int, p: int) -> Prediction:
    """Symbol of ``(-1/p) D_p(-b, c)``, which must equal that of ``D_p(b, c)``."""
    val = legendre(legendre(-1, p) * dp_det(-b, c, p), p)
    return Prediction("eq17", val, hypotheses={"p mod 4": p % 4})


def relation_neg_b(b: int, c: int, p: int) -> bool:
    """``D_p(-b, c) == (-1/p) D_p(b, c) (mod p)`` on the oracle determinants."""
    return dp_det(-b, c, p) == legendre(-1, p) * dp_det(b, c, p) % p


def scale_reduce(b: int, c: int, p: int) -> Optional[tuple[int, int, int]]:
    """Reduce ``D_p(b, c)`` to ``D_p(b', 1)`` when ``c`` is a square mod p.

    Returns ``(b', parity, s)`` with ``c = s^2``, ``b' = b/s`` and
    ``parity = (p-1)/2 mod 2`` so that
    ``(D_p(b,c)/p) = (s/p)^parity * (D_p(b',1)/p)``; ``None`` when c is a
    non-residue.
    """
    if c % p == 0:
        raise CDivisible(f"{p} divides c={c}")
    s = sqrt_mod(c, p)
    if s is None:
        return None
    return b * mod_inv(s, p) % p, (p - 1) // 2 % 2, s


def scaled_symbol(b: int, c: int, p: int) -> Optional[int]:
    """Oracle symbol of ``D_p(b, c)`` evaluated through :func:`scale_reduce`."""
    red = scale_reduce(b, c, p)
    if red is None:
        return None
    b1, parity, s = red
    return sym_pow(legendre(s, p), parity) * dp_symbol(b1, 1, p)


# predictor id -> (fixed (b, c) or None, callable (b, c, p) -> Prediction)
PREDICTORS = {
    "shewu": (None, 1, lambda b, c, p: predict_shewu(b, p)),
    "thm12": (None, 1, lambda b, c, p: predict_thm12(b, p)),
    "cor11": (None, -1, lambda b, c, p: predict_cor11(b, p)),
    "thm13": (1, 16, lambda b, c, p: predict_thm13(p)),
    "cor21": (1, -1, lambda b, c, p: predict_cor21(p)),
    "cor22": (2, -1, lambda b, c, p: predict_cor22(p)),
    "cor23": (3, 1, lambda b, c, p: predict_cor23(p)),
    "lemma11": (None, None, predict_lemma11),
    "eq17": (None, None, predict_eq17),
}


def predict(source: str, b: int, c: int, p: int) -> Prediction:
    """Dispatch to a predictor by id for an arbitrary ``(b, c, p)`` cell.

    Predictors tied to a specific ``b`` or ``c`` return not-applicable for
    cells that do not match it modulo p.
    """
    try:
        fb, fc, fn = PREDICTORS[source]
    except KeyError:
        raise ValueError(f"unknown predictor {source!r}") from None
    if fb is not None and (b - fb) % p:
        return _na(source, f"b != {fb} (mod p)")
    if fc is not None and (c - fc) % p:
        return _na(source, f"c != {fc} (mod p)")
    return fn(b, c, p)
