"""Acceptance checks, runnable from the CLI (``verify``) and from pytest.

Each check returns a :class:`CriterionResult`. The ``full`` tier uses the
published ranges; ``fast`` shrinks the prime bounds for quick runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .arith import legendre, odd_primes, sym_pow
from .detcore import dp_symbol
from .lucas import (
    check_identity_116,
    half_index_zero_claim,
    lucas_uv,
    lucas_uv_linear,
    v_zero_indices,
)
from .predict import predict_cor21, predict_cor22, predict_cor23, predict_shewu, relation_neg_b
from .quadring import has_minus_one_power, mult_order, qr_mul, qr_pow, theta_of, verify_sun_lemma
from .trinom import calibrate

SEED = 20240601


@dataclass
class CriterionResult:
    key: str
    title: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"[{status}] {self.key} {self.title}: {self.checked} checks"
        if self.failures:
            shown = ", ".join(map(str, self.failures[:5]))
            msg += f", {len(self.failures)} failures (first: {shown})"
        if self.note:
            msg += f" -- {self.note}"
        return msg


def _result(key, title, checked, failures, note="") -> CriterionResult:
    return CriterionResult(key, title, not failures, checked, failures, note)


def _lim(full: bool, full_value: int, fast_value: int) -> int:
    return full_value if full else fast_value


def c01_thm12(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    for p in odd_primes(3, _lim(full, 200, 60)):
        if p % 4 != 1:
            continue
        for b in range(p):
            if legendre(b * b - 4, p) != -1:
                continue
            n += 1
            got, want = dp_symbol(b, 1, p), legendre(2 * b, p)
            if got != want:
                fails.append((p, b, got, want))
    return _result("C1", "inert b, p=1 mod 4: (D_p(b,1)/p) = (2b/p)", n, fails)


def c02_shewu(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    for p in odd_primes(3, _lim(full, 150, 50)):
        for b in range(p):
            if (b * b - 4) % p == 0:
                continue
            n += 1
            got, want = predict_shewu(b, p).value, dp_symbol(b, 1, p)
            if got != want:
                fails.append((p, b, got, want))
    split = sum(legendre(b * b - 4, p) == 1 for p, b, _, _ in fails)
    note = f"{split} failures with b^2-4 a residue, {len(fails) - split} with a non-residue"
    return _result("C2", "Lucas-zero predictor equals oracle for c=1", n, fails,
                   note if fails else "")


def c03_cor11(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    for p in odd_primes(3, _lim(full, 200, 60)):
        if p % 4 != 1:
            continue
        for b in range(p):
            if legendre(b * b + 4, p) != -1:
                continue
            n += 1
            got, want = dp_symbol(b, p - 1, p), legendre(b, p)
            if got != want:
                fails.append((p, b, got, want))
    return _result("C3", "(D_p(b,-1)/p) = (b/p) when (b^2+4/p) = -1, p=1 mod 4", n, fails)


def c04_thm13(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    for p in odd_primes(3, _lim(full, 300, 100)):
        if legendre(p % 7, 7) != -1 or p % 16 == 15:
            continue
        n += 1
        got, want = dp_symbol(1, 16, p), legendre(-2, p)
        if got != want:
            fails.append((p, got, want))
    return _result("C4", "(D_p(1,16)/p) = (-2/p) for (p/7) = -1, p != 15 mod 16", n, fails)


def c05_cor2x(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    cases = ((predict_cor21, 1, -1), (predict_cor22, 2, -1), (predict_cor23, 3, 1))
    for p in odd_primes(3, _lim(full, 300, 100)):
        for fn, b, c in cases:
            pred = fn(p)
            if not pred.applicable:
                continue
            n += 1
            oracle = dp_symbol(b, c, p)
            if not pred.matches(oracle):
                fails.append((pred.source, p, pred.display(), oracle))
    return _result("C5", "D_p(1,-1), D_p(2,-1), D_p(3,1) congruence-class values", n, fails)


def c06_relations(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    for p in odd_primes(3, _lim(full, 60, 30)):
        par = (p - 1) // 2
        for b in range(p):
            for c in range(p):
                n += 1
                if not relation_neg_b(b, c, p):
                    fails.append(("neg_b", p, b, c))
            for c in range(1, p):
                n += 1
                lhs = dp_symbol(b, c * c % p, p)
                rhs = sym_pow(legendre(c, p), par) * dp_symbol(b * pow(c, p - 2, p), 1, p)
                if lhs != rhs:
                    fails.append(("scale", p, b, c, lhs, rhs))
    return _result("C6", "sign relation in b and square-scaling relation in c", n, fails)


def c07_sun_lemma(full: bool = True) -> CriterionResult:
    rng = random.Random(SEED)
    primes = odd_primes(3, 10_000)
    fails, n = [], 0
    while n < 200:
        p = rng.choice(primes)
        A, B = rng.randrange(-p, p), rng.randrange(-p, p)
        if (B * (A * A - 4 * B)) % p == 0:
            continue
        n += 1
        if not verify_sun_lemma(A, B, p):
            fails.append((A, B, p))
    return _result("C7", "power of (A +- sqrt(D))/2 is B^((1-(D/p))/2)", n, fails)


def c08_proof_steps(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    # v_k(-b,1) = 0  <=>  theta^k = -1
    for p in odd_primes(3, 100):
        for b in range(p):
            if legendre(b * b - 4, p) != -1:
                continue
            th = theta_of(-b, 1, p)
            zeros = set(v_zero_indices((-b, 1), p, 0, 2 * p))
            power = th.ring.one
            for k in range(2 * p + 1):
                n += 1
                if (k in zeros) != (power == -1):
                    fails.append(("equiv", p, b, k))
                power = qr_mul(power, th)
    # order of theta divides (p+1)/2 and is odd
    for p in odd_primes(5, 200):
        if p % 4 != 1:
            continue
        for b in range(p):
            if legendre(b * b - 4, p) != -1:
                continue
            n += 1
            th = theta_of(-b, 1, p)
            o = mult_order(th)
            if ((p + 1) // 2) % o or o % 2 == 0 or has_minus_one_power(th):
                fails.append(("order", p, b, o))
    # theta = alpha/beta for x^2 + 3x + 4
    for p in odd_primes(3, 500):
        if legendre(-7, p) != -1:
            continue
        th = theta_of(-3, 4, p)
        if p % 16 == 7:
            n += 1
            if qr_pow(th, (p + 1) // 4) != 1:
                fails.append(("quarter", p))
        if p % 8 == 3:
            sq = qr_mul(th, th)
            power = sq
            for k in range(1, 2 * p + 1):
                n += 1
                if power == -1:
                    fails.append(("no_minus_one", p, k))
                power = qr_mul(power, sq)
    for p in odd_primes(3, 200):
        for k in range(201):
            n += 1
            if not check_identity_116(k, p):
                fails.append(("identity_116", p, k))
    return _result("C8", "proof-step properties (equivalence, orders, identity)", n, fails)


def c09_lucas(full: bool = True) -> CriterionResult:
    rng = random.Random(SEED + 9)
    primes = odd_primes(3, 10_000)
    fails = []
    for _ in range(500):
        p = rng.choice(primes)
        A, B = rng.randrange(-10_000, 10_001), rng.randrange(-10_000, 10_001)
        n = rng.randrange(0, 10_001)
        fast, slow = lucas_uv((A, B), n, p), lucas_uv_linear((A, B), n, p)
        if (fast.u, fast.v) != (slow.u, slow.v) or not fast.norm_holds() or not slow.norm_holds():
            fails.append((A, B, n, p))
    return _result("C9", "fast doubling agrees with the recurrence; norm identity", 500, fails)


def c10_calibration(full: bool = True) -> CriterionResult:
    fails = []
    if dp_symbol(1, 1, 5) != -1:
        fails.append(("fixture (5,1,1)", dp_symbol(1, 1, 5)))
    res = calibrate(dp_symbol, odd_primes(3, _lim(full, 50, 23)))
    adopted = res.adopted
    note = "adopted " + (f"{adopted[0]} sign {adopted[1]:+d}" if adopted else "none")
    note += "\n" + res.table()
    if adopted is None:
        note += "\nno convention matches; discrepancy table above is the finding"
    return CriterionResult("C10", "U(k) coefficient-convention calibration", not fails,
                           res.checked, fails, note)


def c11_wsn(full: bool = True) -> CriterionResult:
    fails, n = [], 0
    for p in odd_primes(3, 100):
        if p % 3 != 2:
            continue
        n += 1
        got, want = dp_symbol(1, 1, p), legendre(-2, p)
        if got != want:
            fails.append((p, got, want))
    return _result("C11", "(D_p(1,1)/p) = (-2/p) for p = 2 mod 3", n, fails)


CRITERIA: dict[str, Callable[[bool], CriterionResult]] = {
    "C1": c01_thm12,
    "C2": c02_shewu,
    "C3": c03_cor11,
    "C4": c04_thm13,
    "C5": c05_cor2x,
    "C6": c06_relations,
    "C7": c07_sun_lemma,
    "C8": c08_proof_steps,
    "C9": c09_lucas,
    "C10": c10_calibration,
    "C11": c11_wsn,
}


def index_claim_report(pmax: int = 300) -> dict[int, bool]:
    """Truth of ``v_{(p+1)/2}(-3,1) = 0 (mod p)`` for p = 3 mod 4, p = +-2 mod 5."""
    return {
        p: half_index_zero_claim(p)
        for p in odd_primes(3, pmax)
        if p % 4 == 3 and p % 5 in (2, 3)
    }


def run_suite(suite: str = "fast") -> list[CriterionResult]:
    if suite not in ("fast", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    full = suite == "full"
    return [fn(full) for fn in CRITERIA.values()]
