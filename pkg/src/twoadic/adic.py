"""Exact 2-adic complexity and the correlation identities around it.

All arithmetic is on Python ints.  Signed intermediate values are kept
signed and only reduced into [0, 2^N - 1) where two sides are compared.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from .bitseq import BitSequence, autocorrelation_spectrum
from .constructions import (
    TwoPrimeParams,
    build_gmw_modified,
    build_two_prime_modified,
)

__all__ = [
    "AdicProfile",
    "CorrelationIdentityReport",
    "VerificationReport",
    "c_value",
    "correlation_sum",
    "eq1_rhs",
    "eq1_value",
    "eq2_rhs",
    "lemma3_check",
    "s_of_2",
    "t_of_half_mod",
    "two_adic_profile",
    "verify_c_gcd_lemmas",
    "verify_gmw_bound",
    "verify_two_prime_exact",
]


@dataclass(frozen=True)
class AdicProfile:
    period: int
    s2: int
    modulus: int
    g: int
    qmin: int

    @property
    def qmin_bits(self) -> int:
        return self.qmin.bit_length()

    @property
    def phi2(self) -> float:
        """log2(qmin), computed without converting qmin to a float."""
        if self.qmin <= 1:
            return 0.0
        shift = max(self.qmin.bit_length() - 64, 0)
        return math.log2(self.qmin >> shift) + shift

    @property
    def full(self) -> bool:
        """True when qmin = 2^N - 1, i.e. the complexity is log2(2^N - 1)."""
        return self.qmin == self.modulus

    def as_dict(self) -> dict[str, Any]:
        return {
            "n": self.period,
            "s2": str(self.s2),
            "modulus": str(self.modulus),
            "g": str(self.g),
            "qmin": str(self.qmin),
            "qmin_bits": self.qmin_bits,
            "phi2": self.phi2,
        }


@dataclass(frozen=True)
class CorrelationIdentityReport:
    period: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class VerificationReport:
    """Outcome of checking one claim at one parameter point."""

    claim: str
    params: dict[str, Any]
    expected: str
    measured: dict[str, Any] = field(default_factory=dict)
    passed: bool = False

    def sort_key(self) -> tuple:
        return (self.claim, tuple(sorted(self.params.items())))

    def as_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": self.params,
            "expected": self.expected,
            "measured": {k: _jsonable(v) for k, v in self.measured.items()},
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _jsonable(v):
    # big integers travel as decimal strings; bools are ints in Python, keep them
    if isinstance(v, bool) or v is None or isinstance(v, (float, str)):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def s_of_2(s: BitSequence) -> int:
    """S(2) = sum s_i 2^i."""
    return int(str(s)[::-1], 2)


def t_of_half_mod(s: BitSequence) -> int:
    """T(1/2) mod 2^N - 1, where T(x) = sum (-1)^s_i x^i and 1/2 = 2^(N-1)."""
    n = s.period
    m = (1 << n) - 1
    # 2^-i == 2^((N - i) mod N); split the +1 and -1 terms into two bit masks
    plus = ["0"] * n
    minus = ["0"] * n
    for i, b in enumerate(s.bits):
        e = (n - i) % n
        (minus if b else plus)[n - 1 - e] = "1"
    return (int("".join(plus), 2) - int("".join(minus), 2)) % m


def two_adic_profile(s: BitSequence) -> AdicProfile:
    m = (1 << s.period) - 1
    s2 = s_of_2(s)
    g = math.gcd(m, s2)
    return AdicProfile(s.period, s2, m, g, m // g)


def correlation_sum(values, n: int) -> int:
    """N + sum_{tau>=1} C(tau) 2^tau, exact and unreduced."""
    return n + sum(c << tau for tau, c in enumerate(values) if tau)


def lemma3_check(s: BitSequence) -> CorrelationIdentityReport:
    """Compare -2 S(2) T(1/2) with N + sum C(tau) 2^tau modulo 2^N - 1."""
    n = s.period
    m = (1 << n) - 1
    lhs = (-2 * s_of_2(s) * t_of_half_mod(s)) % m
    spectrum = autocorrelation_spectrum(s)
    rhs = correlation_sum(spectrum.values, n) % m
    return CorrelationIdentityReport(n, lhs, rhs)


def eq1_value(k: int) -> int:
    """Signed closed form 2^(2k) - 4 (2^N_A - 1)/(2^(2^k+1) - 1), N_A = 2^(2k) - 1."""
    if k < 2:
        raise ValueError("k must be at least 2")
    n = (1 << (2 * k)) - 1
    big = (1 << n) - 1
    d = (1 << ((1 << k) + 1)) - 1
    quot, rem = divmod(big, d)
    assert rem == 0
    return (1 << (2 * k)) - 4 * quot


def eq1_rhs(k: int) -> int:
    n = (1 << (2 * k)) - 1
    return eq1_value(k) % ((1 << n) - 1)


def c_value(p: int) -> int:
    """c = p(p+2) - 4 (2^(p(p+2)) - 1)/(2^(p+2) - 1) + 1, signed."""
    TwoPrimeParams(p)
    n = p * (p + 2)
    quot, rem = divmod((1 << n) - 1, (1 << (p + 2)) - 1)
    assert rem == 0
    return n - 4 * quot + 1


def eq2_rhs(p: int) -> int:
    return c_value(p) % ((1 << (p * (p + 2))) - 1)


def verify_c_gcd_lemmas(p: int) -> VerificationReport:
    c = abs(c_value(p))
    mp = (1 << p) - 1
    mr = (1 << (p + 2)) - 1
    cof, rem = divmod((1 << (p * (p + 2))) - 1, mp * mr)
    assert rem == 0
    measured = {
        "gcd_c_2p": math.gcd(c, mp),
        "gcd_c_2p2": math.gcd(c, mr),
        "gcd_c_cofactor": math.gcd(c, cof),
        "gcd_p1sq_2p": math.gcd((p + 1) ** 2, mp),
        "gcd_pm1sq_2p2": math.gcd((p - 1) ** 2, mr),
    }
    return VerificationReport(
        "c_gcd",
        {"p": p},
        "all five gcds equal 1",
        measured,
        all(v == 1 for v in measured.values()),
    )


def verify_gmw_bound(k: int) -> VerificationReport:
    if not 2 <= k <= 6:
        raise ValueError(f"k={k} outside the supported range 2..6")
    s, _ = build_gmw_modified(k)
    prof = two_adic_profile(s)
    n = prof.period
    bound = n - 1 - 2 * (k - 1)
    g_cap = ((1 << (k - 1)) - 1) ** 2
    checks = {
        "above_bound": prof.qmin > 1 << bound,
        "above_weak_bound": prof.qmin > 1 << (bound - 1),
        "above_half_period": prof.qmin * prof.qmin > 1 << n,
        "g_within_cap": prof.g <= g_cap,
    }
    measured = {
        "n": n,
        "g": prof.g,
        "g_cap": g_cap,
        "qmin_bits": prof.qmin_bits,
        "phi2": prof.phi2,
        "bound": bound,
        **checks,
    }
    return VerificationReport(
        "gmw_bound",
        {"k": k},
        f"phi2 > {bound} > N/2 and g <= {g_cap}",
        measured,
        all(checks.values()),
    )


def verify_two_prime_exact(p: int) -> VerificationReport:
    s = build_two_prime_modified(p)
    prof = two_adic_profile(s)
    measured = {"n": prof.period, "g": prof.g, "qmin_bits": prof.qmin_bits, "phi2": prof.phi2}
    return VerificationReport(
        "twoprime_exact",
        {"p": p},
        "g = 1, qmin = 2^N - 1",
        measured,
        prof.g == 1 and prof.full,
    )
