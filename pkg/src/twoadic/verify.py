"""Numerical verification of the spectrum and 2-adic complexity claims.

Each check is a *cell*: a (claim, parameters) pair that runs independently
and yields one VerificationReport.  ``run_cells`` fans cells out over worker
processes and returns the reports in canonical order.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from .adic import (
    VerificationReport,
    eq1_rhs,
    eq2_rhs,
    lemma3_check,
    two_adic_profile,
    verify_c_gcd_lemmas,
    verify_gmw_bound,
    verify_two_prime_exact,
)
from .bitseq import BitSequence, autocorrelation_spectrum
from .constructions import build_gmw_modified, build_two_prime_modified
from .primes import format_factorization, twin_prime_pairs

CLAIMS = (
    "lemma1",
    "lemma2",
    "lemma3",
    "eq1",
    "eq2",
    "cgcd",
    "gmw-bound",
    "twoprime-exact",
    "example1",
)

# desk-scale limits
MAX_K = 6
MAX_TWO_PRIME_PERIOD = 6000
MAX_RANDOM_N = 64

EXAMPLE1_BITS = "100101110111111"


def lemma1_value(k: int, tau: int) -> int:
    n = (1 << (2 * k)) - 1
    tau %= n
    if tau == 0:
        return n
    return -1 if tau % ((1 << k) + 1) == 0 else 3


def lemma2_value(p: int, tau: int) -> int:
    n = p * (p + 2)
    tau %= n
    if tau == 0:
        return n
    return -1 if tau % (p + 2) == 0 else 3


def _spectrum_report(claim, params, s: BitSequence, formula) -> VerificationReport:
    spec = autocorrelation_spectrum(s)
    bad = [t for t, v in enumerate(spec.values) if v != formula(t)]
    return VerificationReport(
        claim,
        params,
        "three-valued spectrum: N at 0, -1 on the distinguished multiples, 3 elsewhere",
        {
            "n": s.period,
            "histogram": spec.histogram(),
            "mismatches": len(bad),
            "first_mismatch": bad[0] if bad else None,
        },
        not bad,
    )


def check_lemma1(k: int) -> VerificationReport:
    s, _ = build_gmw_modified(k)
    return _spectrum_report("lemma1", {"k": k}, s, lambda t: lemma1_value(k, t))


def check_lemma2(p: int) -> VerificationReport:
    s = build_two_prime_modified(p)
    return _spectrum_report("lemma2", {"p": p}, s, lambda t: lemma2_value(p, t))


def random_sequence(rng: random.Random, n: int) -> BitSequence:
    return BitSequence(rng.getrandbits(1) for _ in range(n))


def check_lemma3_random(n: int, count: int, seed: int) -> VerificationReport:
    rng = random.Random(f"{seed}:{n}")
    failures = 0
    for _ in range(count):
        if not lemma3_check(random_sequence(rng, n)).holds:
            failures += 1
    return VerificationReport(
        "lemma3",
        {"n": n, "count": count, "seed": seed},
        "correlation identity holds for every sample",
        {"failures": failures},
        failures == 0,
    )


def _family_instance(family: str, value: int) -> BitSequence:
    if family == "gmw":
        return build_gmw_modified(value)[0]
    return build_two_prime_modified(value)


def check_lemma3_family(family: str, value: int) -> VerificationReport:
    key = "k" if family == "gmw" else "p"
    rep = lemma3_check(_family_instance(family, value))
    return VerificationReport(
        "lemma3",
        {"family": family, key: value},
        "correlation identity holds",
        {"n": rep.period, "lhs": rep.lhs, "rhs": rep.rhs},
        rep.holds,
    )


def check_eq1(k: int) -> VerificationReport:
    rep = lemma3_check(build_gmw_modified(k)[0])
    rhs = eq1_rhs(k)
    return VerificationReport(
        "eq1",
        {"k": k},
        "-2 S(2) T(1/2) reduces to the closed form for the GMW family",
        {"n": rep.period, "lhs": rep.lhs, "closed_form": rhs, "identity_holds": rep.holds},
        rep.holds and rep.lhs == rhs,
    )


def check_eq2(p: int) -> VerificationReport:
    rep = lemma3_check(build_two_prime_modified(p))
    rhs = eq2_rhs(p)
    return VerificationReport(
        "eq2",
        {"p": p},
        "-2 S(2) T(1/2) reduces to c modulo 2^N - 1",
        {"n": rep.period, "lhs": rep.lhs, "closed_form": rhs, "identity_holds": rep.holds},
        rep.holds and rep.lhs == rhs,
    )


def check_example1() -> VerificationReport:
    s = build_two_prime_modified(3)
    prof = two_adic_profile(s)
    measured = {
        "bits": str(s),
        "s2": prof.s2,
        "s2_factors": format_factorization(prof.s2),
        "modulus": prof.modulus,
        "modulus_factors": format_factorization(prof.modulus),
        "g": prof.g,
        "qmin": prof.qmin,
    }
    ok = (
        str(s) == EXAMPLE1_BITS
        and prof.s2 == 32489
        and prof.g == 1
        and prof.qmin == 32767
    )
    return VerificationReport(
        "example1",
        {"p": 3},
        f"bits {EXAMPLE1_BITS}, S(2) = 32489, g = 1, qmin = 32767",
        measured,
        ok,
    )


_RUNNERS = {
    "lemma1": check_lemma1,
    "lemma2": check_lemma2,
    "lemma3-random": check_lemma3_random,
    "lemma3-family": check_lemma3_family,
    "eq1": check_eq1,
    "eq2": check_eq2,
    "cgcd": verify_c_gcd_lemmas,
    "gmw-bound": verify_gmw_bound,
    "twoprime-exact": verify_two_prime_exact,
    "example1": check_example1,
}


def run_cell(cell: tuple) -> VerificationReport:
    name, *args = cell
    return _RUNNERS[name](*args)


def build_cells(
    claims: Iterable[str],
    k_range: tuple[int, int] = (2, MAX_K),
    p_limit: int = 71,
    seed: int = 0,
    count: int = 1000,
    n_range: tuple[int, int] = (2, MAX_RANDOM_N),
) -> list[tuple]:
    """Expand claim names into independent cells, validating the ranges."""
    k_lo, k_hi = k_range
    if not 2 <= k_lo <= k_hi <= MAX_K:
        raise ValueError(f"k-range must satisfy 2 <= A <= B <= {MAX_K}")
    if p_limit < 3 or p_limit * (p_limit + 2) > MAX_TWO_PRIME_PERIOD:
        raise ValueError(f"p-limit must keep p(p+2) <= {MAX_TWO_PRIME_PERIOD}")
    n_lo, n_hi = n_range
    if not 2 <= n_lo <= n_hi <= MAX_RANDOM_N:
        raise ValueError(f"random N range must lie in 2..{MAX_RANDOM_N}")
    ks = range(k_lo, k_hi + 1)
    ps = [p for p, _ in twin_prime_pairs(p_limit)]
    claims = list(claims)
    if "all" in claims:
        claims = list(CLAIMS)
    cells: list[tuple] = []
    for claim in claims:
        if claim == "lemma1":
            cells += [("lemma1", k) for k in ks]
        elif claim == "lemma2":
            cells += [("lemma2", p) for p in ps]
        elif claim == "lemma3":
            cells += [("lemma3-random", n, count, seed) for n in range(n_lo, n_hi + 1)]
            cells += [("lemma3-family", "gmw", k) for k in ks]
            cells += [("lemma3-family", "twoprime", p) for p in ps]
        elif claim in ("eq1", "gmw-bound"):
            cells += [(claim, k) for k in ks]
        elif claim in ("eq2", "cgcd", "twoprime-exact"):
            cells += [(claim, p) for p in ps]
        elif claim == "example1":
            cells.append(("example1",))
        else:
            raise ValueError(f"unknown claim {claim!r}")
    return cells


def run_cells(cells: list[tuple], jobs: Optional[int] = None) -> list[VerificationReport]:
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(cells) <= 1:
        reports = [run_cell(c) for c in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_cell, cells))
    return sorted(reports, key=VerificationReport.sort_key)
