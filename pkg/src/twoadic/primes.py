"""Small number-theory helpers: primality, twin primes, Legendre symbols."""

from __future__ import annotations

# Miller-Rabin with the first 12 prime bases is deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def twin_prime_pairs(limit: int) -> list[tuple[int, int]]:
    """Ascending twin pairs (p, p+2) with p <= limit."""
    return [(p, p + 2) for p in range(3, limit + 1, 2) if is_prime(p) and is_prime(p + 2)]


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) via Euler's criterion."""
    if q < 3 or not is_prime(q):
        raise ValueError(f"legendre symbol needs an odd prime modulus, got {q}")
    r = pow(a % q, (q - 1) // 2, q)
    return -1 if r == q - 1 else r


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division; fine for n below ~1e12."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def small_factorization(n: int, bound: int = 10**6) -> tuple[list[int], int]:
    """Trial-divide n by primes up to ``bound``.

    Returns (factors with multiplicity, cofactor).  The cofactor is 1 when the
    factorization is complete, or a prime when it is below bound**2.
    """
    n = abs(n)
    factors = []
    d = 2
    while d <= bound and d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if 1 < n and (n < bound * bound or is_prime(n)):
        factors.append(n)
        n = 1
    return factors, n


def format_factorization(n: int, bound: int = 10**6) -> str:
    factors, rest = small_factorization(n, bound)
    parts = [str(f) for f in factors]
    if rest != 1:
        parts.append(f"({rest})")
    return "*".join(parts) or "1"
