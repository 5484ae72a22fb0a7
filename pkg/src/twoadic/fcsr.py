"""2-adic rational approximation: the synthesis side of 2-adic complexity.

A bit stream a_0 a_1 ... is read as the 2-adic integer sum a_i 2^i.  An FCSR
with connection integer q and initial numerator f emits exactly the 2-adic
expansion of f/q (q odd).  ``approximate`` finds the pair (f, q) of least
max(|f|, |q|) consistent with a prefix; ``minimal_by_bruteforce`` is the
exhaustive oracle used to check it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .adic import two_adic_profile
from .bitseq import BitSequence

__all__ = [
    "RationalApprox",
    "SecurityMargin",
    "approximate",
    "expand",
    "minimal_by_bruteforce",
    "periodic_prefix",
    "recovery_length",
    "security_margin",
    "synthesize",
]


def _height(a: int, b: int) -> int:
    return max(abs(a), abs(b))


def _log2_int(n: int) -> float:
    if n <= 1:
        return 0.0
    shift = max(n.bit_length() - 64, 0)
    return math.log2(n >> shift) + shift


@dataclass(frozen=True)
class RationalApprox:
    f: int
    q: int

    def __post_init__(self):
        if self.q % 2 == 0:
            raise ValueError("denominator must be odd")

    @classmethod
    def canonical(cls, f: int, q: int) -> RationalApprox:
        """Reduced form with q > 0 and the sign carried by f."""
        if q < 0:
            f, q = -f, -q
        g = math.gcd(f, q)
        return cls(f // g, q // g)

    @property
    def height(self) -> int:
        return _height(self.f, self.q)

    @property
    def phi_measure(self) -> float:
        return _log2_int(self.height)

    def expand(self, nbits: int) -> list[int]:
        return expand(self.f, self.q, nbits)

    def as_dict(self) -> dict:
        return {"f": str(self.f), "q": str(self.q), "phi_measure": self.phi_measure}


def expand(f: int, q: int, nbits: int) -> list[int]:
    """First ``nbits`` digits of the 2-adic expansion of f/q."""
    if q % 2 == 0:
        raise ValueError("q must be odd")
    out = []
    for _ in range(nbits):
        b = f & 1
        out.append(b)
        f = (f - b * q) >> 1
    return out


def _best_odd_multiplier(f: int, q: int, g: int, h: int) -> int:
    """Odd d minimising max(|f + d g|, |q + d h|).

    The objective is convex and piecewise linear in d, so its real minimum
    sits at a breakpoint; the best odd integer is adjacent to one.
    """
    points = []
    if g:
        points.append(-f // g)
    if h:
        points.append(-q // h)
    if g != h:
        points.append((q - f) // (g - h))
    if g != -h:
        points.append(-(f + q) // (g + h))
    candidates = {1, -1}
    for x in points:
        for d in range(x - 2, x + 3):
            if d & 1:
                candidates.add(d)
    return min(sorted(candidates), key=lambda d: (_height(f + d * g, q + d * h), abs(d)))


def approximate(prefix: Sequence[int]) -> RationalApprox:
    """Rational approximation of a bit prefix (Klapper-Goresky style).

    Keeps two lattice pairs (g, h) and (f, q), both satisfying
    alpha*h = g mod 2^i, and updates them one bit at a time.  The returned
    pair reproduces the prefix and has minimal height.
    """
    bits = [int(b) for b in prefix]
    try:
        k = bits.index(1)
    except ValueError:
        return RationalApprox(0, 1)
    alpha = 1 << k
    f, q = 0, 2
    g, h = 1 << k, 1
    for i in range(k + 1, len(bits)):
        if bits[i]:
            alpha |= 1 << i
        if not (alpha * h - g) >> i & 1:
            f, q = 2 * f, 2 * q
        elif _height(g, h) < _height(f, q):
            d = _best_odd_multiplier(f, q, g, h)
            g, h, f, q = f + d * g, q + d * h, 2 * g, 2 * h
        else:
            d = _best_odd_multiplier(g, h, f, q)
            g, h, f, q = g + d * f, h + d * q, 2 * f, 2 * q
    return RationalApprox.canonical(g, h)


def minimal_by_bruteforce(prefix: Sequence[int], bound: Optional[int] = None) -> Optional[RationalApprox]:
    """Exhaustive search over odd 0 < q <= bound and |f| <= bound.

    For each q the prefix fixes f modulo 2^L, so only the representatives
    nearest zero need checking.  Returns None when nothing fits the box.
    ``bound`` defaults to 2^L, which always contains a solution.
    """
    L = len(prefix)
    if L > 24:
        raise ValueError("brute force is limited to prefixes of length <= 24")
    modulus = 1 << L
    if bound is None:
        bound = modulus
    alpha = sum(int(b) << i for i, b in enumerate(prefix))
    best = None
    for q in range(1, bound + 1, 2):
        if best is not None and q >= best[0]:
            break
        r = alpha * q % modulus
        f = r if r <= modulus - r else r - modulus
        if abs(f) > bound:
            continue
        height = max(abs(f), q)
        if best is None or height < best[0]:
            best = (height, f, q)
    if best is None:
        return None
    return RationalApprox.canonical(best[1], best[2])


def recovery_length(height: int) -> int:
    """Prefix length 2*ceil(log2 height) + 2 that guarantees recovery."""
    return 2 * (height - 1).bit_length() + 2


@dataclass(frozen=True)
class SecurityMargin:
    period: int
    qmin: int
    phi2: float
    required_prefix_bits: int

    @property
    def fraction_of_period(self) -> float:
        return self.required_prefix_bits / self.period

    def as_dict(self) -> dict:
        return {
            "n": self.period,
            "qmin_bits": self.qmin.bit_length(),
            "phi2": self.phi2,
            "required_prefix_bits": self.required_prefix_bits,
            "fraction_of_period": self.fraction_of_period,
        }


def security_margin(s: BitSequence) -> SecurityMargin:
    prof = two_adic_profile(s)
    # the reduced numerator is smaller than qmin in absolute value
    return SecurityMargin(s.period, prof.qmin, prof.phi2, recovery_length(prof.qmin))


def periodic_prefix(s: BitSequence, length: int) -> list[int]:
    bits = s.bits
    n = len(bits)
    return [bits[i % n] for i in range(length)]


def synthesize(s: BitSequence, length: Optional[int] = None) -> RationalApprox:
    """Run ``approximate`` on ``length`` bits of the periodic sequence (default 2N + 2)."""
    if length is None:
        length = 2 * s.period + 2
    return approximate(periodic_prefix(s, length))

