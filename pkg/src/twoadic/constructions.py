"""Builders for the two interleaved families.

* ``build_gmw_modified``: period 2^(2k) - 1, the all-one column interleaved
  with 2^k shifts of a 2-level sequence of period 2^k - 1.
* ``build_two_prime_modified``: period p(p+2) for twin primes, Legendre
  symbols with the multiples of p and p+2 forced to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bitseq import (
    BitSequence,
    autocorrelation_spectrum,
    cyclic_shift,
    deinterleave,
    interleave,
)
from .gf2k import GF2kField
from .primes import is_prime, legendre

__all__ = [
    "GmwParams",
    "GmwProvenance",
    "NotGMWDecomposable",
    "TwoPrimeParams",
    "build_gmw_modified",
    "build_two_prime_modified",
    "decompose_gmw",
    "find_shift",
    "modify_long_sequence",
    "trace_m_sequence",
]

MAX_GMW_K = 8


class NotGMWDecomposable(ValueError):
    def __init__(self, detail: str = ""):
        msg = "input is not GMW-decomposable"
        super().__init__(f"{msg}: {detail}" if detail else msg)


@dataclass(frozen=True)
class TwoPrimeParams:
    p: int

    def __post_init__(self):
        if self.p < 3 or not (is_prime(self.p) and is_prime(self.p + 2)):
            raise ValueError("p and p+2 must both be prime")

    @property
    def period(self) -> int:
        return self.p * (self.p + 2)


@dataclass(frozen=True)
class GmwParams:
    """Parameters for the modified GMW family.

    With ``base`` unset the sequence comes from a long trace m-sequence over
    GF(2^(2k)) (``long_modulus`` overrides the tabulated polynomial).  Setting
    ``base`` and ``shifts`` interleaves the all-one column with the given
    shifts of ``base`` instead.
    """

    k: int
    long_modulus: Optional[int] = None
    base: Optional[BitSequence] = None
    shifts: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not 2 <= self.k <= MAX_GMW_K:
            raise ValueError(f"k must lie in 2..{MAX_GMW_K}, got {self.k}")
        if (self.base is None) != (self.shifts is None):
            raise ValueError("base and shifts must be given together")
        if self.base is not None:
            if self.long_modulus is not None:
                raise ValueError("long_modulus has no effect with a user-supplied base")
            n = (1 << self.k) - 1
            if self.base.period != n:
                raise ValueError(f"base sequence must have period {n}")
            if len(self.shifts) != 1 << self.k:
                raise ValueError(f"need exactly {1 << self.k} shifts")
            if not autocorrelation_spectrum(self.base).is_two_level():
                raise ValueError("base sequence does not have 2-level autocorrelation")

    @property
    def period(self) -> int:
        return (1 << (2 * self.k)) - 1

    @property
    def user_supplied(self) -> bool:
        return self.base is not None


@dataclass(frozen=True)
class GmwProvenance:
    """How a modified GMW sequence was put together.

    Column ``constant_column`` holds the all-one sequence; the remaining
    columns, in order, are ``cyclic_shift(base, t)`` for t in ``shifts``.
    """

    k: int
    modulus: Optional[int]
    constant_column: int
    base: BitSequence
    shifts: tuple[int, ...]

    def columns(self) -> list[BitSequence]:
        cols = [cyclic_shift(self.base, t) for t in self.shifts]
        cols.insert(self.constant_column, BitSequence.constant(1, self.base.period))
        return cols

    def reconstruct(self) -> BitSequence:
        return interleave(self.columns())

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "modulus": None if self.modulus is None else hex(self.modulus),
            "constant_column": self.constant_column,
            "base": str(self.base),
            "shifts": list(self.shifts),
        }


def trace_m_sequence(field: GF2kField) -> BitSequence:
    """s_i = Tr(alpha^i) for i in [0, 2^k - 1), alpha the class of x.

    The first k terms are traces; the rest follow from the linear recurrence
    whose characteristic polynomial is the field modulus.
    """
    k = field.degree
    n = field.order - 1
    s = []
    z = 1
    for _ in range(min(k, n)):
        s.append(field.trace(z))
        z = field.mul(z, field.generator)
    taps = [j for j in range(k) if field.modulus >> j & 1]
    for i in range(n - k):
        bit = 0
        for j in taps:
            bit ^= s[i + j]
        s.append(bit)
    return BitSequence(s)


def find_shift(base: BitSequence, target: BitSequence) -> Optional[int]:
    """Smallest t with cyclic_shift(base, t) == target, or None."""
    if base.period != target.period:
        return None
    hay = str(base) * 2
    pos = hay.find(str(target))
    return pos if 0 <= pos < base.period else None


def decompose_gmw(u: BitSequence, k: int) -> tuple[int, BitSequence, tuple[int, ...]]:
    """Split a period-(2^(2k)-1) sequence into 2^k + 1 columns of period 2^k - 1.

    Exactly one column must be constant zero and every other column a cyclic
    shift of a single 2-level sequence.  Returns (constant column index, base,
    shifts of the non-constant columns relative to the base).
    """
    T = (1 << k) + 1
    if u.period != (1 << (2 * k)) - 1:
        raise NotGMWDecomposable(f"period {u.period} is not 2^(2k)-1 for k={k}")
    cols = deinterleave(u, T)
    constant = [j for j, c in enumerate(cols) if c.is_constant()]
    if len(constant) != 1:
        raise NotGMWDecomposable(f"found {len(constant)} constant columns, expected 1")
    j0 = constant[0]
    if cols[j0][0] != 0:
        raise NotGMWDecomposable("the constant column is not all-zero")
    rest = [c for j, c in enumerate(cols) if j != j0]
    base = rest[0]
    if not autocorrelation_spectrum(base).is_two_level():
        raise NotGMWDecomposable("column sequence is not 2-level")
    shifts = []
    for c in rest:
        t = find_shift(base, c)
        if t is None:
            raise NotGMWDecomposable("a column is not a shift of the base sequence")
        shifts.append(t)
    return j0, base, tuple(shifts)


def modify_long_sequence(
    u: BitSequence, k: int, modulus: Optional[int] = None
) -> tuple[BitSequence, GmwProvenance]:
    """Replace the zero column of a GMW-decomposable sequence by all ones."""
    j0, base, shifts = decompose_gmw(u, k)
    prov = GmwProvenance(k, modulus, j0, base, shifts)
    return prov.reconstruct(), prov


def build_gmw_modified(params: GmwParams | int) -> tuple[BitSequence, GmwProvenance]:
    if isinstance(params, int):
        params = GmwParams(params)
    k = params.k
    if params.user_supplied:
        prov = GmwProvenance(k, None, 0, params.base, tuple(params.shifts))
        return prov.reconstruct(), prov
    if params.long_modulus is None:
        field = GF2kField.default(2 * k)
    else:
        field = GF2kField(2 * k, params.long_modulus)
    u = trace_m_sequence(field)
    return modify_long_sequence(u, k, field.modulus)


def build_two_prime_modified(params: TwoPrimeParams | int) -> BitSequence:
    if isinstance(params, int):
        params = TwoPrimeParams(params)
    p, r = params.p, params.p + 2
    bits = []
    for i in range(p * r):
        if i % r == 0 or i % p == 0:
            bits.append(1)
        else:
            bits.append((1 - legendre(i, p) * legendre(i, r)) // 2)
    return BitSequence(bits)

