"""Binary extension fields GF(2^k) in a polynomial basis.

Elements are ints whose bit i is the coefficient of x^i.  The modulus is a
degree-k polynomial in the same encoding (bit k set), e.g. 0b1011 = x^3+x+1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .primes import prime_factors

# Least primitive polynomial (by integer value) of each degree.
PRIMITIVE_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1002D,
}


def poly_mulmod(a: int, b: int, modulus: int, degree: int) -> int:
    r = 0
    top = 1 << degree
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return r


def poly_powmod(a: int, e: int, modulus: int, degree: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = poly_mulmod(r, a, modulus, degree)
        a = poly_mulmod(a, a, modulus, degree)
        e >>= 1
    return r


def is_primitive(modulus: int, degree: int) -> bool:
    """True iff x has multiplicative order exactly 2^degree - 1 modulo ``modulus``.

    Such a polynomial is necessarily irreducible as well.
    """
    if modulus.bit_length() != degree + 1 or not modulus & 1:
        return False
    order = (1 << degree) - 1
    if poly_powmod(0b10, order, modulus, degree) != 1:
        return False
    return all(poly_powmod(0b10, order // r, modulus, degree) != 1 for r in prime_factors(order))


@dataclass(frozen=True)
class GF2kField:
    degree: int
    modulus: int

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError("field degree must be at least 2")
        if not is_primitive(self.modulus, self.degree):
            raise ValueError(
                f"modulus {self.modulus:#x} is not a primitive polynomial of degree {self.degree}"
            )

    @classmethod
    def default(cls, degree: int) -> GF2kField:
        try:
            return cls(degree, PRIMITIVE_POLYS[degree])
        except KeyError:
            raise ValueError(f"no tabulated primitive polynomial of degree {degree}") from None

    @property
    def order(self) -> int:
        return 1 << self.degree

    @property
    def generator(self) -> int:
        """The residue class of x."""
        return 0b10

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return poly_mulmod(a, b, self.modulus, self.degree)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            e %= self.order - 1
        return poly_powmod(a, e, self.modulus, self.degree)

    def trace(self, z: int) -> int:
        """Absolute trace z + z^2 + z^4 + ... + z^(2^(k-1)), an element of GF(2)."""
        t = 0
        for _ in range(self.degree):
            t ^= z
            z = self.mul(z, z)
        if t not in (0, 1):
            raise ArithmeticError(f"trace left the prime field: {t:#x}")
        return t
