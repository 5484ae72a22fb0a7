"""One period of a binary sequence, plus interleaving and periodic autocorrelation.

Bits are stored unpacked, one int per position, index 0 first.  Every
operation that reads past the end of the period wraps around.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BitSequence",
    "AutocorrSpectrum",
    "interleave",
    "deinterleave",
    "cyclic_shift",
    "autocorrelation",
    "autocorrelation_spectrum",
    "complement",
    "imbalance",
    "dumps",
    "loads",
    "to_json",
    "from_json",
    "read_sequence",
    "write_sequence",
]

# upper bound on gathered elements per spectrum block (keeps memory ~32 MB)
_BLOCK_ELEMS = 1 << 22


@dataclass(frozen=True)
class BitSequence:
    bits: tuple[int, ...]

    def __init__(self, bits: Iterable[int]):
        bits = tuple(int(b) for b in bits)
        if not bits:
            raise ValueError("a sequence needs period >= 1")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> BitSequence:
        if set(text) - {"0", "1"}:
            raise ValueError(f"invalid bit characters in {text[:20]!r}")
        return cls(int(c) for c in text)

    @classmethod
    def constant(cls, bit: int, period: int) -> BitSequence:
        return cls((bit,) * period)

    @property
    def period(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i % len(self.bits)]

    def __iter__(self):
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join("01"[b] for b in self.bits)

    def __repr__(self) -> str:
        s = str(self)
        if len(s) > 40:
            s = s[:37] + "..."
        return f"BitSequence({self.period}, {s!r})"

    @cached_property
    def signs(self) -> np.ndarray:
        """The +-1 view (-1)**s_i as a read-only int64 array."""
        arr = 1 - 2 * np.fromiter(self.bits, dtype=np.int64, count=len(self.bits))
        arr.setflags(write=False)
        return arr

    def is_constant(self) -> bool:
        return len(set(self.bits)) == 1


@dataclass(frozen=True)
class AutocorrSpectrum:
    period: int
    values: tuple[int, ...]

    def __getitem__(self, tau: int) -> int:
        return self.values[tau % self.period]

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.values).items()))

    def is_two_level(self) -> bool:
        return all(v == -1 for v in self.values[1:])


def interleave(columns: Sequence[BitSequence]) -> BitSequence:
    """Row-major concatenation of the N x T matrix whose j-th column is ``columns[j]``.

    The result u has period N*T and u[i*T + j] == columns[j][i].
    """
    if not columns:
        raise ValueError("interleave needs at least one column")
    n = columns[0].period
    if any(c.period != n for c in columns):
        raise ValueError("heterogeneous columns")
    return BitSequence(b for row in zip(*(c.bits for c in columns)) for b in row)


def deinterleave(u: BitSequence, T: int) -> list[BitSequence]:
    if T < 1 or u.period % T:
        raise ValueError(f"T={T} does not divide the period {u.period}")
    return [BitSequence(u.bits[j::T]) for j in range(T)]


def cyclic_shift(s: BitSequence, t: int) -> BitSequence:
    """Return o with o[i] = s[i + t] (t is reduced mod the period)."""
    t %= s.period
    return BitSequence(s.bits[t:] + s.bits[:t])


def autocorrelation(s: BitSequence, tau: int) -> int:
    x = s.signs
    return int(x @ np.roll(x, -(tau % s.period)))


def autocorrelation_spectrum(s: BitSequence) -> AutocorrSpectrum:
    """All N periodic autocorrelation values by direct summation.

    Rows of shifted copies are gathered in blocks so the work stays in numpy
    without materialising the full N x N circulant for large N.
    """
    n = s.period
    x = s.signs
    xx = np.concatenate([x, x])
    rows = max(1, _BLOCK_ELEMS // n)
    out = np.empty(n, dtype=np.int64)
    base = np.arange(n)
    for start in range(0, n, rows):
        taus = np.arange(start, min(start + rows, n))
        out[start : start + len(taus)] = xx[taus[:, None] + base[None, :]] @ x
    return AutocorrSpectrum(n, tuple(int(v) for v in out))


def complement(s: BitSequence) -> BitSequence:
    return BitSequence(1 - b for b in s.bits)


def imbalance(s: BitSequence) -> int:
    """Sum of (-1)**s_i over one period (zeros minus ones)."""
    return s.period - 2 * sum(s.bits)


# -- serialization ---------------------------------------------------------

def dumps(s: BitSequence) -> str:
    """Canonical ``.bits`` text: period on line 1, bits on line 2."""
    return f"{s.period}\n{s}\n"


def loads(text: str) -> BitSequence:
    lines = text.splitlines()
    if len(lines) < 2:
        raise ValueError("a .bits file needs two lines: period and bits")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ValueError(f"bad period line {lines[0]!r}") from None
    body = lines[1].strip()
    if len(body) != n:
        raise ValueError(f"length mismatch: header says {n}, found {len(body)} bits")
    if any(line.strip() for line in lines[2:]):
        raise ValueError("trailing content after the bit line")
    return BitSequence.from_string(body)


def to_json(s: BitSequence) -> str:
    return json.dumps({"n": s.period, "bits": str(s)})


def from_json(text: str) -> BitSequence:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "n" not in obj or "bits" not in obj:
        raise ValueError("JSON sequence needs keys 'n' and 'bits'")
    n, bits = obj["n"], obj["bits"]
    if not isinstance(n, int) or not isinstance(bits, str):
        raise ValueError("'n' must be an integer and 'bits' a string")
    if len(bits) != n:
        raise ValueError(f"length mismatch: n={n}, found {len(bits)} bits")
    return BitSequence.from_string(bits)


def read_sequence(path: str | Path) -> BitSequence:
    """Load a sequence file, accepting either the .bits or the JSON form."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return from_json(text)
    return loads(text)


def write_sequence(s: BitSequence, path: str | Path, fmt: str = "bits") -> None:
    text = to_json(s) + "\n" if fmt == "json" else dumps(s)
    Path(path).write_text(text, encoding="utf-8")
