"""Prime-length DFTs and the discrete periodic ambiguity function.

Prime lengths rule out radix-2 FFTs, so the fast path is Bluestein's
chirp-z algorithm: the length-N DFT is rewritten, via kn = (k^2 + n^2 -
(n-k)^2)/2, as a cyclic convolution that can be zero-padded to a power of
two and evaluated with ordinary FFTs.  A naive O(N^2) summation with
compensated (Kahan) accumulation is kept both as the small-N fast path and
as an independent correctness oracle for the Bluestein path.

The ambiguity function of a length-p sequence u,

    A[m, n] = (1/p) * sum_k u[m+k] * conj(u[k]) * exp(-2*pi*i*k*n/p),

is evaluated row by row: the row at shift m is the normalized DFT of the
lag product k -> u[m+k] * conj(u[k]).  Full scans stream blocks of rows so
the p x p table is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from .sequences import UnimodularSequence

__all__ = [
    "AmbiguityMax",
    "AmbiguityRow",
    "TableTooLargeError",
    "ambiguity_max",
    "ambiguity_row",
    "ambiguity_table",
    "ambiguity_table_csv",
    "dft",
    "dft_naive",
]

# Below this length the naive path wins (and doubles as the oracle).
_NAIVE_CUTOFF = 64

# Memory knob: complex elements per streamed block of ambiguity rows.
_BLOCK_ELEMS = 1 << 21

# Ambiguity tables above this size must be requested explicitly.
DEFAULT_TABLE_CAP = 2048


class TableTooLargeError(ValueError):
    """Raised when a full p x p ambiguity table would exceed the configured cap."""


def dft_naive(v: np.ndarray) -> np.ndarray:
    """Direct O(N^2) DFT: out[n] = sum_k v[k] exp(-2*pi*i*k*n/N).

    Accepts batches along leading axes (the transform runs along the last
    axis).  Summation over k is Kahan-compensated so this path can serve as
    the reference the fast path is checked against.
    """
    v = np.asarray(v, dtype=np.complex128)
    n = v.shape[-1]
    idx = np.arange(n, dtype=np.int64)
    roots = np.exp(-2j * np.pi * idx / n)
    total = np.zeros(v.shape, dtype=np.complex128)
    comp = np.zeros(v.shape, dtype=np.complex128)
    for k in range(n):
        term = v[..., k, None] * roots[(k * idx) % n]
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


class BluesteinPlan:
    """Precomputed state for chirp-z DFTs of one fixed length.

    The chirp exponents are reduced mod 2N in exact integer arithmetic
    before the single trig evaluation, so phases stay accurate even when
    k^2 is large.  The convolution kernel's FFT is computed once and reused
    for every transform of this length (one plan per prime during scans).
    """

    def __init__(self, n: int):
        self.n = n
        k = np.arange(n, dtype=np.int64)
        self.chirp = np.exp(-1j * np.pi * ((k * k) % (2 * n)) / n)
        m = 1
        while m < 2 * n - 1:
            m <<= 1
        self.m = m
        kernel = np.zeros(m, dtype=np.complex128)
        kernel[:n] = np.conj(self.chirp)
        if n > 1:
            kernel[m - n + 1 :] = np.conj(self.chirp[1:][::-1])
        self.kernel_fft = np.fft.fft(kernel)

    def transform(self, v: np.ndarray) -> np.ndarray:
        """DFT along the last axis of v (batched)."""
        v = np.asarray(v, dtype=np.complex128)
        padded = np.zeros(v.shape[:-1] + (self.m,), dtype=np.complex128)
        padded[..., : self.n] = v * self.chirp
        conv = np.fft.ifft(np.fft.fft(padded, axis=-1) * self.kernel_fft, axis=-1)
        return conv[..., : self.n] * self.chirp


@lru_cache(maxsize=8)
def _plan(n: int) -> BluesteinPlan:
    return BluesteinPlan(n)


def dft(v: np.ndarray) -> np.ndarray:
    """DFT of a 1-d complex vector: out[n] = sum_k v[k] exp(-2*pi*i*k*n/N).

    Dispatches to the naive path for N < 64 and to Bluestein's chirp-z
    algorithm otherwise; the two agree to better than 1e-9 relative.
    """
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1:
        raise ValueError("dft expects a 1-d vector")
    if v.shape[0] < _NAIVE_CUTOFF:
        return dft_naive(v)
    return _plan(v.shape[0]).transform(v)


@dataclass(frozen=True)
class AmbiguityRow:
    """One shift-m row of the ambiguity function; values[n] = A[m, n]."""

    m: int
    values: np.ndarray


@dataclass(frozen=True)
class AmbiguityMax:
    """Maximum |A[m, n]| away from the origin, with its (m, n) location.

    Ties are broken toward the smallest m, then the smallest n, so results
    are reproducible byte for byte.
    """

    max_abs: float
    argmax: tuple[int, int]


def _ambiguity_block(values: np.ndarray, ms: np.ndarray) -> np.ndarray:
    """Rows A[m, :] of the ambiguity function of an arbitrary length-p vector."""
    p = values.shape[0]
    idx = (ms[:, None] + np.arange(p, dtype=np.int64)[None, :]) % p
    lag = values[idx] * np.conj(values)[None, :]
    if p < _NAIVE_CUTOFF:
        rows = dft_naive(lag)
    else:
        rows = _plan(p).transform(lag)
    return rows / p


def _block_rows(p: int) -> int:
    width = _plan(p).m if p >= _NAIVE_CUTOFF else p
    return max(1, _BLOCK_ELEMS // width)


def ambiguity_row(u: "UnimodularSequence", m: int) -> AmbiguityRow:
    """The ambiguity row at time shift m: (1/p) times the DFT of the lag product."""
    p = u.p
    if not 0 <= m < p:
        raise ValueError(f"shift m={m} outside [0, {p})")
    row = _ambiguity_block(u.values, np.array([m], dtype=np.int64))[0]
    return AmbiguityRow(m=m, values=row)


def ambiguity_max(u: "UnimodularSequence") -> AmbiguityMax:
    """Largest |A[m, n]| over all (m, n) != (0, 0), streamed in row blocks.

    Memory stays bounded for any p: rows are produced in blocks and reduced
    immediately.  The reduction is order-independent by construction
    (strictly-greater updates over ascending m), so concurrent or chunked
    evaluation cannot change the answer.
    """
    values = u.values
    p = u.p
    block = _block_rows(p)
    best_abs = -1.0
    best_m = 0
    best_n = 0
    for start in range(0, p, block):
        ms = np.arange(start, min(start + block, p), dtype=np.int64)
        mags = np.abs(_ambiguity_block(values, ms))
        if start == 0:
            mags[0, 0] = -np.inf
        flat = int(np.argmax(mags))
        i, n = divmod(flat, p)
        v = float(mags[i, n])
        if v > best_abs:
            best_abs = v
            best_m = int(ms[i])
            best_n = n
    return AmbiguityMax(max_abs=best_abs, argmax=(best_m, best_n))


def ambiguity_table(u: "UnimodularSequence", cap: int = DEFAULT_TABLE_CAP) -> np.ndarray:
    """Full p x p ambiguity table; entry (m, n) = A[m, n].

    Kept behind a size cap because the table is O(p^2) memory; scans that
    only need the maximum should use ambiguity_max instead.
    """
    p = u.p
    if p > cap:
        raise TableTooLargeError(f"p={p} exceeds the table cap {cap}; raise cap= explicitly")
    out = np.empty((p, p), dtype=np.complex128)
    block = _block_rows(p)
    for start in range(0, p, block):
        ms = np.arange(start, min(start + block, p), dtype=np.int64)
        out[start : start + len(ms)] = _ambiguity_block(u.values, ms)
    return out


def ambiguity_table_csv(table: np.ndarray) -> str:
    """Render an ambiguity table as CSV: m,n,re,im,abs rows in row-major order."""
    lines = ["m,n,re,im,abs"]
    p = table.shape[0]
    for m in range(p):
        row = table[m]
        for n in range(p):
            z = row[n]
            lines.append(f"{m},{n},{z.real:.17g},{z.imag:.17g},{abs(z):.17g}")
    return "\n".join(lines) + "\n"
