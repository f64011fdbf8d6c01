"""Splitting the Björck ambiguity function through the Legendre character.

A Björck sequence takes one value r on the quadratic residues, another s
on the nonresidues, and t at zero.  Writing R = (r+s)/2, S = (r-s)/2,
T = t - R, the sequence is R*ones + S*chi + T*delta, and expanding the
ambiguity form bilinearly gives, for m, n nonzero,

    A(u)[m, n] = |S|^2 * A(chi)[m, n] + (E1[m, n] + E2[m, n]) / p,

where E1 = R*conj(T) + conj(R)*T*zeta^(m*n) collects the ones/delta cross
terms and E2 collects the chi cross terms (its shape depends on p mod 4
through the sign of chi(-1) and the Gauss-sum factor eps).  Since
|A(chi)| <= 2/sqrt(p) and the error terms are O(1/sqrt(p)), the off-origin
ambiguity of the Björck sequence is below

    2/sqrt(p) + 4/p          for p = 1 (mod 4),
    2/sqrt(p) + 4/p^(3/2)    for p = 3 (mod 4).

This module reconstructs ambiguity values through that identity so the
closed-form route can be checked pointwise against the direct transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .expsums import _char_ambiguity_rows, _chi, _roots, char_ambiguity
from .numtheory import require_odd_prime
from .sequences import bjorck
from .transform import _ambiguity_block

__all__ = [
    "ErrorTerms",
    "MixCoefficients",
    "RealboundCheck",
    "error_terms",
    "mbound",
    "mix_coefficients",
    "realbound",
    "reconstruct_ambiguity",
    "reconstruction_residual",
]


@dataclass(frozen=True)
class MixCoefficients:
    """Björck sample values by residue class and their mixing combinations.

    r, s, t are the sequence values on the residues, the nonresidues, and
    at zero; R = (r+s)/2, S = (r-s)/2, T = t - R are the weights of the
    ones/chi/delta split.
    """

    r: complex
    s: complex
    t: complex
    R: complex
    S: complex
    T: complex


def mix_coefficients(p: int) -> MixCoefficients:
    """Read r, s, t off the constructed Björck sequence and derive R, S, T.

    Extracting from the actual sequence (rather than hard-coding the
    closed forms) keeps a single source of truth: any construction bug
    surfaces in the decomposition checks.
    """
    seq = bjorck(p)
    chi = _chi(p)
    r = complex(seq.values[1])  # chi(1) = 1 always
    s = complex(seq.values[int(np.flatnonzero(chi == -1)[0])])
    t = complex(seq.values[0])
    big_r = (r + s) / 2
    big_s = (r - s) / 2
    return MixCoefficients(r=r, s=s, t=t, R=big_r, S=big_s, T=t - big_r)


@dataclass(frozen=True)
class ErrorTerms:
    """The two correction terms of the character split at one (m, n)."""

    e1: complex
    e2: complex
    m: int
    n: int


def _validate_offsets(p: int, m: int, n: int) -> tuple[int, int]:
    m_, n_ = m % p, n % p
    if m_ == 0 or n_ == 0:
        raise ValueError(f"error terms require m, n nonzero mod p (got m={m}, n={n})")
    return m_, n_


def error_terms(coeffs: MixCoefficients, p: int, m: int, n: int) -> ErrorTerms:
    """Evaluate E1 and the residue-class-appropriate E2 at one (m, n) pair."""
    require_odd_prime(p)
    m_, n_ = _validate_offsets(p, m, n)
    chi = _chi(p)
    zeta = complex(_roots(p)[(m_ * n_) % p])
    big_r, big_s, big_t = coeffs.R, coeffs.S, coeffs.T
    e1 = big_r * big_t.conjugate() + big_r.conjugate() * big_t * zeta
    chi_m, chi_n = int(chi[m_]), int(chi[n_])
    sp = math.sqrt(p)
    if p % 4 == 1:
        e2 = (big_s * big_t.conjugate() + big_s.conjugate() * big_t * zeta) * chi_m + (
            big_r * big_s.conjugate() + big_r.conjugate() * big_s * zeta
        ) * chi_n * sp
    else:
        e2 = (big_s * big_t.conjugate() - big_s.conjugate() * big_t * zeta) * chi_m - (
            big_r * big_s.conjugate() + big_r.conjugate() * big_s * zeta
        ) * 1j * chi_n * sp
    return ErrorTerms(e1=e1, e2=e2, m=m_, n=n_)


def reconstruct_ambiguity(p: int, m: int, n: int) -> complex:
    """Björck ambiguity at (m, n) rebuilt from the character split.

    Returns |S|^2 * A(chi)[m, n] + (E1 + E2)/p; agrees with the direct
    transform of the Björck sequence to 1e-10.
    """
    coeffs = mix_coefficients(p)
    m_, n_ = _validate_offsets(p, m, n)
    terms = error_terms(coeffs, p, m_, n_)
    s_sq = abs(coeffs.S) ** 2
    return s_sq * char_ambiguity(p, m_, n_, "direct") + (terms.e1 + terms.e2) / p


def reconstruction_residual(p: int) -> float:
    """Worst pointwise gap between direct and reconstructed ambiguity.

    Evaluates both routes on the whole m, n != 0 grid (vectorized) and
    returns max |direct - reconstructed|; the identity holds to ~1e-13,
    so anything above 1e-10 indicates a defect.
    """
    require_odd_prime(p)
    seq = bjorck(p)
    ms = np.arange(1, p, dtype=np.int64)
    direct = _ambiguity_block(seq.values, ms)[:, 1:]
    char_rows = _char_ambiguity_rows(p, ms)[:, 1:]

    coeffs = mix_coefficients(p)
    chi = _chi(p)
    roots = _roots(p)
    ns = np.arange(1, p, dtype=np.int64)
    zeta = roots[np.outer(ms, ns) % p]
    chi_m = chi[1:].astype(np.float64)[:, None]
    chi_n = chi[1:].astype(np.float64)[None, :]
    big_r, big_s, big_t = coeffs.R, coeffs.S, coeffs.T
    sp = math.sqrt(p)
    e1 = big_r * big_t.conjugate() + big_r.conjugate() * big_t * zeta
    if p % 4 == 1:
        e2 = (big_s * big_t.conjugate() + big_s.conjugate() * big_t * zeta) * chi_m + (
            big_r * big_s.conjugate() + big_r.conjugate() * big_s * zeta
        ) * chi_n * sp
    else:
        e2 = (big_s * big_t.conjugate() - big_s.conjugate() * big_t * zeta) * chi_m - (
            big_r * big_s.conjugate() + big_r.conjugate() * big_s * zeta
        ) * 1j * chi_n * sp
    recon = (abs(big_s) ** 2) * char_rows + (e1 + e2) / p
    return float(np.max(np.abs(direct - recon)))


@dataclass(frozen=True)
class RealboundCheck:
    """Both sides of |z*X + (1-z^2)*Y| <= sqrt(X^2 + 4*Y^2) at one sample."""

    lhs: float
    rhs: float


def realbound(z: complex, x: float, y: float) -> RealboundCheck:
    """Evaluate the elementary unit-circle bound used in the 3 (mod 4) estimate.

    For |z| = 1 and real X, Y, the cross terms of |z*X + (1-z^2)*Y|^2
    cancel, leaving X^2 + |1-z^2|^2 * Y^2 <= X^2 + 4*Y^2.
    """
    if abs(abs(z) - 1.0) > 1e-12:
        raise ValueError(f"z must lie on the unit circle; |z| = {abs(z)!r}")
    lhs = abs(z * x + (1 - z * z) * y)
    rhs = math.sqrt(x * x + 4.0 * y * y)
    return RealboundCheck(lhs=lhs, rhs=rhs)


def mbound(p: int) -> float:
    """Theoretical off-origin ambiguity bound for the Björck sequence of length p.

    2/sqrt(p) + 4/p for p = 1 (mod 4); the sharper 2/sqrt(p) + 4/p^(3/2)
    for p = 3 (mod 4).
    """
    require_odd_prime(p)
    sp = math.sqrt(p)
    if p % 4 == 1:
        return 2.0 / sp + 4.0 / p
    return 2.0 / sp + 4.0 / (p * sp)
