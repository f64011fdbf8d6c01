"""Björck and quadratic-chirp CAZAC sequences.

A CAZAC sequence has constant amplitude (every sample on the unit circle)
and zero autocorrelation (every nontrivial cyclic shift is orthogonal to
the original).  Two prime-length families are built here:

* Björck sequences, driven by the Legendre symbol.  For p = 1 (mod 4) the
  samples are exp(i * theta * chi(k)) with theta = arccos(1/(1+sqrt(p)));
  for p = 3 (mod 4) the quadratic nonresidues get the phase
  phi = arccos((1-p)/(1+p)) and everything else stays at 1.
* Quadratic chirps u[k] = exp(2*pi*i*(r*k^2 + s*k)/p), the classical
  family; requires that p does not divide r.

Both families are CAZAC and bi-unimodular (their DFTs have constant
modulus sqrt(p)); verification helpers check those properties numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numtheory import PrimeContext, ResidueClass, require_odd_prime
from .transform import dft

__all__ = [
    "BjorckAngles",
    "CazacReport",
    "DegenerateChirpError",
    "UnimodularSequence",
    "autocorrelation",
    "bjorck",
    "bjorck_angles",
    "chirp",
    "sequence_from_text",
    "sequence_to_text",
    "verify_biunimodular",
    "verify_cazac",
]

# Construction-time amplitude check; downstream ops assume unit modulus.
_CA_TOL = 1e-12

# Default verification tolerance: p-term averaged sums of unit vectors
# carry roughly p ulps of error, so 1e-9 is safe through p ~ 1e5.
DEFAULT_TOL = 1e-9


class DegenerateChirpError(ValueError):
    """Raised when the quadratic coefficient of a chirp vanishes mod p."""


@dataclass(frozen=True)
class UnimodularSequence:
    """A length-p vector of unit-modulus samples with a provenance label.

    The constructor validates the amplitude condition up front (every
    downstream operation assumes it) and freezes the sample array, so
    instances are immutable and safe to share across workers.
    """

    p: int
    values: np.ndarray
    label: str = "custom"

    def __post_init__(self):
        require_odd_prime(self.p)
        values = np.ascontiguousarray(self.values, dtype=np.complex128)
        if values.shape != (self.p,):
            raise ValueError(f"expected {self.p} samples, got shape {values.shape}")
        dev = float(np.max(np.abs(np.abs(values) - 1.0)))
        if dev > _CA_TOL:
            raise ValueError(f"samples deviate from unit modulus by {dev:.3e}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.p


@dataclass(frozen=True)
class BjorckAngles:
    """The two Björck phase angles for a prime, with their unit-circle values.

    theta applies in the p = 1 (mod 4) construction and phi in the
    p = 3 (mod 4) one; eta = exp(i*theta) and xi = exp(i*phi) are the
    actual sample values used besides 1.
    """

    theta: float
    phi: float
    eta: complex
    xi: complex


def bjorck_angles(p: int) -> BjorckAngles:
    """Compute both phase angles for p; each arccos is evaluated exactly once."""
    require_odd_prime(p)
    sp = math.sqrt(p)
    theta = math.acos(1.0 / (1.0 + sp))
    phi = math.acos((1.0 - p) / (1.0 + p))
    eta = complex(math.cos(theta), math.sin(theta))
    xi = complex(math.cos(phi), math.sin(phi))
    return BjorckAngles(theta=theta, phi=phi, eta=eta, xi=xi)


def bjorck(p: int) -> UnimodularSequence:
    """The Björck sequence of odd prime length p.

    p = 1 (mod 4): u[k] = exp(i * theta * chi(k)), i.e. exactly the three
    values {1, eta, conj(eta)} selected by the Legendre symbol.
    p = 3 (mod 4): u[k] = xi on the quadratic nonresidues and 1 elsewhere.
    """
    ctx = PrimeContext.create(p)
    ang = bjorck_angles(p)
    if ctx.residue_class is ResidueClass.ONE_MOD_4:
        lut = np.array([ang.eta.conjugate(), 1.0 + 0.0j, ang.eta])
    else:
        lut = np.array([ang.xi, 1.0 + 0.0j, 1.0 + 0.0j])
    values = lut[ctx.legendre_table.astype(np.int64) + 1]
    return UnimodularSequence(p=p, values=values, label="bjorck")


def chirp(p: int, r: int, s: int) -> UnimodularSequence:
    """Quadratic chirp u[k] = exp(2*pi*i*(r*k^2 + s*k)/p) of odd prime length.

    Exponents are reduced mod p in integer arithmetic before the single
    complex exponential, so phases are exact for any r, s.
    """
    require_odd_prime(p)
    r_, s_ = r % p, s % p
    if r_ == 0:
        raise DegenerateChirpError(f"p={p} divides the quadratic coefficient r={r}")
    k = np.arange(p, dtype=np.int64)
    expo = (r_ * k * k + s_ * k) % p
    values = np.exp(2j * np.pi * expo / p)
    return UnimodularSequence(p=p, values=values, label=f"chirp({r_},{s_})")


def autocorrelation(u: UnimodularSequence) -> np.ndarray:
    """Cyclic autocorrelation C[m] = (1/p) sum_k u[m+k] conj(u[k]) for all m.

    Evaluated through the spectrum: C is the inverse DFT of |dft(u)|^2 / p,
    which costs two transforms instead of p quadratic-time shifts.
    """
    p = u.p
    power = np.abs(dft(u.values)) ** 2
    # inverse DFT via conjugation; power is real so one conjugate suffices
    return np.conj(dft(power)) / (p * p)


@dataclass(frozen=True)
class CazacReport:
    """Outcome of a CAZAC check: amplitude flag, autocorrelation flag, worst deviation."""

    ca_ok: bool
    zac_ok: bool
    max_violation: float


def verify_cazac(u: UnimodularSequence, tol: float = DEFAULT_TOL) -> CazacReport:
    """Check constant amplitude and zero autocorrelation to the given tolerance."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    ca_dev = float(np.max(np.abs(np.abs(u.values) - 1.0)))
    c = autocorrelation(u)
    zac_dev = float(np.max(np.abs(c[1:]))) if u.p > 1 else 0.0
    return CazacReport(
        ca_ok=ca_dev <= tol,
        zac_ok=zac_dev <= tol,
        max_violation=max(ca_dev, zac_dev),
    )


def verify_biunimodular(u: UnimodularSequence, tol: float = DEFAULT_TOL) -> bool:
    """True iff the DFT of u has constant modulus sqrt(p) to the given tolerance."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    dev = float(np.max(np.abs(np.abs(dft(u.values)) - math.sqrt(u.p))))
    return dev <= tol


def sequence_to_text(u: UnimodularSequence) -> str:
    """Serialize one sample per line as "re,im" with 17 significant digits.

    17 digits round-trip IEEE doubles exactly, so parse(serialize(u))
    reproduces the original samples bit for bit.
    """
    return "\n".join(f"{z.real:.17g},{z.imag:.17g}" for z in u.values) + "\n"


def sequence_from_text(text: str, label: str = "custom") -> UnimodularSequence:
    """Parse the one-sample-per-line "re,im" format back into a sequence."""
    samples = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            re_s, im_s = line.split(",")
            samples.append(complex(float(re_s), float(im_s)))
        except ValueError as exc:
            raise ValueError(f"malformed sample on line {lineno}: {line!r}") from exc
    return UnimodularSequence(p=len(samples), values=np.array(samples), label=label)
