"""Shared brute-force oracles for the test suite.

These are deliberately plain-Python / cmath implementations, independent
of the library's vectorized and FFT-based paths, so they can serve as
reference values for everything the fast code computes.
"""

import cmath

import numpy as np


def sieve_primes(n):
    """All primes <= n by the classic sieve (oracle for the primality test)."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


def odd_primes_up_to(n):
    return [p for p in sieve_primes(n) if p >= 3]


def brute_dft(values):
    """Direct definition: out[n] = sum_k v[k] exp(-2*pi*i*k*n/N)."""
    n_len = len(values)
    out = []
    for n in range(n_len):
        acc = 0j
        for k in range(n_len):
            acc += complex(values[k]) * cmath.exp(-2j * cmath.pi * k * n / n_len)
        out.append(acc)
    return np.array(out)


def brute_ambiguity(values, m, n):
    """Direct definition: (1/p) sum_k v[m+k] conj(v[k]) exp(-2*pi*i*k*n/p)."""
    p = len(values)
    acc = 0j
    for k in range(p):
        acc += (
            complex(values[(m + k) % p])
            * complex(values[k]).conjugate()
            * cmath.exp(-2j * cmath.pi * k * n / p)
        )
    return acc / p


def brute_autocorrelation(values, m):
    """Direct definition: (1/p) sum_k v[m+k] conj(v[k])."""
    p = len(values)
    acc = 0j
    for k in range(p):
        acc += complex(values[(m + k) % p]) * complex(values[k]).conjugate()
    return acc / p


def brute_kloosterman(a, b, p):
    """Direct definition over (Z/pZ)*, inverses by pow(x, p-2, p)."""
    acc = 0j
    for x in range(1, p):
        inv = pow(x, p - 2, p)
        acc += cmath.exp(2j * cmath.pi * ((a * x + b * inv) % p) / p)
    return acc


def brute_cross_ambiguity(f_values, g_values, m, n):
    """(1/p) sum_k F[k+m] conj(G[k]) exp(-2*pi*i*k*n/p) for arbitrary F, G."""
    p = len(f_values)
    acc = 0j
    for k in range(p):
        acc += (
            complex(f_values[(m + k) % p])
            * complex(g_values[k]).conjugate()
            * cmath.exp(-2j * cmath.pi * k * n / p)
        )
    return acc / p
