"""Nonnegative-integer substrate: factorization, divisors, grading.

Plain Python ints are the value type (they are already arbitrary precision);
this module only adds the multiplicative bookkeeping every other layer leans
on.  Everything multiplicative is indexed from 1, so n = 0 is rejected there.
"""

from __future__ import annotations

import math
from functools import cache

__all__ = [
    "factorize",
    "divisors",
    "omega_grade",
    "gcd",
    "is_prime",
    "moebius",
    "moebius_sieve",
]


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@cache
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p1, r1), (p2, r2), ...), p1 < p2 < ...

    factorize(1) is the empty tuple.  Deterministic trial division; the cache
    makes repeated lookups (ubiquitous in the convolution code) cheap.
    """
    _check_positive(n)
    out: list[tuple[int, int]] = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            r = 0
            while m % p == 0:
                m //= p
                r += 1
            out.append((p, r))
    # wheel over 6k+-1
    p = 5
    while p * p <= m:
        for q in (p, p + 2):
            if m % q == 0:
                r = 0
                while m % q == 0:
                    m //= q
                    r += 1
                out.append((q, r))
        p += 6
    if m > 1:
        out.append((m, 1))
    out.sort()
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


@cache
def divisors(n: int) -> tuple[int, ...]:
    """All divisors of n >= 1 in increasing order."""
    _check_positive(n)
    divs = [1]
    for p, r in factorize(n):
        divs = [d * p**k for d in divs for k in range(r + 1)]
    return tuple(sorted(divs))


def omega_grade(n: int) -> int:
    """Number of prime factors of n counted with multiplicity; 1 has grade 0."""
    _check_positive(n)
    return sum(r for _, r in factorize(n))


def gcd(n: int, m: int) -> int:
    return math.gcd(n, m)


def moebius(n: int) -> int:
    """1 on 1, (-1)^k on a product of k distinct primes, 0 on non-squarefree n."""
    _check_positive(n)
    fac = factorize(n)
    if any(r > 1 for _, r in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def moebius_sieve(limit: int) -> list[int]:
    """mu(1..limit) as a list indexed by n (index 0 unused).

    Linear sieve; used by the bulk inversion checks where per-value
    factorization would dominate the runtime.
    """
    mu = [0] * (limit + 1)
    if limit >= 1:
        mu[1] = 1
    primes: list[int] = []
    spf = [0] * (limit + 1)
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if p > spf[i] or i * p > limit:
                break
            spf[i * p] = p
            mu[i * p] = 0 if i % p == 0 else -mu[i]
    return mu
