"""Smallest-prime-factor sieve and prime enumeration.

The SPF table is the workhorse behind multiplicative tabulation: it lets
every n <= N be split as n = p^k * m with p = spf(n), p not dividing m,
in amortized O(1). The table is built once per limit with numpy and
cached; repeated requests at or below the cached limit are free.
"""

from __future__ import annotations

import math
import threading

import numpy as np

_lock = threading.Lock()
_spf_list: list[int] = []


def smallest_prime_factor_table(limit: int) -> list[int]:
    """Return a list t with t[n] = smallest prime factor of n for 2 <= n <= limit.

    t[0] = 0 and t[1] = 1 by convention. The returned list may be longer
    than limit + 1 (it is a shared cache); never index past limit.
    """
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    global _spf_list
    with _lock:
        if len(_spf_list) >= limit + 1:
            return _spf_list
        spf = np.zeros(limit + 1, dtype=np.int64)
        for p in range(2, math.isqrt(limit) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        remaining = np.nonzero(spf == 0)[0]
        spf[remaining] = remaining  # untouched entries are primes (and 0, 1)
        if limit >= 1:
            spf[1] = 1
        _spf_list = spf.tolist()
        return _spf_list


def primes_up_to(limit: int) -> list[int]:
    """All primes p <= limit, ascending."""
    if limit < 2:
        return []
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].tolist()


def factorize(n: int, spf: list[int] | None = None) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, k), ...] with p ascending."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    if spf is None:
        spf = smallest_prime_factor_table(n)
    out: list[tuple[int, int]] = []
    while n > 1:
        p = spf[n]
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        out.append((p, k))
    return out


def split_smallest_prime_power(n: int, spf: list[int]) -> tuple[int, int, int]:
    """Split n >= 2 as (p, k, m) with p = spf(n), p^k || n and m = n / p^k."""
    p = spf[n]
    m = n // p
    k = 1
    while m % p == 0:
        m //= p
        k += 1
    return p, k, m
