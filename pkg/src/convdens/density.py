"""Asymptotic-density computations, exact and empirical.

Exact densities come from inclusion-exclusion over residue sieves
(Chinese-Remainder residue counting modulo the lcm of each subset of
moduli) and are returned as Fractions. Empirical densities are counts
at checkpoints; infinite sieve families are handled by truncation with
an explicit tail certificate rather than by any silent assumption.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Collection, Iterable, NamedTuple, Sequence

from .core import DEFAULT_ZERO_THRESHOLD
from .errors import ComplexityError, DegenerateConstant, RangeError, SpecError
from .multiplicative import (
    TAIL_BOUNDED,
    TAIL_DIVERGENT,
    TAIL_NONE,
    MultiplicativeSpec,
)
from .sieve import primes_up_to

#: 6 / pi^2, fixed to double precision; the single source for this constant.
SIX_OVER_PI_SQUARED = 0.6079271018540267

#: Inclusion-exclusion is exponential in the entry count; hard default cap.
DEFAULT_MAX_ENTRIES = 20

#: Residue counting is linear in the lcm of a subset's moduli; default cap.
DEFAULT_LCM_CAP = 10**9


# ---------------------------------------------------------------------------
# Residue sieve specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ResidueSieveSpec:
    """A family of (modulus, forbidden residues) constraints.

    `entries` lists the explicitly retained constraints. For truncated
    infinite families, `tail_constants` gives a per-entry constant c_b
    bounding the density of each constraint's hit set, and
    `tail_sum_beyond` bounds the sum of c_b over every constraint of the
    family that is not listed at all.
    """

    entries: tuple[tuple[int, frozenset[int]], ...]
    tail_constants: tuple[Fraction | float, ...] | None = None
    tail_sum_beyond: Fraction | float = 0

    def __post_init__(self):
        normalized = []
        for item in self.entries:
            if len(item) != 2:
                raise SpecError(f"entry {item!r} is not a (modulus, residues) pair")
            b, omega = item
            if b < 1:
                raise SpecError(f"modulus {b} must be >= 1")
            omega = frozenset(omega)
            if any(not 0 <= r < b for r in omega):
                raise SpecError(f"residues {sorted(omega)} outside range(0, {b})")
            normalized.append((int(b), omega))
        object.__setattr__(self, "entries", tuple(normalized))
        if self.tail_constants is not None:
            tc = tuple(self.tail_constants)
            if len(tc) != len(self.entries):
                raise SpecError("tail_constants must align with entries")
            if any(c <= 0 for c in tc):
                raise SpecError("tail constants must be positive")
            object.__setattr__(self, "tail_constants", tc)
        if self.tail_sum_beyond < 0:
            raise SpecError("tail_sum_beyond must be nonnegative")

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[tuple[int, Iterable[int]]],
        tail_constants: Iterable[Fraction | float] | None = None,
        tail_sum_beyond: Fraction | float = 0,
    ) -> "ResidueSieveSpec":
        entries = tuple((b, frozenset(omega)) for b, omega in pairs)
        tc = None if tail_constants is None else tuple(tail_constants)
        return cls(entries, tc, tail_sum_beyond)


class TruncatedDensity(NamedTuple):
    """Exact density of a truncated sieve plus the certified tail width.

    The full family's density lies in [density - tail_bound, density].
    """

    density: Fraction
    tail_bound: Fraction | float


# ---------------------------------------------------------------------------
# Empirical densities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DensityEstimate:
    """An empirical density with its checkpoint trail.

    `value` is count/x at the final checkpoint (an exact ratio of exact
    counts). `zero_threshold` records the float-mode support threshold
    that produced the underlying set, when there was one.
    """

    value: Fraction | float
    x: int
    checkpoints: tuple[tuple[int, int], ...]
    exact: bool
    zero_threshold: float | None = None

    def __post_init__(self):
        prev = 0
        for cx, count in self.checkpoints:
            if cx <= prev:
                raise SpecError("checkpoints must be strictly increasing")
            if count > cx:
                raise SpecError(f"count {count} exceeds checkpoint {cx}")
            prev = cx

    def series(self) -> tuple[tuple[int, float], ...]:
        """(x, count/x) pairs as floats, for plots and reports."""
        return tuple((cx, count / cx) for cx, count in self.checkpoints)


def empirical_density(
    indicator: Callable[[int], bool] | Collection[int],
    x: int,
    checkpoints: Sequence[int] | None = None,
    *,
    zero_threshold: float | None = None,
) -> DensityEstimate:
    """Count members of a set among [1, x], with intermediate checkpoints.

    `indicator` is either a predicate on integers or a collection of
    integers (extra members beyond x are ignored).
    """
    if x < 1:
        raise RangeError("x must be at least 1")
    cps = _checked_checkpoints(checkpoints, x)
    points: list[tuple[int, int]] = []
    if callable(indicator):
        count = 0
        it = iter(cps)
        nxt = next(it)
        for n in range(1, cps[-1] + 1):
            if indicator(n):
                count += 1
            if n == nxt:
                points.append((n, count))
                nxt = next(it, None)
    else:
        members = sorted(set(indicator))
        for cx in cps:
            points.append((cx, bisect_right(members, cx)))
    final_x, final_count = points[-1]
    return DensityEstimate(
        value=Fraction(final_count, final_x),
        x=final_x,
        checkpoints=tuple(points),
        exact=False,
        zero_threshold=zero_threshold,
    )


def _checked_checkpoints(checkpoints: Sequence[int] | None, x: int) -> list[int]:
    if checkpoints is None:
        return [x]
    cps = [int(c) for c in checkpoints]
    if not cps:
        return [x]
    if any(c2 <= c1 for c1, c2 in zip(cps, cps[1:])):
        raise RangeError("checkpoints must be strictly increasing")
    if cps[0] < 1:
        raise RangeError("checkpoints must be positive")
    if cps[-1] > x:
        raise RangeError(f"checkpoint {cps[-1]} exceeds evaluation limit {x}")
    return cps


def decade_checkpoints(x: int, start: int = 1000) -> list[int]:
    """start, 10*start, ... up to x, always ending exactly at x."""
    cps = []
    c = start
    while c < x:
        cps.append(c)
        c *= 10
    cps.append(x)
    return cps


# ---------------------------------------------------------------------------
# Exact sieve densities by inclusion-exclusion
# ---------------------------------------------------------------------------

def _residue_class_count(
    entries: Sequence[tuple[int, frozenset[int]]],
    lcm_cap: int,
) -> tuple[int, int]:
    """Count residues r modulo lcm(moduli) with r mod b in omega_b for all entries.

    Residues are merged constraint by constraint: survivors modulo the
    running lcm are lifted to the next lcm and filtered, so sparse
    constraint sets never enumerate the full residue ring.
    """
    modulus = 1
    residues = [0]
    for b, omega in sorted(entries):
        new_modulus = math.lcm(modulus, b)
        if new_modulus > lcm_cap:
            raise ComplexityError(
                f"lcm {new_modulus} exceeds cap {lcm_cap}; refusing to count residues"
            )
        lifts = new_modulus // modulus
        residues = [
            r + i * modulus
            for r in residues
            for i in range(lifts)
            if (r + i * modulus) % b in omega
        ]
        modulus = new_modulus
        if not residues:
            return modulus, 0
    return modulus, len(residues)


def sieved_density_exact(
    spec: ResidueSieveSpec,
    *,
    max_entries: int = DEFAULT_MAX_ENTRIES,
    lcm_cap: int = DEFAULT_LCM_CAP,
) -> Fraction:
    """Exact density of {n : n mod b not in omega_b for every entry}.

    Inclusion-exclusion over all subsets of entries; exponential in the
    entry count, hence the cap.
    """
    entries = spec.entries
    k = len(entries)
    if k > max_entries:
        raise ComplexityError(f"{k} entries exceed the inclusion-exclusion cap {max_entries}")
    total = Fraction(1)
    for mask in range(1, 1 << k):
        subset = [entries[i] for i in range(k) if mask >> i & 1]
        modulus, count = _residue_class_count(subset, lcm_cap)
        if count:
            sign = -1 if bin(mask).count("1") % 2 else 1
            total += sign * Fraction(count, modulus)
    return total


def sieved_density_truncated(
    spec: ResidueSieveSpec,
    k: int,
    *,
    max_entries: int = DEFAULT_MAX_ENTRIES,
    lcm_cap: int = DEFAULT_LCM_CAP,
) -> TruncatedDensity:
    """Exact density of the first k constraints plus a tail certificate.

    The tail bound is the declared sum of c_b over every omitted
    constraint; the full family's density lies within
    [density - tail_bound, density].
    """
    if not 0 <= k <= len(spec.entries):
        raise SpecError(f"k={k} outside [0, {len(spec.entries)}]")
    omitted = len(spec.entries) - k
    if omitted and spec.tail_constants is None:
        raise SpecError("truncation needs tail_constants for the omitted entries")
    head = ResidueSieveSpec(spec.entries[:k])
    density = sieved_density_exact(head, max_entries=max_entries, lcm_cap=lcm_cap)
    tail: Fraction | float = spec.tail_sum_beyond
    if omitted:
        tail = tail + sum(spec.tail_constants[k:])
    return TruncatedDensity(density, tail)


def multiples_density(
    multiples_of: Collection[int],
    *,
    max_entries: int = DEFAULT_MAX_ENTRIES,
) -> Fraction:
    """Exact density of {a*n : a in the set, n >= 1} for a finite set.

    Inclusion-exclusion over subsets via 1/lcm; the complement of the
    residue sieve forbidding 0 mod a for each a.
    """
    values = sorted(set(int(a) for a in multiples_of))
    if any(a < 1 for a in values):
        raise SpecError("set members must be positive integers")
    k = len(values)
    if k == 0:
        return Fraction(0)
    if k > max_entries:
        raise ComplexityError(f"{k} elements exceed the inclusion-exclusion cap {max_entries}")
    total = Fraction(0)
    for mask in range(1, 1 << k):
        subset_lcm = 1
        for i in range(k):
            if mask >> i & 1:
                subset_lcm = math.lcm(subset_lcm, values[i])
        sign = 1 if bin(mask).count("1") % 2 else -1
        total += sign * Fraction(1, subset_lcm)
    return total


# ---------------------------------------------------------------------------
# Euler products over primes with tail certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EulerProductResult:
    """A truncated product over primes with a certified remainder.

    `tail_log_bound` bounds the absolute log of everything omitted
    beyond `prime_cutoff`; `value_gap_bound` converts that into a bound
    on the value change if the omitted factors were restored.
    """

    value: float
    prime_cutoff: int
    tail_log_bound: float
    factors_omitted_reason: str

    @property
    def value_gap_bound(self) -> float:
        return self.value * math.expm1(self.tail_log_bound)


#: Per-prime geometric series cutoff: stop when the remaining tail is
#: below this fraction of the partial factor (double-precision floor).
_SERIES_FLOOR = 1e-15


def _supported_reciprocal_series(
    spec: MultiplicativeSpec, p: int, zero_threshold: float
) -> float:
    """sum of p^-k over k >= 0 with the rule nonzero at p^k (k=0 always counts)."""
    s = 1.0
    pk = 1.0
    k = 0
    while True:
        k += 1
        pk /= p
        if pk * p / (p - 1) < _SERIES_FLOOR * s:
            return s
        if not spec.rule_is_zero(p, k, zero_threshold):
            s += pk


def _supported_prime_log_tail(prime_cutoff: int) -> float:
    """Bound on sum over primes p > cutoff of |log(1 - c/p^2)|, c in [0, 1].

    Each term is at most 1/(p^2 - 1). Primes up to 30x the cutoff are
    sieved explicitly; beyond that the sum over all integers bounds the
    remainder: sum over n > M of 1/(n^2 - 1) = (1/M + 1/(M+1)) / 2.
    """
    hi = 30 * prime_cutoff
    total = 0.0
    for p in primes_up_to(hi):
        if p > prime_cutoff:
            total += 1.0 / (p * p - 1)
    total += 0.5 * (1.0 / hi + 1.0 / (hi + 1))
    return total


def euler_product_support_density(
    spec: MultiplicativeSpec,
    prime_cutoff: int,
    *,
    zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
) -> EulerProductResult:
    """Density of the nonzero set of a multiplicative function.

    The density equals the product over primes of
    (1 - 1/p) * sum of p^-k over supported prime powers p^k, truncated
    at `prime_cutoff` with a certified log tail. When the spec declares
    a divergent set of primes with value 0, the density is exactly 0.
    """
    tail = spec.unsupported_tail
    if tail.regime == TAIL_DIVERGENT:
        return EulerProductResult(
            value=0.0,
            prime_cutoff=prime_cutoff,
            tail_log_bound=0.0,
            factors_omitted_reason=(
                "declared divergent sum of 1/p over primes with value 0; "
                "the density is exactly 0"
            ),
        )
    if prime_cutoff < 2:
        raise SpecError("prime cutoff must be at least 2")
    cutoff = prime_cutoff
    if tail.regime == TAIL_NONE:
        cutoff = max(cutoff, tail.last_unsupported)
    value = 1.0
    for p in primes_up_to(cutoff):
        value *= (1.0 - 1.0 / p) * _supported_reciprocal_series(spec, p, zero_threshold)
    log_tail = _supported_prime_log_tail(cutoff)
    reason = (
        f"primes p > {cutoff} contribute factors 1 - c/p^2 (0 <= c <= 1); "
        "their |log| sum is certified by the tail bound"
    )
    if tail.regime == TAIL_BOUNDED:
        log_tail += 2.0 * tail.reciprocal_sum_bound
        reason += (
            f"; declared unsupported primes beyond the cutoff add at most "
            f"2 * {tail.reciprocal_sum_bound} to the log tail"
        )
    return EulerProductResult(
        value=value,
        prime_cutoff=cutoff,
        tail_log_bound=log_tail,
        factors_omitted_reason=reason,
    )


def support_prime_deficiency(
    spec: MultiplicativeSpec,
    prime_cutoff: int,
    checkpoints: Sequence[int] | None = None,
    *,
    zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
) -> tuple[tuple[int, float], ...]:
    """Partial sums of 1/p over primes p <= cutoff where the rule is 0 at p.

    A divergence diagnostic: the nonzero set of a multiplicative
    function has positive density exactly when the full series
    converges, which no finite scan can decide.
    """
    if checkpoints is None:
        cps = decade_checkpoints(prime_cutoff, start=10) if prime_cutoff >= 10 else [prime_cutoff]
    else:
        cps = _checked_checkpoints(checkpoints, prime_cutoff)
    out: list[tuple[int, float]] = []
    total = 0.0
    idx = 0
    for p in primes_up_to(prime_cutoff):
        while idx < len(cps) and p > cps[idx]:
            out.append((cps[idx], total))
            idx += 1
        if spec.rule_is_zero(p, 1, zero_threshold):
            total += 1.0 / p
    while idx < len(cps):
        out.append((cps[idx], total))
        idx += 1
    return tuple(out)


def c_nu_constant(
    spec: MultiplicativeSpec,
    prime_cutoff: int,
    *,
    zero_threshold: float = DEFAULT_ZERO_THRESHOLD,
) -> EulerProductResult:
    """The lower-bound constant (6/pi^2) * product of (1 + 1/p)^-1 over
    primes where the function vanishes at p.

    Requires a declared, convergent prime tail; a declared divergent
    tail puts the constant outside its hypothesis and raises.
    """
    tail = spec.unsupported_tail
    if tail.regime == TAIL_DIVERGENT:
        raise DegenerateConstant(
            f"spec {spec.name!r} declares a divergent sum of 1/p over vanishing "
            "primes; the constant degenerates to 0"
        )
    if prime_cutoff < 2:
        raise SpecError("prime cutoff must be at least 2")
    cutoff = prime_cutoff
    if tail.regime == TAIL_NONE:
        cutoff = max(cutoff, tail.last_unsupported)
    value = SIX_OVER_PI_SQUARED
    vanishing = []
    for p in primes_up_to(cutoff):
        if spec.rule_is_zero(p, 1, zero_threshold):
            vanishing.append(p)
            value /= 1.0 + 1.0 / p
    if tail.regime == TAIL_BOUNDED:
        log_tail = float(tail.reciprocal_sum_bound)
        reason = (
            f"vanishing primes beyond {cutoff} shrink the value by at most "
            f"a log factor of {log_tail} (declared reciprocal-sum bound)"
        )
    else:
        log_tail = 0.0
        reason = f"no vanishing primes beyond {cutoff} (declared)"
    return EulerProductResult(
        value=value,
        prime_cutoff=cutoff,
        tail_log_bound=log_tail,
        factors_omitted_reason=f"vanishing primes <= cutoff: {vanishing}; {reason}",
    )


def thinness_partial_sum(
    members: Collection[int],
    checkpoints: Sequence[int],
    *,
    exact: bool = True,
) -> tuple[tuple[int, Fraction | float], ...]:
    """Partial sums of 1/n over a set at each checkpoint.

    Exact sums use Fractions; their denominators grow like lcm(1..x), so
    for scans past roughly 10^4 pass exact=False to accumulate in float.
    """
    values = sorted(set(int(n) for n in members))
    if values and values[0] < 1:
        raise SpecError("set members must be positive integers")
    cps = list(checkpoints)
    if any(c2 <= c1 for c1, c2 in zip(cps, cps[1:])):
        raise RangeError("checkpoints must be strictly increasing")
    out: list[tuple[int, Fraction | float]] = []
    total: Fraction | float = Fraction(0) if exact else 0.0
    idx = 0
    for cx in cps:
        while idx < len(values) and values[idx] <= cx:
            n = values[idx]
            total += Fraction(1, n) if exact else 1.0 / n
            idx += 1
        out.append((cx, total))
    return tuple(out)
