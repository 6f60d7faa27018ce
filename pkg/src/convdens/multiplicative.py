"""Multiplicative function specs and sieve tabulation.

A multiplicative function is determined by its values on prime powers,
so a spec is just a total rule (p, k) -> value plus the declarations
that finite tables cannot decide on their own:

* whether the function is bounded on all of N, and
* what happens to the set {p : value at p is 0} beyond any enumeration
  cutoff (no more such primes / a bound on the sum of their reciprocals /
  divergent).

Declarations are inputs, never inferences; operations that need them
refuse when they are absent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .core import (
    DEFAULT_ZERO_THRESHOLD,
    MODE_EXACT,
    MODE_FLOAT,
    ArithFunc,
    Value,
    _checked_mode,
)
from .errors import RuleError, SpecError
from .sieve import smallest_prime_factor_table, split_smallest_prime_power

TAIL_NONE = "none"
TAIL_BOUNDED = "bounded"
TAIL_DIVERGENT = "divergent"


@dataclass(frozen=True)
class UnsupportedPrimeTail:
    """Declared behaviour of {p prime : value at p is 0} beyond enumeration.

    regime "none": no such primes beyond `last_unsupported`.
    regime "bounded": the sum of 1/p over all such primes is at most
    `reciprocal_sum_bound`.
    regime "divergent": the sum of 1/p over such primes diverges.
    """

    regime: str = TAIL_NONE
    last_unsupported: int = 0
    reciprocal_sum_bound: float = 0.0

    def __post_init__(self):
        if self.regime not in (TAIL_NONE, TAIL_BOUNDED, TAIL_DIVERGENT):
            raise SpecError(f"unknown prime-tail regime {self.regime!r}")
        if self.regime == TAIL_BOUNDED and self.reciprocal_sum_bound <= 0:
            raise SpecError("bounded prime tail needs a positive reciprocal-sum bound")


@dataclass(frozen=True)
class MultiplicativeSpec:
    """A total rule assigning a value to every prime power p^k (k >= 1).

    The implied value at 1 is 1. `declared_bounded` is None when the
    author made no boundedness claim.
    """

    name: str
    prime_power_rule: Callable[[int, int], Value]
    declared_bounded: bool | None = None
    unsupported_tail: UnsupportedPrimeTail = field(default_factory=UnsupportedPrimeTail)

    def __call__(self, p: int, k: int) -> Value:
        return self.prime_power_rule(p, k)

    def rule_value(self, p: int, k: int) -> Value:
        """Evaluate the rule, wrapping any failure with its (p, k) location."""
        try:
            return self.prime_power_rule(p, k)
        except Exception as exc:  # noqa: BLE001 - rule is user code
            raise RuleError(f"rule {self.name!r} failed at p={p}, k={k}: {exc}", p=p, k=k) from exc

    def rule_is_zero(self, p: int, k: int, zero_threshold: float = DEFAULT_ZERO_THRESHOLD) -> bool:
        """Zero test for the rule value at (p, k), exact where the value is exact."""
        v = self.rule_value(p, k)
        if isinstance(v, (int, Fraction)):
            return v == 0
        return abs(v) <= zero_threshold


def tabulate(
    spec: MultiplicativeSpec,
    limit: int,
    mode: str = MODE_EXACT,
    zero_threshold: float | None = None,
) -> ArithFunc:
    """Tabulate a multiplicative spec on [1, limit] by a linear sieve.

    Every n is split as p^k * m with p its smallest prime factor, so
    f(n) = f(m) * rule(p, k); each rule value is evaluated once per
    distinct prime power. Exact mode rejects rules producing floats.
    """
    if limit < 1:
        raise SpecError("limit must be at least 1")
    mode = _checked_mode(mode)
    exact = mode == MODE_EXACT
    tau = None if exact else (
        DEFAULT_ZERO_THRESHOLD if zero_threshold is None else float(zero_threshold)
    )

    one: Value = 1 if exact else 1.0
    table: list[Value] = [0] * (limit + 1)
    table[1] = one
    if limit == 1:
        return ArithFunc._wrap(table, mode, tau)

    spf = smallest_prime_factor_table(limit)
    cache: dict[tuple[int, int], Value] = {}

    def rule_value(p: int, k: int) -> Value:
        key = (p, k)
        v = cache.get(key)
        if v is None and key not in cache:
            v = spec.rule_value(p, k)
            if exact:
                if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
                    raise RuleError(
                        f"rule {spec.name!r} returned {type(v).__name__} at p={p}, k={k}; "
                        "exact mode needs int or Fraction",
                        p=p,
                        k=k,
                    )
            else:
                v = complex(v) if isinstance(v, complex) else float(v)
            cache[key] = v
        return v

    for n in range(2, limit + 1):
        p, k, m = split_smallest_prime_power(n, spf)
        base = table[m]
        if base:
            v = rule_value(p, k)
            table[n] = base * v if v else 0
        # base == 0: the cofactor already vanishes, so the product is 0
    if not exact:
        for n in range(2, limit + 1):
            v = table[n]
            if isinstance(v, int):
                table[n] = float(v)
    return ArithFunc._wrap(table, mode, tau)


def evaluate_at(spec: MultiplicativeSpec, n: int) -> Value:
    """Direct evaluation of the spec at n via factorization (test oracle)."""
    if n < 1:
        raise SpecError("n must be positive")
    result: Value = 1
    for p, k in _factorization(n):
        result = result * spec.rule_value(p, k)
    return result


def _factorization(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


# ---------------------------------------------------------------------------
# Built-in specs
# ---------------------------------------------------------------------------

def _mobius_rule(p: int, k: int) -> int:
    return -1 if k == 1 else 0


def _one_rule(p: int, k: int) -> int:
    return 1


def _zero_rule(p: int, k: int) -> int:
    return 0


def _identity_rule(p: int, k: int) -> int:
    return p**k


def _reciprocal_identity_rule(p: int, k: int) -> Fraction:
    return Fraction(1, p**k)


def _liouville_rule(p: int, k: int) -> int:
    return -1 if k % 2 else 1


def _squarefree_indicator_rule(p: int, k: int) -> int:
    return 1 if k == 1 else 0


MOBIUS = MultiplicativeSpec("mu", _mobius_rule, declared_bounded=True)
ONE = MultiplicativeSpec("one", _one_rule, declared_bounded=True)
#: Identity of convolution as a multiplicative spec: 0 at every prime power.
EPSILON = MultiplicativeSpec(
    "epsilon",
    _zero_rule,
    declared_bounded=True,
    unsupported_tail=UnsupportedPrimeTail(regime=TAIL_DIVERGENT),
)
IDENTITY = MultiplicativeSpec("id", _identity_rule, declared_bounded=False)
RECIPROCAL_IDENTITY = MultiplicativeSpec(
    "reciprocal-id", _reciprocal_identity_rule, declared_bounded=True
)
LIOUVILLE = MultiplicativeSpec("liouville", _liouville_rule, declared_bounded=True)
SQUAREFREE_INDICATOR = MultiplicativeSpec(
    "squarefree", _squarefree_indicator_rule, declared_bounded=True
)

BUILTIN_SPECS: dict[str, MultiplicativeSpec] = {
    "mu": MOBIUS,
    "one": ONE,
    "epsilon": EPSILON,
    "id": IDENTITY,
    "reciprocal-id": RECIPROCAL_IDENTITY,
    "liouville": LIOUVILLE,
    "squarefree": SQUAREFREE_INDICATOR,
}
