"""Tabulated arithmetic functions and their Dirichlet algebra.

An arithmetic function is held as a finite table of values on [1, N].
Two value modes exist:

* ``"exact"``  — entries are ints or Fractions; equality and zero tests
  are exact. This is the default and what every identity check uses.
* ``"float"``  — entries are floats or complex; zero testing compares
  |v| against an absolute threshold recorded on the table.

Operations never mutate their inputs; tables are safe to share across
threads once constructed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .errors import NotInvertible, RangeError, ShapeError
from .sieve import smallest_prime_factor_table, split_smallest_prime_power

MODE_EXACT = "exact"
MODE_FLOAT = "float"

#: Absolute zero threshold used by float-mode tables unless overridden.
DEFAULT_ZERO_THRESHOLD = 1e-12

Value = int | Fraction | float | complex


def _checked_mode(mode: str) -> str:
    if mode not in (MODE_EXACT, MODE_FLOAT):
        raise ShapeError(f"unknown value mode {mode!r}")
    return mode


class ArithFunc:
    """An arithmetic function tabulated on [1, limit].

    Indexing is 1-based: ``f[n]`` is the value at n. Instances are
    immutable; all algebra returns new tables.
    """

    __slots__ = ("limit", "mode", "zero_threshold", "_table")

    def __init__(
        self,
        values: Sequence[Value],
        mode: str = MODE_EXACT,
        zero_threshold: float | None = None,
    ):
        mode = _checked_mode(mode)
        if len(values) < 1:
            raise ShapeError("a table needs at least the value at n = 1")
        table: list[Value] = [0]
        if mode == MODE_EXACT:
            for v in values:
                if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
                    raise ShapeError(
                        f"exact mode requires int or Fraction entries, got {type(v).__name__}"
                    )
                table.append(v)
            threshold = None
        else:
            for v in values:
                table.append(complex(v) if isinstance(v, complex) else float(v))
            threshold = DEFAULT_ZERO_THRESHOLD if zero_threshold is None else float(zero_threshold)
            if threshold < 0:
                raise ShapeError("zero threshold must be nonnegative")
        object.__setattr__(self, "limit", len(values))
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "zero_threshold", threshold)
        object.__setattr__(self, "_table", table)

    @classmethod
    def _wrap(cls, table: list[Value], mode: str, zero_threshold: float | None) -> "ArithFunc":
        """Internal constructor: table[0] is a dummy, no per-entry validation."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "limit", len(table) - 1)
        object.__setattr__(obj, "mode", mode)
        object.__setattr__(obj, "zero_threshold", zero_threshold)
        object.__setattr__(obj, "_table", table)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ArithFunc is immutable")

    def __getitem__(self, n: int) -> Value:
        if not 1 <= n <= self.limit:
            raise RangeError(f"index {n} outside [1, {self.limit}]")
        return self._table[n]

    def __len__(self) -> int:
        return self.limit

    def __iter__(self) -> Iterator[Value]:
        return iter(self._table[1:])

    def items(self) -> Iterator[tuple[int, Value]]:
        """Yield (n, value) pairs for n = 1..limit."""
        for n in range(1, self.limit + 1):
            yield n, self._table[n]

    def to_list(self) -> list[Value]:
        """Values at 1..limit as a fresh list."""
        return self._table[1:]

    def nonzero(self, n: int) -> bool:
        """Mode-aware zero test at n."""
        v = self[n]
        if self.mode == MODE_EXACT:
            return v != 0
        return abs(v) > self.zero_threshold

    def as_float(self, zero_threshold: float | None = None) -> "ArithFunc":
        """Copy of this table in float mode."""
        if self.mode == MODE_FLOAT and zero_threshold is None:
            return self
        tau = DEFAULT_ZERO_THRESHOLD if zero_threshold is None else float(zero_threshold)
        table: list[Value] = [0]
        for v in self._table[1:]:
            table.append(complex(v) if isinstance(v, complex) else float(v))
        return ArithFunc._wrap(table, MODE_FLOAT, tau)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArithFunc):
            return NotImplemented
        return (
            self.limit == other.limit
            and self.mode == other.mode
            and self._table[1:] == other._table[1:]
        )

    def __hash__(self):
        return hash((self.limit, self.mode, tuple(self._table[1:])))

    def __repr__(self) -> str:
        head = ", ".join(repr(v) for v in self._table[1:6])
        tail = ", ..." if self.limit > 5 else ""
        return f"ArithFunc([{head}{tail}], limit={self.limit}, mode={self.mode!r})"


def _common_shape(f: ArithFunc, g: ArithFunc) -> tuple[int, str, float | None]:
    if f.limit != g.limit:
        raise ShapeError(f"limits differ: {f.limit} != {g.limit}")
    if f.mode != g.mode:
        raise ShapeError(f"modes differ: {f.mode} != {g.mode}")
    if f.mode == MODE_FLOAT:
        tau = max(f.zero_threshold, g.zero_threshold)
    else:
        tau = None
    return f.limit, f.mode, tau


def convolve(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    """Dirichlet convolution (f*g)(n) = sum over d | n of f(d) g(n/d).

    Iterates (d, multiple-of-d) pairs, skipping exact-zero entries of f,
    so the cost is N * sum of 1/d over the support of f.
    """
    n, mode, tau = _common_shape(f, g)
    ft = f._table
    gt = g._table
    out: list[Value] = [0] * (n + 1)
    for d in range(1, n + 1):
        fd = ft[d]
        if not fd:
            continue
        m = d
        for k in range(1, n // d + 1):
            gk = gt[k]
            if gk:
                out[m] += fd * gk
            m += d
    return ArithFunc._wrap(out, mode, tau)


def convolve_naive(f: ArithFunc, g: ArithFunc) -> ArithFunc:
    """Divisor-enumeration convolution, kept as an independent oracle.

    O(N^1.5); enumerate divisor pairs (d, n/d) of each n directly.
    """
    n, mode, tau = _common_shape(f, g)
    ft = f._table
    gt = g._table
    out: list[Value] = [0] * (n + 1)
    for m in range(1, n + 1):
        acc: Value = 0
        d = 1
        while d * d <= m:
            if m % d == 0:
                q = m // d
                acc += ft[d] * gt[q]
                if q != d:
                    acc += ft[q] * gt[d]
            d += 1
        out[m] = acc
    return ArithFunc._wrap(out, mode, tau)


def _reciprocal(v: Value, mode: str) -> Value:
    if mode == MODE_EXACT:
        if v == 1:
            return 1
        if v == -1:
            return -1
        return Fraction(1) / v
    return 1.0 / v


def dirichlet_inverse(f: ArithFunc) -> ArithFunc:
    """Inverse of f under Dirichlet convolution, defined when f(1) != 0.

    Built by a forward sieve over the recursion
    inv(n) = -(1/f(1)) * sum over proper divisors d of inv(d) f(n/d),
    which costs N log N like `convolve`.
    """
    if not f.nonzero(1):
        raise NotInvertible("value at 1 is zero; no Dirichlet inverse exists")
    n = f.limit
    ft = f._table
    inv1 = _reciprocal(ft[1], f.mode)
    out: list[Value] = [0] * (n + 1)
    acc: list[Value] = [0] * (n + 1)
    for m in range(1, n + 1):
        val = inv1 if m == 1 else -acc[m] * inv1
        out[m] = val
        if val:
            top = n // m
            idx = 2 * m
            for k in range(2, top + 1):
                fk = ft[k]
                if fk:
                    acc[idx] += val * fk
                idx += m
    return ArithFunc._wrap(out, f.mode, f.zero_threshold)


def _mobius_values(limit: int) -> list[int]:
    """mu(0..limit) by a smallest-prime-factor pass (internal helper)."""
    spf = smallest_prime_factor_table(limit)
    mu = [0] * (limit + 1)
    if limit >= 1:
        mu[1] = 1
    for i in range(2, limit + 1):
        p, k, m = split_smallest_prime_power(i, spf)
        if k == 1:
            mu[i] = -mu[m]
    return mu


def _unit_table(limit: int, mode: str, tau: float | None) -> ArithFunc:
    one: Value = 1 if mode == MODE_EXACT else 1.0
    return ArithFunc._wrap([0] + [one] * limit, mode, tau)


def _mobius_table(limit: int, mode: str, tau: float | None) -> ArithFunc:
    mu = _mobius_values(limit)
    if mode == MODE_FLOAT:
        return ArithFunc._wrap([0] + [float(v) for v in mu[1:]], mode, tau)
    mu[0] = 0
    return ArithFunc._wrap(mu, mode, tau)


def dirichlet_transform(f: ArithFunc) -> ArithFunc:
    """f convolved with the constant-one function."""
    return convolve(f, _unit_table(f.limit, f.mode, f.zero_threshold))


def mobius_transform(f: ArithFunc) -> ArithFunc:
    """f convolved with the Moebius function; inverse of `dirichlet_transform`."""
    return convolve(f, _mobius_table(f.limit, f.mode, f.zero_threshold))


def support(f: ArithFunc) -> frozenset[int]:
    """All n in [1, limit] where f is nonzero under the table's zero test.

    In float mode the test is |v| > f.zero_threshold; the threshold
    travels with the table so reports can echo it.
    """
    table = f._table
    if f.mode == MODE_EXACT:
        return frozenset(n for n in range(1, f.limit + 1) if table[n] != 0)
    tau = f.zero_threshold
    return frozenset(n for n in range(1, f.limit + 1) if abs(table[n]) > tau)


def epsilon_table(limit: int, mode: str = MODE_EXACT) -> ArithFunc:
    """The convolution identity: 1 at n = 1, 0 elsewhere."""
    mode = _checked_mode(mode)
    one: Value = 1 if mode == MODE_EXACT else 1.0
    tau = None if mode == MODE_EXACT else DEFAULT_ZERO_THRESHOLD
    return ArithFunc._wrap([0, one] + [0] * (limit - 1), mode, tau)


def format_value(v: Value) -> str:
    """Render a value for CSV: integers bare, rationals as p/q, floats via repr."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, complex):
        return str(v).strip("()")
    return repr(v) if isinstance(v, float) else str(v)


def write_table_csv(f: ArithFunc, out) -> None:
    """Write `n,value` rows for n = 1..limit to a text stream."""
    table = f._table
    for n in range(1, f.limit + 1):
        out.write(f"{n},{format_value(table[n])}\n")
