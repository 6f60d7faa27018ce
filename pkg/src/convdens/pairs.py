"""Convolution pairs (f, g = f * nu) and their support experiments.

Everything here works at finite scale N and treats the unknowable parts
of an infinite function as declarations: whether the support of f
continues past the table (and with what reciprocal-sum bound), and
whether nu is bounded. Verification operations refuse to run when the
hypothesis they test is undeclared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Collection, Sequence

from .core import (
    MODE_EXACT,
    MODE_FLOAT,
    ArithFunc,
    Value,
    convolve,
    dirichlet_inverse,
    support,
)
from .density import (
    DensityEstimate,
    decade_checkpoints,
    c_nu_constant,
    empirical_density,
)
from .errors import (
    ConvdensError,
    NotMultiplicative,
    RangeError,
    ShapeError,
    SpecError,
    UnboundedFunction,
    UnknownTail,
)
from .multiplicative import MultiplicativeSpec, tabulate

SUPPORT_FINITE = "finite"
SUPPORT_BOUNDED = "bounded"
SUPPORT_UNKNOWN = "unknown"


@dataclass(frozen=True)
class SupportTail:
    """Declared behaviour of supp(f) beyond the tabulated range.

    regime "finite": the support is entirely inside the table.
    regime "bounded": the sum of 1/d over support elements beyond the
    table is at most `reciprocal_sum_bound`.
    regime "unknown": no declaration; verification operations refuse.
    """

    regime: str = SUPPORT_UNKNOWN
    reciprocal_sum_bound: float | Fraction = 0

    def __post_init__(self):
        if self.regime not in (SUPPORT_FINITE, SUPPORT_BOUNDED, SUPPORT_UNKNOWN):
            raise SpecError(f"unknown support-tail regime {self.regime!r}")
        if self.regime == SUPPORT_BOUNDED and self.reciprocal_sum_bound < 0:
            raise SpecError("support tail bound must be nonnegative")

    @property
    def declared_thin(self) -> bool:
        return self.regime in (SUPPORT_FINITE, SUPPORT_BOUNDED)


@dataclass(frozen=True)
class NuPair:
    """f together with g = f * nu on [1, limit].

    `f_spec` is set when f came from a multiplicative rule, which is
    what the quantitative lower bound requires.
    """

    f: ArithFunc
    nu_spec: MultiplicativeSpec
    nu: ArithFunc
    g: ArithFunc
    limit: int
    f_spec: MultiplicativeSpec | None = None
    f_support_tail: SupportTail = field(default_factory=SupportTail)

    @property
    def mode(self) -> str:
        return self.f.mode


def _restricted(f: ArithFunc, limit: int) -> ArithFunc:
    if f.limit == limit:
        return f
    return ArithFunc._wrap(f._table[: limit + 1], f.mode, f.zero_threshold)


def make_pair(
    f: ArithFunc | MultiplicativeSpec,
    nu_spec: MultiplicativeSpec,
    limit: int,
    *,
    mode: str | None = None,
    zero_threshold: float | None = None,
    f_spec: MultiplicativeSpec | None = None,
    f_support_tail: SupportTail | None = None,
    verify: bool = True,
) -> NuPair:
    """Build g = f * nu and bundle the pair with its declarations.

    In exact mode the inversion roundtrip g * nu^-1 = f is checked
    eagerly unless `verify=False` (worth disabling at limits past ~10^5,
    where the check costs as much as the convolution itself).
    """
    if isinstance(f, MultiplicativeSpec):
        f_spec = f
        table_mode = mode or MODE_EXACT
        f_table = tabulate(f, limit, table_mode, zero_threshold)
    else:
        if f.limit < limit:
            raise ShapeError(f"f is tabulated to {f.limit} < requested limit {limit}")
        f_table = _restricted(f, limit)
        table_mode = f_table.mode
    nu_table = tabulate(nu_spec, limit, table_mode, zero_threshold)
    g = convolve(f_table, nu_table)
    tail = f_support_tail if f_support_tail is not None else SupportTail()
    if tail.regime == SUPPORT_FINITE and not any(
        f_table.nonzero(n) for n in range(1, limit + 1)
    ):
        raise SpecError("f is identically zero and declared finite: the pair is zero")
    pair = NuPair(
        f=f_table,
        nu_spec=nu_spec,
        nu=nu_table,
        g=g,
        limit=limit,
        f_spec=f_spec,
        f_support_tail=tail,
    )
    if verify and table_mode == MODE_EXACT:
        back = convolve(g, dirichlet_inverse(nu_table))
        if back != f_table:
            raise ConvdensError("inversion roundtrip failed to restore f")
    return pair


# ---------------------------------------------------------------------------
# Support classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SupportClass:
    """One class of the support decomposition.

    Members n share `divisors` (the divisors of n lying in supp(f)) and
    `contributors` (the subset of those d with nu(n/d) nonzero, i.e. the
    divisors actually feeding g(n)). `counts` are cumulative member
    counts at each checkpoint.
    """

    divisors: tuple[int, ...]
    contributors: tuple[int, ...]
    counts: tuple[tuple[int, int], ...]

    def density_series(self) -> tuple[tuple[int, float], ...]:
        return tuple((x, c / x) for x, c in self.counts)

    @property
    def density(self) -> float:
        x, c = self.counts[-1]
        return c / x


def _nonzero_flags(f: ArithFunc) -> bytearray:
    flags = bytearray(f.limit + 1)
    table = f._table
    if f.mode == MODE_EXACT:
        for n in range(1, f.limit + 1):
            if table[n] != 0:
                flags[n] = 1
    else:
        tau = f.zero_threshold
        for n in range(1, f.limit + 1):
            if abs(table[n]) > tau:
                flags[n] = 1
    return flags


def _support_divisor_lists(supp_f: Sequence[int], limit: int) -> list[list[int] | None]:
    """lists[n] = ascending divisors of n drawn from supp_f (None when empty)."""
    lists: list[list[int] | None] = [None] * (limit + 1)
    for d in supp_f:
        if d > limit:
            break
        for m in range(d, limit + 1, d):
            cur = lists[m]
            if cur is None:
                lists[m] = [d]
            else:
                cur.append(d)
    return lists


def classify_support(
    pair: NuPair, checkpoints: Sequence[int] | None = None
) -> tuple[SupportClass, ...]:
    """Partition {n <= N : n has a divisor in supp(f)} by shared structure.

    Two n fall in the same class when they draw the same divisor set
    from supp(f) and the same subset of it contributes a nonzero
    nu(n/d). Classes are materialized lazily from the data in a single
    ascending pass; counts are snapshotted at each checkpoint.
    """
    limit = pair.limit
    cps = decade_checkpoints(limit) if checkpoints is None else list(checkpoints)
    if any(c2 <= c1 for c1, c2 in zip(cps, cps[1:])):
        raise RangeError("checkpoints must be strictly increasing")
    if cps[-1] > limit:
        raise RangeError(f"checkpoint {cps[-1]} exceeds the table limit {limit}")
    supp_f = sorted(support(pair.f))
    div_lists = _support_divisor_lists(supp_f, cps[-1])
    nu_nonzero = _nonzero_flags(pair.nu)

    counts: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    snapshots: list[dict] = []
    cp_iter = iter(cps)
    next_cp = next(cp_iter)
    for n in range(1, cps[-1] + 1):
        divisors = div_lists[n]
        if divisors is not None:
            s_key = tuple(divisors)
            t_key = tuple(d for d in divisors if nu_nonzero[n // d])
            key = (s_key, t_key)
            counts[key] = counts.get(key, 0) + 1
        if n == next_cp:
            snapshots.append(dict(counts))
            next_cp = next(cp_iter, None)

    ordered = sorted(counts, key=lambda k: (len(k[0]), k[0], len(k[1]), k[1]))
    classes = []
    for s_key, t_key in ordered:
        per_cp = tuple(
            (cps[i], snapshots[i].get((s_key, t_key), 0)) for i in range(len(cps))
        )
        classes.append(SupportClass(divisors=s_key, contributors=t_key, counts=per_cp))
    return tuple(classes)


def only_divisor_witness(pair: NuPair, x: int | None = None) -> frozenset[int]:
    """The n <= x whose only supp(f)-divisor is d = min supp(f) and with
    nu(n/d) nonzero.

    Every such n satisfies g(n) = f(d) nu(n/d) != 0, so this set sits
    inside supp(g) and its density witnesses the positive lower bound.
    """
    limit = pair.limit if x is None else x
    if limit > pair.limit:
        raise RangeError(f"x={limit} exceeds the table limit {pair.limit}")
    supp_f = sorted(support(pair.f))
    if not supp_f:
        raise SpecError("f vanishes on the whole table; no witness divisor exists")
    d = supp_f[0]
    blocked = bytearray(limit + 1)
    for b in supp_f[1:]:
        if b > limit:
            break
        for m in range(b, limit + 1, b):
            blocked[m] = 1
    nu_nonzero = _nonzero_flags(pair.nu)
    out = []
    for n in range(d, limit + 1, d):
        if not blocked[n] and nu_nonzero[n // d]:
            out.append(n)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Mean values and truncated convolution
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MeanValueSeries:
    """(x, mean of |h| over [1, x]) at each checkpoint."""

    points: tuple[tuple[int, Fraction | float], ...]
    exact: bool
    truncation_level: int | None = None

    def final(self) -> Fraction | float:
        return self.points[-1][1]

    def floats(self) -> tuple[tuple[int, float], ...]:
        return tuple((x, float(v)) for x, v in self.points)


def mean_value_series(
    h: ArithFunc,
    checkpoints: Sequence[int] | None = None,
    *,
    float_sums: bool = False,
    truncation_level: int | None = None,
) -> MeanValueSeries:
    """Partial means (1/x) * sum of |h(n)| at each checkpoint.

    Exact-mode tables accumulate exactly by default. For values whose
    exact partial sums are computationally enormous (reciprocal-type
    tables: the denominators grow like lcm(1..x)), pass float_sums=True.
    """
    cps = decade_checkpoints(h.limit) if checkpoints is None else list(checkpoints)
    if any(c2 <= c1 for c1, c2 in zip(cps, cps[1:])):
        raise RangeError("checkpoints must be strictly increasing")
    if cps[-1] > h.limit:
        raise RangeError(f"checkpoint {cps[-1]} exceeds the table limit {h.limit}")
    exact = h.mode == MODE_EXACT and not float_sums
    table = h._table
    total: Value = 0 if exact else 0.0
    points: list[tuple[int, Fraction | float]] = []
    cp_iter = iter(cps)
    next_cp = next(cp_iter)
    for n in range(1, cps[-1] + 1):
        v = table[n]
        if v:
            total += abs(v) if exact else abs(v)
        if n == next_cp:
            points.append((n, Fraction(total, n) if exact else total / n))
            next_cp = next(cp_iter, None)
    return MeanValueSeries(points=tuple(points), exact=exact, truncation_level=truncation_level)


def truncated_convolution(
    f: ArithFunc,
    nu_spec: MultiplicativeSpec,
    y: int,
    limit: int,
    *,
    zero_threshold: float | None = None,
) -> ArithFunc:
    """g_y(n) = sum over d | n, d <= y of f(d) nu(n/d), tabulated on [1, limit].

    y = 0 gives the zero table; y >= limit gives the plain convolution.
    """
    if y < 0:
        raise SpecError("truncation level must be nonnegative")
    effective = min(y, limit)
    if f.limit < effective:
        raise ShapeError(f"f is tabulated to {f.limit} < truncation level {effective}")
    nu_table = tabulate(nu_spec, limit, f.mode, zero_threshold)
    return _truncated_convolve(f, nu_table, y, limit)


def _truncated_convolve(f: ArithFunc, nu_table: ArithFunc, y: int, limit: int) -> ArithFunc:
    ft = f._table
    nt = nu_table._table
    out: list[Value] = [0] * (limit + 1)
    for d in range(1, min(y, limit) + 1):
        fd = ft[d]
        if not fd:
            continue
        m = d
        for k in range(1, limit // d + 1):
            nk = nt[k]
            if nk:
                out[m] += fd * nk
            m += d
    tau = max(f.zero_threshold, nu_table.zero_threshold) if f.mode == MODE_FLOAT else None
    return ArithFunc._wrap(out, f.mode, tau)


# ---------------------------------------------------------------------------
# Theorem-style verification reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LowerBoundReport:
    """Empirical check of d(supp g) >= C / (sum of 1/n over supp f)."""

    empirical_density: float
    c_nu: float
    c_nu_prime_cutoff: int
    support_reciprocal_sum: float
    bound: float
    slack: float
    margin: float
    satisfied: bool
    x: int
    tail_regime: str


def verify_density_lower_bound(
    pair: NuPair,
    prime_cutoff: int,
    x: int,
    *,
    slack: float = 0.01,
) -> LowerBoundReport:
    """Check the quantitative support lower bound on a rule-backed pair.

    Refuses when f is not backed by a multiplicative rule or when the
    support tail of f is undeclared: both are hypotheses of the bound,
    not something a finite table can decide.
    """
    if pair.f_spec is None:
        raise NotMultiplicative(
            "the lower bound requires f to be backed by a multiplicative rule"
        )
    tail = pair.f_support_tail
    if tail.regime == SUPPORT_UNKNOWN:
        raise UnknownTail("declare the support tail of f (finite or bounded) first")
    if x > pair.limit:
        raise RangeError(f"x={x} exceeds the table limit {pair.limit}")
    supp_f = support(pair.f)
    if not supp_f:
        raise SpecError("f vanishes on the whole table; nothing to verify")
    recip_sum = math.fsum(1.0 / n for n in supp_f)
    if tail.regime == SUPPORT_BOUNDED:
        recip_sum += float(tail.reciprocal_sum_bound)
    constant = c_nu_constant(pair.nu_spec, prime_cutoff)
    bound = constant.value / recip_sum
    count = sum(1 for n in support(pair.g) if n <= x)
    empirical = count / x
    margin = empirical - (bound - slack)
    return LowerBoundReport(
        empirical_density=empirical,
        c_nu=constant.value,
        c_nu_prime_cutoff=constant.prime_cutoff,
        support_reciprocal_sum=recip_sum,
        bound=bound,
        slack=slack,
        margin=margin,
        satisfied=margin >= 0,
        x=x,
        tail_regime=tail.regime,
    )


@dataclass(frozen=True)
class UncertaintyReport:
    """Reciprocal partial sums and densities for both supports.

    When one side is declared thin, the other side's series should show
    a density bounded away from zero: a stable count(x)/x and reciprocal
    sums growing like density * log x.
    """

    f_reciprocal_sums: tuple[tuple[int, float], ...]
    g_reciprocal_sums: tuple[tuple[int, float], ...]
    f_density: DensityEstimate
    g_density: DensityEstimate
    thin_side: str | None
    other_density_floor: float | None
    other_density_stable: bool | None


def uncertainty_report(
    pair: NuPair,
    checkpoints: Sequence[int] | None = None,
    *,
    thin_side: str | None = None,
) -> UncertaintyReport:
    """Growth diagnostics for supp(f) and supp(g) side by side.

    `thin_side` marks which support is declared thin ("f" or "g");
    defaults to "f" when the pair carries a thin declaration for f.
    """
    cps = decade_checkpoints(pair.limit) if checkpoints is None else list(checkpoints)
    supp_f = support(pair.f)
    supp_g = support(pair.g)
    if not supp_f and not supp_g:
        raise SpecError("both supports are empty on the table; the pair is zero here")
    if thin_side is None and pair.f_support_tail.declared_thin:
        thin_side = "f"
    if thin_side not in (None, "f", "g"):
        raise SpecError("thin_side must be 'f', 'g', or None")

    def reciprocal_series(members: Collection[int]) -> tuple[tuple[int, float], ...]:
        values = sorted(members)
        out = []
        total = 0.0
        idx = 0
        for cx in cps:
            while idx < len(values) and values[idx] <= cx:
                total += 1.0 / values[idx]
                idx += 1
            out.append((cx, total))
        return tuple(out)

    f_density = empirical_density(supp_f, cps[-1], cps, zero_threshold=pair.f.zero_threshold)
    g_density = empirical_density(supp_g, cps[-1], cps, zero_threshold=pair.g.zero_threshold)
    floor = None
    stable = None
    if thin_side is not None:
        other = g_density if thin_side == "f" else f_density
        series = other.series()
        floor = min(ratio for _, ratio in series)
        if len(series) >= 2:
            stable = series[-1][1] >= 0.9 * series[-2][1]
        else:
            stable = True
    return UncertaintyReport(
        f_reciprocal_sums=reciprocal_series(supp_f),
        g_reciprocal_sums=reciprocal_series(supp_g),
        f_density=f_density,
        g_density=g_density,
        thin_side=thin_side,
        other_density_floor=floor,
        other_density_stable=stable,
    )


@dataclass(frozen=True)
class DriftCheck:
    """One adjacent pair of truncation levels and its mean drift bound."""

    y_low: int
    y_high: int
    observed: float
    bound: float
    satisfied: bool


@dataclass(frozen=True)
class MeanValueConvergenceReport:
    """Truncated-convolution mean estimates across a truncation grid.

    The drift bound |lambda(y2) - lambda(y1)| <= sup|nu| * sum of
    |f(d)|/d over y1 < d <= y2 is the triangle-inequality consequence of
    the truncation; it is implementation-derived, not a quoted formula.
    """

    x: int
    sup_nu: float
    nu_support_min_abs: float
    lambda_estimates: tuple[tuple[int, float], ...]
    drift_checks: tuple[DriftCheck, ...]
    min_support_f: int
    witness_density: float
    witness_value: float


def verify_mean_value_convergence(
    f: ArithFunc,
    nu_spec: MultiplicativeSpec,
    y_grid: Sequence[int],
    x: int,
    *,
    float_sums: bool = False,
    declared_f_reciprocal_sum_finite: bool = True,
) -> MeanValueConvergenceReport:
    """Estimate truncated mean values lambda_y at x across a y grid.

    Requires nu declared bounded and the sum of |f(d)|/d declared
    finite; reports sup|nu| on the table, the drift checks between
    adjacent grid points, and the positivity witness
    |f(d)| * delta * density(witness set), with d = min supp(f) and
    delta = min |nu| over supp(nu).
    """
    if nu_spec.declared_bounded is not True:
        raise UnboundedFunction(
            f"spec {nu_spec.name!r} is not declared bounded; the mean-value "
            "statement needs that hypothesis"
        )
    if not declared_f_reciprocal_sum_finite:
        raise UnknownTail("the sum of |f(d)|/d must be declared finite")
    if x > f.limit:
        raise RangeError(f"x={x} exceeds the table limit {f.limit}")
    ys = sorted(set(int(y) for y in y_grid))
    if not ys or ys[0] < 0:
        raise SpecError("y grid must contain nonnegative levels")

    nu_table = tabulate(nu_spec, x, f.mode, f.zero_threshold)
    abs_nu = [abs(v) for v in nu_table._table[1:]]
    sup_nu = float(max(abs_nu))
    if nu_table.mode == MODE_FLOAT:
        tau = nu_table.zero_threshold
        nonzero_abs = [a for a in abs_nu if a > tau]
    else:
        nonzero_abs = [a for a in abs_nu if a != 0]
    delta = float(min(nonzero_abs)) if nonzero_abs else 0.0

    f_at_x = _restricted(f, x)
    supp_f = sorted(support(f_at_x))
    if not supp_f:
        raise SpecError("f vanishes on [1, x]; declare and tabulate further out")
    d_min = supp_f[0]

    estimates: list[tuple[int, float]] = []
    for y in ys:
        g_y = _truncated_convolve(f_at_x, nu_table, y, x)
        series = mean_value_series(g_y, [x], float_sums=float_sums, truncation_level=y)
        estimates.append((y, float(series.final())))

    ft = f._table
    drift: list[DriftCheck] = []
    for (y1, l1), (y2, l2) in zip(estimates, estimates[1:]):
        window = math.fsum(
            float(abs(ft[d])) / d for d in range(y1 + 1, min(y2, f.limit) + 1) if ft[d]
        )
        bound = sup_nu * window
        observed = abs(l2 - l1)
        drift.append(
            DriftCheck(
                y_low=y1,
                y_high=y2,
                observed=observed,
                bound=bound,
                satisfied=observed <= bound + 1e-12,
            )
        )

    pair = NuPair(
        f=f_at_x, nu_spec=nu_spec, nu=nu_table, g=f_at_x, limit=x
    )  # g unused by the witness scan
    witness = only_divisor_witness(pair, x)
    witness_density = len(witness) / x
    witness_value = float(abs(ft[d_min])) * delta * witness_density
    return MeanValueConvergenceReport(
        x=x,
        sup_nu=sup_nu,
        nu_support_min_abs=delta,
        lambda_estimates=tuple(estimates),
        drift_checks=tuple(drift),
        min_support_f=d_min,
        witness_density=witness_density,
        witness_value=witness_value,
    )


# ---------------------------------------------------------------------------
# Whole-experiment orchestration (shared by the CLI)
# ---------------------------------------------------------------------------

#: A mean series growing by at least this factor across its checkpoints
#: is flagged as having no finite mean value.
GROWTH_FLAG_RATIO = 50.0


@dataclass(frozen=True)
class NuPairReport:
    """Full output of a pair experiment, ready for serialization."""

    f_name: str
    nu_name: str
    limit: int
    mode: str
    zero_threshold: float | None
    f_support_count: int
    g_support_count: int
    f_density: DensityEstimate | None
    g_density: DensityEstimate | None
    classes: tuple[SupportClass, ...] | None
    mean_series: MeanValueSeries | None
    mean_value_flag: str | None
    bound: LowerBoundReport | None
    growth: UncertaintyReport | None
    truncation_level: int | None
    slack: float
    tail_regime: str


def run_pair_experiment(
    f: ArithFunc | MultiplicativeSpec,
    nu_spec: MultiplicativeSpec,
    limit: int,
    *,
    f_name: str | None = None,
    mode: str = MODE_EXACT,
    zero_threshold: float | None = None,
    f_spec: MultiplicativeSpec | None = None,
    f_support_tail: SupportTail | None = None,
    density_x: int | None = None,
    checkpoints: Sequence[int] | None = None,
    classes: bool = False,
    mean_value: bool = False,
    float_sums: bool = False,
    verify_bound: bool = False,
    prime_cutoff: int = 10**5,
    truncate: int | None = None,
    slack: float = 0.01,
    uncertainty: bool = False,
    verify: bool | None = None,
) -> NuPairReport:
    """Run a pair experiment and gather every requested analysis.

    This is the library face of the CLI `pair` command; each flag maps
    onto one analysis. The eager inversion check defaults to off above
    10^5 where it would dominate the runtime.
    """
    if verify is None:
        verify = limit <= 10**5
    pair = make_pair(
        f,
        nu_spec,
        limit,
        mode=mode,
        zero_threshold=zero_threshold,
        f_spec=f_spec,
        f_support_tail=f_support_tail,
        verify=verify,
    )
    name = f_name or (f.name if isinstance(f, MultiplicativeSpec) else "f")
    supp_f = support(pair.f)
    supp_g = support(pair.g)

    f_density = g_density = None
    if density_x is not None:
        cps = checkpoints or decade_checkpoints(density_x)
        f_density = empirical_density(
            supp_f, density_x, cps, zero_threshold=pair.f.zero_threshold
        )
        g_density = empirical_density(
            supp_g, density_x, cps, zero_threshold=pair.g.zero_threshold
        )

    class_list = classify_support(pair, checkpoints) if classes else None

    mean = None
    flag = None
    if mean_value:
        if truncate is not None:
            h = _truncated_convolve(pair.f, pair.nu, truncate, limit)
        else:
            h = pair.g
        mean = mean_value_series(
            h, checkpoints, float_sums=float_sums, truncation_level=truncate
        )
        pts = mean.floats()
        if len(pts) >= 2 and pts[0][1] > 0 and pts[-1][1] / pts[0][1] >= GROWTH_FLAG_RATIO:
            flag = (
                "no finite mean value: series grows by factor "
                f"{pts[-1][1] / pts[0][1]:.6g} across checkpoints"
            )

    bound = None
    if verify_bound:
        bound = verify_density_lower_bound(
            pair, prime_cutoff, density_x or limit, slack=slack
        )

    growth = None
    if uncertainty:
        growth = uncertainty_report(pair, checkpoints)

    return NuPairReport(
        f_name=name,
        nu_name=nu_spec.name,
        limit=limit,
        mode=pair.mode,
        zero_threshold=pair.f.zero_threshold,
        f_support_count=len(supp_f),
        g_support_count=len(supp_g),
        f_density=f_density,
        g_density=g_density,
        classes=class_list,
        mean_series=mean,
        mean_value_flag=flag,
        bound=bound,
        growth=growth,
        truncation_level=truncate,
        slack=slack,
        tail_regime=pair.f_support_tail.regime,
    )
