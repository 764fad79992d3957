"""Exact performance analysis of threshold cut algorithms.

The threshold rule with parameter tau keeps a node's random side while fewer
than tau neighbours agree with it and switches otherwise.  Its expected cut
fraction on any d-regular triangle-free graph is an exact rational

    alpha(tau, d) = 1/2 + C(d-1, tau-1) * sum_{i=d-tau+1}^{tau-1} C(d-1, i) / 4^(d-1)

for tau > d/2 (the closed form's hypothesis); below that the value is obtained
by evaluating the threshold assignment on the neighbourhood graph.  This
module locates optimal thresholds, compares the resulting performance with
the 1/2 + 9/(32 sqrt(d)) guarantee and with Shearer's 1/2 + sqrt(2)/(8 sqrt(d)),
and certifies the binomial tail estimates behind the guarantee.

Irrational bounds are never evaluated in floating point where a decision is
made: comparisons use the squared form ((r - 1/2)^2 * d vs the squared
coefficient), and the tail estimates use rational interval enclosures of pi
and e^(-j^2/32) with escalating precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import IO, Callable, Iterable, Sequence

from .cutsearch import ThresholdRule, evaluate_cut, threshold_assignment
from .intervals import Interval, exp_enclosure, pi_enclosure, sqrt_enclosure
from .ngraph import build_ngraph

HALF = Fraction(1, 2)

_ngraph_cached = lru_cache(maxsize=64)(build_ngraph)


def binomial_row(n: int) -> list[int]:
    """Row n of Pascal's triangle via the multiplicative recurrence."""
    if n < 0:
        raise ValueError("row index must be >= 0")
    row = [1]
    for i in range(n):
        row.append(row[-1] * (n - i) // (i + 1))
    return row


def _check_tau_d(tau: int, d: int) -> None:
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    if not 0 <= tau <= d + 1:
        raise ValueError(f"tau must be in [0, {d + 1}], got {tau}")


def alpha_closed_form(tau: int, d: int) -> Fraction:
    """Closed-form expected cut fraction; requires tau > d/2."""
    _check_tau_d(tau, d)
    if 2 * tau <= d:
        raise ValueError(f"closed form requires tau > d/2, got tau={tau}, d={d}")
    lead = math.comb(d - 1, tau - 1) if tau - 1 <= d - 1 else 0
    tail = sum(math.comb(d - 1, i) for i in range(d - tau + 1, tau))
    return HALF + Fraction(lead * tail, 4 ** (d - 1))


def alpha(tau: int, d: int) -> Fraction:
    """Expected cut fraction of the threshold-tau rule at degree d, exactly.

    Dispatches to the closed form when its hypothesis tau > d/2 holds and to
    the neighbourhood-graph evaluation otherwise.
    """
    _check_tau_d(tau, d)
    if 2 * tau > d:
        return alpha_closed_form(tau, d)
    g = _ngraph_cached(d)
    return evaluate_cut(g, threshold_assignment(ThresholdRule(d, tau)))


@dataclass(frozen=True)
class AlphaValue:
    degree: int
    tau: int
    value: Fraction


def alpha_sweep(d: int) -> list[AlphaValue]:
    """alpha(tau, d) for every tau in [0, d+1], sharing one graph build."""
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    g = None
    out = []
    for tau in range(d + 2):
        if 2 * tau > d:
            v = alpha_closed_form(tau, d)
        else:
            g = g or _ngraph_cached(d)
            v = evaluate_cut(g, threshold_assignment(ThresholdRule(d, tau)))
        out.append(AlphaValue(degree=d, tau=tau, value=v))
    return out


def _scaled_gain(row: Sequence[int], prefix: Sequence[int], d: int, tau: int) -> int:
    """(alpha(tau, d) - 1/2) * 4^(d-1) as an integer, for tau > d/2."""
    n = d - 1
    lead = row[tau - 1] if tau - 1 <= n else 0
    lo, hi = d - tau + 1, min(tau - 1, n)
    tail = prefix[hi + 1] - prefix[lo] if lo <= hi else 0
    return lead * tail


def optimal_taus(d: int) -> list[int]:
    """Every tau maximising alpha(tau, d), ascending.

    Only tau > d/2 needs scanning: with tau <= d/2 at least as many
    neighbourhoods switch as keep, the gain term (r-p)(q-r) is non-positive,
    and alpha never exceeds 1/2, while the scanned region always contains a
    value strictly above 1/2.
    """
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    row = binomial_row(d - 1)
    prefix = [0]
    for x in row:
        prefix.append(prefix[-1] + x)
    gains = {tau: _scaled_gain(row, prefix, d, tau) for tau in range(d // 2 + 1, d + 2)}
    best = max(gains.values())
    return [tau for tau, gain in sorted(gains.items()) if gain == best]


def optimal_tau(d: int) -> tuple[int, Fraction]:
    """The smallest optimal threshold and its exact cut fraction."""
    tau = optimal_taus(d)[0]
    return tau, alpha_closed_form(tau, d)


def tau_formula(d: int) -> int:
    """ceil((d + sqrt(d)) / 2) without floating point.

    Characterised as the smallest integer t with 2t >= d and (2t - d)^2 >= d.
    """
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    t = (d + math.isqrt(d)) // 2
    while 2 * t < d or (2 * t - d) ** 2 < d:
        t += 1
    return t


# ---------------------------------------------------------------------------
# Lower bounds of the form 1/2 + c / sqrt(d)


@dataclass(frozen=True)
class SqrtBound:
    """The irrational bound 1/2 + sqrt(coeff_sq / d), compared exactly.

    Comparisons square out the root: for a rational r >= 1/2,
    r >= bound iff (r - 1/2)^2 * d >= coeff_sq.  No floating point decides
    anything; `to_float` exists only for reporting.
    """

    coeff_sq: Fraction
    degree: int

    def compare(self, r: Fraction) -> int:
        """Sign of r - bound: -1 below, 0 equal, +1 above."""
        if r < HALF:
            return -1
        gap = (r - HALF) ** 2 * self.degree
        if gap > self.coeff_sq:
            return 1
        if gap == self.coeff_sq:
            return 0
        return -1

    def exact_value(self) -> Fraction | None:
        """The bound as a rational when sqrt(coeff_sq / d) is rational."""
        q = self.coeff_sq / self.degree
        rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if rn * rn == q.numerator and rd * rd == q.denominator:
            return HALF + Fraction(rn, rd)
        return None

    def to_float(self) -> float:
        return 0.5 + math.sqrt(float(self.coeff_sq) / self.degree)


def threshold_bound(d: int) -> SqrtBound:
    """Proven guarantee 1/2 + 9/(32 sqrt(d)) for the formula threshold."""
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    return SqrtBound(Fraction(81, 1024), d)


def shearer_bound(d: int) -> SqrtBound:
    """Shearer's guarantee 1/2 + sqrt(2)/(8 sqrt(d))."""
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    return SqrtBound(Fraction(1, 32), d)


@dataclass(frozen=True)
class BoundCheck:
    degree: int
    tau: int
    alpha: Fraction
    margin: int  # (alpha - 1/2)^2 * 1024 * d - 81, scaled by 16^(d-1): exact
    passed: bool
    equality: bool


@dataclass(frozen=True)
class BoundReport:
    d_max: int
    checks: tuple[BoundCheck, ...]
    all_pass: bool
    equality_degrees: tuple[int, ...]


def verify_theorem_bound(d_max: int) -> BoundReport:
    """Check alpha(tau_formula(d), d) >= 1/2 + 9/(32 sqrt(d)) for d = 2..d_max.

    Exact integer arithmetic throughout: with gain N = (alpha - 1/2) * 4^(d-1),
    the inequality is N^2 * 1024 * d >= 81 * 16^(d-1).  Binomials are carried
    incrementally from one degree to the next, so the full run to d = 3000
    stays fast.
    """
    if d_max < 2:
        raise ValueError(f"d_max must be >= 2, got {d_max}")
    checks = []
    equalities = []
    cur = 1  # C(n, k) at n = d - 1, k = lo(d); starts at C(1, 1) for d = 2
    cur_k = 1
    pow16 = 16  # 16^(d-1)
    for d in range(2, d_max + 1):
        n = d - 1
        tau = tau_formula(d)
        lo, hi = d - tau + 1, tau - 1
        if d > 2:
            # advance the carried binomial from row n-1 to row n at fixed k
            cur = cur * n // (n - cur_k)
        while cur_k < lo:
            cur = cur * (n - cur_k) // (cur_k + 1)
            cur_k += 1
        while cur_k > lo:
            cur = cur * cur_k // (n - cur_k + 1)
            cur_k -= 1
        # walk the summation segment [lo, hi] from C(n, lo)
        seg_sum = cur
        val = cur
        for i in range(lo + 1, hi + 1):
            val = val * (n - i + 1) // i
            seg_sum += val
        gain = val * seg_sum  # C(n, tau-1) * sum = (alpha - 1/2) * 4^n
        margin = gain * gain * 1024 * d - 81 * pow16
        passed = margin >= 0
        equality = margin == 0
        if equality:
            equalities.append(d)
        checks.append(
            BoundCheck(
                degree=d,
                tau=tau,
                alpha=HALF + Fraction(gain, 4**n),
                margin=margin,
                passed=passed,
                equality=equality,
            )
        )
        pow16 *= 16
    return BoundReport(
        d_max=d_max,
        checks=tuple(checks),
        all_pass=all(c.passed for c in checks),
        equality_degrees=tuple(equalities),
    )


# ---------------------------------------------------------------------------
# Certified binomial tail estimates

MIN_TAIL_N = 1500
TAIL_J = (1, 2, 3, 4)


def tail_offset(j: int, n: int) -> int:
    """floor(j * sqrt(n / 32)): the largest delta with 32 * delta^2 <= j^2 * n."""
    if j < 1 or n < 1:
        raise ValueError("need j >= 1 and n >= 1")
    return math.isqrt(j * j * n // 32)


def central_ratio(n: int) -> Fraction:
    """C(2n, n) / 4^n, the central binomial mass."""
    return Fraction(math.comb(2 * n, n), 4**n)


def offset_ratio(n: int, delta: int) -> Fraction:
    """C(2n, n + delta) / C(2n, n)."""
    return Fraction(math.comb(2 * n, n + delta), math.comb(2 * n, n))


def tail_power(j: int, delta: int) -> Fraction:
    """(1 - j^2 / (32 delta))^delta, the elementary stand-in for e^(-j^2/32)."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    return (1 - Fraction(j * j, 32 * delta)) ** delta


def window_mass(n: int, lo: int, hi: int) -> Fraction:
    """sum_{i=lo}^{hi} C(2n, n+i) / 4^n, exactly."""
    total = sum(math.comb(2 * n, n + i) for i in range(lo, hi + 1))
    return Fraction(total, 4**n)


@dataclass(frozen=True)
class EstimateCheck:
    name: str
    n: int | None
    j: int | None
    lo: Fraction
    hi: Fraction
    threshold: Fraction
    relation: str  # ">" or "<"
    status: str  # "holds" | "fails" | "inconclusive"
    precision: int


@dataclass(frozen=True)
class AppendixEstimateReport:
    checks: tuple[EstimateCheck, ...]
    all_hold: bool
    conclusive: bool


def _decide(
    name: str,
    n: int | None,
    j: int | None,
    make_interval: Callable[[int], Interval],
    threshold: Fraction,
    relation: str,
    precision_cap: int,
) -> EstimateCheck:
    """Escalate precision until the interval clears the threshold, or give up.

    Never silently passes: if the cap is reached with the threshold still
    inside the interval, the check is reported as inconclusive.
    """
    precision = 16
    while True:
        iv = make_interval(precision)
        if relation == ">":
            if iv.entirely_above(threshold):
                status = "holds"
            elif iv.hi <= threshold:
                status = "fails"
            else:
                status = None
        elif relation == "<":
            if iv.entirely_below(threshold):
                status = "holds"
            elif iv.lo >= threshold:
                status = "fails"
            else:
                status = None
        else:
            raise ValueError(f"unknown relation {relation!r}")
        if status is not None:
            break
        if precision >= precision_cap:
            status = "inconclusive"
            break
        precision *= 2
    return EstimateCheck(
        name=name,
        n=n,
        j=j,
        lo=iv.lo,
        hi=iv.hi,
        threshold=threshold,
        relation=relation,
        status=status,
        precision=precision,
    )


def _sqrt_interval(iv: Interval, bits: int) -> Interval:
    return Interval(
        sqrt_enclosure(iv.lo, bits).lo,
        sqrt_enclosure(iv.hi, bits).hi,
    )


def verify_appendix_estimates(
    ns: Iterable[int], precision_cap: int = 4096
) -> AppendixEstimateReport:
    """Certify the binomial tail estimates used by the lower-bound proof.

    For each n (all must be >= 1500):
      * central mass: 0.999 < sqrt(pi n) * C(2n,n)/4^n < 1,
      * off-centre mass, j = 1..4: C(2n, n+delta_j) > 0.995 e^(-j^2/32) C(2n, n),
      * window mass at delta_4: above 0.6088, and above 0.5975 without the
        rightmost column.
    Plus, once: the elementary power (1 - j^2/(32 delta))^delta beats
    0.995 e^(-j^2/32) at delta = delta_j(1500).

    Exact rational quantities get zero-width intervals; quantities involving
    pi or e^(-j^2/32) are normalised so the enclosed side carries the
    irrational factor and the threshold stays rational.
    """
    ns = sorted(set(ns))
    if not ns:
        raise ValueError("need at least one n")
    for n in ns:
        if n < MIN_TAIL_N:
            raise ValueError(f"estimates are only claimed for n >= {MIN_TAIL_N}, got {n}")

    checks = []

    def decide(name, n, j, make_interval, threshold, relation):
        checks.append(
            _decide(name, n, j, make_interval, threshold, relation, precision_cap)
        )

    for n in ns:
        r = central_ratio(n)

        def scaled_central(p: int, n=n, r=r) -> Interval:
            root = _sqrt_interval(pi_enclosure(p).scale(n), max(32, 4 * p))
            return root * Interval.point(r)

        decide("central_mass_lower", n, None, scaled_central, Fraction("0.999"), ">")
        decide("central_mass_upper", n, None, scaled_central, Fraction(1), "<")

        for j in TAIL_J:
            delta = tail_offset(j, n)
            ratio = offset_ratio(n, delta)

            def rel_offcentre(p: int, j=j, ratio=ratio) -> Interval:
                growth = exp_enclosure(Fraction(-j * j, 32), p).reciprocal()
                return Interval.point(ratio) * growth

            decide("offcentre_mass", n, j, rel_offcentre, Fraction("0.995"), ">")

        delta4 = tail_offset(4, n)
        full = window_mass(n, -delta4 + 1, delta4)
        trimmed = window_mass(n, -delta4 + 1, delta4 - 1)
        decide(
            "window_mass_full", n, None,
            lambda p, v=full: Interval.point(v), Fraction("0.6088"), ">",
        )
        decide(
            "window_mass_trimmed", n, None,
            lambda p, v=trimmed: Interval.point(v), Fraction("0.5975"), ">",
        )

    for j in TAIL_J:
        delta = tail_offset(j, MIN_TAIL_N)

        def rel_power(p: int, j=j, delta=delta) -> Interval:
            growth = exp_enclosure(Fraction(-j * j, 32), p).reciprocal()
            return Interval.point(tail_power(j, delta)) * growth

        decide("offcentre_power", None, j, rel_power, Fraction("0.995"), ">")

    return AppendixEstimateReport(
        checks=tuple(checks),
        all_hold=all(c.status == "holds" for c in checks),
        conclusive=all(c.status != "inconclusive" for c in checks),
    )


# ---------------------------------------------------------------------------
# Emitters

ALPHA_SWEEP_COLUMNS = "d,tau,alpha_num,alpha_den,alpha_float"
TAU_OPT_COLUMNS = "d,tau_opt,tau_formula,alpha_opt_float,our_bound_float,shearer_bound_float"


def fmt_float(x: float) -> str:
    return f"{x:.15g}"


def write_alpha_sweep_csv(fh: IO[str], d: int, header: bool = True) -> None:
    if header:
        fh.write(ALPHA_SWEEP_COLUMNS + "\n")
    for av in alpha_sweep(d):
        v = av.value
        fh.write(
            f"{d},{av.tau},{v.numerator},{v.denominator},{fmt_float(float(v))}\n"
        )


def write_tau_opt_csv(fh: IO[str], d_values: Iterable[int]) -> list[tuple[int, list[int]]]:
    """Optimal-threshold table; returns [(d, taus)] for any degrees with ties."""
    fh.write(TAU_OPT_COLUMNS + "\n")
    ties = []
    for d in d_values:
        taus = optimal_taus(d)
        if len(taus) > 1:
            ties.append((d, taus))
        tau = taus[0]
        a = alpha_closed_form(tau, d)
        fh.write(
            f"{d},{tau},{tau_formula(d)},{fmt_float(float(a))},"
            f"{fmt_float(threshold_bound(d).to_float())},"
            f"{fmt_float(shearer_bound(d).to_float())}\n"
        )
    return ties


def bound_report_json(report: BoundReport) -> dict:
    return {
        "d_max": report.d_max,
        "all_pass": report.all_pass,
        "equality_degrees": list(report.equality_degrees),
        "checks": [
            {
                "d": c.degree,
                "tau": c.tau,
                "alpha_float": float(c.alpha),
                "bound_float": threshold_bound(c.degree).to_float(),
                "passed": c.passed,
                "equality": c.equality,
            }
            for c in report.checks
        ],
    }


def appendix_report_json(report: AppendixEstimateReport) -> dict:
    return {
        "all_hold": report.all_hold,
        "conclusive": report.conclusive,
        "checks": [
            {
                "name": c.name,
                "n": c.n,
                "j": c.j,
                "lo_float": float(c.lo),
                "hi_float": float(c.hi),
                "threshold": f"{c.threshold.numerator}/{c.threshold.denominator}",
                "relation": c.relation,
                "status": c.status,
                "precision": c.precision,
            }
            for c in report.checks
        ],
    }
