"""Sharp upper and lower bounds on the Huckel energy, with equality tags.

Two-parameter (order and size) upper bounds with an exact integer threshold
deciding which closed form applies, order-only upper bounds obtained by
maximizing over the size, the 2*sqrt(n-1) lower bound for graphs without
isolated vertices, the intermediate two-step bounds f1/f2, and the
half-spectrum moment inequality used to derive them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Set, Tuple

from .graphs import Graph, stats
from .spectra import EnergyValues, Spectrum, eigenvalues, energy_values

# Radicands within [-CLAMP_TOL*scale, 0) are rounding dust and clamp to zero;
# anything more negative is a caller error.
CLAMP_TOL = 1e-9

LEMMA_HOLDS = "holds"
LEMMA_VIOLATED = "violated"
LEMMA_NOT_APPLICABLE = "not_applicable"

REGIME_FIRST = "first"
REGIME_SECOND = "second"


def _checked_sqrt(x: float, scale: float, what: str) -> float:
    if x < 0.0:
        if x >= -CLAMP_TOL * max(1.0, scale):
            return 0.0
        raise ValueError(f"negative radicand {x:.6e} in {what}")
    return math.sqrt(x)


def _validate_nm(n: int, m, parity: int) -> None:
    if n < 2 or n % 2 != parity:
        raise ValueError(f"n={n} must be {'even' if parity == 0 else 'odd'} and >= 2")
    if m < 0 or m > n * (n - 1) // 2:
        raise ValueError(f"m={m} out of range for n={n}")


def _upper_even_value(n: int, m: float, first: bool) -> float:
    if first:
        rad = 2.0 * m * (n - 2) * (n * n - n - 2.0 * m)
        return 2.0 * m / (n - 1) + _checked_sqrt(rad, rad + 1.0, "even first-regime bound") / (n - 1)
    rad = m * n * (n * n - 2.0 * m)
    return 2.0 / n * _checked_sqrt(rad, rad + 1.0, "even second-regime bound")


def _upper_odd_value(n: int, m: float, first: bool) -> float:
    if first:
        rad = 2.0 * m * n * (n * n - 3 * n + 1) * (n * n - n - 2.0 * m)
        return 2.0 * m / (n - 1) + _checked_sqrt(rad, rad + 1.0, "odd first-regime bound") / (n * (n - 1))
    rad = 2.0 * m * (2 * n - 1) * (n * n - 2.0 * m)
    return _checked_sqrt(rad, rad + 1.0, "odd second-regime bound") / n


def upper_bound_even(n: int, m: int) -> Tuple[float, str]:
    """Upper bound on HE for even n, with the regime tag that applied.

    The regime threshold m <= n^3/(2(n+2)) is decided exactly on integers.
    """
    _validate_nm(n, m, 0)
    first = 2 * m * (n + 2) <= n ** 3
    return _upper_even_value(n, m, first), (REGIME_FIRST if first else REGIME_SECOND)


def upper_bound_odd(n: int, m: int) -> Tuple[float, str]:
    """Upper bound on HE for odd n, with the regime tag that applied.

    The regime threshold m <= n^2(n-3)^2/(2(n^2-4n+11)) is decided exactly
    on integers.
    """
    _validate_nm(n, m, 1)
    first = 2 * m * (n * n - 4 * n + 11) <= n * n * (n - 3) ** 2
    return _upper_odd_value(n, m, first), (REGIME_FIRST if first else REGIME_SECOND)


def upper_bound(n: int, m: int) -> Tuple[float, str]:
    """Parity dispatcher for the two-parameter upper bound."""
    return upper_bound_even(n, m) if n % 2 == 0 else upper_bound_odd(n, m)


def upper_bound_applies(n: int, m: int) -> bool:
    """Whether the two-parameter bound is asserted for this (n, m).

    The even-order bound holds for every graph; the odd-order one is only
    claimed for m >= n-1 (it genuinely fails below that, e.g. two disjoint
    edges plus an isolated vertex at n=5, m=2).
    """
    return True if n % 2 == 0 else m >= n - 1


def upper_bound_order_even(n: int) -> float:
    """Order-only upper bound for even n: (n/2)(1 + sqrt(n-1))."""
    if n < 2 or n % 2:
        raise ValueError(f"n={n} must be even and >= 2")
    return n / 2.0 * (1.0 + math.sqrt(n - 1.0))


def upper_bound_order_odd(n: int) -> float:
    """Order-only upper bound for odd n: (n/2)(1 + sqrt(n) - 1/sqrt(n))."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n={n} must be odd and >= 1")
    rn = math.sqrt(float(n))
    return n / 2.0 * (1.0 + rn - 1.0 / rn)


def upper_bound_order(n: int) -> float:
    return upper_bound_order_even(n) if n % 2 == 0 else upper_bound_order_odd(n)


def lower_bound(n: int) -> float:
    """Lower bound 2*sqrt(n-1) on HE for graphs without isolated vertices,
    attained exactly by the star."""
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    return 2.0 * math.sqrt(n - 1.0)


def intermediate_bounds_even(n: int, m: int, alpha: float) -> Tuple[float, float]:
    """Two-step bounds for even n: f1 from the top half-spectrum moment,
    f2 from the bottom half-spectrum.  HE <= min(f1, f2) whenever m >= n-1."""
    _validate_nm(n, m, 0)
    if alpha > 2.0 * m + CLAMP_TOL * max(1.0, 2.0 * m):
        raise ValueError(f"alpha={alpha} exceeds 2m={2 * m}")
    r = n // 2
    f1 = 2.0 * m / r + 2.0 * _checked_sqrt(
        (r - 1) * (alpha - m * m / float(r * r)), max(1.0, alpha), "even f1"
    )
    f2 = 2.0 * _checked_sqrt(r * (2.0 * m - alpha), max(1.0, 2.0 * m), "even f2")
    return f1, f2


def intermediate_bounds_odd(n: int, m: int, alpha: float, beta: float) -> Tuple[float, float]:
    """Two-step bounds for odd n >= 3, analogous to the even case but
    carrying the median eigenvalue beta.

    The values are always computable, but min(f1, f2) dominates the
    half-spectrum energy only under the hypothesis m >= n-1 >= 3, i.e.
    odd n >= 5 (at n=3 the 3-vertex path already slips below f1).
    """
    _validate_nm(n, m, 1)
    if n < 3:
        raise ValueError("odd intermediates need n >= 3")
    if alpha + beta * beta > 2.0 * m + CLAMP_TOL * max(1.0, 2.0 * m):
        raise ValueError(f"alpha+beta^2={alpha + beta * beta} exceeds 2m={2 * m}")
    r = (n - 1) // 2
    f1 = (
        4.0 * m / n
        + 2.0 * _checked_sqrt((r - 1) * (alpha - 4.0 * m * m / float(n * n)), max(1.0, alpha), "odd f1")
        + beta
    )
    f2 = 2.0 * _checked_sqrt(r * (2.0 * m - alpha - beta * beta), max(1.0, 2.0 * m), "odd f2") - beta
    return f1, f2


def lemma1_check(n: int, m: int, alpha: float, tol: float = 1e-8) -> str:
    """Tri-state check of the half-spectrum moment inequality
    alpha/r <= 4m^2/n^2, evaluated when m >= n-1 >= 2.

    Returns "holds", "violated", or "not_applicable".  This evaluates the
    inequality truthfully rather than asserting it: the stated hypothesis
    admits genuine counterexamples, so "violated" is a correct answer
    there, not an error.  The 3-vertex path has alpha/r = 2 > 16/9, and
    K4 plus three isolated vertices has alpha/r = 3 > 144/49.  The
    inequality is a theorem for m >= n, and for connected graphs with
    m = n-1 once n >= 4.
    """
    if n < 3 or m < n - 1:
        return LEMMA_NOT_APPLICABLE
    r = n // 2
    rhs = 4.0 * m * m / float(n * n)
    return LEMMA_HOLDS if alpha / r <= rhs + tol * max(1.0, rhs) else LEMMA_VIOLATED


# ─── per-graph report ───────────────────────────────────────────────────────


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    energies: EnergyValues
    upper_nm: Optional[float]
    upper_nm_regime: Optional[str]
    upper_nm_applies: bool
    upper_n: Optional[float]
    lower: Optional[float]
    lower_applies: bool
    inter_f1: Optional[float]
    inter_f2: Optional[float]
    lemma1: str
    slack_upper: Optional[float]
    slack_lower: Optional[float]
    has_isolated: bool


def bound_report(g: Graph, spectrum: Optional[Spectrum] = None) -> BoundReport:
    """Evaluate every bound against one graph's spectrum."""
    st = stats(g)
    n, m = g.n, st.m
    s = spectrum if spectrum is not None else eigenvalues(g)
    ev = energy_values(s)
    upper_nm = regime = None
    f1 = f2 = None
    if n >= 2:
        upper_nm, regime = upper_bound(n, m)
        if n % 2 == 0:
            f1, f2 = intermediate_bounds_even(n, m, ev.alpha)
        elif n >= 3:
            f1, f2 = intermediate_bounds_odd(n, m, ev.alpha, ev.beta)
    upper_n = upper_bound_order(n) if n >= 1 else None
    lower = lower_bound(n) if n >= 2 else None
    lower_applies = n >= 2 and not st.has_isolated
    return BoundReport(
        n=n,
        m=m,
        energies=ev,
        upper_nm=upper_nm,
        upper_nm_regime=regime,
        upper_nm_applies=n >= 2 and upper_bound_applies(n, m),
        upper_n=upper_n,
        lower=lower,
        lower_applies=lower_applies,
        inter_f1=f1,
        inter_f2=f2,
        lemma1=lemma1_check(n, m, ev.alpha),
        slack_upper=None if upper_nm is None else upper_nm - ev.huckel,
        slack_lower=None if lower is None else ev.huckel - lower,
        has_isolated=st.has_isolated,
    )


def classify_equality(report: BoundReport, tol: float = 1e-6) -> Set[str]:
    """Tags for bounds met with equality, at relative tolerance
    tol*max(1, bound)."""
    tags: Set[str] = set()
    he = report.energies.huckel
    if report.upper_nm is not None and abs(report.upper_nm - he) <= tol * max(1.0, report.upper_nm):
        tags.add("upper_nm_tight")
    if report.upper_n is not None and abs(report.upper_n - he) <= tol * max(1.0, report.upper_n):
        tags.add("upper_n_tight")
    if report.lower is not None and abs(he - report.lower) <= tol * max(1.0, report.lower):
        tags.add("lower_tight")
    return tags


def scan_order_bound(n: int) -> dict:
    """Scan the two-parameter bound over every integer m and compare with the
    order-only bound.

    The order bound is the maximum over real m of the bound's narrow-regime
    branch, so the comparison tracks that branch separately: the first-regime
    integer scan stays below the order bound, and evaluating the narrow branch
    at the real optimizer reproduces the order bound to rounding error.  The
    first-regime scan peaks within one edge of the rounded real optimizer
    whenever that optimizer lies inside the regime (always for even orders;
    for odd orders from n = 9 on).  For even orders the full scan stays below
    the order bound as well; for odd orders the wide-regime branch is a weaker
    bound that can exceed the order bound (both still hold for every graph),
    so scan_max may be larger there.
    """
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    even = n % 2 == 0
    best_val, best_m = -1.0, -1
    best_val_first, best_m_first = -1.0, -1
    for m in range(n * (n - 1) // 2 + 1):
        val, regime = upper_bound(n, m)
        if val > best_val:
            best_val, best_m = val, m
        if regime == REGIME_FIRST and val > best_val_first:
            best_val_first, best_m_first = val, m
    # The real optimizer is always evaluated on the narrow branch: its
    # unconstrained real-m maximum is exactly the order bound.  (At odd
    # n in {5, 7} the optimizer lies outside the branch's integer regime,
    # yet the algebraic identity still holds.)
    if even:
        m_opt = n * (n - 1 + math.sqrt(n - 1.0)) / 4.0
        val_at_opt = _upper_even_value(n, m_opt, True)
        order = upper_bound_order_even(n)
    else:
        m_opt = n * (n - 1 + math.sqrt(float(n))) / 4.0
        val_at_opt = _upper_odd_value(n, m_opt, True)
        order = upper_bound_order_odd(n)
    return {
        "n": n,
        "order_bound": order,
        "scan_max": best_val,
        "scan_argmax": best_m,
        "scan_max_first": best_val_first,
        "scan_argmax_first": best_m_first,
        "optimal_m": m_opt,
        "value_at_optimal_m": val_at_opt,
    }
