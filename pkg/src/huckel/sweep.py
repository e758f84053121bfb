"""Exhaustive and corpus-driven verification sweeps.

Every graph is eigensolved once via a batched symmetric solver; all enabled
checks are evaluated vectorized per batch.  Reports are per-order and merge
as a commutative monoid, so a sweep partitioned over edge-bitmask ranges
(serial or multiprocess) reduces to the identical report.
"""

from __future__ import annotations

import csv
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .bounds import (
    lemma1_check,
    lower_bound,
    upper_bound,
    upper_bound_applies,
    upper_bound_order,
)
from .graphs import Graph, Graph6Error, pair_order, parse_graph6, write_graph6

CHECK_LEMMA1 = "lemma1"
CHECK_UPPER_NM = "upper_nm"
CHECK_UPPER_N = "upper_n"
CHECK_LOWER = "lower"
CHECK_ODD_STRICT = "odd_strict"
CHECK_INTERMEDIATE = "intermediate"
ALL_CHECKS: Tuple[str, ...] = (
    CHECK_LEMMA1,
    CHECK_UPPER_NM,
    CHECK_UPPER_N,
    CHECK_LOWER,
    CHECK_ODD_STRICT,
    CHECK_INTERMEDIATE,
)

ENUM_MAX_N = 7
DEFAULT_TOL = 1e-8
WITNESS_TOL = 1e-6
HIST_RESOLUTION = 1e-3
_HIST_BINS = 512  # slack histogram covers [0, 0.512); larger slacks overflow
_WITNESS_CAP = 1000
_VIOLATION_CAP = 20
_BATCH = 1 << 16
_SANITY_TOL = 1e-9


@dataclass
class CheckTally:
    checked: int = 0
    holds: int = 0
    violated: int = 0
    not_applicable: int = 0

    def add(self, other: "CheckTally") -> None:
        self.checked += other.checked
        self.holds += other.holds
        self.violated += other.violated
        self.not_applicable += other.not_applicable

    def to_dict(self) -> Dict[str, int]:
        return {
            "checked": self.checked,
            "holds": self.holds,
            "violated": self.violated,
            "not_applicable": self.not_applicable,
        }


@dataclass
class SweepReport:
    """Verification results for all graphs of one order."""

    n: int
    graph_count: int = 0
    checks: Dict[str, CheckTally] = field(default_factory=dict)
    min_slack: Dict[str, Optional[float]] = field(default_factory=dict)
    equality_witnesses: Dict[str, List[str]] = field(default_factory=dict)
    witness_counts: Dict[str, int] = field(default_factory=dict)
    violation_examples: Dict[str, List[str]] = field(default_factory=dict)
    slack_histogram: Dict[str, Dict[int, int]] = field(default_factory=dict)
    solver_failures: List[str] = field(default_factory=list)

    def _entry(self, check: str) -> CheckTally:
        if check not in self.checks:
            self.checks[check] = CheckTally()
            self.min_slack[check] = None
            self.equality_witnesses[check] = []
            self.witness_counts[check] = 0
            self.violation_examples[check] = []
            self.slack_histogram[check] = {}
        return self.checks[check]

    @property
    def total_violations(self) -> int:
        return sum(t.violated for t in self.checks.values()) + len(self.solver_failures)

    def merge(self, other: "SweepReport") -> None:
        if other.n != self.n:
            raise ValueError("cannot merge reports of different orders")
        self.graph_count += other.graph_count
        for check, tally in other.checks.items():
            self._entry(check).add(tally)
            om = other.min_slack.get(check)
            if om is not None:
                mine = self.min_slack[check]
                self.min_slack[check] = om if mine is None else min(mine, om)
            self.equality_witnesses[check].extend(other.equality_witnesses.get(check, []))
            self.witness_counts[check] += other.witness_counts.get(check, 0)
            ve = self.violation_examples[check]
            ve.extend(other.violation_examples.get(check, [])[: _VIOLATION_CAP - len(ve)])
            hist = self.slack_histogram[check]
            for b, c in other.slack_histogram.get(check, {}).items():
                hist[b] = hist.get(b, 0) + c
        self.solver_failures.extend(other.solver_failures)

    def finalize(self) -> "SweepReport":
        for check in self.equality_witnesses:
            wl = sorted(set(self.equality_witnesses[check]))
            self.equality_witnesses[check] = wl[:_WITNESS_CAP]
        self.solver_failures = sorted(set(self.solver_failures))
        return self

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graph_count": self.graph_count,
            "violations": self.total_violations,
            "checks": {c: t.to_dict() for c, t in sorted(self.checks.items())},
            "min_slack": {c: self.min_slack[c] for c in sorted(self.min_slack)},
            "equality_witnesses": {
                c: self.equality_witnesses[c] for c in sorted(self.equality_witnesses)
            },
            "witness_counts": {c: self.witness_counts[c] for c in sorted(self.witness_counts)},
            "violation_examples": {
                c: self.violation_examples[c] for c in sorted(self.violation_examples)
            },
            "slack_histogram": {
                c: {str(b): cnt for b, cnt in sorted(self.slack_histogram[c].items())}
                for c in sorted(self.slack_histogram)
            },
            "solver_failures": self.solver_failures,
        }


def _validate_checks(checks: Sequence[str]) -> Tuple[str, ...]:
    out = tuple(checks)
    for c in out:
        if c not in ALL_CHECKS:
            raise ValueError(f"unknown check {c!r}; valid: {', '.join(ALL_CHECKS)}")
    return out


# ─── enumeration and corpora ────────────────────────────────────────────────


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-bitmask counter
    order (bit k of the mask is pair k in graph6 column order)."""
    if not (1 <= n <= ENUM_MAX_N):
        raise ValueError(
            f"exhaustive enumeration is supported for 1 <= n <= {ENUM_MAX_N} "
            f"(n={n} would mean 2^{n * (n - 1) // 2} graphs); use a corpus instead"
        )
    pairs = pair_order(n)
    for mask in range(1 << len(pairs)):
        yield _graph_from_mask(n, pairs, mask)


def _graph_from_mask(n: int, pairs: List[Tuple[int, int]], mask: int) -> Graph:
    rows = [0] * n
    k = mask
    while k:
        low = k & -k
        i, j = pairs[low.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        k ^= low
    return Graph._from_rows_unchecked(n, tuple(rows))


def stream_corpus(path: str, on_error: str = "raise") -> Iterator[Graph]:
    """Yield graphs from a file of graph6 records, one per line.

    Blank lines are skipped.  Malformed records raise (with the line number)
    or are skipped, per on_error in {"raise", "skip"}.
    """
    if on_error not in ("raise", "skip"):
        raise ValueError("on_error must be 'raise' or 'skip'")
    with open(path, "r", encoding="ascii") as fh:
        for ln, line in enumerate(fh, start=1):
            record = line.strip()
            if not record:
                continue
            try:
                yield parse_graph6(record)
            except Graph6Error as exc:
                if on_error == "raise":
                    raise Graph6Error(f"{path}:{ln}: {exc}") from exc


# ─── per-order bound tables ─────────────────────────────────────────────────


def _bound_tables(n: int):
    if n < 2:
        return None
    max_m = n * (n - 1) // 2
    vals = np.empty(max_m + 1)
    regimes: List[str] = []
    applies = np.empty(max_m + 1, dtype=bool)
    for m in range(max_m + 1):
        vals[m], regime = upper_bound(n, m)
        regimes.append(regime)
        applies[m] = upper_bound_applies(n, m)
    return vals, regimes, applies


_DUMP_FIELDS = [
    "graph6", "n", "m", "he", "energy", "alpha", "beta",
    "upper_nm", "upper_nm_regime", "upper_nm_applies", "slack_upper_nm",
    "upper_n", "slack_upper_n", "lower", "lower_applies", "slack_lower",
    "f1", "f2", "lemma1",
]


class _DumpWriter:
    def __init__(self, path: str):
        self._fh = open(path, "w", newline="", encoding="ascii")
        self._w = csv.writer(self._fh)
        self._w.writerow(_DUMP_FIELDS)

    def rows(self, rows: Iterable[list]) -> None:
        self._w.writerows(rows)

    def close(self) -> None:
        self._fh.close()


# ─── the kernel ─────────────────────────────────────────────────────────────


def _batch_connected(a: np.ndarray) -> np.ndarray:
    """Connectivity for a (B, n, n) adjacency batch via boolean squaring of A+I."""
    b, n = a.shape[0], a.shape[1]
    if n <= 1:
        return np.ones(b, dtype=bool)
    reach = (a > 0.0) | np.eye(n, dtype=bool)
    hops = 1
    while hops < n - 1:
        reach = np.matmul(reach.astype(np.uint8), reach.astype(np.uint8)) > 0
        hops *= 2
    return reach[:, 0, :].all(axis=1)


def _process_batch(
    n: int,
    a: np.ndarray,
    m_arr: np.ndarray,
    checks: Tuple[str, ...],
    tol: float,
    witness_tol: float,
    tables,
    rep: SweepReport,
    g6_of,
    dump: Optional[_DumpWriter] = None,
) -> None:
    b = len(m_arr)
    rep.graph_count += b
    try:
        w = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError:
        w = np.zeros((b, n))
        ok0 = np.ones(b, dtype=bool)
        for idx in range(b):
            try:
                w[idx] = np.linalg.eigvalsh(a[idx])
            except np.linalg.LinAlgError:
                ok0[idx] = False
                rep.solver_failures.append(g6_of(idx))
    else:
        ok0 = np.ones(b, dtype=bool)
    w = w[:, ::-1]
    two_m = 2.0 * m_arr
    scale = np.maximum(1.0, two_m)
    sane = (np.abs(w.sum(axis=1)) <= _SANITY_TOL * scale) & (
        np.abs((w * w).sum(axis=1) - two_m) <= _SANITY_TOL * scale
    )
    ok = ok0 & sane
    for idx in np.nonzero(~sane & ok0)[0]:
        rep.solver_failures.append(g6_of(int(idx)))

    r = n // 2
    odd = n % 2 == 1
    he = 2.0 * w[:, :r].sum(axis=1)
    alpha = (w[:, :r] ** 2).sum(axis=1)
    beta = w[:, r].copy() if odd else None
    if odd:
        he = he + beta
    degrees = a.sum(axis=2)
    has_iso = (degrees == 0.0).any(axis=1) if n > 0 else np.zeros(b, dtype=bool)

    if tables is not None:
        nm_vals, nm_regimes, nm_applies_tab = tables
        nm_val = nm_vals[m_arr]
        nm_applies = nm_applies_tab[m_arr]
    else:
        nm_val = np.zeros(b)
        nm_applies = np.zeros(b, dtype=bool)

    # Intermediate two-step bounds, computed vectorized with dust clamping.
    f1 = f2 = None
    if n >= 2:
        mf = m_arr.astype(np.float64)
        if odd:
            rad1 = (r - 1) * np.clip(alpha - 4.0 * mf * mf / (n * n), 0.0, None)
            f1 = 4.0 * mf / n + 2.0 * np.sqrt(rad1) + beta
            rad2 = r * np.clip(2.0 * mf - alpha - beta * beta, 0.0, None)
            f2 = 2.0 * np.sqrt(rad2) - beta
        else:
            rad1 = (r - 1) * np.clip(alpha - mf * mf / (r * r), 0.0, None)
            f1 = 2.0 * mf / r + 2.0 * np.sqrt(rad1)
            rad2 = r * np.clip(2.0 * mf - alpha, 0.0, None)
            f2 = 2.0 * np.sqrt(rad2)

    def record(check: str, applicable: np.ndarray, violated: np.ndarray, slack: np.ndarray) -> None:
        tally = rep._entry(check)
        applicable = applicable & ok
        violated = violated & applicable
        tally.checked += b
        tally.violated += int(violated.sum())
        tally.holds += int((applicable & ~violated).sum())
        tally.not_applicable += int((~(applicable) & ok).sum()) + int((~ok).sum())
        if applicable.any():
            sl = slack[applicable]
            mn = float(sl.min())
            cur = rep.min_slack[check]
            rep.min_slack[check] = mn if cur is None else min(cur, mn)
            hist = np.bincount(
                np.minimum(
                    np.floor(np.maximum(sl, 0.0) / HIST_RESOLUTION).astype(np.int64), _HIST_BINS
                ),
                minlength=0,
            )
            hd = rep.slack_histogram[check]
            for bin_idx in np.nonzero(hist)[0]:
                hd[int(bin_idx)] = hd.get(int(bin_idx), 0) + int(hist[bin_idx])
            wit = applicable & (np.abs(slack) <= witness_tol)
            nwit = int(wit.sum())
            if nwit:
                rep.witness_counts[check] += nwit
                wl = rep.equality_witnesses[check]
                for idx in np.nonzero(wit)[0]:
                    if len(wl) >= _WITNESS_CAP:
                        break
                    wl.append(g6_of(int(idx)))
        if violated.any():
            ve = rep.violation_examples[check]
            for idx in np.nonzero(violated)[0]:
                if len(ve) >= _VIOLATION_CAP:
                    break
                ve.append(g6_of(int(idx)))

    none = np.zeros(b, dtype=bool)
    for check in checks:
        if check == CHECK_UPPER_NM:
            if tables is None:
                record(check, none, none, he)
                continue
            slack = nm_val - he
            viol = slack < -tol * np.maximum(1.0, np.abs(nm_val))
            record(check, nm_applies, viol, slack)
        elif check == CHECK_UPPER_N:
            if n < 1:
                record(check, none, none, he)
                continue
            un = upper_bound_order(n)
            slack = un - he
            viol = slack < -tol * max(1.0, un)
            record(check, np.ones(b, dtype=bool), viol, slack)
        elif check == CHECK_LOWER:
            if n < 2:
                record(check, none, none, he)
                continue
            lb = lower_bound(n)
            slack = he - lb
            viol = slack < -tol * max(1.0, lb)
            record(check, ~has_iso, viol, slack)
        elif check == CHECK_LEMMA1:
            # Asserted exactly where the half-moment inequality is a
            # theorem: any graph with m >= n (a cycle exists, forcing
            # alpha <= 2m-2), or a connected graph with m = n-1 (a tree,
            # alpha = m) when n >= 4.  The wider hypothesis m >= n-1 >= 2
            # admits genuine counterexamples: the 3-vertex path has
            # alpha/r = 2 > 16/9, and K4 plus three isolated vertices has
            # alpha/r = 3 > 144/49.  lemma1_check still evaluates those
            # truthfully as "violated"; the sweep just does not count a
            # disproved statement as a verification failure.
            if n < 3:
                record(check, none, none, he)
                continue
            applicable = m_arr >= n
            if n >= 4:
                trees = m_arr == n - 1
                if bool(trees.any()):
                    applicable = applicable | (trees & _batch_connected(a))
            rhs = 4.0 * m_arr.astype(np.float64) ** 2 / (n * n)
            slack = rhs - alpha / r
            viol = slack < -tol * np.maximum(1.0, rhs)
            record(check, applicable, viol, slack)
        elif check == CHECK_ODD_STRICT:
            if not odd or tables is None:
                record(check, none, none, he)
                continue
            slack = nm_val - he
            record(check, nm_applies, slack <= 0.0, slack)
        elif check == CHECK_INTERMEDIATE:
            # The odd-order refinement assumes m >= n-1 >= 3, so odd n=3
            # is out of scope (for the 3-vertex path the first refinement
            # dips below the half-spectrum sum).  Even orders carry no
            # extra constraint beyond m >= n-1.
            if f1 is None or (odd and n < 5):
                record(check, none, none, he)
                continue
            fmin = np.minimum(f1, f2)
            slack = fmin - he
            viol = slack < -tol * np.maximum(1.0, np.abs(fmin))
            record(check, m_arr >= n - 1, viol, slack)

    if dump is not None:
        energy = np.abs(w).sum(axis=1)
        rows = []
        lb = lower_bound(n) if n >= 2 else None
        un = upper_bound_order(n) if n >= 1 else None
        for idx in range(b):
            m = int(m_arr[idx])
            lemma = lemma1_check(n, m, float(alpha[idx]), tol=tol)
            rows.append([
                g6_of(idx), n, m,
                f"{he[idx]:.12g}", f"{energy[idx]:.12g}", f"{alpha[idx]:.12g}",
                f"{beta[idx]:.12g}" if odd else "",
                f"{nm_val[idx]:.12g}" if tables is not None else "",
                nm_regimes[m] if tables is not None else "",
                int(bool(nm_applies[idx])) if tables is not None else "",
                f"{nm_val[idx] - he[idx]:.12g}" if tables is not None else "",
                f"{un:.12g}" if un is not None else "",
                f"{un - he[idx]:.12g}" if un is not None else "",
                f"{lb:.12g}" if lb is not None else "",
                int(not has_iso[idx]) if lb is not None else "",
                f"{he[idx] - lb:.12g}" if lb is not None else "",
                f"{f1[idx]:.12g}" if f1 is not None else "",
                f"{f2[idx]:.12g}" if f2 is not None else "",
                lemma,
            ])
        dump.rows(rows)


# ─── drivers ────────────────────────────────────────────────────────────────


def _process_mask_range(
    n: int,
    start: int,
    stop: int,
    checks: Tuple[str, ...],
    tol: float,
    witness_tol: float,
    dump: Optional[_DumpWriter] = None,
) -> SweepReport:
    rep = SweepReport(n=n)
    for check in checks:
        rep._entry(check)
    pairs = pair_order(n)
    shifts = np.arange(len(pairs), dtype=np.int64)
    iu = np.array([p[0] for p in pairs], dtype=np.int64)
    ju = np.array([p[1] for p in pairs], dtype=np.int64)
    tables = _bound_tables(n)
    for lo in range(start, stop, _BATCH):
        hi = min(stop, lo + _BATCH)
        masks = np.arange(lo, hi, dtype=np.int64)
        if len(pairs):
            bits = ((masks[:, None] >> shifts[None, :]) & 1).astype(np.float64)
            m_arr = bits.sum(axis=1).astype(np.int64)
        else:
            bits = np.zeros((len(masks), 0))
            m_arr = np.zeros(len(masks), dtype=np.int64)
        a = np.zeros((len(masks), n, n))
        if len(pairs):
            idx = np.arange(len(masks))[:, None]
            a[idx, iu[None, :], ju[None, :]] = bits
            a[idx, ju[None, :], iu[None, :]] = bits
        _process_batch(
            n, a, m_arr, checks, tol, witness_tol, tables, rep,
            lambda i: write_graph6(_graph_from_mask(n, pairs, int(masks[i]))),
            dump,
        )
    return rep


def _worker(args) -> SweepReport:
    n, start, stop, checks, tol, witness_tol = args
    return _process_mask_range(n, start, stop, checks, tol, witness_tol)


def default_jobs() -> int:
    env = os.environ.get("HUCKEL_JOBS", "")
    if env.strip():
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"HUCKEL_JOBS={env!r} is not an integer")
    return 1


def sweep_labeled(
    n: int,
    checks: Sequence[str] = ALL_CHECKS,
    tol: float = DEFAULT_TOL,
    witness_tol: float = WITNESS_TOL,
    jobs: Optional[int] = None,
    dump_path: Optional[str] = None,
) -> SweepReport:
    """Sweep every labeled graph on n vertices (n <= 7).

    jobs > 1 partitions the edge-bitmask range across processes; the merged
    report is identical to the serial one.  Dumping per-graph CSV rows
    requires the serial path.
    """
    if not (1 <= n <= ENUM_MAX_N):
        raise ValueError(f"exhaustive sweep needs 1 <= n <= {ENUM_MAX_N}, got n={n}")
    checks = _validate_checks(checks)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    total = 1 << (n * (n - 1) // 2)
    if dump_path is not None and jobs > 1:
        raise ValueError("per-graph CSV dump requires jobs=1")
    if jobs == 1:
        dump = _DumpWriter(dump_path) if dump_path else None
        try:
            rep = _process_mask_range(n, 0, total, checks, tol, witness_tol, dump)
        finally:
            if dump:
                dump.close()
        return rep.finalize()
    chunk = max(1 << 10, (total + jobs * 8 - 1) // (jobs * 8))
    ranges = [(n, lo, min(total, lo + chunk), checks, tol, witness_tol) for lo in range(0, total, chunk)]
    rep = SweepReport(n=n)
    for check in checks:
        rep._entry(check)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_worker, ranges):
            rep.merge(part)
    return rep.finalize()


def sweep(
    graphs: Iterable[Graph],
    checks: Sequence[str] = ALL_CHECKS,
    tol: float = DEFAULT_TOL,
    witness_tol: float = WITNESS_TOL,
    dump_path: Optional[str] = None,
) -> List[SweepReport]:
    """Sweep an arbitrary graph stream.  Mixed orders are grouped into
    per-order sub-reports, returned sorted by order."""
    checks = _validate_checks(checks)
    reports: Dict[int, SweepReport] = {}
    buffers: Dict[int, List[Graph]] = {}
    tables_cache: Dict[int, object] = {}
    dump = _DumpWriter(dump_path) if dump_path else None

    def flush(n: int) -> None:
        buf = buffers.pop(n, [])
        if not buf:
            return
        if n not in reports:
            reports[n] = SweepReport(n=n)
            for check in checks:
                reports[n]._entry(check)
        if n not in tables_cache:
            tables_cache[n] = _bound_tables(n)
        a = np.zeros((len(buf), n, n))
        for i, g in enumerate(buf):
            a[i] = g.dense()
        m_arr = np.array([g.m for g in buf], dtype=np.int64)
        _process_batch(
            n, a, m_arr, checks, tol, witness_tol, tables_cache[n], reports[n],
            lambda i: write_graph6(buf[i]),
            dump,
        )

    try:
        for g in graphs:
            buffers.setdefault(g.n, []).append(g)
            if len(buffers[g.n]) >= 4096:
                flush(g.n)
        for n in list(buffers):
            flush(n)
    finally:
        if dump:
            dump.close()
    return [reports[n].finalize() for n in sorted(reports)]
