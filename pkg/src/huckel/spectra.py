"""Adjacency spectra, graph energy, and the Huckel (half-filled) energy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .graphs import Graph

# Relative tolerances: eigensolver residual, and the trace/Frobenius sanity
# checks every spectrum must satisfy (trace 0, sum of squares 2m).
DEFAULT_EIG_TOL = 1e-12
INVARIANT_TOL = 1e-9


class SpectralError(RuntimeError):
    """Eigensolver failure or a spectrum violating its defining invariants."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of an adjacency matrix, sorted non-increasing."""

    values: np.ndarray
    residual: float

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class EnergyValues:
    energy: float
    huckel: float
    alpha: float
    beta: Optional[float]
    r: int


def eigenvalues(g: Graph, tol: float = DEFAULT_EIG_TOL) -> Spectrum:
    """Full spectrum of g via a backward-stable symmetric eigensolver.

    The residual max_i ||A v_i - w_i v_i||_inf is computed from the returned
    eigenpairs and checked against tol*n*max(1, |w_1|); trace and Frobenius
    identities are enforced as well.  Failures raise SpectralError.
    """
    n = g.n
    if n == 0:
        return Spectrum(values=np.zeros(0), residual=0.0)
    a = g.dense()
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise SpectralError(f"eigensolver did not converge for n={n}: {exc}") from exc
    residual = float(np.abs(a @ v - v * w).max())
    w = w[::-1].copy()
    lam1 = abs(float(w[0]))
    if residual > tol * n * max(1.0, lam1):
        raise SpectralError(f"residual {residual:.3e} exceeds {tol:.1e}*n*max(1,|w1|) for n={n}")
    two_m = 2.0 * g.m
    if abs(float(w.sum())) > INVARIANT_TOL * max(1.0, two_m):
        raise SpectralError(f"trace {w.sum():.3e} deviates from 0 beyond tolerance")
    if abs(float((w * w).sum()) - two_m) > INVARIANT_TOL * max(1.0, two_m):
        raise SpectralError(f"Frobenius sum {np.dot(w, w):.6e} deviates from 2m={two_m}")
    w.flags.writeable = False
    return Spectrum(values=w, residual=residual)


def _values(s) -> np.ndarray:
    return s.values if isinstance(s, Spectrum) else np.asarray(s, dtype=np.float64)


def energy(s: Spectrum) -> float:
    """Graph energy: sum of absolute eigenvalues."""
    return float(np.abs(_values(s)).sum())


def huckel_energy(s: Spectrum) -> float:
    """Half-filled energy: 2*sum of the top floor(n/2) eigenvalues, plus the
    median eigenvalue once when n is odd."""
    w = _values(s)
    n = len(w)
    r = n // 2
    he = 2.0 * float(w[:r].sum())
    if n % 2 == 1:
        he += float(w[r])
    return he


def alpha_beta(s: Spectrum) -> Tuple[float, Optional[float]]:
    """Sum of squares of the top floor(n/2) eigenvalues, and for odd n the
    (floor(n/2)+1)-th eigenvalue."""
    w = _values(s)
    n = len(w)
    r = n // 2
    alpha = float((w[:r] ** 2).sum())
    beta = float(w[r]) if n % 2 == 1 else None
    return alpha, beta


def energy_values(s: Spectrum) -> EnergyValues:
    alpha, beta = alpha_beta(s)
    return EnergyValues(
        energy=energy(s),
        huckel=huckel_energy(s),
        alpha=alpha,
        beta=beta,
        r=len(_values(s)) // 2,
    )


def group_spectrum(values: Sequence[float], gap: float = 1e-6) -> List[Tuple[float, int]]:
    """Collapse a sorted spectrum into (representative, multiplicity) runs.

    Consecutive values closer than gap join the same run; the representative
    is the run mean.
    """
    out: List[Tuple[float, int]] = []
    run: List[float] = []
    for x in values:
        if run and abs(run[-1] - float(x)) > gap:
            out.append((sum(run) / len(run), len(run)))
            run = []
        run.append(float(x))
    if run:
        out.append((sum(run) / len(run), len(run)))
    return out
