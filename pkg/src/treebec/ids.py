"""Integrated density of states in the pure hopping convention ``H = |A| I - A``.

Empirical cumulatives of finite volumes, the exact Laplace-transform series
of the unperturbed tree, the spectral-shift law relating perturbed and
unperturbed cumulatives, and the low-energy hidden-band gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.sparse.linalg as spla

from . import graph as gr
from .errors import TreebecError
from .krein import ModelNorm, branch_point
from .spectral import ball_spectrum, extremal_eig, full_spectrum


@dataclass
class IDSEstimate:
    """Cumulative spectral fraction on a fixed energy grid."""

    grid: np.ndarray
    values: np.ndarray
    source: str                 # "empirical(n=..)" or "series"
    delta_shift: float          # band edge minus perturbed norm (<= 0)
    gap_em: float               # hidden-band width


def empirical_ids(spectrum: np.ndarray, grid: np.ndarray, reference_norm: float,
                  gap_em: float = 0.0, source: str = "empirical") -> IDSEstimate:
    """Cumulative fraction of ``reference_norm - eigenvalue`` at or below the grid.

    ``spectrum`` holds adjacency eigenvalues; energies are measured downward
    from the reference norm so the ground state sits at low energy.  Values
    are right-continuous ("count <= x").
    """
    spectrum = np.asarray(spectrum, dtype=np.float64)
    if spectrum.size == 0:
        raise TreebecError("empty spectrum")
    h = np.sort(reference_norm - spectrum)
    values = np.searchsorted(h, np.asarray(grid), side="right") / h.size
    return IDSEstimate(np.asarray(grid, dtype=np.float64), values, source,
                       -gap_em, gap_em)


def default_grid(reference_norm: float, points: int = 2001,
                 spectrum: np.ndarray | None = None) -> np.ndarray:
    """Uniform energy grid over ``[0, 2 reference_norm]``, eigenvalues merged in."""
    grid = np.linspace(0.0, 2.0 * reference_norm, points)
    if spectrum is not None:
        grid = np.union1d(grid, reference_norm - np.asarray(spectrum))
    return grid


class PhiValue(NamedTuple):
    """Truncated one-particle partition series with its geometric tail bound."""

    value: float
    tail_bound: float
    k_max: int

    def __float__(self):
        return self.value


def phi_series(Q: int, beta: float, k_max: int = 200) -> PhiValue:
    """Laplace transform of the unperturbed-tree spectral cumulative.

    ``((Q-2)^2/(Q-1)) sum_{k>=1} sum_{m<=k} (Q-1)^{-k}
    exp(-4 beta sqrt(Q-1) sin^2(m pi / (2(k+1))))``, truncated at ``k_max``
    with tail bound ``((Q-2)^2/(Q-1)) sum_{k>k_max} k (Q-1)^{-k}`` (every
    exponential is at most 1).
    """
    if Q < 3:
        raise TreebecError("the series needs Q >= 3 (degenerate prefactor at Q=2)")
    if beta < 0 or k_max < 1:
        raise TreebecError("need beta >= 0 and k_max >= 1")
    pref = (Q - 2.0) ** 2 / (Q - 1.0)
    scale = 4.0 * beta * math.sqrt(Q - 1.0)
    terms = []
    for k in range(1, k_max + 1):
        m = np.arange(1, k + 1)
        ex = np.exp(-scale * np.sin(m * np.pi / (2.0 * (k + 1))) ** 2)
        terms.append(pref * (Q - 1.0) ** (-k) * math.fsum(ex.tolist()))
    value = math.fsum(terms)
    x = 1.0 / (Q - 1.0)
    tail = pref * x ** (k_max + 1) * ((k_max + 1) - k_max * x) / (1.0 - x) ** 2
    return PhiValue(value, tail, k_max)


def laplace_of_spectrum(spectrum: np.ndarray, reference_norm: float, beta: float) -> float:
    """Empirical Laplace transform ``mean(exp(-beta (reference - eig)))``."""
    h = reference_norm - np.asarray(spectrum, dtype=np.float64)
    return float(np.mean(np.exp(-beta * h)))


def shift_check(kind: gr.Kind, norm: ModelNorm, n_dense: int,
                grid: np.ndarray | None = None,
                mode: gr.Mode = gr.Mode.DIAGONAL_UNIT,
                dense_limit: int = 4096) -> float:
    """Sup-discrepancy between the perturbed cumulative and the shifted unperturbed one.

    Compares ``F_{Y,n}(x)`` against ``F_{X,n}(x + delta)`` with
    ``delta = -gap_em`` on a common grid; decays in ``n`` because the
    perturbation has zero density.
    """
    model = gr.build_model(kind, n_dense, mode)
    if model.vertex_count > dense_limit:
        raise TreebecError(
            f"volume {model.vertex_count} over the dense limit {dense_limit}"
        )
    Q = model.ball.Q
    pert = full_spectrum(model.adjacency, dense_limit=dense_limit)
    unpert = ball_spectrum(Q, n_dense)
    if grid is None:
        # include both jump sets so the sup is taken where it can be attained
        grid = default_grid(norm.lambda_star, spectrum=pert)
        grid = np.union1d(grid, norm.gap_em + branch_point(Q) - unpert)
    fy = empirical_ids(pert, grid, norm.lambda_star, norm.gap_em).values
    fx_shift = empirical_ids(unpert, grid - norm.gap_em, branch_point(Q)).values
    return float(np.max(np.abs(fy - fx_shift)))


def hidden_gap(kind: gr.Kind, norm: ModelNorm, n_range,
               mode: gr.Mode = gr.Mode.DIAGONAL_UNIT, tol: float = 1e-11):
    """Low-energy trend ``lam* - lam_max(n)`` (to 0) and the hidden width ``E_m``."""
    trend = []
    for n in n_range:
        model = gr.build_model(kind, n, mode)
        lam, _ = extremal_eig(model.adjacency, tol=tol)
        trend.append((n, norm.lambda_star - lam))
    return trend, norm.gap_em


def low_energy_spectrum(model: gr.PerturbedModel, threshold: float,
                        k_start: int = 16, k_cap: int = 512) -> np.ndarray:
    """All adjacency eigenvalues strictly above ``threshold``, by sparse Lanczos.

    Grows ``k`` until the smallest converged value drops below the threshold,
    so the returned set is complete.
    """
    n = model.vertex_count
    k = min(k_start, n - 2)
    if n <= 2048:
        vals = full_spectrum(model.adjacency, dense_limit=2048)
        return vals[vals > threshold]
    v0 = np.full(n, 1.0 / math.sqrt(n))
    while True:
        vals = spla.eigsh(model.adjacency, k=k, which="LA", v0=v0, tol=1e-11,
                          return_eigenvectors=False)
        vals = np.sort(vals)
        if vals[0] <= threshold:
            return vals[vals > threshold]
        if k >= min(k_cap, n - 2):
            raise TreebecError(
                f"more than {k} eigenvalues above {threshold}; raise the cap"
            )
        k = min(2 * k, n - 2)


def gap_mass(kind: gr.Kind, norm: ModelNorm, n_range, window=(0.05, 0.9),
             mode: gr.Mode = gr.Mode.DIAGONAL_UNIT):
    """Fraction of perturbed eigenvalues with energy inside the hidden band.

    The window is ``(window[0], window[1] * E_m)`` in energy; the count is
    exact (sparse extremal eigenvalues), and the fraction tends to zero: the
    hidden band carries no spectral mass in the infinite volume.
    """
    lo, hi = window[0], window[1] * norm.gap_em
    rows = []
    for n in n_range:
        model = gr.build_model(kind, n, mode)
        vals = low_energy_spectrum(model, norm.lambda_star - norm.gap_em * 0.999)
        h = norm.lambda_star - vals
        count = int(np.sum((h > lo) & (h < hi)))
        rows.append((n, count, count / model.vertex_count))
    return rows
