"""Sparse symmetric spectral computations for tree-ball adjacencies.

Covers extremal eigenpairs (Lanczos with residual verification), rooted
positive eigenvectors (power iteration), full spectra of small volumes,
exact spectra of unperturbed balls via the radial sector decomposition,
shifted positive-definite solves for resolvents, and Chebyshev-expanded
unitary time evolution for the pure hopping Hamiltonian ``H = |A| I - A``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.linalg import eigh_tridiagonal
from scipy.special import jv

from .errors import ConvergenceError, DegreeCapError, PreconditionError, SizeLimitError

DENSE_LIMIT = 4096


@dataclass
class SpectralSummary:
    """Extremal eigendata of one finite volume."""

    lambda_max: float
    pf_vector: np.ndarray       # positive, normalized to 1 at the root
    residual: float
    spectrum: np.ndarray | None = None


def _as_operator(adjacency):
    if sp.issparse(adjacency):
        return adjacency
    return np.asarray(adjacency, dtype=np.float64)


def _residual(adjacency, lam: float, v: np.ndarray) -> float:
    r = adjacency @ v - lam * v
    return float(np.linalg.norm(r) / np.linalg.norm(v))


def extremal_eig(adjacency, tol: float = 1e-10, maxiter: int | None = None):
    """Top (algebraically largest) eigenpair of a symmetric nonnegative matrix.

    Uses implicitly restarted Lanczos with a deterministic start vector and
    verifies the residual ``|A v - lam v| / |v|`` before returning.

    Returns
    -------
    (lambda_max, vector) with the residual guaranteed below
    ``tol * max(1, lambda_max)``.
    """
    A = _as_operator(adjacency)
    n = A.shape[0]
    if n == 1:
        val = float(A[0, 0]) if not sp.issparse(A) else float(A.toarray()[0, 0])
        return val, np.ones(1)
    if n <= 8:
        dense = A.toarray() if sp.issparse(A) else A
        w, V = np.linalg.eigh(dense)
        return float(w[-1]), V[:, -1]
    v0 = np.full(n, 1.0 / np.sqrt(n))
    try:
        vals, vecs = spla.eigsh(
            A, k=1, which="LA", v0=v0, tol=tol * 1e-2,
            maxiter=maxiter or max(2000, 20 * n),
        )
    except spla.ArpackNoConvergence as exc:
        raise ConvergenceError(f"Lanczos did not converge: {exc}") from exc
    lam = float(vals[0])
    v = vecs[:, 0]
    res = _residual(A, lam, v)
    if res > tol * max(1.0, abs(lam)):
        raise ConvergenceError(
            f"extremal eigenpair residual {res:.3e} above tolerance", residual=res
        )
    return lam, v


def pf_vector(adjacency, root: int = 0, tol: float = 1e-10, max_rounds: int = 200_000):
    """Strictly positive top eigenvector, rescaled to 1 at ``root``.

    Starts from the Lanczos vector and polishes with shifted power iteration,
    which keeps every iterate entrywise positive (trees are bipartite, so the
    shift is required for convergence of plain power iteration).
    """
    A = _as_operator(adjacency)
    n = A.shape[0]
    if n == 1:
        return np.ones(1)
    lam, v = extremal_eig(A, tol=tol)
    v = np.abs(v)
    v[v == 0] = 1e-300
    shift = 1.0 + abs(lam)
    for _ in range(max_rounds):
        res = _residual(A, lam, v)
        if res <= tol * max(1.0, abs(lam)) and v.min() > 0:
            break
        w = A @ v + shift * v
        v = w / np.linalg.norm(w)
    else:
        raise ConvergenceError("positive eigenvector refinement did not converge",
                               residual=_residual(A, lam, v))
    if v[root] <= 0:
        raise ConvergenceError("root entry of the positive eigenvector vanished")
    return v / v[root]


def spectral_summary(adjacency, root: int = 0, tol: float = 1e-10,
                     with_spectrum: bool = False) -> SpectralSummary:
    lam, _ = extremal_eig(adjacency, tol=tol)
    v = pf_vector(adjacency, root=root, tol=tol)
    spec = full_spectrum(adjacency) if with_spectrum else None
    return SpectralSummary(lam, v, _residual(adjacency, lam, v), spec)


def full_spectrum(adjacency, dense_limit: int = DENSE_LIMIT) -> np.ndarray:
    """All eigenvalues (ascending) of the dense symmetrization."""
    A = _as_operator(adjacency)
    n = A.shape[0]
    if n > dense_limit:
        raise SizeLimitError(f"dense spectrum of size {n} exceeds limit {dense_limit}")
    dense = A.toarray() if sp.issparse(A) else np.array(A, dtype=np.float64)
    dense = 0.5 * (dense + dense.T)
    return np.linalg.eigvalsh(dense)


def ball_spectrum(Q: int, n: int) -> np.ndarray:
    """Exact adjacency spectrum (ascending) of the unperturbed radius-``n`` ball.

    The rooted ball is spherically homogeneous, so its adjacency splits into
    one mixed-coupling radial chain at the root plus difference sectors: at
    depth ``j >= 1`` there are ``N_{j-1} (b_{j-1} - 1)`` copies of the uniform
    chain of length ``n - j + 1`` with coupling ``sqrt(Q-1)``, whose
    eigenvalues are ``2 sqrt(Q-1) cos(m pi / (len + 1))``.  This reproduces
    the dense spectrum exactly at any radius, in O(n^2) time.
    """
    if n == 0:
        return np.zeros(1)
    g = np.sqrt(Q - 1.0)
    parts = []
    counts = []
    off = np.concatenate([[0.0], [np.sqrt(Q)], np.full(n - 1, g)])[1:]
    root_chain = eigh_tridiagonal(np.zeros(n + 1), off, eigvals_only=True)
    parts.append(root_chain)
    counts.append(np.ones(n + 1, dtype=np.int64))
    for j in range(1, n + 1):
        branching = Q if j == 1 else Q - 1
        mult = (branching - 1) if j == 1 else (Q * (Q - 1) ** (j - 2)) * (Q - 2)
        if mult <= 0:
            continue
        length = n - j + 1
        m = np.arange(1, length + 1)
        eigs = 2.0 * g * np.cos(m * np.pi / (length + 1))
        parts.append(eigs)
        counts.append(np.full(length, mult, dtype=np.int64))
    values = np.concatenate(parts)
    reps = np.concatenate(counts)
    out = np.repeat(values, reps)
    out.sort()
    return out


def resolvent_solve(adjacency, lam: float, b: np.ndarray, tol: float = 1e-10,
                    maxiter: int = 200_000, lambda_max: float | None = None,
                    return_info: bool = False):
    """Solve ``(lam I - A) x = b`` by conjugate gradients.

    Requires ``lam`` above the top eigenvalue; indefiniteness encountered
    during the iteration raises :class:`PreconditionError`.  The returned
    solution satisfies ``|(lam I - A) x - b| <= tol |b|``.
    """
    A = _as_operator(adjacency)
    if lambda_max is not None and lam <= lambda_max:
        raise PreconditionError(
            f"shift {lam} not above the top eigenvalue {lambda_max}"
        )
    if np.iscomplexobj(b):
        xr = resolvent_solve(A, lam, b.real, tol, maxiter, lambda_max, return_info)
        xi = resolvent_solve(A, lam, b.imag, tol, maxiter, lambda_max, return_info)
        if return_info:
            return xr[0] + 1j * xi[0], xr[1] + xi[1], max(xr[2], xi[2])
        return xr + 1j * xi

    def matvec(v):
        return lam * v - A @ v

    b = np.asarray(b, dtype=np.float64)
    norm_b = np.linalg.norm(b)
    if norm_b == 0:
        return (np.zeros_like(b), 0, 0.0) if return_info else np.zeros_like(b)
    x = np.zeros_like(b)
    total_iters = 0
    for _restart in range(4):
        r = b - matvec(x)
        p = r.copy()
        rs = float(r @ r)
        for _ in range(maxiter):
            Ap = matvec(p)
            pAp = float(p @ Ap)
            if pAp <= 0:
                raise PreconditionError(
                    f"shifted operator indefinite at lam={lam} (p^T M p = {pAp:.3e})"
                )
            alpha = rs / pAp
            x += alpha * p
            r -= alpha * Ap
            rs_new = float(r @ r)
            total_iters += 1
            if np.sqrt(rs_new) <= 0.25 * tol * norm_b:
                break
            p = r + (rs_new / rs) * p
            rs = rs_new
        true_res = float(np.linalg.norm(b - matvec(x)))
        if true_res <= tol * norm_b:
            if return_info:
                return x, total_iters, true_res / norm_b
            return x
    raise ConvergenceError(
        f"conjugate gradients stalled at relative residual {true_res / norm_b:.3e}",
        residual=true_res / norm_b, iterations=total_iters,
    )


def chebyshev_apply(adjacency, coeffs: np.ndarray, scale: float, u: np.ndarray) -> np.ndarray:
    """Clenshaw evaluation of ``sum_k coeffs[k] T_k(A / scale) u``."""
    A = _as_operator(adjacency)
    bk1 = np.zeros_like(u, dtype=np.result_type(u.dtype, coeffs.dtype))
    bk2 = bk1.copy()
    inv = 1.0 / scale
    for c in coeffs[:0:-1]:
        bk1, bk2 = c * u + 2.0 * inv * (A @ bk1) - bk2, bk1
    return coeffs[0] * u + inv * (A @ bk1) - bk2


def chebyshev_coeffs(fn, half_width: float, degree: int) -> np.ndarray:
    """Chebyshev interpolation coefficients of ``fn`` on ``[-half_width, half_width]``."""
    k = np.arange(degree + 1)
    nodes = np.cos(np.pi * (k + 0.5) / (degree + 1))
    vals = fn(half_width * nodes)
    phases = np.cos(np.pi * np.outer(k, k + 0.5) / (degree + 1))
    coeffs = (2.0 / (degree + 1)) * phases @ vals
    coeffs[0] *= 0.5
    return coeffs


def bounded_function_apply(adjacency, fn, half_width: float, u: np.ndarray,
                           tol: float = 1e-11, degree_cap: int = 4096) -> np.ndarray:
    """Apply an analytic ``fn(A)`` to ``u`` through adaptive Chebyshev expansion.

    ``fn`` must be analytic on a neighbourhood of ``[-half_width, half_width]``,
    which must contain the spectrum of ``A``.
    """
    degree = 32
    while degree <= degree_cap:
        coeffs = chebyshev_coeffs(fn, half_width, degree)
        tail = np.max(np.abs(coeffs[-4:]))
        if tail <= tol * max(1.0, np.max(np.abs(coeffs))):
            return chebyshev_apply(adjacency, coeffs, half_width, u)
        degree *= 2
    raise DegreeCapError(
        f"Chebyshev degree cap {degree_cap} too small for the requested tolerance"
    )


def evolve(adjacency, t: float, u: np.ndarray, tol: float = 1e-9,
           norm_hint: float | None = None, degree_cap: int = 16384) -> np.ndarray:
    """Unitary evolution ``exp(i t H) u`` with ``H = |A| I - A``.

    Expands ``exp(-i t A)`` in Chebyshev polynomials with Bessel-function
    coefficients; the expansion degree adapts to ``|t| |A|`` and the result
    is checked for norm preservation.
    """
    A = _as_operator(adjacency)
    if norm_hint is None:
        norm_hint, _ = extremal_eig(A, tol=1e-10)
    scale = abs(norm_hint) * (1.0 + 1e-12) + 1e-300
    z = t * scale
    norm_u = np.linalg.norm(u)
    if norm_u == 0:
        return np.zeros(len(u), dtype=np.complex128)
    degree = max(24, int(1.3 * abs(z)) + 32)
    while degree <= degree_cap:
        k = np.arange(degree + 1)
        coeffs = 2.0 * (-1j) ** k * jv(k, z)
        coeffs[0] *= 0.5
        psi = np.exp(1j * t * norm_hint) * chebyshev_apply(A, coeffs, scale, u.astype(np.complex128))
        defect = abs(np.linalg.norm(psi) - norm_u) / norm_u
        if defect <= 0.1 * tol:
            return psi
        degree *= 2
    raise DegreeCapError(
        f"evolution degree cap {degree_cap} exceeded for |t||A| = {abs(z):.1f}; raise the cap"
    )
