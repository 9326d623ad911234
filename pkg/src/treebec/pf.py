"""Closed-form positive eigenvector weights of the infinite perturbed graphs.

The weight factorizes as ``v(x) = a(lam*)^{d(x,S)} w(y(x))`` through the
distance to the base and the closest base point.  On the base, ``w`` is
linear along the ray model and polynomially-damped geometric on the subtree
model; the same subtree profile, re-rooted anywhere, gives the non-unique
family of positive eigenvectors of the unperturbed tree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graph as gr
from .errors import TreebecError
from .krein import ModelNorm, a_mu
from .spectral import pf_vector


def closed_w(kind: gr.Kind, dist_to_root: int, lambda_star: float) -> float:
    """Base weight ``w`` at distance ``dist_to_root`` from the root along the base.

    Ray model: ``(1 - a(lam*)) d + 1``; subtree model of degree ``q``:
    ``(1 + d (q-2)/q) (q-1)^{-d/2}`` (independent of ``lam*``).
    """
    if kind is None:
        raise TreebecError("unperturbed model has no base weight")
    d = dist_to_root
    if isinstance(kind, gr.HQ):
        a_star, _ = a_mu(lambda_star, kind.Q)
        return (1.0 - a_star) * d + 1.0
    return phi_family(kind.q, d)


def phi_family(q: int, dist: int) -> float:
    """Positive-eigenvector profile ``(1 + d (q-2)/q)(q-1)^{-d/2}`` on the degree-``q`` tree.

    Centered at any root it solves the eigen equation at the spectral radius
    ``2 sqrt(q-1)``, which is why the positive eigenvector of the infinite
    tree is not unique.
    """
    return (1.0 + (q - 2.0) / q * dist) * (q - 1.0) ** (-0.5 * dist)


@dataclass
class PFWeight:
    """Lazy closed-form weight evaluator bound to one model and its norm."""

    model: gr.PerturbedModel
    lambda_star: float

    def __post_init__(self):
        self.a_star, _ = a_mu(self.lambda_star, self.model.ball.Q)

    def value_at(self, x: int) -> float:
        bd = self.model.base_distance(x)
        w = closed_w(self.model.kind, int(self.model.ball.depth[bd.anchor]), self.lambda_star)
        return self.a_star ** bd.dist * w

    def values(self) -> np.ndarray:
        """Closed-form weight restricted to every vertex of the built ball."""
        depth_anchor = self.model.ball.depth[self.model.anchor]
        if isinstance(self.model.kind, gr.HQ):
            w = (1.0 - self.a_star) * depth_anchor + 1.0
        else:
            q = self.model.kind.q
            w = (1.0 + (q - 2.0) / q * depth_anchor) * (q - 1.0) ** (-0.5 * depth_anchor)
        return self.a_star ** self.model.dist_to_base * w


def closed_v(model: gr.PerturbedModel, x: int, lambda_star: float) -> float:
    """Closed-form weight ``a*^{d(x,S)} w(y(x))`` at one vertex."""
    return PFWeight(model, lambda_star).value_at(x)


def eigen_defect(model: gr.PerturbedModel, norm: ModelNorm, x: int) -> float:
    """Residual of the infinite-graph eigen equation at an off-base vertex.

    Enumerates the true neighbours of ``x`` (parent plus ``Q-1`` children,
    all present in the ball when ``depth(x) < radius``) and returns
    ``|sum_nbr v - lam* v(x)|``.
    """
    ball = model.ball
    if model.in_base[x]:
        raise TreebecError("eigen_defect probes off-base vertices only")
    if ball.depth[x] >= ball.radius:
        raise TreebecError("vertex too close to the ball boundary to enumerate neighbours")
    weight = PFWeight(model, norm.lambda_star)
    nbr_sum = weight.value_at(int(ball.parent[x]))
    nbr_sum += sum(weight.value_at(int(c)) for c in ball.children(x))
    return abs(nbr_sum - norm.lambda_star * weight.value_at(x))


@dataclass
class RatioRow:
    n: int
    r1: float          # |v restricted|^2 |S_n| / |Lambda_n|  (closed form)
    r2: float          # |v_n|^2 |S_n| / |Lambda_n|           (finite volumes)
    r3: float          # |v_n|^2 / |Lambda_n|
    vn_norm2: float
    base_size: int
    volume: int


def ratio_series(kind: gr.Kind, norm: ModelNorm, n_range, mode: gr.Mode = gr.Mode.DIAGONAL_UNIT,
                 with_finite: bool = True, tol: float = 1e-10) -> list[RatioRow]:
    """Normality diagnostics per volume: closed-form and finite-volume ratios."""
    rows = []
    for n in n_range:
        model = gr.build_model(kind, n, mode)
        v_closed = PFWeight(model, norm.lambda_star).values()
        s, vol = model.base_set.size, model.vertex_count
        r1 = float(v_closed @ v_closed) * s / vol
        if with_finite:
            vn = pf_vector(model.adjacency, tol=tol)
            vn2 = float(vn @ vn)
        else:
            vn2 = float("nan")
        rows.append(RatioRow(n, r1, vn2 * s / vol, vn2 / vol, vn2, s, vol))
    return rows


def vn_vs_v(kind: gr.Kind, norm: ModelNorm, probes, n_range,
            mode: gr.Mode = gr.Mode.DIAGONAL_UNIT, tol: float = 1e-11):
    """Finite-volume eigenvector against the closed-form weight at probe vertices.

    Returns rows ``(n, values, abs_errors, vn_norm2)``; probe indices must lie
    in the smallest ball of the range (prefix indexing makes them stable).
    """
    rows = []
    for n in n_range:
        model = gr.build_model(kind, n, mode)
        vn = pf_vector(model.adjacency, tol=tol)
        weight = PFWeight(model, norm.lambda_star)
        vals = np.array([vn[p] for p in probes])
        errs = np.array([abs(vn[p] - weight.value_at(p)) for p in probes])
        rows.append((n, vals, errs, float(vn @ vn)))
    return rows


def domination_check(kind: gr.Kind, norm: ModelNorm, n_range,
                     mode: gr.Mode = gr.Mode.DIAGONAL_UNIT,
                     slack: float = 1e-8, tol: float = 1e-11):
    """Whether ``v_n <= v`` on the base, per volume (reported, never assumed)."""
    rows = []
    for n in n_range:
        model = gr.build_model(kind, n, mode)
        vn = pf_vector(model.adjacency, tol=tol)
        weight = PFWeight(model, norm.lambda_star)
        ok = all(
            vn[s] <= weight.value_at(int(s)) * (1.0 + slack)
            for s in model.base_set
        )
        rows.append((n, bool(ok)))
    return rows
