"""Finite balls of homogeneous Cayley trees and their base-subtree perturbations.

A ball of radius ``n`` of the degree-``Q`` tree is built breadth-first from a
fixed root, so the vertex ordering of radius ``n`` is an exact prefix of the
ordering of radius ``n + 1``.  Perturbed models add unit diagonal weight (or
doubled edge weight) along a root-anchored base subtree: a geodesic ray for
the ray-perturbed family, a ball of the degree-``q`` tree for the subtree
family.
"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass, field
from enum import Enum
from math import isqrt, sqrt

import numpy as np
import scipy.sparse as sp

from .errors import CapacityError, InvalidKindError, TreebecError

DEFAULT_CAPACITY = 2_000_000


class Mode(Enum):
    """How the base subtree perturbs the adjacency."""

    DIAGONAL_UNIT = "diag"
    EDGE_DOUBLE = "edge2"


@dataclass(frozen=True)
class HQ:
    """Tree of degree ``Q`` perturbed along a root-anchored geodesic ray."""

    Q: int


@dataclass(frozen=True)
class GQq:
    """Tree of degree ``Q`` perturbed along a root-anchored degree-``q`` subtree."""

    Q: int
    q: int


Kind = HQ | GQq | None


def kind_token(kind: Kind) -> str:
    if kind is None:
        return "-"
    if isinstance(kind, HQ):
        return "H"
    return f"G{kind.q}"


def max_degree_for_subtree(q: int) -> int:
    """Largest tree degree for which the degree-``q`` base still binds a state.

    Equals ``floor((2*sqrt(q-1) + 1 + sqrt(4*sqrt(q-1) + 1))**2 / 4) + 1``.
    """
    r = sqrt(q - 1)
    val = (2.0 * r + 1.0 + sqrt(4.0 * r + 1.0)) ** 2 / 4.0
    return int(val) + 1


MAX_DEGREE_RAY = 7  # ray perturbation binds a state only for Q <= 7


def ball_vertex_count(Q: int, n: int) -> int:
    """Number of vertices in the radius-``n`` ball of the degree-``Q`` tree."""
    if n == 0:
        return 1
    if Q == 2:
        return 2 * n + 1
    return 1 + Q * ((Q - 1) ** n - 1) // (Q - 2)


@dataclass(frozen=True)
class TreeBall:
    """Radius-``n`` ball of the degree-``Q`` tree with breadth-first indexing.

    ``parent[v]`` is the parent of vertex ``v`` (``-1`` for the root),
    ``depth[v]`` its distance from the root, and ``adjacency`` the symmetric
    sparse adjacency matrix with unit edge weights.
    """

    Q: int
    radius: int
    vertex_count: int
    parent: np.ndarray
    depth: np.ndarray
    adjacency: sp.csr_matrix
    level_offsets: np.ndarray  # offsets[k] = index of first vertex at depth k

    def first_child(self, v: int) -> int:
        """Index of the first (lowest-index) child of ``v``; -1 for leaves."""
        d = int(self.depth[v])
        if d >= self.radius:
            return -1
        k = v - int(self.level_offsets[d])
        step = self.Q if d == 0 else self.Q - 1
        return int(self.level_offsets[d + 1]) + k * step

    def children(self, v: int) -> np.ndarray:
        d = int(self.depth[v])
        if d >= self.radius:
            return np.empty(0, dtype=np.int64)
        c0 = self.first_child(v)
        step = self.Q if d == 0 else self.Q - 1
        return np.arange(c0, c0 + step, dtype=np.int64)


def build_ball(Q: int, n: int, capacity: int = DEFAULT_CAPACITY) -> TreeBall:
    """Build the radius-``n`` ball of the degree-``Q`` tree, rooted at index 0."""
    if Q < 2:
        raise InvalidKindError(f"vertex degree must be >= 2, got Q={Q}")
    if n < 0:
        raise InvalidKindError(f"radius must be >= 0, got n={n}")
    count = ball_vertex_count(Q, n)
    if count > capacity:
        raise CapacityError(
            f"ball(Q={Q}, n={n}) has {count} vertices, over the capacity {capacity}"
        )

    level_sizes = [1] + [Q * (Q - 1) ** (k - 1) for k in range(1, n + 1)]
    offsets = np.zeros(n + 2, dtype=np.int64)
    np.cumsum(level_sizes, out=offsets[1:])
    assert offsets[-1] == count

    parent = np.full(count, -1, dtype=np.int64)
    depth = np.zeros(count, dtype=np.int64)
    for k in range(1, n + 1):
        lo, hi = offsets[k], offsets[k + 1]
        step = Q if k == 1 else Q - 1
        parent[lo:hi] = offsets[k - 1] + np.arange(hi - lo, dtype=np.int64) // step
        depth[lo:hi] = k

    child = np.arange(1, count, dtype=np.int64)
    rows = np.concatenate([parent[1:], child])
    cols = np.concatenate([child, parent[1:]])
    data = np.ones(rows.size, dtype=np.float64)
    adjacency = sp.csr_matrix((data, (rows, cols)), shape=(count, count))
    return TreeBall(Q, n, count, parent, depth, adjacency, offsets)


@dataclass(frozen=True)
class BaseDistance:
    """Distance from a vertex to the base set and the unique closest anchor."""

    dist: int
    anchor: int


@dataclass(frozen=True)
class PerturbedModel:
    """A tree ball together with a perturbation along its base subtree."""

    kind: Kind
    mode: Mode
    ball: TreeBall
    base_set: np.ndarray          # sorted indices of the base subtree in the ball
    adjacency: sp.csr_matrix      # perturbed sparse symmetric matrix
    dist_to_base: np.ndarray      # d(x, S) per vertex
    anchor: np.ndarray            # unique closest base vertex per vertex
    in_base: np.ndarray = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.ball.vertex_count

    @property
    def model_key(self) -> str:
        return f"{kind_token(self.kind)}:Q{self.ball.Q}:{self.mode.value}"

    def base_distance(self, x: int) -> BaseDistance:
        """Minimal distance ``d(x, S)`` and its unique anchor on the base."""
        if not 0 <= x < self.vertex_count:
            raise TreebecError(f"vertex {x} out of range")
        return BaseDistance(int(self.dist_to_base[x]), int(self.anchor[x]))


def _base_indicator(ball: TreeBall, kind: Kind) -> np.ndarray:
    """Boolean mask of the root-anchored base subtree inside the ball."""
    in_base = np.zeros(ball.vertex_count, dtype=bool)
    if kind is None:
        return in_base
    in_base[0] = True
    if isinstance(kind, HQ):
        # geodesic ray: always the first child, i.e. the first vertex per level
        in_base[ball.level_offsets[: ball.radius + 1]] = True
        return in_base
    q = kind.q
    current = np.array([0], dtype=np.int64)
    for depth in range(ball.radius):
        keep = q if depth == 0 else q - 1
        step = ball.Q if depth == 0 else ball.Q - 1
        first = ball.level_offsets[depth + 1] + (current - ball.level_offsets[depth]) * step
        nxt = (first[:, None] + np.arange(keep)).ravel()
        in_base[nxt] = True
        current = np.sort(nxt)
    return in_base


def _validate_kind(ball: TreeBall, kind: Kind) -> None:
    if kind is None:
        return
    if kind.Q != ball.Q:
        raise InvalidKindError(f"kind degree Q={kind.Q} does not match ball Q={ball.Q}")
    if isinstance(kind, GQq):
        if kind.q < 2:
            raise InvalidKindError(f"base subtree degree must be >= 2, got q={kind.q}")
        if kind.q >= kind.Q:
            raise InvalidKindError(f"base degree q={kind.q} must be smaller than Q={kind.Q}")
        qmax = max_degree_for_subtree(kind.q)
        if kind.Q > qmax:
            warnings.warn(
                f"G(Q={kind.Q}, q={kind.q}) lies outside the bound-state range "
                f"Q <= {qmax}; spectral gap results do not apply",
                stacklevel=3,
            )
    else:
        if not (2 < kind.Q <= MAX_DEGREE_RAY):
            warnings.warn(
                f"H(Q={kind.Q}) lies outside the bound-state range 2 < Q <= {MAX_DEGREE_RAY}; "
                "spectral gap results do not apply",
                stacklevel=3,
            )


def perturb(ball: TreeBall, kind: Kind, mode: Mode = Mode.DIAGONAL_UNIT) -> PerturbedModel:
    """Attach the base-subtree perturbation of ``kind`` to a built ball.

    ``Mode.DIAGONAL_UNIT`` adds a unit diagonal entry on every base vertex;
    ``Mode.EDGE_DOUBLE`` doubles the weight of every base-internal edge.
    """
    _validate_kind(ball, kind)
    in_base = _base_indicator(ball, kind)
    base_set = np.flatnonzero(in_base).astype(np.int64)

    adjacency = ball.adjacency
    if base_set.size:
        if mode is Mode.DIAGONAL_UNIT:
            diag = sp.csr_matrix(
                (np.ones(base_set.size), (base_set, base_set)),
                shape=adjacency.shape,
            )
            adjacency = (adjacency + diag).tocsr()
        else:
            non_root = base_set[base_set != 0]
            rows = np.concatenate([ball.parent[non_root], non_root])
            cols = np.concatenate([non_root, ball.parent[non_root]])
            extra = sp.csr_matrix(
                (np.ones(rows.size), (rows, cols)), shape=adjacency.shape
            )
            adjacency = (adjacency + extra).tocsr()

    dist = np.zeros(ball.vertex_count, dtype=np.int64)
    anchor = np.arange(ball.vertex_count, dtype=np.int64)
    if kind is None:
        dist[:] = -1
        anchor[:] = -1
    else:
        # top-down: a non-base vertex reaches the base through its parent
        for k in range(1, ball.radius + 1):
            lo, hi = ball.level_offsets[k], ball.level_offsets[k + 1]
            idx = np.arange(lo, hi)
            off = ~in_base[idx]
            par = ball.parent[idx[off]]
            dist[idx[off]] = dist[par] + 1
            anchor[idx[off]] = anchor[par]
    return PerturbedModel(kind, mode, ball, base_set, adjacency, dist, anchor, in_base)


def build_model(
    kind: Kind,
    n: int,
    mode: Mode = Mode.DIAGONAL_UNIT,
    Q: int | None = None,
    capacity: int = DEFAULT_CAPACITY,
) -> PerturbedModel:
    """Convenience: build the ball and perturb it in one call."""
    if kind is None and Q is None:
        raise InvalidKindError("unperturbed model needs an explicit Q")
    degree = Q if kind is None else kind.Q
    return perturb(build_ball(degree, n, capacity=capacity), kind, mode)


def tree_distance(ball: TreeBall, x: int, y: int) -> int:
    """Graph distance between two vertices of the ball (ascend to the meet)."""
    dx, dy = int(ball.depth[x]), int(ball.depth[y])
    d = 0
    while dx > dy:
        x = int(ball.parent[x])
        dx -= 1
        d += 1
    while dy > dx:
        y = int(ball.parent[y])
        dy -= 1
        d += 1
    while x != y:
        x = int(ball.parent[x])
        y = int(ball.parent[y])
        d += 2
    return d


def dump_model(model: PerturbedModel) -> str:
    """Serialize a model to the line-oriented text format (round-trip exact)."""
    ball = model.ball
    out = io.StringIO()
    out.write(
        f"{ball.Q} {ball.radius} {kind_token(model.kind)} "
        f"{model.mode.value if model.kind is not None else '-'} {ball.vertex_count}\n"
    )
    in_base = model.in_base
    for v in range(1, ball.vertex_count):
        out.write(f"{v} {ball.parent[v]} {ball.depth[v]} {int(in_base[v])}\n")
    return out.getvalue()


def load_model(text: str) -> PerturbedModel:
    """Rebuild a model from :func:`dump_model` output and verify it."""
    lines = text.strip().splitlines()
    head = lines[0].split()
    Q, n = int(head[0]), int(head[1])
    token, mode_token, count = head[2], head[3], int(head[4])
    ball = build_ball(Q, n)
    if ball.vertex_count != count:
        raise TreebecError(f"vertex count mismatch: header {count}, rebuilt {ball.vertex_count}")
    if token == "-":
        kind: Kind = None
    elif token == "H":
        kind = HQ(Q)
    elif token.startswith("G"):
        kind = GQq(Q, int(token[1:]))
    else:
        raise TreebecError(f"unknown kind token {token!r}")
    mode = Mode.DIAGONAL_UNIT if mode_token in ("diag", "-") else Mode.EDGE_DOUBLE
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        model = perturb(ball, kind, mode)
    for line in lines[1:]:
        v, p, d, flag = (int(t) for t in line.split())
        if ball.parent[v] != p or ball.depth[v] != d or int(model.in_base[v]) != flag:
            raise TreebecError(f"inconsistent dump line for vertex {v}")
    return model
