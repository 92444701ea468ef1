"""Floating-point rigidity machinery.

Rigidity matrix, infinitesimal rigidity, equilibrium stresses, the randomized
stress-matrix test for generic global rigidity, and a Levenberg-Marquardt
realization solver used to cross-check the exact enumeration.

Positions are ``(n, d)`` float arrays whose rows follow ``graph.vertex_ids``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .core import Configuration, Framework, Graph, RigidityError

RANK_TOL = 1e-9


class DegenerateSpan(RigidityError, ValueError):
    pass


class TooFewVertices(RigidityError, ValueError):
    pass


class NoConvergence(RigidityError):
    """Raised by :func:`solve_realization`; ``result`` holds the best iterate."""

    def __init__(self, result: "SolverResult"):
        super().__init__(f"no convergence after {result.iterations} iterations (residual {result.residual:.3e})")
        self.result = result


@dataclass(frozen=True)
class RealFramework:
    graph: Graph
    positions: np.ndarray

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        if pos.ndim != 2 or pos.shape[0] != self.graph.n:
            raise ValueError(f"positions must have shape (n={self.graph.n}, d)")
        if not np.all(np.isfinite(pos)):
            raise ValueError("positions must be finite")
        object.__setattr__(self, "positions", pos)

    @property
    def dim(self) -> int:
        return self.positions.shape[1]

    @classmethod
    def from_exact(cls, f: Framework) -> "RealFramework":
        return cls(f.graph, config_to_array(f.config, f.graph.vertex_ids))


def config_to_array(config: Configuration, vertex_ids: Sequence[int] | None = None) -> np.ndarray:
    vids = config.vertex_ids if vertex_ids is None else vertex_ids
    return np.array([[float(c) for c in config[v]] for v in vids], dtype=float).reshape(len(vids), config.dim)


def _real(f) -> RealFramework:
    return f if isinstance(f, RealFramework) else RealFramework.from_exact(f)


def _edge_index(graph: Graph) -> np.ndarray:
    index = {v: k for k, v in enumerate(graph.vertex_ids)}
    return np.array([(index[i], index[j]) for i, j in graph.edges], dtype=np.intp).reshape(-1, 2)


def numeric_rank(m: np.ndarray, tol: float = RANK_TOL) -> int:
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def rigidity_matrix(f) -> np.ndarray:
    """|E| x d*n matrix; row {i,j} holds p_i - p_j in i's block and p_j - p_i in j's."""
    f = _real(f)
    n, d = f.positions.shape
    e = _edge_index(f.graph)
    r = np.zeros((len(e), n * d))
    rows = np.arange(len(e))
    diff = f.positions[e[:, 0]] - f.positions[e[:, 1]]
    for k in range(d):
        r[rows, e[:, 0] * d + k] = diff[:, k]
        r[rows, e[:, 1] * d + k] = -diff[:, k]
    return r


def affine_span_dim(positions: np.ndarray, tol: float = RANK_TOL) -> int:
    if len(positions) == 0:
        return -1
    centered = positions - positions[0]
    scale = max(1.0, float(np.abs(positions).max()))
    s = np.linalg.svd(centered, compute_uv=False)
    return int(np.sum(s > tol * scale))


def is_infinitesimally_rigid(f) -> bool:
    f = _real(f)
    n, d = f.positions.shape
    if n < d + 1 or affine_span_dim(f.positions) < d:
        raise DegenerateSpan(f"{n} joints do not affinely span R^{d}")
    return numeric_rank(rigidity_matrix(f)) == d * n - d * (d + 1) // 2


def equilibrium_stress_basis(f) -> list:
    """Orthonormal basis of the left null space of the rigidity matrix."""
    r = rigidity_matrix(f)
    m = r.shape[0]
    if m == 0:
        return []
    u, s, _ = np.linalg.svd(r, full_matrices=True)
    rk = int(np.sum(s > RANK_TOL * s[0])) if s.size and s[0] > 0 else 0
    return [u[:, k].copy() for k in range(rk, m)]


def stress_residuals(f, stress: np.ndarray) -> np.ndarray:
    """Per-vertex imbalance sum_j w_ij (p_i - p_j), shape (n, d)."""
    f = _real(f)
    e = _edge_index(f.graph)
    out = np.zeros_like(f.positions)
    force = stress[:, None] * (f.positions[e[:, 0]] - f.positions[e[:, 1]])
    np.add.at(out, e[:, 0], force)
    np.add.at(out, e[:, 1], -force)
    return out


def stress_matrix(graph: Graph, stress: np.ndarray) -> np.ndarray:
    """n x n matrix with -w_ij off the diagonal on edges and zero row sums."""
    n = graph.n
    e = _edge_index(graph)
    omega = np.zeros((n, n))
    omega[e[:, 0], e[:, 1]] = -stress
    omega[e[:, 1], e[:, 0]] = -stress
    omega[np.diag_indices(n)] = -omega.sum(axis=1)
    return omega


def dyadic_sample(rng: np.random.Generator, shape, bits: int = 20) -> np.ndarray:
    """Uniform samples on the dyadic grid of [-1, 1]; exact in binary."""
    scale = 2**bits
    return rng.integers(-scale, scale, size=shape, endpoint=True).astype(float) / scale


@dataclass(frozen=True)
class GenericRigidityResult:
    globally_rigid: bool
    caveat: str  # "certified" or "not-observed"
    trials: int
    seed: int
    stress_rank: int
    target_rank: int

    def __bool__(self):
        return self.globally_rigid

    def as_dict(self) -> dict:
        return {
            "globally_rigid": self.globally_rigid,
            "caveat": self.caveat,
            "trials": self.trials,
            "seed": self.seed,
            "best_stress_rank": self.stress_rank,
            "target_stress_rank": self.target_rank,
        }


def generic_global_rigidity(g: Graph, d: int, trials: int = 32, seed: int = 0) -> GenericRigidityResult:
    """Randomized stress-matrix test for generic global rigidity in R^d.

    A stress matrix of rank n - d - 1 at a random configuration certifies the
    graph; failure in every trial only makes rigidity unlikely, which is
    reported through ``caveat == "not-observed"``.
    """
    n = g.n
    if n < d + 2:
        raise TooFewVertices(f"need at least d + 2 = {d + 2} vertices, got {n}")
    if trials < 1:
        raise ValueError("trials must be positive")
    target = n - d - 1
    rng = np.random.default_rng(seed)
    best = 0
    for _ in range(trials):
        x = dyadic_sample(rng, (n, d))
        basis = equilibrium_stress_basis(RealFramework(g, x))
        if not basis:
            continue
        coeffs = rng.standard_normal(len(basis))
        w = np.array(basis).T @ coeffs
        rk = numeric_rank(stress_matrix(g, w))
        best = max(best, rk)
        if rk == target:
            return GenericRigidityResult(True, "certified", trials, seed, rk, target)
    return GenericRigidityResult(False, "not-observed", trials, seed, best, target)


# -- realization solver ------------------------------------------------------

@dataclass(frozen=True)
class SolverParams:
    max_iterations: int = 200
    residual_tolerance: float = 1e-20
    damping_initial: float = 1e-3
    seed: int = 0

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if not self.residual_tolerance > 0:
            raise ValueError("residual_tolerance must be positive")
        if not self.damping_initial > 0:
            raise ValueError("damping_initial must be positive")


@dataclass(frozen=True)
class SolverResult:
    positions: np.ndarray
    residual: float
    iterations: int
    converged: bool
    history: tuple = field(default=(), repr=False)


def _residuals(x: np.ndarray, e: np.ndarray, target: np.ndarray) -> np.ndarray:
    diff = x[e[:, 0]] - x[e[:, 1]]
    return np.einsum("ij,ij->i", diff, diff) - target


def _target_vector(g: Graph, target) -> np.ndarray:
    if isinstance(target, Mapping):
        keys = {tuple(sorted(k)) for k in target}
        if keys != set(g.edges):
            raise ValueError("target lengths must cover exactly the graph's edges")
        lookup = {tuple(sorted(k)): float(v) for k, v in target.items()}
        return np.array([lookup[e] for e in g.edges])
    if hasattr(target, "lengths"):
        return _target_vector(g, target.lengths)
    arr = np.asarray(target, dtype=float)
    if arr.shape != (len(g.edges),):
        raise ValueError("target lengths must cover exactly the graph's edges")
    return arr


def solve_realization(g: Graph, target, init: np.ndarray, params: SolverParams = SolverParams()) -> SolverResult:
    """Levenberg-Marquardt on squared-length residuals ||p_i - p_j||^2 - l_e^2.

    ``target`` holds squared lengths (a mapping edge -> value, an
    EdgeLengthProfile, or an array in ``g.edges`` order). Returns once the
    objective sum of squared residuals drops to ``params.residual_tolerance``;
    raises :class:`NoConvergence` otherwise.
    """
    e = _edge_index(g)
    t = _target_vector(g, target)
    x = np.array(init, dtype=float, copy=True)
    n, d = x.shape
    if n != g.n:
        raise ValueError("init must have one row per vertex")
    lam = params.damping_initial
    r = _residuals(x, e, t)
    cost = float(r @ r)
    history = [cost]
    it = 0
    while cost > params.residual_tolerance and it < params.max_iterations:
        it += 1
        jac = 2.0 * rigidity_matrix(RealFramework(g, x))
        jtj = jac.T @ jac
        grad = jac.T @ r
        if not np.any(grad):
            break
        diag = np.diag(jtj).copy()
        diag[diag == 0] = 1.0
        accepted = False
        while lam < 1e16:
            step = np.linalg.solve(jtj + lam * np.diag(diag), -grad)
            cand = x + step.reshape(n, d)
            rc = _residuals(cand, e, t)
            cc = float(rc @ rc)
            if cc < cost:
                x, r, cost = cand, rc, cc
                lam = max(lam / 3.0, 1e-15)
                accepted = True
                break
            lam *= 4.0
        if not accepted:
            break
        history.append(cost)
    result = SolverResult(x, cost, it, cost <= params.residual_tolerance, tuple(history))
    if not result.converged:
        raise NoConvergence(result)
    return result


def best_isometry_distance(c1, c2) -> float:
    """RMS point distance after optimal orthogonal alignment (reflections allowed)."""
    a = c1 if isinstance(c1, np.ndarray) else config_to_array(c1)
    b = c2 if isinstance(c2, np.ndarray) else config_to_array(c2)
    if a.shape != b.shape:
        raise ValueError(f"cannot align shapes {a.shape} and {b.shape}")
    a = a - a.mean(axis=0)
    b = b - b.mean(axis=0)
    u, _, vt = np.linalg.svd(a.T @ b)
    aligned = a @ (u @ vt)
    return float(np.sqrt(np.mean(np.sum((aligned - b) ** 2, axis=1))))


def multistart_realizations(
    g: Graph,
    target,
    starts: int,
    dim: int,
    params: SolverParams = SolverParams(),
    box: float = 2.0,
    workers: int = 1,
) -> list:
    """Run the solver from ``starts`` random initial configurations.

    Start ``k`` draws its initial point uniformly from [-box, box]^(n*dim)
    using a stream seeded by ``(params.seed, k)``. Returns one
    :class:`SolverResult` per start, in start order; failed starts carry
    ``converged=False``.
    """

    def run(k: int) -> SolverResult:
        rng = np.random.default_rng([params.seed, k])
        init = rng.uniform(-box, box, size=(g.n, dim))
        try:
            return solve_realization(g, target, init, params)
        except NoConvergence as exc:
            return exc.result

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, range(starts)))
    return [run(k) for k in range(starts)]
