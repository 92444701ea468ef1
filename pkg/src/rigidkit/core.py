"""Exact bar-and-joint geometry over the rationals.

Graphs, configurations and frameworks are immutable values. Coordinates are
:class:`fractions.Fraction` instances and lengths are always *squared*
lengths, so every comparison made here is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]
Edge = tuple  # tuple[int, int], smaller id first


class RigidityError(Exception):
    """Base class for errors raised by rigidkit."""


class DimensionMismatch(RigidityError, ValueError):
    pass


class GraphMismatch(RigidityError, ValueError):
    pass


class AffineSpanTooSmall(RigidityError, ValueError):
    pass


class NotAHyperplane(RigidityError, ValueError):
    pass


def to_rational(value) -> Fraction:
    """Parse ``value`` as an exact rational.

    Accepts ints, Fractions and strings such as ``"21/20"``, ``"-0.25"`` or
    ``"−3/4"`` (unicode minus). Floats are rejected; pass their decimal
    string instead.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def vector(*coords) -> tuple:
    return tuple(to_rational(c) for c in coords)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def normalize_edge(i: int, j: int) -> Edge:
    if i == j:
        raise ValueError(f"self-loop at vertex {i}")
    return (i, j) if i < j else (j, i)


# -- exact linear algebra ----------------------------------------------------

def _rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(_rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine span; -1 for no points."""
    if not points:
        return -1
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


# -- value types -------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on positive integer vertex ids.

    Vertex ids are kept sorted ascending; edges are deduplicated pairs with the
    smaller id first, sorted lexicographically.
    """

    vertex_ids: tuple
    edges: tuple

    def __init__(self, vertex_ids: Iterable[int], edges: Iterable[Sequence[int]] = ()):
        vids = tuple(sorted(set(int(v) for v in vertex_ids)))
        for v in vids:
            if v <= 0:
                raise ValueError(f"vertex ids must be positive, got {v}")
        vset = set(vids)
        es = set()
        for e in edges:
            i, j = (int(x) for x in e)
            if i not in vset or j not in vset:
                raise ValueError(f"edge {{{i},{j}}} references an unknown vertex")
            es.add(normalize_edge(i, j))
        object.__setattr__(self, "vertex_ids", vids)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def _adjacency(self) -> Mapping[int, frozenset]:
        adj: dict[int, set] = {v: set() for v in self.vertex_ids}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return MappingProxyType({v: frozenset(n) for v, n in adj.items()})

    def neighbors(self, v: int) -> frozenset:
        return self._adjacency[v]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        drop = {normalize_edge(*e) for e in removed}
        return Graph(self.vertex_ids, (e for e in self.edges if e not in drop))

    def with_edges(self, added: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.vertex_ids, list(self.edges) + [tuple(e) for e in added])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph(keep, (e for e in self.edges if e[0] in keep and e[1] in keep))

    @classmethod
    def complete(cls, vertex_ids: Iterable[int]) -> "Graph":
        vids = sorted(set(vertex_ids))
        return cls(vids, ((a, b) for k, a in enumerate(vids) for b in vids[k + 1:]))


@dataclass(frozen=True, eq=False)
class Configuration:
    """Assignment of a point with ``dim`` rational coordinates to each vertex."""

    dim: int
    points: Mapping[int, tuple]

    def __init__(self, dim: int, points: Mapping[int, Sequence]):
        if dim < 1:
            raise ValueError("dimension must be positive")
        pts = {}
        for v, p in points.items():
            coords = tuple(to_rational(c) for c in p)
            if len(coords) != dim:
                raise DimensionMismatch(f"point {v} has {len(coords)} coordinates, expected {dim}")
            pts[int(v)] = coords
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", MappingProxyType(dict(sorted(pts.items()))))

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.dim == other.dim and dict(self.points) == dict(other.points)

    def __hash__(self):
        return hash((self.dim, tuple(self.points.items())))

    def __getitem__(self, v: int) -> tuple:
        return self.points[v]

    def __repr__(self):
        body = ", ".join(
            f"{v}: ({', '.join(format_rational(c) for c in p)})" for v, p in self.points.items()
        )
        return f"Configuration(dim={self.dim}, {{{body}}})"

    @property
    def vertex_ids(self) -> tuple:
        return tuple(self.points)

    def replace(self, updates: Mapping[int, Sequence]) -> "Configuration":
        pts = dict(self.points)
        pts.update(updates)
        return Configuration(self.dim, pts)

    @cached_property
    def _scaled(self) -> tuple[int, dict, np.ndarray]:
        # Integer coordinates over a common denominator; object dtype whenever
        # pairwise products could overflow int64.
        den = 1
        for p in self.points.values():
            for c in p:
                den = lcm(den, c.denominator)
        ints = [[int(c * den) for c in p] for p in self.points.values()]
        peak = max((abs(x) for row in ints for x in row), default=0)
        safe = 4 * peak * peak * self.dim < 2**31
        arr = np.array(ints, dtype=np.int64 if safe else object).reshape(len(ints), self.dim)
        index = {v: k for k, v in enumerate(self.points)}
        return den, index, arr

    def scaled_squared_distances(self, pairs: Sequence[Edge]) -> tuple[np.ndarray, int]:
        """Squared distances for ``pairs`` as integers, plus the common scale.

        The true squared distance of ``pairs[k]`` is ``values[k] / scale``.
        """
        den, index, arr = self._scaled
        if len(pairs) == 0:
            return np.zeros(0, dtype=arr.dtype), den * den
        idx = np.array([(index[i], index[j]) for i, j in pairs], dtype=np.intp)
        diff = arr[idx[:, 0]] - arr[idx[:, 1]]
        return (diff * diff).sum(axis=1), den * den


def _same_squared_lengths(a: Configuration, b: Configuration, pairs: Sequence[Edge]) -> bool:
    va, sa = a.scaled_squared_distances(pairs)
    vb, sb = b.scaled_squared_distances(pairs)
    if va.dtype != object and vb.dtype != object and sa < 2**31 and sb < 2**31:
        return bool(np.array_equal(va * sb, vb * sa))
    return all(int(x) * sb == int(y) * sa for x, y in zip(va, vb))


@dataclass(frozen=True)
class Framework:
    graph: Graph
    config: Configuration

    def __post_init__(self):
        if set(self.config.points) != set(self.graph.vertex_ids):
            raise ValueError("configuration must cover exactly the graph's vertices")

    @property
    def dim(self) -> int:
        return self.config.dim


@dataclass(frozen=True)
class EdgeLengthProfile:
    dim: int
    lengths: Mapping[Edge, Fraction]

    def __getitem__(self, edge: Sequence[int]) -> Fraction:
        return self.lengths[normalize_edge(*edge)]

    def __len__(self):
        return len(self.lengths)


@dataclass(frozen=True)
class AffineMap:
    """x -> matrix @ x + translation, with an invertible rational matrix."""

    dim: int
    matrix: tuple
    translation: tuple

    def __init__(self, matrix: Sequence[Sequence], translation: Sequence | None = None):
        mat = tuple(tuple(to_rational(x) for x in row) for row in matrix)
        d = len(mat)
        if d == 0 or any(len(row) != d for row in mat):
            raise DimensionMismatch("matrix must be square and non-empty")
        tr = tuple(to_rational(x) for x in translation) if translation is not None else (Fraction(0),) * d
        if len(tr) != d:
            raise DimensionMismatch("translation length must match the matrix size")
        if rank(mat) < d:
            raise ValueError("affine map must be invertible")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "translation", tr)

    @classmethod
    def identity(cls, dim: int) -> "AffineMap":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    def __call__(self, x: Sequence[Fraction]) -> tuple:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point has {len(x)} coordinates, map acts on {self.dim}")
        return tuple(sum((a * b for a, b in zip(row, x)), t) for row, t in zip(self.matrix, self.translation))

    def determinant(self) -> Fraction:
        m = [list(r) for r in self.matrix]
        det = Fraction(1)
        for c in range(self.dim):
            p = next((k for k in range(c, self.dim) if m[k][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det *= m[c][c]
            for k in range(c + 1, self.dim):
                f = m[k][c] / m[c][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[c])]
        return det

    def inverse(self) -> "AffineMap":
        d = self.dim
        aug = [list(row) + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(self.matrix)]
        red, _ = _rref(aug)
        inv = [row[d:] for row in red]
        shift = [-sum((a * b for a, b in zip(row, self.translation)), Fraction(0)) for row in inv]
        return AffineMap(inv, shift)


@dataclass(frozen=True)
class Hyperplane:
    """The locus <normal, x> = offset, normal's first nonzero entry being 1."""

    dim: int
    normal: tuple
    offset: Fraction

    def __init__(self, normal: Sequence, offset):
        n = tuple(to_rational(x) for x in normal)
        lead = next((x for x in n if x != 0), None)
        if lead is None:
            raise ValueError("hyperplane normal must be nonzero")
        object.__setattr__(self, "dim", len(n))
        object.__setattr__(self, "normal", tuple(x / lead for x in n))
        object.__setattr__(self, "offset", to_rational(offset) / lead)

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, x)), Fraction(0)) - self.offset

    def contains(self, x: Sequence[Fraction]) -> bool:
        return self.evaluate(x) == 0


# -- operations --------------------------------------------------------------

def squared_distance(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatch(f"vectors of length {len(a)} and {len(b)}")
    return sum(((x - y) ** 2 for x, y in zip(a, b)), Fraction(0))


def edge_length_profile(f: Framework) -> EdgeLengthProfile:
    values, scale = f.config.scaled_squared_distances(f.graph.edges)
    lengths = {e: Fraction(int(v), scale) for e, v in zip(f.graph.edges, values)}
    return EdgeLengthProfile(f.dim, MappingProxyType(lengths))


def _check_comparable(f: Framework, g: Framework, *, same_edges: bool) -> None:
    if f.dim != g.dim:
        raise DimensionMismatch(f"frameworks live in dimensions {f.dim} and {g.dim}")
    if f.graph.vertex_ids != g.graph.vertex_ids:
        raise GraphMismatch("frameworks have different vertex sets")
    if same_edges and f.graph.edges != g.graph.edges:
        raise GraphMismatch("frameworks have different edge sets")


def is_equivalent(f: Framework, g: Framework) -> bool:
    """True iff every bar has the same length in ``f`` and ``g``."""
    _check_comparable(f, g, same_edges=True)
    return _same_squared_lengths(f.config, g.config, f.graph.edges)


def all_pairs(vertex_ids: Sequence[int]) -> list:
    vids = list(vertex_ids)
    return [(a, b) for k, a in enumerate(vids) for b in vids[k + 1:]]


def is_congruent(f: Framework, g: Framework) -> bool:
    """True iff every pair of joints is equally far apart in ``f`` and ``g``.

    Only vertex sets must match; the edge sets are irrelevant here.
    """
    _check_comparable(f, g, same_edges=False)
    return configs_congruent(f.config, g.config)


def configs_congruent(a: Configuration, b: Configuration) -> bool:
    if a.dim != b.dim:
        raise DimensionMismatch(f"configurations live in dimensions {a.dim} and {b.dim}")
    if a.vertex_ids != b.vertex_ids:
        raise GraphMismatch("configurations have different vertex sets")
    return _same_squared_lengths(a, b, all_pairs(a.vertex_ids))


def apply_affine(m: AffineMap, c: Configuration) -> Configuration:
    if m.dim != c.dim:
        raise DimensionMismatch(f"map acts on R^{m.dim}, configuration lives in R^{c.dim}")
    return Configuration(c.dim, {v: m(p) for v, p in c.points.items()})


def hyperplane_through(points: Sequence[Sequence]) -> Hyperplane:
    """The unique hyperplane containing ``points``.

    Raises AffineSpanTooSmall if the points span less than a hyperplane and
    NotAHyperplane if they span the whole space.
    """
    pts = [tuple(to_rational(c) for c in p) for p in points]
    if not pts:
        raise AffineSpanTooSmall("no points given")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise DimensionMismatch("points of mixed dimension")
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    r = rank(diffs) if diffs else 0
    if r == d:
        raise NotAHyperplane(f"points affinely span all of R^{d}")
    if r < d - 1:
        raise AffineSpanTooSmall(f"points span an affine subspace of dimension {r} < {d - 1}")
    (normal,) = nullspace(diffs, d) if diffs else nullspace([], d)
    return Hyperplane(normal, sum((a * b for a, b in zip(normal, base)), Fraction(0)))


def reflect(point: Sequence[Fraction], h: Hyperplane) -> tuple:
    if len(point) != h.dim:
        raise DimensionMismatch(f"point has {len(point)} coordinates, hyperplane lives in R^{h.dim}")
    nn = sum((x * x for x in h.normal), Fraction(0))
    k = 2 * h.evaluate(point) / nn
    return tuple(x - k * n for x, n in zip(point, h.normal))
