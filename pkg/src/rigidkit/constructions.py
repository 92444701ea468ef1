"""The counterexample family G_d, G~_d with configurations p, q, r, s, t.

For every d >= 2 the framework G_d(p) is not globally rigid in R^d while its
image G_d(Ap) under the contraction A(x) = (x1, x2/2, x3, ..., xd) is.
At d = 2 everything here reduces to the five-vertex planar example.

Vertex layout (n = 2^(d-1) + 3 vertices):

* 1 is the apex, 2 and 3 are the two pendant joints;
* 2j and 2j+1, for 2 <= j <= 2^(d-2)+1, sit at (-1, 0, w) and (1, 0, w)
  where w runs over the vertices of the cube [-1, 1]^(d-2).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .core import (
    AffineMap,
    Configuration,
    Graph,
    Hyperplane,
    apply_affine,
    hyperplane_through,
    reflect,
    vector,
)

DEFAULT_MAX_DIM = 12


class PaperConfigLabel(enum.Enum):
    P = "p"
    Q = "q"
    R = "r"
    S = "s"
    T = "t"

    @classmethod
    def parse(cls, text) -> "PaperConfigLabel":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValueError(f"unknown configuration label {text!r}; expected one of p, q, r, s, t") from None

    @property
    def in_affine_frame(self) -> bool:
        return self in (PaperConfigLabel.R, PaperConfigLabel.S, PaperConfigLabel.T)


# Which pendants are reflected (vertex 2, vertex 3) relative to Ap.
_AFFINE_MASKS = {
    PaperConfigLabel.R: (False, True),
    PaperConfigLabel.S: (True, True),
    PaperConfigLabel.T: (True, False),
}

# Closed forms of the reflected pendants, used as regression values.
REFLECTED_Q2 = (Fraction(-21, 20), Fraction(9, 10))
REFLECTED_Q3 = (Fraction(1, 4), Fraction(1, 2))
REFLECTED_S2 = (Fraction(-3, 4), Fraction(3, 4))
REFLECTED_R3 = (Fraction(11, 20), Fraction(-1, 20))

# Squared {2,3} lengths of G_d(Ap), G_d(r), G_d(s), G_d(t); independent of d.
FILTER_SQUARED_LENGTHS = {
    PaperConfigLabel.P: Fraction(173, 100),
    PaperConfigLabel.R: Fraction(73, 100),
    PaperConfigLabel.S: Fraction(233, 100),
    PaperConfigLabel.T: Fraction(333, 100),
}


def _check_dim(d: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"the family is defined for d >= 2, got {d!r}")


def pad(coords, d: int) -> tuple:
    """Extend a planar point with zeros to R^d."""
    return tuple(Fraction(c) for c in coords) + (Fraction(0),) * (d - len(coords))


def hypercube_vertices(k: int) -> list:
    """All 2^k sign vectors, in binary counting order (bit 0 is +1, MSB first)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    one = Fraction(1)
    return [
        tuple(-one if (m >> (k - 1 - b)) & 1 else one for b in range(k))
        for m in range(2**k)
    ]


@dataclass(frozen=True)
class FamilyInstance:
    dim: int
    graph_full: Graph
    graph_reduced: Graph
    base_vertices: tuple
    pendant_vertices: tuple = (2, 3)

    @property
    def filter_edge(self) -> tuple:
        return (2, 3)

    @property
    def even_joints(self) -> tuple:
        """Base joints attached to pendant 2 (besides the apex)."""
        return tuple(v for v in self.base_vertices if v >= 4 and v % 2 == 0)

    @property
    def odd_joints(self) -> tuple:
        return tuple(v for v in self.base_vertices if v >= 5 and v % 2 == 1)


@lru_cache(maxsize=16)
def family_instance(d: int) -> FamilyInstance:
    _check_dim(d)
    top = 2 ** (d - 1) + 3
    base = (1,) + tuple(range(4, top + 1))
    edges = [(a, b) for k, a in enumerate(base) for b in base[k + 1:]]
    half = 2 ** (d - 2) + 1
    edges += [(1, 2)] + [(2, 2 * k) for k in range(2, half + 1)]
    edges += [(1, 3)] + [(3, 2 * k + 1) for k in range(2, half + 1)]
    reduced = Graph(range(1, top + 1), edges)
    return FamilyInstance(
        dim=d,
        graph_full=reduced.with_edges([(2, 3)]),
        graph_reduced=reduced,
        base_vertices=base,
    )


def paper_affine_map(d: int) -> AffineMap:
    """Contraction by a factor 2 along the second axis."""
    _check_dim(d)
    return AffineMap([[Fraction(1, 2) if i == j == 1 else int(i == j) for j in range(d)] for i in range(d)])


@lru_cache(maxsize=16)
def _base_configuration(d: int) -> Configuration:
    points = {
        1: pad((0, 2), d),
        2: pad((Fraction(-1, 4), Fraction(1, 2)), d),
        3: pad((Fraction(21, 20), Fraction(9, 10)), d),
    }
    for j, w in enumerate(hypercube_vertices(d - 2), start=2):
        points[2 * j] = (Fraction(-1), Fraction(0)) + w
        points[2 * j + 1] = (Fraction(1), Fraction(0)) + w
    return Configuration(d, points)


def symmetry_hyperplanes(d: int, image_of: AffineMap | None = None) -> tuple[Hyperplane, Hyperplane]:
    """Mirror hyperplanes for pendants 2 and 3.

    The first passes through the apex and the even base joints, the second
    through the apex and the odd ones; with ``image_of`` the joints are first
    mapped by that affine map.
    """
    inst = family_instance(d)
    p = _base_configuration(d)
    if image_of is not None:
        p = apply_affine(image_of, p)
    h2 = hyperplane_through([p[1]] + [p[v] for v in inst.even_joints])
    h3 = hyperplane_through([p[1]] + [p[v] for v in inst.odd_joints])
    return h2, h3


def paper_configuration(d: int, label) -> Configuration:
    """Configuration p, q, r, s or t of the family in R^d.

    q, r, s and t are built by reflecting the pendants of p (resp. Ap) in their
    mirror hyperplanes; r, s and t live in the frame of Ap.
    """
    _check_dim(d)
    label = PaperConfigLabel.parse(label)
    p = _base_configuration(d)
    if label is PaperConfigLabel.P:
        return p
    if label is PaperConfigLabel.Q:
        h2, h3 = symmetry_hyperplanes(d)
        return p.replace({2: reflect(p[2], h2), 3: reflect(p[3], h3)})
    a = paper_affine_map(d)
    ap = apply_affine(a, p)
    h2, h3 = symmetry_hyperplanes(d, a)
    flip2, flip3 = _AFFINE_MASKS[label]
    updates = {}
    if flip2:
        updates[2] = reflect(ap[2], h2)
    if flip3:
        updates[3] = reflect(ap[3], h3)
    return ap.replace(updates)


def affine_image_configuration(d: int) -> Configuration:
    """Ap, the contracted copy of p."""
    return apply_affine(paper_affine_map(d), paper_configuration(d, PaperConfigLabel.P))


# Planar reference coordinates, as printed, for d = 2.
PLANAR_P = {
    1: vector(0, 2),
    2: vector("-1/4", "1/2"),
    3: vector("21/20", "9/10"),
    4: vector(-1, 0),
    5: vector(1, 0),
}
PLANAR_EDGES = ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5))
