import itertools
from fractions import Fraction as F

import pytest

from rigidkit.constructions import (
    FILTER_SQUARED_LENGTHS,
    PLANAR_EDGES,
    PLANAR_P,
    PaperConfigLabel,
    affine_image_configuration,
    family_instance,
    hypercube_vertices,
    pad,
    paper_affine_map,
    paper_configuration,
    symmetry_hyperplanes,
)
from rigidkit.core import (
    AffineMap,
    Configuration,
    Framework,
    apply_affine,
    is_congruent,
    is_equivalent,
    reflect,
    squared_distance,
    vector,
)

DIMS = range(2, 9)


def test_hypercube_small_cases():
    assert hypercube_vertices(0) == [()]
    assert hypercube_vertices(1) == [(1,), (-1,)]
    assert hypercube_vertices(2) == [(1, 1), (1, -1), (-1, 1), (-1, -1)]


@pytest.mark.parametrize("k", range(0, 7))
def test_hypercube_is_all_sign_vectors(k):
    verts = hypercube_vertices(k)
    assert len(verts) == 2**k
    assert set(verts) == set(itertools.product([1, -1], repeat=k))


def test_family_planar_graph():
    inst = family_instance(2)
    assert inst.graph_full.edges == PLANAR_EDGES
    assert inst.graph_full.n == 5
    assert inst.graph_reduced.edges == tuple(e for e in PLANAR_EDGES if e != (2, 3))


def test_family_d3_graph():
    inst = family_instance(3)
    g = inst.graph_full
    assert g.vertex_ids == tuple(range(1, 8))
    assert inst.base_vertices == (1, 4, 5, 6, 7)
    assert len(inst.graph_reduced.induced(inst.base_vertices).edges) == 10
    assert g.neighbors(2) == {1, 3, 4, 6}
    assert g.neighbors(3) == {1, 2, 5, 7}
    assert len(g.edges) == 10 + 3 + 3 + 1


@pytest.mark.parametrize("d", DIMS)
def test_family_invariants(d):
    inst = family_instance(d)
    n = 2 ** (d - 1) + 3
    assert inst.graph_full.n == n
    assert set(inst.graph_full.edges) == set(inst.graph_reduced.edges) | {(2, 3)}
    assert not inst.graph_reduced.has_edge(2, 3)
    b = len(inst.base_vertices)
    assert len(inst.graph_reduced.induced(inst.base_vertices).edges) == b * (b - 1) // 2
    half = 2 ** (d - 2) + 1
    assert inst.graph_reduced.neighbors(2) == {1} | {2 * k for k in range(2, half + 1)}
    assert inst.graph_reduced.neighbors(3) == {1} | {2 * k + 1 for k in range(2, half + 1)}


def test_family_rejects_small_dimension():
    with pytest.raises(ValueError):
        family_instance(1)
    with pytest.raises(ValueError):
        paper_configuration(1, "p")


def test_planar_p_and_q():
    p = paper_configuration(2, "p")
    assert dict(p.points) == PLANAR_P
    q = paper_configuration(2, "q")
    assert q[2] == (F(-21, 20), F(9, 10))
    assert q[3] == (F(1, 4), F(1, 2))
    for v in (1, 4, 5):
        assert q[v] == p[v]


def test_d3_base_joints():
    p = paper_configuration(3, PaperConfigLabel.P)
    assert p[4] == (-1, 0, 1)
    assert p[6] == (-1, 0, -1)
    assert p[5] == (1, 0, 1)
    assert p[7] == (1, 0, -1)


def test_affine_map():
    a2 = paper_affine_map(2)
    assert a2(vector(0, 2)) == (0, 1)
    assert paper_affine_map(4)(vector(1, 0, 1, -1)) == (1, 0, 1, -1)
    for d in DIMS:
        assert paper_affine_map(d).determinant() == F(1, 2)


def test_symmetry_hyperplanes_examples():
    h2, _ = symmetry_hyperplanes(2)
    assert h2.normal == (1, F(-1, 2)) and h2.offset == -1
    h2, _ = symmetry_hyperplanes(3)
    assert h2.normal == (1, F(-1, 2), 0) and h2.offset == -1
    _, h3 = symmetry_hyperplanes(2, paper_affine_map(2))
    assert h3.normal == (1, 1) and h3.offset == 1


@pytest.mark.parametrize("d", DIMS)
def test_reflections_produce_q(d):
    p, q = paper_configuration(d, "p"), paper_configuration(d, "q")
    inst = family_instance(d)
    h2, h3 = symmetry_hyperplanes(d)
    assert reflect(p[2], h2) == q[2] == pad((F(-21, 20), F(9, 10)), d)
    assert reflect(p[3], h3) == q[3] == pad((F(1, 4), F(1, 2)), d)
    for v in (1,) + inst.even_joints:
        assert h2.contains(p[v])
    for v in (1,) + inst.odd_joints:
        assert h3.contains(p[v])


@pytest.mark.parametrize("d", DIMS)
def test_affine_frame_configurations(d):
    ap = affine_image_configuration(d)
    r, s, t = (paper_configuration(d, lab) for lab in "rst")
    x2 = pad((F(-3, 4), F(3, 4)), d)
    x3 = pad((F(11, 20), F(-1, 20)), d)
    assert (r[2], r[3]) == (ap[2], x3)
    assert (s[2], s[3]) == (x2, x3)
    assert (t[2], t[3]) == (x2, ap[3])
    for c in (r, s, t):
        assert all(c[v] == ap[v] for v in c.vertex_ids if v not in (2, 3))


@pytest.mark.parametrize("d", DIMS)
def test_equivalent_not_congruent(d):
    g = family_instance(d).graph_full
    fp = Framework(g, paper_configuration(d, "p"))
    fq = Framework(g, paper_configuration(d, "q"))
    assert is_equivalent(fp, fq)
    assert not is_congruent(fp, fq)


@pytest.mark.parametrize("d", DIMS)
def test_four_filter_distances(d):
    configs = {
        PaperConfigLabel.P: affine_image_configuration(d),
        **{lab: paper_configuration(d, lab) for lab in (PaperConfigLabel.R, PaperConfigLabel.S, PaperConfigLabel.T)},
    }
    found = {lab: squared_distance(c[2], c[3]) for lab, c in configs.items()}
    assert found == FILTER_SQUARED_LENGTHS
    assert len(set(found.values())) == 4
    assert sorted(found.values()) == [F(73, 100), F(173, 100), F(233, 100), F(333, 100)]


@pytest.mark.parametrize("d", [3, 4, 5])
def test_hypercube_order_is_immaterial(d):
    # reversing binary counting order negates every cube coordinate,
    # so the resulting framework is a mirror image of p
    p = paper_configuration(d, "p")
    pts = dict(p.points)
    for j, w in enumerate(reversed(hypercube_vertices(d - 2)), start=2):
        pts[2 * j] = (F(-1), F(0)) + w
        pts[2 * j + 1] = (F(1), F(0)) + w
    other = Configuration(d, pts)
    flip = AffineMap([[(1 if k < 2 else -1) if k == j else 0 for j in range(d)] for k in range(d)])
    assert apply_affine(flip, p) == other
    g = family_instance(d).graph_full
    assert is_congruent(Framework(g, p), Framework(g, other))


def test_label_parsing():
    assert PaperConfigLabel.parse("S") is PaperConfigLabel.S
    with pytest.raises(ValueError):
        PaperConfigLabel.parse("x")
