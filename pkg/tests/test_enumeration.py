from fractions import Fraction as F

import pytest

from rigidkit.constructions import affine_image_configuration, family_instance, paper_configuration
from rigidkit.core import Configuration, Framework, Graph, configs_congruent, is_congruent, is_equivalent
from rigidkit.enumeration import (
    BaseNotComplete,
    ContinuumOfRealizations,
    EmptyPendants,
    PendantAttachedOutsideBase,
    Status,
    decide_global_rigidity,
    detect_pendant_structure,
    distinct_classes,
    enumerate_realizations,
    filter_survivors,
)

DIMS = range(2, 9)


def family(d, label="p", reduced=False):
    inst = family_instance(d)
    config = affine_image_configuration(d) if label == "ap" else paper_configuration(d, label)
    graph = inst.graph_reduced if reduced else inst.graph_full
    return inst, Framework(graph, config)


def test_detect_planar_structure():
    inst, f = family(2)
    ps = detect_pendant_structure(f, {1, 4, 5})
    assert ps.pendants == (2, 3)
    assert ps.filter_edges == ((2, 3),)
    assert ps.attachments(2) == (1, 4)


def test_detect_d3_structure():
    inst, f = family(3)
    ps = detect_pendant_structure(f, inst.base_vertices)
    assert ps.pendants == (2, 3)
    assert ps.filter_edges == ((2, 3),)
    assert ps.attachments(2) == (1, 4, 6)
    assert ps.attachments(3) == (1, 5, 7)


def test_detect_errors():
    k4 = Framework(Graph.complete([1, 2, 3, 4]), Configuration(2, {1: (0, 0), 2: (1, 0), 3: (0, 1), 4: (1, 1)}))
    with pytest.raises(EmptyPendants):
        detect_pendant_structure(k4, [1, 2, 3, 4])
    _, f = family(2)
    with pytest.raises(BaseNotComplete):
        detect_pendant_structure(f, {1, 2, 5})
    chain = Framework(
        Graph([1, 2, 3, 4], [(1, 2), (1, 3), (2, 3), (3, 4)]),
        Configuration(2, {1: (0, 0), 2: (1, 0), 3: (0, 1), 4: (2, 2)}),
    )
    with pytest.raises(PendantAttachedOutsideBase):
        detect_pendant_structure(chain, [1, 2])
    with pytest.raises(ValueError):
        detect_pendant_structure(f, {1, 99})


def test_planar_enumeration_matches_figure():
    _, f = family(2, "ap")
    classes = enumerate_realizations(detect_pendant_structure(f, {1, 4, 5}))
    assert [c.reflection_mask for c in classes] == [(False, False), (False, True), (True, False), (True, True)]
    ap2, ap3 = (F(-1, 4), F(1, 4)), (F(21, 20), F(9, 20))
    x2, x3 = (F(-3, 4), F(3, 4)), (F(11, 20), F(-1, 20))
    got = [(c.config[2], c.config[3]) for c in classes]
    assert got == [(ap2, ap3), (ap2, x3), (x2, ap3), (x2, x3)]
    assert classes[0].config == f.config


@pytest.mark.parametrize("d", DIMS)
def test_enumeration_sound_and_reproduces_paper_configs(d):
    inst, f = family(d, "ap")
    ps = detect_pendant_structure(f, inst.base_vertices)
    classes = enumerate_realizations(ps)
    assert len(classes) == 4
    reduced = ps.reduced
    for c in classes:
        assert is_equivalent(reduced, Framework(reduced.graph, c.config))
        assert all(c.config[v] == f.config[v] for v in inst.base_vertices)
    by_mask = {c.reflection_mask: c.config for c in classes}
    assert by_mask[(False, False)] == f.config
    assert by_mask[(False, True)] == paper_configuration(d, "r")
    assert by_mask[(True, True)] == paper_configuration(d, "s")
    assert by_mask[(True, False)] == paper_configuration(d, "t")
    assert len(distinct_classes(c.config for c in classes)) == 4


@pytest.mark.parametrize("d", DIMS)
def test_survivor_counts(d):
    inst, fp = family(d, "p")
    ps = detect_pendant_structure(fp, inst.base_vertices)
    survivors = filter_survivors(ps, enumerate_realizations(ps))
    assert [s.reflection_mask for s in survivors] == [(False, False), (True, True)]
    assert survivors[1].config == paper_configuration(d, "q")
    _, fa = family(d, "ap")
    ps = detect_pendant_structure(fa, inst.base_vertices)
    assert len(filter_survivors(ps, enumerate_realizations(ps))) == 1


@pytest.mark.parametrize("d", DIMS)
def test_verdicts(d):
    inst, fp = family(d, "p")
    v = decide_global_rigidity(detect_pendant_structure(fp, inst.base_vertices))
    assert v.status is Status.NOT_GLOBALLY_RIGID
    w = Framework(fp.graph, v.witness)
    assert is_equivalent(fp, w) and not is_congruent(fp, w)
    assert configs_congruent(v.witness, paper_configuration(d, "q"))
    _, fa = family(d, "ap")
    v = decide_global_rigidity(detect_pendant_structure(fa, inst.base_vertices))
    assert v.status is Status.GLOBALLY_RIGID and v.witness is None
    assert v.survivors == 1 and v.classes == 4


def test_pendant_on_spanning_attachments_is_unique():
    pts = {1: (0, 0), 2: (3, 0), 3: (0, 3), 4: (1, 1)}
    g = Graph(pts, [(1, 2), (1, 3), (2, 3), (4, 1), (4, 2), (4, 3)])
    ps = detect_pendant_structure(Framework(g, Configuration(2, pts)), [1, 2, 3])
    classes = enumerate_realizations(ps)
    assert len(classes) == 1
    assert decide_global_rigidity(ps).status is Status.GLOBALLY_RIGID


def test_pendant_on_its_mirror_has_one_position():
    pts = {1: (0, 0), 2: (2, 0), 3: (1, 0)}
    g = Graph(pts, [(1, 2), (1, 3), (2, 3)])
    ps = detect_pendant_structure(Framework(g, Configuration(2, pts)), [1, 2])
    assert len(enumerate_realizations(ps)) == 1


def test_single_attachment_is_flexible():
    pts = {1: (0, 0), 2: (2, 0), 3: (1, 1)}
    g = Graph(pts, [(1, 2), (1, 3)])
    ps = detect_pendant_structure(Framework(g, Configuration(2, pts)), [1, 2])
    with pytest.raises(ContinuumOfRealizations):
        enumerate_realizations(ps)
    v = decide_global_rigidity(ps)
    assert v.status is Status.FLEXIBLE and v.witness is None


def test_mirrored_triangle_is_congruent():
    pts = {1: (0, 0), 2: (2, 0), 3: (1, 1)}
    g = Graph(pts, [(1, 2), (1, 3), (2, 3)])
    ps = detect_pendant_structure(Framework(g, Configuration(2, pts)), [1, 2])
    v = decide_global_rigidity(ps)
    assert v.status is Status.GLOBALLY_RIGID
    assert v.survivors == 2


def test_two_free_pendants_not_globally_rigid():
    pts = {1: (0, 0), 2: (2, 0), 3: (1, 1), 4: (1, 2)}
    g = Graph(pts, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
    ps = detect_pendant_structure(Framework(g, Configuration(2, pts)), [1, 2])
    assert ps.filter_edges == ()
    v = decide_global_rigidity(ps)
    assert v.status is Status.NOT_GLOBALLY_RIGID
    assert v.witness[4] == (1, -2) and v.witness[3] == (1, 1)
