"""End-to-end exact reproduction of the counterexample in a given dimension."""
from __future__ import annotations

from fractions import Fraction

from .constructions import (
    FILTER_SQUARED_LENGTHS,
    PLANAR_EDGES,
    REFLECTED_Q2,
    REFLECTED_Q3,
    REFLECTED_R3,
    REFLECTED_S2,
    PaperConfigLabel,
    affine_image_configuration,
    family_instance,
    pad,
    paper_configuration,
    symmetry_hyperplanes,
)
from .core import Framework, configs_congruent, format_rational, is_congruent, is_equivalent, squared_distance
from .enumeration import Status, decide_global_rigidity, detect_pendant_structure, enumerate_realizations


def over(x: Fraction, den: int) -> str:
    """Write ``x`` over denominator ``den`` when that is exact ("2005/400")."""
    num = x * den
    if num.denominator == 1:
        return f"{num.numerator}/{den}"
    return format_rational(x)


def _check(name: str, passed: bool, **values) -> dict:
    return {"name": name, "passed": bool(passed), "values": values}


def paper_verify(d: int) -> dict:
    """Run every exact check for dimension ``d`` and return a JSON-ready report."""
    inst = family_instance(d)
    p = paper_configuration(d, PaperConfigLabel.P)
    q = paper_configuration(d, PaperConfigLabel.Q)
    ap = affine_image_configuration(d)
    rst = {lab: paper_configuration(d, lab) for lab in (PaperConfigLabel.R, PaperConfigLabel.S, PaperConfigLabel.T)}
    full, reduced = inst.graph_full, inst.graph_reduced
    checks = []

    n_expected = 2 ** (d - 1) + 3
    structure_ok = inst.graph_full.n == n_expected and not reduced.has_edge(2, 3)
    if d == 2:
        structure_ok = structure_ok and full.edges == PLANAR_EDGES
    checks.append(_check("family structure", structure_ok, vertices=full.n, edges=len(full.edges)))

    h2, h3 = symmetry_hyperplanes(d)
    on_mirror = all(h2.contains(p[v]) for v in (1,) + inst.even_joints) and all(
        h3.contains(p[v]) for v in (1,) + inst.odd_joints
    )
    refl_ok = (
        on_mirror
        and q[2] == pad(REFLECTED_Q2, d)
        and q[3] == pad(REFLECTED_Q3, d)
        and rst[PaperConfigLabel.R][3] == pad(REFLECTED_R3, d)
        and rst[PaperConfigLabel.S][2] == pad(REFLECTED_S2, d)
    )
    checks.append(_check(
        "reflections",
        refl_ok,
        q2=[format_rational(c) for c in q[2]],
        q3=[format_rational(c) for c in q[3]],
        r3=[format_rational(c) for c in rst[PaperConfigLabel.R][3]],
        s2=[format_rational(c) for c in rst[PaperConfigLabel.S][2]],
    ))

    p25 = squared_distance(p[2], p[5])
    q25 = squared_distance(q[2], q[5])
    extra = d - 2
    checks.append(_check(
        "p/q witness distances",
        p25 == Fraction(29, 16) + extra and q25 == Fraction(2005, 400) + extra and p25 != q25,
        p2_p5=format_rational(p25),
        q2_q5=format_rational(q25),
    ))

    fp, fq = Framework(full, p), Framework(full, q)
    equiv, congr = is_equivalent(fp, fq), is_congruent(fp, fq)
    checks.append(_check("p equivalent to q, not congruent", equiv and not congr, equivalent=equiv, congruent=congr))

    verdict_p = decide_global_rigidity(detect_pendant_structure(fp, inst.base_vertices))
    witness_ok = verdict_p.witness is not None and configs_congruent(verdict_p.witness, q)
    checks.append(_check(
        "G_d(p) not globally rigid",
        verdict_p.status is Status.NOT_GLOBALLY_RIGID and witness_ok,
        status=verdict_p.status.value,
        survivors=verdict_p.survivors,
        witness_congruent_to_q=witness_ok,
    ))

    ps_ap = detect_pendant_structure(Framework(full, ap), inst.base_vertices)
    classes = enumerate_realizations(ps_ap)
    expected = [ap, rst[PaperConfigLabel.R], rst[PaperConfigLabel.S], rst[PaperConfigLabel.T]]
    matched = all(sum(configs_congruent(c.config, e) for e in expected) == 1 for c in classes)
    checks.append(_check("enumeration of G~_d(Ap)", len(classes) == 4 and matched, classes=len(classes)))

    labels = (PaperConfigLabel.P, PaperConfigLabel.R, PaperConfigLabel.S, PaperConfigLabel.T)
    found = {lab: squared_distance(c[2], c[3]) for lab, c in zip(labels, expected)}
    distinct = len(set(found.values())) == 4
    checks.append(_check(
        "filter distances",
        distinct and all(found[lab] == FILTER_SQUARED_LENGTHS[lab] for lab in labels),
        **{("Ap" if lab is PaperConfigLabel.P else lab.value): format_rational(v) for lab, v in found.items()},
    ))

    verdict_ap = decide_global_rigidity(ps_ap)
    checks.append(_check(
        "G_d(Ap) globally rigid",
        verdict_ap.status is Status.GLOBALLY_RIGID,
        status=verdict_ap.status.value,
        survivors=verdict_ap.survivors,
    ))

    ok = all(c["passed"] for c in checks)
    return {
        "command": "paper-verify",
        "dim": d,
        "vertices": full.n,
        "edges": len(full.edges),
        "checks": checks,
        "verdicts": {"G_d(p)": verdict_p.status.value, "G_d(Ap)": verdict_ap.status.value},
        "status": "pass" if ok else "fail",
    }


def format_report_text(report: dict) -> str:
    d = report["dim"]
    lines = [f"paper-verify dim={d}: {report['vertices']} vertices, {report['edges']} edges"]
    by_name = {c["name"]: c for c in report["checks"]}
    dist = by_name["p/q witness distances"]["values"]
    lines.append(f"|p2−p5|² = {over(Fraction(dist['p2_p5']), 16)}")
    lines.append(f"|q2−q5|² = {over(Fraction(dist['q2_q5']), 400)}")
    fd = by_name["filter distances"]["values"]
    for key, name in (("Ap", "Ap"), ("r", "r"), ("s", "s"), ("t", "t")):
        lines.append(f"|{name}2−{name}3|² = {over(Fraction(fd[key]), 100)}")
    for c in report["checks"]:
        lines.append(f"[{'PASS' if c['passed'] else 'FAIL'}] {c['name']}")
    for k, v in report["verdicts"].items():
        lines.append(f"{k}: {v}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines) + "\n"
