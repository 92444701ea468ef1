"""The five-joint planar framework and its contracted image.

Builds G(p) and G(Ap) in the plane, shows that p has an equivalent but
non-congruent twin q, and that the contraction removes every such twin.
Writes SVG drawings next to this script under output/.
"""
from pathlib import Path

from rigidkit import (
    Framework,
    decide_global_rigidity,
    detect_pendant_structure,
    edge_length_profile,
    enumerate_realizations,
    family_instance,
    is_congruent,
    is_equivalent,
    paper_configuration,
    render_svg,
    squared_distance,
)
from rigidkit.constructions import affine_image_configuration

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

inst = family_instance(2)
p = paper_configuration(2, "p")
q = paper_configuration(2, "q")
fp, fq = Framework(inst.graph_full, p), Framework(inst.graph_full, q)

print("bars of G(p), squared lengths:")
for edge, length in edge_length_profile(fp).lengths.items():
    print(f"  {edge}: {length}")

# Every bar agrees, but joints 2 and 5 do not.
print("equivalent:", is_equivalent(fp, fq), " congruent:", is_congruent(fp, fq))
print("|p2-p5|^2 =", squared_distance(p[2], p[5]), "  |q2-q5|^2 =", squared_distance(q[2], q[5]))

verdict = decide_global_rigidity(detect_pendant_structure(fp, inst.base_vertices))
print("G(p):", verdict.status.value, "witness == q:", verdict.witness == q)

# After halving the y axis the four mirror choices give four different {2,3} lengths.
ap = affine_image_configuration(2)
fap = Framework(inst.graph_full, ap)
ps = detect_pendant_structure(fap, inst.base_vertices)
for c in enumerate_realizations(ps):
    j2, j3 = (", ".join(map(str, c.config[v])) for v in (2, 3))
    print(f"  mask {c.reflection_mask}: joint 2 at ({j2}), joint 3 at ({j3}),"
          f" |23|^2 = {squared_distance(c.config[2], c.config[3])}")
print("G(Ap):", decide_global_rigidity(ps).status.value)

for name, f in (("p", fp), ("q", fq), ("ap", fap), ("ap_reduced", Framework(inst.graph_reduced, ap))):
    (out / f"planar_{name}.svg").write_text(render_svg(f))
print("drawings written to", out)
