"""Generic global rigidity says nothing about a particular placement.

The planar graph is generically globally rigid (its random stress matrices
reach rank n - d - 1), yet the specific rational placement p is not globally
rigid. The placement is still infinitesimally rigid.
"""
import numpy as np

from rigidkit import (
    Framework,
    decide_global_rigidity,
    detect_pendant_structure,
    equilibrium_stress_basis,
    family_instance,
    generic_global_rigidity,
    is_infinitesimally_rigid,
    paper_configuration,
    rigidity_matrix,
    stress_matrix,
)
from rigidkit.numeric import numeric_rank

inst = family_instance(2)
fp = Framework(inst.graph_full, paper_configuration(2, "p"))

r = rigidity_matrix(fp)
print("rigidity matrix", r.shape, "rank", numeric_rank(r), "infinitesimally rigid:", is_infinitesimally_rigid(fp))

basis = equilibrium_stress_basis(fp)
omega = stress_matrix(inst.graph_full, basis[0])
print("stress at p:", np.round(basis[0], 4))
print("stress-matrix rank at p:", numeric_rank(omega), "(needs", inst.graph_full.n - 3, "for a certificate)")

res = generic_global_rigidity(inst.graph_full, 2, trials=32, seed=1)
print("generic test:", res.as_dict())
print("exact verdict at p:", decide_global_rigidity(detect_pendant_structure(fp, inst.base_vertices)).status.value)
