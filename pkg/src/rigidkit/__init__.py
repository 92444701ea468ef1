"""Exact and numeric tools for global rigidity of bar-and-joint frameworks."""

from .constructions import (
    FamilyInstance,
    PaperConfigLabel,
    affine_image_configuration,
    family_instance,
    hypercube_vertices,
    paper_affine_map,
    paper_configuration,
    symmetry_hyperplanes,
)
from .core import (
    AffineMap,
    AffineSpanTooSmall,
    Configuration,
    DimensionMismatch,
    EdgeLengthProfile,
    Framework,
    Graph,
    GraphMismatch,
    Hyperplane,
    NotAHyperplane,
    Rational,
    RigidityError,
    apply_affine,
    edge_length_profile,
    hyperplane_through,
    is_congruent,
    is_equivalent,
    reflect,
    squared_distance,
)
from .enumeration import (
    BaseNotComplete,
    ContinuumOfRealizations,
    EmptyPendants,
    PendantAttachedOutsideBase,
    PendantStructure,
    RealizationClass,
    RigidityVerdict,
    Status,
    decide_global_rigidity,
    detect_pendant_structure,
    enumerate_realizations,
)
from .io import DocumentError, FrameworkDocument
from .numeric import (
    DegenerateSpan,
    GenericRigidityResult,
    NoConvergence,
    RealFramework,
    SolverParams,
    SolverResult,
    best_isometry_distance,
    equilibrium_stress_basis,
    generic_global_rigidity,
    is_infinitesimally_rigid,
    multistart_realizations,
    rigidity_matrix,
    solve_realization,
    stress_matrix,
)
from .render import render_svg
from .verify import paper_verify

__version__ = "0.1.0"
