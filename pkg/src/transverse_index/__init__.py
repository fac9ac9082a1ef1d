"""Exact equivariant index multiplicities of transversally elliptic
operators, computed from fixed-point combinatorial data."""

from .model import (
    BundleLine,
    DegenerateWeight,
    FixedPoint,
    InfiniteMultiplicity,
    InvalidTau,
    NegativeCutoff,
    NotNormalized,
    OperatorSetup,
    RankMismatch,
    WrongOperatorKind,
    ZeroB,
    fixed_point,
    normalize_orientation,
    normalize_setup,
    oscillator_frequencies,
    slope,
    validate_setup,
    weight,
)
from .lattice import (
    enumerate_kernel_solutions,
    enumerate_nonneg_combinations,
    kernel_count,
    restricted_count,
)
from .spectrum import (
    EigenSolution,
    SpectrumTable,
    point_eigensolutions,
    point_spectrum,
    total_spectrum,
)
from .engine import (
    FormLine,
    IndexResult,
    b_euler,
    b_signature_sum,
    build_form_datum,
    euler_characteristic,
    form_grading_sum,
    form_lines,
    signature,
    transverse_index,
    verify_killing_identity,
)
from .branching import (
    BranchingTable,
    apply_branching,
    branching_table,
    su2_beta,
    su2_index,
)
from .generators import gen_cpn, gen_sphere_operator, gen_su2_mod_t
from .serialize import (
    SetupParseError,
    load_branching_table,
    load_setup,
    save_branching_table,
    save_setup,
    setup_to_json,
)
from .sweeps import (
    SweepReport,
    kernel_support,
    signature_support,
    sweep_de_rham_vanishing,
    sweep_killing,
)

__version__ = "0.1.0"

__all__ = [
    "BranchingTable",
    "BundleLine",
    "DegenerateWeight",
    "EigenSolution",
    "FixedPoint",
    "FormLine",
    "IndexResult",
    "InfiniteMultiplicity",
    "InvalidTau",
    "NegativeCutoff",
    "NotNormalized",
    "OperatorSetup",
    "RankMismatch",
    "SetupParseError",
    "SpectrumTable",
    "SweepReport",
    "WrongOperatorKind",
    "ZeroB",
    "apply_branching",
    "b_euler",
    "b_signature_sum",
    "branching_table",
    "build_form_datum",
    "enumerate_kernel_solutions",
    "enumerate_nonneg_combinations",
    "euler_characteristic",
    "fixed_point",
    "form_grading_sum",
    "form_lines",
    "gen_cpn",
    "gen_sphere_operator",
    "gen_su2_mod_t",
    "kernel_count",
    "kernel_support",
    "load_branching_table",
    "load_setup",
    "normalize_orientation",
    "normalize_setup",
    "oscillator_frequencies",
    "point_eigensolutions",
    "point_spectrum",
    "restricted_count",
    "save_branching_table",
    "save_setup",
    "setup_to_json",
    "signature",
    "signature_support",
    "slope",
    "su2_beta",
    "su2_index",
    "sweep_de_rham_vanishing",
    "sweep_killing",
    "total_spectrum",
    "transverse_index",
    "validate_setup",
    "verify_killing_identity",
    "weight",
]
