"""Factories for concrete quasi-probability representations."""

from .base import Representation, striation_pvms
from .wootters import phase_point_operators, wootters, wootters_composite
from .ghw import (
    ghw,
    match_phase_points,
    translation_operator,
    wootters_aligned_net,
)
from .cohendet import (
    cohendet,
    cohendet_displacement,
    extended_distribution,
    fano_operator,
    from_extended,
)
from .leonhardt import leonhardt
from .ruzzi import ruzzi_point, ruzzi_s0
from .mub import (
    MubFamily,
    mub_bases,
    mub_family,
    mub_reconstruct,
    mub_table,
    mub_transition,
    mub_unitary,
)
from .hardy import hardy_projector, hardy_rep
from .havel import (
    havel_rep,
    pauli_matrix_entry,
    real_density_matrix,
    reconstruct_from_real,
)
from .sic import (
    overlap_deviation,
    sic_born,
    sic_conditional,
    sic_fiducial,
    sic_rep,
)
from .spherical import (
    NmrKernels,
    SphericalKernel,
    clebsch_gordan,
    direction_basis,
    fibonacci_sphere,
    kernel_weights,
    nmr_kernels,
    nmr_sample_directions,
    qubit_kernel_lower,
    qubit_kernel_upper,
    random_constellation,
    sphere_quadrature,
    spin_operators,
    stratonovich_discrete,
    stratonovich_kernel,
    tetrahedral_constellation,
)

__all__ = [
    "Representation",
    "striation_pvms",
    "phase_point_operators",
    "wootters",
    "wootters_composite",
    "ghw",
    "match_phase_points",
    "translation_operator",
    "wootters_aligned_net",
    "cohendet",
    "cohendet_displacement",
    "extended_distribution",
    "fano_operator",
    "from_extended",
    "leonhardt",
    "ruzzi_point",
    "ruzzi_s0",
    "hardy_projector",
    "hardy_rep",
    "havel_rep",
    "pauli_matrix_entry",
    "real_density_matrix",
    "reconstruct_from_real",
    "overlap_deviation",
    "sic_born",
    "sic_conditional",
    "sic_fiducial",
    "sic_rep",
    "MubFamily",
    "mub_bases",
    "mub_family",
    "mub_reconstruct",
    "mub_table",
    "mub_transition",
    "mub_unitary",
    "NmrKernels",
    "SphericalKernel",
    "clebsch_gordan",
    "direction_basis",
    "fibonacci_sphere",
    "kernel_weights",
    "nmr_kernels",
    "nmr_sample_directions",
    "qubit_kernel_lower",
    "qubit_kernel_upper",
    "random_constellation",
    "sphere_quadrature",
    "spin_operators",
    "stratonovich_discrete",
    "stratonovich_kernel",
    "tetrahedral_constellation",
]
