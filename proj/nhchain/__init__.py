"""Non-reciprocal two-band chain toolkit.

Exact open-boundary eigenstates, winding-number topology, skin-mode
localization, iterative surface Green's functions and four-phase
classification for a 1D two-band lattice with non-reciprocal
nearest-neighbor hopping and reciprocal next-nearest-neighbor hopping.
"""

from ._nhchain import (
    ModelParams,
    alpha_from_theta,
    build_obc_hamiltonian,
    build_ring_hamiltonian,
    classify,
    count_eigs_in_disk,
    criterion_margin,
    eig,
    eigvals,
    exact_eigenstate,
    find_topological_transition,
    finite_size_report,
    is_topological,
    localization_profile,
    offdiag_roots,
    quantize,
    spectral_functions,
)

__all__ = [
    "ModelParams",
    "alpha_from_theta",
    "build_obc_hamiltonian",
    "build_ring_hamiltonian",
    "classify",
    "count_eigs_in_disk",
    "criterion_margin",
    "eig",
    "eigvals",
    "exact_eigenstate",
    "find_topological_transition",
    "finite_size_report",
    "is_topological",
    "localization_profile",
    "offdiag_roots",
    "quantize",
    "spectral_functions",
]

__version__ = "0.1.0"
