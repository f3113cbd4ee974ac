"""Solvers for tangle equations N(U + P) = K1, N(U + R) = K2."""

from tanglekit.surgery_solver.band import (
    band_move,
    band_solve,
    solve_2k_to_2k1,
    solve_trefoil_hopf,
    trefoil_hopf_family,
    xer_pairs,
)
from tanglekit.surgery_solver.equivalence import (
    ZeroForm,
    move_equiv_zero,
    move_to_zero_form,
    psi_translate,
    transport_zero_move,
)
from tanglekit.surgery_solver.families import (
    Instance,
    Move,
    SolutionFamily,
    SolutionReport,
    Status,
)
from tanglekit.surgery_solver.gamma import GammaParams, PathwayStep, gamma_unknot_classify, pathway_check
from tanglekit.surgery_solver.nonband import (
    SumCandidate,
    divisor_bounds,
    nonrational_certificate,
    psi_move_solve,
    rational_move_family,
    residues,
    solve_generalized_M,
    solve_nonband_family,
)
from tanglekit.surgery_solver.obstruction import SignatureCheck, SignatureFacts, signature_obstruction
from tanglekit.surgery_solver.verify import Verification, verify_families, verify_instance

__all__ = [
    "GammaParams",
    "Instance",
    "Move",
    "PathwayStep",
    "SignatureCheck",
    "SignatureFacts",
    "SolutionFamily",
    "SolutionReport",
    "Status",
    "SumCandidate",
    "Verification",
    "ZeroForm",
    "band_move",
    "band_solve",
    "divisor_bounds",
    "gamma_unknot_classify",
    "move_equiv_zero",
    "move_to_zero_form",
    "nonrational_certificate",
    "pathway_check",
    "psi_move_solve",
    "psi_translate",
    "rational_move_family",
    "residues",
    "signature_obstruction",
    "solve_2k_to_2k1",
    "solve_generalized_M",
    "solve_nonband_family",
    "solve_trefoil_hopf",
    "transport_zero_move",
    "trefoil_hopf_family",
    "verify_families",
    "verify_instance",
    "xer_pairs",
]
