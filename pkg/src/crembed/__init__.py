"""Exact decision procedures for parallelizability and codimension-two
pseudo-holomorphic / CR regular embeddings, plus a surgery construction of
parallelizable manifolds with prescribed fundamental group."""

from .certificate import Decision, Verdict, replay
from .charclasses import admits_ac_structure_6d, cr_precondition, lai_indices, wall_embeds_in_R8
from .decision import (
    check_equivalence,
    decide_cr_embedding,
    decide_parallelizable,
    decide_ph_6d,
    decide_ph_embedding,
)
from .descriptor import CharClassData, Evidence, LaiPairingData, ManifoldDescriptor, validate
from .descriptor_file import format_descriptor, parse_descriptor, read_descriptor, write_descriptor
from .homology import (
    BettiTable,
    connected_sum,
    euler_characteristic,
    euler_of_gluing,
    kunneth_product,
    semi_characteristic,
)
from .ladder import obstruction_ladder_6d
from .obstructions import GroupValue, gamma_homotopy, kervaire_group
from .presentation import (
    AbelianInvariants,
    GroupPresentation,
    abelianization,
    format_presentation,
    free_reduce,
    parse_presentation,
    relation_matrix,
)
from .snf import IntegerMatrix, smith_normal_form
from .surgery import (
    build_X_s,
    construct_M,
    fixup_parallelizable,
    kill_euler,
    spin_construction,
    surger_relators,
)

__version__ = "0.1.0"

__all__ = [
    "Decision",
    "Verdict",
    "replay",
    "admits_ac_structure_6d",
    "cr_precondition",
    "lai_indices",
    "wall_embeds_in_R8",
    "check_equivalence",
    "decide_cr_embedding",
    "decide_parallelizable",
    "decide_ph_6d",
    "decide_ph_embedding",
    "CharClassData",
    "Evidence",
    "LaiPairingData",
    "ManifoldDescriptor",
    "validate",
    "format_descriptor",
    "parse_descriptor",
    "read_descriptor",
    "write_descriptor",
    "BettiTable",
    "connected_sum",
    "euler_characteristic",
    "euler_of_gluing",
    "kunneth_product",
    "semi_characteristic",
    "obstruction_ladder_6d",
    "GroupValue",
    "gamma_homotopy",
    "kervaire_group",
    "AbelianInvariants",
    "GroupPresentation",
    "abelianization",
    "format_presentation",
    "free_reduce",
    "parse_presentation",
    "relation_matrix",
    "IntegerMatrix",
    "smith_normal_form",
    "build_X_s",
    "construct_M",
    "fixup_parallelizable",
    "kill_euler",
    "spin_construction",
    "surger_relators",
]
