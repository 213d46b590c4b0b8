"""
Hecke operators, old/new splitting and eigenforms
"""
from .operators import (
    OperatorLabel,
    OperatorMatrix,
    apply_operator,
    apply_Tp,
    apply_translation_half,
    apply_U2,
    apply_Up,
    apply_Vd,
    operator_matrix,
    separating_operators,
)
from .newforms import (
    charpoly,
    newspace,
    newspace_level2,
    newspace_level4,
    oldspace,
    oldspace_level2,
    oldspace_level4,
)
from .eigenforms import (
    EigenspaceDescriptor,
    Eigenform,
    extract_rational_eigenforms,
    hecke_decomposition,
)
from .verification import (
    eigenform_failures,
    old_controls,
    verify_lemma_1_1,
    verify_lemma_3_1,
    verify_structure,
    verify_theorem_1_2,
)

__all__ = [
    "OperatorLabel",
    "OperatorMatrix",
    "apply_operator",
    "apply_Tp",
    "apply_translation_half",
    "apply_U2",
    "apply_Up",
    "apply_Vd",
    "operator_matrix",
    "separating_operators",
    "charpoly",
    "newspace",
    "newspace_level2",
    "newspace_level4",
    "oldspace",
    "oldspace_level2",
    "oldspace_level4",
    "EigenspaceDescriptor",
    "Eigenform",
    "extract_rational_eigenforms",
    "hecke_decomposition",
    "eigenform_failures",
    "old_controls",
    "verify_lemma_1_1",
    "verify_lemma_3_1",
    "verify_structure",
    "verify_theorem_1_2",
]
