"""Joins of group-circulant matrices and the structure of the rings they form."""
from __future__ import annotations

from .errors import HypothesisError, NotAJoinError
from .fields import Field, FieldError
from .groups import (
    Group,
    GroupError,
    conjugacy_classes,
    cyclic,
    dihedral,
    make_group,
    opposite,
    p_regular_class_count,
    parse_group_spec,
    symmetric,
)
from .linalg import (
    ConvergenceError,
    Matrix,
    complex_eigenvalues,
    det_inverse,
    has_constant_row_sums,
    rank_nullity,
)
from .groupring import (
    GroupRingElement,
    almost_invertible,
    augment,
    convolve,
    idempotent_eG,
    is_g_circulant,
    perm_matrix,
    radical_basis_group_algebra,
    to_circulant,
    transpose,
    unit_inverse,
)
from .join import (
    JoinElement,
    UnitGroupStructure,
    augment_join,
    center_basis,
    classify,
    count_units,
    decompose_semisimple,
    expand,
    irreducible_count,
    is_frobenius,
    is_unit,
    modular_unit_structure,
    mul,
    radical_basis_join,
    recognize,
)
from .dft import (
    DiagonalizationResult,
    bad_column_permutation,
    dft_matrix,
    diagonalize,
    join_dft,
    joined_union,
    spectrum,
    wedderburn_map,
    wedderburn_preimage,
)
from .kernels import BACKEND

__version__ = "0.1.0"
