"""Exact Harish-Chandra images and eigenvalues of the quantum Casimir operators of U_q(gl_n)."""

from .casimir import (
    CasimirExpression,
    Weight,
    center_express,
    eigenvalue_direct,
    eigenvalue_via_hc,
    express_in_casimirs,
    g_character,
    g_direct,
    g_recursive,
    gamma_ki,
    generating_function_check,
    hc_image,
    p_ni,
)
from .factored import FactoredRational, frac_add, frac_reduce
from .laurent import QLaurent
from .mpoly import MPoly
from .qfield import QField
from .symfun import (
    ZERO_HOOK,
    complete_homogeneous,
    decompose_h_basis,
    elementary,
    hook_partition,
    is_symmetric,
    schur_bialternant,
    schur_tableaux_oracle,
)

__version__ = "0.1.0"
