"""Exact Schur-positivity verification with Temperley-Lieb immanants."""

__version__ = "0.1.0"

from .partitions import (IndexSet, Partition, ShapePair, SkewShape, ainv, brace_select, conjugate,
                         midpoint, parse_shape, shape_to_subsets, shift, stride_select, subsets_to_shape,
                         union_sort, vee_wedge)
from .schur import (HVector, SchurVector, h_product_expand, is_schur_nonneg, jacobi_trudi_det,
                    lr_coefficient, schur_multiply, schur_product, skew_schur_expand, tableau_monomial_oracle)
from .temperley_lieb import (Matching, Permutation, TLElement, catalan_basis, generator_matching,
                             is_s_compatible, kl_oracle, theta_expand, theta_set, tl_from_word, tl_multiply)
from .immanants import GenJacobiTrudi, haiman_positivity_check, minor, minor_product_decomposition, tl_immanant
from .positivity import (PositivityCase, check_cd_power, check_cell_transfer, check_fflp, check_llt,
                         check_log_concavity, check_minors, check_okounkov, check_plus_decomp,
                         check_sorted_tuple, midpoint_reduction)
