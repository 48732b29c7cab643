"""Exact Walsh spectra of cubic functions twisted by an inverse permutation.

The package studies the Boolean family f_alpha(x) = Tr(alpha * s^{-1}(x)^3)
on GF(2^(2e)), where s(x) = x + x^d + x^(dq) with d = (q^2+q+1)/3 is a
permutation fixing the base field GF(q) pointwise.  It provides the field
tower, the permutation and its closed-form inverse, exact Walsh transforms,
and machine checks for the full reduction chain that pins down every
spectrum value.
"""

from .field import FieldCtx, ctx_new, Elem2, ZERO2, ONE2
from .perm import (
    PermTables,
    TruthTable,
    perm_eval,
    perm_tables,
    perm_inverse,
    coset_index,
    inverse_cube_table,
    coset_cube_table,
)
from .walsh import (
    Spectrum,
    walsh_naive,
    walsh_naive_batch,
    walsh_full,
    is_bent,
    split_inner_outer,
)
from .reduction import (
    OuterFrame,
    CirclePoint,
    TraceZeroSpace,
    ShellWord,
    outer_frame,
    cubic_coeff,
    linear_coeff,
    fold_walsh,
    chord_set,
    circle_point,
    trace_one_set,
    trace_one_map,
    trace_zero_space,
    shell_sum,
    shell_sums_all,
    trace_one_hadamard,
    shell_word,
    shell_hadamard,
    shell_walsh_outer,
    predict_inner_walsh,
)
from .suites import (
    predicted_distribution,
    predicted_inner_support,
    predicted_outer_support,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "FieldCtx",
    "ctx_new",
    "Elem2",
    "ZERO2",
    "ONE2",
    "PermTables",
    "TruthTable",
    "perm_eval",
    "perm_tables",
    "perm_inverse",
    "coset_index",
    "inverse_cube_table",
    "coset_cube_table",
    "Spectrum",
    "walsh_naive",
    "walsh_naive_batch",
    "walsh_full",
    "is_bent",
    "split_inner_outer",
    "OuterFrame",
    "CirclePoint",
    "TraceZeroSpace",
    "ShellWord",
    "outer_frame",
    "cubic_coeff",
    "linear_coeff",
    "fold_walsh",
    "chord_set",
    "circle_point",
    "trace_one_set",
    "trace_one_map",
    "trace_zero_space",
    "shell_sum",
    "shell_sums_all",
    "trace_one_hadamard",
    "shell_word",
    "shell_hadamard",
    "shell_walsh_outer",
    "predict_inner_walsh",
    "predicted_distribution",
    "predicted_inner_support",
    "predicted_outer_support",
    "run_suite",
    "__version__",
]
