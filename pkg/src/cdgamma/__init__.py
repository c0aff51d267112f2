"""Exact computations with flag vectors, cd-indices and gamma-vectors of
Eulerian posets, plus colored-complex realizability checks."""

from .colored import (
    ColoredComplex,
    color_collapse,
    double_complex,
    ffk_compress,
    ffk_extend,
    is_k_ffk,
    is_k_ffk_bruteforce,
    is_k_good_witnessed,
)
from .flags import (
    FlagVector,
    flag_f,
    flag_f_from_h,
    flag_h,
    gamma_from_delta,
    gamma_vector,
    h_vector,
    sd_h_from_flag_h,
)
from .poset import (
    GradedPoset,
    SimplicialComplex,
    VertexFacetIncidence,
    build_from_covers,
    cap_ball,
    face_lattice,
    is_eulerian,
    join,
    order_complex,
    ordinal_sum,
    suspension,
)
from .realizability import (
    conjecture_search,
    delta_ffk_report,
    pair_inequality_check,
    rank5_screen,
)
from .words import (
    WordPolynomial,
    ab_to_cd,
    alpha_vector,
    cd_index,
    expand_cd,
    monomial_to_set,
    psi_from_flag_h,
    set_to_monomial,
    specialize_c1,
    suffix_decompose,
)

__version__ = "0.1.0"
