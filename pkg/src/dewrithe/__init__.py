"""Braid words, Garside normal forms, plane configurations, and additive series.

Computational models for the algebra around the braid groups: words in
Artin generators with their writhe and underlying permutation, the juxtaposition
tensor and block braiding, a Garside-normal-form solution of the word problem,
the abelianized braided category with its hexagon identities, configuration
spaces of the plane with discriminants and angular anomalies bridging braids
and loops in both directions, and the group of additive power series over F2
with its twisted-polynomial and graded-dimension shadows.
"""

from .additive import (
    AdditiveSeries,
    F2Poly,
    TwistedPolynomial,
    additivity_check,
    format_poly,
    format_series,
    graded_dimensions,
    kudo_araki_degree,
    kudo_araki_generator_degrees,
    parse_series,
    power_generator_degrees,
    series_apply,
    series_compose,
    series_invert,
    to_twisted,
    twisted_mul,
    twisted_truncate,
    universal_coproduct,
    xi,
)
from .braids import (
    BraidWord,
    Permutation,
    PermutationMatrix,
    add_strand_left,
    add_strand_right,
    block_diag,
    block_swap_permutation,
    braiding_element,
    concat,
    format_braid_word,
    free_reduce,
    inverse,
    parse_braid_word,
    permutation_matrix,
    tensor,
    underlying_permutation,
    writhe,
)
from .categories import (
    AbMorphism,
    HexagonInstance,
    ab_braiding,
    ab_compose,
    ab_tensor,
    abelianize,
    hexagon_check,
    perm_functor,
)
from .configurations import (
    EPS_SEP,
    AnomalyPoint,
    ConfigLoop,
    Configuration,
    anomaly,
    base_configuration,
    braid_word_to_loop,
    covering_action,
    discriminant,
    format_configuration,
    format_loop,
    juxtapose,
    loop_discriminant_winding,
    loop_to_braid,
    parse_configuration,
    parse_loop,
    root_polynomial,
    scaled,
)
from .errors import (
    DegenerateConfigurationError,
    GeometryError,
    NonGenericLoopError,
    ParseError,
    ResolutionError,
)
from .garside import (
    GarsideNormalForm,
    PermutationBraid,
    braids_equal,
    dewrithed_conjugation_check,
    format_normal_form,
    half_twist,
    half_twist_permutation,
    normal_form,
    parse_normal_form,
    permutation_braid_lift,
    to_braid_word,
)
from .selftest import run_selftest

__all__ = [
    "AbMorphism",
    "AdditiveSeries",
    "AnomalyPoint",
    "BraidWord",
    "ConfigLoop",
    "Configuration",
    "DegenerateConfigurationError",
    "EPS_SEP",
    "F2Poly",
    "GarsideNormalForm",
    "GeometryError",
    "HexagonInstance",
    "NonGenericLoopError",
    "ParseError",
    "Permutation",
    "PermutationBraid",
    "PermutationMatrix",
    "ResolutionError",
    "TwistedPolynomial",
    "ab_braiding",
    "ab_compose",
    "ab_tensor",
    "abelianize",
    "add_strand_left",
    "add_strand_right",
    "additivity_check",
    "anomaly",
    "base_configuration",
    "block_diag",
    "block_swap_permutation",
    "braid_word_to_loop",
    "braiding_element",
    "braids_equal",
    "concat",
    "covering_action",
    "dewrithed_conjugation_check",
    "discriminant",
    "format_braid_word",
    "format_configuration",
    "format_loop",
    "format_normal_form",
    "format_poly",
    "format_series",
    "free_reduce",
    "graded_dimensions",
    "half_twist",
    "half_twist_permutation",
    "hexagon_check",
    "inverse",
    "juxtapose",
    "kudo_araki_degree",
    "kudo_araki_generator_degrees",
    "loop_discriminant_winding",
    "loop_to_braid",
    "normal_form",
    "parse_braid_word",
    "parse_configuration",
    "parse_loop",
    "parse_normal_form",
    "parse_series",
    "perm_functor",
    "permutation_braid_lift",
    "permutation_matrix",
    "power_generator_degrees",
    "root_polynomial",
    "run_selftest",
    "scaled",
    "series_apply",
    "series_compose",
    "series_invert",
    "tensor",
    "to_braid_word",
    "to_twisted",
    "twisted_mul",
    "twisted_truncate",
    "underlying_permutation",
    "universal_coproduct",
    "writhe",
    "xi",
]
