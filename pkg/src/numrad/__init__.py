"""numrad: numerical radius workbench for dense complex matrices.

Spectral quantities (numerical radius with certified error, spectral radius,
operator norm, polar parts), a catalogue of operator inequalities as
checkable records, block-matrix pinchings, and a seeded randomized
verification harness with a CLI.
"""

from .block_bounds import (
    BlockPartition,
    PinchScheme,
    block_bound,
    pinch,
    two_by_two_closed_form,
)
from .exceptions import NumradError
from .generators import GeneratorSpec, generate
from .linalg import (
    HermitianEigen,
    PolarParts,
    PowerFunction,
    absolute_value,
    aluthge,
    hermitian_eigen,
    min_gauge,
    operator_norm,
    polar,
    positive_power,
    spectral_radius,
)
from .product_bounds import (
    HolderPair,
    ProductBoundInput,
    block_positivity_check,
    check_intertwining,
    cor1_alpha_bounds,
    cor2_bound,
    cor5_bound,
    thm1_bounds,
    thm2_bounds,
    thm3_bound,
    thm4_bound,
)
from .radius import (
    RadiusEstimate,
    default_tolerance,
    numerical_radius,
    radius_value,
    rayleigh_samples,
)
from .records import BoundRecord, bound_record
from .scalar_bounds import (
    buzano_key_check,
    dragomir,
    eq11_sandwich,
    fact2_check,
    kittaneh2003,
    kittaneh2005,
    kittaneh_fg_gap,
    mccarty_check,
    mixed_schwarz_gap,
    norm_sum_estimate,
    refined_cauchy_schwarz,
    scalar_lemma_checks,
    spectral_radius_product_estimate,
    yamazaki,
)
from .sweep import (
    SweepReport,
    all_bound_ids,
    default_config,
    run_from_config,
    run_suite,
    tightness_csv,
    tightness_table,
)

__version__ = "0.1.0"

__all__ = [
    "BlockPartition",
    "BoundRecord",
    "GeneratorSpec",
    "HermitianEigen",
    "HolderPair",
    "NumradError",
    "PinchScheme",
    "PolarParts",
    "PowerFunction",
    "ProductBoundInput",
    "RadiusEstimate",
    "SweepReport",
    "absolute_value",
    "all_bound_ids",
    "aluthge",
    "block_bound",
    "block_positivity_check",
    "bound_record",
    "buzano_key_check",
    "check_intertwining",
    "cor1_alpha_bounds",
    "cor2_bound",
    "cor5_bound",
    "default_config",
    "default_tolerance",
    "dragomir",
    "eq11_sandwich",
    "fact2_check",
    "generate",
    "hermitian_eigen",
    "kittaneh2003",
    "kittaneh2005",
    "kittaneh_fg_gap",
    "mccarty_check",
    "min_gauge",
    "mixed_schwarz_gap",
    "norm_sum_estimate",
    "numerical_radius",
    "operator_norm",
    "pinch",
    "polar",
    "positive_power",
    "radius_value",
    "rayleigh_samples",
    "refined_cauchy_schwarz",
    "run_from_config",
    "run_suite",
    "scalar_lemma_checks",
    "spectral_radius",
    "spectral_radius_product_estimate",
    "thm1_bounds",
    "thm2_bounds",
    "thm3_bound",
    "thm4_bound",
    "tightness_csv",
    "tightness_table",
    "two_by_two_closed_form",
    "yamazaki",
]
