"""Mixed Hodge tables for complements and compact supports along a normal
crossing divisor, computed blockwise over an exact combinatorial atlas."""

from .atlas import (
    StrataAtlas,
    Stratum,
    generic_arrangement,
    key_from_string,
    key_to_string,
    validate_atlas,
)
from .complexes import (
    SELECTORS,
    PureTerm,
    RowFamily,
    RowMorphism,
    build,
    coker_u_rows,
    coker_v_rows,
    cone_rows,
    morphism_i_star,
    morphism_log_restriction,
    morphism_u,
    morphism_v,
    rows_constant,
    rows_log,
    rows_semisimplicial_log,
    rows_stratum_log,
    rows_sum_strata,
)
from .errors import (
    BadParams,
    BidegreeError,
    ChartMismatch,
    CompositionNonzero,
    DegreeMismatch,
    DimensionMismatch,
    EmptyDivisor,
    LatticeError,
    MissingStratum,
    NCHodgeError,
    NonHomogeneous,
    NotChainMap,
    SchemaError,
    UnknownStratum,
    WeightTooLow,
)
from .fixtures import BUILTIN_NAMES, builtin_atlas, elliptic_with_point
from .linalg import RationalMatrix, cohomology_at, pairing_perfect, rank, solve
from .logforms import (
    LogChart,
    LogPolyForm,
    claim_forward_check,
    claim_witness,
    dz_form,
    exterior_d,
    form,
    from_regular,
    in_ideal_subcomplex,
    monomial,
    poly_const,
    residue,
    weight_level,
    wedge,
    xi,
    zero_form,
)
from .pairings import (
    GradedPairing,
    chain_map_check,
    cup_extraordinary,
    cup_log_XD,
    fujiki_duality_report,
    induced_pairing,
    les_check,
)
from .reports import CheckLine, CheckReport
from .rings import PureHodgeRing, elliptic_curve_ring, truncated_polynomial_ring
from .schema import (
    atlas_from_json,
    atlas_to_json,
    atlases_equal,
    dumps_atlas,
    load_atlas,
    save_atlas,
)
from .tables import MixedHodgeTable, compare_tables, compute_table, euler_check
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "BadParams",
    "BidegreeError",
    "ChartMismatch",
    "CheckLine",
    "CheckReport",
    "CompositionNonzero",
    "DegreeMismatch",
    "DimensionMismatch",
    "EmptyDivisor",
    "GradedPairing",
    "LatticeError",
    "LogChart",
    "LogPolyForm",
    "MissingStratum",
    "MixedHodgeTable",
    "NCHodgeError",
    "NonHomogeneous",
    "NotChainMap",
    "PureHodgeRing",
    "PureTerm",
    "RationalMatrix",
    "RowFamily",
    "RowMorphism",
    "SELECTORS",
    "SUITES",
    "SchemaError",
    "StrataAtlas",
    "Stratum",
    "UnknownStratum",
    "WeightTooLow",
    "atlas_from_json",
    "atlas_to_json",
    "atlases_equal",
    "build",
    "builtin_atlas",
    "chain_map_check",
    "claim_forward_check",
    "claim_witness",
    "cohomology_at",
    "coker_u_rows",
    "coker_v_rows",
    "compare_tables",
    "compute_table",
    "cone_rows",
    "cup_extraordinary",
    "cup_log_XD",
    "dumps_atlas",
    "dz_form",
    "elliptic_curve_ring",
    "elliptic_with_point",
    "euler_check",
    "exterior_d",
    "form",
    "from_regular",
    "fujiki_duality_report",
    "generic_arrangement",
    "in_ideal_subcomplex",
    "induced_pairing",
    "key_from_string",
    "key_to_string",
    "les_check",
    "load_atlas",
    "monomial",
    "morphism_i_star",
    "morphism_log_restriction",
    "morphism_u",
    "morphism_v",
    "pairing_perfect",
    "poly_const",
    "rank",
    "residue",
    "rows_constant",
    "rows_log",
    "rows_semisimplicial_log",
    "rows_stratum_log",
    "rows_sum_strata",
    "run_suite",
    "save_atlas",
    "solve",
    "truncated_polynomial_ring",
    "validate_atlas",
    "wedge",
    "weight_level",
    "xi",
    "zero_form",
]
