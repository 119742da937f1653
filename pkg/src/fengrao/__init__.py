"""Feng-Rao bounds and majority-voting decoding for codes from indexed bases."""

from .algcode import (
    MonomialAlgebra,
    MonomialOrder,
    NumericalSemigroup,
    SemigroupData,
    build_algebra,
    construct_code,
    design_improved_code,
    encode,
    order_bound,
    order_mu,
    order_sigma,
    semigroup_wb_table,
)
from .errors import ConfigError, DecodeFailure, FengRaoError
from .frdecode import DecoderSetup, decode, setup
from .gf import GF, field_create
from .wbcore import (
    CodeHandle,
    IndexedBasis,
    IndexSet,
    WBStatus,
    WBTable,
    build_wb_table,
    check_duality_condition,
    classify_pair,
    complement,
    dualize,
    ghw_bound,
    min_distance_bound,
    mu_vector,
    rho_bar,
    sigma_vector,
    translate_wb_table,
)

__version__ = "0.1.0"
