"""Exact construction and verification of Hadamard matrices from
Kronecker block assemblies ``S (x) M + I (x) N`` over conference-matrix blocks."""

__version__ = "0.1.0"

from .blocks import (
    BlockAtom,
    BlockSpec,
    MKind,
    NCase,
    enumerate_variants,
    gram_claim,
    m_case_a,
    m_case_b,
    n_eq4,
    n_printed,
    realize_block,
)
from .catalog import coverage, enumerate_params, render_coverage
from .field import FieldElement, PrimePowerField, make_field, quadratic_character
from .matrix import PackedMatrix, SignMatrix, kron, pack, packed_dot, unpack
from .properties import property_suite
from .seeds import (
    ConferenceMatrix,
    SkewHadamard,
    conference,
    paley_skew_hadamard,
    q_matrix,
    skew_double,
    skew_part,
    skew_provider,
)
from .theorems import (
    ConstructionParams,
    ConstructionResult,
    Theorem,
    assemble,
    commutator_residual,
    construct,
    scan_variants,
    validate_params,
    variant_search,
)
from .verify import Certificate, is_conference_core, is_hadamard, is_skew_hadamard, is_symmetric
