"""Fully packed loop link patterns, the O(1) loop Hamiltonian and its ground state."""

from ._core import (
    CapacityError,
    FormatError,
    LinkPattern,
    PatternError,
    PatternHistogram,
    SparseIntMatrix,
    StructureError,
    apply_h,
    asm_count,
    asm_states,
    build_hamiltonian,
    catalan,
    enumerate_patterns,
    histogram,
    parse_histogram_csv,
    parse_histogram_json,
    perron_vector,
    player_a_probability,
    player_b_probability,
    rank,
    reflect,
    render_asm,
    render_svg,
    rotate,
    sample,
    unrank,
    verify,
)

__version__ = "0.1.0"
