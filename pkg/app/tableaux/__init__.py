from .word import InvalidSector, InvalidWord, Word, parse_word, words_with
from .diagram import HRHOMBUS, SQUARE, VRHOMBUS, RhombicDiagram, Tile, build_diagram, strips_from_geometry
from .tableau import (
    InvalidTableau,
    Tableau,
    enumerate_tableaux,
    tableau_from_json,
    tableau_from_text,
    tableau_to_json,
    validate_tableau,
    weight,
    weight_exponents,
)
from .genpoly import (
    WeightedCount,
    check_reflection_symmetry,
    gen_R,
    gen_Rtilde,
    partition_Z,
    partition_Ztilde,
    prefactor,
    prefactor_denominator,
    rtilde_numerator,
    ztilde_numerator,
    verify_matrix_ansatz,
    verify_validator,
)
