"""Exact radical-formula toolkit: verification, obstruction, resolvents."""

from radform.cyclotomic import CycScalar, cyclotomic_poly, root_of_unity
from radform.formula import (
    FormalRadicalFormula,
    PolyRadicalFormula,
    SolvabilityScheme,
    builtin,
    factor_radicals,
    parse,
    serialize,
    to_poly_formula,
    verify_poly_formula,
    vieta_convert,
)
from radform.multipoly import (
    MPoly,
    elem_sym,
    is_even_symmetric,
    is_symmetric,
    kth_root_poly,
    permute_vars,
    symmetrize,
)
from radform.obstruction import ObstructionReport, keeping_symmetry, run_ruffini
from radform.permchar import Perm, character_of, verify_hom_trivial
from radform.resolvent import (
    abel_polynomialize,
    build_R,
    derive_witnesses,
    extract_last_radical,
    resolvent_average,
)
from radform.tower import RatFunc, TowerElem, TowerSpec, witness_check

__all__ = [
    "CycScalar",
    "FormalRadicalFormula",
    "MPoly",
    "ObstructionReport",
    "Perm",
    "PolyRadicalFormula",
    "RatFunc",
    "SolvabilityScheme",
    "TowerElem",
    "TowerSpec",
    "abel_polynomialize",
    "build_R",
    "builtin",
    "character_of",
    "cyclotomic_poly",
    "derive_witnesses",
    "elem_sym",
    "extract_last_radical",
    "factor_radicals",
    "is_even_symmetric",
    "is_symmetric",
    "keeping_symmetry",
    "kth_root_poly",
    "parse",
    "permute_vars",
    "resolvent_average",
    "root_of_unity",
    "run_ruffini",
    "serialize",
    "symmetrize",
    "to_poly_formula",
    "verify_hom_trivial",
    "verify_poly_formula",
    "vieta_convert",
    "witness_check",
]
