"""Exact mahonian and bimahonian distributions of the groups G(d,1,n).

Arithmetic is exact throughout: rationals via :mod:`fractions` and
cyclotomic numbers stored modulo the cyclotomic polynomial.
"""

from .characters import ClassFunction, induced_cyclic_character, intertwining, mn_character
from .cyclotomic import CycloNum, GaloisAut, conj, root_of_unity
from .distributions import (
    bimahonian,
    bimahonian_fake,
    bimahonian_fmaj,
    bimahonian_molien,
    cyclic_closed_form,
    genfun_check,
    gordon_evaluate,
    gordon_prediction,
    gordon_specialize,
    mahonian,
    type_a,
    wright_recurrence,
)
from .errors import BimahonianError, BudgetExceeded, ConductorMismatch, InexactDivision, VerificationError
from .poly import BiPoly, TruncSeries, eval_at_roots, exact_div, is_palindromic, reduce_mod_cyclic
from .sieving import (
    BiCSPInstance,
    BiCSPReport,
    RegularCertificate,
    check_bicsp,
    is_regular,
    make_instance,
    regular_cyclic_subgroups,
    twisted_action,
    verify_sigma_power,
)
from .tableaux import MultiPartition, SkewTableau, colored_rsk, enumerate_syt, fake_degree, rsk_inverse
from .wreath import WreathElem, enumerate_group, parse_window, word_statistics

__version__ = "0.1.0"

__all__ = [
    "ClassFunction",
    "induced_cyclic_character",
    "intertwining",
    "mn_character",
    "CycloNum",
    "GaloisAut",
    "conj",
    "root_of_unity",
    "bimahonian",
    "bimahonian_fake",
    "bimahonian_fmaj",
    "bimahonian_molien",
    "cyclic_closed_form",
    "genfun_check",
    "gordon_evaluate",
    "gordon_prediction",
    "gordon_specialize",
    "mahonian",
    "type_a",
    "wright_recurrence",
    "BimahonianError",
    "BudgetExceeded",
    "ConductorMismatch",
    "InexactDivision",
    "VerificationError",
    "BiPoly",
    "TruncSeries",
    "eval_at_roots",
    "exact_div",
    "is_palindromic",
    "reduce_mod_cyclic",
    "BiCSPInstance",
    "BiCSPReport",
    "RegularCertificate",
    "check_bicsp",
    "is_regular",
    "make_instance",
    "regular_cyclic_subgroups",
    "twisted_action",
    "verify_sigma_power",
    "MultiPartition",
    "SkewTableau",
    "colored_rsk",
    "enumerate_syt",
    "fake_degree",
    "rsk_inverse",
    "WreathElem",
    "enumerate_group",
    "parse_window",
    "word_statistics",
    "__version__",
]
