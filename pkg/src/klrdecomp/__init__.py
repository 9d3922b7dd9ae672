"""Graded decomposition numbers of cyclotomic KLR algebras via the Fock space canonical basis."""

from .canbase import (
    CanonicalVector,
    DecompMatrix,
    canonical_basis,
    decomposition_matrix,
    extremal_sequence,
    irreducible_characters,
    monomial_vector,
    verify_suite,
)
from .combinat import ContentVector, LevelData, Multipartition, Node
from .crystal import CrystalConvention, crystal_e, crystal_f, prime_bijection, restricted_set
from .fock import FockVector, apply_E, apply_F
from .qint import LaurentPoly, q
from .tableaux import graded_dim, specht_character

__version__ = "0.1.0"
