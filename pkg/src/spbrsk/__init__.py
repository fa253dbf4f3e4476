"""Bounded RSK, peeling maps and Hilbert-function counts for symplectic Schubert varieties."""

from spbrsk.errors import (
    ConsistencyError,
    EmptyMonomialError,
    InvalidInputError,
    NotInvertibleError,
)
from spbrsk.order import (
    AdmissiblePair,
    HalfInt,
    IndexSet,
    StandardMonomial,
    StandardTableau,
)
from spbrsk.grid import Cell, Monomial
from spbrsk.peel import pi_step, pi_tilde
from spbrsk.brsk import NotchedTableauPair, brsk, brsk_inverse
from spbrsk.bridge import eta, hilbert_function

__all__ = [
    "AdmissiblePair",
    "Cell",
    "ConsistencyError",
    "EmptyMonomialError",
    "HalfInt",
    "IndexSet",
    "InvalidInputError",
    "Monomial",
    "NotInvertibleError",
    "NotchedTableauPair",
    "StandardMonomial",
    "StandardTableau",
    "brsk",
    "brsk_inverse",
    "eta",
    "hilbert_function",
    "pi_step",
    "pi_tilde",
]
