"""q-Whittaker polynomials through three models, with the bijections linking them."""

from .algebra import (
    BoxedPartition,
    QPoly,
    SymPoly,
    box_complement,
    conjugate,
    eta,
    from_strict_tuple,
    interlaces,
    partition,
    qbinom,
    to_strict_tuple,
)
from .bijections import omega, psi_inv, psi_inverse, psi_quinv
from .fillings import (
    Filling,
    cells,
    dsplice,
    inv,
    is_csf,
    is_wdf,
    maj,
    quinv,
    rsort,
    splice,
    zcb,
    zcount,
)
from .patterns import POP, GTPattern, area, bcomp, br, pr, wtq
from .polymodels import ModelTag, basic_character_partial, schur, whittaker

__version__ = "0.1.0"

__all__ = [
    "BoxedPartition", "QPoly", "SymPoly", "box_complement", "conjugate", "eta",
    "from_strict_tuple", "interlaces", "partition", "qbinom", "to_strict_tuple",
    "omega", "psi_inv", "psi_inverse", "psi_quinv",
    "Filling", "cells", "dsplice", "inv", "is_csf", "is_wdf", "maj", "quinv",
    "rsort", "splice", "zcb", "zcount",
    "POP", "GTPattern", "area", "bcomp", "br", "pr", "wtq",
    "ModelTag", "basic_character_partial", "schur", "whittaker",
]
