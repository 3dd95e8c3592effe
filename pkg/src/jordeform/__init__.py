"""Exact verification engine for the Jordanian quantum two-photon and Schrodinger algebras."""

from .scalars import Radical, Rational, ZSeries
from .ncalg import (
    Element,
    Presentation,
    build_presentation,
    classical_limit,
    commutator,
    multiply,
    normal_order,
)
from .hopf import (
    HopfStructure,
    TensorElement,
    antipode,
    build_hopf,
    build_universal_R,
    check_hopf_axioms,
    check_qybe,
    check_R_intertwining,
    check_triangularity,
    coproduct,
    counit,
)
from .fock import fock_matrix, rep_check
from .fb import build_fb, fb_rep_check
from .schrod import check_iso_is_hopf_morphism, subalgebra_survey, transport_element
from .report import CheckRecord, VerificationReport

__version__ = "0.1.0"
