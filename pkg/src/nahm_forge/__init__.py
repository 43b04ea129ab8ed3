"""nahm-forge: exact q-series verification for Rogers-Ramanujan type
identities of generalized rank-two Nahm sums, a product-form recognizer,
and complex-numeric checks of vector-valued modular transformations."""

from .errors import (
    Divergent, NahmForgeError, NonSymmetric, NotIntegralLattice,
    NotPositiveDefinite, OrderTooLarge, SingularMatrix, TailTooLarge,
    UnknownId, WindowOverflow, ZeroLeadingTerm,
)
from .series import ParamSeries, QSeries, align, eq_to_order, substitute_params
from .products import (
    J, Jm, PochFactor, ProductSpec, eta_quotient, jacobi_triple, pf, poch,
    product,
)
from .nahm import (
    NahmQuadruple, dual_quadruple, enumerate_lattice, nahm_sum,
    nahm_sum_param, quadruple,
)
from .recognizer import ExponentProfile, detect_period, extract_profile, hunt
from .zlaurent import (
    ZLaurent, constant_term, double_sum_ct, z_from_bilateral, z_from_poch,
    z_mul,
)
from .modular import check_transformation, eval_U, eval_V, relations
from .registry import IdentityRecord, VerifyReport, verify, verify_all

__version__ = "0.1.0"
