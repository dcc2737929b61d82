from .graph import Graph
from .labeling import VertexLabeling, is_qtrdf, is_rdf, is_trdf
from .invariants import (
    InvariantReport,
    beta,
    gamma,
    gamma_R,
    gamma_qtR,
    gamma_t,
    gamma_tR,
    gamma_tR_oracle,
    gamma_tR_value,
)
from .bondage import BondageResult, b, b_R, b_qtR, b_t, b_tR
from .families import FamilySpec
from .reduction import CnfFormula, build, parse_dimacs, verify_claims
from .utils import say, shout
from . import constants
