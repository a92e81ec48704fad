"""Weight-one Lie superalgebras of holomorphic vertex superalgebras.

Census of candidate structures at central charge 8, 16 and 24, plus the exact
q-series and root-system checks they rest on.
"""

from .catalog import AlgebraId, SimpleAlgebra, algebra_info, enumerate_catalog
from .census import CensusReport, CensusSolution, enumerate_solutions, solve_weight_one, verify_solution
from .exactnum import ParamPoly, bernoulli, poly_eval, rat

__version__ = "0.1.0"
