"""Two-point Weierstrass semigroups and order bounds on the Skabelund curve."""

from .curve_params import CurveParams, make_params
from .errors import DomainError
from .kernels import BACKEND
from .order_bound import (
    BoundReport,
    BoundTables,
    best_one_point,
    bound_report,
    dual_dimension,
    goppa_dual,
    order_bound,
)
from .report import SweepConfig, TableRow, compare, export, sweep
from .semigroup import NumericalSemigroup
from .tau import Decomposition, TauTable, decompose, period_sum, tau, tau_inv_naive
from .two_point import (
    DivisorSpec,
    figure_points,
    g_nongap_p,
    g_nongap_pinf,
    in_semigroup,
    nu_p,
    nu_pinf,
    rr_dim,
)

__all__ = [
    "BACKEND", "BoundReport", "BoundTables", "CurveParams", "Decomposition", "DivisorSpec",
    "DomainError", "NumericalSemigroup", "SweepConfig", "TableRow", "TauTable",
    "best_one_point", "bound_report", "compare", "decompose", "dual_dimension", "export",
    "figure_points", "g_nongap_p", "g_nongap_pinf", "goppa_dual", "in_semigroup",
    "make_params", "nu_p", "nu_pinf", "order_bound", "period_sum", "rr_dim", "sweep", "tau",
    "tau_inv_naive",
]
