"""Generalized order bound for duals of two-point codes C_L(D, aP + bP_inf).

Sequences are drawn from {P, P_inf}.  Adding a point to G moves the lattice
state (A, B) one step right or up; a step matters only if it enlarges
L(G), and then costs the corresponding nu value.  The bound for (a, b) is
the best achievable minimum over all paths from (a, b) to the degree
4g - 1 anti-diagonal.  From there on every step matters and costs
deg + 2 - 2g, so a path that reaches the anti-diagonal is worth at most
2g + 1 more.

The value of a state depends only on the state itself, not on where the
path started, so one backward maximin pass over the whole triangle
answers every (a, b) at once.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import kernels
from .curve_params import CurveParams
from .errors import DomainError
from .tau import TauTable
from .two_point import rr_dim

log = logging.getLogger(__name__)


def tail_floor(params: CurveParams, top: int) -> int:
    """Guaranteed value of any state on the anti-diagonal A + B = top.

    This is the Goppa-type bound top - 2g + 2, exact when top = 4g - 1.
    """
    return max(top - 2 * params.genus + 2, 0)


class BoundTables:
    """nu, dimension and order-bound tables over one lattice triangle.

    The triangle is ``{(A, B) : A >= a0, B >= b0, A + B <= top}``.  With the
    defaults it covers every divisor the sweep needs.  Tables are filled
    once at construction; lookups are O(1).
    """

    def __init__(self, tt: TauTable, a0: int = 0, b0: int = 0, top: int | None = None,
                 jobs: int = 1, backend: str | None = None):
        p = tt.params
        if a0 < 0 or b0 < 0:
            raise DomainError("lattice corner must have a0, b0 >= 0")
        if top is None:
            top = p.max_degree
        n = top - a0 - b0
        if n < 0:
            raise DomainError(f"top degree {top} is below a0 + b0 = {a0 + b0}")
        self.tt = tt
        self.a0, self.b0, self.top, self.n = a0, b0, top, n
        self.floor = tail_floor(p, top)
        k = kernels.get_backend(backend)
        self.backend = backend or kernels.BACKEND

        lo = -max(a0, b0) - 1
        t = tt.tau_array(lo, top + 2)
        ti = tt.tau_inv_array(lo, top + 2)
        H = tt.semigroup
        member = np.fromiter((H.contains(x) for x in range(top + 3)), dtype=np.uint8,
                             count=top + 3)

        log.debug("filling %dx%d lattice tables (%s kernels)", n + 1, n + 1, self.backend)
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=2) as pool:
                fp = pool.submit(k.nu_table, t, lo, ti, lo, member, a0, b0, n)
                fq = pool.submit(k.nu_table, ti, lo, t, lo, member, b0, a0, n)
                self.nu_p_table, q_t = fp.result(), fq.result()
        else:
            self.nu_p_table = k.nu_table(t, lo, ti, lo, member, a0, b0, n)
            q_t = k.nu_table(ti, lo, t, lo, member, b0, a0, n)
        # the mirrored call indexes by (B, A)
        self.nu_pinf_table = np.ascontiguousarray(q_t.T)
        self.dim_table = k.dim_table(t, lo, ti, lo, a0, b0, n, rr_dim(tt, a0, b0))
        self.value_table = k.bottleneck(t, lo, ti, lo, self.nu_p_table, self.nu_pinf_table,
                                        a0, b0, n, self.floor)

    def _index(self, a: int, b: int) -> tuple[int, int]:
        u, v = a - self.a0, b - self.b0
        if u < 0 or v < 0 or u + v > self.n:
            raise DomainError(f"({a}, {b}) lies outside the lattice triangle "
                              f"a >= {self.a0}, b >= {self.b0}, a + b <= {self.top}")
        return u, v

    def value(self, a: int, b: int) -> int:
        return int(self.value_table[self._index(a, b)])

    def dim(self, a: int, b: int) -> int:
        return int(self.dim_table[self._index(a, b)])

    def nu_p(self, a: int, b: int) -> int:
        return int(self.nu_p_table[self._index(a, b)])

    def nu_pinf(self, a: int, b: int) -> int:
        return int(self.nu_pinf_table[self._index(a, b)])


def _check_divisor(a: int, b: int) -> None:
    if a < 0 or b < 0:
        raise DomainError(f"order bound needs a, b >= 0, got ({a}, {b})")
    if a + b == 0:
        raise DomainError("order bound needs a nonzero divisor G")


def default_horizon(params: CurveParams, a: int, b: int) -> int:
    return max(0, params.max_degree - a - b)


def order_bound(tt: TauTable, a: int, b: int, horizon: int | None = None,
                backend: str | None = None) -> int:
    """Order bound d(aP + bP_inf) over sequences of length ``horizon``.

    The default horizon 4g - 1 - deg(G) gives the exact bound.  A shorter
    horizon ends paths early at the weaker Goppa-type floor, so the result
    can only drop; a longer one changes nothing.
    """
    _check_divisor(a, b)
    if horizon is None:
        horizon = default_horizon(tt.params, a, b)
    if horizon < 0:
        raise DomainError("horizon must be nonnegative")
    top = a + b + horizon
    if horizon == 0:
        return tail_floor(tt.params, top)
    return BoundTables(tt, a, b, top, backend=backend).value(a, b)


def goppa_dual(params: CurveParams, a: int, b: int) -> int:
    return a + b - 2 * params.genus + 2


def dual_dimension(tt: TauTable, a: int, b: int) -> int:
    """Dimension of C_L(D, aP + bP_inf)^perp.

    Requires deg G < N so that L(G - D) = 0.
    """
    n = tt.params.code_length
    if a + b >= n:
        raise DomainError(f"degree {a + b} must stay below the code length {n}")
    return n - rr_dim(tt, a, b)


def one_point_run(tt: TauTable, k: int) -> list[int]:
    """All b' >= 1 with dual_dimension(0, b') == k, ascending."""
    p = tt.params
    target = p.code_length - k
    if target < 1:
        raise DomainError(f"dimension {k} not achievable by one-point divisor")
    top = p.max_degree
    run = []
    dim = 1  # dim L(0)
    for b in range(1, top + 1):
        dim += tt.tau_inv(b) <= 0
        if dim == target:
            run.append(b)
        elif dim > target:
            break
    if not run and target > dim:
        # past 2g - 1 each degree adds exactly one dimension
        b = target + p.genus - 1
        if b < p.code_length:
            run.append(b)
    if not run:
        raise DomainError(f"dimension {k} not achievable by one-point divisor")
    return run


def best_one_point(tt: TauTable, k: int, tables: BoundTables | None = None) -> tuple[int, int]:
    """Best one-point competitor of dual dimension ``k``.

    Returns ``(b_prime, d1)``: the largest order bound among all b' P_inf of
    that dimension and the smallest b' attaining it.
    """
    run = one_point_run(tt, k)
    top = tt.params.max_degree
    inside = [b for b in run if b <= top]
    if inside and (tables is None or tables.a0 != 0 or tables.b0 > inside[0]
                   or tables.top != top):
        tables = BoundTables(tt, 0, inside[0], top)
    best_b, best_d = None, None
    for b in run:
        d1 = tables.value(0, b) if b <= top else tail_floor(tt.params, b)
        if best_d is None or d1 > best_d:
            best_b, best_d = b, d1
    return best_b, best_d


@dataclass(frozen=True)
class BoundReport:
    a: int
    b: int
    degree: int
    rr_dimension: int
    dual_dimension: int
    goppa_dual: int
    order_bound: int
    horizon: int

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(tt: TauTable, a: int, b: int, horizon: int | None = None) -> BoundReport:
    _check_divisor(a, b)
    full = default_horizon(tt.params, a, b)
    h = full if horizon is None else horizon
    dim = rr_dim(tt, a, b)
    return BoundReport(
        a=a,
        b=b,
        degree=a + b,
        rr_dimension=dim,
        dual_dimension=dual_dimension(tt, a, b),
        goppa_dual=goppa_dual(tt.params, a, b),
        order_bound=order_bound(tt, a, b, h),
        horizon=h,
    )
