"""Two-point Weierstrass semigroup H(P, P_inf) and what follows from tau.

Coordinates are always (pole order at P, pole order at P_inf), and ``tau``
always means tau_{P, P_inf}.  These are direct evaluations; the table-driven
versions used for sweeps live in :mod:`skabelund.order_bound`.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError
from .tau import TauTable


class DivisorSpec(NamedTuple):
    """G = a P + b P_inf."""

    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.a + self.b


def in_semigroup(tt: TauTable, i: int, j: int) -> bool:
    return tt.tau(i) <= j and tt.tau_inv(j) <= i


def rr_dim(tt: TauTable, a: int, b: int) -> int:
    """dim L(aP + b P_inf) = #{i <= a : tau(i) <= b}.

    Only ``i >= -b`` can qualify since tau(i) >= -i.
    """
    if a < 0 or b < 0:
        raise DomainError(f"rr_dim needs a, b >= 0, got ({a}, {b})")
    return sum(1 for i in range(-b, a + 1) if tt.tau(i) <= b)


def g_nongap_p(tt: TauTable, b: int, i: int) -> bool:
    """i in H(P; aP + bP_inf) for any a."""
    return tt.tau(i) <= b


def g_nongap_pinf(tt: TauTable, a: int, i: int) -> bool:
    """i in H(P_inf; aP + bP_inf) for any b."""
    return tt.tau_inv(i) <= a


def nu_p(tt: TauTable, a: int, b: int) -> int:
    """#{(i, j) : i in H(P), tau(j) <= b, i + j = a + 1}."""
    H = tt.semigroup
    return sum(1 for i in H.elements_up_to(a + 1 + b) if tt.tau(a + 1 - i) <= b)


def nu_pinf(tt: TauTable, a: int, b: int) -> int:
    """#{(i, j) : i in H(P_inf), tau^-1(j) <= a, i + j = b + 1}."""
    H = tt.semigroup
    return sum(1 for i in H.elements_up_to(b + 1 + a) if tt.tau_inv(b + 1 - i) <= a)


def figure_points(tt: TauTable, window_multiple: int = 2) -> list[tuple[int, int]]:
    """Points of H(P, P_inf) with -w rho < i, j < w rho, sorted."""
    if window_multiple < 1:
        raise DomainError("window multiple must be positive")
    lim = window_multiple * tt.params.period
    pts = []
    for i in range(-lim + 1, lim):
        for j in range(max(tt.tau(i), -lim + 1), lim):
            if tt.tau_inv(j) <= i:
                pts.append((i, j))
    return pts
