"""The map tau = tau_{P, P_inf} and its inverse tau_{P_inf, P}.

``tau(i)`` is the least pole order at P_inf among functions regular outside
{P, P_inf} with pole order exactly ``i`` at P.  It is evaluated in closed
form: write

    i = (k + 1) rho - (a_t + m a_x + (q0 + 1) m a_y + (2 q0 + 1) m a_z)

with ``k = floor((i - 1) / rho)`` and a unique admissible quadruple, then

    tau(i) = a_t q^2 + a_z (q^2 - q + 2 q0) + a_y (q^2 - q q0 + q0)
             + a_x (q^2 - 2 q q0 + q) - (k + 1) rho.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .curve_params import CurveParams
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class Decomposition:
    i: int
    k: int
    r: int
    case_low: bool
    a_t: int
    a_x: int
    a_y: int
    a_z: int

    def to_dict(self) -> dict:
        return {
            "i": self.i, "k": self.k, "r": self.r, "case_low": self.case_low,
            "a_t": self.a_t, "a_x": self.a_x, "a_y": self.a_y, "a_z": self.a_z,
        }


def weighted_sum(params: CurveParams, a_t: int, a_x: int, a_y: int, a_z: int) -> int:
    """a_t + m a_x + (q0+1) m a_y + (2q0+1) m a_z"""
    m, q0 = params.m, params.q0
    return a_t + m * (a_x + (q0 + 1) * a_y + (2 * q0 + 1) * a_z)


def is_admissible(params: CurveParams, r: int, a_t: int, a_x: int, a_y: int, a_z: int) -> bool:
    m, q0 = params.m, params.q0
    if not 0 <= a_t <= m - 1:
        return False
    if r < m * (q0 + 1):
        return a_y == 0 and a_z == q0 and 0 <= a_x <= q0
    return 0 <= a_y <= 1 and 0 <= a_x <= q0 - a_y and 0 <= a_z <= q0 - 1


def decompose(params: CurveParams, i: int) -> Decomposition:
    rho, m, q0 = params.period, params.m, params.q0
    k = (i - 1) // rho  # floor, also for negative i
    r = i - k * rho - 1
    n = rho - 1 - r
    a_t, c = n % m, n // m
    # c = a_x + (q0+1) a_y + (2q0+1) a_z
    if r < m * (q0 + 1):
        low = True
        a_z, a_y = q0, 0
        a_x = c - (2 * q0 + 1) * q0
    else:
        low = False
        a_z, rem = divmod(c, 2 * q0 + 1)
        if rem <= q0:
            a_y, a_x = 0, rem
        else:
            a_y, a_x = 1, rem - (q0 + 1)
    return Decomposition(i, k, r, low, a_t, a_x, a_y, a_z)


def tau_from_decomposition(params: CurveParams, dec: Decomposition) -> int:
    g1, g2, g3, g4, _ = params.semigroup_generators
    return (dec.a_t * g4 + dec.a_z * g3 + dec.a_y * g2 + dec.a_x * g1
            - (dec.k + 1) * params.period)


def tau(params: CurveParams, i: int) -> int:
    return tau_from_decomposition(params, decompose(params, i))


class TauTable:
    """One period of tau values plus the residue anchors for inverting it.

    Values outside ``[window_lo, window_hi]`` come from periodicity,
    ``tau(i + rho) = tau(i) - rho``, so the table never grows.
    """

    def __init__(self, params: CurveParams):
        rho = params.period
        self.params = params
        self.window_lo = 0
        self.window_hi = rho - 1
        self._vals = [tau(params, i) for i in range(rho)]
        self.tau_values = np.array(self._vals, dtype=np.int64)

        self.inv_anchor = {t % rho: i0 for i0, t in enumerate(self._vals)}
        if len(self.inv_anchor) != rho:
            raise AssertionError("tau is not a bijection on residues mod rho")
        self._anchor = np.empty(rho, dtype=np.int64)
        for res, i0 in self.inv_anchor.items():
            self._anchor[res] = i0

    @cached_property
    def semigroup(self) -> NumericalSemigroup:
        """H(P_inf), which coincides with H(P)."""
        return NumericalSemigroup.from_generators(self.params.semigroup_generators)

    def tau(self, i: int) -> int:
        t, r = divmod(i, self.params.period)
        return self._vals[r] - t * self.params.period

    def tau_inv(self, j: int) -> int:
        i0 = self.inv_anchor.get(j % self.params.period)
        if i0 is None:
            raise AssertionError(f"no anchor for residue of {j}")
        # tau(i0 + t rho) = tau(i0) - t rho, solve for t
        return i0 + (self._vals[i0] - j)

    def tau_array(self, lo: int, hi: int) -> np.ndarray:
        """tau(i) for i in [lo, hi] as an int64 array."""
        idx = np.arange(lo, hi + 1, dtype=np.int64)
        t, r = np.divmod(idx, self.params.period)
        return self.tau_values[r] - t * self.params.period

    def tau_inv_array(self, lo: int, hi: int) -> np.ndarray:
        j = np.arange(lo, hi + 1, dtype=np.int64)
        i0 = self._anchor[np.mod(j, self.params.period)]
        return i0 + self.tau_values[i0] - j

    def decompose(self, i: int) -> Decomposition:
        return decompose(self.params, i)


def tau_inv_naive(tt: TauTable, j: int, window: tuple[int, int] | None = None) -> int:
    """Linear scan for the preimage of ``j``.

    The default window ``[-j - 1, 2g - j + rho]`` always contains it because
    ``-i <= tau(i) <= 2g - i``.
    """
    if window is None:
        window = (-j - 1, 2 * tt.params.genus - j + tt.params.period)
    lo, hi = window
    for i in range(lo, hi + 1):
        if tt.tau(i) == j:
            return i
    raise LookupError(f"preimage of {j} not found in window [{lo}, {hi}]")


def period_sum(tt: TauTable, c: int) -> int:
    return sum(i + tt.tau(i) for i in range(c, c + tt.params.period))
