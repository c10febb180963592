"""Numeric invariants of the Skabelund curve for a given exponent ``s``.

Everything here is derived from ``q0 = 2**s``:

    q      = 2 q0^2
    m      = q - 2 q0 + 1
    genus  = q (q - 1)^2 / 2
    period = q^2 + 1            (order of P - P_inf in the class group)

The curve is maximal over F_{q^4} and has q^5 - q^4 + q^3 + 1 rational
points there; codes are built on all of them except P and P_inf.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import DomainError

INT64_MAX = 2**63 - 1


def period_genus_identity(q0: int) -> int:
    """Closed form of ``period * genus`` as a polynomial in ``q0``."""
    return 16 * q0**10 - 16 * q0**8 + 8 * q0**6 - 4 * q0**4 + q0**2


@dataclass(frozen=True)
class CurveParams:
    s: int
    q0: int
    q: int
    m: int
    genus: int
    period: int
    num_points: int
    code_length: int
    semigroup_generators: tuple[int, ...]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["semigroup_generators"] = list(self.semigroup_generators)
        return d

    @property
    def max_degree(self) -> int:
        """Largest divisor degree the order bound ever has to look at (4g - 1)."""
        return 4 * self.genus - 1


def make_params(s: int) -> CurveParams:
    if isinstance(s, bool) or not isinstance(s, int):
        raise DomainError(f"s must be an integer, got {s!r}")
    if s < 1:
        raise DomainError("s must be ≥ 1")

    q0 = 2**s
    q = 2 * q0 * q0
    m = q - 2 * q0 + 1
    genus = q * (q - 1) ** 2 // 2
    period = q * q + 1
    num_points = q**5 - q**4 + q**3 + 1
    gens = (
        q * q - 2 * q * q0 + q,
        q * q - q * q0 + q0,
        q * q - q + 2 * q0,
        q * q,
        q * q + 1,
    )

    # kernels store these in int64; period * genus is the largest product formed
    for name, value in (
        ("num_points", num_points),
        ("period*genus", period_genus_identity(q0)),
        ("4*genus", 4 * genus),
    ):
        if value > INT64_MAX:
            raise OverflowError(f"s={s}: {name} = {value} exceeds the signed 64-bit range")

    params = CurveParams(
        s=s,
        q0=q0,
        q=q,
        m=m,
        genus=genus,
        period=period,
        num_points=num_points,
        code_length=num_points - 2,
        semigroup_generators=gens,
    )
    _check(params)
    return params


def _check(p: CurveParams) -> None:
    gens = p.semigroup_generators
    assert p.q == 2 * p.q0**2 and p.q0 == 2**p.s
    assert p.m % 2 == 1 and p.m * (p.q0 + 1) < p.period
    assert all(x < y for x, y in zip(gens, gens[1:]))
    assert math.gcd(*gens) == 1
    assert p.period * p.genus == period_genus_identity(p.q0)
    assert gens[0] > 2 * p.q * p.q0 - p.q + 1
