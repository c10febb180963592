"""Finitely generated numerical semigroups."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup with a precomputed membership table.

    ``membership[n]`` is valid for ``0 <= n <= conductor + max(generators)``;
    anything at or above the conductor is a member without looking.
    """

    generators: tuple[int, ...]
    membership: tuple[bool, ...] = field(repr=False)
    conductor: int
    gaps: tuple[int, ...] = field(repr=False)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @classmethod
    def from_generators(cls, gens) -> "NumericalSemigroup":
        gens = sorted(set(int(x) for x in gens))
        if not gens:
            raise DomainError("empty generator list")
        if gens[0] <= 0:
            raise DomainError("generators must be positive")
        if math.gcd(*gens) != 1:
            raise DomainError("not a numerical semigroup: generators have gcd "
                              f"{math.gcd(*gens)}")

        lo, hi = gens[0], gens[-1]
        table = bytearray([1])
        run = 1
        conductor = 0
        n = 0
        # once lo consecutive members appear, everything above is a member
        while run < lo:
            n += 1
            hit = 0
            for g in gens:
                if g > n:
                    break
                if table[n - g]:
                    hit = 1
                    break
            table.append(hit)
            if hit:
                run += 1
            else:
                run = 0
                conductor = n + 1
        table.extend(b"\x01" * (conductor + hi + 1 - len(table)))

        membership = tuple(bool(x) for x in table)
        gaps = tuple(i for i in range(1, conductor) if not table[i])
        return cls(tuple(gens), membership, conductor, gaps)

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return self.membership[n]

    __contains__ = contains

    def elements_up_to(self, n: int) -> list[int]:
        """Members in ``[0, n]``, ascending."""
        if n < 0:
            return []
        head = [i for i in range(min(n, self.conductor - 1) + 1) if self.membership[i]]
        return head + list(range(self.conductor, n + 1))

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "conductor": self.conductor,
            "genus": self.genus,
            "gaps": list(self.gaps),
        }
