"""Compare two-point and one-point order bounds per dual dimension."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass

from .curve_params import make_params
from .errors import DomainError
from .order_bound import BoundTables, goppa_dual
from .tau import TauTable

log = logging.getLogger(__name__)

COLUMNS = ("k", "a", "b", "deg", "d", "goppa", "d1", "b_prime", "delta")


@dataclass(frozen=True)
class TableRow:
    k: int
    a: int
    b: int
    deg: int
    d: int
    goppa: int
    d1: int
    b_prime: int
    delta: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SweepConfig:
    """Sweep settings.  Ranges are inclusive; ``None`` means 1 .. 4g - 2."""

    s: int = 1
    a_range: tuple[int, int] | None = None
    b_range: tuple[int, int] | None = None
    delta_threshold: int = 10
    jobs: int = 1
    fmt: str = "csv"

    def resolved_ranges(self, max_degree: int) -> tuple[tuple[int, int], tuple[int, int]]:
        full = (1, max_degree - 1)
        a_rng = self.a_range or full
        b_rng = self.b_range or full
        for name, (lo, hi) in (("a_range", a_rng), ("b_range", b_rng)):
            if lo < 0 or hi < lo:
                raise DomainError(f"{name} {lo}..{hi} is empty or negative")
        if a_rng[0] + b_rng[0] > max_degree:
            raise DomainError("ranges contain no divisor with a + b <= 4g - 1")
        if a_rng[0] + b_rng[0] == 0 and a_rng[1] == 0 and b_rng[1] == 0:
            raise DomainError("ranges contain only the zero divisor")
        if self.delta_threshold < 0:
            raise DomainError("delta threshold must be nonnegative")
        if self.fmt not in ("csv", "json"):
            raise DomainError(f"unknown output format {self.fmt!r}")
        return a_rng, b_rng


def compare(cfg: SweepConfig, tables: BoundTables | None = None) -> list[TableRow]:
    """One row per achievable dual dimension, unfiltered, sorted by k.

    Each row holds the largest two-point bound of that dimension (smallest
    (a, b) on ties) next to the best one-point bound.
    """
    params = make_params(cfg.s)
    top = params.max_degree
    a_rng, b_rng = cfg.resolved_ranges(top)
    if tables is None:
        tables = BoundTables(TauTable(params), 0, 0, top, jobs=cfg.jobs)
    N = params.code_length

    dims = tables.dim_table.tolist()
    vals = tables.value_table.tolist()

    two: dict[int, tuple[int, int, int]] = {}
    for a in range(a_rng[0], min(a_rng[1], top) + 1):
        drow, vrow = dims[a], vals[a]
        for b in range(b_rng[0], min(b_rng[1], top - a) + 1):
            if a + b == 0:
                continue
            k = N - drow[b]
            d = vrow[b]
            cur = two.get(k)
            if cur is None or d > cur[0]:
                two[k] = (d, a, b)

    one: dict[int, tuple[int, int]] = {}
    for b in range(1, top + 1):
        k = N - dims[0][b]
        d1 = vals[0][b]
        cur = one.get(k)
        if cur is None or d1 > cur[0]:
            one[k] = (d1, b)

    rows = []
    for k in sorted(two):
        d, a, b = two[k]
        d1, bp = one[k]
        rows.append(TableRow(k, a, b, a + b, d, goppa_dual(params, a, b), d1, bp, d - d1))
    return rows


def dominance_violations(rows: list[TableRow]) -> list[TableRow]:
    """Rows where the best two-point bound falls below the one-point one."""
    return [r for r in rows if r.d < r.d1]


def sweep(cfg: SweepConfig, tables: BoundTables | None = None) -> list[TableRow]:
    rows = compare(cfg, tables)
    bad = dominance_violations(rows)
    if bad:
        log.warning("two-point bound below one-point bound at k = %s",
                    ", ".join(str(r.k) for r in bad))
    return [r for r in rows if r.delta >= cfg.delta_threshold]


def format_rows(rows: list[TableRow], fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in rows:
            w.writerow([getattr(r, c) for c in COLUMNS])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows], separators=(",", ":")) + "\n"
    raise DomainError(f"unknown output format {fmt!r}")


def export(rows: list[TableRow], fmt: str = "csv", destination: str | os.PathLike | None = None) -> None:
    """Write rows to ``destination`` (stdout when None or ``-``)."""
    text = format_rows(rows, fmt)
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
        return
    try:
        with open(destination, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {fmt} table to {destination}: {exc.strerror}") from exc
