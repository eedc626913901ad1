"""Range scanner for Laplacian integrality.

Each n is an independent task (the quotient pipeline only, no dense
oracles); results are emitted in ascending n regardless of worker count, so
scan output is reproducible byte for byte.  Per-record timing is therefore
disabled by default: with ``timing=True`` the wall_time_ms column carries
real measurements and the byte-determinism guarantee is deliberately given
up.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, TextIO

from .ring_divisors import Modulus
from .spectra import full_spectrum

CSV_COLUMNS = (
    "n",
    "factorization",
    "laplacian_integral",
    "distinct_prime_count",
    "residual_degree",
    "wall_time_ms",
)

FILTERS = ("all", "integral", "nonintegral")


@dataclass(frozen=True)
class ScanRecord:
    n: int
    factorization: str
    laplacian_integral: bool
    distinct_prime_count: int
    residual_degree: int
    wall_time_ms: int


def compute_record(n: int, timing: bool = False) -> ScanRecord:
    """Scan one modulus: integrality and residual degree via the quotient path."""
    start = time.perf_counter() if timing else 0.0
    m = Modulus.of(n)
    spectrum = full_spectrum(m)
    elapsed_ms = int((time.perf_counter() - start) * 1000) if timing else 0
    return ScanRecord(
        n=n,
        factorization=m.factorization_str(),
        laplacian_integral=spectrum.is_integral,
        distinct_prime_count=m.omega,
        residual_degree=spectrum.residual.degree,
        wall_time_ms=elapsed_ms,
    )


def _compute_plain(n: int) -> ScanRecord:
    return compute_record(n, timing=False)


def _compute_timed(n: int) -> ScanRecord:
    return compute_record(n, timing=True)


def scan_range(
    start: int, stop: int, workers: int = 1, timing: bool = False
) -> Iterator[ScanRecord]:
    """Records for start..stop inclusive, ascending, fanned out to a worker pool."""
    if start < 3 or stop < start:
        raise ValueError(f"invalid scan range {start}..{stop}")
    worker = _compute_timed if timing else _compute_plain
    ns = range(start, stop + 1)
    if workers <= 1:
        for n in ns:
            yield worker(n)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # executor.map preserves submission order, so output stays ascending
        yield from pool.map(worker, ns, chunksize=32)


def apply_filter(records: Iterable[ScanRecord], which: str) -> Iterator[ScanRecord]:
    if which not in FILTERS:
        raise ValueError(f"unknown filter {which!r}")
    for rec in records:
        if which == "integral" and not rec.laplacian_integral:
            continue
        if which == "nonintegral" and rec.laplacian_integral:
            continue
        yield rec


def write_csv(records: Iterable[ScanRecord], out: TextIO) -> tuple[int, int]:
    """Write records as CSV; returns (total, integral) counts."""
    out.write(",".join(CSV_COLUMNS) + "\n")
    total = integral = 0
    for rec in records:
        out.write(
            f"{rec.n},{rec.factorization},"
            f"{'true' if rec.laplacian_integral else 'false'},"
            f"{rec.distinct_prime_count},{rec.residual_degree},{rec.wall_time_ms}\n"
        )
        total += 1
        integral += rec.laplacian_integral
    return total, integral


def write_json(records: Iterable[ScanRecord], out: TextIO) -> tuple[int, int]:
    """Write records as a JSON array; returns (total, integral) counts."""
    rows = [asdict(rec) for rec in records]
    json.dump(rows, out, indent=1)
    out.write("\n")
    total = len(rows)
    integral = sum(1 for r in rows if r["laplacian_integral"])
    return total, integral
