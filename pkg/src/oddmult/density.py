"""Odd-density experiments over the residue classes of n.

Two regimes coexist. In the three characterized classes (n even,
n == 1 mod 4, n == 3 mod 8) odd values of a(n) thin out toward density
zero, and the census counts them along two independent routes: the
arithmetic predicates and the GF(2) parity series. In the leftover class
n == 7 (mod 8) the conjectured picture is density 1/2; the experiment
evaluates f_3^8 / f_1^3 directly and reports the running density at
logarithmically spaced checkpoints. Nothing here proves anything; the
checks that matter are the exact cross-route agreements.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .characterize import parity_4m1, parity_8m3, parity_even_index
from .etaq import a_parity_series, dissection_by_extraction, dissection_series

__all__ = [
    "DensityCheckpoint",
    "DensityReport",
    "CensusResult",
    "CENSUS_CLASSES",
    "checkpoints_upto",
    "density_8m7",
    "sparse_odd_census",
]

_SAMPLE_SEED = 0x0DD

# class tag -> (step, offset, per-index predicate)
CENSUS_CLASSES = {
    "even": (2, 0, parity_even_index),
    "4m+1": (4, 1, parity_4m1),
    "8m+3": (8, 3, parity_8m3),
}


@dataclass(frozen=True)
class DensityCheckpoint:
    x: int
    odd_count: int
    density: float


@dataclass(frozen=True)
class DensityReport:
    class_tag: str
    checkpoints: tuple[DensityCheckpoint, ...]
    final_density: float
    cross_checked: int = 0


@dataclass(frozen=True)
class CensusResult:
    """Predicate-route and series-route counts for one characterized class."""

    class_tag: str
    predicate: DensityReport
    series: DensityReport

    @property
    def agree(self) -> bool:
        return all(
            p.odd_count == s.odd_count
            for p, s in zip(self.predicate.checkpoints, self.series.checkpoints)
        )


def checkpoints_upto(limit: int) -> list[int]:
    """Decades from 10^3 up to (and then including) the limit itself."""
    points = [10**k for k in range(3, 8) if 10**k < limit]
    points.append(limit)
    return points


def _members_below(x: int, step: int, offset: int) -> int:
    return (x - offset + step - 1) // step if x > offset else 0


def density_8m7(limit_m: int, cross_check_samples: int = 1000) -> DensityReport:
    """Running odd-density of the first limit_m coefficients of f_3^8 / f_1^3.

    Coefficient m is a(8m+7) mod 2. A deterministic sample of indices is
    cross-checked against 8-step extraction from the full parity series;
    disagreement would mean a kernel inconsistency and raises. Sampling is
    seeded, so identical calls give identical reports.
    """
    if limit_m < 1:
        raise ValueError("limit_m must be >= 1")
    series = dissection_series("8m+7", limit_m)
    marks = []
    for x in checkpoints_upto(limit_m):
        odd = series.odd_count(upto=x)
        marks.append(DensityCheckpoint(x, odd, odd / x))

    checked = 0
    if cross_check_samples > 0:
        sample = sorted(
            random.Random(_SAMPLE_SEED).sample(range(limit_m), min(cross_check_samples, limit_m))
        )
        extracted = dissection_by_extraction("8m+7", limit_m)
        for m in sample:
            if series[m] != extracted[m]:
                raise RuntimeError(
                    f"dissection mismatch at m={m}: closed form {series[m]}, extraction {extracted[m]}"
                )
        checked = len(sample)

    return DensityReport("8m+7", tuple(marks), marks[-1].density, checked)


def _predicate_flags(class_tag: str, start: int, stop: int) -> bytes:
    """Predicate verdicts (1 = odd) for member indices start..stop-1, packed as bytes."""
    predicate = CENSUS_CLASSES[class_tag][2]
    return bytes(1 if predicate(m).is_odd else 0 for m in range(start, stop))


def _gather_flags(class_tag: str, members: int, workers: int) -> bytes:
    if workers <= 1 or members < 4 * workers:
        return _predicate_flags(class_tag, 0, members)
    bounds = [members * i // workers for i in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(
            _predicate_flags,
            [class_tag] * workers,
            bounds[:-1],
            bounds[1:],
        )
        return b"".join(parts)


def sparse_odd_census(limit_n: int, workers: int = 1) -> list[CensusResult]:
    """Count odd a(n) in each characterized class for n < limit_n, two ways.

    The predicate route evaluates the per-class characterization at every
    member index; the series route decimates the parity series. The counts
    must agree exactly at every checkpoint; densities are odd members over
    members scanned.
    """
    if limit_n < 1:
        raise ValueError("limit_n must be >= 1")
    parity = a_parity_series(limit_n)
    xs = checkpoints_upto(limit_n)
    results = []
    for tag, (step, offset, _) in CENSUS_CLASSES.items():
        members_total = _members_below(limit_n, step, offset)
        flags = _gather_flags(tag, members_total, workers)

        class_bits = parity.extract(step, offset) if limit_n > offset else None
        pred_marks, series_marks = [], []
        running = 0
        done = 0
        for x in xs:
            members = _members_below(x, step, offset)
            running += sum(flags[done:members])
            done = members
            series_odd = class_bits.odd_count(upto=members) if class_bits and members else 0
            denom = members if members else 1
            pred_marks.append(DensityCheckpoint(x, running, running / denom))
            series_marks.append(DensityCheckpoint(x, series_odd, series_odd / denom))

        results.append(
            CensusResult(
                tag,
                DensityReport(tag, tuple(pred_marks), pred_marks[-1].density),
                DensityReport(tag, tuple(series_marks), series_marks[-1].density),
            )
        )
    return results
