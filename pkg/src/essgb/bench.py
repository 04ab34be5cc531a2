"""Benchmark harness comparing the essential-variable algorithm with BM.

For every cell ``(p, n, m, order)`` of the grid and every variety index
``i = 1..r`` the variety is generated, each algorithm is timed on it, and
one CSV record is written per run.  Bases are compared via a checksum, so a
correctness regression aborts the run instead of producing timings.
"""

import csv
import itertools
import logging
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from .bm import bm_gb
from .core import ess_gb
from .exceptions import ChecksumMismatchError
from .monomials import as_order, format_polynomial
from .varieties import GenSpec, gen_variety

log = logging.getLogger(__name__)

ALGORITHMS = {"essgb": ess_gb, "bm": bm_gb}
CSV_HEADER = ("p", "n", "m", "order", "i", "alg", "seconds", "ess_vars", "gb_size", "checksum")

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a64(data):
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def checksum(result):
    """FNV-1a 64 of the sorted canonical basis strings joined by newlines, as 16 hex digits."""
    text = "\n".join(sorted(format_polynomial(g) for g in result.basis))
    return f"{fnv1a64(text.encode()):016x}"


@dataclass
class BenchConfig:
    primes: tuple = (5, 101)
    ns: tuple = (100, 200, 300)
    ms: tuple = (5, 10, 15)
    orders: tuple = ("lex", "grevlex")
    r: int = 10
    algorithms: tuple = ("essgb", "bm")
    seed: int = 0
    out: str = None
    parallel: bool = False

    def __post_init__(self):
        for name in ("primes", "ns", "ms", "orders", "algorithms"):
            if not getattr(self, name):
                raise ValueError(f"{name} must not be empty")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms {sorted(unknown)}")
        if self.r < 1:
            raise ValueError("r must be at least 1")
        for o in self.orders:
            as_order(o)

    def cells(self):
        return list(itertools.product(self.primes, self.ns, self.ms, self.orders))


@dataclass(frozen=True)
class BenchRecord:
    p: int
    n: int
    m: int
    order: str
    i: int
    alg: str
    seconds: float
    ess_vars: int
    gb_size: int
    checksum: str


def _time(alg, V, order):
    start = time.perf_counter()
    result = ALGORITHMS[alg](V, order)
    return time.perf_counter() - start, result


def run_cell(cell, r, algorithms, seed):
    """Records for one grid cell; raises ChecksumMismatchError on disagreement."""
    p, n, m, order = cell
    order = as_order(order)
    varieties = [gen_variety(GenSpec(p=p, n=n, m=m, i=i, r=r, seed=seed)) for i in range(1, r + 1)]
    for alg in algorithms:
        ALGORITHMS[alg](varieties[0], order)  # warm-up, untimed
    records = []
    for i, V in enumerate(varieties, start=1):
        sums = {}
        for alg in algorithms:
            seconds, result = _time(alg, V, order)
            sums[alg] = checksum(result)
            records.append(
                BenchRecord(p, n, m, order.kind, i, alg, seconds, len(result.essential_vars), len(result.basis), sums[alg])
            )
        if len(set(sums.values())) > 1:
            raise ChecksumMismatchError(f"bases differ for p={p} n={n} m={m} order={order} i={i}: {sums}")
    return records


def append_csv(path, records):
    new = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="") as fh:
        writer = csv.writer(fh)
        if new:
            writer.writerow(CSV_HEADER)
        for rec in records:
            row = list(astuple(rec))
            row[6] = f"{rec.seconds:.6f}"
            writer.writerow(row)


def read_csv(path):
    types = [f.type for f in fields(BenchRecord)]
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        return [BenchRecord(*(t(v) for t, v in zip(types, row))) for row in reader]


def run_bench(config, progress=None):
    """Run the whole grid; returns the list of records (also appended to ``config.out``)."""
    cells = config.cells()
    args = (config.r, tuple(config.algorithms), config.seed)
    records = []
    if config.parallel:
        with ProcessPoolExecutor() as pool:
            results = pool.map(run_cell, cells, *([a] * len(cells) for a in args))
            for cell, recs in zip(cells, results):
                records.extend(_done(config, cell, recs, progress))
    else:
        for cell in cells:
            records.extend(_done(config, cell, run_cell(cell, *args), progress))
    return records


def _done(config, cell, recs, progress):
    if config.out:
        append_csv(config.out, recs)
    if progress:
        progress(cell, recs)
    log.info("cell %s: %d records", cell, len(recs))
    return recs


def summarize(records):
    """Per-cell medians: list of dicts with keys p, n, m, order, one ``<alg>`` key
    per algorithm (median seconds) and ``ratio`` = median(bm)/median(essgb)."""
    cells = {}
    for rec in records:
        cells.setdefault((rec.p, rec.n, rec.m, rec.order), {}).setdefault(rec.alg, []).append(rec.seconds)
    rows = []
    for (p, n, m, order), by_alg in cells.items():
        row = {"p": p, "n": n, "m": m, "order": order}
        for alg, times in by_alg.items():
            row[alg] = statistics.median(times)
        if row.get("essgb") and "bm" in row:
            row["ratio"] = row["bm"] / row["essgb"]
        rows.append(row)
    return rows


def format_summary(rows):
    header = f"{'p':>4} {'n':>5} {'m':>3} {'order':<8} {'essgb [s]':>11} {'bm [s]':>11} {'bm/essgb':>9}"
    lines = [header, "-" * len(header)]
    for row in rows:
        def cell(key, fmt):
            return format(row[key], fmt) if key in row else "-"

        lines.append(
            f"{row['p']:>4} {row['n']:>5} {row['m']:>3} {row['order']:<8} "
            f"{cell('essgb', '11.5f'):>11} {cell('bm', '11.5f'):>11} {cell('ratio', '9.2f'):>9}"
        )
    return "\n".join(lines)
