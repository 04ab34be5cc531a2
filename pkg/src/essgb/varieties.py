"""Random test varieties with enforced linear dependencies.

Variety ``i`` of ``r`` has ``nr(i)`` uniformly random points; each remaining
point is, coordinate by coordinate, a random homogeneous linear combination
of those, so the rows span a space of dimension at most ``nr(i)``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import PointSet
from .exceptions import GenerationError
from .field import PrimeField

RNG_ALGORITHM = "PCG64"
MAX_ATTEMPTS = 100


@dataclass(frozen=True)
class GenSpec:
    p: int
    n: int
    m: int
    i: int = 1
    r: int = 10
    seed: int = 0

    def __post_init__(self):
        PrimeField(self.p)
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need n >= 1 and m >= 1, got n={self.n}, m={self.m}")
        if not 1 <= self.i <= self.r:
            raise ValueError(f"variety index {self.i} outside 1..{self.r}")

    def rng(self):
        seq = np.random.SeedSequence([self.seed & (2**64 - 1), self.p, self.n, self.m, self.i, self.r])
        return np.random.Generator(np.random.PCG64(seq))


def nr(spec):
    """Number of free points: ``(m/5) * ceil((r-i+1)/2)``, rounded half up and
    clamped to ``[1, m]``."""
    exact = Fraction(spec.m, 5) * math.ceil(Fraction(spec.r - spec.i + 1, 2))
    return max(1, min(spec.m, math.floor(exact + Fraction(1, 2))))


def gen_points(spec):
    """The ``m x n`` integer array of points for ``spec``."""
    p, n, m = spec.p, spec.n, spec.m
    free = nr(spec)
    rng = spec.rng()
    rows = []
    seen = set()

    def accept(draw):
        for _ in range(MAX_ATTEMPTS):
            row = draw()
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                rows.append(row)
                return
        raise GenerationError(
            f"no new distinct point after {MAX_ATTEMPTS} attempts (p={p}, n={n}, m={m}, nr={free})"
        )

    for _ in range(free):
        accept(lambda: rng.integers(0, p, size=n, dtype=np.int64))
    base = np.array(rows, dtype=np.int64)

    def dependent():
        # g = 0 is a valid homogeneous linear form; without it p=5, nr=1
        # admits only 4 distinct points
        g = rng.integers(0, p, size=free, dtype=np.int64)
        return g @ base % p

    for _ in range(m - free):
        accept(dependent)
    return np.array(rows, dtype=np.int64)


def gen_variety(spec):
    return PointSet(gen_points(spec), spec.p)
