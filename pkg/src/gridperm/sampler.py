"""Exact uniform random generation over Av_n(213) and empirical reports.

The split under the minimum is chosen with probability
C_i * C_{n-1-i} / C_n using integer comparisons against a uniform
integer below C_n, so uniformity is exact at any size; no floating
point enters the sampler.  Construction uses an explicit work stack,
keeping sizes in the hundreds safe from recursion limits.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import catalan_list
from .grid_graph import degree_histogram_fast

GENERATOR_NAME = "mt19937 (random.Random)"


class SplitTables:
    """Catalan numbers plus cumulative split weights, shared across draws."""

    def __init__(self, n_max: int):
        self.n_max = n_max
        self.catalans = catalan_list(max(n_max, 0))
        self._cumulative: dict[int, list[int]] = {}

    def cumulative(self, m: int) -> list[int]:
        """Cumulative sums of C_i * C_{m-1-i} for i = 0..m-1."""
        table = self._cumulative.get(m)
        if table is None:
            cat = self.catalans
            acc = 0
            table = []
            for i in range(m):
                acc += cat[i] * cat[m - 1 - i]
                table.append(acc)
            if table[-1] != cat[m]:
                raise RuntimeError(f"split weights at m={m} do not sum to C_m")
            self._cumulative[m] = table
        return table


def _draw_below(rng: random.Random, bound: int) -> int:
    # uniform integer in [0, bound) by rejection on fixed-width words
    if bound <= 1:
        return 0
    bits = bound.bit_length()
    while True:
        u = rng.getrandbits(bits)
        if u < bound:
            return u


def sample_av213(
    n: int, rng: random.Random, tables: SplitTables | None = None
) -> tuple[int, ...]:
    """One permutation distributed exactly uniformly on Av_n(213).

    Each block picks the position of its minimum with the exact Catalan
    split weights, then recurses into the two sub-blocks (left block
    first) via an explicit stack.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if tables is None:
        tables = SplitTables(n)
    if tables.n_max < n:
        raise ValueError(f"tables cover n <= {tables.n_max}, need {n}")
    word = [0] * n
    stack = [(0, n, 0)]
    while stack:
        start, m, offset = stack.pop()
        if m == 0:
            continue
        if m == 1:
            word[start] = offset + 1
            continue
        u = _draw_below(rng, tables.catalans[m])
        i = bisect_right(tables.cumulative(m), u)
        j = m - 1 - i
        word[start + i] = offset + 1
        # push right first so the left block is expanded next
        stack.append((start + i + 1, j, offset + 1))
        stack.append((start, i, offset + j + 1))
    return tuple(word)


@dataclass(frozen=True)
class SampleReport:
    """Empirical degree shares from one deterministic sampling run."""

    n: int
    sample_count: int
    seed: int
    generator: str
    mean_proportions: dict[int, float]
    std_errors: dict[int, float]
    mean_h: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "generator": self.generator,
            "mean_proportions": {str(r): self.mean_proportions[r] for r in range(5)},
            "std_errors": {str(r): self.std_errors[r] for r in range(5)},
            "mean_h": self.mean_h,
        }


def empirical_report(n: int, sample_count: int, seed: int) -> SampleReport:
    """Sample degree histograms and aggregate the proportions.

    Counts are accumulated as integers and only converted to floats at
    the end, so the report is a pure function of (n, sample_count, seed).
    """
    if n < 2:
        raise ValueError("empirical_report needs n >= 2")
    if sample_count < 1:
        raise ValueError("sample_count must be positive")
    rng = random.Random(seed)
    tables = SplitTables(n)
    total_vertices = n * (n + 1) // 2
    sums = [0] * 5
    sums_sq = [0] * 5
    h_sum = 0
    for _ in range(sample_count):
        word = sample_av213(n, rng, tables)
        hist = degree_histogram_fast(word)
        for r in range(5):
            c = hist.counts[r]
            sums[r] += c
            sums_sq[r] += c * c
        h_sum += hist.horizontal_edges
    means = {}
    errors = {}
    for r in range(5):
        mean = Fraction(sums[r], sample_count * total_vertices)
        means[r] = float(mean)
        if sample_count > 1:
            # variance of the per-sample proportion, exact until the sqrt
            var = (
                Fraction(sums_sq[r], total_vertices**2)
                - sample_count * mean * mean
            ) / (sample_count - 1)
            errors[r] = math.sqrt(max(0.0, float(var)) / sample_count)
        else:
            errors[r] = 0.0
    return SampleReport(
        n=n,
        sample_count=sample_count,
        seed=seed,
        generator=GENERATOR_NAME,
        mean_proportions=means,
        std_errors=errors,
        mean_h=h_sum / sample_count,
    )
