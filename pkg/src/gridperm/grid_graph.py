"""Column-profile grid graphs of permutations and their degree statistics.

The graph of a word ``p`` has a column of height ``p[i-1]`` over slot
``i``, vertical edges between consecutive levels inside a column, and
horizontal edges between equal levels of adjacent columns.  Adjacency is
never materialized: every statistic is read off the height profile, with
O(1) work per vertex (or per column for the fast histogram).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

MAX_RENDER_COLUMNS = 40


def vertex_degree(word: Sequence[int], column: int, level: int) -> int:
    """Degree of the vertex at 1-based (column, level).

    Counts the vertical neighbors (below iff level > 1, above iff
    level < column height) plus one horizontal neighbor per adjacent
    column whose height reaches the level.  A lone column of height 1
    yields degree 0.
    """
    n = len(word)
    if not 1 <= column <= n:
        raise ValueError(f"column {column} out of range 1..{n}")
    b = word[column - 1]
    if not 1 <= level <= b:
        raise ValueError(f"level {level} out of range 1..{b} in column {column}")
    deg = (level > 1) + (level < b)
    if column > 1:
        deg += level <= word[column - 2]
    if column < n:
        deg += level <= word[column]
    return deg


def horizontal_edge_count(word: Sequence[int]) -> int:
    """Number of horizontal edges: sum of min heights over adjacent columns.

    >>> horizontal_edge_count((4, 1, 3, 2))
    4
    """
    return sum(min(a, b) for a, b in zip(word, word[1:]))


@dataclass(frozen=True)
class DegreeHistogram:
    """Vertex counts by degree 0..4 for one grid graph, plus its edge statistic."""

    n: int
    counts: dict[int, int]
    horizontal_edges: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "counts": {str(r): self.counts[r] for r in range(5)},
            "horizontal_edges": self.horizontal_edges,
        }


def degree_histogram(word: Sequence[int]) -> DegreeHistogram:
    """Tally :func:`vertex_degree` over every vertex of the grid graph."""
    counts = {r: 0 for r in range(5)}
    for column in range(1, len(word) + 1):
        for level in range(1, word[column - 1] + 1):
            counts[vertex_degree(word, column, level)] += 1
    return DegreeHistogram(
        n=len(word), counts=counts, horizontal_edges=horizontal_edge_count(word)
    )


def degree_histogram_fast(word: Sequence[int]) -> DegreeHistogram:
    """Same histogram as :func:`degree_histogram` with O(1) work per column.

    Within a column of height b with neighbor heights a and c, the
    degree of level s is piecewise constant in s with breakpoints at
    1, b, min(a, c) and max(a, c); counting each piece directly avoids
    the per-level loop.  The two routes are asserted equal in tests.
    """
    n = len(word)
    c0 = c1 = c2 = c3 = c4 = 0
    for idx in range(n):
        b = word[idx]
        left = word[idx - 1] if idx > 0 else 0
        right = word[idx + 1] if idx < n - 1 else 0
        neighbors = (left > 0) + (right > 0)
        if b == 1:
            # single vertex; both adjacent columns reach level 1 when present
            if neighbors == 0:
                c0 += 1
            elif neighbors == 1:
                c1 += 1
            else:
                c2 += 1
            continue
        # bottom vertex: upward edge plus one tie per present neighbor
        if neighbors == 2:
            c3 += 1
        elif neighbors == 1:
            c2 += 1
        else:
            c1 += 1
        # top vertex: downward edge plus ties to neighbors at least as tall
        top = 1 + (b <= left) + (b <= right)
        if top == 1:
            c1 += 1
        elif top == 2:
            c2 += 1
        else:
            c3 += 1
        mid = b - 2
        if mid > 0:
            # middle levels 2..b-1 have both vertical edges
            lo = min(left, right)
            hi = max(left, right)
            n_both = max(0, min(lo, b - 1) - 1)
            n_some = max(0, min(hi, b - 1) - 1)
            c4 += n_both
            c3 += n_some - n_both
            c2 += mid - n_some
    counts = {0: c0, 1: c1, 2: c2, 3: c3, 4: c4}
    return DegreeHistogram(
        n=n, counts=counts, horizontal_edges=horizontal_edge_count(word)
    )


def deg4_count_internal(a: int, b: int, c: int) -> int:
    """Degree-4 vertices in an internal column of height b between heights a, c.

    >>> deg4_count_internal(2, 3, 4)
    1
    """
    return max(0, min(a, c, b - 1) - 1)


def is_internal_peak_deg1(a: int, b: int, c: int) -> bool:
    """Whether the top vertex of an internal column has degree 1.

    Holds exactly when b >= 2 and b strictly exceeds both neighbors.
    """
    return b >= 2 and b > a and b > c


def deg1_external_count(word: Sequence[int]) -> int:
    """Degree-1 vertices contributed by the first and last columns.

    Only the top vertex of an external column can have degree 1: in the
    first column that happens iff the column has height 1 or starts a
    descent, mirrored for the last column.
    """
    n = len(word)
    if n < 2:
        raise ValueError("deg1_external_count needs n >= 2")
    return (
        (word[0] == 1)
        + (word[0] > word[1])
        + (word[-1] == 1)
        + (word[-2] < word[-1])
    )


def render_ascii(word: Sequence[int]) -> str:
    """Character drawing of the grid graph: columns, bars, and level ties.

    Vertices are ``o``, vertical edges ``|`` and horizontal edges
    ``---``.  Deterministic, and left-right symmetric so the drawing of
    a reversed word is the mirror image.
    """
    n = len(word)
    if n > MAX_RENDER_COLUMNS:
        raise ValueError(f"render_ascii supports n <= {MAX_RENDER_COLUMNS}")
    if n == 0:
        return ""
    lines = []
    for level in range(max(word), 0, -1):
        dots = []
        bars = []
        for i, h in enumerate(word):
            dots.append("o" if h >= level else " ")
            bars.append("|" if h >= level else " ")
            if i + 1 < n:
                dots.append("---" if min(h, word[i + 1]) >= level else "   ")
                bars.append("   ")
        lines.append("".join(dots).rstrip())
        if level > 1:
            lines.append("".join(bars).rstrip())
    return "\n".join(lines)
