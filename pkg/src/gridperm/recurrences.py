"""Quadratic-time exact dynamic programs for the classwise totals.

Each sequence sums a per-split gluing increment over the block
decomposition of Av_n(213).  The increments are kept literally as
derived, not algebraically simplified, so this route shares nothing
with the closed-form module it is checked against.
"""

from __future__ import annotations

from .enumeration import catalan_list


def horizontal_edges_by_length(n_max: int) -> list[int]:
    """Totals H_n of horizontal edges over Av_n(213) for 0 <= n <= n_max.

    Gluing blocks of sizes i and j around a new minimum adds
    (i-1)(j+1) inside the lifted left block, (j-1) inside the right
    block, and one tie on each side of the minimum column, each term
    only when the block is long enough.
    """
    cat = catalan_list(max(n_max, 0))
    h = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        total = 0
        for i in range(n):
            j = n - 1 - i
            glue = 0
            if i >= 2:
                glue += (i - 1) * (j + 1)
            if j >= 2:
                glue += j - 1
            if i >= 1:
                glue += 1
            if j >= 1:
                glue += 1
            total += cat[j] * h[i] + cat[i] * h[j] + cat[i] * cat[j] * glue
        h[n] = total
    return h


def internal_deg1_by_length(n_max: int) -> list[int]:
    """Totals P_n of internal-column degree-1 vertices (internal peaks).

    Peaks inside either block survive the gluing; a new peak appears at
    the block boundary iff the left block (length >= 2) ends with an
    ascent or the right block (length >= 2) starts with a descent, and
    each of those boundary counts convolves to C_{n-1} - C_{n-2}.
    """
    cat = catalan_list(max(n_max, 0))
    p = [0] * (n_max + 1)
    for n in range(3, n_max + 1):
        conv = sum(cat[n - 1 - i] * p[i] for i in range(n))
        p[n] = 2 * conv + 2 * (cat[n - 1] - cat[n - 2])
    return p


def initial_descents_by_length(m_max: int) -> list[int]:
    """Counts D_m of members of Av_m(213) whose first two entries descend.

    A left block of size 1 forces a descent (top value then the
    minimum); longer left blocks descend iff they themselves do.
    """
    cat = catalan_list(max(m_max, 0))
    d = [0] * (m_max + 1)
    for m in range(2, m_max + 1):
        d[m] = cat[m - 2] + sum(d[i] * cat[m - 1 - i] for i in range(2, m))
    return d


def internal_min_by_length(m_max: int) -> list[int]:
    """Counts J_m of members of Av_m(213) whose minimum sits strictly inside.

    The minimum is at an end for C_{m-1} words each way, so
    J_m = C_m - 2 C_{m-1} once m >= 2.
    """
    cat = catalan_list(max(m_max, 0))
    return [0 if m <= 1 else cat[m] - 2 * cat[m - 1] for m in range(m_max + 1)]


def deg4_by_length(n_max: int) -> list[int]:
    """Totals Q4_n of degree-4 vertices over Av_n(213).

    Lifting a block by t adds t degree-4 vertices per internal column,
    one fewer at the column holding the block's own minimum when that
    column is internal; the left block is lifted by j+1 and the right
    block by 1.
    """
    cat = catalan_list(max(n_max, 0))
    j_seq = internal_min_by_length(max(n_max, 0))
    q = [0] * (n_max + 1)
    for n in range(2, n_max + 1):
        total = 0
        for i in range(n):
            j = n - 1 - i
            shift = (j + 1) * max(i - 2, 0) + max(j - 2, 0)
            total += (
                cat[j] * q[i]
                + cat[i] * q[j]
                + cat[i] * cat[j] * shift
                - cat[j] * j_seq[i]
                - cat[i] * j_seq[j]
            )
        q[n] = total
    return q
