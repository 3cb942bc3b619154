"""Dense truncated power series over exact rationals, plus identity checks.

A :class:`TruncatedSeries` stores coefficients 0..order and keeps every
operation exact; binary operations on mismatched orders truncate to the
shorter one.  On top of the arithmetic sit the algebraic elements used
by the verification suite (the Catalan series, sqrt(1-4x) and its
negative powers) and :func:`check_identity`, which rebuilds each
generating-function identity from the recurrence outputs and returns
the left-minus-right residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .enumeration import catalan_list
from .recurrences import (
    deg4_by_length,
    horizontal_edges_by_length,
    internal_deg1_by_length,
)

IDENTITY_IDS = ("HFE", "HX", "PX", "Q4FE", "Q4X")


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact power-series prefix: coefficients of x^0 .. x^order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> Fraction:
        return self.coeffs[index]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))[: k + 1]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs))[: k + 1]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            k = min(self.order, other.order)
            out = [Fraction(0)] * (k + 1)
            for i, a in enumerate(self.coeffs[: k + 1]):
                if a == 0:
                    continue
                for j in range(k + 1 - i):
                    out[i + j] += a * other.coeffs[j]
            return TruncatedSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def differentiate(self) -> "TruncatedSeries":
        """Termwise derivative; the order drops by one.

        >>> polynomial([0, 0, 1], 3).differentiate().coeffs
        (Fraction(0, 1), Fraction(2, 1), Fraction(0, 1))
        """
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return TruncatedSeries(
            tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1)
        )

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ValueError("cannot invert a series with zero constant term")
        lead = 1 / self.coeffs[0]
        out = [lead]
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                acc += self.coeffs[k] * out[m - k]
            out.append(-lead * acc)
        return TruncatedSeries(tuple(out))

    def divide_by_x(self) -> "TruncatedSeries":
        """Shift the series down one power; requires a zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("divide_by_x needs a zero constant term")
        if self.order == 0:
            raise ValueError("divide_by_x needs order >= 1")
        return TruncatedSeries(self.coeffs[1:])


def from_values(values: Iterable) -> TruncatedSeries:
    """Build a series whose coefficient at x^k is values[k]."""
    return TruncatedSeries(tuple(Fraction(v) for v in values))


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries((Fraction(0),) * (order + 1))


def one(order: int) -> TruncatedSeries:
    return polynomial([1], order)


def polynomial(coefficients: Sequence, order: int) -> TruncatedSeries:
    """The polynomial with the given low-order coefficients, padded with zeros."""
    coeffs = [Fraction(c) for c in coefficients[: order + 1]]
    coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
    return TruncatedSeries(tuple(coeffs))


def one_minus_4x(order: int) -> TruncatedSeries:
    return polynomial([1, -4], order)


def _binomial_expansion(exponent: Fraction, order: int) -> TruncatedSeries:
    # (1 - 4x)^exponent: coefficient at x^m is binom(exponent, m) (-4)^m,
    # built incrementally so each coefficient is auditable on its own
    coeffs = [Fraction(1)]
    for m in range(1, order + 1):
        coeffs.append(coeffs[-1] * (exponent - m + 1) / m * -4)
    return TruncatedSeries(tuple(coeffs))


def sqrt_one_minus_4x(order: int) -> TruncatedSeries:
    """Expansion of sqrt(1 - 4x); its square is 1 - 4x through the order."""
    return _binomial_expansion(Fraction(1, 2), order)


def binomial_power(exponent: Fraction, order: int) -> TruncatedSeries:
    """(1 - 4x)^exponent for exponent -1/2 or -3/2.

    The -1/2 power has the central binomials as coefficients; the -3/2
    power has (2m + 1) times the central binomials.
    """
    exponent = Fraction(exponent)
    if exponent not in (Fraction(-1, 2), Fraction(-3, 2)):
        raise ValueError(f"unsupported exponent {exponent}; use -1/2 or -3/2")
    return _binomial_expansion(exponent, order)


def catalan_series(order: int) -> TruncatedSeries:
    """The Catalan generating function prefix.

    Satisfies C = 1 + x C^2 and 1 - 2 x C = sqrt(1 - 4x) exactly through
    the stated order.

    >>> catalan_series(4).coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(2, 1), Fraction(5, 1), Fraction(14, 1))
    """
    return from_values(catalan_list(order))


def _x(order: int) -> TruncatedSeries:
    return polynomial([0, 1], order)


def _residual_hfe(order: int) -> TruncatedSeries:
    k = order + 1
    c = catalan_series(k)
    cp = c.differentiate()
    x = _x(k)
    u = one(k)
    h = from_values(horizontal_edges_by_length(k))
    lhs = (u - 2 * (x * c)) * h
    rhs = x * (x * cp - c + u) * (x * cp + 2 * c) + 2 * (c - u - x * c)
    return (lhs - rhs).truncate(order)


def _residual_hx(order: int) -> TruncatedSeries:
    x = _x(order)
    h = from_values(horizontal_edges_by_length(order))
    rhs = x * binomial_power(Fraction(-3, 2), order) - x * one_minus_4x(order).invert()
    return h - rhs


def _residual_px(order: int) -> TruncatedSeries:
    k = order + 1
    c = catalan_series(k)
    cp = c.differentiate()
    x = _x(k)
    u = one(k)
    p = from_values(internal_deg1_by_length(order))
    return (p - x * (x * cp - c + u)).truncate(order)


def _residual_q4fe(order: int) -> TruncatedSeries:
    k = order + 1
    c = catalan_series(k)
    cp = c.differentiate()
    x = _x(k)
    u = one(k)
    a = x * cp - 2 * c + 2 * u + x
    j = (u - 2 * x) * c + x - u
    xc_prime = (x * c).differentiate()
    q4 = from_values(deg4_by_length(k))
    lhs = (u - 2 * (x * c)) * q4
    rhs = x * a * (c + xc_prime) - 2 * (x * c) * j
    return (lhs - rhs).truncate(order)


def _residual_q4x(order: int) -> TruncatedSeries:
    k = order + 1
    root = sqrt_one_minus_4x(k)
    numerator = (
        polynomial([5, -50, 157, -150, 8], k)
        + polynomial([-5, 40, -87, 36], k) * root
    )
    if numerator[0] != 0:
        # the whole expression is only a power series because the
        # constant terms cancel; a nonzero constant is a hard failure
        raise RuntimeError(
            f"closed-form numerator has nonzero constant term {numerator[0]}"
        )
    inv = one_minus_4x(k).invert()
    closed = numerator.divide_by_x() * inv * inv * Fraction(1, 2)
    q4 = from_values(deg4_by_length(order))
    return (q4 - closed).truncate(order)


_IDENTITY_BUILDERS: dict[str, Callable[[int], TruncatedSeries]] = {
    "HFE": _residual_hfe,
    "HX": _residual_hx,
    "PX": _residual_px,
    "Q4FE": _residual_q4fe,
    "Q4X": _residual_q4x,
}


def check_identity(name: str, order: int) -> TruncatedSeries:
    """Left-minus-right residual of the named identity through ``order``.

    The H, P and Q4 inputs come from the recurrence module, so a zero
    residual ties the recurrence route to the generating-function route.
    Known names: HFE and Q4FE (the functional equations for the
    horizontal-edge and degree-4 totals), HX and Q4X (their closed
    generating functions) and PX (the closed form for internal
    degree-1 vertices).
    """
    if name not in _IDENTITY_BUILDERS:
        raise ValueError(f"unknown identity {name!r}; known: {', '.join(IDENTITY_IDS)}")
    if order < 8:
        raise ValueError(f"identity checks need order >= 8, got {order}")
    return _IDENTITY_BUILDERS[name](order)


def residual_summary(name: str, residual: TruncatedSeries) -> dict:
    """JSON-ready description of a residual series."""
    nonzero = [i for i, c in enumerate(residual.coeffs) if c != 0]
    return {
        "identity": name,
        "order": residual.order,
        "max_nonzero_index": nonzero[-1] if nonzero else -1,
        "first_nonzero": (
            f"{residual[nonzero[0]].numerator}/{residual[nonzero[0]].denominator}"
            if nonzero
            else None
        ),
    }


def residual_report(name: str, order: int) -> dict:
    """Run one identity check and summarize the residual."""
    return residual_summary(name, check_identity(name, order))
