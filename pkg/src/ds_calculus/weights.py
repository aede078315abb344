"""Exact weight vectors over the epsilon/delta coordinate basis.

A weight is a pair of tuples of rationals: the coefficients of the
eps-basis functionals and of the delta-basis functionals of the Cartan
dual.  All arithmetic is exact (``fractions.Fraction``); denominators
other than 1 or 2 never occur for the lattices used here, but nothing
below enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

Coords = Tuple[Fraction, ...]

HALF = Fraction(1, 2)


def coerce(values: Iterable) -> Coords:
    return tuple(Fraction(v) for v in values)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}: {exc}") from None


def format_rational(r: Fraction) -> str:
    return str(r)


@dataclass(frozen=True)
class Weight:
    """An element of the Cartan dual in eps/delta coordinates."""

    eps: Coords
    delta: Coords = ()

    def __post_init__(self):
        object.__setattr__(self, "eps", coerce(self.eps))
        object.__setattr__(self, "delta", coerce(self.delta))

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.eps), len(self.delta))

    def coords(self) -> Coords:
        return self.eps + self.delta

    def _check_shape(self, other: "Weight") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_shape(other)
        return Weight(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_shape(other)
        return Weight(
            tuple(a - b for a, b in zip(self.eps, other.eps)),
            tuple(a - b for a, b in zip(self.delta, other.delta)),
        )

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.eps), tuple(-a for a in self.delta))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.eps), tuple(c * a for a in self.delta))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords())

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords())

    def to_json(self) -> dict:
        return {
            "eps": [format_rational(a) for a in self.eps],
            "delta": [format_rational(a) for a in self.delta],
        }

    @staticmethod
    def from_json(data: dict) -> "Weight":
        return Weight(
            tuple(parse_rational(s) for s in data.get("eps", [])),
            tuple(parse_rational(s) for s in data.get("delta", [])),
        )

    def __str__(self) -> str:
        e = ",".join(format_rational(a) for a in self.eps)
        d = ",".join(format_rational(a) for a in self.delta)
        return f"({e}|{d})" if self.delta or not self.eps else f"({e})"


def weight(eps: Iterable = (), delta: Iterable = ()) -> Weight:
    return Weight(coerce(eps), coerce(delta))


def zero_weight(eps_rank: int, delta_rank: int = 0) -> Weight:
    return Weight((Fraction(0),) * eps_rank, (Fraction(0),) * delta_rank)


def basis_eps(i: int, eps_rank: int, delta_rank: int = 0) -> Weight:
    e = [Fraction(0)] * eps_rank
    e[i] = Fraction(1)
    return Weight(tuple(e), (Fraction(0),) * delta_rank)


def basis_delta(j: int, eps_rank: int, delta_rank: int) -> Weight:
    d = [Fraction(0)] * delta_rank
    d[j] = Fraction(1)
    return Weight((Fraction(0),) * eps_rank, tuple(d))


def dot(u: Coords, v: Coords) -> Fraction:
    """Plain coordinate dot product (not the invariant form)."""
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
