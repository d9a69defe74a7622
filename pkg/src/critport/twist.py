"""Exact twist numbers for untwisting a web against its lift.

Twists are measured in turns and kept as plain rationals: 3/2 turns and 1/2
turn are different answers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .angles import InvalidInput


def _check_degree(d: int) -> int:
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise InvalidInput(f"degree must be an integer >= 2, got {d!r}")
    return d


def solve_external_twist(d: int, difference: Fraction) -> Fraction:
    """The unique ``t`` with ``t - t/d = difference``.

    >>> solve_external_twist(3, Fraction(1))
    Fraction(3, 2)
    """
    d = _check_degree(d)
    return d * Fraction(difference) / (d - 1)


@dataclass(frozen=True)
class TwistSystem:
    """``x_i = x_{i+1}/d_i + y_i`` around a cycle of length ``n``, solved exactly."""

    degrees: tuple[int, ...]
    differences: tuple[Fraction, ...]
    solution: tuple[Fraction, ...]

    @property
    def total_degree(self) -> int:
        return math.prod(self.degrees)

    def residuals(self) -> tuple[Fraction, ...]:
        n = len(self.degrees)
        x, y, d = self.solution, self.differences, self.degrees
        return tuple(x[i] - x[(i + 1) % n] / d[i] - y[i] for i in range(n))

    def __str__(self):
        return "\n".join(f"x_{i} = {x}" for i, x in enumerate(self.solution))


def solve_cycle_twists(degrees: Sequence[int], differences: Sequence[Fraction]) -> TwistSystem:
    """Solve the cyclic system by unrolling it once around the cycle.

    Substituting each equation into the previous one gives
    ``x_0 = y_0 + y_1/d_0 + ... + x_0/D`` with ``D`` the product of the
    degrees, so ``x_0`` is explicit and the rest follow from
    ``x_{i+1} = d_i (x_i - y_i)``.
    """
    degrees = tuple(_check_degree(d) for d in degrees)
    ys = tuple(Fraction(y) for y in differences)
    if not degrees:
        raise InvalidInput("a twist cycle needs at least one equation")
    if len(degrees) != len(ys):
        raise InvalidInput(f"{len(degrees)} degrees but {len(ys)} differences")

    D = math.prod(degrees)
    acc, scale = Fraction(0), 1
    for d, y in zip(degrees, ys):
        acc += y / scale
        scale *= d
    xs = [D * acc / (D - 1)]
    for d, y in zip(degrees[:-1], ys[:-1]):
        xs.append(d * (xs[-1] - y))

    system = TwistSystem(degrees, ys, tuple(xs))
    if any(system.residuals()):
        raise ArithmeticError("twist solution failed its own equations")
    return system


def solve_preperiodic_twist(y: Fraction) -> Fraction:
    """A strictly preperiodic Fatou vertex just absorbs its measured difference."""
    return Fraction(y)
