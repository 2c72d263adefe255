"""Seeded deterministic sampling of rational configurations.

The generator is splitmix64 (Steele, Lea & Flood's published constants),
so campaigns reproduce bit for bit across platforms and implementations.
Each (seed, trial, attempt) triple derives an independent stream, which
makes trials order independent and lets degenerate samples be resampled
with a sub-seed without disturbing neighbouring trials.
"""

from __future__ import annotations

from fractions import Fraction

from .conic import INFINITY, IdealPoint, param_point, param_sort_key
from .projective import ProjLine, ProjPoint, point

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 finalizer: a 64-bit bijective mixer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Minimal splitmix64 stream."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n); modulo bias is irrelevant here."""
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def trial_rng(seed: int, trial: int, attempt: int = 0) -> SplitMix64:
    """The stream for one (seed, trial, attempt) triple."""
    return SplitMix64(mix64(mix64(seed ^ mix64(trial + 1)) + attempt))


class RandomRationalSampler:
    """Bounded rational parameters and derived geometric samples."""

    #: chance (out of 64) that a circle parameter is the point at infinity
    INFINITY_CHANCE = 1

    def __init__(self, rng: SplitMix64, bound: int = 10**4):
        self.rng = rng
        self.bound = bound

    def rational(self, bound: int | None = None) -> Fraction:
        b = bound or self.bound
        return Fraction(self.rng.randint(-b, b), self.rng.randint(1, b))

    def circle_param(self):
        if self.rng.below(64) < self.INFINITY_CHANCE:
            return INFINITY
        return self.rational()

    def distinct_params(self, count: int, convex: bool = False):
        """Pairwise distinct circle parameters, optionally in convex
        (cyclically sorted) order."""
        params: list = []
        seen = set()
        while len(params) < count:
            t = self.circle_param()
            key = param_sort_key(t)
            if key in seen:
                continue
            seen.add(key)
            params.append(t)
        if convex:
            params.sort(key=param_sort_key)
        return params

    def ideal_points(self, count: int, convex: bool = False):
        return [param_point(t) for t in self.distinct_params(count, convex)]

    def interior_point(self, bound: int | None = None) -> ProjPoint:
        """A rational point strictly inside the unit disk (rejection)."""
        b = bound or self.bound
        while True:
            den = self.rng.randint(2, b)
            x = Fraction(self.rng.randint(-den + 1, den - 1), den)
            y = Fraction(self.rng.randint(-den + 1, den - 1), den)
            if x * x + y * y < 1:
                return point(x, y)

    def exterior_line(self) -> ProjLine:
        """A line missing the closed disk: the polar of an interior point."""
        from .conic import UNIT_CIRCLE, polar

        return polar(UNIT_CIRCLE, self.interior_point())

    def points_on_line(self, line: ProjLine, count: int):
        """Distinct points on a line, sampled via a rational parameter."""
        base = None
        direction = None
        for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            u = line.coords
            cand = (
                u[1] * e[2] - u[2] * e[1],
                u[2] * e[0] - u[0] * e[2],
                u[0] * e[1] - u[1] * e[0],
            )
            if any(cand):
                if base is None:
                    base = ProjPoint(*cand)
                elif ProjPoint(*cand) != base:
                    direction = ProjPoint(*cand)
                    break
        assert base is not None and direction is not None
        out: list[ProjPoint] = []
        while len(out) < count:
            t = self.rational()
            p = ProjPoint(
                *(
                    Fraction(base.coords[i]) + t * direction.coords[i]
                    for i in range(3)
                )
            )
            if p not in out:
                out.append(p)
        return out
