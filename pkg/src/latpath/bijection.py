"""The reversed-complement bijection between sibling pattern classes.

For an L-free pattern, the class for the pattern and the class for its
reversed complement have equal generating functions.  The witnessing map
is defined on the members whose pattern height does not exceed the
pattern's amplitude: avoiders map to their reversed complement, and an
arch whose head carries the pattern at full height recurses down its
tail.  Higher levels are compared through series equality only.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import enumerate as brute
from .gf import class_gf
from .paths import (
    DYCK,
    MOTZKIN,
    Family,
    Path,
    Pattern,
    _decompose,
    _pattern_height,
    _prefix_extrema,
    profile,
    reversed_complement,
)


class DomainError(Exception):
    """The map is applied outside its domain (levels 0..amplitude)."""


@dataclass(frozen=True)
class PatternPair:
    """A pattern together with its reversed complement."""

    pi: Pattern
    sigma: Pattern

    @classmethod
    def of(cls, pi: Pattern) -> "PatternPair":
        sigma = reversed_complement(pi)
        assert sigma.amplitude == pi.amplitude
        return cls(pi, sigma)


def _rc(s: str) -> str:
    return reversed_complement(s) if s else s


def _phi(s: str, pi: str, mp: int, r: int) -> str:
    if not s:
        return s
    if set(pi) == {"F"} or pi not in s:
        return _rc(s)
    variant, alpha, beta, gamma = _decompose(s)
    if variant == "Fg":
        # the single occurrence straddles the flat step and an avoider tail
        return _rc(s)
    if variant != "UaDb":
        raise DomainError("the map is defined on flat-step-free arch families only")
    head = s[: len(alpha) + 2]
    h_head = _pattern_height(head, profile(head), pi, mp)
    if h_head == 0:
        return _rc(s)
    return "U" + _rc(alpha) + "D" + _phi(beta, pi, mp, r)


def phi(path: Path, pattern: Pattern) -> Path:
    """Map a member at level 0 or amplitude to the sibling class.

    Raises DomainError when the path's pattern height exceeds the
    amplitude (the map is only defined on levels 0..amplitude) or when
    the path is not a member at all.
    """
    if path.family not in (DYCK, MOTZKIN):
        raise DomainError(f"map not defined on family {path.family.name}")
    if "L" in pattern.steps:
        raise DomainError("map not defined for patterns containing L")
    pi = pattern.steps
    mp, mn = _prefix_extrema(pi)
    r = mp - mn
    h = _pattern_height(path.steps, profile(path.steps), pi, mp)
    if h > r:
        raise DomainError(f"pattern height {h} exceeds amplitude {r}")
    if not brute.is_member(path, pattern):
        raise DomainError("path is not a member of the class")
    return Path(_phi(path.steps, pi, mp, r), path.family)


def verify_reversed_complement_symmetry(family: Family, pattern: Pattern, order: int) -> bool:
    """Series equality between the classes of a pattern and its reversed
    complement, coefficientwise to the given order."""
    if "L" in pattern.steps:
        raise ValueError("reversed complement is defined for L-free patterns only")
    sigma = reversed_complement(pattern)
    lhs = class_gf(family, pattern, order)
    rhs = class_gf(family, sigma, order)
    return lhs.A == rhs.A
