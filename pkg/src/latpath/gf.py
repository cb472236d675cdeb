"""Generating functions of the pattern-height classes.

Implements the level recurrence A_k = p * A_{k-1} * (q + sum_{i<=k} A_i)
anchored by given base functions, the Moebius step law and quadratic
fixed-point equation satisfied by the total generating function, and the
explicit closed forms for the arch-decomposition families.  Everything is
computed over exact truncated series and cross-checked between routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import enumerate as brute
from .paths import DYCK, MOTZKIN, SKEW_DYCK, SKEW_MOTZKIN, Family, Pattern
from .series import Series, div, moebius, rational, sqrt


class GFError(Exception):
    pass


class NoConvergence(GFError):
    """The level iteration or fixed-point sweep failed to stabilize."""


class NonUnitLinearCoefficient(GFError):
    """The quadratic's linear coefficient c - b has constant term 0."""


class ConsistencyFailure(GFError):
    """Two independent computation routes disagree."""


@dataclass(frozen=True)
class SystemSpec:
    """Data defining the level system: p, q, the anchor index r and bases.

    ``bases[k]`` anchors level k for k = 0..r; the recurrence produces all
    higher levels.  p must have valuation >= 1 so that the iteration
    gains at least one order of x per level.
    """

    p: Series
    q: Series
    r: int
    bases: tuple

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be >= 0")
        if len(self.bases) != self.r + 1:
            raise ValueError(f"expected {self.r + 1} base functions")
        v = self.p.valuation()
        if v is None or v < 1:
            raise ValueError("p must have valuation >= 1")

    @property
    def u(self) -> Series:
        return self.bases[-1]

    @property
    def v(self) -> Series:
        acc = Series.zero(self.u.order)
        for s in self.bases[:-1]:
            acc = acc + s
        return acc


@dataclass(frozen=True)
class MoebiusCoeffs:
    """The four series driving the step law B_k = (a + b*B_{k-1}) / (c + d*B_{k-1})."""

    a: Series
    b: Series
    c: Series
    d: Series


@dataclass(frozen=True)
class ClassGF:
    """Total and per-level generating functions of one class instance."""

    family: Family | None
    pattern: Pattern | None
    u: Series
    v: Series
    A: Series
    per_level: tuple

    def level(self, k: int) -> Series:
        if k < len(self.per_level):
            return self.per_level[k]
        return Series.zero(self.A.order)

    def partial_sum(self, k: int) -> Series:
        acc = Series.zero(self.A.order)
        for i in range(k + 1):
            acc = acc + self.level(i)
        return acc


def moebius_coeffs(p: Series, q: Series, u: Series, v: Series) -> MoebiusCoeffs:
    """The Moebius coefficients determined by p, q, u = A_r and v = B_r - A_r."""
    s = q + u + v
    a = p * p * q * v * s - p * q * u - u - v
    b = -(p * (p * q + 1) * s)
    c = -(p * p * v * s) - q * p - p * v - 1
    d = p * p * s
    return MoebiusCoeffs(a, b, c, d)


def iterate_system(spec: SystemSpec, order: int) -> ClassGF:
    """Run the level recurrence until the levels vanish at the order.

    Solving the recurrence for the new level gives
    A_k = p * A_{k-1} * (q + B_{k-1}) / (1 - p * A_{k-1}), a division by a
    unit since p(0) = 0.  The valuation of A_k grows strictly, so the
    loop terminates; a defensive cap raises NoConvergence.
    """
    p = spec.p.truncate(min(spec.p.order, order))
    q = spec.q.truncate(min(spec.q.order, order))
    bases = [s.truncate(min(s.order, order)) for s in spec.bases]
    per_level = list(bases)
    B = Series.zero(order)
    for s in bases:
        B = B + s
    A_prev = bases[-1]
    k = spec.r
    while not A_prev.is_zero() or k == spec.r:
        if k > order + spec.r + 2:
            raise NoConvergence(f"levels still nonzero after k={k}")
        A_next = div(p * A_prev * (q + B), 1 - p * A_prev)
        if A_next.is_zero():
            break
        per_level.append(A_next)
        B = B + A_next
        A_prev = A_next
        k += 1
    return ClassGF(None, None, spec.u, spec.v, B, tuple(per_level))


def solve_quadratic(coeffs: MoebiusCoeffs, order: int) -> Series:
    """The unique series root of d*A^2 + (c - b)*A - a = 0.

    Fixed-point sweeps A <- (a - d*A^2) / (c - b), seeded with the constant
    a(0)/(c - b)(0); every sweep fixes at least one more coefficient
    because d has positive valuation in all instances arising here.
    """
    cb = coeffs.c - coeffs.b
    if cb.coeffs[0] == 0:
        raise NonUnitLinearCoefficient("(c - b)(0) = 0")
    order = min(order, coeffs.a.order, coeffs.d.order, cb.order)
    a = coeffs.a.truncate(order)
    d = coeffs.d.truncate(order)
    cb = cb.truncate(order)
    A = Series.constant(a.coeffs[0] / cb.coeffs[0], order)
    for _ in range(order + 2):
        nxt = div(a - d * A * A, cb)
        if nxt == A:
            return A
        A = nxt
    raise NoConvergence("quadratic fixed point did not stabilize")


def residual(coeffs: MoebiusCoeffs, A: Series) -> Series:
    """d*A^2 + (c - b)*A - a; identically zero certifies A."""
    return coeffs.d * A * A + (coeffs.c - coeffs.b) * A - coeffs.a


def moebius_step(coeffs: MoebiusCoeffs, B_prev: Series) -> Series:
    """One application of the step law to a partial sum."""
    return moebius(coeffs.a, coeffs.b, coeffs.c, coeffs.d, B_prev)


def dyck_closed_form(
    u: Series, v: Series, order: int, var: Series | None = None
) -> Series:
    """Closed form of the total series for the pure arch decomposition.

    This is the p = var, q = 0 solution; pass var = x**2 to apply the form
    "on the variable x squared" (u and v stay in the original variable),
    which yields the flat-step families.
    """
    x = Series.x(order) if var is None else var.truncate(min(var.order, order))
    u = u.truncate(min(u.order, order))
    v = v.truncate(min(v.order, order))
    x2 = x * x
    x3 = x2 * x
    x4 = x2 * x2
    delta = (
        u * u * v * v * x4
        + 2 * u * v * v * v * x4
        + v * v * v * v * x4
        - 2 * u * u * v * x3
        - 2 * u * v * v * x3
        - 3 * u * u * x2
        - 6 * x2 * u * v
        - 2 * x2 * v * v
        - 2 * u * x
        + 1
    )
    num = x2 * u * v + x2 * v * v - u * x + 1 - sqrt(delta)
    den = 2 * x2 * (v + u)
    return div(num, den)


def skew_closed_form(
    u: Series, v: Series, order: int, var: Series | None = None
) -> Series:
    """Closed form for the arch-or-left decomposition (p = var, q = 1)."""
    x = Series.x(order) if var is None else var.truncate(min(var.order, order))
    u = u.truncate(min(u.order, order))
    v = v.truncate(min(v.order, order))
    x2 = x * x
    x3 = x2 * x
    x4 = x2 * x2
    delta = (
        u * u * v * v * x4
        + 2 * u * v * v * v * x4
        + v * v * v * v * x4
        + 2 * u * u * v * x4
        + 6 * u * v * v * x4
        + 4 * v * v * v * x4
        - 2 * u * u * v * x3
        + u * u * x4
        - 2 * u * v * v * x3
        + 6 * u * v * x4
        + 6 * v * v * x4
        - 2 * x3 * u * u
        - 4 * u * v * x3
        + 2 * u * x4
        + 4 * v * x4
        - 3 * u * u * x2
        - 6 * u * v * x2
        - 2 * u * x3
        - 2 * v * v * x2
        + x4
        - 6 * x2 * u
        - 4 * v * x2
        - 2 * x * u
        - 2 * x2
        + 1
    )
    num = u * v * x2 + v * v * x2 - x2 * u - x * u - x2 + 1 - sqrt(delta)
    den = 2 * x2 * (1 + v + u)
    return div(num, den)


# -- closed-form base functions for two worked patterns -------------------


def dyck_uud_bases(order: int) -> tuple:
    """Exact bases for the arch family, pattern UUD (amplitude 2):
    level 0 is 1/(1-x), level 1 vanishes, level 2 is x^2/((x-1)(x^2+x-1))."""
    a0 = rational([1], [1, -1], order)
    a1 = Series.zero(order)
    # (x-1)(x^2+x-1) expands to x^3 - 2x + 1
    a2 = rational([0, 0, 1], [1, -2, 0, 1], order)
    return (a0, a1, a2)


def dyck_duu_bases(order: int) -> tuple:
    """Exact bases for the arch family, pattern DUU (amplitude 2):
    level 0 is (x-1)/(2x-1), level 2 is x^3/(2x-1)^2.

    Level 2 collects the members whose occurrences all start at ordinate
    one; an occurrence may straddle an arch junction and further arches
    may follow it, giving x^2 * A_0 * (A_0 - 1) / (1 - x) once the tail
    is accounted for.  (Dropping the trailing 1/(1-x) undercounts from
    size 4 on; the level series here is the one the exhaustive oracle
    confirms and the one whose level system reproduces the class totals.)
    """
    a0 = rational([-1, 1], [-1, 2], order)
    a1 = Series.zero(order)
    a2 = rational([0, 0, 0, 1], [1, -4, 4], order)
    return (a0, a1, a2)


CLOSED_FORM_BASES = {
    (DYCK.name, "UUD"): dyck_uud_bases,
    (DYCK.name, "DUU"): dyck_duu_bases,
}


def default_order(family: Family) -> int:
    """Smallest truncation orders covering the reference tables with margin."""
    return 11 if family.semilength else 12


def system_for(
    family: Family,
    pattern: Pattern,
    order: int,
    bases: tuple | None = None,
    budget: int | None = None,
) -> SystemSpec:
    """Build the level system for a family/pattern instance.

    p is x for the semilength families and x^2 for the step-count ones;
    q is 0, 1 (arch-or-left) or x*A_0 + 1 (the four-variant family).  The
    bases come from the exhaustive oracle unless supplied explicitly.

    The system is anchored at level max(amplitude, 1): the recurrence for
    level k needs the head of an arch to contain the pattern, which level
    k - 1 only guarantees for k - 1 >= 1.  For patterns of positive
    amplitude that is the usual anchor; for all-flat patterns level 1 is
    tabulated by the oracle as well.
    """
    if not set(pattern.steps) <= family.alphabet:
        raise ValueError(
            f"pattern {pattern.steps!r} uses steps outside the {family.name} alphabet"
        )
    r = max(pattern.amplitude, 1)
    if bases is None:
        bases = tuple(
            brute.base_series(family, pattern, k, order, budget) for k in range(r + 1)
        )
    else:
        bases = tuple(s.truncate(min(s.order, order)) for s in bases)
        if len(bases) != r + 1:
            raise ValueError(f"expected {r + 1} bases for amplitude {r}")
    x = Series.x(order)
    p = x if family.semilength else x * x
    if family is DYCK or family is MOTZKIN:
        q = Series.zero(order)
    elif family is SKEW_DYCK:
        q = Series.one(order)
    elif family is SKEW_MOTZKIN:
        q = x * bases[0] + 1
    else:
        raise ValueError(f"unsupported family {family!r}")
    return SystemSpec(p, q, r, bases)


def class_gf(
    family: Family,
    pattern: Pattern,
    order: int,
    bases: tuple | None = None,
    check: bool = True,
    budget: int | None = None,
) -> ClassGF:
    """Total and per-level series for one family/pattern class.

    Runs the level iteration and, when ``check`` is set, confirms the
    result against the quadratic route, raising ConsistencyFailure on any
    coefficient mismatch.
    """
    if isinstance(pattern, str):
        pattern = Pattern(pattern)
    if order == 0:
        # only the empty path: the level system is trivial at this order
        r = max(pattern.amplitude, 1)
        if bases is None:
            bases = tuple(
                brute.base_series(family, pattern, k, 0, budget) for k in range(r + 1)
            )
        else:
            bases = tuple(s.truncate(0) for s in bases)
        total = Series.zero(0)
        for s in bases:
            total = total + s
        v = Series.zero(0)
        for s in bases[:-1]:
            v = v + s
        return ClassGF(family, pattern, bases[-1], v, total, tuple(bases))
    spec = system_for(family, pattern, order, bases=bases, budget=budget)
    result = iterate_system(spec, order)
    if check:
        coeffs = moebius_coeffs(spec.p, spec.q, spec.u, spec.v)
        quad = solve_quadratic(coeffs, order)
        if quad != result.A:
            raise ConsistencyFailure(
                f"iteration and quadratic disagree for {family.name}/{pattern.steps}"
            )
    return ClassGF(family, pattern, spec.u, spec.v, result.A, result.per_level)
