"""Exhaustive-search oracle for the pattern-height path classes.

Generates every valid path of a family size by size (pruned backtracking,
deterministic lexicographic order), decides class membership directly from
the first-return recurrence condition, and tabulates exact counts by size
and by pattern-height level.  Deliberately independent of the generating
function machinery so the two routes can cross-validate each other.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .paths import (
    Family,
    Path,
    Pattern,
    _decompose,
    _pattern_height,
    _prefix_extrema,
    _steps_of,
    profile,
)
from .series import Series

DEFAULT_BUDGET = 5_000_000
BUDGET_ENV_VAR = "LATPATH_BUDGET"

_CACHE_LIMIT = 300_000  # materialize path lists only below this many paths

_string_cache: dict = {}
_level_cache: dict = {}
_member_memo: dict = {}


class BudgetExceeded(Exception):
    """The exhaustive search exceeded its configured path budget."""


def effective_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_BUDGET


def clear_caches() -> None:
    _string_cache.clear()
    _level_cache.clear()
    _member_memo.clear()


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, n: int = 1) -> None:
        self.left -= n
        if self.left < 0:
            raise BudgetExceeded(
                f"path budget exhausted (limit via {BUDGET_ENV_VAR} or budget=)"
            )


def _walk(fam: Family, size: int, visit, budget: _Budget) -> None:
    """Backtracking generator of all valid paths of the given size.

    ``visit(steps, prof)`` is called once per path with the step string and
    the live ordinate profile (length + 1 ints; do not retain it).  Children
    are explored in lexicographic step order (D < F < L < U), so paths are
    visited in lexicographic order.  The U/L overlap rule is enforced
    during generation by tracking traversed diagonal segments.
    """
    total = fam.step_count(size)
    has_f = "F" in fam.alphabet
    has_l = "L" in fam.alphabet
    chars: list[str] = []
    prof = [0]
    useg: set = set()
    lseg: set = set()

    def rec(t: int, x: int, y: int) -> None:
        if t == total:
            if y == 0:
                budget.spend()
                visit("".join(chars), prof)
            return
        rem1 = total - t - 1
        if y >= 1 and (has_f or (rem1 - (y - 1)) % 2 == 0):
            chars.append("D")
            prof.append(y - 1)
            rec(t + 1, x + 1, y - 1)
            chars.pop()
            prof.pop()
        if has_f and y <= rem1:
            chars.append("F")
            prof.append(y)
            rec(t + 1, x + 1, y)
            chars.pop()
            prof.pop()
        if has_l and y >= 1 and (has_f or (rem1 - (y - 1)) % 2 == 0):
            key = ((x - 1) << 8) | (y - 1)
            if key not in useg:
                lseg.add(key)
                chars.append("L")
                prof.append(y - 1)
                rec(t + 1, x - 1, y - 1)
                chars.pop()
                prof.pop()
                lseg.discard(key)
        if y + 1 <= rem1 and (has_f or (rem1 - (y + 1)) % 2 == 0):
            ok = True
            if has_l:
                key = (x << 8) | y
                if key in lseg:
                    ok = False
                else:
                    useg.add(key)
            if ok:
                chars.append("U")
                prof.append(y + 1)
                rec(t + 1, x + 1, y + 1)
                chars.pop()
                prof.pop()
                if has_l:
                    useg.discard(key)
    rec(0, 0, 0)


def _path_strings(fam: Family, size: int, budget: _Budget) -> list[str]:
    key = (fam.name, size)
    cached = _string_cache.get(key)
    if cached is not None:
        return cached
    out: list[str] = []
    _walk(fam, size, lambda s, prof: out.append(s), budget)
    if len(out) <= _CACHE_LIMIT:
        _string_cache[key] = out
    return out


def generate_paths(family: Family, size: int, budget: int | None = None) -> list[Path]:
    """All valid paths of the family with the given size, lexicographic order."""
    if size < 0:
        raise ValueError("size must be >= 0")
    strings = _path_strings(family, size, _Budget(effective_budget(budget)))
    return [Path(s, family) for s in strings]


# -- membership (recurrence condition on the first-return decomposition) --


def _ph(s: str, pi: str, mp: int) -> int:
    return _pattern_height(s, profile(s), pi, mp)


def _is_member(s: str, fam: Family, pi: str, mp: int, memo: dict) -> bool:
    if not s:
        return True
    hit = memo.get(s)
    if hit is not None:
        return hit
    variant, alpha, beta, gamma = _decompose(s)
    if variant == "UaDb":
        head = s[: len(alpha) + 2]
        ok = (
            _ph(head, pi, mp) >= _ph(beta, pi, mp)
            and _is_member(alpha, fam, pi, mp, memo)
            and _is_member(beta, fam, pi, mp, memo)
        )
    elif variant == "Fg":
        ok = _ph("F", pi, mp) >= _ph(gamma, pi, mp) and _is_member(
            gamma, fam, pi, mp, memo
        )
    elif variant == "UaL":
        ok = bool(alpha) and _is_member(alpha, fam, pi, mp, memo)
    else:  # UaLFg
        ok = (
            bool(alpha)
            and _ph("F", pi, mp) >= _ph(gamma, pi, mp)
            and _is_member(alpha, fam, pi, mp, memo)
            and _is_member(gamma, fam, pi, mp, memo)
        )
    memo[s] = ok
    return ok


def _memo_for(fam: Family, pi: str) -> dict:
    key = (fam.name, pi)
    memo = _member_memo.get(key)
    if memo is None:
        memo = _member_memo[key] = {}
    return memo


def is_member(path: Path, pattern: Pattern) -> bool:
    """Membership in the class closed under the first-return condition.

    The empty path is a member; a nonempty path decomposes into its
    first-return variant, every component must be a member, and the
    family's height condition must hold (e.g. h(U alpha D) >= h(beta)
    for the arch variant, evaluated on the indicated sub-paths).
    """
    pi = _steps_of(pattern)
    mp = _prefix_extrema(pi)[0]
    return _is_member(path.steps, path.family, pi, mp, _memo_for(path.family, pi))


# -- per-level counting --------------------------------------------------


@dataclass(frozen=True)
class ClassCountTable:
    """Exact member counts by size n and pattern-height level k."""

    family: Family
    pattern: Pattern
    max_size: int
    counts: dict

    def total(self, n: int) -> int:
        return sum(c for (m, _k), c in self.counts.items() if m == n)

    def totals(self, start: int = 1) -> list[int]:
        return [self.total(n) for n in range(start, self.max_size + 1)]

    def level(self, k: int) -> list[int]:
        return [self.counts.get((n, k), 0) for n in range(self.max_size + 1)]

    def max_level(self) -> int:
        return max((k for (_n, k) in self.counts), default=0)


def count_class(
    family: Family, pattern: Pattern, max_size: int, budget: int | None = None
) -> ClassCountTable:
    """Count all members by size and level via full enumeration."""
    pi = _steps_of(pattern)
    mp = _prefix_extrema(pi)[0]
    memo = _memo_for(family, pi)
    b = _Budget(effective_budget(budget))
    counts: dict = {}
    for n in range(max_size + 1):
        for s in _path_strings(family, n, b):
            if _is_member(s, family, pi, mp, memo):
                k = _ph(s, pi, mp)
                key = (n, k)
                counts[key] = counts.get(key, 0) + 1
    return ClassCountTable(family, Pattern(pi), max_size, counts)


def member_paths(
    family: Family, pattern: Pattern, size: int, budget: int | None = None
) -> list[Path]:
    """All class members of one size, lexicographic order."""
    pi = _steps_of(pattern)
    mp = _prefix_extrema(pi)[0]
    memo = _memo_for(family, pi)
    b = _Budget(effective_budget(budget))
    return [
        Path(s, family)
        for s in _path_strings(family, size, b)
        if _is_member(s, family, pi, mp, memo)
    ]


def _classify_levels(fam: Family, pats: list, levels: list, s: str, prof) -> None:
    # pats[i] = (pi, mp, cap_start, memo); levels[i] = per-size dict
    # level -> count.  An occurrence starting at ordinate prof[i] has
    # height prof[i] + mp, so the path's level is mp + max occurrence
    # start (0 if the pattern does not occur).  Only the anchor levels
    # 0..max(amplitude, 1) are tabulated: the scan aborts as soon as a
    # start exceeds cap_start.  Level-0 paths are members outright, so
    # the membership recursion runs only on level >= 1 candidates.
    for idx, (pi, mp, cap_start, memo) in enumerate(pats):
        i = s.find(pi)
        if i < 0:
            bucket = levels[idx]
            bucket[0] = bucket.get(0, 0) + 1
            continue
        top = 0
        while i >= 0:
            y = prof[i]
            if y > cap_start:
                top = -1
                break
            if y > top:
                top = y
            i = s.find(pi, i + 1)
        if top < 0:
            continue
        level = mp + top
        if level == 0 or _is_member(s, fam, pi, mp, memo):
            bucket = levels[idx]
            bucket[level] = bucket.get(level, 0) + 1


def ensure_levels(
    family: Family, patterns, max_size: int, budget: int | None = None
) -> None:
    """Warm the base-level cache for a batch of patterns up to max_size.

    The anchor levels 0..max(amplitude, 1) are tabulated in one
    enumeration sweep per path size, shared across all patterns that
    still miss that size.  Paths at level 0 are members outright (an
    avoider satisfies every height condition with 0 >= 0; for all-flat
    patterns any path whose occurrences sit on the axis does too), so
    the membership recursion runs only on the thin level >= 1 candidates.
    """
    b = _Budget(effective_budget(budget))
    metas = []
    for pattern in patterns:
        pi = _steps_of(pattern)
        mx, mn = _prefix_extrema(pi)
        cap = max(mx - mn, 1)
        store = _level_cache.setdefault((family.name, pi), {})
        metas.append((pi, mx, cap - mx, _memo_for(family, pi), store))
    for n in range(max_size + 1):
        pending = [m for m in metas if n not in m[4]]
        if not pending:
            continue
        pats = [(pi, mp, cap_start, memo) for (pi, mp, cap_start, memo, _st) in pending]
        levels: list[dict] = [{} for _ in pending]
        cached = _string_cache.get((family.name, n))
        if cached is not None:
            for s in cached:
                _classify_levels(family, pats, levels, s, profile(s))
        else:
            _walk(
                family,
                n,
                lambda s, prof: _classify_levels(family, pats, levels, s, prof),
                b,
            )
        for meta, bucket in zip(pending, levels):
            meta[4][n] = bucket


def base_series(
    family: Family,
    pattern: Pattern,
    k: int,
    order: int,
    budget: int | None = None,
) -> Series:
    """Generating function of the level-k members, truncated at the order.

    Level 0 collects the paths with no occurrence above the axis (constant
    term 1: the empty path); level amplitude collects the members whose
    occurrences all touch the axis; levels strictly between are empty.
    For all-flat patterns (amplitude 0) level 1 is also available, since
    the level recurrence is anchored one step higher there.
    """
    pi = _steps_of(pattern)
    r = max(Pattern(pi).amplitude, 1)
    if k < 0 or k > r:
        raise ValueError(f"level {k} outside the anchor range 0..{r}")
    ensure_levels(family, [pi], order, budget)
    store = _level_cache[(family.name, pi)]
    return Series([store[n].get(k, 0) for n in range(order + 1)])


def precompute_base(
    family: Family, patterns, order: int, budget: int | None = None
) -> None:
    """Public batch warm-up so per-pattern calls hit a warm cache."""
    ensure_levels(family, patterns, order, budget)
