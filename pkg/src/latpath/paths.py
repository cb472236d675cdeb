"""Lattice paths, step patterns and their height statistics.

Steps are single characters: ``U`` = (1, 1), ``D`` = (1, -1), ``F`` = (1, 0)
and ``L`` = (-1, -1); a path is a string of steps.  Paths live in the
quarter plane, start at the origin, end on the x-axis and never dip below
it; in families with left steps, no diagonal unit segment may be traversed
by both an up step and a left step.  (The x-coordinate never needs
checking: every step keeps x - y non-decreasing, so x >= y >= 0 holds
automatically.)
"""

from __future__ import annotations

from dataclasses import dataclass

DISPLACEMENT = {"U": (1, 1), "D": (1, -1), "F": (1, 0), "L": (-1, -1)}
STEP_KINDS = "UDFL"


@dataclass(frozen=True)
class Family:
    """A path family: its name, step alphabet and size convention.

    ``semilength`` selects the size unit: Dyck and skew Dyck paths are
    indexed by half their step count (one x per up step), Motzkin and
    skew Motzkin paths by their step count.
    """

    name: str
    alphabet: frozenset
    semilength: bool

    @property
    def size_unit(self) -> str:
        return "semilength" if self.semilength else "steps"

    def step_count(self, size: int) -> int:
        return 2 * size if self.semilength else size

    def size_of(self, steps: str) -> int:
        if self.semilength:
            if len(steps) % 2:
                raise ValueError(f"odd step count {len(steps)} in a {self.name} path")
            return len(steps) // 2
        return len(steps)

    def __repr__(self) -> str:
        return f"Family({self.name})"


DYCK = Family("dyck", frozenset("UD"), semilength=True)
MOTZKIN = Family("motzkin", frozenset("UDF"), semilength=False)
SKEW_DYCK = Family("skew-dyck", frozenset("UDL"), semilength=True)
SKEW_MOTZKIN = Family("skew-motzkin", frozenset("UDFL"), semilength=False)

FAMILIES = {f.name: f for f in (DYCK, MOTZKIN, SKEW_DYCK, SKEW_MOTZKIN)}


def family(name: str) -> Family:
    try:
        return FAMILIES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}")


def _steps_of(obj) -> str:
    if isinstance(obj, str):
        return obj
    return obj.steps


def profile(steps: str) -> list[int]:
    """Ordinates visited by the walk, including the start: length n + 1."""
    y = 0
    out = [0]
    for ch in steps:
        y += DISPLACEMENT[ch][1]
        out.append(y)
    return out


def validate(steps, fam: Family) -> bool:
    """True iff the steps form a valid path of the family."""
    s = _steps_of(steps)
    x = y = 0
    useg = set()
    lseg = set()
    check_overlap = "L" in fam.alphabet
    alphabet = fam.alphabet
    for ch in s:
        if ch not in alphabet:
            return False
        if ch == "U":
            if check_overlap:
                key = (x, y)
                if key in lseg:
                    return False
                useg.add(key)
            x += 1
            y += 1
        elif ch == "D":
            x += 1
            y -= 1
        elif ch == "F":
            x += 1
        else:  # L
            key = (x - 1, y - 1)
            if key in useg:
                return False
            lseg.add(key)
            x -= 1
            y -= 1
        if y < 0:
            return False
    if y != 0:
        return False
    if fam.semilength and len(s) % 2:
        return False
    return True


@dataclass(frozen=True)
class Path:
    """A validated path of a family."""

    steps: str
    family: Family

    def __post_init__(self):
        if not validate(self.steps, self.family):
            raise ValueError(f"not a valid {self.family.name} path: {self.steps!r}")

    @property
    def size(self) -> int:
        return self.family.size_of(self.steps)

    def height(self) -> int:
        return height(self)

    def pattern_height(self, pattern) -> int:
        return pattern_height(self, pattern)

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"Path({self.steps!r}, {self.family.name})"


@dataclass(frozen=True)
class Pattern:
    """A nonempty step sequence; it need not return to the axis."""

    steps: str

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a pattern has length >= 1")
        bad = set(self.steps) - set(STEP_KINDS)
        if bad:
            raise ValueError(f"unknown step kinds {sorted(bad)} in pattern")

    @property
    def amplitude(self) -> int:
        return amplitude(self)

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"Pattern({self.steps!r})"


def height(path) -> int:
    """Maximal ordinate reached by the path; 0 for the empty path."""
    return max(profile(_steps_of(path)))


def _prefix_extrema(steps: str) -> tuple[int, int]:
    y = mx = mn = 0
    for ch in steps:
        y += DISPLACEMENT[ch][1]
        if y > mx:
            mx = y
        elif y < mn:
            mn = y
    return mx, mn


def amplitude(pattern) -> int:
    """Height of the pattern as a walk shifted to touch the x-axis.

    Equals (max prefix ordinate) - (min prefix ordinate), prefixes
    including the starting value 0.
    """
    mx, mn = _prefix_extrema(_steps_of(pattern))
    return mx - mn


def pattern_height(path, pattern) -> int:
    """Maximal height over the occurrences of the pattern; 0 if none occur.

    An occurrence is a run of consecutive steps equal to the pattern; its
    height is the maximal ordinate over all its points, endpoints included.
    """
    s = _steps_of(path)
    p = _steps_of(pattern)
    prof = profile(s)
    return _pattern_height(s, prof, p, _prefix_extrema(p)[0])


def _pattern_height(s: str, prof, p: str, max_pref: int) -> int:
    # The height of an occurrence starting at i is prof[i] + max_pref,
    # because the occurrence's ordinate profile is the pattern's shifted
    # by prof[i].
    best = -1
    i = s.find(p)
    while i >= 0:
        if prof[i] > best:
            best = prof[i]
        i = s.find(p, i + 1)
    return 0 if best < 0 else best + max_pref


_COMPLEMENT = {"U": "D", "D": "U", "F": "F"}


def reversed_complement(obj):
    """Reverse the step sequence and swap U <-> D (F is fixed).

    Defined for U/D/F sequences only; input containing L is rejected.
    Returns the same kind of object as the input (str, Pattern or Path).
    """
    s = _steps_of(obj)
    if "L" in s:
        raise ValueError("the reversed complement is defined for U/D/F steps only")
    rc = "".join(_COMPLEMENT[ch] for ch in reversed(s))
    if isinstance(obj, Pattern):
        return Pattern(rc)
    if isinstance(obj, Path):
        return Path(rc, obj.family)
    return rc


@dataclass(frozen=True)
class FirstReturn:
    """First-return decomposition of a nonempty path.

    ``variant`` is one of ``"UaDb"`` (U alpha D beta), ``"Fg"`` (F gamma),
    ``"UaL"`` (U alpha L) and ``"UaLFg"`` (U alpha L F gamma); components
    that do not occur in the variant are None.
    """

    variant: str
    family: Family
    alpha: str | None = None
    beta: str | None = None
    gamma: str | None = None

    def components(self) -> list[tuple[str, str]]:
        out = []
        for name in ("alpha", "beta", "gamma"):
            value = getattr(self, name)
            if value is not None:
                out.append((name, value))
        return out

    def reassemble(self) -> str:
        if self.variant == "UaDb":
            return "U" + self.alpha + "D" + self.beta
        if self.variant == "Fg":
            return "F" + self.gamma
        if self.variant == "UaL":
            return "U" + self.alpha + "L"
        if self.variant == "UaLFg":
            return "U" + self.alpha + "LF" + self.gamma
        raise AssertionError(self.variant)


def _decompose(s: str) -> tuple[str, str | None, str | None, str | None]:
    """Split a valid nonempty path at the first return to the x-axis."""
    first = s[0]
    if first == "F":
        return "Fg", None, None, s[1:]
    if first != "U":
        raise ValueError(f"invalid path start {first!r}")
    y = 1
    j = 1
    n = len(s)
    while j < n:
        y += DISPLACEMENT[s[j]][1]
        j += 1
        if y == 0:
            break
    else:
        raise ValueError("path never returns to the x-axis")
    returning = s[j - 1]
    if returning == "D":
        return "UaDb", s[1 : j - 1], s[j:], None
    if returning == "L":
        rest = s[j:]
        if not rest:
            return "UaL", s[1 : j - 1], None, None
        if rest[0] == "F":
            return "UaLFg", s[1 : j - 1], None, rest[1:]
        raise ValueError("a step other than F follows an axis-returning L")
    raise AssertionError(returning)


def first_return_decompose(path: Path) -> FirstReturn:
    """Decompose a valid nonempty path into its first-return variant.

    Every component is itself a valid path of the same family;
    reassembling the variant reproduces the original path.
    """
    s = path.steps
    if not s:
        raise ValueError("cannot decompose the empty path")
    variant, alpha, beta, gamma = _decompose(s)
    return FirstReturn(variant, path.family, alpha, beta, gamma)
