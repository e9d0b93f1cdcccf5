"""Binary paths: representation, parsing, statistics and decompositions.

A path is stored as an integer bit-vector with ``Up = 1``; the first step is
the most significant bit, so ``range(2**n)`` walks ``P_n`` in lexicographic
order (``d < u``).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, groupby
from typing import Iterator, Optional, Sequence

from .errors import DomainError, ParseError

UP = "u"
DOWN = "d"


@dataclass(frozen=True, slots=True)
class Path:
    bits: int
    n: int

    def __post_init__(self):
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise DomainError(f"bits {self.bits:#x} do not fit a path of length {self.n}")

    @classmethod
    def from_steps(cls, steps: str) -> "Path":
        if steps.strip(UP + DOWN):
            raise ParseError(f"not a step string: {steps!r}")
        return cls(int(steps.replace(UP, "1").replace(DOWN, "0") or "0", 2), len(steps))

    @classmethod
    def from_heights(cls, heights: Sequence[int]) -> "Path":
        """Build a path from (h_1, ..., h_n); h_0 = 0 is implied."""
        bits = 0
        prev = 0
        for h in heights:
            if h - prev == 1:
                bits = bits << 1 | 1
            elif h - prev == -1:
                bits <<= 1
            else:
                raise DomainError(f"height sequence jumps from {prev} to {h}")
            prev = h
        return cls(bits, len(heights))

    @classmethod
    def up(cls, n: int) -> "Path":
        return cls((1 << n) - 1, n)

    @classmethod
    def down(cls, n: int) -> "Path":
        return cls(0, n)

    @classmethod
    def empty(cls) -> "Path":
        return cls(0, 0)

    @property
    def steps(self) -> str:
        return format(self.bits, f"0{self.n}b").translate(_TO_STEPS) if self.n else ""

    @property
    def ups(self) -> int:
        return self.bits.bit_count()

    @property
    def downs(self) -> int:
        return self.n - self.ups

    @property
    def heights(self) -> tuple[int, ...]:
        return _heights(self.bits, self.n)

    @property
    def end_height(self) -> int:
        return 2 * self.ups - self.n

    def is_up(self, i: int) -> bool:
        """Whether step ``i`` (1-based) is an upstep."""
        return bool(self.bits >> (self.n - i) & 1)

    def dual(self) -> "Path":
        """Reverse the steps and flip each one."""
        rev = int(format(self.bits, f"0{self.n}b")[::-1], 2) if self.n else 0
        return Path(rev ^ ((1 << self.n) - 1), self.n)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[str]:
        return iter(self.steps)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Path.from_steps(self.steps[key])
        return self.steps[key]

    def __add__(self, other: "Path") -> "Path":
        if not isinstance(other, Path):
            return NotImplemented
        return Path(self.bits << other.n | other.bits, self.n + other.n)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"Path({render_path(self, runs=True)!r})"


_TO_STEPS = str.maketrans("10", UP + DOWN)


@lru_cache(maxsize=1 << 16)
def _heights(bits: int, n: int) -> tuple[int, ...]:
    return tuple(accumulate(1 if bits >> (n - i) & 1 else -1 for i in range(1, n + 1)))


def concat(*parts: Path) -> Path:
    out = Path.empty()
    for p in parts:
        out = out + p
    return out


# --- parsing / rendering -------------------------------------------------

_TOKEN = re.compile(r"([ud])(\d*)")


def parse_path(text: str) -> Path:
    """Parse ``uudd`` or the run-length form ``u2d2`` (whitespace ignored)."""
    text = "".join(text.split())
    pieces = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.start() != pos:
            break
        count = int(m.group(2)) if m.group(2) else 1
        if count == 0:
            raise ParseError(f"zero repeat count at offset {m.start()} in {text!r}")
        pieces.append(m.group(1) * count)
        pos = m.end()
    if pos != len(text):
        raise ParseError(f"unexpected character {text[pos]!r} at offset {pos} in {text!r}")
    return Path.from_steps("".join(pieces))


def render_path(P: Path, runs: bool = False) -> str:
    if not runs:
        return P.steps
    return "".join(c + (str(n) if n > 1 else "") for c, n in
                   ((c, len(list(g))) for c, g in groupby(P.steps)))


# --- statistics -------------------------------------------------------------


@dataclass(frozen=True)
class PathStats:
    heights: tuple[int, ...]
    valleys: list[tuple[int, int]]
    peaks: list[tuple[int, int]]
    lv: Optional[int]
    hv: Optional[int]


def valley_points(P: Path) -> list[int]:
    """Indices i in [1, n] of the valleys: p_i = d and p_{i+1} = u or i = n."""
    s = P.steps
    return [i for i in range(1, P.n + 1)
            if s[i - 1] == DOWN and (i == P.n or s[i] == UP)]


def peak_points(P: Path) -> list[int]:
    s = P.steps
    return [i for i in range(1, P.n + 1)
            if s[i - 1] == UP and (i == P.n or s[i] == DOWN)]


def path_stats(P: Path) -> PathStats:
    h = P.heights
    valleys = [(i, h[i - 1]) for i in valley_points(P)]
    peaks = [(i, h[i - 1]) for i in peak_points(P)]
    vh = [y for _, y in valleys]
    return PathStats(h, valleys, peaks, min(vh, default=None), max(vh, default=None))


def lowest_valley(P: Path) -> Optional[int]:
    return path_stats(P).lv


def highest_valley(P: Path) -> Optional[int]:
    return path_stats(P).hv


# --- k-sequence encoding ----------------------------------------------------


@dataclass(frozen=True)
class KSequence:
    """(k_1, ..., k_{m+1}): k_i upsteps precede the i-th downstep, k_{m+1} = |P|_u."""
    ks: tuple[int, ...]

    def __post_init__(self):
        if not self.ks:
            raise DomainError("a k-sequence has at least one term")
        if self.ks[0] < 0 or any(a > b for a, b in zip(self.ks, self.ks[1:])):
            raise DomainError(f"k-sequence must be non-negative and non-decreasing: {self.ks}")

    @property
    def m(self) -> int:
        return len(self.ks) - 1

    @property
    def length(self) -> int:
        return self.m + self.ks[-1]


def to_kseq(P: Path) -> KSequence:
    ks = []
    ups = 0
    for c in P.steps:
        if c == UP:
            ups += 1
        else:
            ks.append(ups)
    ks.append(ups)
    return KSequence(tuple(ks))


def from_kseq(ks, n: Optional[int] = None) -> Path:
    if not isinstance(ks, KSequence):
        ks = KSequence(tuple(ks))
    if n is not None and n != ks.length:
        raise DomainError(f"k-sequence {ks.ks} describes a path of length {ks.length}, not {n}")
    out = []
    prev = 0
    for k in ks.ks[:-1]:
        out.append(UP * (k - prev) + DOWN)
        prev = k
    out.append(UP * (ks.ks[-1] - prev))
    return Path.from_steps("".join(out))


# --- classification ---------------------------------------------------------


class PathClass(enum.Flag):
    GENERAL = 0
    DYCK_PREFIX = enum.auto()
    DYCK_SUFFIX = enum.auto()
    DYCK_PATH = enum.auto()


def is_dyck_prefix(P: Path) -> bool:
    return min(P.heights, default=0) >= 0


def is_dyck_suffix(P: Path) -> bool:
    return min(P.heights, default=0) >= P.end_height <= 0


def is_dyck(P: Path) -> bool:
    return P.end_height == 0 and is_dyck_prefix(P)


def classify(P: Path) -> PathClass:
    flags = PathClass.GENERAL
    if is_dyck_prefix(P):
        flags |= PathClass.DYCK_PREFIX
    if is_dyck_suffix(P):
        flags |= PathClass.DYCK_SUFFIX
    if is_dyck(P):
        flags |= PathClass.DYCK_PATH
    return flags


def is_pyramid_product(a: Path) -> bool:
    """Dyck path all of whose valleys sit at height 0."""
    return is_dyck(a) and all(y == 0 for _, y in path_stats(a).valleys)


def pyramid(m: int) -> Path:
    return Path.from_steps(UP * m + DOWN * m)


# --- decompositions ---------------------------------------------------------


class DecompositionKind(enum.Enum):
    PREFIX_FORM = "prefix"
    SUFFIX_FORM = "suffix"
    PRIME_FACTORS = "prime"
    MIN_SPLIT = "minsplit"


@dataclass(frozen=True)
class Decomposition:
    kind: DecompositionKind
    parts: list[Path]

    def reassemble(self) -> Path:
        if self.kind is DecompositionKind.PREFIX_FORM:
            return concat(*_interleave(self.parts, Path.from_steps(UP)))
        if self.kind is DecompositionKind.SUFFIX_FORM:
            return concat(*_interleave(self.parts, Path.from_steps(DOWN)))
        return concat(*self.parts)


def _interleave(parts, sep):
    for i, p in enumerate(parts):
        if i:
            yield sep
        yield p


def prefix_form(P: Path) -> list[Path]:
    """[a_0, ..., a_k] with P = a_0 u a_1 ... u a_k, each a_i a Dyck path."""
    if not is_dyck_prefix(P):
        raise DomainError(f"{P} is not a Dyck prefix")
    h = (0,) + P.heights
    s = P.steps
    # a u-step is a separator iff the path never comes back down to its start
    suffix_min = list(h)
    for i in range(len(h) - 2, -1, -1):
        suffix_min[i] = min(h[i], suffix_min[i + 1])
    parts = []
    start = 0
    for i in range(1, P.n + 1):
        if s[i - 1] == UP and suffix_min[i] == h[i]:
            parts.append(P[start:i - 1])
            start = i
    parts.append(P[start:])
    return parts


def suffix_form(P: Path) -> list[Path]:
    """[a_0, ..., a_k] with P = a_0 d a_1 ... d a_k, each a_i a Dyck path."""
    if not is_dyck_suffix(P):
        raise DomainError(f"{P} is not a Dyck suffix")
    return [a.dual() for a in reversed(prefix_form(P.dual()))]


def prime_factors(a: Path) -> list[Path]:
    if not is_dyck(a):
        raise DomainError(f"{a} is not a Dyck path")
    parts = []
    start = 0
    for i, y in enumerate(a.heights, 1):
        if y == 0:
            parts.append(a[start:i])
            start = i
    return parts


def min_split(P: Path) -> tuple[Path, Path]:
    """Split at the leftmost point of minimal height: (Dyck suffix, Dyck prefix)."""
    h = (0,) + P.heights
    j = h.index(min(h))
    return P[:j], P[j:]


def decompose(P: Path, kind: DecompositionKind | str) -> Decomposition:
    kind = DecompositionKind(kind)
    if kind is DecompositionKind.PREFIX_FORM:
        parts = prefix_form(P)
    elif kind is DecompositionKind.SUFFIX_FORM:
        parts = suffix_form(P)
    elif kind is DecompositionKind.PRIME_FACTORS:
        parts = prime_factors(P)
    else:
        parts = list(min_split(P))
    return Decomposition(kind, parts)
