"""Cross-checks of locally computed counts against bundled OEIS terms."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .counting import J, interval_count
from .filling import count_fillings
from .path import Path, pyramid

_ZIGZAG = Path.from_steps("ud")


def load_fixture(seq_id: str) -> list[int]:
    """Read a fixture: one decimal term per line, '#' starts a comment."""
    try:
        text = resources.files("pathlat.fixtures").joinpath(f"{seq_id}.txt").read_text()
    except FileNotFoundError:
        raise KeyError(f"no fixture for {seq_id}") from None
    terms = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            terms.append(int(line))
    return terms


def _dyck_count(n: int) -> int:
    # Dyck paths of length 2n are exactly [(ud)^n, u^n d^n]
    low = Path.empty()
    for _ in range(n):
        low = low + _ZIGZAG
    return interval_count(low, pyramid(n))


def _dyck_prefix_count(n: int) -> int:
    # Dyck prefixes of length n are the up-set of the lowest one
    low = Path.from_steps("ud" * (n // 2) + "u" * (n % 2))
    return J(low)


# local sequence term n is compared against fixture term n + shift
LOCAL = {
    "A000108": (_dyck_count, 0),
    "A001405": (_dyck_prefix_count, 0),
    "A000213": (count_fillings, 1),
}


@dataclass
class SequenceCheck:
    seq_id: str
    compared: int
    mismatches: list[tuple[int, int, int]]

    @property
    def passed(self) -> bool:
        return self.compared > 0 and not self.mismatches


def check_sequence(seq_id: str, upto: int = 20) -> SequenceCheck:
    """Compare local terms n = 0..upto with the fixture (as far as it reaches)."""
    if seq_id not in LOCAL:
        raise KeyError(f"no local computation for {seq_id}; known: {', '.join(sorted(LOCAL))}")
    func, shift = LOCAL[seq_id]
    terms = load_fixture(seq_id)
    mismatches = []
    compared = 0
    for n in range(upto + 1):
        if n + shift >= len(terms):
            break
        got = func(n)
        compared += 1
        if got != terms[n + shift]:
            mismatches.append((n, got, terms[n + shift]))
    return SequenceCheck(seq_id, compared, mismatches)
