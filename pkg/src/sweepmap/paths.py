"""Integer lattice paths, path diagrams, and row-count geometry.

A path is a finite sequence of integer steps ``b_1..b_N``; step ``i`` is
drawn as the arrow ``(1, b_i)``.  A path diagram places arrow ``i`` in column
``i`` starting at height ``ranks[i]``, so the same step sequence can be drawn
connected or pulled apart vertically.  Row ``j`` is the horizontal strip
between heights ``j`` and ``j+1``; its count is the number of up-arrow
segments crossing it minus the number of down-arrow segments.  A diagram is
*balanced* when every row count is zero, the pivotal property for inverting
the sweep maps defined in :mod:`sweepmap.sweep`.

All values here are immutable and all operations are pure functions, so they
can be shared freely across threads.
"""

from __future__ import annotations

import operator
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, PreconditionError

_INT_TOKEN = re.compile(r"[+-]?\d+$")
_MULTISET_TOKEN = re.compile(r"(?P<value>[+-]?\d+)(?:\^(?P<mult>\d+))?$")


def parse_int_list(text: str, label: str = "value") -> tuple[int, ...]:
    """Parse comma-separated signed integers; whitespace is ignored.

    An empty (or all-whitespace) string parses to the empty tuple.
    """
    compact = "".join(text.split())
    if not compact:
        return ()
    values = []
    for token in compact.split(","):
        if not _INT_TOKEN.match(token):
            raise ParseError(f"invalid {label} token {token!r} in {text!r}")
        values.append(int(token))
    return tuple(values)


class PathKind(Enum):
    """Coarse label for an integer step sequence.

    DYCK: sums to zero and never dips below its start height.
    INCOMPLETE: sums to a negative value -a and never dips below zero when
    started from height a (so it still ends at height 0).
    OTHER: positive total, or a dip below the start height.
    FREE names whole families (every reordering of a zero-sum multiset) for
    enumeration purposes; ``classify`` reports a dipping zero-sum sequence as
    OTHER, so use :attr:`Path.is_free` when you need the plain predicate.
    """

    DYCK = "dyck"
    FREE = "free"
    INCOMPLETE = "incomplete"
    OTHER = "other"


@dataclass(frozen=True)
class Path:
    """An immutable sequence of integer steps."""

    steps: tuple[int, ...]

    def __init__(self, steps: Iterable[int] = ()) -> None:
        object.__setattr__(self, "steps", tuple(operator.index(b) for b in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[int]:
        return iter(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    @property
    def total(self) -> int:
        return sum(self.steps)

    @property
    def start_level(self) -> int:
        """Height the connected drawing starts at so that it ends at height 0."""
        return -self.total

    def connected_ranks(self) -> tuple[int, ...]:
        """Starting height of each arrow when the path is drawn connected."""
        ranks = []
        level = self.start_level
        for b in self.steps:
            ranks.append(level)
            level += b
        return tuple(ranks)

    def type_of(self) -> "StepMultiset":
        """The multiset of step values."""
        return StepMultiset.from_steps(self.steps)

    @property
    def is_free(self) -> bool:
        return self.total == 0

    @property
    def is_dyck(self) -> bool:
        if self.total != 0:
            return False
        level = 0
        for b in self.steps:
            level += b
            if level < 0:
                return False
        return True

    @property
    def is_incomplete(self) -> bool:
        if self.total >= 0:
            return False
        level = -self.total
        for b in self.steps:
            level += b
            if level < 0:
                return False
        return True

    def classify(self) -> PathKind:
        if self.is_dyck:
            return PathKind.DYCK
        if self.is_incomplete:
            return PathKind.INCOMPLETE
        return PathKind.OTHER

    @classmethod
    def from_text(cls, text: str) -> "Path":
        """Parse the comma-separated form, e.g. ``"2,0,2,-3,1,-2"``."""
        return cls(parse_int_list(text, label="step"))

    def to_text(self) -> str:
        return ",".join(str(b) for b in self.steps)


def arrow_color(step: int) -> str:
    """Drawing color of an arrow: up steps red, down blue, level purple."""
    if step > 0:
        return "red"
    if step < 0:
        return "blue"
    return "purple"


@dataclass(frozen=True)
class PathDiagram:
    """Steps paired with the starting height of each column's arrow."""

    steps: tuple[int, ...]
    ranks: tuple[int, ...]

    def __init__(self, steps: Iterable[int], ranks: Iterable[int]) -> None:
        object.__setattr__(self, "steps", tuple(operator.index(b) for b in steps))
        object.__setattr__(self, "ranks", tuple(operator.index(r) for r in ranks))
        if len(self.steps) != len(self.ranks):
            raise PreconditionError(
                f"diagram needs one rank per step: {len(self.steps)} steps, "
                f"{len(self.ranks)} ranks"
            )

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def end_ranks(self) -> tuple[int, ...]:
        return tuple(r + b for r, b in zip(self.ranks, self.steps))

    @property
    def is_increasing(self) -> bool:
        return all(a <= b for a, b in zip(self.ranks, self.ranks[1:]))

    @property
    def is_positive(self) -> bool:
        return self.is_increasing and all(e >= 0 for e in self.end_ranks)


class RowCounts:
    """Per-row segment tallies; rows never touched count as zero."""

    __slots__ = ("_red", "_blue")

    def __init__(self, red: Mapping[int, int], blue: Mapping[int, int]) -> None:
        self._red = {j: c for j, c in red.items() if c}
        self._blue = {j: c for j, c in blue.items() if c}

    def red(self, row: int) -> int:
        return self._red.get(row, 0)

    def blue(self, row: int) -> int:
        return self._blue.get(row, 0)

    def count(self, row: int) -> int:
        return self.red(row) - self.blue(row)

    def rows(self) -> list[int]:
        """Sorted rows containing at least one segment."""
        return sorted(self._red.keys() | self._blue.keys())

    def counts(self) -> dict[int, int]:
        """Counts over the segment-bearing rows (other rows are zero)."""
        return {j: self.count(j) for j in self.rows()}

    @property
    def total(self) -> int:
        return sum(self._red.values()) - sum(self._blue.values())

    @property
    def is_zero(self) -> bool:
        return all(self.count(j) == 0 for j in self.rows())


def row_counts(diagram: PathDiagram) -> RowCounts:
    """Tally red (up) and blue (down) segments per row.

    An up arrow from height ``r`` contributes one red segment to each of rows
    ``r .. r+b-1``; a down arrow contributes one blue segment to each of rows
    ``r+b .. r-1``; a level arrow contributes nothing.
    """
    red: Counter[int] = Counter()
    blue: Counter[int] = Counter()
    for b, r in zip(diagram.steps, diagram.ranks):
        if b > 0:
            for j in range(r, r + b):
                red[j] += 1
        elif b < 0:
            for j in range(r + b, r):
                blue[j] += 1
    return RowCounts(red, blue)


def is_balanced(diagram: PathDiagram) -> bool:
    """True iff every row count of the diagram is zero."""
    return row_counts(diagram).is_zero


def minimal_diagram(path: Path) -> PathDiagram:
    """The pointwise-least weakly increasing placement with no arrow ending
    below height zero.

    Ranks follow ``r_1 = max(0, -b_1)`` and ``r_{i+1} = max(r_i, -b_{i+1})``.
    """
    ranks = []
    prev = 0
    for i, b in enumerate(path.steps):
        prev = max(0, -b) if i == 0 else max(prev, -b)
        ranks.append(prev)
    return PathDiagram(path.steps, ranks)


def connected_diagram(path: Path) -> PathDiagram:
    """The diagram of the path drawn connected, ending at height zero."""
    return PathDiagram(path.steps, path.connected_ranks())


def vpath(diagram: PathDiagram) -> Path:
    """Collapse a diagram back to its step sequence.

    Vertical shifts change ranks only, never column order or step values, so
    this is simply the steps.
    """
    return Path(diagram.steps)


def row_count_delta(diagram: PathDiagram, row: int) -> tuple[int, int, int]:
    """Return ``(count(row) - count(row-1), starts at row, ends at row)``.

    The two independent tallies always agree (``delta == starts - ends``);
    callers check that identity rather than this function assuming it.
    """
    rc = row_counts(diagram)
    delta = rc.count(row) - rc.count(row - 1)
    starts = sum(1 for r in diagram.ranks if r == row)
    ends = sum(1 for e in diagram.end_ranks if e == row)
    return delta, starts, ends


@dataclass(frozen=True)
class StepMultiset:
    """A multiset of step values, stored as (value, multiplicity) pairs."""

    entries: tuple[tuple[int, int], ...]

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> None:
        merged: Counter[int] = Counter()
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        for value, mult in pairs:
            value = operator.index(value)
            mult = operator.index(mult)
            if mult <= 0:
                raise PreconditionError(f"multiplicity of {value} must be positive, got {mult}")
            merged[value] += mult
        normalized = tuple(sorted(merged.items(), key=lambda vm: -vm[0]))
        object.__setattr__(self, "entries", normalized)

    @classmethod
    def from_steps(cls, steps: Iterable[int]) -> "StepMultiset":
        return cls(Counter(steps))

    @classmethod
    def from_text(cls, text: str) -> "StepMultiset":
        """Parse ``value^multiplicity`` terms, ``^1`` omissible: ``"1^3,-1^3"``."""
        compact = "".join(text.split())
        if not compact:
            return cls()
        pairs = []
        for token in compact.split(","):
            m = _MULTISET_TOKEN.match(token)
            if not m:
                raise ParseError(f"invalid multiset token {token!r} in {text!r}")
            pairs.append((int(m.group("value")), int(m.group("mult") or 1)))
        return cls(pairs)

    def to_text(self) -> str:
        return ",".join(
            f"{v}^{m}" if m > 1 else str(v) for v, m in self.entries
        )

    def counts(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(v * m for v, m in self.entries)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def is_balanced_type(self) -> bool:
        return self.total == 0
