"""Exhaustive enumeration of path families and brute-force verification.

These are the desk-scale tools that certify the bijection claims: enumerate
every path of a given step multiset and kind, push the whole family through
a map, and check injectivity, closure, and both round trips against the
inversion pipeline.  The enumeration is lexicographic with prefix pruning, so
hopeless prefixes are abandoned as soon as the height condition fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import BijectionError, FamilyCapExceeded, PreconditionError
from .incomplete import inv_osweep_incomplete, osweep_incomplete
from .invert import inv_osweep
from .paths import Path, PathKind, StepMultiset
from .schedules import PermSchedule
from .sweep import osweep

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class EnumerationSpec:
    """A path family: the step multiset, which kind of paths, and a size cap."""

    multiset: StepMultiset
    kind: PathKind
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        if self.cap < 1:
            raise PreconditionError(f"cap must be positive, got {self.cap}")
        total = self.multiset.total
        if self.kind in (PathKind.DYCK, PathKind.FREE):
            if total != 0:
                raise PreconditionError(
                    f"{self.kind.value} families need a zero-sum multiset, "
                    f"got {self.multiset.to_text()!r} with sum {total}"
                )
        elif self.kind is PathKind.INCOMPLETE:
            if total >= 0:
                raise PreconditionError(
                    f"incomplete families need a negative-sum multiset, "
                    f"got {self.multiset.to_text()!r} with sum {total}"
                )
        else:
            raise PreconditionError(f"cannot enumerate kind {self.kind.value!r}")


def enumerate_paths(spec: EnumerationSpec) -> Iterator[Path]:
    """Yield every path of the family in lexicographic order, no duplicates.

    Raises :class:`FamilyCapExceeded` if the family outgrows ``spec.cap``.
    """
    remaining = dict(sorted(spec.multiset.counts().items()))
    size = spec.multiset.size
    pruned = spec.kind is not PathKind.FREE
    start = 0 if spec.kind is not PathKind.INCOMPLETE else -spec.multiset.total
    prefix: list[int] = []
    yielded = 0

    def walk(level: int, left: int) -> Iterator[Path]:
        nonlocal yielded
        if left == 0:
            yielded += 1
            if yielded > spec.cap:
                raise FamilyCapExceeded(
                    f"family {spec.multiset.to_text()!r} ({spec.kind.value}) "
                    f"exceeds the cap of {spec.cap} paths"
                )
            yield Path(prefix)
            return
        for value in list(remaining):
            if remaining[value] == 0:
                continue
            new_level = level + value
            if pruned and new_level < 0:
                continue
            remaining[value] -= 1
            prefix.append(value)
            yield from walk(new_level, left - 1)
            prefix.pop()
            remaining[value] += 1

    return walk(start, size)


def family_size(spec: EnumerationSpec) -> int:
    """Number of paths in the family (still subject to the cap)."""
    return sum(1 for _ in enumerate_paths(spec))


def oracle_invert(path: Path, schedule: PermSchedule, cap: int = DEFAULT_CAP) -> Path:
    """Invert the order sweep map by exhausting the whole family.

    Completely independent of the inversion pipeline: enumerate every Dyck
    path of the same type, apply the forward map, and return the unique
    preimage.  Zero or several preimages would falsify bijectivity and raise
    :class:`BijectionError`.
    """
    if not path.is_dyck:
        raise PreconditionError(
            f"oracle inversion is defined for Dyck paths only, got {path.to_text()!r}"
        )
    spec = EnumerationSpec(path.type_of(), PathKind.DYCK, cap=cap)
    preimages = [q for q in enumerate_paths(spec) if osweep(q, schedule) == path]
    if len(preimages) != 1:
        raise BijectionError(
            f"{len(preimages)} preimages of {path.to_text()!r} under schedule "
            f"{schedule.name!r}; expected exactly one"
        )
    return preimages[0]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive bijectivity check over one family."""

    family: str
    kind: str
    size: int
    schedule: str
    injective: bool
    closed: bool
    roundtrip: bool
    passed: bool

    def as_record(self) -> dict:
        return {
            "family": self.family,
            "kind": self.kind,
            "size": self.size,
            "schedule": self.schedule,
            "injective": self.injective,
            "closed": self.closed,
            "roundtrip": self.roundtrip,
            "pass": self.passed,
        }

    def to_text(self) -> str:
        lines = [
            f"family:    {self.family}",
            f"kind:      {self.kind}",
            f"size:      {self.size}",
            f"schedule:  {self.schedule}",
            f"injective: {str(self.injective).lower()}",
            f"closed:    {str(self.closed).lower()}",
            f"roundtrip: {str(self.roundtrip).lower()}",
            "PASS" if self.passed else "FAIL",
        ]
        return "\n".join(lines)


def verify_bijection(spec: EnumerationSpec, schedule: PermSchedule) -> VerificationReport:
    """Exhaustively check that the order sweep map permutes the family.

    Dyck families round-trip against the inversion pipeline; incomplete
    families against its conjugation by completion.
    """
    if spec.kind is PathKind.DYCK:
        forward: Callable[[Path], Path] = lambda p: osweep(p, schedule)
        backward: Callable[[Path], Path] = lambda p: inv_osweep(p, schedule)
    elif spec.kind is PathKind.INCOMPLETE:
        forward = lambda p: osweep_incomplete(p, schedule)
        backward = lambda p: inv_osweep_incomplete(p, schedule)
    else:
        raise PreconditionError(
            f"verification covers dyck and incomplete families, not {spec.kind.value!r}"
        )

    members = list(enumerate_paths(spec))
    family = set(members)
    images = [forward(p) for p in members]
    injective = len(set(images)) == len(members)
    closed = all(image in family for image in images)
    roundtrip = all(backward(image) == p for p, image in zip(members, images)) and all(
        forward(backward(p)) == p for p in members
    )
    passed = injective and closed and roundtrip
    return VerificationReport(
        family=spec.multiset.to_text(),
        kind=spec.kind.value,
        size=len(members),
        schedule=schedule.name,
        injective=injective,
        closed=closed,
        roundtrip=roundtrip,
        passed=passed,
    )
