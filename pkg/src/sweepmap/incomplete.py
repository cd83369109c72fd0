"""Sweep maps on incomplete Dyck paths.

An incomplete Dyck path sums to ``-a`` for some ``a > 0`` and stays at or
above height zero when started from height ``a``.  Prefixing the single up
step ``a`` turns it into an ordinary Dyck path; that completion conjugates
every map here back to the Dyck-path case:

* the plain sweep corresponds to the cycle schedule on the completion, and
* an arbitrary schedule corresponds to its lift (which pins the added first
  arrow to be emitted first, so the completion step can always be undone).
"""

from __future__ import annotations

from .errors import InvariantViolation, PreconditionError
from .invert import inv_osweep
from .paths import Path
from .schedules import CYCLE, PermSchedule
from .sweep import osweep, sweep


def _require_incomplete(path: Path, op: str) -> None:
    if not path.is_incomplete:
        raise PreconditionError(
            f"{op} needs an incomplete Dyck path (negative total, no dip "
            f"below zero from its start height), got {path.to_text()!r}"
        )


def complete(path: Path) -> Path:
    """Prefix the up step that closes the height deficit, yielding a Dyck path."""
    _require_incomplete(path, "complete")
    return Path((path.start_level, *path.steps))


def strip(path: Path) -> Path:
    """Drop the first step; inverse of :func:`complete`.

    The first step must be positive and the remainder must be an incomplete
    Dyck path whose deficit equals that first step.
    """
    if len(path) == 0:
        raise PreconditionError("strip needs a nonempty path")
    head, rest = path.steps[0], Path(path.steps[1:])
    if head <= 0:
        raise PreconditionError(f"strip needs a positive first step, got {head}")
    if not rest.is_incomplete or rest.start_level != head:
        raise PreconditionError(
            f"suffix of {path.to_text()!r} is not an incomplete Dyck path "
            f"with deficit {head}"
        )
    return rest


def sweep_incomplete(path: Path) -> Path:
    """The sweep map on an incomplete Dyck path.

    Computed as strip-of-osweep-of-completion with the cycle schedule (the
    authoritative route); the plain sweep of the path's own connected drawing
    must give the same answer and is kept as a cross-check.
    """
    _require_incomplete(path, "sweep_incomplete")
    conjugated = strip(osweep(complete(path), CYCLE))
    direct = sweep(path)
    if conjugated != direct:
        raise InvariantViolation(
            f"conjugated and direct sweeps disagree on {path.to_text()!r}: "
            f"{conjugated.to_text()} vs {direct.to_text()}"
        )
    return conjugated


def osweep_incomplete(path: Path, schedule: PermSchedule) -> Path:
    """The order sweep map on an incomplete Dyck path.

    Conjugation by completion with the lifted schedule; the lift fixes
    position 1, so the added arrow is emitted first and stripping is always
    possible on the image (``strip`` validates rather than assumes this).
    """
    _require_incomplete(path, "osweep_incomplete")
    return strip(osweep(complete(path), schedule.lift()))


def inv_osweep_incomplete(
    path: Path, schedule: PermSchedule, *, checks: str = "error"
) -> Path:
    """Preimage of ``path`` under :func:`osweep_incomplete` with ``schedule``."""
    _require_incomplete(path, "inv_osweep_incomplete")
    return strip(inv_osweep(complete(path), schedule.lift(), checks=checks))
