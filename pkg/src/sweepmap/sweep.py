"""Forward maps: the sweep map and the order sweep map.

Both maps re-emit the arrows of a path sorted by starting height (heights
0, 1, 2, ... first, then the negative heights from the bottom up) and break
ties within a height right to left.  The order sweep map differs in exactly
one place: the group starting at height zero is emitted according to a
permutation schedule instead (the reverse schedule recovers the plain sweep).

The emission is a stable bucket sort by starting height, never a comparison
sort, so the tie order is controlled explicitly.
"""

from __future__ import annotations

from .errors import PreconditionError
from .paths import Path, PathDiagram
from .schedules import PermSchedule


def _emission_order(ranks: tuple[int, ...], schedule: PermSchedule | None) -> list[int]:
    """0-based column emission order for the given starting heights."""
    buckets: dict[int, list[int]] = {}
    for column, rank in enumerate(ranks):
        buckets.setdefault(rank, []).append(column)
    order: list[int] = []
    heights = sorted(r for r in buckets if r >= 0) + sorted(r for r in buckets if r < 0)
    for rank in heights:
        columns = buckets[rank]
        if rank == 0 and schedule is not None:
            perm = schedule.perm(len(columns))
            order.extend(columns[p - 1] for p in perm)
        else:
            order.extend(reversed(columns))
    return order


def sweep_order(path: Path, schedule: PermSchedule | None = None) -> tuple[int, ...]:
    """Emission order of the path's arrows as 1-based column indices.

    Without a schedule all ties break right to left; with one, the height-zero
    group follows the schedule.  The result is always a permutation of 1..N.
    """
    order = _emission_order(path.connected_ranks(), schedule)
    return tuple(column + 1 for column in order)


def sweep(path: Path) -> Path:
    """The sweep map: emit arrows by starting height, ties right to left.

    Defined for any integer sequence; the connected drawing (ending at height
    zero) fixes the starting heights.
    """
    ranks = path.connected_ranks()
    order = _emission_order(ranks, None)
    return Path(path.steps[i] for i in order)


def osweep(path: Path, schedule: PermSchedule) -> Path:
    """The order sweep map.

    Identical to :func:`sweep` except at height zero: if ``C_1..C_k`` are the
    height-zero arrows left to right, position ``j`` of that group emits
    ``C_{perm(j)}``.  With the reverse schedule this is right-to-left, i.e.
    the plain sweep.
    """
    ranks = path.connected_ranks()
    order = _emission_order(ranks, schedule)
    return Path(path.steps[i] for i in order)


def hib(path: Path, schedule: PermSchedule) -> PathDiagram:
    """Re-column the arrows of a Dyck path into emission order, keeping each
    arrow's original starting height.

    The result is a weakly increasing balanced diagram whose step sequence is
    exactly ``osweep(path, schedule)``; it is the geometric bridge between the
    forward map and its inversion.
    """
    if not path.is_dyck:
        raise PreconditionError(
            f"hib needs a Dyck path (a negative starting height would break "
            f"the increasing guarantee), got {path.to_text()!r}"
        )
    ranks = path.connected_ranks()
    order = _emission_order(ranks, schedule)
    return PathDiagram(
        (path.steps[i] for i in order),
        (ranks[i] for i in order),
    )
