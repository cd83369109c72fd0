"""Independent oracles and random generators shared by the test modules.

Everything here deliberately avoids the library's own code paths: row counts
are tallied by scanning every lattice row, the sweep reference is a
comparison sort instead of a bucket sort, and families come straight from
``itertools.permutations``.
"""

from __future__ import annotations

import random
from itertools import permutations

from sweepmap import Path, PathDiagram, PathKind, PermSchedule, minimal_diagram, table_schedule


def tally_row_counts(steps, ranks) -> dict[int, int]:
    """Row counts by scanning each row across the diagram's vertical range."""
    if not steps:
        return {}
    tops = [r + b for r, b in zip(ranks, steps)]
    lo = min(min(ranks), min(tops)) - 1
    hi = max(max(ranks), max(tops)) + 1
    counts = {}
    for j in range(lo, hi + 1):
        red = sum(1 for b, r in zip(steps, ranks) if b > 0 and r <= j < r + b)
        blue = sum(1 for b, r in zip(steps, ranks) if b < 0 and r + b <= j < r)
        if red or blue:
            counts[j] = red - blue
    return counts


def ref_osweep(steps, schedule: PermSchedule | None = None) -> tuple[int, ...]:
    """Sort-based reference for the (order) sweep map."""
    n = len(steps)
    level = -sum(steps)
    ranks = []
    for b in steps:
        ranks.append(level)
        level += b
    order = sorted(range(n), key=lambda i: (ranks[i] < 0, ranks[i], -i))
    if schedule is not None:
        positions = [p for p in range(n) if ranks[order[p]] == 0]
        zero_cols = sorted(order[p] for p in positions)
        perm = schedule.perm(len(zero_cols))
        for p, value in zip(positions, perm):
            order[p] = zero_cols[value - 1]
    return tuple(steps[i] for i in order)


def naive_family(values, kind: PathKind) -> list[tuple[int, ...]]:
    """Filter all distinct permutations of ``values`` by the kind's predicate."""
    result = set()
    for perm in permutations(values):
        p = Path(perm)
        keep = {
            PathKind.DYCK: p.is_dyck,
            PathKind.FREE: p.is_free,
            PathKind.INCOMPLETE: p.is_incomplete,
        }[kind]
        if keep:
            result.add(perm)
    return sorted(result)


def random_schedule(seed: int, max_k: int = 10, default: str = "reverse") -> PermSchedule:
    """An explicit random table for sizes 1..max_k with a builtin fallback."""
    rng = random.Random(seed)
    table = {}
    for k in range(1, max_k + 1):
        perm = list(range(1, k + 1))
        rng.shuffle(perm)
        table[k] = perm
    return table_schedule(table, default=default, name=f"random(seed={seed})")


def random_dyck_path(rng: random.Random, max_value: int = 3) -> Path:
    """A random Dyck path with mixed step sizes (and occasional level steps)."""
    ups = [rng.randint(1, max_value) for _ in range(rng.randint(1, 4))]
    deficit = sum(ups)
    downs = []
    while deficit:
        d = rng.randint(1, min(max_value, deficit))
        downs.append(-d)
        deficit -= d
    steps = ups + downs + [0] * rng.randint(0, 2)
    for _ in range(60):
        rng.shuffle(steps)
        candidate = Path(steps)
        if candidate.is_dyck:
            return candidate
    return Path(sorted(steps, reverse=True))


def random_diagram(rng: random.Random, max_n: int = 12) -> PathDiagram:
    """Arbitrary diagram: steps in [-5, 5], ranks in [0, 8], any order."""
    n = rng.randint(0, max_n)
    steps = [rng.randint(-5, 5) for _ in range(n)]
    ranks = [rng.randint(0, 8) for _ in range(n)]
    return PathDiagram(steps, ranks)


def random_positive_diagram(rng: random.Random, raises: int = 6) -> PathDiagram:
    """A weakly increasing diagram with Dyck steps and no end below zero.

    Starts from the minimal placement and applies random order-preserving
    raises, so it is a legitimate balancing input but rarely minimal.
    """
    path = random_dyck_path(rng)
    ranks = list(minimal_diagram(path).ranks)
    n = len(ranks)
    for _ in range(rng.randint(0, raises)):
        i = rng.randrange(n)
        if i == n - 1 or ranks[i] + 1 <= ranks[i + 1]:
            ranks[i] += 1
    return PathDiagram(path.steps, ranks)


def random_ranks_between(rng: random.Random, low, high) -> tuple[int, ...]:
    """A random weakly increasing sequence inside the box [low, high].

    Uniform per-coordinate draws, a left-to-right monotone repair, then a
    clamp into the box; both bounds being increasing keeps membership.
    """
    ranks = []
    prev = None
    for lo, hi in zip(low, high):
        value = rng.randint(lo, hi)
        if prev is not None:
            value = max(value, prev)
        value = min(value, hi)
        ranks.append(value)
        prev = value
    return tuple(ranks)
