"""Exhaustive ground truth: no algebra, no cleverness, just enumeration.

Everything the determinant pipeline produces is checked against these
sweeps in the test suite.  They must stay obviously correct, so they do
the dumbest possible thing: walk all of S_X (or all bijections X -> Y)
in lexicographic one-line order and test edge preservation directly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import GroundSetTooLarge
from .matrix import Hypergraph
from .partials import Partial, ZERO, apply_edge, leq


@dataclass(frozen=True)
class OracleConfig:
    """Limits for the exhaustive sweeps."""

    max_ground_size: int = 8
    timeout: float | None = None  # seconds, checked between permutations

    def __post_init__(self):
        if self.max_ground_size > 10:
            raise ValueError("oracle refuses ground sets above 10 points")


DEFAULT_CONFIG = OracleConfig()


def _check_size(m: int, config: OracleConfig) -> None:
    if m > config.max_ground_size:
        raise GroundSetTooLarge(
            f"ground set of {m} points exceeds oracle cap {config.max_ground_size}"
        )


class _Deadline:
    def __init__(self, timeout: float | None):
        self.limit = None if timeout is None else time.monotonic() + timeout

    def check(self):
        if self.limit is not None and time.monotonic() > self.limit:
            raise TimeoutError("oracle sweep timed out")


def brute_aut(g: Hypergraph, config: OracleConfig = DEFAULT_CONFIG) -> frozenset:
    """All permutations carrying the edge family onto itself."""
    m = g.ground.size
    _check_size(m, config)
    deadline = _Deadline(config.timeout)
    family = set(g.edges)
    out = []
    for perm in permutations(range(m)):
        deadline.check()
        if {apply_edge(perm, e) for e in g.edges} == family:
            out.append(perm)
    return frozenset(out)


def brute_iso(
    g1: Hypergraph, g2: Hypergraph, config: OracleConfig = DEFAULT_CONFIG
) -> frozenset:
    """All bijections carrying the first edge family onto the second."""
    m = g1.ground.size
    if g2.ground.size != m:
        return frozenset()
    _check_size(m, config)
    deadline = _Deadline(config.timeout)
    family = set(g2.edges)
    out = []
    for perm in permutations(range(m)):
        deadline.check()
        if {apply_edge(perm, e) for e in g1.edges} == family:
            out.append(perm)
    return frozenset(out)


def all_partials(m: int):
    """Every partial on a ground set of m points (grows brutally fast)."""
    points = range(m)
    out = []
    for p in range(m + 1):
        for dom in combinations(points, p):
            for img in permutations(points, p):
                out.append(Partial(tuple(zip(dom, img))))
    return out


def brute_join_min(p1: Partial, p2: Partial, m: int):
    """Least common upper bound of two partials by full enumeration.

    Returns ZERO when no partial dominates both.  Ground truth for the
    join construction; only sensible for tiny m.
    """
    if m > 6:
        raise GroundSetTooLarge("join sweep is only run for m <= 6")
    candidates = [
        c for c in all_partials(m) if leq(p1, c) and leq(p2, c)
    ]
    if not candidates:
        return ZERO
    best = min(candidates, key=lambda c: len(c.pairs))
    assert all(leq(best, c) for c in candidates), "upper bounds without a minimum"
    return best
