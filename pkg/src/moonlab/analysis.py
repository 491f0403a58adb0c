"""Reachability structure of a tournament: distances, diameter, critical
vertices, and the condensation of the non-critical part.

Distances use BFS with bitset frontiers, so a whole frontier expansion is a
handful of word operations.  Unreachable pairs get the sentinel None, never
a large stand-in value, and the diameter of a non-strong tournament is
None rather than infinity.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import ParameterError, Tournament, iter_bits


@dataclass(frozen=True)
class StructureReport:
    """Everything analyze() derives in one pass.

    dist[x][y] is the length of a shortest directed path, None when y is
    unreachable from x.  non_critical and critical partition the vertex
    set; ncr_components lists the strongly connected components of the
    sub-tournament induced on the non-critical vertices, in condensation
    order (every vertex of an earlier component beats every vertex of a
    later one).
    """

    n: int
    strong: bool
    diameter: int | None
    dist: tuple[tuple[int | None, ...], ...]
    non_critical: tuple[int, ...]
    critical: tuple[int, ...]
    ncr_components: tuple[tuple[int, ...], ...]


def _distances_from(t: Tournament, source: int, subset: int) -> list[int | None]:
    dist: list[int | None] = [None] * t.n
    dist[source] = 0
    reached = 1 << source
    frontier = reached
    d = 0
    while frontier:
        acc = 0
        for u in iter_bits(frontier):
            acc |= t.out[u]
        frontier = acc & subset & ~reached
        d += 1
        for v in iter_bits(frontier):
            dist[v] = d
        reached |= frontier
    return dist


def distance(t: Tournament, x: int, y: int) -> int | None:
    """Length of a shortest directed path from x to y; None if unreachable."""
    t._check_vertex(x)
    t._check_vertex(y)
    full = (1 << t.n) - 1
    return _distances_from(t, x, full)[y]


def _strong_on(t: Tournament, subset: int) -> bool:
    size = subset.bit_count()
    if size <= 1:
        return True  # empty and singleton sub-tournaments count as strong
    seed = subset & -subset
    reach = seed
    frontier = seed
    while frontier:
        acc = 0
        for u in iter_bits(frontier):
            acc |= t.out[u]
        frontier = acc & subset & ~reach
        reach |= frontier
    if reach != subset:
        return False
    reach = seed
    grew = True
    while grew:
        grew = False
        for u in iter_bits(subset & ~reach):
            if t.out[u] & reach:
                reach |= 1 << u
                grew = True
    return reach == subset


def is_strong(t: Tournament) -> bool:
    """True when every vertex reaches every other vertex."""
    return _strong_on(t, (1 << t.n) - 1)


def strong_components(t: Tournament) -> tuple[tuple[int, ...], ...]:
    """Strongly connected components in condensation order.

    In a tournament the condensation is a total order, so earlier
    components dominate later ones completely.  Components are found from
    forward/backward closure intersections; the one with the largest
    forward closure comes first.
    """
    full = (1 << t.n) - 1
    reach = [0] * t.n
    for v in range(t.n):
        r = 1 << v
        frontier = r
        while frontier:
            acc = 0
            for u in iter_bits(frontier):
                acc |= t.out[u]
            frontier = acc & full & ~r
            r |= frontier
        reach[v] = r
    seen = 0
    comps: list[tuple[int, int]] = []  # (component bitset, forward reach size)
    for v in range(t.n):
        if seen >> v & 1:
            continue
        comp = 0
        for u in iter_bits(reach[v]):
            if reach[u] >> v & 1:
                comp |= 1 << u
        seen |= comp
        comps.append((comp, reach[v].bit_count()))
    comps.sort(key=lambda item: -item[1])
    return tuple(tuple(iter_bits(comp)) for comp, _ in comps)


def analyze(t: Tournament) -> StructureReport:
    """Distances, diameter, criticality partition, and non-critical components."""
    n = t.n
    full = (1 << n) - 1
    dist = tuple(tuple(_distances_from(t, s, full)) for s in range(n))
    strong = all(d is not None for row in dist for d in row)
    diameter = max(d for row in dist for d in row) if strong else None
    if n == 1:
        return StructureReport(1, True, 0, dist, (0,), (), ((0,),))
    ncr = []
    cr = []
    for w in range(n):
        if _strong_on(t, full & ~(1 << w)):
            ncr.append(w)
        else:
            cr.append(w)
    if ncr:
        from .core import induced_subtournament

        sub = induced_subtournament(t, ncr)
        comps = tuple(
            tuple(ncr[i] for i in comp) for comp in strong_components(sub)
        )
    else:
        comps = ()
    return StructureReport(
        n, strong, diameter, dist, tuple(ncr), tuple(cr), comps
    )
