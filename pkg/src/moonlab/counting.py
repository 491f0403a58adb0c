"""Exact circuit and path counting.

Circuit counts come from one subset DP per anchor vertex (the minimum
vertex on each cycle), so every cycle is counted exactly once.  All counts
are exact int64 values; the order guards below are chosen so that the
largest intermediate (a simple-path count, at most (n-1)!) provably fits,
and the library refuses rather than wraps beyond them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import _kernels
from .analysis import is_strong
from .core import ParameterError, ResourceGuardError, Tournament

# 2**(n-1) DP states per anchor; at 20 the table is 80 MB and every count
# is below 19! < 2**63.  21! exceeds 2**63, so 20 is the exactness edge.
COUNT_MAX_ORDER = 20

# s_ell scans all 2**n subsets but stores nothing per subset.
STRONG_SUB_MAX_ORDER = 32


def masks_of(t: Tournament) -> np.ndarray:
    """Adjacency rows as an int64 vector for the kernels."""
    return np.array(t.out, dtype=np.int64)


def _guard_order(n: int, what: str) -> None:
    if n > COUNT_MAX_ORDER:
        raise ResourceGuardError(
            f"{what} is limited to order {COUNT_MAX_ORDER}: beyond that the "
            f"subset DP cannot certify exact 64-bit counts"
        )


@dataclass(frozen=True)
class CycleCensus:
    """Cycle counts of one tournament: c maps each length ell in [3, n] to
    the number of circuits of that length; s, when present, maps ell to the
    number of strongly connected sub-tournaments of order ell."""

    n: int
    c: Mapping[int, int]
    s: Mapping[int, int] | None = None


def cycle_counts(t: Tournament) -> CycleCensus:
    """Census of circuits of every length from 3 to n."""
    _guard_order(t.n, "cycle_counts")
    raw = _kernels.census(t.n, masks_of(t))
    return CycleCensus(t.n, {ell: int(raw[ell]) for ell in range(3, t.n + 1)})


def cycle_counts_through(t: Tournament, w: int) -> dict[int, int]:
    """Counts of circuits through the vertex w, by length."""
    t._check_vertex(w)
    _guard_order(t.n, "cycle_counts_through")
    raw = _kernels.census_through(t.n, masks_of(t), w)
    return {ell: int(raw[ell]) for ell in range(3, t.n + 1)}


def strong_sub_counts(t: Tournament) -> dict[int, int]:
    """Number of strongly connected sub-tournaments of each order in [3, n]."""
    if t.n > STRONG_SUB_MAX_ORDER:
        raise ResourceGuardError(
            f"strong_sub_counts scans 2**n subsets and is limited to order "
            f"{STRONG_SUB_MAX_ORDER}"
        )
    raw = _kernels.strong_subset_counts(t.n, masks_of(t))
    return {ell: int(raw[ell]) for ell in range(3, t.n + 1)}


def hamiltonian_path_count(t: Tournament) -> int:
    """Number of directed Hamiltonian paths; always odd."""
    _guard_order(t.n, "hamiltonian_path_count")
    return int(_kernels.hamiltonian_paths(t.n, masks_of(t)))


def is_vertex_pancyclic(t: Tournament) -> bool:
    """True when every vertex lies on a circuit of every length in [3, n]."""
    if t.n < 3:
        raise ParameterError("vertex-pancyclicity needs order >= 3")
    if not is_strong(t):
        raise ParameterError("vertex-pancyclicity is defined for strong tournaments")
    _guard_order(t.n, "is_vertex_pancyclic")
    masks = masks_of(t)
    for w in range(t.n):
        raw = _kernels.census_through(t.n, masks, w)
        for ell in range(3, t.n + 1):
            if raw[ell] == 0:
                return False
    return True
