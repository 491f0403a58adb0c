"""Closed-form circuit counts for the two-block family, plus the family of
diameter-d tournaments with a single hamiltonian circuit.

The closed forms cover two parameter regimes; outside them no general
expression is available and formula_c answers None so callers fall back to
brute-force counting instead of trusting an invented extrapolation.

Members of the single-circuit family are parametrised by a vector h: the
i-th vertex of the transitive block beats exactly the first h_i spine
vertices and loses to the rest.  The admissible vectors start at the top
(h_1 = d-2), end at the bottom (h_last = 1), and may never climb more than
one step above the lowest value seen so far.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .core import (
    MAX_ORDER,
    ParameterError,
    ResourceGuardError,
    Tournament,
    VertexLabeling,
    build_path_extremal,
)
from .iso import _canon_raw

# Family enumeration canonises every candidate; past 20 the pure-python
# labeler dominates the cost and the vector count explodes for small d.
H_FAMILY_MAX_ORDER = 20


def _check_d_n(d: int, n: int, what: str) -> None:
    if not 3 <= d < n:
        raise ParameterError(f"{what} needs n > d >= 3, got d={d}, n={n}")
    if n > MAX_ORDER:
        raise ParameterError(f"{what}: order {n} exceeds {MAX_ORDER}")


def formula_c(d: int, n: int, ell: int) -> int | None:
    """Exact number of circuits of length ell in the two-block tournament
    of order n and diameter d, or None where no closed form applies.

    Two regimes are covered.  For 2d >= n+3 and n-d+3 <= ell <= d the count
    is d - ell + 2^ceil((n-d+1)/2) + 2^floor((n-d+1)/2) - 2; for
    n+d-1 <= 2*ell it is binom(n-d+1, n-ell).  The regimes overlap only at
    d = n-1, where both give the same value.
    """
    _check_d_n(d, n, "formula_c")
    if not 3 <= ell <= n:
        raise ParameterError(f"formula_c needs 3 <= ell <= n, got ell={ell}")
    spare = n - d + 1
    if 2 * d >= n + 3 and n - d + 3 <= ell <= d:
        return d - ell + (1 << ((spare + 1) // 2)) + (1 << (spare // 2)) - 2
    if n + d - 1 <= 2 * ell:
        return comb(spare, n - ell)
    return None


def formula_c_through(d: int, n: int) -> int:
    """Circuits of a covered length through one fixed leading-block vertex
    of the mirrored two-block tournament: 2^(ceil((n-d+1)/2) - 1).

    The value is independent of which leading-block vertex and which
    covered length is taken, which is what makes it worth a closed form.
    """
    _check_d_n(d, n, "formula_c_through")
    return 1 << ((n - d + 2) // 2 - 1)


@dataclass(frozen=True)
class DouglasParams:
    """Parameters of one member of the single-circuit family: order n,
    diameter d, and the domination vector h of length n-d+1."""

    d: int
    n: int
    h: tuple[int, ...]

    def __post_init__(self):
        _check_d_n(self.d, self.n, "DouglasParams")
        h, d, n = self.h, self.d, self.n
        m = n - d + 1
        if len(h) != m:
            raise ParameterError(
                f"domination vector must have length n-d+1 = {m}, got {len(h)}"
            )
        if h[0] != d - 2:
            raise ParameterError(
                f"first domination index must be d-2 = {d - 2}, got {h[0]}"
            )
        if h[-1] != 1:
            raise ParameterError(
                f"last domination index must be 1, got {h[-1]}"
            )
        for i in range(1, m - 1):
            if not 1 <= h[i] <= d - 2:
                raise ParameterError(
                    f"domination index {i + 1} must lie in"
                    f" [1, d-2] = [1, {d - 2}], got {h[i]}"
                )
        low = h[0]
        for i in range(1, m):
            if h[i] > low + 1:
                raise ParameterError(
                    f"domination index {i + 1} exceeds the running minimum "
                    f"{low} by more than 1 (got {h[i]})"
                )
            low = min(low, h[i])


def _build_from_h(d: int, n: int, h: tuple[int, ...]) -> Tournament:
    # Vertex order: transitive block w1..w_{n-d+1} first, then the spine
    # block v1..v_{d-1}.  No invariant checks here; callers own those.
    m = n - d + 1
    spine = build_path_extremal(d - 1)
    rows = [0] * n
    for i in range(m):
        for j in range(i + 1, m):
            rows[i] |= 1 << j
    for j in range(d - 1):
        rows[m + j] = spine.out[j] << m
    for i in range(m):
        for j in range(1, d):  # v_j sits at global index m + j - 1
            if j <= h[i]:
                rows[i] |= 1 << (m + j - 1)
            else:
                rows[m + j - 1] |= 1 << i
    names = tuple(f"w{i + 1}" for i in range(m)) + tuple(
        f"v{j + 1}" for j in range(d - 1)
    )
    return Tournament(n, tuple(rows), VertexLabeling(names))


def build_douglas(p: DouglasParams) -> Tournament:
    """Construct the family member with domination vector p.h.

    The result is strong with diameter p.d, has exactly one hamiltonian
    circuit, and its non-critical vertices are exactly the transitive
    block."""
    return _build_from_h(p.d, p.n, p.h)


def _h_vectors(d: int, n: int) -> Iterator[tuple[int, ...]]:
    """All admissible domination vectors for (d, n), lexicographically."""
    m = n - d + 1
    head = d - 2
    if m == 2:
        yield (head, 1)
        return

    mid = [1] * (m - 2)

    def fill(pos: int, low: int) -> Iterator[tuple[int, ...]]:
        if pos == m - 2:
            yield (head, *mid, 1)
            return
        cap = min(d - 2, low + 1)
        for v in range(1, cap + 1):
            mid[pos] = v
            yield from fill(pos + 1, min(low, v))

    yield from fill(0, head)


def enumerate_h_family(d: int, n: int) -> list[Tournament]:
    """One representative per isomorphism class of the single-circuit
    family for (d, n), in first-seen order of the vectors."""
    _check_d_n(d, n, "enumerate_h_family")
    if n > H_FAMILY_MAX_ORDER:
        raise ResourceGuardError(
            f"enumerate_h_family is limited to order {H_FAMILY_MAX_ORDER}"
        )
    seen: set[int] = set()
    out = []
    for h in _h_vectors(d, n):
        t = _build_from_h(d, n, h)
        code = int(_canon_raw(n, t.out)[0])
        if code not in seen:
            seen.add(code)
            out.append(t)
    return out


def h_family_size_nminus3(n: int) -> int:
    """Closed-form class count of the family at d = n-3: (n^2-7n+8)/2."""
    if n < 7:
        raise ParameterError(f"h_family_size_nminus3 needs n >= 7, got {n}")
    return (n * n - 7 * n + 8) // 2
