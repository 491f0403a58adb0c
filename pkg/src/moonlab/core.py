"""Tournament values, constructor families, and the TRN v1 text codec.

A tournament on n vertices is an orientation of the complete graph K_n.
It is stored as n out-neighbor bitsets: bit j of row i is set iff the arc
i -> j is present.  Orders are capped at 62 so a row always fits in one
machine word, which is what keeps the counting kernels single-word.

Values are immutable.  Every operation returns a fresh Tournament and
validates the full orientation invariant on construction (exactly one arc
per vertex pair, no self-arcs).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

MAX_ORDER = 62


class MoonlabError(Exception):
    """Base class for every error this package raises deliberately."""


class ParameterError(MoonlabError, ValueError):
    """A constructor or operation received out-of-range parameters."""


class TrnFormatError(MoonlabError, ValueError):
    """Malformed TRN/TRNSET input; the message carries line/char positions."""


class ResourceGuardError(MoonlabError):
    """The request exceeds a hard size guard (memory or exact-count range)."""


def iter_bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexLabeling:
    """Display names for vertices, attached by constructors for readable reports."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ParameterError("vertex labels must be unique")


@dataclass(frozen=True)
class Tournament:
    """An immutable tournament; out[i] holds the out-neighbor bitset of vertex i."""

    n: int
    out: tuple[int, ...]
    labels: VertexLabeling | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_ORDER:
            raise ParameterError(f"order must be in [1, {MAX_ORDER}], got {n}")
        if len(self.out) != n:
            raise ParameterError(f"expected {n} adjacency rows, got {len(self.out)}")
        total = 0
        for i, row in enumerate(self.out):
            if row < 0 or row >> n:
                raise ParameterError(f"row {i} has bits outside [0, {n})")
            if row & (1 << i):
                raise ParameterError(f"row {i} contains a self-arc")
            total += row.bit_count()
        # With no doubly-oriented pair, an arc total of C(n,2) forces exactly
        # one arc per pair.
        for i, row in enumerate(self.out):
            for j in iter_bits(row):
                if self.out[j] >> i & 1:
                    raise ParameterError(f"pair ({i}, {j}) is oriented both ways")
        if total != comb(n, 2):
            raise ParameterError(
                f"expected {comb(n, 2)} arcs for order {n}, got {total}"
            )
        if self.labels is not None and len(self.labels.names) != n:
            raise ParameterError("labeling length does not match order")

    # -- basic queries -------------------------------------------------

    def has_arc(self, i: int, j: int) -> bool:
        self._check_vertex(i)
        self._check_vertex(j)
        return bool(self.out[i] >> j & 1)

    def out_degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.out[i].bit_count()

    def out_degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.out)

    def label_of(self, i: int) -> str:
        self._check_vertex(i)
        if self.labels is None:
            return str(i)
        return self.labels.names[i]

    def _check_vertex(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise ParameterError(f"vertex {i} out of range for order {self.n}")


def _label(names: Iterable[str]) -> VertexLabeling:
    return VertexLabeling(tuple(names))


# -- constructor families ---------------------------------------------


def build_transitive(n: int) -> Tournament:
    """Transitive tournament: arc i -> j exactly when i < j."""
    if not 1 <= n <= MAX_ORDER:
        raise ParameterError(f"order must be in [1, {MAX_ORDER}], got {n}")
    full = (1 << n) - 1
    rows = tuple(full ^ ((1 << (i + 1)) - 1) for i in range(n))
    return Tournament(n, rows, _label(f"z{i}" for i in range(n)))


def build_path_extremal(n: int) -> Tournament:
    """The spine tournament with the longest possible diameter, n - 1.

    Consecutive arcs z_i -> z_{i+1} form the unique shortest route from z_0
    to z_{n-1}; every skipping pair is oriented backwards (z_j -> z_i for
    j > i + 1).  Out-degree sequence: 1, 1, 2, ..., n-3, n-2, n-2.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ParameterError(f"order must be in [1, {MAX_ORDER}], got {n}")
    rows = []
    for i in range(n):
        row = 0
        if i + 1 < n:
            row |= 1 << (i + 1)
        if i >= 2:
            row |= (1 << (i - 1)) - 1  # back arcs to z_0 .. z_{i-2}
        rows.append(row)
    return Tournament(n, tuple(rows), _label(f"z{i}" for i in range(n)))


def compose(outer: Tournament, parts: Sequence[Tournament]) -> Tournament:
    """Blow-up composition: replace vertex r of outer by the tournament parts[r].

    All arcs between two blocks follow the outer arc between their
    replaced vertices.  Block vertex order is block concatenation in outer
    vertex order.
    """
    if len(parts) != outer.n:
        raise ParameterError(
            f"need {outer.n} parts for the outer tournament, got {len(parts)}"
        )
    sizes = [p.n for p in parts]
    n = sum(sizes)
    if n > MAX_ORDER:
        raise ParameterError(f"composed order {n} exceeds {MAX_ORDER}")
    offsets = []
    acc = 0
    for s in sizes:
        offsets.append(acc)
        acc += s
    block_mask = [((1 << sizes[r]) - 1) << offsets[r] for r in range(outer.n)]
    rows = [0] * n
    for r, part in enumerate(parts):
        dominated = 0
        for s in iter_bits(outer.out[r]):
            dominated |= block_mask[s]
        for i in range(part.n):
            rows[offsets[r] + i] = (part.out[i] << offsets[r]) | dominated
    names: list[str] = []
    for r, part in enumerate(parts):
        outer_name = outer.label_of(r)
        if part.n == 1:
            names.append(outer_name)
        else:
            names.extend(f"{outer_name}.{part.label_of(i)}" for i in range(part.n))
    if len(set(names)) != len(names):
        names = [str(i) for i in range(n)]
    return Tournament(n, tuple(rows), _label(names))


def _extremal_blocks(d: int, n: int) -> tuple[int, int]:
    if not 3 <= d < n:
        raise ParameterError(f"need n > d >= 3, got d={d}, n={n}")
    if n > MAX_ORDER:
        raise ParameterError(f"order must be at most {MAX_ORDER}, got {n}")
    spare = n - d + 1
    return spare // 2, spare - spare // 2


def _extremal_from_blocks(d: int, n: int, first: int, last: int) -> Tournament:
    spine = build_path_extremal(d + 1)
    parts = [build_transitive(first)]
    parts += [build_transitive(1)] * (d - 1)
    parts.append(build_transitive(last))
    t = compose(spine, parts)
    names = [f"x{i + 1}" for i in range(first)]
    names += [f"v{j}" for j in range(1, d)]
    names += [f"y{i + 1}" for i in range(last)]
    return Tournament(t.n, t.out, _label(names))


def build_extremal(d: int, n: int) -> Tournament:
    """Diameter-d circuit minimizer: spine of d - 1 cut vertices between two
    transitive end blocks of sizes floor/ceil of (n - d + 1) / 2."""
    lo, hi = _extremal_blocks(d, n)
    return _extremal_from_blocks(d, n, lo, hi)


def build_extremal_minus(d: int, n: int) -> Tournament:
    """Mirror variant of build_extremal with the end block sizes swapped.

    Isomorphic to the converse of build_extremal(d, n); the two coincide
    exactly when n - d + 1 is even.
    """
    lo, hi = _extremal_blocks(d, n)
    return _extremal_from_blocks(d, n, hi, lo)


def build_hatted(kind: str, n: int) -> Tournament:
    """Single-arc perturbations of the spine tournament of order n.

    kind "right" reverses the arc (z_{n-1}, z_{n-3}) and drops the diameter
    to n - 2; "left" reverses (z_2, z_0) for the mirror form; "both"
    reverses both arcs and lands on diameter n - 3.
    """
    if kind not in ("right", "left", "both"):
        raise ParameterError(f"kind must be right, left, or both, got {kind!r}")
    min_n = 6 if kind == "both" else 5
    if n < min_n:
        raise ParameterError(f"kind {kind!r} needs order >= {min_n}, got {n}")
    t = build_path_extremal(n)
    if kind in ("right", "both"):
        t = flip_arc(t, n - 1, n - 3)
    if kind in ("left", "both"):
        t = flip_arc(t, 2, 0)
    return t


def converse(t: Tournament) -> Tournament:
    """Reverse every arc."""
    full = (1 << t.n) - 1
    rows = tuple((full ^ row ^ (1 << i)) for i, row in enumerate(t.out))
    return Tournament(t.n, rows, t.labels)


def induced_subtournament(t: Tournament, vertices: Iterable[int]) -> Tournament:
    """Restrict to a vertex subset, renumbering in ascending original order."""
    vs = sorted(set(vertices))
    if not vs:
        raise ParameterError("vertex subset must be non-empty")
    if vs[0] < 0 or vs[-1] >= t.n:
        raise ParameterError(f"vertex subset out of range for order {t.n}")
    index = {v: k for k, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for j in iter_bits(t.out[v]):
            if j in index:
                row |= 1 << index[j]
        rows.append(row)
    labels = None
    if t.labels is not None:
        labels = _label(t.labels.names[v] for v in vs)
    return Tournament(len(vs), tuple(rows), labels)


def flip_arc(t: Tournament, i: int, j: int) -> Tournament:
    """Reverse the orientation of the single pair {i, j}."""
    t._check_vertex(i)
    t._check_vertex(j)
    if i == j:
        raise ParameterError("cannot flip a self-pair")
    if not t.out[i] >> j & 1:
        i, j = j, i
    rows = list(t.out)
    rows[i] ^= 1 << j
    rows[j] ^= 1 << i
    return Tournament(t.n, tuple(rows), t.labels)


def relabel(t: Tournament, perm: Sequence[int]) -> Tournament:
    """Apply a vertex permutation; perm[i] is the new index of old vertex i."""
    if sorted(perm) != list(range(t.n)):
        raise ParameterError("perm must be a permutation of the vertex range")
    rows = [0] * t.n
    for i in range(t.n):
        row = 0
        for j in iter_bits(t.out[i]):
            row |= 1 << perm[j]
        rows[perm[i]] = row
    labels = None
    if t.labels is not None:
        names = [""] * t.n
        for i in range(t.n):
            names[perm[i]] = t.labels.names[i]
        labels = _label(names)
    return Tournament(t.n, tuple(rows), labels)


# -- TRN v1 codec ------------------------------------------------------
#
# Line 1: the order n in decimal.  Line 2: C(n,2) characters over {0,1} in
# row-major pair order (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1);
# '1' means the lower-indexed vertex beats the higher-indexed one.  A
# trailing newline is required.


def format_trn(t: Tournament) -> str:
    return f"{t.n}\n{pack_bits(t)}\n"


def pack_bits(t: Tournament) -> str:
    """The TRN body: one character per vertex pair in row-major order."""
    chars = []
    for i in range(t.n):
        row = t.out[i]
        for j in range(i + 1, t.n):
            chars.append("1" if row >> j & 1 else "0")
    return "".join(chars)


def tournament_from_bits(n: int, bits: str) -> Tournament:
    """Inverse of pack_bits; bits must hold exactly C(n,2) characters."""
    if len(bits) != comb(n, 2):
        raise TrnFormatError(
            f"expected {comb(n, 2)} pair characters for order {n}, got {len(bits)}"
        )
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            c = bits[k]
            if c == "1":
                rows[i] |= 1 << j
            elif c == "0":
                rows[j] |= 1 << i
            else:
                raise TrnFormatError(f"char {k + 1}: expected '0' or '1', got {c!r}")
            k += 1
    return Tournament(n, tuple(rows))


def parse_trn(text: str) -> Tournament:
    """Parse one TRN v1 record, with exact positions in every diagnostic."""
    if not text.endswith("\n"):
        raise TrnFormatError("missing trailing newline")
    lines = text.split("\n")
    # split leaves one empty string after the final newline
    if len(lines) < 3 or lines[0] == "":
        raise TrnFormatError("line 1: expected the order in decimal")
    if len(lines) > 3 or lines[2] != "":
        raise TrnFormatError("line 3: unexpected content after the pair block")
    try:
        n = int(lines[0], 10)
    except ValueError:
        raise TrnFormatError(f"line 1: expected an integer order, got {lines[0]!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise TrnFormatError(f"line 1: order must be in [1, {MAX_ORDER}], got {n}")
    bits = lines[1]
    if len(bits) != comb(n, 2):
        raise TrnFormatError(
            f"line 2: expected {comb(n, 2)} characters for order {n}, got {len(bits)}"
        )
    for k, c in enumerate(bits):
        if c not in "01":
            raise TrnFormatError(f"line 2, char {k + 1}: expected '0' or '1', got {c!r}")
    return tournament_from_bits(n, bits)
