"""Canonical forms, isomorphism tests, and isomorph-free enumeration.

The canonical form of a tournament is the lexicographically smallest TRN
pair string over all vertex relabelings.  Orders up to 11 pack the string
into one int64 and run compiled; 12 through 16 use the same search over
Python big ints.  Both searches assign labels greedily row by row over an
ordered partition of the unassigned vertices, branching only on ties.

Enumeration extends each canonical representative of order m by a new
vertex in all 2**m ways and keeps a child exactly when deleting the vertex
its canonical form labels last reproduces the parent's code.  The set of
vertices a canonical form can label last is one automorphism orbit, so the
rule is isomorphism-invariant and every class of order m+1 survives under
exactly one parent.
"""
from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .core import (
    ParameterError,
    ResourceGuardError,
    Tournament,
    TrnFormatError,
    iter_bits,
    tournament_from_bits,
)

CANON_MAX_ORDER = 16
KERNEL_MAX_ORDER = 11  # pair string fits one int64 up to here
ENUM_MAX_ORDER = 10
GENERATOR_VERSION = 1


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical identity of an isomorphism class.

    code is a valid TRN pair block: the lexicographically smallest over all
    relabelings.  labeling[k] is the original vertex given canonical label
    k (the deterministic first witness of the minimum).
    """

    n: int
    code: str
    labeling: tuple[int, ...]


def _canon_py(n: int, rows: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Pure-Python twin of the compiled canonical search (arbitrary width)."""
    if n == 1:
        return 0, (0,)
    nbits = n * (n - 1) // 2
    done_bits = [nbits - (n - k) * (n - k - 1) // 2 for k in range(n + 1)]
    best = (1 << nbits) - 1
    best_perm: tuple[int, ...] = ()
    have = False

    def level(cells: list[int]):
        # candidates achieving the minimal next row, given the cell order
        first = cells[0]
        minr = None
        cands: list[int] = []
        for u in iter_bits(first):
            r = 0
            for j, cc in enumerate(cells):
                if j == 0:
                    cc &= ~(1 << u)
                r = (r << cc.bit_count()) | ((1 << (cc & rows[u]).bit_count()) - 1)
            if minr is None or r < minr:
                minr = r
                cands = [u]
            elif r == minr:
                cands.append(u)
        return cands, minr

    stack: list[tuple[list[int], list[int]]] = []
    cands, minr = level([(1 << n) - 1])
    stack.append(([(1 << n) - 1], cands))
    perm: list[int] = [0] * n
    pres = [0] * (n + 1)
    pres[1] = minr
    pos = [0] * (n + 1)
    while stack:
        k = len(stack) - 1
        cells, cands = stack[-1]
        if pos[k] >= len(cands) or (
            have and pres[k + 1] > (best >> (nbits - done_bits[k + 1]))
        ):
            stack.pop()
            continue
        u = cands[pos[k]]
        pos[k] += 1
        perm[k] = u
        if k == n - 1:
            code = pres[n]
            if not have or code < best:
                best = code
                best_perm = tuple(perm)
                have = True
            continue
        nxt: list[int] = []
        for j, cc in enumerate(cells):
            if j == 0:
                cc &= ~(1 << u)
            ins = cc & ~rows[u]
            outs = cc & rows[u]
            if ins:
                nxt.append(ins)
            if outs:
                nxt.append(outs)
        ncands, nminr = level(nxt)
        pres[k + 2] = (pres[k + 1] << (n - 2 - k)) | nminr
        pos[k + 1] = 0
        stack.append((nxt, ncands))
    return best, best_perm


def _code_to_str(n: int, code: int) -> str:
    nbits = n * (n - 1) // 2
    return format(code, f"0{nbits}b") if nbits else ""


def _canon_raw(n: int, rows: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """(packed code, labeling) without the public order guard."""
    if n <= KERNEL_MAX_ORDER:
        perm = np.empty(n, dtype=np.int64)
        code = _kernels.canon_code(n, np.array(rows, dtype=np.int64), perm)
        return int(code), tuple(int(v) for v in perm)
    return _canon_py(n, rows)


def canonical_form(t: Tournament) -> CanonicalForm:
    """Canonical form of t; identical for exactly the isomorphic tournaments."""
    if t.n > CANON_MAX_ORDER:
        raise ResourceGuardError(
            f"canonical_form is limited to order {CANON_MAX_ORDER}"
        )
    code, perm = _canon_raw(t.n, t.out)
    return CanonicalForm(t.n, _code_to_str(t.n, code), perm)


def are_isomorphic(a: Tournament, b: Tournament) -> bool:
    """Exact isomorphism test via canonical codes."""
    if a.n != b.n:
        return False
    if a.n > CANON_MAX_ORDER:
        raise ResourceGuardError(
            f"are_isomorphic is limited to order {CANON_MAX_ORDER}"
        )
    if sorted(a.out_degrees()) != sorted(b.out_degrees()):
        return False
    return _canon_raw(a.n, a.out)[0] == _canon_raw(b.n, b.out)[0]


# -- isomorph-free enumeration ------------------------------------------


@lru_cache(maxsize=None)
def _level_codes(n: int) -> np.ndarray:
    """Sorted canonical codes of every isomorphism class of order n."""
    if n == 1:
        arr = np.zeros(1, dtype=np.int64)
    else:
        parents = _level_codes(n - 1)
        chunks = []
        mp = n - 1
        for pcode in parents:
            pmasks = _decode_masks(mp, int(pcode))
            accepted = _kernels.children_codes(mp, pmasks, np.int64(pcode))
            if accepted.size:
                chunks.append(np.unique(accepted))
        arr = np.unique(np.concatenate(chunks))
    arr.flags.writeable = False
    return arr


def _decode_masks(n: int, code: int) -> np.ndarray:
    """Unpack a canonical int64 code into adjacency rows."""
    rows = np.zeros(n, dtype=np.int64)
    nbits = n * (n - 1) // 2
    k = nbits - 1  # bit index of pair (0,1)
    for i in range(n):
        for j in range(i + 1, n):
            if code >> k & 1:
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
            k -= 1
    return rows


def _code_to_tournament(n: int, code: int) -> Tournament:
    return tournament_from_bits(n, _code_to_str(n, code))


@dataclass(frozen=True)
class ClassFilter:
    """Restriction applied to an enumeration stream.

    Diameter filters imply strong connectivity, since the diameter of a
    non-strong tournament is undefined.
    """

    strong: bool = False
    diam_le: int | None = None
    diam_eq: int | None = None

    def __post_init__(self):
        if self.diam_le is not None and self.diam_eq is not None:
            raise ParameterError("choose at most one diameter restriction")

    def spec(self) -> str:
        if self.diam_eq is not None:
            return f"diam-eq-{self.diam_eq}"
        if self.diam_le is not None:
            return f"diam-le-{self.diam_le}"
        return "strong" if self.strong else "none"

    @staticmethod
    def from_spec(spec: str) -> "ClassFilter":
        if spec == "none":
            return ClassFilter()
        if spec == "strong":
            return ClassFilter(strong=True)
        if spec.startswith("diam-le-"):
            return ClassFilter(diam_le=int(spec[len("diam-le-"):], 10))
        if spec.startswith("diam-eq-"):
            return ClassFilter(diam_eq=int(spec[len("diam-eq-"):], 10))
        raise ParameterError(f"unknown filter spec {spec!r}")

    def admits(self, n: int, masks: np.ndarray) -> bool:
        if self.diam_eq is None and self.diam_le is None:
            if not self.strong:
                return True
            full = (1 << n) - 1
            return bool(_kernels.is_strong_subset(n, masks, np.int64(full)))
        full = (1 << n) - 1
        diam = int(_kernels.diameter_of_subset(n, masks, np.int64(full)))
        if diam < 0:
            return False
        if self.diam_eq is not None:
            return diam == self.diam_eq
        return diam <= self.diam_le


def enumerate_tournaments(
    n: int, class_filter: ClassFilter | None = None
) -> Iterator[Tournament]:
    """Yield one representative per isomorphism class of order n, in
    ascending canonical-code order, optionally filtered."""
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise ResourceGuardError(
            f"enumeration is limited to order {ENUM_MAX_ORDER}"
        )
    flt = class_filter or ClassFilter()
    for code in _level_codes(n):
        masks = _decode_masks(n, int(code))
        if flt.admits(n, masks):
            yield _code_to_tournament(n, int(code))


def count_classes(n: int) -> int:
    """Number of isomorphism classes of order n."""
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise ResourceGuardError(
            f"count_classes is limited to order {ENUM_MAX_ORDER}"
        )
    return int(_level_codes(n).size)


# -- TRNSET cache files --------------------------------------------------
#
# Header: "TRNSET v1 n=<n> filter=<spec> hash=<12 hex>"; the hash covers
# (n, filter, generator version) so stale caches from an older generator
# are regenerated rather than trusted.  Each following line is one TRN
# pair block; the order is implicit from the header.


def _trnset_hash(n: int, spec: str) -> str:
    key = f"n={n};filter={spec};gen={GENERATOR_VERSION}".encode()
    return hashlib.sha256(key).hexdigest()[:12]


def trnset_header(n: int, class_filter: ClassFilter) -> str:
    spec = class_filter.spec()
    return f"TRNSET v1 n={n} filter={spec} hash={_trnset_hash(n, spec)}"


def write_trnset(path: Path, n: int, class_filter: ClassFilter,
                 bodies: Iterable[str]) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w") as fh:
        fh.write(trnset_header(n, class_filter) + "\n")
        for body in bodies:
            fh.write(body + "\n")
    os.replace(tmp, path)


def _parse_trnset_header(path: Path, line: str) -> tuple[int, ClassFilter]:
    head = line.split()
    if len(head) != 5 or head[0] != "TRNSET" or head[1] != "v1":
        raise TrnFormatError(f"{path}, line 1: malformed TRNSET header")
    fields = dict(part.split("=", 1) for part in head[2:] if "=" in part)
    if set(fields) != {"n", "filter", "hash"}:
        raise TrnFormatError(f"{path}, line 1: malformed TRNSET header")
    try:
        n = int(fields["n"], 10)
    except ValueError:
        raise TrnFormatError(f"{path}, line 1: bad order field") from None
    flt = ClassFilter.from_spec(fields["filter"])
    if fields["hash"] != _trnset_hash(n, flt.spec()):
        raise TrnFormatError(
            f"{path}, line 1: stale cache (generator hash mismatch)"
        )
    return n, flt


def iter_trnset(path: Path) -> Iterator[str]:
    """Stream the pair blocks of a TRNSET file, validating as it goes."""
    with open(path) as fh:
        header = fh.readline()
        if not header.endswith("\n"):
            raise TrnFormatError(f"{path}: missing trailing newline")
        n, _ = _parse_trnset_header(path, header.rstrip("\n"))
        want = comb(n, 2)
        for ln, raw in enumerate(fh, start=2):
            if not raw.endswith("\n"):
                raise TrnFormatError(f"{path}, line {ln}: missing trailing newline")
            body = raw[:-1]
            if len(body) != want or any(c not in "01" for c in body):
                raise TrnFormatError(
                    f"{path}, line {ln}: expected {want} pair characters"
                )
            yield body


def read_trnset(path: Path) -> tuple[int, ClassFilter, list[str]]:
    """Parse a whole TRNSET file; raises TrnFormatError on any mismatch."""
    with open(path) as fh:
        header = fh.readline()
    if not header.endswith("\n"):
        raise TrnFormatError(f"{path}: missing trailing newline")
    n, flt = _parse_trnset_header(path, header.rstrip("\n"))
    return n, flt, list(iter_trnset(path))


def cached_bodies(
    n: int, class_filter: ClassFilter, cache_dir: Path | None
) -> Iterator[str]:
    """Enumeration stream as TRN pair blocks, via the cache when enabled."""
    from .core import pack_bits

    if cache_dir is None:
        for t in enumerate_tournaments(n, class_filter):
            yield pack_bits(t)
        return
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / f"n{n}-{class_filter.spec()}.trnset"
    if path.exists():
        # validate the header before yielding anything, so a stale cache is
        # regenerated whole rather than spliced into a fresh stream
        usable = True
        try:
            with open(path) as fh:
                header = fh.readline()
            if not header.endswith("\n"):
                raise TrnFormatError(f"{path}: missing trailing newline")
            _parse_trnset_header(path, header.rstrip("\n"))
        except TrnFormatError:
            usable = False
        if usable:
            yield from iter_trnset(path)
            return
    tmp = path.with_suffix(".trnset.tmp")
    with open(tmp, "w") as fh:
        fh.write(trnset_header(n, class_filter) + "\n")
        for t in enumerate_tournaments(n, class_filter):
            fh.write(pack_bits(t) + "\n")
    os.replace(tmp, path)
    yield from iter_trnset(path)
