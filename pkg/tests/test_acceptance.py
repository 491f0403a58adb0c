"""The ten release gates, one test each, run with zero numeric tolerance.

Each test prints a single ACCEPTANCE line so the gate status survives in
plain pytest output.  Budgets are wall-clock seconds on one core; a pass
that blows its budget fails the gate even when every identity holds.
"""
import random
import subprocess
import sys
import time

import numpy as np
import pytest

from moonlab.core import (
    Tournament,
    build_extremal,
    build_extremal_minus,
)
from moonlab.counting import cycle_counts, cycle_counts_through, \
    hamiltonian_path_count, masks_of
from moonlab.extremal import (
    _build_from_h,
    _h_vectors,
    enumerate_h_family,
    formula_c,
    formula_c_through,
    h_family_size_nminus3,
)
from moonlab.iso import (
    ClassFilter,
    _canon_raw,
    canonical_form,
    count_classes,
    enumerate_tournaments,
)
from moonlab.verify import check
from naive_oracle import dfs_cycle_census, random_tournament

pytestmark = pytest.mark.acceptance


@pytest.fixture
def gate(capsys):
    def run(number, name, budget, body):
        t0 = time.perf_counter()
        try:
            body()
        except BaseException:
            dt = time.perf_counter() - t0
            with capsys.disabled():
                print(f"ACCEPTANCE {number:2d} {name}: FAIL ({dt:.1f}s)")
            raise
        dt = time.perf_counter() - t0
        verdict = "PASS" if budget is None or dt < budget else "FAIL"
        with capsys.disabled():
            print(f"ACCEPTANCE {number:2d} {name}: {verdict} ({dt:.1f}s)")
        if verdict == "FAIL":
            pytest.fail(f"runtime {dt:.1f}s exceeded the {budget}s budget")
    return run


def test_01_formula_agreement(gate):
    def body():
        for n in range(4, 13):
            for d in range(3, n):
                census = cycle_counts(build_extremal(d, n)).c
                for ell in range(3, n + 1):
                    want = formula_c(d, n, ell)
                    if want is not None:
                        assert census[ell] == want, (d, n, ell)
    gate(1, "formula-agreement", 5, body)


def test_02_per_vertex_formula(gate):
    def body():
        for n in range(4, 13):
            for d in range((n + 3 + 1) // 2, n):
                t = build_extremal_minus(d, n)
                lead = -(-(n - d + 1) // 2)
                want = formula_c_through(d, n)
                for w in range(lead):
                    through = cycle_counts_through(t, w)
                    for ell in range(n - d + 3, d + 1):
                        assert through[ell] == want, (d, n, w, ell)
    gate(2, "per-vertex-formula", 5, body)


def test_03_lower_bounds_exhaustive(gate):
    def body():
        for n in range(3, 9):
            assert check("thmII", n=n).outcome == "verified"
        for n in range(5, 9):
            rep = check("thmIII", n=n)
            assert rep.outcome == "verified"
    gate(3, "lower-bounds-exhaustive", 30, body)


def test_04_diameter_band_minima(gate):
    def body():
        for n in (7, 8, 9):
            for ell in range(5, n - 1):
                rep = check("thm2", n=n, ell=ell)
                assert rep.outcome == "verified"
                assert rep.extremal_value == n - ell + 2
                # d = n-2 leaves three spare vertices, so the mirrored
                # construction is a genuinely distinct class
                assert len(rep.extremal_witnesses) == 2
            rep = check("thm2_ell4", n=n)
            assert rep.outcome == "verified"
            assert rep.extremal_value == n - 2
            assert len(rep.extremal_witnesses) == n - 4
    gate(4, "diameter-band-minima", 900, body)


def test_05_order_nine_minima(gate):
    def body():
        want = canonical_form(build_extremal(6, 9)).code
        rep = check("thm4", n=9)
        assert rep.outcome == "verified"
        assert rep.extremal_value == 6
        assert rep.extremal_witnesses == (want,)
        rep = check("thm3", n=9, ell=6)
        assert rep.outcome == "verified"
        assert rep.extremal_value == 6
        assert rep.extremal_witnesses == (want,)
    gate(5, "order-nine-minima", 900, body)


def test_06_single_circuit_family_census(gate):
    def body():
        for n in range(7, 13):
            d = n - 3
            members = enumerate_h_family(d, n)
            assert len(members) == h_family_size_nminus3(n)
            assert len(members) == (n * n - 7 * n + 8) // 2
            by_rows = {}
            for h in _h_vectors(d, n):
                by_rows.setdefault(_build_from_h(d, n, h).out, h)
            for t in members:
                census = cycle_counts(t).c
                assert census[n] == 1
                assert census[n - 1] == 4
                h = by_rows[t.out]
                if h[2] <= h[1]:
                    assert census[3] == n - 2
                if h[2] <= h[1] - 1:
                    assert census[4] == n - 1
    gate(6, "single-circuit-family-census", 10, body)


def test_07_oracle_equivalence(gate):
    def body():
        for n in range(1, 6):
            nbits = n * (n - 1) // 2
            for word in range(1 << nbits):
                rows = [0] * n
                k = 0
                for i in range(n):
                    for j in range(i + 1, n):
                        if word >> k & 1:
                            rows[i] |= 1 << j
                        else:
                            rows[j] |= 1 << i
                        k += 1
                masks = np.array(rows, dtype=np.int64)
                t = Tournament(n, tuple(rows))
                want = dfs_cycle_census(n, masks)
                assert cycle_counts(t).c == {
                    ell: int(want[ell]) for ell in range(3, n + 1)}, (n, word)
        for n in (8, 10, 12):
            rng = random.Random(f"acceptance oracle {n}")
            for _ in range(10_000):
                t = random_tournament(rng, n)
                want = dfs_cycle_census(n, masks_of(t))
                assert cycle_counts(t).c == {
                    ell: int(want[ell]) for ell in range(3, n + 1)}
    gate(7, "oracle-equivalence", 120, body)


def test_08_structural_invariants(gate):
    def body():
        for n in range(1, 8):
            assert check("thmI", n=n).outcome == "verified"
        rng = random.Random("acceptance parity")
        for _ in range(10_000):
            t = random_tournament(rng, rng.randint(1, 12))
            assert hamiltonian_path_count(t) % 2 == 1
        for n in range(3, 9):
            assert check("thmIV", n=n).outcome == "verified"
        spans = {"corI": range(4, 10), "thmV": range(4, 10),
                 "prop1": range(3, 10), "prop2": range(4, 10),
                 "cor1": range(4, 10), "lem1": range(4, 10),
                 "lem2": range(2, 10), "lem3": range(9, 10),
                 "lem4": range(9, 10)}
        for check_id, span in spans.items():
            for n in span:
                assert check(check_id, n=n).outcome == "verified", \
                    (check_id, n)
    gate(8, "structural-invariants", 1200, body)


def test_09_enumeration_correctness(gate):
    def body():
        want_counts = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56}
        for n, want in want_counts.items():
            nbits = n * (n - 1) // 2
            seen = set()
            for word in range(1 << nbits):
                rows = [0] * n
                k = 0
                for i in range(n):
                    for j in range(i + 1, n):
                        if word >> k & 1:
                            rows[i] |= 1 << j
                        else:
                            rows[j] |= 1 << i
                        k += 1
                seen.add(int(_canon_raw(n, tuple(rows))[0]))
            assert len(seen) == want
            assert count_classes(n) == want
        strong4 = list(enumerate_tournaments(4, ClassFilter(strong=True)))
        assert len(strong4) == 1
    gate(9, "enumeration-correctness", 60, body)


def test_10_parallel_determinism(gate):
    def body():
        runs = []
        for workers in ("1", "8"):
            proc = subprocess.run(
                [sys.executable, "-m", "moonlab", "verify", "--all",
                 "--n-max", "8", "--parallelism", workers],
                capture_output=True, timeout=600,
            )
            assert proc.returncode == 0, proc.stderr.decode()
            runs.append(proc.stdout)
        assert runs[0] == runs[1]
        assert runs[0].count(b"\n") == 191
    gate(10, "parallel-determinism", None, body)
