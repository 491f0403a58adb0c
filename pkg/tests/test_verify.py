import dataclasses

import pytest

from moonlab.core import (
    ParameterError,
    Tournament,
    build_extremal,
    build_extremal_minus,
    build_transitive,
    compose,
    format_trn,
)
from moonlab.counting import cycle_counts
from moonlab.extremal import enumerate_h_family
from moonlab.iso import ClassFilter, canonical_form, enumerate_tournaments
from moonlab.verify import (
    CHECKS,
    HYPOTHESIS_MIN_N,
    REFUTED,
    VERIFIED,
    VERIFIED_VACUOUS,
    CheckReport,
    Counterexample,
    _CheckDef,
    _lem2_predict,
    check,
    check_all,
    replay_counterexample,
)
from naive_oracle import reach_strong

SMALL_POINTS = [
    ("thmI", {"n": 6}),
    ("thmII", {"n": 6}),
    ("thmIII", {"n": 6}),
    ("thmIV", {"n": 6}),
    ("corI", {"n": 6}),
    ("thmV", {"n": 6}),
    ("lem1", {"n": 6}),
    ("lem2", {"n": 6}),
    ("thm1", {"n": 6}),
    ("prop1", {"n": 6}),
    ("prop2", {"n": 6}),
    ("cor1", {"n": 6}),
    ("thm2", {"n": 7, "ell": 5}),
    ("thm2_ell4", {"n": 7}),
    ("thm3", {"n": 9, "ell": 6}),
    ("thm3_ell5", {"n": 9}),
    ("lem3", {"n": 9}),
    ("lem4", {"n": 9}),
    ("thm4", {"n": 9}),
    ("conj1", {"n": 7, "d": 5, "ell": 4}),
    ("conj2", {"n": 7, "d": 6}),
    ("conj3", {"n": 7, "d": 4, "h": 2}),
    ("h_census", {"n": 7}),
]


@pytest.mark.parametrize("check_id,params", SMALL_POINTS,
                         ids=[c for c, _ in SMALL_POINTS])
def test_each_check_verifies_at_a_small_point(check_id, params):
    rep = check(check_id, **params)
    assert rep.outcome == VERIFIED
    assert rep.check_id == check_id
    assert rep.params == params
    assert rep.counterexample is None


def test_registry_covers_every_hypothesis_floor():
    assert set(CHECKS) == set(HYPOTHESIS_MIN_N)
    assert HYPOTHESIS_MIN_N == {
        "thmI": 1, "thmII": 3, "thmIII": 5, "thmIV": 3, "corI": 4,
        "thmV": 4, "lem1": 4, "lem2": 2, "thm1": 5, "prop1": 3,
        "prop2": 4, "cor1": 4, "thm2": 7, "thm2_ell4": 7, "thm3": 9,
        "thm3_ell5": 9, "lem3": 9, "lem4": 9, "thm4": 9, "conj1": 4,
        "conj2": 4, "conj3": 4, "h_census": 7,
    }


def test_thm2_witnesses_are_the_mirror_pair():
    rep = check("thm2", n=7, ell=5)
    assert rep.extremal_value == 4
    want = sorted(
        (canonical_form(build_extremal(5, 7)).code,
         canonical_form(build_extremal_minus(5, 7)).code),
        key=lambda b: int(b, 2),
    )
    assert list(rep.extremal_witnesses) == want


def test_thm2_ell4_witnesses_match_family():
    rep = check("thm2_ell4", n=8)
    assert rep.extremal_value == 6
    assert len(rep.extremal_witnesses) == 4
    family = {canonical_form(t).code for t in enumerate_h_family(6, 8)}
    assert set(rep.extremal_witnesses) == family


def test_thm4_unique_witness():
    rep = check("thm4", n=9)
    assert rep.extremal_value == 6
    assert rep.extremal_witnesses == (
        canonical_form(build_extremal(6, 9)).code,)


def test_conj2_below_hypothesis_is_vacuous():
    rep = check("conj2", n=7, d=4)
    assert rep.outcome == VERIFIED_VACUOUS


def test_check_all_small():
    reports = check_all(3)
    assert [r.check_id for r in reports] == [
        "thmI", "thmI", "thmI", "thmII", "thmIII", "thmIV", "corI",
        "thmV", "lem1", "lem2", "lem2", "thm1", "prop1", "prop2", "cor1",
        "thm2", "thm2_ell4", "thm3", "thm3_ell5", "lem3", "lem4", "thm4",
        "conj1", "conj2", "conj3", "h_census",
    ]
    by_id = {}
    for r in reports:
        by_id.setdefault(r.check_id, []).append(r)
    assert [r.params["n"] for r in by_id["thmI"]] == [1, 2, 3]
    assert [r.params["n"] for r in by_id["lem2"]] == [2, 3]
    assert [r.params["n"] for r in by_id["prop1"]] == [3]
    # everything whose floor sits above 3 collapses to one vacuous report
    for cid in ["thmIII", "corI", "thmV", "lem1", "thm1", "prop2", "cor1",
                "thm2", "thm2_ell4", "thm3", "thm3_ell5", "lem3", "lem4",
                "thm4", "conj1", "conj2", "conj3", "h_census"]:
        (r,) = by_id[cid]
        assert r.outcome == VERIFIED_VACUOUS
        assert r.params == {"n_max": 3}
    for r in reports:
        assert r.outcome in (VERIFIED, VERIFIED_VACUOUS)


def test_check_all_is_deterministic():
    assert repr(check_all(5)) == repr(check_all(5))


# -- refutation machinery, exercised through an injected check ------------


def _fake_single(t: Tournament, p: dict) -> str | None:
    if not reach_strong(t):
        return f"not strongly connected at order {t.n}"
    return None


def _fake_run(n: int) -> CheckReport:
    scanned = 0
    for t in enumerate_tournaments(n):
        scanned += 1
        clause = _fake_single(t, {"n": n})
        if clause is not None:
            return CheckReport(
                "fake", {"n": n}, scanned, REFUTED,
                counterexample=Counterexample(format_trn(t), clause),
            )
    return CheckReport("fake", {"n": n}, scanned, VERIFIED)


@pytest.fixture
def fake_check(monkeypatch):
    cdef = _CheckDef(_fake_run, lambda cap: [{"n": n} for n in
                                             range(2, cap + 1)],
                     _fake_single, 8, ("n",))
    monkeypatch.setitem(CHECKS, "fake", cdef)
    monkeypatch.setitem(HYPOTHESIS_MIN_N, "fake", 2)


def test_refutation_report_and_replay(fake_check):
    rep = check("fake", n=4)
    assert rep.outcome == REFUTED
    assert rep.counterexample is not None
    assert replay_counterexample(rep)

    tampered = dataclasses.replace(
        rep,
        counterexample=dataclasses.replace(
            rep.counterexample, clause="not strongly connected at order 9"),
    )
    assert not replay_counterexample(tampered)


def test_replay_rejects_bad_reports():
    good = check("thmI", n=4)
    with pytest.raises(ParameterError, match="no counterexample"):
        replay_counterexample(good)
    orphan = CheckReport("no-such-check", {"n": 4}, 0, REFUTED,
                         counterexample=Counterexample("3\n101\n", "x"))
    with pytest.raises(ParameterError, match="unknown check id"):
        replay_counterexample(orphan)


def test_lem2_prediction_holds_and_matches_analysis():
    outer = next(iter(enumerate_tournaments(3, ClassFilter(strong=True))))
    parts = [build_transitive(2), build_transitive(1), build_transitive(3)]
    assert _lem2_predict(outer, parts) is None

    # same rule, spelled out: blocks of size >= 2 go non-critical wholesale,
    # singleton blocks inherit the criticality of their outer vertex
    from moonlab.analysis import analyze

    whole = compose(outer, parts)
    outer_ncr = set(analyze(outer).non_critical)
    want = set()
    base = 0
    for r, part in enumerate(parts):
        if part.n >= 2 or r in outer_ncr:
            want.update(range(base, base + part.n))
        base += part.n
    assert set(analyze(whole).non_critical) == want


def test_lem2_replay_rejects_fabricated_clause():
    outer = next(iter(enumerate_tournaments(3, ClassFilter(strong=True))))
    parts = [build_transitive(2), build_transitive(2), build_transitive(2)]
    fake = CheckReport(
        "lem2", {"n": 6}, 300, REFUTED,
        counterexample=Counterexample(
            format_trn(compose(outer, parts)),
            "non-critical set (0,) differs from the predicted (1,)",
            {"outer": format_trn(outer),
             "parts": [format_trn(p) for p in parts]},
        ),
    )
    assert not replay_counterexample(fake)


def test_parameter_validation():
    with pytest.raises(ParameterError, match="unknown check id"):
        check("thmZZ", n=5)
    with pytest.raises(ParameterError, match="does not take parameters"):
        check("thmI", n=5, d=3)
    with pytest.raises(ParameterError, match="must be an int"):
        check("thmI", n=True)
    with pytest.raises(ParameterError, match="must be an int"):
        check("thmI", n="5")
    with pytest.raises(ParameterError):
        check("thmI", n=11)  # above the guarded ceiling
    with pytest.raises(ParameterError):
        check("thm2", n=7, ell=6)  # ell range is [5, n-2]
    with pytest.raises(ParameterError):
        check("conj3", n=7, d=4, h=3)  # 2h exceeds n-d+1
    with pytest.raises(ParameterError):
        check_all(11)
    with pytest.raises(ParameterError):
        check_all(5, parallelism=0)


def _brute_delta_kinds(t: Tournament) -> int:
    """Singleton-count bitmask over all cyclic three-block splits, written
    without bit tricks: try every assignment of vertices to blocks A, B, C
    with vertex 0 in A, demand A => B => C => A, and demand every block of
    size >= 2 be a diameter-2 subtournament of order >= 3."""
    from moonlab.analysis import analyze
    from moonlab.core import induced_subtournament

    def beats_all(block, other):
        return all(t.has_arc(u, v) for u in block for v in other)

    def block_ok(block):
        if len(block) == 1:
            return True
        if len(block) == 2:
            return False
        rep = analyze(induced_subtournament(t, sorted(block)))
        return rep.strong and rep.diameter == 2

    kinds = 0
    others = list(range(1, t.n))
    for assign in range(3 ** (t.n - 1)):
        blocks = [[0], [], []]
        word = assign
        for v in others:
            blocks[word % 3].append(v)
            word //= 3
        a, b, c = blocks
        if not b or not c:
            continue
        if beats_all(a, b) and beats_all(b, c) and beats_all(c, a):
            if all(block_ok(blk) for blk in blocks):
                kinds |= 1 << sum(len(blk) == 1 for blk in blocks)
    return kinds


def test_delta_kernel_matches_brute_force():
    import numpy as np

    from moonlab._kernels import delta_kinds

    cyclic_triple = Tournament(3, (0b010, 0b100, 0b001))
    assert _brute_delta_kinds(cyclic_triple) == 0b1000  # three singletons
    assert _brute_delta_kinds(build_transitive(3)) == 0

    for n in (3, 6):
        for t in enumerate_tournaments(n):
            masks = np.array(t.out, dtype=np.int64)
            assert int(delta_kinds(t.n, masks)) == _brute_delta_kinds(t)