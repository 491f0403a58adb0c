import pytest

from moonlab.core import (
    MAX_ORDER,
    ParameterError,
    Tournament,
    TrnFormatError,
    build_extremal,
    build_extremal_minus,
    build_hatted,
    build_path_extremal,
    build_transitive,
    compose,
    converse,
    flip_arc,
    format_trn,
    induced_subtournament,
    iter_bits,
    pack_bits,
    parse_trn,
    relabel,
    tournament_from_bits,
)
from naive_oracle import random_tournament


def test_iter_bits():
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b101001)) == [0, 3, 5]


class TestTournamentValue:
    def test_rejects_self_loop(self):
        with pytest.raises(ParameterError):
            Tournament(2, (0b01, 0b01))

    def test_rejects_symmetric_pair(self):
        # both claim the arc
        with pytest.raises(ParameterError):
            Tournament(2, (0b10, 0b01))

    def test_rejects_missing_arc(self):
        with pytest.raises(ParameterError):
            Tournament(2, (0, 0))

    def test_rejects_out_of_range_bit(self):
        with pytest.raises(ParameterError):
            Tournament(2, (0b110, 0))

    def test_rejects_bad_order(self):
        with pytest.raises(ParameterError):
            Tournament(0, ())
        with pytest.raises(ParameterError):
            Tournament(MAX_ORDER + 1, tuple([0] * (MAX_ORDER + 1)))

    def test_immutable(self):
        t = build_transitive(3)
        with pytest.raises(AttributeError):
            t.n = 4

    def test_vertex_check(self):
        t = build_transitive(3)
        with pytest.raises(ParameterError):
            t.has_arc(0, 3)


def test_transitive_structure():
    t = build_transitive(5)
    assert t.out_degrees() == (4, 3, 2, 1, 0)
    assert all(t.has_arc(i, j) for i in range(5) for j in range(i + 1, 5))
    assert t.label_of(2) == "z2"


def test_path_extremal_structure():
    # spine forward, every skip-pair backward
    for n in range(3, 10):
        t = build_path_extremal(n)
        for i in range(n - 1):
            assert t.has_arc(i, i + 1)
        for j in range(n):
            for i in range(j - 1):
                assert t.has_arc(j, i)
        degrees = (1,) + tuple(range(1, n - 2)) + (n - 2, n - 2)
        assert tuple(sorted(t.out_degrees())) == tuple(sorted(degrees))


def test_path_extremal_degree_order():
    t = build_path_extremal(7)
    assert t.out_degrees() == (1, 1, 2, 3, 4, 5, 5)


def test_compose_block_arcs():
    outer = Tournament(2, (0b10, 0b00))  # 0 -> 1
    a = build_transitive(2)
    b = build_transitive(3)
    c = compose(outer, [a, b])
    assert c.n == 5
    # block of a occupies 0..1, block of b occupies 2..4, all arcs forward
    for i in range(2):
        for j in range(2, 5):
            assert c.has_arc(i, j)
    assert c.has_arc(0, 1) and c.has_arc(2, 3)


def test_compose_requires_matching_parts():
    with pytest.raises(ParameterError):
        compose(build_transitive(3), [build_transitive(1)] * 2)


def test_extremal_pair_relationship(rng):
    from moonlab.iso import are_isomorphic

    for d, n in [(3, 4), (4, 6), (5, 8), (6, 9), (7, 9), (5, 7)]:
        t = build_extremal(d, n)
        m = build_extremal_minus(d, n)
        assert t.n == m.n == n
        assert are_isomorphic(converse(t), m)
        spare = n - d + 1
        assert are_isomorphic(t, m) == (spare % 2 == 0)


def test_extremal_rejects_bad_params():
    with pytest.raises(ParameterError):
        build_extremal(2, 5)
    with pytest.raises(ParameterError):
        build_extremal(5, 5)


def test_hatted_kinds():
    from moonlab.analysis import analyze

    for kind, drop in [("right", 2), ("left", 2), ("both", 3)]:
        t = build_hatted(kind, 9)
        rep = analyze(t)
        assert rep.strong
        assert rep.diameter == 9 - 1 - (drop - 1)
    with pytest.raises(ParameterError):
        build_hatted("up", 9)


def test_converse_involution(rng):
    for _ in range(20):
        t = random_tournament(rng, 7)
        assert converse(converse(t)).out == t.out
        back = converse(t)
        assert all(back.has_arc(j, i) == t.has_arc(i, j)
                   for i in range(7) for j in range(7) if i != j)


def test_induced_renumbers_ascending():
    t = build_path_extremal(6)
    s = induced_subtournament(t, [4, 1, 3])
    assert s.n == 3
    # original 1 -> 3 skip pair is backward, 3 -> 4 consecutive forward
    assert s.has_arc(1, 0)  # 3 beats 1
    assert s.has_arc(1, 2)  # 3 beats 4
    with pytest.raises(ParameterError):
        induced_subtournament(t, [])
    with pytest.raises(ParameterError):
        induced_subtournament(t, [0, 6])


def test_flip_arc_round_trip(rng):
    t = random_tournament(rng, 6)
    f = flip_arc(t, 2, 5)
    assert f.has_arc(2, 5) != t.has_arc(2, 5)
    assert flip_arc(f, 2, 5).out == t.out
    with pytest.raises(ParameterError):
        flip_arc(t, 1, 1)


def test_relabel_semantics():
    t = build_transitive(3)  # 0 -> 1 -> 2
    r = relabel(t, (2, 0, 1))  # old 0 becomes new 2
    assert r.has_arc(2, 0) and r.has_arc(0, 1) and r.has_arc(2, 1)
    assert r.label_of(2) == "z0"
    with pytest.raises(ParameterError):
        relabel(t, (0, 0, 1))


def test_trn_round_trip(rng):
    for n in [1, 2, 5, 9, 13]:
        t = random_tournament(rng, n)
        text = format_trn(t)
        back = parse_trn(text)
        assert back.out == t.out
        assert format_trn(back) == text


def test_trn_bodies():
    assert format_trn(build_transitive(3)) == "3\n111\n"
    assert format_trn(build_transitive(1)) == "1\n\n"
    t = tournament_from_bits(3, "001")
    assert t.has_arc(1, 0) and t.has_arc(2, 0) and t.has_arc(1, 2)


@pytest.mark.parametrize("text,fragment", [
    ("3\n111", "newline"),
    ("\n111\n", "line 1"),
    ("x\n111\n", "line 1"),
    ("3\n11\n", "line 2"),
    ("3\n1111\n", "line 2"),
    ("3\n1x1\n", "char 2"),
    ("3\n111\n\n", "line"),
    ("-1\n\n", "order"),
])
def test_trn_diagnostics(text, fragment):
    with pytest.raises(TrnFormatError) as err:
        parse_trn(text)
    assert fragment in str(err.value)


def test_pack_bits_order():
    # pair order is row-major: (0,1),(0,2),(1,2)
    t = Tournament(3, (0b010, 0b100, 0b001))  # the cyclic triple 0->1->2->0
    assert pack_bits(t) == "101"
