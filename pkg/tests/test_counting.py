import pytest

from moonlab.core import (
    ParameterError,
    ResourceGuardError,
    Tournament,
    build_path_extremal,
    build_transitive,
)
from moonlab.counting import (
    cycle_counts,
    cycle_counts_through,
    hamiltonian_path_count,
    is_vertex_pancyclic,
    masks_of,
    strong_sub_counts,
)
from naive_oracle import (
    dfs_cycle_census,
    naive_strong_sub_counts,
    perm_ham_paths,
    random_tournament,
    triangle_count_by_degrees,
)


def test_census_matches_dfs_oracle(rng):
    for _ in range(150):
        n = rng.randint(1, 10)
        t = random_tournament(rng, n)
        fast = cycle_counts(t).c
        slow = dfs_cycle_census(n, masks_of(t))
        assert all(fast[ell] == slow[ell] for ell in range(3, n + 1))


def test_triangle_degree_identity(rng):
    for _ in range(100):
        t = random_tournament(rng, rng.randint(3, 12))
        assert cycle_counts(t).c[3] == triangle_count_by_degrees(t)


def test_acyclic_census_is_zero():
    c = cycle_counts(build_transitive(8)).c
    assert all(v == 0 for v in c.values())


def test_path_extremal_census():
    # one circuit of each length from the spine family
    c = cycle_counts(build_path_extremal(6)).c
    assert c == {3: 4, 4: 3, 5: 2, 6: 1}


def test_through_counts_sum_rule(rng):
    # every length-ell circuit is seen from exactly ell vertices
    for _ in range(40):
        n = rng.randint(3, 9)
        t = random_tournament(rng, n)
        c = cycle_counts(t).c
        through = [cycle_counts_through(t, w) for w in range(n)]
        for ell in range(3, n + 1):
            assert sum(th[ell] for th in through) == ell * c[ell]


def test_through_counts_by_deletion(rng):
    from moonlab.core import induced_subtournament

    for _ in range(30):
        n = rng.randint(4, 9)
        t = random_tournament(rng, n)
        w = rng.randrange(n)
        rest = induced_subtournament(t, [v for v in range(n) if v != w])
        whole = cycle_counts(t).c
        sub = cycle_counts(rest).c
        through = cycle_counts_through(t, w)
        for ell in range(3, n):
            assert through[ell] == whole[ell] - sub[ell]
        assert through[n] == whole[n]


def test_strong_sub_counts_match_naive(rng):
    for _ in range(25):
        n = rng.randint(3, 7)
        t = random_tournament(rng, n)
        assert strong_sub_counts(t) == naive_strong_sub_counts(t)


def test_strong_sub_counts_edges():
    s = strong_sub_counts(build_path_extremal(6))
    assert s == {3: 4, 4: 3, 5: 2, 6: 1}
    assert strong_sub_counts(build_transitive(5)) == {3: 0, 4: 0, 5: 0}


def test_ham_paths_match_permutation_scan(rng):
    for _ in range(25):
        n = rng.randint(1, 6)
        t = random_tournament(rng, n)
        assert hamiltonian_path_count(t) == perm_ham_paths(t)


def test_ham_path_parity(rng):
    for _ in range(200):
        t = random_tournament(rng, rng.randint(1, 12))
        assert hamiltonian_path_count(t) % 2 == 1


def test_transitive_has_one_ham_path():
    assert hamiltonian_path_count(build_transitive(9)) == 1


def test_vertex_pancyclic():
    assert is_vertex_pancyclic(build_path_extremal(7))
    with pytest.raises(ParameterError):
        is_vertex_pancyclic(build_transitive(7))
    with pytest.raises(ParameterError):
        is_vertex_pancyclic(build_transitive(2))


def test_order_guards():
    big = build_transitive(21)
    with pytest.raises(ResourceGuardError):
        cycle_counts(big)
    with pytest.raises(ResourceGuardError):
        hamiltonian_path_count(big)
    with pytest.raises(ResourceGuardError):
        strong_sub_counts(build_transitive(33))
