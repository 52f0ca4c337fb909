import random

import pytest

from cdcolor.bits import bit_list, mask_of
from cdcolor.coloring import validate_cd_coloring
from cdcolor.errors import CapacityError, PreconditionError
from cdcolor.exact import cd_chromatic_bruteforce
from cdcolor.generate import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    random_girth5_graph,
    star_graph,
)
from cdcolor.graph import Graph, girth, is_connected
from cdcolor.tds import (
    TdsCertificate,
    cd_chromatic_girth5,
    cd_coloring_from_tds,
    is_total_dominating,
    kernel_size_bound,
    tds_bruteforce,
    tds_kernelize,
    tds_solve,
)

from _brute import brute_min_tds


def girth5_corpus(count, n_lo, n_hi, seed, connected=False):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_girth5_graph(
            rng.randint(n_lo, n_hi),
            rng,
            density=rng.choice([0.2, 0.5, 0.9]),
            connected=connected,
            hub=rng.random() < 0.4,
        )
        if connected and not is_connected(g):
            continue
        out.append(g)
    return out


def test_is_total_dominating():
    c4 = cycle_graph(4)
    assert is_total_dominating(c4, mask_of([0, 1]))
    assert not is_total_dominating(c4, 0)
    # a star center alone never dominates itself
    assert not is_total_dominating(star_graph(3), 1)


def test_kernel_c5_unchanged():
    out = tds_kernelize(cycle_graph(5), 3)
    assert out.verdict == "REDUCED"
    assert out.kernel.n == 5 and out.forced == 0


def test_kernel_star_forces_center():
    out = tds_kernelize(star_graph(3), 2)
    assert out.verdict == "REDUCED"
    assert out.forced == 1  # the center, degree 3 > k
    assert out.kernel.n == 2  # two twin leaves dropped


def test_kernel_girth_precondition():
    with pytest.raises(PreconditionError):
        tds_kernelize(complete_graph(3), 2)
    with pytest.raises(PreconditionError):
        tds_solve(cycle_graph(4), 2)


def test_kernel_no_when_many_hubs():
    # two adjacent centers with three leaves each; both have degree 4 > k=1
    g = Graph.from_edges(
        8, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7)]
    )
    out = tds_kernelize(g, 1)
    assert out.verdict == "NO"
    assert tds_solve(g, 1) is None
    assert tds_bruteforce(g, 1) is None


def test_kernel_size_bound_on_corpus():
    for g in girth5_corpus(40, 6, 16, seed=61):
        for k in (1, 2, 3, 4):
            out = tds_kernelize(g, k)
            if out.verdict == "REDUCED":
                assert out.kernel.n <= kernel_size_bound(k)


def test_kernel_preserves_answer():
    for g in girth5_corpus(60, 5, 12, seed=67):
        for k in (1, 2, 3):
            out = tds_kernelize(g, k)
            brute = tds_bruteforce(g, k)
            if out.verdict == "NO":
                assert brute is None
            else:
                solved = tds_solve(g, k)
                assert (solved is not None) == (brute is not None)


def test_reduction_rule_safety():
    # re-adding any deleted vertex never changes solvability at k
    for g in girth5_corpus(30, 6, 12, seed=71):
        for k in (2, 3):
            out = tds_kernelize(g, k)
            if out.verdict != "REDUCED" or out.kernel.n == g.n:
                continue
            kept = mask_of(out.back_map)
            for u in bit_list(g.full_mask & ~kept):
                sub, _ = g.induced(kept | (1 << u))
                a = tds_bruteforce(sub, k)
                b = tds_bruteforce(out.kernel, k)
                assert (a is None) == (b is None)
                if a is not None:
                    assert a.size == b.size


def test_solve_examples():
    c5 = cycle_graph(5)
    assert tds_solve(c5, 3).size == 3
    assert tds_solve(c5, 2) is None
    assert tds_solve(petersen_graph(), 4).size == 4
    assert tds_solve(petersen_graph(), 1) is None


def test_solve_matches_bruteforce():
    for i, g in enumerate(girth5_corpus(80, 5, 18, seed=73)):
        k = 1 + i % 4
        solved = tds_solve(g, k)
        brute = tds_bruteforce(g, k)
        assert (solved is not None) == (brute is not None)
        if solved is not None:
            assert solved.size == brute.size
            assert is_total_dominating(g, solved.mask)


def test_solve_disconnected_sums_components():
    g = disjoint_union(cycle_graph(5), path_graph(4))
    assert tds_solve(g, 5).size == 5  # 3 + 2
    assert tds_solve(g, 4) is None
    # an isolated vertex is hopeless
    assert tds_solve(disjoint_union(path_graph(4), Graph(1, [0])), 6) is None


def test_bruteforce_examples():
    assert tds_bruteforce(path_graph(4), 4).mask == mask_of([1, 2])
    assert tds_bruteforce(path_graph(2), 2).mask == 0b11
    assert tds_bruteforce(cycle_graph(6), 6).size == 4
    with pytest.raises(CapacityError):
        tds_bruteforce(cycle_graph(21), 2)


def test_bruteforce_agrees_with_independent_search():
    rng = random.Random(79)
    for _ in range(25):
        g = random_girth5_graph(rng.randint(4, 10), rng, density=0.6)
        got = tds_bruteforce(g, 4)
        want = brute_min_tds(g, 4)
        assert (got is None) == (want is None)
        if got is not None:
            assert got.size == want.bit_count()


def test_coloring_from_tds_c4():
    c4 = cycle_graph(4)
    col = cd_coloring_from_tds(c4, TdsCertificate(mask_of([0, 1]), 2))
    assert col.classes == ((1, 3), (0, 2))
    assert col.dominators == (0, 1)
    assert validate_cd_coloring(c4, col).ok


def test_coloring_from_tds_k2():
    col = cd_coloring_from_tds(path_graph(2), TdsCertificate(0b11, 2))
    assert col.classes == ((1,), (0,))


def test_coloring_from_tds_c5():
    c5 = cycle_graph(5)
    cert = tds_solve(c5, 3)
    col = cd_coloring_from_tds(c5, cert)
    assert col.q == 3 and validate_cd_coloring(c5, col).ok


def test_coloring_from_tds_rejects_triangles():
    g = complete_graph(3)
    with pytest.raises(PreconditionError) as err:
        cd_coloring_from_tds(g, TdsCertificate(0b111, 3))
    assert "triangle" in str(err.value)


def test_girth5_named():
    assert cd_chromatic_girth5(cycle_graph(5))[0] == 3
    assert cd_chromatic_girth5(petersen_graph())[0] == 4
    assert cd_chromatic_girth5(path_graph(4))[0] == 2
    assert cd_chromatic_girth5(Graph(1, [0]))[0] == 1
    with pytest.raises(PreconditionError):
        cd_chromatic_girth5(cycle_graph(4))


def test_girth5_matches_oracle():
    seen = 0
    for g in girth5_corpus(60, 2, 9, seed=83, connected=True):
        assert girth(g) >= 5 and is_connected(g)
        q, wit = cd_chromatic_girth5(g)
        assert q == cd_chromatic_bruteforce(g)[0]
        report = validate_cd_coloring(g, wit)
        assert report.ok, report.problem
        seen += 1
    assert seen == 60
