import random

import pytest

from cdcolor.bits import mask_of
from cdcolor.coloring import CdColoring, validate_cd_coloring
from cdcolor.errors import CapacityError
from cdcolor.exact import (
    CoefficientTable,
    build_color_class_family,
    cd_chromatic_bruteforce,
    cd_chromatic_exact,
    star_power,
    star_product,
)
from cdcolor.generate import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    random_family_masks,
    random_graph,
    star_graph,
)
from cdcolor.graph import Graph

from _brute import (
    brute_disjoint_union_masks,
    brute_family_masks,
    brute_partition_into_family,
)


def table_from_masks(n, masks):
    bits = 0
    for m in masks:
        bits |= 1 << m
    return CoefficientTable(n, bits)


def test_family_path3():
    # P3 = a-b-c: singletons plus the dominated pair {a, c}
    g = path_graph(3)
    fam = build_color_class_family(g)
    assert set(fam.members()) == {0b001, 0b010, 0b100, 0b101}


def test_family_k1_self_dominated():
    fam = build_color_class_family(Graph(1, [0]))
    assert fam.members() == [0b1]


def test_family_triangle_singletons_only():
    fam = build_color_class_family(complete_graph(3))
    assert set(fam.members()) == {0b001, 0b010, 0b100}


def test_family_matches_bruteforce():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng.randint(1, 8), rng.choice([0.2, 0.5, 0.8]), rng)
        fam = build_color_class_family(g)
        assert set(fam.members()) == brute_family_masks(g)


def test_family_capacity():
    with pytest.raises(CapacityError):
        build_color_class_family(Graph(5, [0] * 5), cap=4)


def test_star_product_singletons():
    p = table_from_masks(3, [0b001])
    r = table_from_masks(3, [0b010])
    assert star_product(p, r).members() == [0b011]


def test_star_product_annihilates_overlap():
    p = table_from_masks(3, [0b001])
    assert star_product(p, p).members() == []


def test_star_product_path3_families():
    # {a},{c} times {b} on a 3-universe: the two disjoint unions
    p = table_from_masks(3, [0b001, 0b100])
    r = table_from_masks(3, [0b010])
    assert set(star_product(p, r).members()) == {0b011, 0b110}


def test_star_product_rejects_mismatched_universe():
    with pytest.raises(ValueError):
        star_product(table_from_masks(2, [1]), table_from_masks(3, [1]))


def test_star_product_matches_bruteforce():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(2, 10)
        fam1 = random_family_masks(n, rng.randint(1, 24), rng)
        fam2 = random_family_masks(n, rng.randint(1, 24), rng)
        got = star_product(table_from_masks(n, fam1), table_from_masks(n, fam2))
        assert set(got.members()) == brute_disjoint_union_masks(fam1, fam2)


def test_star_power_base_case():
    p = table_from_masks(4, [0b0011, 0b0100])
    assert star_power(p, 1) == p


def test_star_power_three_singletons():
    p = table_from_masks(3, [0b001, 0b010, 0b100])
    assert star_power(p, 3).members() == [0b111]


def test_star_power_pigeonhole_empty():
    p = table_from_masks(3, [0b001, 0b010, 0b100, 0b011])
    assert star_power(p, 4).members() == []


def test_power_bit_iff_partition_exists():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(2, 8)
        fam = random_family_masks(n, rng.randint(1, 12), rng)
        table = table_from_masks(n, fam)
        for ell in (1, 2, 3, 4):
            power = star_power(table, ell)
            for w in range(1 << n):
                assert power.contains(w) == brute_partition_into_family(
                    w, fam, ell
                ), (n, fam, ell, w)


KNOWN_VALUES = [
    (cycle_graph(4), 2),
    (cycle_graph(5), 3),
    (cycle_graph(6), 4),
    (petersen_graph(), 4),
    (complete_graph(1), 1),
    (complete_graph(2), 2),
    (complete_graph(3), 3),
    (complete_graph(4), 4),
    (complete_graph(5), 5),
    (complete_graph(6), 6),
    (path_graph(2), 2),
    (path_graph(3), 2),
    (path_graph(4), 2),
    (path_graph(5), 3),
    (path_graph(6), 4),
    (cycle_graph(3), 3),
    (cycle_graph(7), 4),
    (cycle_graph(8), 4),
    (star_graph(3), 2),
]


@pytest.mark.parametrize("g,expected", KNOWN_VALUES)
def test_named_values(g, expected):
    q_brute, wit_brute = cd_chromatic_bruteforce(g, cap=10)
    q_exact, wit_exact = cd_chromatic_exact(g)
    assert q_brute == expected
    assert q_exact == expected
    assert validate_cd_coloring(g, wit_brute).ok
    assert validate_cd_coloring(g, wit_exact).ok


def test_bruteforce_examples():
    assert cd_chromatic_bruteforce(complete_graph(3))[0] == 3
    assert cd_chromatic_bruteforce(path_graph(4))[0] == 2
    assert cd_chromatic_bruteforce(cycle_graph(6))[0] == 4


def test_exact_matches_bruteforce_random():
    rng = random.Random(37)
    for _ in range(120):
        g = random_graph(rng.randint(1, 8), rng.choice([0.2, 0.5, 0.8]), rng)
        q_exact, wit = cd_chromatic_exact(g)
        q_brute, _ = cd_chromatic_bruteforce(g)
        assert q_exact == q_brute
        report = validate_cd_coloring(g, wit)
        assert report.ok, report.problem


def test_additivity_over_components():
    rng = random.Random(41)
    for _ in range(30):
        g1 = random_graph(rng.randint(1, 4), 0.5, rng)
        g2 = random_graph(rng.randint(1, 4), 0.5, rng)
        both = disjoint_union(g1, g2)
        assert (
            cd_chromatic_exact(both)[0]
            == cd_chromatic_exact(g1)[0] + cd_chromatic_exact(g2)[0]
        )


def test_witness_dominators_form_dominating_set():
    rng = random.Random(43)
    for _ in range(40):
        g = random_graph(rng.randint(1, 8), rng.choice([0.3, 0.6]), rng)
        q, wit = cd_chromatic_exact(g)
        assert len(wit.dominators) == q
        dom = mask_of(wit.dominators)
        assert all(g.closed(v) & dom for v in range(g.n))


def test_exact_deterministic_witness():
    g = random_graph(7, 0.5, random.Random(47))
    assert cd_chromatic_exact(g) == cd_chromatic_exact(g)


def test_validate_rejects_bad_colorings():
    k3 = complete_graph(3)
    improper = CdColoring(((0, 1), (2,)), (2, 0))
    report = validate_cd_coloring(k3, improper)
    assert not report.ok and "edge" in report.problem

    c6 = cycle_graph(6)
    undominated = CdColoring(((0, 2, 4), (1, 3, 5)), (1, 0))
    report = validate_cd_coloring(c6, undominated)
    assert not report.ok and "dominated" in report.problem

    p3 = path_graph(3)
    ok = validate_cd_coloring(p3, CdColoring(((0, 2), (1,)), (1, 0)))
    assert ok.ok

    missing = validate_cd_coloring(p3, CdColoring(((0, 2),), (1,)))
    assert not missing.ok and "uncolored" in missing.problem

    doubled = validate_cd_coloring(
        p3, CdColoring(((0, 2), (1, 0)), (1, 0))
    )
    assert not doubled.ok and "twice" in doubled.problem


def test_validate_c4_example():
    c4 = cycle_graph(4)
    assert validate_cd_coloring(c4, CdColoring(((0, 2), (1, 3)), (1, 0))).ok
