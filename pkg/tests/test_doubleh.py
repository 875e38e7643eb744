"""Bigraded moment-angle homology table and its double homology."""

import random

import pytest

from uberdh.doubleh import (DoubleHomologyTable, diagonal_euler,
                            double_differential, double_homology,
                            hochster_table)
from uberdh.errors import TorsionObstruction
from uberdh.exactla import F2, GroupClass, Q, Z
from uberdh.randgen import permute_complex, random_complex
from uberdh.scomplex import boundary_simplex, cycle, from_facets, simplex

RP2 = from_facets(6, [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
                      (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5)])


def ranks(table):
    return {key: cls.rank for key, cls in table.entries.items()}


def test_hochster_table_counts_for_pentagon():
    # 5-cycle: one empty-set class, five reduced circles' worth of path classes
    t = hochster_table(cycle(5), Z)
    assert ranks(t) == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
    assert t.total_rank() == 12
    assert all(not cls.torsion for cls in t.entries.values())


def test_double_homology_of_cycles():
    # n-cycle (n >= 5): four corner classes, each of rank 1
    for n in (5, 6, 7):
        dh = double_homology(cycle(n), Z)
        assert ranks(dh) == {(0, 0): 1, (1, 2): 1, (n - 3, n - 2): 1, (n - 2, n): 1}
        assert all(not cls.torsion for cls in dh.entries.values())
    # the square's two middle classes land in the same bidegree
    assert ranks(double_homology(cycle(4), Z)) == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


def test_double_homology_of_boundary_spheres():
    for m in (3, 4, 5):
        dh = double_homology(boundary_simplex(m), Z)
        assert ranks(dh) == {(0, 0): 1, (1, m): 1}


def test_double_homology_of_simplex_is_one_class():
    for m in (1, 2, 3, 4):
        dh = double_homology(simplex(m), Z)
        assert ranks(dh) == {(0, 0): 1}
        assert dh.total_rank() == 1


def test_display_reindexing():
    dh = double_homology(cycle(5), Z)
    recs = dh.to_records()
    assert {tuple(r["display"]) for r in recs} == {(0, 0), (-1, 4), (-2, 6), (-3, 10)}
    for r in recs:
        assert r["display"] == [-r["k"], 2 * r["l"]]


def test_double_differential_squares_to_zero():
    rng = random.Random(61)
    for _ in range(5):
        K = random_complex(rng, rng.randint(3, 6))
        for p in range(-1, K.dim + 1):
            for l in range(K.m - 1):
                a = double_differential(K, l - p - 1, l, Q)
                b = double_differential(K, l - p, l + 1, Q)
                assert b.mul(a).is_zero()


def test_double_homology_invariant_under_vertex_permutation():
    rng = random.Random(67)
    for _ in range(5):
        K = random_complex(rng, 5)
        perm = list(range(5))
        rng.shuffle(perm)
        K2 = permute_complex(K, perm)
        assert ranks(double_homology(K, Q)) == ranks(double_homology(K2, Q))


def test_double_homology_field_choices_agree_for_torsion_free_input():
    K = cycle(6)
    assert ranks(double_homology(K, Q)) == ranks(double_homology(K, F2))
    assert ranks(double_homology(K, Q)) == ranks(double_homology(K, Z))


def test_integer_mode_refuses_torsion_tables():
    with pytest.raises(TorsionObstruction):
        double_homology(RP2, Z)
    # field coefficients still work
    assert double_homology(RP2, Q).group(0, 0).rank == 1


def test_diagonal_euler_values():
    assert diagonal_euler(cycle(6), Q) == -2  # diagonal classes at k = 1 and 3
    assert diagonal_euler(cycle(5), Q) == 0   # classes at k = 1 and 2 cancel
    assert diagonal_euler(boundary_simplex(4), Q) == 0
    assert diagonal_euler(simplex(3), Q) == 0


def test_diagonal_euler_accepts_precomputed_table():
    dh = double_homology(cycle(5), Q)
    assert diagonal_euler(cycle(5), Q, dh) == 0
    with pytest.raises(AssertionError):
        diagonal_euler(cycle(5), Q, hochster_table(cycle(5), Q))
