"""Anti-star cover spectral sequence pages and the chain-level total complex."""

import random

import pytest

from uberdh.doubleh import double_homology
from uberdh.errors import IsSimplex, TorsionObstruction
from uberdh.exactla import F2, Q, Z
from uberdh.homology import homology
from uberdh.mvss import (REDUCED, UNREDUCED, e1_page, e2_page, euler_row0,
                         total_acyclicity_check)
from uberdh.randgen import random_complex
from uberdh.scomplex import boundary_simplex, cycle, from_facets, simplex
from uberdh.uber import uber_B

RP2 = from_facets(6, [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
                      (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5)])


def ranks(page):
    return {key: cls.rank for key, cls in page.entries.items()}


def test_first_page_augmentation_column_is_homology_of_the_complex():
    K = cycle(5)
    for variant, reduced in ((UNREDUCED, False), (REDUCED, True)):
        page = e1_page(K, variant, Q, with_diffs=False)
        hom = homology(K, reduced, Q)
        col = {q: cls.rank for (p, q), cls in page.entries.items() if p == -1}
        assert col == {q: cls.rank for q, cls in hom.items()}


def test_reduced_first_page_has_empty_set_class():
    K = cycle(4)
    page = e1_page(K, REDUCED, Q, with_diffs=False)
    assert page.group(K.m - 1, -1).rank == 1
    unred = e1_page(K, UNREDUCED, Q, with_diffs=False)
    assert all(q >= 0 for (_, q) in unred.entries)


def test_first_page_differentials_compose_to_zero():
    rng = random.Random(71)
    for _ in range(5):
        K = random_complex(rng, rng.randint(3, 5))
        for variant in (UNREDUCED, REDUCED):
            page = e1_page(K, variant, Q, with_diffs=True)
            assert page.diffs is not None  # d.d = 0 is asserted internally


def test_row_euler_characteristic_preserved_from_page_one_to_two():
    rng = random.Random(73)
    for _ in range(5):
        K = random_complex(rng, rng.randint(3, 5))
        for variant in (UNREDUCED, REDUCED):
            p1 = e1_page(K, variant, Q, with_diffs=False)
            p2 = e2_page(K, variant, Q)
            rows = {q for _, q in p1.entries} | {q for _, q in p2.entries}
            for q in rows:
                chi1 = sum((-1) ** p * cls.rank
                           for (p, qq), cls in p1.entries.items() if qq == q)
                chi2 = sum((-1) ** p * cls.rank
                           for (p, qq), cls in p2.entries.items() if qq == q)
                assert chi1 == chi2


def test_reduced_second_page_is_double_homology_reindexed():
    rng = random.Random(79)
    cases = [cycle(5), boundary_simplex(4)]
    cases += [random_complex(rng, rng.randint(3, 5)) for _ in range(4)]
    for K in cases:
        m = K.m
        page = e2_page(K, REDUCED, Q)
        dh = double_homology(K, Q)
        reindexed = {(m - l - 1, l - k - 1): cls
                     for (k, l), cls in dh.entries.items()}
        assert page.entries == reindexed


def test_unreduced_second_page_is_degree_zero_cube_homology_reindexed():
    rng = random.Random(83)
    cases = [cycle(5)] + [random_complex(rng, rng.randint(3, 5)) for _ in range(4)]
    for K in cases:
        m = K.m
        page = e2_page(K, UNREDUCED, Q)
        bb = uber_B(K, Q)
        reindexed = {(m - j - 1, i): cls for (j, i), cls in bb.items()}
        assert page.entries == reindexed


def test_second_page_comparison_over_f2_and_z():
    K = cycle(5)
    for coeffs in (F2, Z):
        m = K.m
        page = e2_page(K, REDUCED, coeffs)
        dh = double_homology(K, coeffs)
        assert page.entries == {(m - l - 1, l - k - 1): cls
                                for (k, l), cls in dh.entries.items()}


def test_row_zero_euler_offset_between_variants():
    rng = random.Random(89)
    cases = [cycle(4), cycle(5), boundary_simplex(3), simplex(3)]
    cases += [random_complex(rng, rng.randint(3, 6)) for _ in range(6)]
    for K in cases:
        diff = euler_row0(K, UNREDUCED, Q) - euler_row0(K, REDUCED, Q)
        assert diff == (-1) ** K.m


def test_integer_mode_refuses_torsion_first_page():
    with pytest.raises(TorsionObstruction):
        e1_page(RP2, REDUCED, Z, with_diffs=True)
    # entries alone (no differentials) are fine: ranks plus torsion are stored
    page = e1_page(RP2, REDUCED, Z, with_diffs=False)
    assert any(cls.torsion for cls in page.entries.values())


def test_total_complex_acyclicity():
    for K in (cycle(4), cycle(5), boundary_simplex(3), boundary_simplex(4), RP2):
        assert total_acyclicity_check(K)
    rng = random.Random(97)
    for _ in range(4):
        assert total_acyclicity_check(random_complex(rng, rng.randint(3, 5)))


def test_total_complex_rejects_simplices():
    with pytest.raises(IsSimplex):
        total_acyclicity_check(simplex(3))
