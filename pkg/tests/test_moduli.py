"""Moduli chart, pentagon equivalence and regularity classification."""

import math
import random

import pytest

from pentalab.construction import polygon_step
from pentalab.moduli import (
    ALL_RELABELINGS,
    DIHEDRAL_RELABELINGS,
    OTHER,
    REGULAR,
    STAR_ORDER,
    STAR_RELABELINGS,
    STAR_REGULAR,
    chordal_gap,
    classify,
    equivalent,
    moduli_coords,
    pentagon_from_moduli,
    reference_pentagons,
    relabel,
    residual_to_regular,
)
from pentalab.projective import (
    DegenerateConfiguration,
    HPoint,
    ProjMap,
    map_proportional,
    same_point,
    standard_basis,
    transfer_map,
)
from pentalab.scalars import EXACT, FLOAT, PHI, PSI, ProjParam, parse_exact, rational
from pentalab.verify import sample_pentagon


def exact_pentagon(x, y):
    return pentagon_from_moduli(EXACT, EXACT.scalar(x), EXACT.scalar(y))


def random_exact_map(rng):
    while True:
        rows = [[EXACT.scalar(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
        m = ProjMap(rows)
        if not m.det().is_zero:
            return m


def test_relabeling_families():
    assert len(DIHEDRAL_RELABELINGS) == 10
    assert len(STAR_RELABELINGS) == 10
    assert len(set(ALL_RELABELINGS)) == 20
    assert STAR_ORDER in STAR_RELABELINGS
    identity = (0, 1, 2, 3, 4)
    assert identity in DIHEDRAL_RELABELINGS
    # the family is a group: closed under composition
    for s in ALL_RELABELINGS:
        for t in ALL_RELABELINGS[:5]:
            composed = tuple(s[t[k]] for k in range(5))
            assert composed in ALL_RELABELINGS


def test_relabel_action():
    pentagon = exact_pentagon(3, 2)
    shifted = relabel(pentagon, (1, 2, 3, 4, 0))
    assert shifted[0] is pentagon[1]
    assert shifted[4] is pentagon[0]


def test_moduli_of_chart_section():
    coords = moduli_coords(EXACT, exact_pentagon(3, 2))
    assert coords.chart_ok
    assert coords.x == 3
    assert coords.y == 2


def test_moduli_round_trip():
    rng = random.Random(3)
    for _ in range(10):
        x = rational(rng.randint(-20, 20), rng.randint(1, 9))
        y = rational(rng.randint(-20, 20), rng.randint(1, 9))
        coords = moduli_coords(EXACT, exact_pentagon(x, y))
        if not coords.chart_ok:
            continue
        assert coords.x == x and coords.y == y


def test_moduli_chart_breakdown():
    e1, e2, e3, u = standard_basis(EXACT)
    fifth = HPoint(EXACT.one, EXACT.one, EXACT.zero)
    coords = moduli_coords(EXACT, (e1, e2, e3, u, fifth))
    assert not coords.chart_ok
    assert coords.x is None and coords.y is None
    with pytest.raises(DegenerateConfiguration):
        moduli_coords(EXACT, (e1, e2, HPoint(EXACT.one, EXACT.one, EXACT.zero), u, e3))


def test_moduli_projective_invariance():
    rng = random.Random(21)
    pentagon = sample_pentagon(rng, 8)
    coords = moduli_coords(EXACT, pentagon)
    for _ in range(5):
        m = random_exact_map(rng)
        mapped = tuple(m(v) for v in pentagon)
        image_coords = moduli_coords(EXACT, mapped)
        assert image_coords.chart_ok == coords.chart_ok
        if coords.chart_ok:
            assert image_coords.x == coords.x
            assert image_coords.y == coords.y


def test_circle_pentagon_moduli():
    regular, _ = reference_pentagons(FLOAT)
    coords = moduli_coords(FLOAT, regular)
    assert coords.chart_ok
    assert abs(coords.x - (float(PHI) + 1.0)) < 1e-12
    assert abs(coords.y - float(PHI)) < 1e-12


def test_exact_reference_moduli():
    regular, star = reference_pentagons(EXACT)
    rc = moduli_coords(EXACT, regular)
    assert rc.x == parse_exact("3/2+1/2*s5")
    assert rc.y == parse_exact("1/2+1/2*s5")
    sc = moduli_coords(EXACT, star)
    assert sc.x == parse_exact("3/2-1/2*s5")
    assert sc.y == parse_exact("1/2-1/2*s5")
    assert rc.x == PHI + 1 and rc.y == PHI
    assert sc.x == 2 - PHI and sc.y == PSI


def test_exact_references_have_order_five_symmetry():
    for pentagon in reference_pentagons(EXACT):
        shift = transfer_map(EXACT, pentagon[:4], pentagon[1:5])
        assert same_point(EXACT, shift(pentagon[4]), pentagon[0])
        ident = ProjMap(([1, 0, 0], [0, 1, 0], [0, 0, 1]))
        fifth = shift.power(5)
        assert map_proportional(EXACT, fifth, ident)
        assert not map_proportional(EXACT, shift, ident)


def test_equivalent_basic():
    rng = random.Random(33)
    p = sample_pentagon(rng, 8)
    q = sample_pentagon(rng, 8)
    assert equivalent(EXACT, p, p)
    m = random_exact_map(rng)
    assert equivalent(EXACT, p, tuple(m(v) for v in p))
    regular, star = reference_pentagons(EXACT)
    assert not equivalent(EXACT, regular, star)
    # symmetry on a nontrivial pair
    assert equivalent(EXACT, q, tuple(m(v) for v in q))
    assert equivalent(EXACT, tuple(m(v) for v in q), q)


def test_float_references_classify():
    regular, star = reference_pentagons(FLOAT)
    assert classify(FLOAT, regular).kind == REGULAR
    assert classify(FLOAT, star).kind == STAR_REGULAR


def test_exact_references_classify():
    regular, star = reference_pentagons(EXACT)
    verdict = classify(EXACT, regular)
    assert verdict.kind == REGULAR
    assert verdict.relabeling == (0, 1, 2, 3, 4)
    assert classify(EXACT, star).kind == STAR_REGULAR


def test_random_pentagon_is_other():
    verdict = classify(EXACT, exact_pentagon(3, 2))
    assert verdict.kind == OTHER
    assert verdict.relabeling is None


def test_step_images_classify():
    rng = random.Random(8)
    pentagon = sample_pentagon(rng, 8)
    golden = polygon_step(EXACT, pentagon, ProjParam(PHI))
    conjugate = polygon_step(EXACT, pentagon, ProjParam(PSI))
    assert classify(EXACT, golden).kind == REGULAR
    assert classify(EXACT, conjugate).kind == STAR_REGULAR


def test_classification_invariant_under_maps():
    rng = random.Random(44)
    regular, star = reference_pentagons(EXACT)
    m = random_exact_map(rng)
    assert classify(EXACT, tuple(m(v) for v in regular)).kind == REGULAR
    assert classify(EXACT, tuple(m(v) for v in star)).kind == STAR_REGULAR


def test_classification_relabel_equivariance():
    regular, _ = reference_pentagons(EXACT)
    for sigma in DIHEDRAL_RELABELINGS:
        assert classify(EXACT, relabel(regular, sigma)).kind == REGULAR
    for sigma in STAR_RELABELINGS:
        assert classify(EXACT, relabel(regular, sigma)).kind == STAR_REGULAR


def test_match_slots_are_disjoint_in_practice():
    regular, star = reference_pentagons(EXACT)
    for pentagon in (regular, star):
        verdict = classify(EXACT, pentagon)
        assert (verdict.regular_match is None) != (verdict.star_match is None)


def test_residual_to_regular():
    regular, star = reference_pentagons(FLOAT)
    assert residual_to_regular(regular) < 1e-12
    assert residual_to_regular(star) > 0.1
    rng = random.Random(17)
    pentagon = sample_pentagon(rng, 8)
    image = polygon_step(EXACT, pentagon, ProjParam(PHI))
    as_float = tuple(HPoint(*(float(c) for c in v)) for v in image)
    assert residual_to_regular(as_float) < 1e-9
    collapsed = (regular[0],) * 5
    assert residual_to_regular(collapsed) == math.inf


def test_chordal_gap():
    assert chordal_gap((1.0, 2.0, 3.0), (-2.0, -4.0, -6.0)) == 0.0
    assert chordal_gap((0.0, 0.0, 0.0), (1.0, 0.0, 0.0)) == math.inf
    assert chordal_gap((1.0, 0.0, 0.0), (0.0, 1.0, 0.0)) == pytest.approx(math.sqrt(2.0))
