"""Automorphisms: generators, group closure, orbits, transitivity."""

import numpy as np
import pytest

from splitoct.algebra import algebra
from splitoct.autos import (CapExceeded, PreconditionFailed, alpha_st,
                            alpha_subgroup_order_formula, all_alpha_generators,
                            conjugation_flip, count_automorphisms,
                            doubling_extension, element_orbits,
                            find_h_moving_extension, generate_group,
                            identity_automorphism, orbit_of_space,
                            orbit_partition, two_transitive_on_lines)
from splitoct.classify import element_orbit_invariant
from splitoct.constructions import standard_quaternions
from splitoct.subspace import span

FULL_GROUP_ORDER_F2 = 12096


def _random_check_multiplicative(auto, p, seed=0, n=40):
    ctx = algebra(p)
    rng = np.random.default_rng(seed)
    for _ in range(n):
        x = tuple(int(c) for c in rng.integers(0, p, 8))
        y = tuple(int(c) for c in rng.integers(0, p, 8))
        assert auto.apply(ctx.mul(x, y)) == ctx.mul(auto.apply(x), auto.apply(y))
        assert ctx.norm(auto.apply(x)) == ctx.norm(x)
        assert ctx.trace(auto.apply(x)) == ctx.trace(x)
    assert auto.apply(ctx.one.coords) == ctx.one.coords


@pytest.mark.parametrize("p", [2, 3])
def test_alpha_maps_are_automorphisms(p):
    ctx = algebra(p)
    # alpha_{s,t}: a+xw -> s a s^-1 + (t x s^-1) w needs det s = det t != 0
    s, t = (1, 1, 0, 1), (1, 0, 1, 1)
    auto = alpha_st(s, t, p)
    _random_check_multiplicative(auto, p, seed=p)
    with pytest.raises(PreconditionFailed):
        alpha_st((1, 1, 0, 1), (1, 1, 1, 1), p)   # det mismatch: 1 vs 0
    if p > 2:
        with pytest.raises(PreconditionFailed):
            alpha_st((1, 0, 0, 1), (2, 0, 0, 1), p)   # det 1 vs det 2


@pytest.mark.parametrize("p,expected", [(2, 36), (3, 576)])
def test_alpha_subgroup_order(p, expected):
    assert alpha_subgroup_order_formula(p) == expected
    closure = generate_group(all_alpha_generators(p))
    assert closure.closed and closure.order == expected


@pytest.mark.parametrize("p", [2, 3])
def test_alpha_stabilizes_matrix_part_but_mover_does_not(p):
    h = standard_quaternions(p)
    for g in all_alpha_generators(p):
        assert g.apply_space(h) == h
    mover = find_h_moving_extension(p)
    _random_check_multiplicative(mover, p, seed=7 * p)
    assert mover.apply_space(h) != h


@pytest.mark.parametrize("p", [2, 3])
def test_doubling_extension_and_flip(p):
    ctx = algebra(p)
    flip = conjugation_flip(p)
    _random_check_multiplicative(flip, p, seed=3)
    assert flip.apply(ctx.w.coords) == ctx.smul(-1, ctx.w.coords)
    assert flip.apply(ctx.n0.coords) == ctx.n0.coords
    # order two for odd p, identity in characteristic 2
    twice = flip.then(flip)
    assert twice.key() == identity_automorphism(p).key()
    # a doubling extension must be refused for a norm-zero slot
    with pytest.raises((PreconditionFailed, ZeroDivisionError, ValueError)):
        doubling_extension(np.eye(8, dtype=np.int64)[:4], ctx.n0w.coords, p)


def test_full_group_f2_both_routes(group2):
    # route 1: closure of the generators; route 2: direct search
    assert group2.closed
    assert group2.order == FULL_GROUP_ORDER_F2
    assert count_automorphisms(2) == FULL_GROUP_ORDER_F2


def test_composition_convention(ctx2):
    gens = all_alpha_generators(2)
    g, h = gens[0], gens[-1]
    x = ctx2.n0w.coords
    assert g.then(h).apply(x) == h.apply(g.apply(x))


def test_orbit_of_space_sizes(census2, generators2):
    # every 6-dimensional subalgebra forms one orbit of size 63
    six = [r.space for r in census2 if r.dim == 6]
    orbit = orbit_of_space(six[0], generators2)
    assert len(orbit) == 63
    assert {s.rows for s in six} == set(orbit)


def test_orbit_partition_single_orbits(census2, generators2):
    rows = orbit_partition(census2, generators2)
    assert len(rows) == 23
    for row in rows:
        assert row["orbit_count"] == 1, row
        assert sum(row["orbit_sizes"]) == len(
            [r for r in census2
             if r.dim == row["dim"] and r.label.value == row["label"]])


def test_element_orbits_f2(generators2):
    orbits = element_orbits(generators2, 2)
    sizes = sorted(len(o) for o in orbits)
    assert sizes == [1, 56, 63, 63, 72]
    # orbits refine (here: equal) the element invariant classes
    for orbit in orbits:
        invs = {element_orbit_invariant(v, 2) for v in orbit}
        assert len(invs) == 1


def test_element_orbits_odd_p_respect_invariants():
    gens = all_alpha_generators(3)
    orbits = element_orbits(gens, 3)
    assert sum(len(o) for o in orbits) == 3 ** 8 - 1
    for orbit in orbits:
        invs = {element_orbit_invariant(v, 3) for v in orbit}
        assert len(invs) == 1


@pytest.mark.parametrize("p", [2, 3])
def test_two_transitive_on_singular_lines(p):
    assert two_transitive_on_lines(p)


def test_group_cap(generators2):
    with pytest.raises(CapExceeded):
        generate_group(generators2, cap=100)


def test_automorphisms_preserve_labels(census2, generators2):
    from splitoct.classify import classify
    mover = generators2[-1]
    for r in census2[::97]:
        assert classify(mover.apply_space(r.space)) is r.label
