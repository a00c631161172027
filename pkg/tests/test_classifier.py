"""Labelling of closed subspaces and element-level invariants."""

import itertools
from collections import Counter

import numpy as np
import pytest

from splitoct.algebra import algebra
from splitoct.classify import (LABEL_DIM, ClassificationError, NotClosed,
                               OrbitLabel, classify, element_orbit_invariant,
                               record_for)
from splitoct.constructions import UnreachableLabel, rep
from splitoct.subspace import span

REACHABLE = [lab for lab in OrbitLabel if lab.reachable]
UNREACHABLE = [lab for lab in OrbitLabel if not lab.reachable]


def test_label_catalog_shape():
    assert len(list(OrbitLabel)) == 27
    assert len(REACHABLE) == 23
    assert {lab.value for lab in UNREACHABLE} == {"D", "H", "D+Q", "K"}
    # captions are unique and every label has a dimension
    assert len({lab.value for lab in OrbitLabel}) == 27
    assert set(LABEL_DIM) == set(OrbitLabel)
    for lab in OrbitLabel:
        assert OrbitLabel.from_string(lab.value) is lab
    with pytest.raises(KeyError):
        OrbitLabel.from_string("no-such-label")


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("label", REACHABLE)
def test_representative_round_trip(p, label):
    space = rep(label, p)
    assert space.dim == LABEL_DIM[label]
    assert classify(space) is label


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("label", UNREACHABLE)
def test_unreachable_labels_have_no_representative(p, label):
    with pytest.raises(UnreachableLabel):
        rep(label, p)


def test_classify_rejects_open_spaces():
    open_space = span([(0, 1, 0, 0, 0, 0, 0, 0),
                       (0, 0, 1, 0, 0, 0, 0, 0)], 2)
    with pytest.raises(NotClosed):
        classify(open_space)
    with pytest.raises(NotClosed):
        record_for(open_space)


@pytest.mark.parametrize("p", [2, 3])
def test_trust_closed_matches_validating_path(p):
    for label in REACHABLE:
        space = rep(label, p)
        assert classify(space, trust_closed=True) is classify(space)


def test_record_flags_match_element_level_bruteforce(ctx2):
    """Recompute every flag from scratch on all elements, via byte tables."""
    ctx = ctx2
    for label in REACHABLE:
        space = rep(label, 2)
        record = record_for(space)
        bytes_ = sorted(ctx.byte_of(v) for v in space.elements())
        arr = np.array(bytes_, dtype=np.intp)
        prod = ctx.mul_byte[np.ix_(arr, arr)]
        comm = bool(np.array_equal(prod, prod.T))
        assoc = bool(np.array_equal(
            ctx.mul_byte[prod[:, :, None], arr[None, None, :]],
            ctx.mul_byte[arr[:, None, None], prod[None, :, :]]))
        assert record.commutative == comm, label
        assert record.associative == assoc, label
        assert record.contains_one == (ctx.byte_of(ctx.one.coords) in bytes_)
        assert record.label is label
        assert record.dim == space.dim
        d = record.to_json_dict()
        assert set(d) == {"dim", "basis", "label", "flags", "R_dim", "Q_dim"}
        assert set(d["flags"]) == {"assoc", "comm", "unital"}
        assert d["label"] == label.value


def test_element_invariant_named_elements(ctx2):
    assert element_orbit_invariant(ctx2.one) == (1, 0, True)
    assert element_orbit_invariant(ctx2.n0) == (0, 0, False)
    assert element_orbit_invariant(ctx2.p0) == (0, 1, False)
    assert element_orbit_invariant(ctx2.w) == (1, 0, False)
    assert element_orbit_invariant((0,) * 8, 2) == (0, 0, True)


def test_element_invariant_class_sizes_f2(ctx2):
    counts = Counter(
        element_orbit_invariant(ctx2.coords_of_byte(b), 2)
        for b in range(1, 256))
    assert counts == {(1, 0, True): 1, (1, 1, False): 56, (0, 0, False): 63,
                      (1, 0, False): 63, (0, 1, False): 72}


def test_element_invariant_odd_p(ctx3):
    inv = element_orbit_invariant(ctx3.one)
    assert inv == (1, 2, True)
    two_one = tuple((2 * c) % 3 for c in ctx3.one.coords)
    assert element_orbit_invariant(two_one, 3) == (4 % 3, 4 % 3, True)


@pytest.mark.parametrize("p", [2, 3])
def test_classify_agrees_on_all_dim_one_spaces(p):
    # every line through a nonzero vector either is closed (labelled F, Fp
    # or Fn) or raises; cross-check the label against direct arithmetic
    ctx = algebra(p)
    seen = Counter()
    for v in itertools.product(range(p), repeat=8):
        if not any(v):
            continue
        line = span([v], p)
        sq = ctx.mul(v, v)
        if not line.contains(sq):
            with pytest.raises(NotClosed):
                classify(line)
            continue
        label = classify(line)
        seen[label] += 1
        if label is OrbitLabel.F:
            assert line.contains(ctx.one.coords)
        elif label is OrbitLabel.Fn:
            assert sq == (0,) * 8
        else:
            assert label is OrbitLabel.Fp
            # spanned by an idempotent: some multiple e of v has e² = e
            assert any(ctx.mul(e, e) == e for e in line.nonzero_elements())
    assert set(seen) == {OrbitLabel.F, OrbitLabel.Fn, OrbitLabel.Fp}
