"""Core algebra: multiplication, involution, norm, doubling, isotopes."""

import itertools

import numpy as np
import pytest

from splitoct.algebra import (Isotope, algebra, double, field_table,
                              octonion_table, quaternion_table)

PRIMES = [2, 3, 5]


# ---------------------------------------------------------------------------
# named elements and matrix-unit arithmetic
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p", PRIMES)
def test_named_elements(p):
    ctx = algebra(p)
    assert ctx.one.coords == (1, 0, 0, 1, 0, 0, 0, 0)
    assert ctx.w.coords == (0, 0, 0, 0, 1, 0, 0, 1)
    assert ctx.p0.coords == (1, 0, 0, 0, 0, 0, 0, 0)
    assert ctx.n0.coords == (0, 1, 0, 0, 0, 0, 0, 0)
    assert ctx.nbar0.coords == (0, 0, 1, 0, 0, 0, 0, 0)
    assert ctx.pbar0.coords == (0, 0, 0, 1, 0, 0, 0, 0)
    assert ctx.p0w == ctx.p0 * ctx.w
    assert ctx.n0w == ctx.n0 * ctx.w
    assert ctx.nbar0w == ctx.nbar0 * ctx.w
    assert ctx.pbar0w == ctx.pbar0 * ctx.w


@pytest.mark.parametrize("p", PRIMES)
def test_matrix_unit_products(p):
    ctx = algebra(p)
    # the 2x2-matrix part multiplies like matrix units E11,E12,E21,E22
    units = [ctx.p0, ctx.n0, ctx.nbar0, ctx.pbar0]
    idx = {0: (0, 0), 1: (0, 1), 2: (1, 0), 3: (1, 1)}
    for a in range(4):
        for b in range(4):
            (i, j), (k, l) = idx[a], idx[b]
            expected = units[2 * i + l] if j == k else ctx.octonion((0,) * 8)
            assert units[a] * units[b] == expected


@pytest.mark.parametrize("p", PRIMES)
def test_doubling_unit_squares_to_one(p):
    ctx = algebra(p)
    assert ctx.w * ctx.w == ctx.one
    assert ctx.norm(ctx.w.coords) == (-1) % p
    # w anti-commutes with trace-zero matrix part: w·a = k(a)·w
    for a in (ctx.n0, ctx.nbar0):
        assert ctx.w * a == ctx.octonion(ctx.conj(a.coords)) * ctx.w


@pytest.mark.parametrize("p", PRIMES)
def test_identity_element(p):
    ctx = algebra(p)
    rng = np.random.default_rng(42)
    for _ in range(50):
        x = ctx.octonion(tuple(int(c) for c in rng.integers(0, p, 8)))
        assert ctx.one * x == x
        assert x * ctx.one == x


# ---------------------------------------------------------------------------
# involution, norm, trace
# ---------------------------------------------------------------------------

def _random_elements(ctx, n, seed):
    rng = np.random.default_rng(seed)
    return [tuple(int(c) for c in row) for row in rng.integers(0, ctx.p, (n, 8))]


@pytest.mark.parametrize("p", PRIMES)
def test_involution_properties(p):
    ctx = algebra(p)
    xs = _random_elements(ctx, 40, seed=p)
    for x in xs:
        assert ctx.conj(ctx.conj(x)) == x
        # x + k(x) = tr(x)·1  and  x·k(x) = N(x)·1
        kx = ctx.conj(x)
        assert ctx.add(x, kx) == ctx.smul(ctx.trace(x), ctx.one.coords)
        assert ctx.mul(x, kx) == ctx.smul(ctx.norm(x), ctx.one.coords)
    for x in xs[:15]:
        for y in xs[:15]:
            assert ctx.conj(ctx.mul(x, y)) == ctx.mul(ctx.conj(y), ctx.conj(x))
            assert ctx.norm(ctx.mul(x, y)) == (ctx.norm(x) * ctx.norm(y)) % p


@pytest.mark.parametrize("p", PRIMES)
def test_polar_form_agrees_with_norm(p):
    ctx = algebra(p)
    xs = _random_elements(ctx, 20, seed=10 * p)
    for x in xs:
        for y in xs:
            expected = (ctx.norm(ctx.add(x, y)) - ctx.norm(x) - ctx.norm(y)) % p
            assert ctx.polar(x, y) == expected


@pytest.mark.parametrize("p", PRIMES)
def test_degree_two_identity(p):
    ctx = algebra(p)
    for x in _random_elements(ctx, 60, seed=3 * p + 1):
        lhs = ctx.add(ctx.mul(x, x),
                      ctx.smul((-ctx.trace(x)) % p, x))
        assert lhs == ctx.smul((-ctx.norm(x)) % p, ctx.one.coords)


@pytest.mark.parametrize("p", PRIMES)
def test_inverse(p):
    ctx = algebra(p)
    count = 0
    for x in _random_elements(ctx, 80, seed=17 * p):
        if ctx.norm(x) == 0:
            with pytest.raises(ZeroDivisionError):
                ctx.inverse(x)
        else:
            count += 1
            assert ctx.mul(x, ctx.inverse(x)) == ctx.one.coords
            assert ctx.mul(ctx.inverse(x), x) == ctx.one.coords
    assert count > 10


# ---------------------------------------------------------------------------
# byte tables (F_2 fast path)
# ---------------------------------------------------------------------------

def test_byte_tables_match_tuple_arithmetic(ctx2):
    ctx = ctx2
    for xb in range(256):
        x = ctx.coords_of_byte(xb)
        assert ctx.byte_of(x) == xb
        assert ctx.norm_byte[xb] == ctx.norm(x)
        assert ctx.trace_byte[xb] == ctx.trace(x)
        assert ctx.coords_of_byte(ctx.conj_byte[xb]) == ctx.conj(x)
    rng = np.random.default_rng(0)
    for _ in range(2000):
        xb, yb = int(rng.integers(256)), int(rng.integers(256))
        prod = ctx.mul(ctx.coords_of_byte(xb), ctx.coords_of_byte(yb))
        assert ctx.coords_of_byte(int(ctx.mul_byte[xb, yb])) == prod


# ---------------------------------------------------------------------------
# doubling chain
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p", PRIMES)
def test_double_quaternions_gives_octonions(p):
    doubled = double(quaternion_table(p), (-1) % p)
    target = octonion_table(p)
    assert doubled.struct == target.struct
    assert doubled.inv_mat == target.inv_mat
    assert doubled.unit == target.unit


def _is_commutative(table):
    d = table.dim
    basis = np.eye(d, dtype=np.int64)
    return all(table.mul(basis[i], basis[j]) == table.mul(basis[j], basis[i])
               for i in range(d) for j in range(d))


def _is_associative(table):
    d = table.dim
    basis = np.eye(d, dtype=np.int64)
    for i, j, k in itertools.product(range(d), repeat=3):
        lhs = table.mul(table.mul(basis[i], basis[j]), basis[k])
        rhs = table.mul(basis[i], table.mul(basis[j], basis[k]))
        if lhs != rhs:
            return False
    return True


def _tables_isomorphic(t1, t2, base_change, p):
    """Does coords -> coords @ base_change turn t1-multiplication into t2?"""
    d = t1.dim
    B = np.array(base_change, dtype=np.int64)
    basis = np.eye(d, dtype=np.int64)
    for i in range(d):
        for j in range(d):
            img = np.array(t2.mul((basis[i] @ B) % p, (basis[j] @ B) % p),
                           dtype=np.int64)
            direct = (np.array(t1.mul(basis[i], basis[j]), dtype=np.int64)
                      @ B) % p
            if not np.array_equal(img % p, direct):
                return False
    return True


@pytest.mark.parametrize("p", [3, 5])
def test_double_field_twice_is_matrix_algebra_odd_p(p):
    # F -> F+F -> quaternions: associative at every step, second step
    # isomorphic to 2x2 matrices via an explicit base change
    once = double(field_table(p), (-1) % p)
    twice = double(once, (-1) % p)
    assert _is_associative(once) and _is_commutative(once)
    assert _is_associative(twice) and not _is_commutative(twice)
    b4 = [[1, 0, 0, 1],
          [1, 0, 0, -1],
          [0, 1, 1, 0],
          [0, 1, -1, 0]]
    assert _tables_isomorphic(twice, quaternion_table(p), b4, p)


@pytest.mark.parametrize("p", [3, 5])
def test_full_doubling_chain_odd_p(p):
    chain = field_table(p)
    for _ in range(3):
        chain = double(chain, (-1) % p)
    b4 = np.array([[1, 0, 0, 1],
                   [1, 0, 0, -1],
                   [0, 1, 1, 0],
                   [0, 1, -1, 0]], dtype=np.int64)
    b8 = np.zeros((8, 8), dtype=np.int64)
    b8[:4, :4] = b4
    b8[4:, 4:] = b4
    assert _tables_isomorphic(chain, octonion_table(p), b8 % p, p)


def test_double_field_stays_commutative_char2():
    # in characteristic 2 the involution on F+F is trivial, so repeated
    # doubling never leaves the commutative world and cannot reach the
    # 2x2 matrix algebra
    once = double(field_table(2), 1)
    twice = double(once, 1)
    assert _is_commutative(once)
    assert _is_commutative(twice)
    assert not _is_commutative(quaternion_table(2))


# ---------------------------------------------------------------------------
# isotopes
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p", PRIMES)
def test_isotope_unit_and_norm(p):
    ctx = algebra(p)
    rng = np.random.default_rng(31 + p)
    pairs = 0
    while pairs < 5:
        a = tuple(int(c) for c in rng.integers(0, p, 8))
        b = tuple(int(c) for c in rng.integers(0, p, 8))
        if ctx.norm(a) == 0 or ctx.norm(b) == 0:
            continue
        pairs += 1
        iso = Isotope(ctx, a, b)
        for x in _random_elements(ctx, 10, seed=pairs):
            assert iso.mul(iso.neutral, x) == x
            assert iso.mul(x, iso.neutral) == x
            for y in _random_elements(ctx, 5, seed=100 + pairs):
                lhs = (iso.norm_scale * ctx.norm(iso.mul(x, y))) % p
                assert lhs == (ctx.norm(x) * ctx.norm(y)) % p


def test_isotope_rejects_singular_units(ctx2):
    with pytest.raises(ZeroDivisionError):
        Isotope(ctx2, ctx2.n0.coords, ctx2.one.coords)
