"""Prime-field scalar arithmetic."""

import pytest

from splitoct.field import (FieldError, add, check_prime, div, inv, is_square,
                            mul, neg, normalize, quadratic_roots, sqrt, sub)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_check_prime_accepts_primes(p):
    assert check_prime(p) == p


@pytest.mark.parametrize("p", [0, 1, 4, 6, 9, -3, 15])
def test_check_prime_rejects_nonprimes(p):
    with pytest.raises(FieldError):
        check_prime(p)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_ring_axioms_exhaustive(p):
    for a in range(p):
        for b in range(p):
            assert add(a, b, p) == (a + b) % p
            assert sub(a, b, p) == (a - b) % p
            assert mul(a, b, p) == (a * b) % p
        assert neg(a, p) == (-a) % p
        assert normalize(a + 3 * p, p) == a


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_inverses(p):
    for a in range(1, p):
        assert mul(a, inv(a, p), p) == 1
        for b in range(1, p):
            assert mul(div(a, b, p), b, p) == a


def test_inv_of_zero_fails():
    with pytest.raises(FieldError):
        inv(0, 5)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_squares_and_roots(p):
    squares = {(x * x) % p for x in range(p)}
    for a in range(p):
        assert is_square(a, p) == (a in squares)
        r = sqrt(a, p)
        if a in squares:
            assert r is not None and (r * r) % p == a
        else:
            assert r is None


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_quadratic_roots_match_bruteforce(p):
    # roots of x^2 - t*x + n over F_p
    for t in range(p):
        for n in range(p):
            expected = tuple(sorted(x for x in range(p)
                                    if (x * x - t * x + n) % p == 0))
            assert tuple(sorted(quadratic_roots(t, n, p))) == expected
