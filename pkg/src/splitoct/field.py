"""Exact arithmetic in the prime fields F_p for small primes p.

Field elements are plain Python ints in ``range(p)``; every function
normalizes its inputs mod p, so callers may pass arbitrary ints (including
negatives).  Nothing here is vectorized: the hot paths in :mod:`.census`
work on numpy arrays directly and only share the prime list with this
module.
"""

from __future__ import annotations

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)


class FieldError(ValueError):
    """Raised for unsupported moduli or inversion of zero."""


def check_prime(p: int) -> int:
    """Return ``p`` if it is a supported prime, else raise FieldError."""
    if p not in SUPPORTED_PRIMES:
        raise FieldError(f"unsupported field size {p!r}; pick one of {SUPPORTED_PRIMES}")
    return p


def normalize(a: int, p: int) -> int:
    return a % p


def add(a: int, b: int, p: int) -> int:
    return (a + b) % p


def sub(a: int, b: int, p: int) -> int:
    return (a - b) % p


def mul(a: int, b: int, p: int) -> int:
    return (a * b) % p


def neg(a: int, p: int) -> int:
    return (-a) % p


def inv(a: int, p: int) -> int:
    """Multiplicative inverse mod p (p prime), via Fermat's little theorem."""
    a %= p
    if a == 0:
        raise FieldError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


def div(a: int, b: int, p: int) -> int:
    return (a * inv(b, p)) % p


def is_square(a: int, p: int) -> bool:
    """True iff ``a`` is a square in F_p (0 counts as a square)."""
    a %= p
    if p == 2 or a == 0:
        return True
    return pow(a, (p - 1) // 2, p) == 1


def sqrt(a: int, p: int) -> int | None:
    """A square root of ``a`` in F_p, or None.  p is tiny; scan."""
    a %= p
    for r in range((p // 2) + 1):
        if r * r % p == a:
            return r
    return None


def quadratic_roots(t: int, n: int, p: int) -> tuple[int, ...]:
    """Roots in F_p of X^2 - t*X + n, as a sorted tuple (scan; p is tiny)."""
    t %= p
    n %= p
    return tuple(x for x in range(p) if (x * x - t * x + n) % p == 0)
