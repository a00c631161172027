"""Subspaces of F_p^8: canonical forms, enumeration, closure, radicals.

A subspace is stored as its reduced row echelon basis (pivot columns
normalized and cleared, pivots strictly increasing), which makes equality,
hashing and deterministic ordering trivial.  Enumeration walks pivot-column
sets in lexicographic order and, within a pivot set, the free entries in
row-major order, least-significant-last — so the stream order is
reproducible and partitions cleanly by pivot set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .algebra import DIM, GRAM_Z, SplitOctonions, algebra


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^ambient as an immutable RREF basis."""

    rows: tuple[tuple[int, ...], ...]
    p: int
    ambient: int = DIM

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for r in self.rows:
            for c, val in enumerate(r):
                if val:
                    out.append(c)
                    break
        return tuple(out)

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.ambient), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)

    def contains(self, vec) -> bool:
        v = np.array(tuple(vec), dtype=np.int64) % self.p
        return linalg.row_space_contains(self.matrix(), self.pivots, v, self.p)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def key(self) -> tuple:
        """Deterministic sort key: (dim, pivot columns, entries)."""
        return (self.dim, self.pivots, self.rows)

    def elements(self):
        """All p^dim elements of the span, coordinates as int tuples."""
        mat = self.matrix()
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            if self.dim:
                v = (np.array(coeffs, dtype=np.int64) @ mat) % self.p
                yield tuple(int(c) for c in v)
            else:
                yield (0,) * self.ambient

    def nonzero_elements(self):
        for v in self.elements():
            if any(v):
                yield v

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, p={self.p}, rows={list(map(list, self.rows))})"


def span(vectors, p: int, ambient: int = DIM) -> Subspace:
    """Canonical subspace spanned by arbitrary coordinate vectors."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return Subspace((), p, ambient)
    red, _ = linalg.rref(np.array(vecs, dtype=np.int64), p)
    return Subspace(tuple(map(tuple, red.tolist())), p, ambient)


rref = span  # the operation name used by the command layer


def zero_space(p: int, ambient: int = DIM) -> Subspace:
    return Subspace((), p, ambient)


def full_space(p: int, ambient: int = DIM) -> Subspace:
    return span(np.eye(ambient, dtype=np.int64), p, ambient)


def sum_spaces(a: Subspace, b: Subspace) -> Subspace:
    assert a.p == b.p and a.ambient == b.ambient
    return span(list(a.rows) + list(b.rows), a.p, a.ambient)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked-basis relation."""
    assert a.p == b.p and a.ambient == b.ambient
    p = a.p
    if a.dim == 0 or b.dim == 0:
        return zero_space(p, a.ambient)
    stacked = np.concatenate([a.matrix(), b.matrix()], axis=0)   # (k+m, n)
    # coefficient vectors (lam, mu) with lam@A + mu@B = 0; then lam@A is in both
    ker = linalg.nullspace(stacked.T, p)
    vecs = (ker[:, : a.dim] @ a.matrix()) % p
    return span(vecs, p, a.ambient)


def perp(space: Subspace) -> Subspace:
    """Orthogonal complement w.r.t. the polar form of the norm."""
    assert space.ambient == DIM
    p = space.p
    if space.dim == 0:
        return full_space(p)
    g = GRAM_Z % p
    ker = linalg.nullspace(space.matrix() @ g % p, p)
    return span(ker, p)


def radicals(space: Subspace) -> tuple[Subspace, Subspace]:
    """(R, Q): the polar-form radical R = A ∩ A^⊥ and its norm-zero part Q.

    On R the polar form vanishes, so for odd p the norm is alternating there
    and Q = R; for p = 2 the norm restricted to R is F_2-linear and Q is its
    kernel.
    """
    p = space.p
    R = intersect(space, perp(space))
    ctx = algebra(p)
    for x in R.rows:
        for y in R.rows:
            assert ctx.polar(x, y) == 0, "polar form must vanish on the radical"
    if p != 2:
        for x in R.rows:
            assert ctx.norm(x) == 0, "odd characteristic: norm vanishes on radical"
        return R, R
    if R.dim == 0:
        return R, R
    norms = np.array([[ctx.norm(r) for r in R.rows]], dtype=np.int64)
    ker = linalg.nullspace(norms, p)         # coefficient vectors
    Q = span((ker @ R.matrix()) % p, p)
    return R, Q


def is_closed(space: Subspace, ctx: SplitOctonions | None = None) -> bool:
    """True iff b_i * b_j lies in the space for all basis pairs."""
    ctx = ctx or algebra(space.p)
    for u in space.rows:
        for v in space.rows:
            if not space.contains(ctx.mul(u, v)):
                return False
    return True


def closure(gens, p: int | None = None) -> Subspace:
    """Smallest multiplicatively closed subspace containing the generators.

    Accepts Octonion instances or coordinate tuples; iterates span-and-
    multiply to a fixpoint (at most 8 rounds).
    """
    coords = []
    for g in gens:
        c = getattr(g, "coords", g)
        coords.append(tuple(c))
        if p is None:
            p = getattr(g, "p", None)
    if p is None:
        raise ValueError("field size required when generators are raw tuples")
    ctx = algebra(p)
    space = span(coords, p)
    while True:
        prods = [ctx.mul(u, v) for u in space.rows for v in space.rows]
        bigger = span(list(space.rows) + prods, p)
        if bigger.dim == space.dim:
            return bigger
        space = bigger


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dim subspaces of F_p^n, by the product formula."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    assert num % den == 0
    return num // den


def free_positions(pivots: tuple[int, ...], ambient: int = DIM) -> list[tuple[int, int]]:
    """Row-major list of the unconstrained entries of an RREF pattern."""
    out = []
    pset = set(pivots)
    for i, c in enumerate(pivots):
        for col in range(c + 1, ambient):
            if col not in pset:
                out.append((i, col))
    return out


def pivot_block(pivots: tuple[int, ...], p: int, ambient: int = DIM,
                start: int = 0, stop: int | None = None) -> np.ndarray:
    """RREF matrices for one pivot set, indices [start, stop) of p^f total.

    Index digits are the free entries in row-major order, first position
    most significant, matching itertools.product order.  Returns an int8
    array of shape (stop-start, k, ambient).
    """
    k = len(pivots)
    free = free_positions(pivots, ambient)
    f = len(free)
    total = p ** f
    if stop is None:
        stop = total
    assert 0 <= start <= stop <= total
    count = stop - start
    out = np.zeros((count, k, ambient), dtype=np.int8)
    for i, c in enumerate(pivots):
        out[:, i, c] = 1
    if f:
        idx = np.arange(start, stop, dtype=np.int64)
        for pos in range(f - 1, -1, -1):
            i, col = free[pos]
            out[:, i, col] = idx % p
            idx //= p
    return out


def enumerate_subspaces(k: int, p: int, ambient: int = DIM, visitor=None,
                        block: int = 1 << 14):
    """Yield every k-dim subspace of F_p^ambient exactly once.

    Order: pivot-column sets lexicographically, then free entries
    lexicographically.  If ``visitor`` is given it is called on each
    subspace as well.
    """
    assert 0 <= k <= ambient
    if k == 0:
        s = zero_space(p, ambient)
        if visitor:
            visitor(s)
        yield s
        return
    for pivots in itertools.combinations(range(ambient), k):
        total = p ** len(free_positions(pivots, ambient))
        for start in range(0, total, block):
            mats = pivot_block(pivots, p, ambient, start, min(start + block, total))
            for m in mats:
                s = Subspace(tuple(map(tuple, m.tolist())), p, ambient)
                if visitor:
                    visitor(s)
                yield s
