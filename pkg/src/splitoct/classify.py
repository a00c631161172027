"""Orbit classification of closed subspaces of the split octonions.

Every multiplicatively closed subspace falls into one of finitely many
orbits of the automorphism group; the decision tree below reads off the
orbit from cheap invariants (dimension, unitality, radicals, one-sided
identities, minimal polynomials).  Labels D, H, D+Q, K require imperfect
or infinite scalars and can never occur over F_p; their branches raise
:class:`ClassificationError` so a scan hitting one is loudly wrong.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import field
from .algebra import DIM, SplitOctonions, algebra
from .linalg import nullspace
from .subspace import Subspace, intersect, is_closed, radicals, span


class OrbitLabel(enum.Enum):
    """Orbit catalog; values are the ASCII node captions used in output."""

    Zero = "0"
    F = "F"
    Fp = "Fp"
    Fn = "Fn"
    S = "S"
    FplusFn = "F+Fn"
    FnFp = "Fn+Fp"
    FnFpbar = "Fn+Fpbar"
    Q = "Q"
    E = "E"
    D = "D"
    T = "T"
    FplusQ = "F+Q"
    mOcapOn = "mOcapOn"
    HeisNOcapOn = "nOcapOn"
    SplitQuat = "F2x2"
    QuatField = "H"
    SplusQ = "S+Q"
    EplusQ = "E+Q"
    DplusQ = "D+Q"
    K = "K"
    FplusHeis = "F+(nOcapOn)"
    NO = "nO"
    ON = "On"
    Dim5 = "nO+On"
    Dim6 = "Qperp"
    Full = "O"

    @property
    def reachable(self) -> bool:
        """Whether the orbit is realizable over a finite field."""
        return self not in _UNREACHABLE

    @classmethod
    def from_string(cls, s: str) -> "OrbitLabel":
        for lab in cls:
            if lab.value == s:
                return lab
        raise KeyError(s)


_UNREACHABLE = {OrbitLabel.D, OrbitLabel.QuatField, OrbitLabel.DplusQ, OrbitLabel.K}

#: dimension of any subalgebra carrying the label
LABEL_DIM = {
    OrbitLabel.Zero: 0,
    OrbitLabel.F: 1, OrbitLabel.Fp: 1, OrbitLabel.Fn: 1,
    OrbitLabel.S: 2, OrbitLabel.FplusFn: 2, OrbitLabel.FnFp: 2,
    OrbitLabel.FnFpbar: 2, OrbitLabel.Q: 2, OrbitLabel.E: 2, OrbitLabel.D: 2,
    OrbitLabel.T: 3, OrbitLabel.FplusQ: 3, OrbitLabel.mOcapOn: 3,
    OrbitLabel.HeisNOcapOn: 3,
    OrbitLabel.SplitQuat: 4, OrbitLabel.QuatField: 4, OrbitLabel.SplusQ: 4,
    OrbitLabel.EplusQ: 4, OrbitLabel.DplusQ: 4, OrbitLabel.K: 4,
    OrbitLabel.FplusHeis: 4, OrbitLabel.NO: 4, OrbitLabel.ON: 4,
    OrbitLabel.Dim5: 5, OrbitLabel.Dim6: 6, OrbitLabel.Full: 8,
}


class NotClosed(ValueError):
    """classify() was handed a subspace that is not closed under products."""


class ClassificationError(RuntimeError):
    """A closed subspace contradicts the classification (must never fire)."""


def element_orbit_invariant(v, p: int | None = None) -> tuple[int, int, bool]:
    """(norm, trace, is_central): a complete orbit invariant for elements.

    Non-central elements with equal norm and trace lie in one orbit of the
    automorphism group; central means lying in F·1.
    """
    coords = tuple(getattr(v, "coords", v))
    p = p if p is not None else getattr(v, "p")
    ctx = algebra(p)
    central = all(
        coords[i] == 0 for i in (1, 2, 4, 5, 6, 7)) and coords[0] == coords[3]
    return ctx.norm(coords), ctx.trace(coords), central


def _has_one_sided_identity(space: Subspace, ctx: SplitOctonions, side: str) -> bool:
    for e in space.nonzero_elements():
        if side == "left":
            if all(ctx.mul(e, b) == b for b in space.rows):
                return True
        else:
            if all(ctx.mul(b, e) == b for b in space.rows):
                return True
    return False


def _minimal_poly_kind(t: int, n: int, p: int) -> str:
    """Kind of X² - tX + n over F_p: 'split', 'double', 'irreducible',
    or 'inseparable' (irreducible with zero derivative; char 2, t = 0)."""
    roots = field.quadratic_roots(t, n, p)
    if len(roots) == 2:
        return "split"
    if len(roots) == 1:
        return "double"
    return "inseparable" if (p == 2 and t % p == 0) else "irreducible"


def _annihilator_space(space: Subspace, ctx: SplitOctonions, side: str) -> Subspace:
    """Elements a of the ambient space with a·A = 0 (side='left') or A·a = 0."""
    p = ctx.p
    E = np.eye(DIM, dtype=np.int64)
    blocks = []
    for b in space.rows:
        if side == "left":
            M = np.array([ctx.mul(E[i], b) for i in range(DIM)], dtype=np.int64)
        else:
            M = np.array([ctx.mul(b, E[i]) for i in range(DIM)], dtype=np.int64)
        blocks.append(M)
    big = np.concatenate(blocks, axis=1)       # (8, 8k); want a @ big = 0
    ker = nullspace(big.T % p, p)
    return span(ker, p)


def classify(space: Subspace, *, trust_closed: bool = False) -> OrbitLabel:
    """Orbit label of a closed subspace, per the classification theorems."""
    p = space.p
    ctx = algebra(p)
    if not trust_closed and not is_closed(space, ctx):
        raise NotClosed(f"subspace is not closed under multiplication: {space}")
    k = space.dim
    if k == 0:
        return OrbitLabel.Zero
    if k == 8:
        return OrbitLabel.Full
    if k == 7:
        raise ClassificationError("7-dimensional subalgebra cannot exist")

    one = ctx.one.coords
    if not space.contains(one):
        # 1 ∉ A forces N ≡ 0 on A: an invertible x would put
        # 1 = (tr(x)·x − x²)/N(x) inside the closed space
        for i, u in enumerate(space.rows):
            if ctx.norm(u) != 0:
                raise ClassificationError("non-unital subalgebra containing an invertible element")
            for v in space.rows[i + 1:]:
                if ctx.polar(u, v) != 0:
                    raise ClassificationError("non-unital subalgebra is not totally singular")
        if k == 1:
            gen = space.rows[0]
            return OrbitLabel.Fp if ctx.trace(gen) != 0 else OrbitLabel.Fn
        if k == 2:
            if all(not any(ctx.mul(u, v)) for u in space.rows for v in space.rows):
                return OrbitLabel.Q
            if _has_one_sided_identity(space, ctx, "left"):
                return OrbitLabel.FnFp
            if _has_one_sided_identity(space, ctx, "right"):
                return OrbitLabel.FnFpbar
            raise ClassificationError("2-dim singular algebra with no identity and products")
        if k == 3:
            in_one_perp = all(ctx.trace(b) == 0 for b in space.rows)
            return OrbitLabel.HeisNOcapOn if in_one_perp else OrbitLabel.mOcapOn
        if k == 4:
            left_ann = intersect(_annihilator_space(space, ctx, "left"), space)
            if left_ann.dim > 0:
                return OrbitLabel.NO
            right_ann = intersect(_annihilator_space(space, ctx, "right"), space)
            if right_ann.dim > 0:
                return OrbitLabel.ON
            raise ClassificationError("4-dim singular algebra with no annihilator")
        raise ClassificationError(f"totally singular subalgebra of dimension {k}")

    # unital branch
    if k == 1:
        return OrbitLabel.F
    if k == 5:
        return OrbitLabel.Dim5
    if k == 6:
        return OrbitLabel.Dim6
    R, Q = radicals(space)
    if k == 2:
        gen = next(r for r in space.rows
                   if not span([one], p).contains(r))
        kind = _minimal_poly_kind(ctx.trace(gen), ctx.norm(gen), p)
        if kind == "split":
            return OrbitLabel.S
        if kind == "double":
            return OrbitLabel.FplusFn
        if kind == "irreducible":
            return OrbitLabel.E
        raise ClassificationError("label D requires an imperfect field")
    if k == 3:
        if R.dim == 1:
            return OrbitLabel.T
        if R.dim >= 2:
            if Q.dim < 2:
                raise ClassificationError("3-dim unital: dim R >= 2 forces dim Q >= 2")
            return OrbitLabel.FplusQ
        raise ClassificationError("3-dim unital nondegenerate subalgebra")
    if k == 4:
        if R.dim == 0:
            if any(any(x) and ctx.norm(x) == 0 for x in space.elements()):
                return OrbitLabel.SplitQuat
            raise ClassificationError("label H (division quaternions) cannot occur "
                                      "over a finite field")
        if Q.dim == 3:
            return OrbitLabel.FplusHeis
        if R.dim == 2:
            if Q.dim != 2:
                raise ClassificationError("dim R = 2 with Q != R")
            lift_excl = span([one] + list(R.rows), p)
            gen = next(r for r in space.rows if not lift_excl.contains(r))
            kind = _minimal_poly_kind(ctx.trace(gen), ctx.norm(gen), p)
            if kind == "split":
                return OrbitLabel.SplusQ
            if kind == "irreducible":
                return OrbitLabel.EplusQ
            if kind == "inseparable":
                raise ClassificationError("label D+Q requires an imperfect field")
            raise ClassificationError("quotient by radical is not a composition algebra")
        if R.dim == 4:
            if Q.dim == 2:
                raise ClassificationError("label D+Q requires an imperfect field")
            if Q.dim == 0:
                raise ClassificationError("label K requires an imperfect field")
        raise ClassificationError(f"4-dim unital: unexpected radicals R={R.dim} Q={Q.dim}")
    raise ClassificationError(f"unital subalgebra of dimension {k}")


# ---------------------------------------------------------------------------
# full per-subalgebra record
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubalgebraRecord:
    """A closed subspace with all computed invariants."""

    space: Subspace
    dim: int
    contains_one: bool
    totally_singular: bool
    radical_R_dim: int
    radical_Q_dim: int
    associative: bool
    commutative: bool
    label: OrbitLabel

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "basis": [list(r) for r in self.space.rows],
            "label": self.label.value,
            "flags": {
                "assoc": self.associative,
                "comm": self.commutative,
                "unital": self.contains_one,
            },
            "R_dim": self.radical_R_dim,
            "Q_dim": self.radical_Q_dim,
        }


def _is_associative(space: Subspace, ctx: SplitOctonions) -> bool:
    rows = space.rows
    for u in rows:
        for v in rows:
            uv = ctx.mul(u, v)
            for t in rows:
                if ctx.mul(uv, t) != ctx.mul(u, ctx.mul(v, t)):
                    return False
    return True


def _is_commutative(space: Subspace, ctx: SplitOctonions) -> bool:
    rows = space.rows
    for i, u in enumerate(rows):
        for v in rows[i + 1:]:
            if ctx.mul(u, v) != ctx.mul(v, u):
                return False
    return True


def _is_totally_singular(space: Subspace, ctx: SplitOctonions) -> bool:
    rows = space.rows
    for i, u in enumerate(rows):
        if ctx.norm(u) != 0:
            return False
        for v in rows[i + 1:]:
            if ctx.polar(u, v) != 0:
                return False
    return True


def record_for(space: Subspace, *, trust_closed: bool = False) -> SubalgebraRecord:
    """Compute every invariant plus the orbit label for a closed subspace."""
    ctx = algebra(space.p)
    if not trust_closed and not is_closed(space, ctx):
        raise NotClosed(f"subspace is not closed under multiplication: {space}")
    R, Q = radicals(space)
    return SubalgebraRecord(
        space=space,
        dim=space.dim,
        contains_one=space.contains(ctx.one.coords),
        totally_singular=_is_totally_singular(space, ctx),
        radical_R_dim=R.dim,
        radical_Q_dim=Q.dim,
        associative=_is_associative(space, ctx),
        commutative=_is_commutative(space, ctx),
        label=classify(space, trust_closed=True),
    )
