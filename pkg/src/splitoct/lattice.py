"""Inclusion-up-to-orbit lattice of subalgebra labels, plus DOT/JSON emitters.

Containment between orbit labels is decided on representatives alone: a
label X embeds in a label Y exactly when the representative of Y contains
some subalgebra labelled X (any other Y-labelled subalgebra is an
automorphic image of the representative, so the answer is orbit-invariant).
Each representative has dimension at most six, so enumerating every
subspace inside it in representative coordinates is cheap even over F_5.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from .algebra import algebra
from .classify import LABEL_DIM, OrbitLabel, classify, record_for
from .constructions import rep
from .subspace import Subspace, free_positions, pivot_block, span

#: Labels that appear as graph nodes: every reachable label of a proper,
#: nonzero subalgebra (dimensions 1 through 6).  The zero subalgebra and
#: the full algebra are omitted as the trivial bottom/top of the order.
GRAPH_LABELS: tuple[OrbitLabel, ...] = tuple(
    sorted((lab for lab in OrbitLabel
            if lab.reachable and 1 <= LABEL_DIM[lab] <= 6),
           key=lambda lab: (LABEL_DIM[lab], lab.value)))

_BLOCK = 1 << 13


@dataclass(frozen=True)
class LatticeNode:
    """One orbit label with its display flags."""
    label: OrbitLabel
    dim: int
    totally_singular: bool
    associative: bool
    commutative: bool
    maximal: bool

    def flags_dict(self) -> dict[str, bool]:
        return {"totally_singular": self.totally_singular,
                "associative": self.associative,
                "commutative": self.commutative,
                "maximal": self.maximal}


@dataclass(frozen=True)
class LatticeGraph:
    """Covering digraph of orbit labels ordered by inclusion up to orbit."""
    p: int
    nodes: tuple[LatticeNode, ...]
    edges: tuple[tuple[OrbitLabel, OrbitLabel], ...]

    def edge_values(self) -> list[tuple[str, str]]:
        return [(a.value, b.value) for a, b in self.edges]


def _rep_struct(space: Subspace) -> np.ndarray:
    """Structure constants of a closed subspace in its own RREF basis.

    Because the basis is in reduced row-echelon form, the coordinates of a
    member vector are simply its entries at the pivot columns.
    """
    ctx = algebra(space.p)
    k = space.dim
    struct = np.zeros((k, k, k), dtype=np.int64)
    for i, bi in enumerate(space.rows):
        for j, bj in enumerate(space.rows):
            v = ctx.mul(bi, bj)
            coeffs = [v[c] for c in space.pivots]
            recon = [0] * len(v)
            for c, row in zip(coeffs, space.rows):
                recon = [(r + c * x) % space.p for r, x in zip(recon, row)]
            if tuple(recon) != v:
                raise ValueError("subspace is not multiplicatively closed")
            struct[i, j] = coeffs
    return struct


def _closed_mask_rel(mats: np.ndarray, pivots: tuple[int, ...],
                     struct: np.ndarray, p: int) -> np.ndarray:
    """Closure mask for row-spans expressed in representative coordinates."""
    m = mats.astype(np.int64)
    T = np.tensordot(m, struct, axes=([2], [0])) % p       # (M, r, k, k)
    P = np.matmul(m[:, None, :, :], T) % p                 # (M, r, r, k)
    for i, c in enumerate(pivots):
        coef = P[..., c].copy()
        P = (P - coef[..., None] * m[:, None, None, i, :]) % p
    return (P == 0).all(axis=(1, 2, 3))


def labels_inside(space: Subspace) -> set[OrbitLabel]:
    """Labels of every proper nonzero subalgebra of a closed subspace."""
    p, k = space.p, space.dim
    struct = _rep_struct(space)
    basis = np.array(space.rows, dtype=np.int64)           # (k, 8)
    found: set[OrbitLabel] = set()
    for r in range(1, k):
        for piv in itertools.combinations(range(k), r):
            total = p ** len(free_positions(piv, k))
            for start in range(0, total, _BLOCK):
                mats = pivot_block(piv, p, k, start, min(total, start + _BLOCK))
                mask = _closed_mask_rel(mats, piv, struct, p)
                for m in mats[mask]:
                    amb = (m @ basis) % p
                    sub = span([tuple(map(int, row)) for row in amb], p)
                    found.add(classify(sub, trust_closed=True))
    return found


def build_lattice(p: int) -> LatticeGraph:
    """Compute the label-inclusion lattice over F_p and reduce to covers."""
    contains: dict[OrbitLabel, set[OrbitLabel]] = {}
    records = {}
    for lab in GRAPH_LABELS:
        space = rep(lab, p)
        rec = record_for(space, trust_closed=True)
        if rec.label is not lab:
            raise AssertionError(f"representative of {lab.value} classified "
                                 f"as {rec.label.value}")
        records[lab] = rec
        inside = labels_inside(space)
        inside.discard(OrbitLabel.Zero)
        inside.discard(lab)
        contains[lab] = inside
    for y, xs in contains.items():
        for z in xs:
            if not contains[z] <= xs:
                raise AssertionError(
                    f"containment not transitive at {z.value} inside {y.value}")
    edges = []
    for y, xs in contains.items():
        for x in xs:
            if not any(x in contains[z] for z in xs):
                edges.append((x, y))
    not_maximal = set().union(*contains.values()) if contains else set()
    nodes = tuple(LatticeNode(lab, LABEL_DIM[lab],
                              records[lab].totally_singular,
                              records[lab].associative,
                              records[lab].commutative,
                              lab not in not_maximal)
                  for lab in GRAPH_LABELS)
    edges.sort(key=lambda e: (LABEL_DIM[e[0]], e[0].value,
                              LABEL_DIM[e[1]], e[1].value))
    return LatticeGraph(p, nodes, tuple(edges))


def _dot_bool(b: bool) -> str:
    return "true" if b else "false"


def emit_dot(graph: LatticeGraph) -> str:
    """Deterministic Graphviz digraph; byte-stable for a fixed graph.

    Styling: grey font marks totally singular (equivalently, non-unital)
    labels, double pen width marks labels maximal among proper subalgebras;
    all four flags are also emitted as machine-readable attributes.
    """
    lines = [f"digraph subalgebra_lattice_f{graph.p} {{",
             "  rankdir=BT;",
             "  node [shape=box, fontname=\"Helvetica\"];"]
    for n in graph.nodes:
        font = "gray40" if n.totally_singular else "black"
        pen = 2 if n.maximal else 1
        lines.append(
            f'  "{n.label.value}" [label="{n.label.value}\\ndim {n.dim}", '
            f"fontcolor={font}, penwidth={pen}, "
            f"singular={_dot_bool(n.totally_singular)}, "
            f"assoc={_dot_bool(n.associative)}, "
            f"comm={_dot_bool(n.commutative)}, "
            f"maximal={_dot_bool(n.maximal)}];")
    for a, b in graph.edges:
        lines.append(f'  "{a.value}" -> "{b.value}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_json(graph: LatticeGraph) -> str:
    """Deterministic JSON: {nodes: [{label, dim, flags}], edges: [[X, Y]]}."""
    obj = {
        "nodes": [{"label": n.label.value, "dim": n.dim,
                   "flags": n.flags_dict()} for n in graph.nodes],
        "edges": [[a.value, b.value] for a, b in graph.edges],
    }
    return json.dumps(obj, indent=2) + "\n"
