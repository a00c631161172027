"""Exhaustive subalgebra census: scan every subspace, keep the closed ones.

The scan walks subspaces partitioned by pivot-column set (deterministic
order), tests multiplicative closure for a whole partition at once with
numpy, and builds full invariant records only for the survivors.  Over F_2
the product of two packed rows is one uint8 table lookup, so the complete
417,199-subspace scan takes seconds.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import DIM, algebra
from .classify import OrbitLabel, SubalgebraRecord, record_for
from .subspace import (Subspace, free_positions, full_space, gaussian_binomial,
                       pivot_block, zero_space)


class CostLimitExceeded(RuntimeError):
    """Projected scan size exceeds the configured subspace budget."""


_BLOCK = 1 << 13


def _closed_block_mask_f2(mats: np.ndarray, pivots: tuple[int, ...]) -> np.ndarray:
    """Boolean mask of multiplicatively closed row-spans, p = 2 byte path."""
    ctx = algebra(2)
    weights = (1 << np.arange(DIM)).astype(np.int64)
    B = (mats.astype(np.int64) * weights).sum(-1).astype(np.uint8)    # (M, k)
    P = ctx.mul_byte[B[:, :, None], B[:, None, :]].copy()             # (M, k, k)
    for i, c in enumerate(pivots):
        bit = (P >> c) & 1
        P ^= bit * B[:, i, None, None]
    return (P == 0).all(axis=(1, 2))


def _closed_block_mask_generic(mats: np.ndarray, pivots: tuple[int, ...], p: int) -> np.ndarray:
    """Boolean mask of closed row-spans for any p (batched matmul)."""
    ctx = algebra(p)
    C = ctx.struct.astype(np.int64)                                   # (8,8,8)
    m = mats.astype(np.int64)                                         # (M, k, 8)
    k = m.shape[1]
    # T[m,i,b,c] = sum_a rows[m,i,a] C[a,b,c]
    T = np.tensordot(m, C, axes=([2], [0])) % p                       # (M, k, 8, 8)
    # P[m,i,j,c] = sum_b rows[m,j,b] T[m,i,b,c]
    P = np.matmul(m[:, None, :, :], T) % p                            # (M, k, k, 8)
    for i, c in enumerate(pivots):
        coef = P[..., c].copy()
        P = (P - coef[..., None] * m[:, None, None, i, :]) % p
    return (P == 0).all(axis=(1, 2, 3))


def closed_block_mask(mats: np.ndarray, pivots: tuple[int, ...], p: int) -> np.ndarray:
    if p == 2:
        return _closed_block_mask_f2(mats, pivots)
    return _closed_block_mask_generic(mats, pivots, p)


def _scan_partition(args) -> tuple[tuple[int, ...], list[tuple[tuple[int, ...], ...]], int]:
    """Scan one pivot partition; return (pivots, closed row tuples, scanned)."""
    pivots, p = args
    total = p ** len(free_positions(pivots))
    closed_rows: list[tuple[tuple[int, ...], ...]] = []
    for start in range(0, total, _BLOCK):
        stop = min(start + _BLOCK, total)
        mats = pivot_block(pivots, p, DIM, start, stop)
        mask = closed_block_mask(mats, pivots, p)
        for m in mats[mask]:
            closed_rows.append(tuple(map(tuple, m.tolist())))
    return pivots, closed_rows, total


def enumerate_subalgebras(p: int, dims=None, *, max_subspaces: int | None = 2_000_000,
                          threads: int = 1, trust_closed: bool = True
                          ) -> list[SubalgebraRecord]:
    """Every multiplicatively closed subspace of the requested dimensions,
    as fully classified records, in deterministic scan order.

    ``max_subspaces`` bounds the projected number of subspaces visited
    (None disables the check); exceeding it raises CostLimitExceeded
    before any work is done.
    """
    dims = tuple(sorted(set(range(DIM + 1) if dims is None else dims)))
    assert all(0 <= d <= DIM for d in dims)
    projected = sum(gaussian_binomial(DIM, k, p) for k in dims)
    if max_subspaces is not None and projected > max_subspaces:
        raise CostLimitExceeded(
            f"projected {projected} subspaces exceeds budget {max_subspaces}; "
            "raise --max-subspaces to proceed")
    records: list[SubalgebraRecord] = []
    for k in dims:
        if k == 0:
            records.append(record_for(zero_space(p), trust_closed=True))
            continue
        if k == DIM:
            records.append(record_for(full_space(p), trust_closed=True))
            continue
        partitions = [(piv, p) for piv in itertools.combinations(range(DIM), k)]
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_scan_partition, partitions))
        else:
            results = [_scan_partition(a) for a in partitions]
        for pivots, closed_rows, _count in results:
            for rows in closed_rows:
                space = Subspace(rows, p, DIM)
                records.append(record_for(space, trust_closed=trust_closed))
    return records


@dataclass
class CensusSummary:
    """Per-(dimension, label) counts plus integrity tallies."""

    p: int
    scanned_dims: tuple[int, ...]
    closed_count: int
    counts: dict = dc_field(default_factory=dict)   # (dim, label str) -> int
    unlabeled: int = 0

    def count(self, dim: int, label: OrbitLabel) -> int:
        return self.counts.get((dim, label.value), 0)

    def dim_total(self, dim: int) -> int:
        return sum(v for (d, _), v in self.counts.items() if d == dim)

    def to_json_dict(self) -> dict:
        items = sorted(self.counts.items())
        return {
            "field": self.p,
            "dims": list(self.scanned_dims),
            "closed": self.closed_count,
            "unlabeled": self.unlabeled,
            "counts": [{"dim": d, "label": lab, "count": n} for (d, lab), n in items],
        }


def census_report(records) -> CensusSummary:
    """Aggregate records into per-(dim, label) counts; unlabeled must be 0."""
    records = list(records)
    if not records:
        return CensusSummary(p=0, scanned_dims=(), closed_count=0)
    summary = CensusSummary(
        p=records[0].space.p,
        scanned_dims=tuple(sorted({r.dim for r in records})),
        closed_count=len(records),
    )
    for r in records:
        if r.label is None:
            summary.unlabeled += 1
            continue
        key = (r.dim, r.label.value)
        summary.counts[key] = summary.counts.get(key, 0) + 1
    return summary


def write_jsonl(records, fh) -> int:
    """Write one JSON object per record; returns the number written."""
    n = 0
    for r in records:
        fh.write(json.dumps(r.to_json_dict(), separators=(", ", ": ")) + "\n")
        n += 1
    return n
