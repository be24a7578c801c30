"""Named code families: binary evaluation codes of bounded degree over
elementary abelian 2-groups, and a seeded search for a [24,12,8] self-dual
ideal in the binary algebra of the symmetric group on four letters.

The evaluation-point order is the group's element order, so the degree-r
code is literally an ideal (translation substitutes x -> x + a, which
preserves degree), not merely equivalent to one.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import gcode as gc
from . import linalg, schur
from .errors import VerificationError
from .ffield import PrimeField
from .galg import AlgElem
from .gcode import GCode
from .groups import make_elementary_abelian, make_symmetric

_RM_MAX_VARS = 6


def reed_muller(r: int, m: int) -> GCode:
    """Degree-<=r evaluation code on F_2^m as an ideal over (C_2)^m.

    Basis rows are the evaluation vectors of the monomials of degree at most
    r at all 2^m points, points ordered like the group elements (binary
    digits of the index, most significant first).
    """
    if not 0 <= r <= m:
        raise ValueError("need 0 <= r <= m")
    if m > _RM_MAX_VARS:
        raise ValueError(f"variable count capped at {_RM_MAX_VARS}")
    field = PrimeField(2)
    group = make_elementary_abelian(2, m)
    n = group.order
    idx = np.arange(n)
    points = np.zeros((n, m), dtype=np.int64)
    for j in range(m):
        points[:, j] = (idx >> (m - 1 - j)) & 1
    rows = []
    for deg in range(r + 1):
        for subset in combinations(range(m), deg):
            vec = np.ones(n, dtype=np.int64)
            for j in subset:
                vec &= points[:, j]
            rows.append(vec)
    code = GCode(group, linalg.rref(np.array(rows), field, width=n))
    expected = sum(comb(m, i) for i in range(r + 1))
    if code.dim != expected:
        raise VerificationError(
            f"monomial span has dimension {code.dim}, expected {expected}"
        )
    return code


def rm_schur_square_check(r: int, m: int) -> dict:
    """The square of the degree-r code is the degree-2r code; below the
    self-dual threshold it stays strictly inside the even-weight ideal."""
    if 2 * r > m:
        raise ValueError("need 2r <= m so the doubled order exists")
    code = reed_muller(r, m)
    square = schur.schur_product(code, code)
    doubled = reed_muller(2 * r, m)
    if square.basis != doubled.basis:
        raise VerificationError("square differs from the doubled-order code")
    verdict = {
        "square_dim": square.dim,
        "equals_doubled_order": True,
        "strict_in_even_weight": None,
    }
    if 2 * r < m - 1:
        even = gc.augmentation_ideal(code.group, code.field)
        strict = square.issubset(even) and square.dim < even.dim
        verdict["strict_in_even_weight"] = strict
        if not strict:
            raise VerificationError(
                "square failed to sit strictly inside the even-weight ideal"
            )
    return verdict


@dataclass(frozen=True)
class GolaySearchResult:
    """A verified [24,12,8] self-dual ideal plus the trial that produced it."""

    code: GCode
    trial: int
    generator: AlgElem


_GOLAY_N = 24
_GOLAY_DIM = 12
_GOLAY_DIST = 8
_SEARCH_CHUNK = 1 << 15


def golay_search(
    budget: int, seed: int, threads: int = 1
) -> GolaySearchResult | None:
    """Sample single generators f in the binary algebra of S4 and return the
    first trial whose ideal verifies as a [24,12,8] self-dual code.

    Trials draw 24-bit coefficient masks from one Philox stream keyed by the
    seed, so the outcome (and the winning trial index) depends only on
    (budget, seed); workers only split verified chunks, never the stream.
    Exhausting the budget without a hit returns None, a normal outcome.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    field = PrimeField(2)
    group = make_symmetric(4)
    n = group.order
    weights = np.int64(1) << group.table.astype(np.int64)
    rng = np.random.Generator(np.random.Philox(key=seed))

    def scan(args: tuple[int, np.ndarray]) -> tuple[int, int] | None:
        start, masks = args
        bits = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)
        col_masks = bits @ weights
        for t in range(masks.shape[0]):
            if masks[t] == 0:
                continue
            rows = col_masks[t].tolist()
            if linalg.f2_rank(rows, limit=_GOLAY_DIM) != _GOLAY_DIM:
                continue
            key = linalg.f2_rref(rows)
            matrix = linalg.f2_rows_to_matrix(list(key), n)
            pivots = [int(v & -v).bit_length() - 1 for v in key]
            code = GCode(group, linalg.RowBasis(matrix, pivots, field))
            if code.min_distance() != _GOLAY_DIST:
                continue
            return start + t, int(masks[t])
        return None

    pending: list = []
    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    hit: tuple[int, int] | None = None
    try:
        produced = 0
        while produced < budget:
            size = min(_SEARCH_CHUNK, budget - produced)
            masks = rng.integers(0, 1 << n, size=size, dtype=np.int64)
            job = (produced, masks)
            produced += size
            if pool is None:
                hit = scan(job)
                if hit is not None:
                    break
            else:
                pending.append(pool.submit(scan, job))
                if len(pending) >= 2 * threads:
                    hit = _drain_ordered(pending, len(pending) // 2)
                    if hit is not None:
                        break
        if hit is None and pool is not None:
            hit = _drain_ordered(pending, len(pending))
    finally:
        if pool is not None:
            pool.shutdown(wait=False, cancel_futures=True)
    if hit is None:
        return None
    trial, mask = hit
    gen = AlgElem(group, field, [(mask >> i) & 1 for i in range(n)])
    code = gc.ideal_from_generators(group, field, [gen])
    rep = code.params()
    if (rep.dimension, rep.distance) != (_GOLAY_DIM, _GOLAY_DIST):
        raise VerificationError("winning trial failed re-verification")
    if code.dual() != code:
        raise VerificationError("winning trial is not self-dual")
    if rep.product != _GOLAY_DIM * _GOLAY_DIST:
        raise VerificationError("parameter product mismatch")
    return GolaySearchResult(code, trial, gen)


def _drain_ordered(pending: list, count: int) -> tuple[int, int] | None:
    """Resolve the oldest futures in submission order; chunks are keyed by
    start index, so the first hit seen here is the global earliest."""
    hit = None
    for _ in range(count):
        if not pending:
            break
        result = pending.pop(0).result()
        if result is not None:
            hit = result
            break
    return hit
