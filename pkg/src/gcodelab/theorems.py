"""Verifiers and witness extractors for the structure theory of G-codes.

Every function here either certifies a structural statement on a concrete
instance (returning witnesses/verdicts) or raises VerificationError when a
guaranteed property fails, which signals a bug rather than a data condition.
The verify_* drivers run exhaustive sweeps over all generators f of cyclic
ideals and aggregate failures into deterministic reports; they are the
machine-checkable form of the structure results.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import gcode as gc
from . import linalg, schur
from .errors import UnsupportedCover, VerificationError
from .ffield import PrimeField
from .galg import AlgElem
from .gcode import GCode
from .groups import Group, Subgroup, is_p_group, is_subgroup, normal_p_complement, p_part

_SWEEP_CHUNK = 1 << 12


class UncertaintyResult(NamedTuple):
    weight: int
    rank: int
    cover_rank: int
    length: int


def greedy_support_rank(
    group: Group, support, order: Sequence[int] | None = None
) -> tuple[int, list[int]]:
    """Greedy escape sequence for the translates of a support set.

    Walks `order` and keeps g whenever (support)g escapes the union of the
    translates kept so far.  The kept sequence has escape length t, the union
    covers the whole group, and t >= ceil(|G| / |support|).
    """
    supp = sorted({int(s) for s in support})
    if not supp:
        raise ValueError("support must be nonempty")
    n = group.order
    if order is None:
        order = range(n)
    order = [int(g) for g in order]
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of all element indices")
    supp_arr = np.array(supp, dtype=np.int64)
    covered = np.zeros(n, dtype=bool)
    seq: list[int] = []
    for g in order:
        translate = group.table[supp_arr, g]
        if not covered[translate].all():
            covered[translate] = True
            seq.append(g)
    if not covered.all():
        raise VerificationError("greedy pass failed to cover the group")
    t = len(seq)
    if t * len(supp) < n:
        raise VerificationError("greedy sequence shorter than the covering bound")
    return t, seq


def uncertainty_check(f: AlgElem, order: Sequence[int] | None = None) -> UncertaintyResult:
    """Support size times multiplication rank is at least the group order,
    and the rank dominates the greedy escape length of the support."""
    if f.is_zero():
        raise ValueError("the zero element carries no support bound")
    n = f.group.order
    w = f.weight()
    rho = linalg.rank(f.multiplication_matrix(), f.field)
    t, _ = greedy_support_rank(f.group, f.support(), order)
    if rho < t:
        raise VerificationError(f"rank {rho} below greedy escape length {t}")
    if w * rho < n:
        raise VerificationError(f"support-rank product {w * rho} below {n}")
    return UncertaintyResult(w, rho, t, n)


@dataclass(frozen=True)
class EqualityWitness:
    """Certificate that a code meets the distance-dimension bound exactly:
    the subgroup carrying the minimum-weight support, a generator supported
    on it, and (when the distance is invertible in the field) an idempotent
    generator."""

    subgroup: Subgroup
    generator: AlgElem
    idempotent: AlgElem | None


def equality_analysis(
    code: GCode, guard: int | None = None, threads: int = 1
) -> EqualityWitness | None:
    """Extract the subgroup structure of a code with d*k = |G|.

    Returns None when d*k > |G|.  Otherwise: translates a minimum-weight
    codeword so its support H contains the identity, then certifies that H
    is a subgroup, the code is generated by the translated word c, the ideal
    cKH is one-dimensional, and (over a p-group in characteristic p) the code
    is the induced span of H-coset indicators.
    """
    if code.is_zero():
        raise ValueError("equality analysis needs a nonzero code")
    group, field = code.group, code.field
    n, k = code.length, code.dim
    d = code.min_distance(guard=guard, threads=threads)
    if d * k != n:
        if d * k < n:
            raise VerificationError("distance-dimension product fell below length")
        return None
    word = code.min_weight_codeword(guard=guard, threads=threads)
    h0 = min(word.support())
    c = word.right_translate(int(group.inverse[h0]))
    members = sorted(c.support())
    if not is_subgroup(group, members):
        raise VerificationError("minimum-weight support is not a subgroup")
    sub = Subgroup(group, members)
    if len(sub) != d:
        raise VerificationError("support size differs from the minimum distance")
    regenerated = gc.ideal_from_generators(group, field, [c])
    if regenerated != code:
        raise VerificationError("minimum-weight word fails to regenerate the code")
    if _restricted_rank(c, sub) != 1:
        raise VerificationError("restriction of the generator ideal is not a line")
    if is_p_group(group, field.p):
        if gc.trivial_induced(group, field, sub) != code:
            raise VerificationError(
                "p-group equality code is not the induced indicator span"
            )
    e = idempotent_generator(code, sub, c)
    return EqualityWitness(sub, c, e)


def _restricted_rank(c: AlgElem, sub: Subgroup) -> int:
    """Rank of multiplication by c on the subalgebra spanned by sub."""
    group = c.group
    mem = list(sub.members)
    cols = []
    for b in mem:
        cols.append(c.right_translate(b).coeffs[mem])
    return linalg.rank(np.array(cols, dtype=np.int64).T, c.field)


def idempotent_generator(code: GCode, sub: Subgroup, c: AlgElem) -> AlgElem | None:
    """Idempotent generator of the code, existing exactly when the field
    characteristic does not divide the subgroup order.

    The square of the generator is a scalar multiple mu * c; when p divides
    |H| that scalar must vanish (or an idempotent generator would exist),
    and otherwise e = mu^{-1} c is the idempotent.
    """
    field = code.field
    cc = c.convolve(c)
    pos = min(c.support())
    mu = field.mul(int(cc.coeffs[pos]), field.inv(int(c.coeffs[pos])))
    if cc != c.scale(mu):
        raise VerificationError("generator square left the line it generates")
    if len(sub) % field.p == 0:
        if mu != 0:
            raise VerificationError(
                "nonzero square scalar would yield a forbidden idempotent"
            )
        return None
    if mu == 0:
        raise VerificationError("semisimple restriction produced a nilpotent line")
    e = c.scale(field.inv(mu))
    if e.convolve(e) != e:
        raise VerificationError("candidate idempotent fails e*e = e")
    if gc.ideal_from_generators(code.group, field, [e]) != code:
        raise VerificationError("idempotent generates a different ideal")
    return e


@dataclass(frozen=True)
class ProjectiveCoverResult:
    """The cover of the trivial module inside the algebra, with the case that
    produced it: semisimple (p coprime to |G|), p-group (whole algebra), or
    p-nilpotent (induced from a normal p-complement)."""

    code: GCode
    method: str


def projective_cover_trivial(group: Group, field: PrimeField) -> ProjectiveCoverResult:
    p = field.p
    if group.order % p != 0:
        cover = gc.trivial_induced(group, field, Subgroup(group, range(group.order)))
        method = "semisimple"
    elif is_p_group(group, p):
        cover = gc.full_algebra(group, field)
        method = "p-group"
    else:
        comp = normal_p_complement(group, p)
        if comp is None:
            raise UnsupportedCover(
                f"no computable cover for {group.name} at p={p}: "
                "not semisimple, not a p-group, no normal p-complement"
            )
        cover = gc.trivial_induced(group, field, comp)
        method = "p-nilpotent"
    sums = cover.basis.matrix.sum(axis=1) % p
    if cover.dim and not np.any(sums):
        raise VerificationError("cover collapsed into the augmentation kernel")
    return ProjectiveCoverResult(cover, method)


def schur_square_theorem_check(code: GCode) -> dict:
    """Check every applicable statement tying the Schur square to
    self-orthogonality; returns the fired clauses."""
    if code.is_zero():
        raise ValueError("needs a nonzero code")
    group, field = code.group, code.field
    n, k, p = code.length, code.dim, code.field.p
    square = schur.schur_product(code, code)
    so = code.is_self_orthogonal()
    pgrp = is_p_group(group, p)
    clauses: list[str] = []
    if not so:
        clauses.append("cover_dim_lower_bound")
        if square.dim < p_part(group, p):
            raise VerificationError(
                f"square dimension {square.dim} below the p-part {p_part(group, p)}"
            )
        if pgrp:
            clauses.append("p_group_square_full")
            if square.dim != n:
                raise VerificationError("non-self-orthogonal square is not everything")
    else:
        clauses.append("self_orthogonal_square_proper")
        if square.dim >= n:
            raise VerificationError("self-orthogonal square filled the algebra")
    if pgrp and k * (k + 1) < 2 * n:
        clauses.append("small_dim_forces_self_orthogonal")
        if not so:
            raise VerificationError(
                f"dimension {k} is below the self-orthogonality threshold yet "
                "the code is not self-orthogonal"
            )
    return {
        "self_orthogonal": so,
        "square_dim": square.dim,
        "clauses": clauses,
        "ok": True,
    }


def solv_check(code: GCode) -> dict:
    """Binary biconditional between "the square is the trivial cover" and
    "the code lies inside the cover".

    Applies to codes that are not self-orthogonal (self-orthogonal inputs are
    reported as inapplicable, not asserted: the all-ones span sits inside the
    cover with a strictly smaller square).
    """
    if code.field.p != 2:
        raise ValueError("this biconditional is specific to the binary field")
    cover = projective_cover_trivial(code.group, code.field)
    p0 = cover.code
    square_is_cover = schur.schur_product(code, code) == p0
    code_in_cover = code.issubset(p0)
    applicable = not code.is_self_orthogonal()
    if applicable and square_is_cover != code_in_cover:
        raise VerificationError(
            f"biconditional failed: square_is_cover={square_is_cover}, "
            f"code_in_cover={code_in_cover}"
        )
    return {
        "cover_method": cover.method,
        "applicable": applicable,
        "square_is_cover": square_is_cover,
        "code_in_cover": code_in_cover,
        "ok": True,
    }


# --- exhaustive sweeps -------------------------------------------------------
#
# Sweeps enumerate every f in F_p^G (little-endian digits of the index) and
# work on bit-packed translate supports: with W[s, j] = 2^(table[s, j]) the
# matrix product (support indicators) @ W yields, per f and per j, the support
# mask of f * g_j.  Distinct supports never collide inside one translate, so
# OR equals SUM and one integer matmul replaces the inner loops.


def _translate_weights(group: Group) -> np.ndarray:
    if group.order > 62:
        raise ValueError("bit-packed sweeps support orders up to 62")
    return np.int64(1) << group.table.astype(np.int64)


def _digit_divisors(n: int, p: int) -> np.ndarray:
    return p ** np.arange(n, dtype=np.int64)


def _chunk_ranges(total: int, chunk: int = _SWEEP_CHUNK) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk, total)) for lo in range(1, total, chunk)]


def _run_chunks(work, ranges, threads: int) -> list:
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(work, ranges))
    return [work(r) for r in ranges]


def _greedy_from_masks(masks: list[int], order: Sequence[int], full: int) -> int:
    covered = 0
    t = 0
    for g in order:
        m = masks[g]
        if m & ~covered:
            covered |= m
            t += 1
    if covered != full:
        raise VerificationError("mask pass failed to cover the group")
    return t


def verify_uncertainty(
    group: Group,
    field: PrimeField,
    threads: int = 1,
    shuffle_seed: int = 0,
    crosscheck_stride: int = 997,
    sample: int | None = None,
    sample_seed: int = 0,
) -> dict:
    """Sweep all nonzero f: support size times ideal dimension reaches |G|,
    and both greedy escape lengths stay below the rank.

    Every crosscheck_stride-th f is re-verified through the public
    uncertainty_check path (full matrix rank) as an internal consistency
    audit of the packed fast path.
    """
    n, p = group.order, field.p
    W = _translate_weights(group)
    divs = _digit_divisors(n, p)
    full = (1 << n) - 1
    natural = list(range(n))
    shuffled = [int(x) for x in np.random.default_rng(shuffle_seed).permutation(n)]
    idx_mat = None
    if p != 2:
        idx_mat = group.table[:, group.inverse].T.copy()  # row j: x -> x * inv(g_j)

    def work(bounds: tuple[int, int]) -> tuple[int, list[dict]]:
        lo, hi = bounds
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = (idx[:, None] // divs) % p
        bits = (digits != 0).astype(np.int64)
        weights = bits.sum(axis=1)
        col_masks = bits @ W
        failures: list[dict] = []
        for t_local in range(hi - lo):
            fidx = lo + t_local
            masks = col_masks[t_local].tolist()
            w = int(weights[t_local])
            try:
                if p == 2:
                    rho = linalg.f2_rank(masks)
                else:
                    translates = digits[t_local][idx_mat]
                    rho = linalg.rank(translates, field)
                t_nat = _greedy_from_masks(masks, natural, full)
                t_shuf = _greedy_from_masks(masks, shuffled, full)
                if rho < t_nat or rho < t_shuf:
                    raise VerificationError(
                        f"rank {rho} below greedy lengths {t_nat}/{t_shuf}"
                    )
                if w * rho < n:
                    raise VerificationError(f"product {w * rho} below {n}")
                if fidx % crosscheck_stride == 0:
                    f = AlgElem(group, field, digits[t_local])
                    ref = uncertainty_check(f)
                    if (ref.weight, ref.rank) != (w, rho):
                        raise VerificationError(
                            f"fast path disagrees with matrix path: "
                            f"{(w, rho)} vs {(ref.weight, ref.rank)}"
                        )
            except VerificationError as exc:
                failures.append({"f": fidx, "reason": str(exc)})
        return hi - lo, failures

    if sample is None:
        ranges = _chunk_ranges(p**n)
        results = _run_chunks(work, ranges, threads)
    else:
        rng = np.random.default_rng(sample_seed)
        picks = np.sort(
            rng.integers(1, p**n, size=sample, dtype=np.int64)
        )
        results = [work((int(i), int(i) + 1)) for i in picks]
    checked = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    return {"group": group.name, "p": p, "checked": checked, "failures": failures}


def enumerate_cyclic_ideals(
    group: Group,
    field: PrimeField,
    threads: int = 1,
    sample: int | None = None,
    sample_seed: int = 0,
) -> list[tuple[int, GCode]]:
    """Deduplicated single-generator ideals, tagged by the smallest generator
    index, in order of first appearance."""
    n, p = group.order, field.p
    divs = _digit_divisors(n, p)
    idx_mat = group.table[:, group.inverse].T.copy()

    if p == 2:
        W = _translate_weights(group)

        def work(bounds: tuple[int, int]) -> dict[tuple, int]:
            lo, hi = bounds
            idx = np.arange(lo, hi, dtype=np.int64)
            bits = ((idx[:, None] >> np.arange(n)) & 1).astype(np.int64)
            col_masks = bits @ W
            found: dict[tuple, int] = {}
            for t_local in range(hi - lo):
                key = linalg.f2_rref(col_masks[t_local].tolist())
                if key not in found:
                    found[key] = lo + t_local
            return found

    else:

        def work(bounds: tuple[int, int]) -> dict[bytes, tuple[int, np.ndarray]]:
            lo, hi = bounds
            idx = np.arange(lo, hi, dtype=np.int64)
            digits = (idx[:, None] // divs) % p
            found: dict[bytes, tuple[int, np.ndarray]] = {}
            for t_local in range(hi - lo):
                basis = linalg.rref(digits[t_local][idx_mat], field)
                key = basis.key()
                if key not in found:
                    found[key] = (lo + t_local, basis.matrix)
            return found

    if sample is None:
        ranges = _chunk_ranges(p**n)
    else:
        rng = np.random.default_rng(sample_seed)
        picks = sorted(
            int(i) for i in rng.integers(1, p**n, size=sample, dtype=np.int64)
        )
        ranges = [(i, i + 1) for i in picks]
    results = _run_chunks(work, ranges, threads)

    merged: dict = {}
    for part in results:
        for key, val in part.items():
            if key not in merged or _first_index(val) < _first_index(merged[key]):
                merged[key] = val
    out: list[tuple[int, GCode]] = []
    for key, val in sorted(merged.items(), key=lambda kv: _first_index(kv[1])):
        if p == 2:
            rows = linalg.f2_rows_to_matrix(list(key), n)
            pivots = [int(m & -m).bit_length() - 1 for m in key]
            basis = linalg.RowBasis(rows, pivots, field)
            out.append((_first_index(val), GCode(group, basis)))
        else:
            basis = linalg.rref(val[1], field, width=n)
            out.append((val[0], GCode(group, basis)))
    return out


def _first_index(val) -> int:
    return val if isinstance(val, int) else val[0]


def verify_bound(
    group: Group, field: PrimeField, threads: int = 1, guard: int | None = None
) -> dict:
    """Every cyclic ideal satisfies the product and sum bounds; over a binary
    2-group every proper ideal has even minimum distance."""
    ideals = enumerate_cyclic_ideals(group, field, threads=threads)
    failures: list[dict] = []
    even_rule = field.p == 2 and is_p_group(group, 2)
    for fidx, code in ideals:
        try:
            rep = code.params(guard=guard, threads=threads)
            if even_rule and code.dim < group.order and rep.distance % 2 != 0:
                raise VerificationError(
                    f"proper binary 2-group ideal has odd distance {rep.distance}"
                )
        except VerificationError as exc:
            failures.append({"f": fidx, "reason": str(exc)})
    return {
        "group": group.name,
        "p": field.p,
        "checked": len(ideals),
        "failures": failures,
    }


def verify_equality(
    group: Group, field: PrimeField, threads: int = 1, guard: int | None = None
) -> dict:
    """The equality witnesses exist exactly on the d*k = |G| ideals, induced
    spans round-trip, and idempotents appear exactly off the characteristic."""
    ideals = enumerate_cyclic_ideals(group, field, threads=threads)
    failures: list[dict] = []
    for fidx, code in ideals:
        try:
            rep = code.params(guard=guard, threads=threads)
            witness = equality_analysis(code, guard=guard, threads=threads)
            if (witness is not None) != rep.equality:
                raise VerificationError(
                    f"witness presence {witness is not None} mismatches "
                    f"equality flag {rep.equality}"
                )
            if witness is not None:
                induced = gc.trivial_induced(group, field, witness.subgroup)
                if not induced.params(guard=guard).equality:
                    raise VerificationError("induced code misses the bound")
                has_e = witness.idempotent is not None
                if has_e != (rep.distance % field.p != 0):
                    raise VerificationError(
                        "idempotent presence disagrees with the distance residue"
                    )
        except VerificationError as exc:
            failures.append({"f": fidx, "reason": str(exc)})
    return {
        "group": group.name,
        "p": field.p,
        "checked": len(ideals),
        "failures": failures,
    }


_PAIRWISE_PRODUCT_CAP = 8  # group order up to which all ideal pairs are multiplied


def verify_schur(
    group: Group, field: PrimeField, threads: int = 1, guard: int | None = None
) -> dict:
    """Schur-square clauses on every cyclic ideal, fixed-point extraction on
    the Schur-fixed ones, chain stabilization over F_2, and (on small groups)
    closure of every pairwise product."""
    ideals = enumerate_cyclic_ideals(group, field, threads=threads)
    failures: list[dict] = []
    for fidx, code in ideals:
        try:
            schur_square_theorem_check(code)
            square = schur.schur_product(code, code)
            if square == code:
                sub = schur.fixed_point_structure(code)
                if len(sub) * code.dim != group.order:
                    raise VerificationError(
                        "Schur-fixed code misses the product equality"
                    )
            if field.p == 2:
                chain = schur.schur_power_chain(code)
                if not chain.complete or chain.period != 1:
                    raise VerificationError("binary chain failed to stabilize")
                schur.binary_chain_monotone_check(code)
        except VerificationError as exc:
            failures.append({"f": fidx, "reason": str(exc)})
    pair_checked = 0
    if group.order <= _PAIRWISE_PRODUCT_CAP:
        for i, (fi, a) in enumerate(ideals):
            for fj, b in ideals[i:]:
                try:
                    schur.schur_product(a, b)  # closure asserted at construction
                except (VerificationError, ValueError) as exc:
                    failures.append(
                        {"f": (fi, fj), "reason": f"pairwise product: {exc}"}
                    )
                pair_checked += 1
    return {
        "group": group.name,
        "p": field.p,
        "checked": len(ideals) + pair_checked,
        "failures": failures,
    }


def verify_all(
    group: Group, field: PrimeField, threads: int = 1, guard: int | None = None
) -> dict:
    sections = {
        "uncertainty": verify_uncertainty(group, field, threads=threads),
        "bound": verify_bound(group, field, threads=threads, guard=guard),
        "equality": verify_equality(group, field, threads=threads, guard=guard),
        "schur": verify_schur(group, field, threads=threads, guard=guard),
    }
    failures = [
        dict(section=name, **f) for name, rep in sections.items() for f in rep["failures"]
    ]
    return {
        "group": group.name,
        "p": field.p,
        "checked": sum(rep["checked"] for rep in sections.values()),
        "failures": failures,
        "sections": sections,
    }
