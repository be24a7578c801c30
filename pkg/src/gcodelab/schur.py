"""Componentwise (Schur) products and powers of G-codes.

The product of two ideals is the span of the pairwise componentwise products
of their basis rows; it is an ideal again, and its dimension obeys

    dim (C * C') <= min(n, k*k' - binom(dim(C intersect C'), 2)),

which is asserted on every product.  Powers C, C*C, (C*C)*C, ... have
non-decreasing dimension; the chain report records the dimension profile,
the first index where the dimension goes flat, and the eventual behaviour of
the codes themselves, which may be a fixed code or (away from F_2) a cycle
of constant-dimension codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import gcode, linalg
from .errors import VerificationError
from .gcode import GCode
from .groups import Subgroup, is_subgroup

__all__ = [
    "schur_product",
    "schur_power_chain",
    "fixed_point_structure",
    "binary_chain_monotone_check",
    "SchurChainReport",
]


def schur_product(a: GCode, b: GCode) -> GCode:
    """Span of the pairwise componentwise products of basis rows."""
    if a.group is not b.group and not np.array_equal(a.group.table, b.group.table):
        raise ValueError("codes live over different groups")
    if a.field != b.field:
        raise ValueError(f"modulus mismatch: {a.field.p} vs {b.field.p}")
    n = a.length
    p = a.field.p
    rows = (a.basis.matrix[:, None, :] * b.basis.matrix[None, :, :]).reshape(-1, n) % p
    out = GCode(a.group, linalg.rref(rows, a.field, width=n))
    meet = linalg.subspace_intersect(a.basis, b.basis).dim
    cap = min(n, a.dim * b.dim - meet * (meet - 1) // 2)
    if a.dim and b.dim and out.dim > cap:
        raise VerificationError(
            f"product dimension {out.dim} exceeds the bound {cap}"
        )
    return out


@dataclass
class SchurChainReport:
    """Profile of the power chain of a code.

    dims[t-1] is the dimension of the t-th power, recorded up to the point
    where the chain provably repeats.  `regularity` is the first index whose
    dimension already equals the eventual one.  `period` is the cycle length
    of the codes themselves (1 means a genuine fixed code, in which case
    `stabilized_code` holds it and, when extraction succeeded,
    `stabilizer_subgroup` holds the subgroup it is induced from).
    """

    dims: list[int]
    regularity: int | None
    period: int | None
    stabilized_code: GCode | None
    stabilizer_subgroup: Subgroup | None
    complete: bool
    codes: list[GCode] = dc_field(repr=False, default_factory=list)


def schur_power_chain(code: GCode, max_t: int | None = None) -> SchurChainReport:
    """Iterate t -> t+1 powers until the code sequence repeats.

    Over F_2 the chain must end in a fixed code induced from a subgroup that
    contains the starting code; both facts are verified here.  If max_t runs
    out first, a partial report is returned with complete=False.
    """
    if code.is_zero():
        raise ValueError("power chain needs a nonzero code")
    if max_t is None:
        max_t = 2 * code.length + 4
    codes = [code]
    seen = {code.key(): 1}
    dims = [code.dim]
    cycle_start: int | None = None
    period: int | None = None
    while len(codes) < max_t:
        nxt = schur_product(codes[-1], code)
        if nxt.dim < codes[-1].dim:
            raise VerificationError("power dimension decreased along the chain")
        t = len(codes) + 1
        prev = seen.get(nxt.key())
        if prev is not None:
            cycle_start = prev
            period = t - prev
            break
        seen[nxt.key()] = t
        codes.append(nxt)
        dims.append(nxt.dim)
    if cycle_start is None:
        return SchurChainReport(dims, None, None, None, None, False, codes)

    final_dim = dims[-1]
    regularity = next(i + 1 for i, d in enumerate(dims) if d == final_dim)
    stabilized = None
    stabilizer = None
    if period == 1:
        stabilized = codes[-1]
        stabilizer = fixed_point_structure(stabilized)
        if code.field.p == 2 and not code.issubset(stabilized):
            raise VerificationError(
                "binary chain stabilized to a code not containing the start"
            )
    return SchurChainReport(
        dims, regularity, period, stabilized, stabilizer, True, codes
    )


def fixed_point_structure(code: GCode) -> Subgroup:
    """Recover the subgroup a Schur-fixed code is induced from.

    Takes the first minimum-weight codeword, translates it so its support
    contains the identity, and checks that the support is a subgroup whose
    coset-indicator span equals the code.  Any structural failure past the
    precondition is a bug, so it raises VerificationError rather than
    returning a sentinel.
    """
    if code.is_zero():
        raise ValueError("the zero code has no fixed-point structure")
    if schur_product(code, code) != code:
        raise ValueError("code is not fixed under its own Schur square")
    group = code.group
    word = code.min_weight_codeword()
    h = min(word.support())
    word = word.right_translate(int(group.inverse[h]))
    members = sorted(word.support())
    if not is_subgroup(group, members):
        raise VerificationError(
            "support of the normalized minimum-weight codeword is not a subgroup"
        )
    sub = Subgroup(group, members)
    induced = gcode.trivial_induced(group, code.field, sub)
    if induced != code:
        raise VerificationError("code differs from the induced span it should equal")
    return sub


def binary_chain_monotone_check(code: GCode, max_t: int | None = None) -> dict:
    """Over F_2: squaring fixes coefficient vectors, the code sits inside its
    Schur square, and the 2-power subsequence of the chain is ascending."""
    if code.field.p != 2:
        raise ValueError("this check is specific to the binary field")
    if code.is_zero():
        raise ValueError("needs a nonzero code")
    square = schur_product(code, code)
    # c * c = c entrywise over F_2, so injectivity of squaring is immediate;
    # the content is that every basis row lies in the square.
    square_contains_code = square.basis.contains_rows(code.basis.matrix)
    chain = schur_power_chain(code, max_t=max_t)
    tower_ok = True
    i = 0
    while chain.complete and 2 ** (i + 1) <= len(chain.codes):
        lo = chain.codes[2**i - 1]
        hi = chain.codes[2 ** (i + 1) - 1]
        if not lo.issubset(hi):
            tower_ok = False
        i += 1
    verdict = {
        "square_contains_code": bool(square_contains_code),
        "power_tower_ascending": bool(tower_ok),
        "chain_complete": chain.complete,
        "ok": bool(square_contains_code and tower_ok and chain.complete),
    }
    if not verdict["ok"]:
        raise VerificationError(f"binary monotonicity failed: {verdict}")
    return verdict
