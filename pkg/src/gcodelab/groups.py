"""Finite groups as validated Cayley tables.

A Group stores an n x n index table with the identity forced to index 0.
Construction audits the table: identity row/column, Latin-square property,
two-sided inverses, and full associativity (for orders up to the audit
threshold).  Element orderings are fixed per constructor and documented on
each, because downstream code identifies F_p^G with F_p^n through them.
"""

from __future__ import annotations

import json
from itertools import permutations
from math import gcd

import numpy as np

ORDER_CAP = 4096
_ASSOC_AUDIT_CAP = 200  # full n^3 associativity audit up to this order


class Group:
    """A finite group given by its Cayley table.

    table[i][j] is the index of g_i * g_j; index 0 is the identity.
    `source` records a builtin constructor spec (e.g. "cyclic:4") when one
    applies, so codes over builtin groups serialize compactly.
    """

    def __init__(self, table, labels=None, name: str = "G", source: str | None = None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("Cayley table must be square")
        n = table.shape[0]
        if n < 1 or n > ORDER_CAP:
            raise ValueError(f"group order must lie in [1, {ORDER_CAP}]")
        if np.any(table < 0) or np.any(table >= n):
            raise ValueError("table entries must be element indices")
        _audit_table(table)
        table = table.copy()
        table.setflags(write=False)
        self.table = table
        self.order = n
        self.name = name
        self.source = source
        if labels is None:
            labels = [f"g{i}" for i in range(n)]
        if len(labels) != n:
            raise ValueError("one label per element required")
        self.labels = [str(x) for x in labels]
        inv = np.argmax(table == 0, axis=1).astype(np.int64)
        if np.any(table[inv, np.arange(n)] != 0):
            raise ValueError("inverses are not two-sided")
        inv.setflags(write=False)
        self.inverse = inv
        self.element_orders = _element_orders(table)

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"


def _audit_table(table: np.ndarray) -> None:
    n = table.shape[0]
    ar = np.arange(n)
    if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
        raise ValueError("index 0 must be a two-sided identity")
    if not np.array_equal(np.sort(table, axis=1), np.tile(ar, (n, 1))):
        raise ValueError("rows must be permutations (Latin square)")
    if not np.array_equal(np.sort(table, axis=0), np.tile(ar.reshape(-1, 1), (1, n))):
        raise ValueError("columns must be permutations (Latin square)")
    if n <= _ASSOC_AUDIT_CAP:
        # (g_i g_j) g_k == g_i (g_j g_k), blocked over i to bound memory
        block = max(1, (1 << 21) // (n * n))
        for lo in range(0, n, block):
            hi = min(n, lo + block)
            left = table[table[lo:hi], :]
            right = table[lo:hi][:, table]
            if not np.array_equal(left, right):
                raise ValueError("table is not associative")


def _element_orders(table: np.ndarray) -> tuple[int, ...]:
    n = table.shape[0]
    base = np.arange(n)
    cur = base.copy()
    orders = np.zeros(n, dtype=np.int64)
    orders[0] = 1
    k = 1
    while np.any(orders == 0):
        k += 1
        cur = table[cur, base]
        orders[(orders == 0) & (cur == 0)] = k
        if k > n:
            raise ValueError("element order exceeds group order; table corrupt")
    return tuple(int(o) for o in orders)


class Subgroup:
    """A validated subgroup, stored as the sorted tuple of member indices."""

    __slots__ = ("group", "members")

    def __init__(self, group: Group, members):
        members = tuple(sorted(int(m) for m in set(members)))
        if not is_subgroup(group, members):
            raise ValueError(f"{members} is not a subgroup")
        if group.order % len(members) != 0:
            raise ValueError("subgroup order must divide the group order")
        self.group = group
        self.members = members

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __iter__(self):
        return iter(self.members)

    @property
    def index(self) -> int:
        return self.group.order // len(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group is other.group
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.members))

    def __repr__(self) -> str:
        return f"Subgroup({self.members} of {self.group.name})"


def is_subgroup(g: Group, members) -> bool:
    """Contains the identity and is closed under product and inverse."""
    mem = set(int(m) for m in members)
    if 0 not in mem:
        return False
    if any(m < 0 or m >= g.order for m in mem):
        return False
    for a in mem:
        if int(g.inverse[a]) not in mem:
            return False
        for b in mem:
            if int(g.table[a, b]) not in mem:
                return False
    return True


def subgroup_generated(g: Group, seeds) -> Subgroup:
    """Smallest subgroup containing the seeds (breadth-first closure)."""
    seeds = [int(s) for s in seeds]
    for s in seeds:
        if not 0 <= s < g.order:
            raise ValueError(f"element index {s} out of range")
    members = {0}
    frontier = [0]
    gens = sorted(set(seeds) | {int(g.inverse[s]) for s in seeds})
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(g.table[x, s])
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(g, members)


def right_cosets(g: Group, h: Subgroup) -> list[list[int]]:
    """Partition into right cosets Hx; first block is H, then by smallest
    uncovered representative."""
    if h.group is not g:
        raise ValueError("subgroup belongs to a different group")
    covered = np.zeros(g.order, dtype=bool)
    blocks: list[list[int]] = []
    mem = list(h.members)
    for rep in range(g.order):
        if covered[rep]:
            continue
        block = sorted(int(g.table[x, rep]) for x in mem)
        covered[block] = True
        blocks.append(block)
    return blocks


def p_part_int(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    if p < 2:
        raise ValueError("p must be at least 2")
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def p_part(g: Group, p: int) -> int:
    return p_part_int(g.order, p)


def is_p_group(g: Group, p: int) -> bool:
    return p_part(g, p) == g.order


def normal_p_complement(g: Group, p: int) -> Subgroup | None:
    """The subgroup of p'-elements, when the p'-elements do form a normal
    subgroup of index |G|_p; otherwise None."""
    target = g.order // p_part(g, p)
    members = [i for i in range(g.order) if gcd(g.element_orders[i], p) == 1]
    if len(members) != target or not is_subgroup(g, members):
        return None
    mem = set(members)
    for x in range(g.order):
        xi = int(g.inverse[x])
        for m in members:
            if int(g.table[g.table[x, m], xi]) not in mem:
                return None
    return Subgroup(g, members)


# --- constructors -----------------------------------------------------------


def _check_order(n: int) -> None:
    if n < 1 or n > ORDER_CAP:
        raise ValueError(f"group order {n} outside [1, {ORDER_CAP}]")


def make_cyclic(n: int) -> Group:
    """C_n with elements ordered as powers of the generator: 1, r, r^2, ..."""
    _check_order(n)
    ar = np.arange(n)
    table = (ar.reshape(-1, 1) + ar) % n
    labels = ["1"] + [f"r{i}" if i > 1 else "r" for i in range(1, n)]
    return Group(table, labels[:n], name=f"C{n}", source=f"cyclic:{n}")


def make_dihedral(m: int) -> Group:
    """Dihedral group of order 2m: rotations r^i first, then reflections s*r^i."""
    if m < 1:
        raise ValueError("m must be at least 1")
    _check_order(2 * m)
    n = 2 * m
    table = np.zeros((n, n), dtype=np.int64)
    for k in (0, 1):
        for i in range(m):
            for l in (0, 1):
                for j in range(m):
                    rot = (j - i) % m if l else (i + j) % m
                    table[k * m + i, l * m + j] = (k ^ l) * m + rot
    labels = ["1"] + [f"r{i}" if i > 1 else "r" for i in range(1, m)]
    labels += ["s"] + [f"sr{i}" if i > 1 else "sr" for i in range(1, m)]
    return Group(table, labels, name=f"D{m}", source=f"dihedral:{m}")


def make_symmetric(k: int) -> Group:
    """S_k (k <= 5), elements in lexicographic one-line order; the product
    sigma*tau acts as the composition x -> sigma(tau(x))."""
    if not 1 <= k <= 5:
        raise ValueError("symmetric constructor supports 1 <= k <= 5")
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(perms):
        for j, b in enumerate(perms):
            table[i, j] = index[tuple(a[b[x]] for x in range(k))]
    labels = ["".join(map(str, p)) for p in perms]
    return Group(table, labels, name=f"S{k}", source=f"symmetric:{k}")


_QUAT_AXES = {
    ("e", "e"): (0, "e"), ("e", "i"): (0, "i"), ("e", "j"): (0, "j"), ("e", "k"): (0, "k"),
    ("i", "e"): (0, "i"), ("i", "i"): (1, "e"), ("i", "j"): (0, "k"), ("i", "k"): (1, "j"),
    ("j", "e"): (0, "j"), ("j", "i"): (1, "k"), ("j", "j"): (1, "e"), ("j", "k"): (0, "i"),
    ("k", "e"): (0, "k"), ("k", "i"): (0, "j"), ("k", "j"): (1, "i"), ("k", "k"): (1, "e"),
}


def make_quaternion8() -> Group:
    """Q8 with element order 1, -1, i, -i, j, -j, k, -k."""
    axes = ["e", "i", "j", "k"]
    elems = [(a, s) for a in axes for s in (0, 1)]
    index = {e: i for i, e in enumerate(elems)}
    table = np.zeros((8, 8), dtype=np.int64)
    for (a, sa) in elems:
        for (b, sb) in elems:
            flip, c = _QUAT_AXES[(a, b)]
            table[index[(a, sa)], index[(b, sb)]] = index[(c, sa ^ sb ^ flip)]
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return Group(table, labels, name="Q8", source="quaternion8")


def make_elementary_abelian(p: int, m: int) -> Group:
    """(C_p)^m; element index i is the base-p expansion of i, most significant
    digit first, added componentwise."""
    if p < 2 or m < 1:
        raise ValueError("need p >= 2 and m >= 1")
    n = p**m
    _check_order(n)
    digits = np.zeros((n, m), dtype=np.int64)
    idx = np.arange(n)
    for j in range(m):
        digits[:, j] = (idx // p ** (m - 1 - j)) % p
    weights = p ** np.arange(m - 1, -1, -1)
    table = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    labels = ["".join(str(d) for d in row) for row in digits]
    return Group(table, labels, name=f"C{p}^{m}", source=f"elemabelian:{p},{m}")


def direct_product(a: Group, b: Group) -> Group:
    """A x B with pairs ordered lexicographically: index = i*|B| + j."""
    n = a.order * b.order
    _check_order(n)
    ta = a.table[:, None, :, None] * b.order
    tb = b.table[None, :, None, :]
    table = (ta + tb).reshape(n, n)
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    src = None
    if a.source and b.source:
        src = f"{a.source}x{b.source}"
    return Group(table, labels, name=f"{a.name}x{b.name}", source=src)


# --- builtin specs and JSON files -------------------------------------------


def from_spec(spec: str) -> Group:
    """Build a group from a builtin spec string or a JSON file path.

    Builtin forms: cyclic:N, dihedral:M, symmetric:K, quaternion8,
    elemabelian:P,M, and x-separated products like cyclic:4xcyclic:2.
    """
    spec = spec.strip()
    if spec.endswith(".json"):
        return load_group(spec)
    parts = spec.split("x")
    if len(parts) > 1:
        g = from_spec(parts[0])
        for part in parts[1:]:
            g = direct_product(g, from_spec(part))
        return g
    head, _, arg = spec.partition(":")
    head = head.lower()
    if head == "cyclic":
        return make_cyclic(int(arg))
    if head == "dihedral":
        return make_dihedral(int(arg))
    if head == "symmetric":
        return make_symmetric(int(arg))
    if head == "quaternion8":
        return make_quaternion8()
    if head == "elemabelian":
        p, m = (int(x) for x in arg.split(","))
        return make_elementary_abelian(p, m)
    raise ValueError(f"unknown group spec {spec!r}")


def group_to_dict(g: Group) -> dict:
    return {
        "name": g.name,
        "order": g.order,
        "table": g.table.tolist(),
        "labels": list(g.labels),
    }


def group_from_dict(data: dict) -> Group:
    if not {"name", "order", "table", "labels"} <= set(data):
        raise ValueError("group file needs name, order, table, labels")
    table = np.asarray(data["table"], dtype=np.int64)
    if data["order"] != table.shape[0]:
        raise ValueError("declared order does not match table size")
    return Group(table, labels=data["labels"], name=data["name"])


def save_group(g: Group, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(group_to_dict(g), fh)


def load_group(path: str) -> Group:
    with open(path, encoding="utf-8") as fh:
        return group_from_dict(json.load(fh))
