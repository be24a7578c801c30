"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately slow, pure-Python, and structurally unlike
the package implementations: row reduction over lists, codeword scans via
itertools.product, closure by set saturation.  Tests compare the fast paths
against these on small instances.
"""

from itertools import product


def rank_mod_p(rows, p):
    """Gaussian elimination over lists of ints."""
    m = [[x % p for x in row] for row in rows]
    rank = 0
    for col in range(len(m[0]) if m else 0):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def in_span(rows, vec, p):
    return rank_mod_p(list(rows), p) == rank_mod_p(list(rows) + [list(vec)], p)


def min_distance_scan(basis_rows, p):
    """Minimum nonzero codeword weight by scanning every coefficient tuple."""
    k = len(basis_rows)
    n = len(basis_rows[0])
    best = None
    for coeffs in product(range(p), repeat=k):
        if not any(coeffs):
            continue
        word = [sum(c * row[j] for c, row in zip(coeffs, basis_rows)) % p for j in range(n)]
        w = sum(1 for x in word if x)
        if best is None or w < best:
            best = w
    return best


def convolve_scan(table, f, h, p):
    """Algebra product by the definition, no vectorization."""
    n = len(table)
    out = [0] * n
    for i in range(n):
        for j in range(n):
            out[table[i][j]] = (out[table[i][j]] + f[i] * h[j]) % p
    return out


def closure_scan(table, inverse, seeds):
    """Subgroup generated by seeds, by saturation over products/inverses."""
    members = {0} | set(seeds) | {inverse[s] for s in seeds}
    while True:
        new = set()
        for a in members:
            for b in members:
                c = table[a][b]
                if c not in members:
                    new.add(c)
        if not new:
            return members
        members |= new


def is_normal_scan(table, inverse, members):
    mem = set(members)
    n = len(table)
    for g in range(n):
        for m in members:
            if table[table[g][m]][inverse[g]] not in mem:
                return False
    return True
