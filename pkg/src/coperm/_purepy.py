"""Pure-Python kernel implementations.

Twin of the compiled extension with identical signatures and semantics:
Gray-code Ryser permanents, fraction-free Bareiss determinants, exact
graph-polynomial coefficients, and the minimum-lex canonical-order
search used for isomorph rejection. Python integers never wrap, so this
module doubles as the widened-arithmetic path.
"""

from __future__ import annotations

from . import poly

BACKEND_NAME = "pure-python"


def permanent(entries, k: int) -> int:
    """Permanent of a k x k matrix given as a flat row-major list."""
    if k == 0:
        return 1
    rows = [tuple(entries[i * k:(i + 1) * k]) for i in range(k)]
    sums = [0] * k
    total = 0
    gray_prev = 0
    bits = 0
    for s in range(1, 1 << k):
        gray = s ^ (s >> 1)
        diff = gray ^ gray_prev
        j = diff.bit_length() - 1
        if gray & diff:
            bits += 1
            for i in range(k):
                sums[i] += rows[i][j]
        else:
            bits -= 1
            for i in range(k):
                sums[i] -= rows[i][j]
        prod = 1
        for v in sums:
            if v == 0:
                prod = 0
                break
            prod *= v
        if (k - bits) & 1:
            total -= prod
        else:
            total += prod
        gray_prev = gray
    return total


def determinant(entries, k: int) -> int:
    """Determinant by fraction-free elimination; every division is exact."""
    if k == 0:
        return 1
    a = [list(entries[i * k:(i + 1) * k]) for i in range(k)]
    sign = 1
    prev = 1
    for col in range(k - 1):
        piv = next((r for r in range(col, k) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        for i in range(col + 1, k):
            ai = a[i]
            ac = a[col]
            f = ai[col]
            for j in range(col + 1, k):
                ai[j] = (ai[j] * p - f * ac[j]) // prev
            ai[col] = 0
        prev = p
    return sign * a[k - 1][k - 1]


def graph_poly(rows, n: int, kind: str) -> list[int]:
    """Coefficients (constant first) of per/det(xI - A) for adjacency rows."""
    if n == 0:
        return [1]
    fn = permanent if kind == "perm" else determinant
    values = []
    for t in range(n + 1):
        flat = []
        for i in range(n):
            r = rows[i]
            flat.extend(
                t if i == j else (-1 if (r >> j) & 1 else 0)
                for j in range(n)
            )
        values.append(fn(flat, n))
    return list(poly.from_values(values))


def _targets(rows, n):
    # column j of the identity labeling: bits (j,0)..(j,j-1), (j,0) most
    # significant, matching the graph6 triangle order
    out = []
    for j in range(n):
        c = 0
        r = rows[j]
        for i in range(j):
            c = (c << 1) | ((r >> i) & 1)
        out.append(c)
    return out


def _colval(row, perm, depth):
    c = 0
    for i in range(depth):
        c = (c << 1) | ((row >> perm[i]) & 1)
    return c


def is_canonical(rows, n: int) -> bool:
    """True when no relabeling yields a smaller column-major bitstring."""
    targets = _targets(rows, n)
    perm = [0] * n

    def smaller(depth, used):
        if depth == n:
            return False
        t = targets[depth]
        eq = []
        for u in range(n):
            if used & (1 << u):
                continue
            c = _colval(rows[u], perm, depth)
            if c < t:
                return True
            if c == t:
                eq.append(u)
        for u in eq:
            perm[depth] = u
            if smaller(depth + 1, used | (1 << u)):
                return True
        return False

    return not smaller(0, 0)


def canonical_form(rows, n: int) -> list[int]:
    """Adjacency rows of the minimum-lex relabeling of the graph."""
    best = _targets(rows, n)
    perm = [0] * n
    cur = [0] * n

    def dfs(depth, used, eq):
        if depth == n:
            if not eq:
                best[:] = cur
                return True
            return False
        cand = []
        for u in range(n):
            if used & (1 << u):
                continue
            cand.append((_colval(rows[u], perm, depth), u))
        cand.sort()
        updated = False
        for c, u in cand:
            if eq and c > best[depth]:
                break
            perm[depth] = u
            cur[depth] = c
            if dfs(depth + 1, used | (1 << u), eq and c == best[depth]):
                updated = True
                eq = True  # the new best runs through this prefix
        return updated

    dfs(0, 0, True)

    out = [0] * n
    for j in range(n):
        c = best[j]
        for i in range(j):
            if (c >> (j - 1 - i)) & 1:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return out


def canonical_children(rows, k: int, lo: int, hi: int) -> list[int]:
    """Neighbor subsets S of the new vertex k whose extension is canonical.

    Only subsets with lo <= |S| <= hi are considered; the caller uses the
    bounds to prune edge-count-restricted enumeration.
    """
    out = []
    child = list(rows) + [0]
    for s in range(1 << k):
        pc = s.bit_count()
        if pc < lo or pc > hi:
            continue
        for i in range(k):
            child[i] = rows[i] | (((s >> i) & 1) << k)
        child[k] = s
        if is_canonical(child, k + 1):
            out.append(s)
    return out
