# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Gray-code Ryser permanents, Bareiss determinants,
exact graph-polynomial coefficients, and the minimum-lex canonical-order
search. Twin of _purepy with identical signatures; accumulators are
128-bit, which the wrapper-level bounds keep from wrapping."""

BACKEND_NAME = "compiled"

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"
    int __builtin_ctz(unsigned int) nogil
    int __builtin_popcount(unsigned int) nogil

DEF MAXK = 16

_TWO64 = 1 << 64
_TWO128 = 1 << 128

cdef object _pyint(i128 v):
    cdef u128 u
    if -9223372036854775807LL <= v <= 9223372036854775807LL:
        return <long long> v
    u = <u128> v
    res = int(<unsigned long long> u) + int(<unsigned long long> (u >> 64)) * _TWO64
    if v < 0:
        res -= _TWO128
    return res


cdef int _load(object entries, i128 *a) except -1:
    cdef int i = 0
    for e in entries:
        a[i] = <i128> <long long> e
        i += 1
    return i


cdef i128 _ryser(i128 *a, int k) noexcept nogil:
    cdef i128 sums[MAXK]
    cdef i128 total = 0, prod
    cdef unsigned int gray_prev = 0, gray, diff, s, full = (<unsigned int> 1) << k
    cdef int i, j, bits = 0
    for i in range(k):
        sums[i] = 0
    for s in range(1, full):
        gray = s ^ (s >> 1)
        diff = gray ^ gray_prev
        j = __builtin_ctz(diff)
        if gray & diff:
            bits += 1
            for i in range(k):
                sums[i] += a[i * k + j]
        else:
            bits -= 1
            for i in range(k):
                sums[i] -= a[i * k + j]
        prod = 1
        for i in range(k):
            prod *= sums[i]
            if prod == 0:
                break
        if (k - bits) & 1:
            total -= prod
        else:
            total += prod
        gray_prev = gray
    return total


cdef i128 _bareiss(i128 *a, int k) noexcept nogil:
    cdef int sign = 1, col, piv, i, j
    cdef i128 prev = 1, p, f, tmp
    for col in range(k - 1):
        piv = -1
        for i in range(col, k):
            if a[i * k + col] != 0:
                piv = i
                break
        if piv < 0:
            return 0
        if piv != col:
            for j in range(k):
                tmp = a[col * k + j]
                a[col * k + j] = a[piv * k + j]
                a[piv * k + j] = tmp
            sign = -sign
        p = a[col * k + col]
        for i in range(col + 1, k):
            f = a[i * k + col]
            for j in range(col + 1, k):
                a[i * k + j] = (a[i * k + j] * p - f * a[col * k + j]) // prev
            a[i * k + col] = 0
        prev = p
    return sign * a[k * k - 1]


def permanent(entries, int k):
    """Permanent of a k x k matrix given as a flat row-major list."""
    cdef i128 a[MAXK * MAXK]
    if k == 0:
        return 1
    _load(entries, a)
    return _pyint(_ryser(a, k))


def determinant(entries, int k):
    """Determinant by fraction-free elimination; every division is exact."""
    cdef i128 a[MAXK * MAXK]
    if k == 0:
        return 1
    _load(entries, a)
    return _pyint(_bareiss(a, k))


def graph_poly(rows, int n, kind):
    """Coefficients (constant first) of per/det(xI - A) for adjacency rows."""
    cdef bint want_perm = (kind == "perm")
    cdef unsigned int r[MAXK]
    cdef i128 mat[MAXK * MAXK]
    cdef i128 vals[MAXK + 1]
    cdef i128 e[MAXK + 1]
    cdef i128 ff[MAXK + 2]
    cdef i128 out[MAXK + 1]
    cdef i128 fact, s
    cdef int i, j, t, kk, flen

    if n == 0:
        return [1]
    for i in range(n):
        r[i] = <unsigned int> rows[i]
    for t in range(n + 1):
        for i in range(n):
            for j in range(n):
                if i == j:
                    mat[i * n + j] = t
                elif (r[i] >> j) & 1:
                    mat[i * n + j] = -1
                else:
                    mat[i * n + j] = 0
        vals[t] = _ryser(mat, n) if want_perm else _bareiss(mat, n)

    # forward differences -> falling-factorial coefficients Delta^k v0 / k!
    fact = 1
    for kk in range(n + 1):
        if kk:
            fact *= kk
            for i in range(n - kk + 1):
                vals[i] = vals[i + 1] - vals[i]
        if vals[0] % fact != 0:
            raise ArithmeticError("interpolation values are not from an integer polynomial")
        e[kk] = vals[0] // fact

    for j in range(n + 1):
        out[j] = 0
    ff[0] = 1
    flen = 1
    for kk in range(n + 1):
        if kk:
            s = kk - 1
            ff[flen] = 0
            for j in range(flen, 0, -1):
                ff[j] = ff[j - 1] - s * ff[j]
            ff[0] = -s * ff[0]
            flen += 1
        for j in range(flen):
            out[j] += e[kk] * ff[j]
    return [_pyint(out[j]) for j in range(n + 1)]


cdef inline unsigned int _colval(unsigned int row, int *perm, int depth) noexcept nogil:
    cdef unsigned int c = 0
    cdef int i
    for i in range(depth):
        c = (c << 1) | ((row >> perm[i]) & 1)
    return c


cdef void _targets_of(unsigned int *rows, int n, unsigned int *targets) noexcept nogil:
    cdef int i, j
    cdef unsigned int c
    for j in range(n):
        c = 0
        for i in range(j):
            c = (c << 1) | ((rows[j] >> i) & 1)
        targets[j] = c


cdef bint _smaller_exists(unsigned int *rows, int n, unsigned int *targets,
                          int *perm, unsigned int used, int depth) noexcept nogil:
    cdef unsigned int t, c
    cdef int eq[MAXK]
    cdef int neq = 0, u, i
    if depth == n:
        return False
    t = targets[depth]
    for u in range(n):
        if used & ((<unsigned int> 1) << u):
            continue
        c = _colval(rows[u], perm, depth)
        if c < t:
            return True
        if c == t:
            eq[neq] = u
            neq += 1
    for i in range(neq):
        u = eq[i]
        perm[depth] = u
        if _smaller_exists(rows, n, targets, perm, used | ((<unsigned int> 1) << u), depth + 1):
            return True
    return False


cdef bint _canon_dfs(unsigned int *rows, int n, unsigned int *best, unsigned int *cur,
                     int *perm, unsigned int used, int depth, bint eq) noexcept nogil:
    cdef unsigned int cols[MAXK]
    cdef int cand[MAXK]
    cdef int ncand = 0, i, u
    cdef unsigned int c
    cdef bint updated = False
    if depth == n:
        if not eq:
            for i in range(n):
                best[i] = cur[i]
            return True
        return False
    for u in range(n):
        if used & ((<unsigned int> 1) << u):
            continue
        c = _colval(rows[u], perm, depth)
        i = ncand
        while i > 0 and cols[i - 1] > c:
            cols[i] = cols[i - 1]
            cand[i] = cand[i - 1]
            i -= 1
        cols[i] = c
        cand[i] = u
        ncand += 1
    for i in range(ncand):
        c = cols[i]
        u = cand[i]
        if eq and c > best[depth]:
            break
        perm[depth] = u
        cur[depth] = c
        if _canon_dfs(rows, n, best, cur, perm,
                      used | ((<unsigned int> 1) << u), depth + 1,
                      eq and c == best[depth]):
            updated = True
            eq = True  # the new best runs through this prefix
    return updated


def is_canonical(rows, int n):
    """True when no relabeling yields a smaller column-major bitstring."""
    cdef unsigned int r[MAXK]
    cdef unsigned int targets[MAXK]
    cdef int perm[MAXK]
    cdef int i
    for i in range(n):
        r[i] = <unsigned int> rows[i]
    _targets_of(r, n, targets)
    return not _smaller_exists(r, n, targets, perm, 0, 0)


def canonical_form(rows, int n):
    """Adjacency rows of the minimum-lex relabeling of the graph."""
    cdef unsigned int r[MAXK]
    cdef unsigned int best[MAXK]
    cdef unsigned int cur[MAXK]
    cdef int perm[MAXK]
    cdef int i, j
    cdef unsigned int c
    for i in range(n):
        r[i] = <unsigned int> rows[i]
    _targets_of(r, n, best)
    _canon_dfs(r, n, best, cur, perm, 0, 0, True)
    out = [0] * n
    for j in range(n):
        c = best[j]
        for i in range(j):
            if (c >> (j - 1 - i)) & 1:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return out


def canonical_children(rows, int k, int lo, int hi):
    """Neighbor subsets S of the new vertex k whose extension is canonical.

    Only subsets with lo <= |S| <= hi are considered; the caller uses the
    bounds to prune edge-count-restricted enumeration.
    """
    cdef unsigned int base[MAXK]
    cdef unsigned int child[MAXK]
    cdef unsigned int targets[MAXK]
    cdef int perm[MAXK]
    cdef unsigned int s, full = (<unsigned int> 1) << k
    cdef int i, pc
    out = []
    for i in range(k):
        base[i] = <unsigned int> rows[i]
    for s in range(full):
        pc = __builtin_popcount(s)
        if pc < lo or pc > hi:
            continue
        for i in range(k):
            if (s >> i) & 1:
                child[i] = base[i] | ((<unsigned int> 1) << k)
            else:
                child[i] = base[i]
        child[k] = s
        _targets_of(child, k + 1, targets)
        if not _smaller_exists(child, k + 1, targets, perm, 0, 0):
            out.append(s)
    return out
