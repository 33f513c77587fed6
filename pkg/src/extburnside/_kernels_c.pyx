# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic core; mirrors _kernels_py function for function.

Same contracts as the pure twin: rows are array('i') buffers reduced mod q,
pivot entries are exact powers of p, and the flat tables use the layouts
documented over there.
"""

from array import array

BACKEND = "c"


cdef inline int _val(int x, int p, int k) noexcept:
    cdef int v = 0
    while v < k and x % p == 0:
        x //= p
        v += 1
    return v


cdef inline int _pw(int p, int v) noexcept:
    cdef int r = 1
    while v > 0:
        r *= p
        v -= 1
    return r


cdef inline int _mod(long long x, int q) noexcept:
    cdef int r = <int>(x % q)
    return r + q if r < 0 else r


cdef int _first_nz(int[::1] row, int start, int limit) noexcept:
    cdef int i
    for i in range(start, limit):
        if row[i]:
            return i
    return -1


cdef void _scale_from(int[::1] row, int c, int n, long long u, int q) noexcept:
    cdef int i
    for i in range(c, n):
        row[i] = _mod(row[i] * u, q)


cdef void _submul_from(int[::1] row, int[::1] src, int c, int n, long long f, int q) noexcept:
    cdef int i
    for i in range(c, n):
        row[i] = _mod(row[i] - f * src[i], q)


def elim_add_row(list rows, dict pivots, row, int pivot_width, int q, int p, int k):
    """Reduce row against the pivots, swapping in lower-valuation rows."""
    cdef int[::1] rv = row
    cdef int[::1] pv_row
    cdef int n = rv.shape[0]
    cdef int c, v, pv, x
    cdef long long f
    cdef object prow
    c = _first_nz(rv, 0, pivot_width)
    while c >= 0:
        x = rv[c]
        v = _val(x, p, k)
        pi = pivots.get(c)
        if pi is None:
            if x // _pw(p, v) != 1:
                _scale_from(rv, c, n, pow(x // _pw(p, v), -1, q), q)
            pivots[c] = len(rows)
            rows.append(row)
            return
        prow = rows[<int>pi]
        pv_row = prow
        pv = _val(pv_row[c], p, k)
        if v < pv:
            if x // _pw(p, v) != 1:
                _scale_from(rv, c, n, pow(x // _pw(p, v), -1, q), q)
            rows[<int>pi] = row
            row = prow
            rv = pv_row
            continue
        f = x // _pw(p, pv)
        _submul_from(rv, pv_row, c, n, f, q)
        c = _first_nz(rv, c + 1, pivot_width)


def elim_finalize(list rows, dict pivots, int pivot_width, int q, int p, int k):
    """Howell closure: fold in p^(k-v) multiples of short pivots to fixpoint."""
    if k == 1:
        return
    cdef dict processed = {}
    cdef int v, f, i
    cdef int[::1] prow
    cdef bint changed
    while True:
        changed = False
        for c in sorted(pivots):
            pi = pivots[c]
            prow = rows[<int>pi]
            v = _val(prow[<int>c], p, k)
            if v == 0 or processed.get(c) == v:
                continue
            processed[c] = v
            f = _pw(p, k - v)
            nrow = array("i", bytes(4 * prow.shape[0]))
            _copy_scaled(nrow, rows[<int>pi], f, q)
            elim_add_row(rows, pivots, nrow, pivot_width, q, p, k)
            changed = True
        if not changed:
            return


cdef void _copy_scaled(object dst, object src, long long f, int q):
    cdef int[::1] d = dst
    cdef int[::1] s = src
    cdef int i
    for i in range(d.shape[0]):
        d[i] = _mod(s[i] * f, q)


def elim_solve(list rows, dict pivots, v, int pivot_width, int q, int p, int k):
    """Forward-reduce v; tag coefficients of the combination, or None."""
    cdef int[::1] w = v
    cdef int[::1] prow
    cdef int n = w.shape[0]
    cdef int c, pv, x, pp
    cdef long long f
    c = _first_nz(w, 0, pivot_width)
    while c >= 0:
        pi = pivots.get(c)
        if pi is None:
            return None
        prow = rows[<int>pi]
        pv = _val(prow[c], p, k)
        x = w[c]
        pp = _pw(p, pv)
        if x % pp:
            return None
        f = x // pp
        _submul_from(w, prow, c, n, f, q)
        c = _first_nz(w, c + 1, pivot_width)
    out = array("i", bytes(4 * (n - pivot_width)))
    cdef int[::1] o = out
    cdef int j
    for j in range(n - pivot_width):
        o[j] = (q - w[pivot_width + j]) % q
    return out


def vec_build(int m, int B, int q, mul, order, parent_s, parent_y, gen_elts):
    """Flat table vec[(x*m+w)*B + j]; see the pure twin for the layout."""
    cdef int nv = m - 1
    vec = array("i", bytes(4 * m * m * B))
    cdef int[::1] V = vec
    cdef int[::1] MUL = mul
    cdef int[::1] ORD = order
    cdef int[::1] PS = parent_s
    cdef int[::1] PY = parent_y
    cdef int oi, x, si, y, w, j, yw
    cdef long xb, yb, dst, src
    for oi in range(m):
        x = ORD[oi]
        if x == 0:
            continue
        si = PS[x]
        y = PY[x]
        xb = <long>x * m * B
        yb = <long>y * m * B
        for w in range(m):
            dst = xb + w * B
            src = yb + w * B
            for j in range(B):
                V[dst + j] = V[src + j]
            yw = MUL[y * m + w]
            if yw:
                V[dst + si * nv + yw - 1] = (V[dst + si * nv + yw - 1] + 1) % q
            if y:
                V[dst + si * nv + y - 1] = (V[dst + si * nv + y - 1] - 1 + q) % q
    return vec


def rel_howell(vec, int m, int B, int q, int p, int k, mul, gen_elts, parent_s, parent_y):
    """Stream generator-anchored cocycle relations; see the pure twin."""
    cdef int nv = m - 1
    cdef list rows = []
    cdef dict pivots = {}
    cdef int[::1] V = vec
    cdef int[::1] MUL = mul
    cdef int[::1] PS = parent_s
    cdef int[::1] PY = parent_y
    cdef int si, ge, y, x, z, j, yz, jj, t
    cdef long xb, yb, xa, ya
    cdef bint nz
    cdef int[::1] rv
    for si, ge_obj in enumerate(gen_elts):
        ge = ge_obj
        for y in range(m):
            x = MUL[ge * m + y]
            if PS[x] == si and PY[x] == y:
                continue
            xb = <long>x * m * B
            yb = <long>y * m * B
            for z in range(1, m):
                xa = xb + z * B
                ya = yb + z * B
                row = array("i", bytes(4 * B))
                rv = row
                nz = False
                for j in range(B):
                    t = V[xa + j] - V[ya + j]
                    if t < 0:
                        t += q
                    rv[j] = t
                    if t:
                        nz = True
                if y:
                    jj = si * nv + y - 1
                    rv[jj] = (rv[jj] + 1) % q
                    nz = True
                yz = MUL[y * m + z]
                if yz:
                    jj = si * nv + yz - 1
                    rv[jj] = (rv[jj] - 1 + q) % q
                    nz = True
                if nz:
                    elim_add_row(rows, pivots, row, B, q, p, k)
    elim_finalize(rows, pivots, B, q, p, k)
    return rows, pivots


def dot_mod(buf, long off, z, int B, int q):
    cdef int[::1] b = buf
    cdef int[::1] zz = z
    cdef long long s = 0
    cdef int j
    for j in range(B):
        if zz[j]:
            s += <long long>b[off + j] * zz[j]
    return <int>(s % q)


def mat_row_submul(mat, int ncols, int dr, int sr, long long f, int q):
    cdef int[::1] M = mat
    cdef long a = <long>dr * ncols
    cdef long b = <long>sr * ncols
    cdef int j
    for j in range(ncols):
        M[a + j] = _mod(M[a + j] - f * M[b + j], q)


def mat_row_scale(mat, int ncols, int r, long long u, int q):
    cdef int[::1] M = mat
    cdef long a = <long>r * ncols
    cdef int j
    for j in range(ncols):
        M[a + j] = _mod(M[a + j] * u, q)


def mat_row_swap(mat, int ncols, int r1, int r2):
    cdef int[::1] M = mat
    cdef long a = <long>r1 * ncols
    cdef long b = <long>r2 * ncols
    cdef int j, t
    for j in range(ncols):
        t = M[a + j]
        M[a + j] = M[b + j]
        M[b + j] = t


def mat_col_submul(mat, int nrows, int ncols, int dc, int sc, long long f, int q):
    cdef int[::1] M = mat
    cdef int i
    cdef long a
    for i in range(nrows):
        a = <long>i * ncols
        M[a + dc] = _mod(M[a + dc] - f * M[a + sc], q)


def mat_col_swap(mat, int nrows, int ncols, int c1, int c2):
    cdef int[::1] M = mat
    cdef int i, t
    cdef long a
    for i in range(nrows):
        a = <long>i * ncols
        t = M[a + c1]
        M[a + c1] = M[a + c2]
        M[a + c2] = t


def mat_min_val(mat, int nrows, int ncols, int r0, int c0, int p, int k):
    cdef int[::1] M = mat
    cdef int bi = -1, bj = -1, bv = k + 1
    cdef int i, j, x, v
    cdef long a
    for i in range(r0, nrows):
        a = <long>i * ncols
        for j in range(c0, ncols):
            x = M[a + j]
            if x:
                v = _val(x, p, k)
                if v < bv:
                    bv = v
                    bi = i
                    bj = j
                    if v == 0:
                        return (bi, bj)
    if bi < 0:
        return None
    return (bi, bj)
