"""Pure python arithmetic core.

Hot loops for cocycle linear algebra over Z/p^k: an online echelon/Howell
eliminator, the base-variable vector table for normalized 2-cocycles, the
streamed reduction of cocycle relations, and flat-matrix row/column ops for
Smith form. _kernels_c.pyx mirrors this module function for function; both
sides work on array('i') buffers so they are interchangeable.

Rows are kept fully reduced mod q at all times. A pivot entry is exactly
p^v for its valuation v (unit part normalized away), which makes span
membership a chain of divisibility checks.
"""

from array import array

BACKEND = "python"


def _val(x, p, k):
    v = 0
    while v < k and x % p == 0:
        x //= p
        v += 1
    return v


def elim_add_row(rows, pivots, row, pivot_width, q, p, k):
    """Reduce row against the pivots, swapping in lower-valuation rows."""
    n = len(row)
    c = -1
    for i in range(pivot_width):
        if row[i]:
            c = i
            break
    while c >= 0:
        pi = pivots.get(c)
        x = row[c]
        v = _val(x, p, k)
        if pi is None:
            u = x // (p ** v)
            if u != 1:
                inv = pow(u, -1, q)
                for i in range(c, n):
                    row[i] = row[i] * inv % q
            pivots[c] = len(rows)
            rows.append(row)
            return
        prow = rows[pi]
        pv = _val(prow[c], p, k)
        if v < pv:
            u = x // (p ** v)
            if u != 1:
                inv = pow(u, -1, q)
                for i in range(c, n):
                    row[i] = row[i] * inv % q
            rows[pi] = row
            row = prow
            continue
        f = x // (p ** pv)
        for i in range(c, n):
            row[i] = (row[i] - f * prow[i]) % q
        c2 = -1
        for i in range(c + 1, pivot_width):
            if row[i]:
                c2 = i
                break
        c = c2
    # anything left lives entirely in the tag region; not a pivot row


def elim_finalize(rows, pivots, pivot_width, q, p, k):
    """Howell closure: fold in p^(k-v) multiples of short pivots to fixpoint."""
    if k == 1:
        return
    processed = {}
    while True:
        changed = False
        for c in sorted(pivots):
            pi = pivots[c]
            v = _val(rows[pi][c], p, k)
            if v == 0 or processed.get(c) == v:
                continue
            processed[c] = v
            f = p ** (k - v)
            prow = rows[pi]
            nrow = array("i", [x * f % q for x in prow])
            elim_add_row(rows, pivots, nrow, pivot_width, q, p, k)
            changed = True
        if not changed:
            return


def elim_solve(rows, pivots, v, pivot_width, q, p, k):
    """Forward-reduce v; tag coefficients of the combination, or None."""
    w = array("i", v)
    n = len(w)
    c = -1
    for i in range(pivot_width):
        if w[i]:
            c = i
            break
    while c >= 0:
        pi = pivots.get(c)
        if pi is None:
            return None
        prow = rows[pi]
        pv = _val(prow[c], p, k)
        x = w[c]
        if x % (p ** pv):
            return None
        f = x // (p ** pv)
        for i in range(c, n):
            w[i] = (w[i] - f * prow[i]) % q
        c2 = -1
        for i in range(c + 1, pivot_width):
            if w[i]:
                c2 = i
                break
        c = c2
    return array("i", [(q - x) % q for x in w[pivot_width:]])


def vec_build(m, B, q, mul, order, parent_s, parent_y, gen_elts):
    """Flat table vec[(x*m+w)*B + j]: base-variable coords of c(x, w).

    Base variables are c(s, h) for generator s and h != identity, with
    var(s, h) = s_idx*(m-1) + h_idx - 1. Rows follow the left-division BFS:
    for x = s*y, c(x, w) = c(y, w) + c(s, y*w) - c(s, y).
    """
    nv = m - 1
    vec = array("i", bytes(4 * m * m * B))
    for x in order:
        if x == 0:
            continue
        si = parent_s[x]
        y = parent_y[x]
        xb = x * m * B
        yb = y * m * B
        for w in range(m):
            dst = xb + w * B
            src = yb + w * B
            for j in range(B):
                vec[dst + j] = vec[src + j]
            yw = mul[y * m + w]
            if yw:
                jj = dst + si * nv + yw - 1
                vec[jj] = (vec[jj] + 1) % q
            if y:
                jj = dst + si * nv + y - 1
                vec[jj] = (vec[jj] - 1) % q
    return vec


def rel_howell(vec, m, B, q, p, k, mul, gen_elts, parent_s, parent_y):
    """Stream every generator-anchored cocycle relation into an eliminator.

    The relation for (s, y, z) is
        e(s,y) + vec(s*y, z) - vec(y, z) - e(s, y*z) = 0.
    Rows are generated, reduced and discarded one at a time; only the pivot
    rows (Howell-closed) survive.
    """
    nv = m - 1
    rows = []
    pivots = {}
    for si, ge in enumerate(gen_elts):
        for y in range(m):
            x = mul[ge * m + y]
            if parent_s[x] == si and parent_y[x] == y:
                continue  # relation holds identically by construction
            xb = x * m * B
            yb = y * m * B
            for z in range(1, m):
                xa = xb + z * B
                ya = yb + z * B
                row = array("i", bytes(4 * B))
                nz = False
                for j in range(B):
                    t = (vec[xa + j] - vec[ya + j]) % q
                    row[j] = t
                    if t:
                        nz = True
                if y:
                    jj = si * nv + y - 1
                    row[jj] = (row[jj] + 1) % q
                    nz = True
                yz = mul[y * m + z]
                if yz:
                    jj = si * nv + yz - 1
                    row[jj] = (row[jj] - 1) % q
                    nz = True
                if nz:
                    elim_add_row(rows, pivots, row, B, q, p, k)
    elim_finalize(rows, pivots, B, q, p, k)
    return rows, pivots


def dot_mod(buf, off, z, B, q):
    s = 0
    for j in range(B):
        zz = z[j]
        if zz:
            s += buf[off + j] * zz
    return s % q


# flat-matrix helpers for Smith form; mat is one array('i') of nrows*ncols

def mat_row_submul(mat, ncols, dr, sr, f, q):
    a = dr * ncols
    b = sr * ncols
    for j in range(ncols):
        mat[a + j] = (mat[a + j] - f * mat[b + j]) % q


def mat_row_scale(mat, ncols, r, u, q):
    a = r * ncols
    for j in range(ncols):
        mat[a + j] = mat[a + j] * u % q


def mat_row_swap(mat, ncols, r1, r2):
    a = r1 * ncols
    b = r2 * ncols
    for j in range(ncols):
        mat[a + j], mat[b + j] = mat[b + j], mat[a + j]


def mat_col_submul(mat, nrows, ncols, dc, sc, f, q):
    for i in range(nrows):
        a = i * ncols
        mat[a + dc] = (mat[a + dc] - f * mat[a + sc]) % q


def mat_col_swap(mat, nrows, ncols, c1, c2):
    for i in range(nrows):
        a = i * ncols
        mat[a + c1], mat[a + c2] = mat[a + c2], mat[a + c1]


def mat_min_val(mat, nrows, ncols, r0, c0, p, k):
    """Position of a minimal-valuation entry in the trailing block, or None."""
    best = None
    bv = k + 1
    for i in range(r0, nrows):
        a = i * ncols
        for j in range(c0, ncols):
            x = mat[a + j]
            if x:
                v = _val(x, p, k)
                if v < bv:
                    bv = v
                    best = (i, j)
                    if v == 0:
                        return best
    return best
