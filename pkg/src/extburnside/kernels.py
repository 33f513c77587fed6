"""Backend dispatch and the module-level linear algebra built on it.

The compiled extension (_kernels_c) is used when importable; EBR_PURE_PYTHON=1
forces the pure twin. Everything downstream talks to the Elim class and the
helpers here, so the backend choice is invisible apart from speed.
"""

from __future__ import annotations

import os
from array import array

if os.environ.get("EBR_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

vec_build = _impl.vec_build
rel_howell = _impl.rel_howell
dot_mod = _impl.dot_mod


def pval(x: int, p: int, k: int) -> int:
    v = 0
    while v < k and x % p == 0:
        x //= p
        v += 1
    return v


class Elim:
    """Online Howell eliminator over Z/q, q = p^k.

    Rows have pivot_width leading columns where pivots may sit; anything
    beyond is a passive tag block that rides along. solve() reduces a vector
    and reports the combination of the original tagged rows that produced it.
    """

    __slots__ = ("width", "pivot_width", "q", "p", "k", "rows", "pivots", "_final")

    def __init__(self, width, q, p, k, pivot_width=None):
        self.width = width
        self.pivot_width = width if pivot_width is None else pivot_width
        self.q = q
        self.p = p
        self.k = k
        self.rows = []
        self.pivots = {}
        self._final = False

    def add(self, row):
        if len(row) != self.width:
            raise ValueError("row width mismatch")
        self._final = False
        _impl.elim_add_row(self.rows, self.pivots, array("i", row),
                           self.pivot_width, self.q, self.p, self.k)

    def add_tagged(self, head, tag_index, tag_count):
        """Row = head | e_{tag_index} over a tag block of tag_count columns."""
        row = array("i", bytes(4 * self.width))
        for i, x in enumerate(head):
            row[i] = x % self.q
        if tag_index is not None:
            row[self.pivot_width + tag_index] = 1
        self.add(row)

    def finalize(self):
        if not self._final:
            _impl.elim_finalize(self.rows, self.pivots, self.pivot_width,
                                self.q, self.p, self.k)
            self._final = True

    def solve(self, v):
        """Tags t with v = sum t_i * (original tagged rows), else None."""
        self.finalize()
        w = array("i", bytes(4 * self.width))
        for i, x in enumerate(v):
            w[i] = x % self.q
        return _impl.elim_solve(self.rows, self.pivots, w, self.pivot_width,
                                self.q, self.p, self.k)

    def contains(self, v) -> bool:
        return self.solve(v) is not None

    def pivot_rows(self):
        self.finalize()
        return [self.rows[self.pivots[c]] for c in sorted(self.pivots)]


def kernel_of_rows(rows, ncols, q, p, k):
    """Howell generating set of {z : row . z = 0 mod q for every row}.

    Tableau trick: eliminate (col_j | e_j) with pivots allowed everywhere;
    rows whose pivot lands in the tag block have zero head, and their tags
    generate the kernel.
    """
    r = len(rows)
    if r == 0:
        out = []
        for j in range(ncols):
            e = array("i", bytes(4 * ncols))
            e[j] = 1 % q
            out.append(e)
        return out
    elim = Elim(r + ncols, q, p, k)
    for j in range(ncols):
        t = array("i", bytes(4 * (r + ncols)))
        for i in range(r):
            t[i] = rows[i][j]
        t[r + j] = 1
        elim.add(t)
    elim.finalize()
    out = []
    for c in sorted(elim.pivots):
        if c >= r:
            out.append(array("i", elim.rows[elim.pivots[c]][r:]))
    return out


def smith_zq(rows, ncols, q, p, k):
    """Smith form over Z/p^k with column transforms.

    Returns (cvals, C, Cinv): cvals[j] is the valuation of the j-th diagonal
    entry (k for columns never hit by a pivot), and C, Cinv are flat ncols x
    ncols matrices with A_final = rowops(A) . C. The quotient of (Z/q)^ncols
    by the row span is the direct sum of Z/p^cvals[j]; coordinates of y are
    (y . C)_j mod p^cvals[j], and the j-th generator is row j of Cinv.
    """
    nrows = len(rows)
    mat = array("i", bytes(4 * nrows * ncols))
    pos = 0
    for row in rows:
        for x in row:
            mat[pos] = x % q
            pos += 1
    C = array("i", bytes(4 * ncols * ncols))
    Cinv = array("i", bytes(4 * ncols * ncols))
    for j in range(ncols):
        C[j * ncols + j] = 1
        Cinv[j * ncols + j] = 1
    cvals = [k] * ncols
    t = 0
    lim = min(nrows, ncols)
    while t < lim:
        hit = _impl.mat_min_val(mat, nrows, ncols, t, t, p, k)
        if hit is None:
            break
        i, j = hit
        if i != t:
            _impl.mat_row_swap(mat, ncols, i, t)
        if j != t:
            _impl.mat_col_swap(mat, nrows, ncols, j, t)
            _impl.mat_col_swap(C, ncols, ncols, j, t)
            _impl.mat_row_swap(Cinv, ncols, j, t)
        x = mat[t * ncols + t]
        v = pval(x, p, k)
        u = x // (p ** v)
        if u != 1:
            _impl.mat_row_scale(mat, ncols, t, pow(u, -1, q), q)
        pv = p ** v
        for r in range(nrows):
            if r != t and mat[r * ncols + t]:
                _impl.mat_row_submul(mat, ncols, r, t, mat[r * ncols + t] // pv, q)
        for c in range(t + 1, ncols):
            x = mat[t * ncols + c]
            if x:
                f = x // pv
                _impl.mat_col_submul(mat, nrows, ncols, c, t, f, q)
                _impl.mat_col_submul(C, ncols, ncols, c, t, f, q)
                # inverse op on Cinv: row_t += f * row_c
                _impl.mat_row_submul(Cinv, ncols, t, c, (q - f) % q, q)
        cvals[t] = v
        t += 1
    return cvals, C, Cinv


def mat_vec_rows(flat, ncols, r):
    """Row r of a flat matrix as a fresh array."""
    return array("i", flat[r * ncols:(r + 1) * ncols])
