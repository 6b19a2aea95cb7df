"""Dense exact linear algebra over a coefficient field from :mod:`oscalc.fields`.

Vectors and matrix rows are plain Python lists of scalars.  The workhorse is
:class:`EchelonBasis`, a row space kept in reduced row-echelon form; the
reduced form is canonical, so two spans are equal iff their row lists are
equal.  Matrices here are small (at most a few hundred rows and ~130
columns), so simple dense elimination is entirely adequate.
"""

from __future__ import annotations

from .fields import QQ


class EchelonBasis:
    """A row space in reduced row-echelon form with incremental insertion."""

    def __init__(self, ncols, field=QQ):
        self.ncols = ncols
        self.field = field
        self.rows = []    # kept sorted by pivot column; pivot entries are 1
        self.pivots = []  # pivot column index of rows[k]

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Reduce a coerced vector modulo the row space; returns the residue."""
        f = self.field
        vec = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c:
                for j in range(piv, self.ncols):
                    if row[j]:
                        vec[j] = f.sub(vec[j], f.mul(c, row[j]))
        return vec

    def insert(self, vec, coerce=True):
        """Add a vector to the span; returns True if the dimension grew."""
        f = self.field
        if coerce:
            vec = [f.coerce(x) for x in vec]
        vec = self.reduce(vec)
        piv = next((j for j, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        c = f.inv(vec[piv])
        vec = [f.mul(c, x) for x in vec]
        for row in self.rows:
            d = row[piv]
            if d:
                for j in range(piv, self.ncols):
                    if vec[j]:
                        row[j] = f.sub(row[j], f.mul(d, vec[j]))
        k = 0
        while k < len(self.pivots) and self.pivots[k] < piv:
            k += 1
        self.rows.insert(k, vec)
        self.pivots.insert(k, piv)
        return True

    def extend(self, rows):
        for r in rows:
            self.insert(r)
        return self

    def contains(self, vec):
        f = self.field
        return not any(self.reduce([f.coerce(x) for x in vec]))

    def copy(self):
        dup = EchelonBasis(self.ncols, self.field)
        dup.rows = [list(r) for r in self.rows]
        dup.pivots = list(self.pivots)
        return dup

    def snapshot(self):
        """Canonical immutable form: tuple of row tuples, sorted by pivot."""
        return tuple(tuple(r) for r in self.rows)


def rank_of_rows(rows, ncols, field=QQ):
    basis = EchelonBasis(ncols, field)
    for r in rows:
        basis.insert(r)
    return basis.dim


def kernel_basis(rows, ncols, field=QQ):
    """Canonical echelon basis of {v : A v = 0} for the matrix with the given rows."""
    rref = EchelonBasis(ncols, field)
    for r in rows:
        rref.insert(r)
    pivots = set(rref.pivots)
    free = [j for j in range(ncols) if j not in pivots]
    kernel = EchelonBasis(ncols, field)
    for j in free:
        v = [field.zero] * ncols
        v[j] = field.one
        for row, piv in zip(rref.rows, rref.pivots):
            if row[j]:
                v[piv] = field.neg(row[j])
        kernel.insert(v, coerce=False)
    return kernel


def mat_mul(a, b, field=QQ):
    """Product of two row-major matrices given as lists of lists."""
    if not a:
        return []
    inner = len(a[0])
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero] * ncols
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] = field.add(acc[j], field.mul(x, brow[j]))
        out.append(acc)
    return out


def gf_rank(rows, ncols, p):
    """Rank over GF(p) via vectorized elimination; for bulk differential tests.

    Entries may be arbitrary ints; they are reduced mod p.  Uses int64, safe
    for p up to ~3e9 intermediate products.
    """
    import numpy as np

    if not rows:
        return 0
    m = np.array(rows, dtype=np.int64) % p
    nrows = m.shape[0]
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivs = np.nonzero(m[rank:, col])[0]
        if pivs.size == 0:
            continue
        r = rank + pivs[0]
        if r != rank:
            m[[rank, r]] = m[[r, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = (m[rank] * inv) % p
        below = m[rank + 1:, col].copy()
        nz = np.nonzero(below)[0]
        if nz.size:
            m[rank + 1 + nz] = (m[rank + 1 + nz] - below[nz, None] * m[rank]) % p
        rank += 1
    return rank
