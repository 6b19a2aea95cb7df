"""Exact matrices of defining linear forms.

A realization is an essential l x n matrix over Q or GF(p) whose column i
is the form cutting out hyperplane i.  Validity means: full row rank
(essential), no zero column (loop), no two proportional columns (multiple
point).
"""

from __future__ import annotations

from .errors import NotSimpleError, OscalcError
from .fields import QQ
from .linalg import EchelonBasis, rank_of_rows


class Realization:
    """An essential exact matrix of column forms over a fixed field."""

    def __init__(self, rows, field=QQ, check=True):
        self.field = field
        self.rows = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if not self.rows or not self.rows[0]:
            raise OscalcError("empty realization matrix")
        widths = {len(r) for r in self.rows}
        if len(widths) != 1:
            raise OscalcError("ragged realization matrix")
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0])
        if check:
            self._validate()

    def _validate(self):
        f = self.field
        cols = self.columns()
        for i, c in enumerate(cols, start=1):
            if not any(c):
                raise NotSimpleError(f"column {i} is zero (loop)")
        for i in range(self.ncols):
            for j in range(i + 1, self.ncols):
                if _proportional(cols[i], cols[j], f):
                    raise NotSimpleError(
                        f"columns {i + 1} and {j + 1} are proportional (multiple point)"
                    )
        if rank_of_rows([list(r) for r in self.rows], self.ncols, f) != self.nrows:
            raise OscalcError(
                "realization is not essential (row rank < number of rows); "
                "row-reduce to a basis of the row space first"
            )

    def columns(self):
        return [[self.rows[r][c] for r in range(self.nrows)] for c in range(self.ncols)]

    def column_submatrix(self, labels):
        """Rows of the submatrix on 1-based column labels, as mutable lists."""
        idx = [i - 1 for i in labels]
        return [[row[i] for i in idx] for row in self.rows]

    def __repr__(self):
        return f"Realization({self.nrows}x{self.ncols} over {self.field.name})"

    def __eq__(self, other):
        return (
            isinstance(other, Realization)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))


def _proportional(u, v, field):
    # u, v nonzero vectors: proportional iff all 2x2 minors vanish
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if field.sub(field.mul(u[i], v[j]), field.mul(u[j], v[i])):
                return False
    return True


def essential_rows(rows, field=QQ):
    """A canonical full-row-rank matrix with the same row space."""
    basis = EchelonBasis(len(rows[0]), field)
    for r in rows:
        basis.insert(r)
    return [list(r) for r in basis.rows]
