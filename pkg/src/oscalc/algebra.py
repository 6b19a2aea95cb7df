"""Exact exterior-algebra linear algebra for a simple matroid.

The graded ideal I is spanned in each degree by products e_T * d(e_C) over
circuits C; J_r keeps only circuits of size at most r+1, so r = 2 gives the
quadratic part.  Quotient dimensions, the degree-3 multiplication nullity
phi3 and its companion gamma3, quadraticity, ranks of nbb monomial cosets,
and the grading of the quadratic quotient by line-closed sets are all
computed by exact row reduction over Q or GF(p); no floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .complexes import nbb
from .errors import InternalCheckError, OscalcError
from .fields import QQ
from .lines import is_line_closed, line_closure_mask, whitney_numbers
from .linalg import EchelonBasis
from .util import mask_of, set_of


def exterior_monomials(n, p):
    """Degree-p monomial supports as increasing tuples, in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), p))


def wedge_sign(left, right):
    """Sign of merging two disjoint increasing tuples into one increasing tuple."""
    inversions = sum(1 for a in left for b in right if a > b)
    return -1 if inversions % 2 else 1


def merge_support(left, right):
    return tuple(sorted(left + right))


class ExteriorElement:
    """A homogeneous element of the exterior algebra on e_1..e_n."""

    def __init__(self, n, coeffs, field=QQ, degree=None):
        self.n = n
        self.field = field
        clean = {}
        deg = degree
        for mono, c in coeffs.items():
            mono = tuple(mono)
            if list(mono) != sorted(set(mono)):
                raise OscalcError(f"monomial support {mono} not strictly increasing")
            if mono and (mono[0] < 1 or mono[-1] > n):
                raise OscalcError(f"monomial {mono} outside 1..{n}")
            c = field.coerce(c)
            if c:
                if deg is None:
                    deg = len(mono)
                elif len(mono) != deg:
                    raise OscalcError("element is not homogeneous")
                clean[mono] = c
        self.coeffs = clean
        self.degree = deg if deg is not None else 0

    @classmethod
    def monomial(cls, n, labels, field=QQ, coeff=1):
        """e_S for a sequence of distinct labels; odd permutations flip the sign."""
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            return cls(n, {}, field, degree=len(labels))
        sign = 1
        work = list(labels)
        for i in range(len(work)):
            for j in range(len(work) - 1 - i):
                if work[j] > work[j + 1]:
                    work[j], work[j + 1] = work[j + 1], work[j]
                    sign = -sign
        c = field.coerce(coeff) if sign > 0 else field.neg(field.coerce(coeff))
        return cls(n, {tuple(work): c}, field, degree=len(labels))

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        self._compat(other)
        f = self.field
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = f.add(out.get(mono, f.zero), c)
        return ExteriorElement(self.n, out, f, degree=self.degree)

    def __sub__(self, other):
        self._compat(other)
        f = self.field
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = f.sub(out.get(mono, f.zero), c)
        return ExteriorElement(self.n, out, f, degree=self.degree)

    def __neg__(self):
        f = self.field
        return ExteriorElement(
            self.n, {m: f.neg(c) for m, c in self.coeffs.items()}, f, self.degree
        )

    def scale(self, scalar):
        f = self.field
        s = f.coerce(scalar)
        return ExteriorElement(
            self.n, {m: f.mul(s, c) for m, c in self.coeffs.items()}, f, self.degree
        )

    def wedge(self, other):
        self._compat(other, same_degree=False)
        f = self.field
        out = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                if set(ma) & set(mb):
                    continue
                sign = wedge_sign(ma, mb)
                mono = merge_support(ma, mb)
                c = f.mul(ca, cb)
                if sign < 0:
                    c = f.neg(c)
                out[mono] = f.add(out.get(mono, f.zero), c)
        return ExteriorElement(self.n, out, f, degree=self.degree + other.degree)

    def boundary(self):
        """The graded derivation sending e_{i1..ip} to the alternating sum of
        its degree-(p-1) facets."""
        f = self.field
        out = {}
        for mono, c in self.coeffs.items():
            for k in range(len(mono)):
                sub = mono[:k] + mono[k + 1:]
                term = c if k % 2 == 0 else f.neg(c)
                out[sub] = f.add(out.get(sub, f.zero), term)
        deg = max(self.degree - 1, 0)
        return ExteriorElement(self.n, out, f, degree=deg)

    def dense(self, monomial_index):
        f = self.field
        vec = [f.zero] * len(monomial_index)
        for mono, c in self.coeffs.items():
            vec[monomial_index[mono]] = c
        return vec

    def _compat(self, other, same_degree=True):
        if self.n != other.n or self.field != other.field:
            raise OscalcError("mixed ground sets or fields")
        if same_degree and self.coeffs and other.coeffs and self.degree != other.degree:
            raise OscalcError("mixed degrees")

    def __eq__(self, other):
        return (
            isinstance(other, ExteriorElement)
            and self.n == other.n
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "ExteriorElement(0)"
        parts = [f"{c}*e{''.join(map(str, m)) or '()'}" for m, c in sorted(self.coeffs.items())]
        return "ExteriorElement(" + " + ".join(parts) + ")"


def boundary(x: ExteriorElement) -> ExteriorElement:
    return x.boundary()


# -- ideal bases ---------------------------------------------------------------


def _boundary_product_rows(n, p, dependents):
    """Integer coefficient rows e_T * d(e_S) of degree p, for the given supports.

    T runs over all increasing tuples, not only those disjoint from S: the
    ideal contains every monomial multiple of a generator, and products with
    |T & S| = 1 contribute the monomials containing S itself.  Products with
    |T & S| >= 2 vanish outright.
    """
    rows = []
    for S in dependents:
        s = len(S)
        t_size = p - s + 1
        if t_size < 0 or t_size > n:
            continue
        s_sorted = tuple(sorted(S))
        s_set = set(S)
        for T in itertools.combinations(range(1, n + 1), t_size):
            if len(s_set.intersection(T)) >= 2:
                continue
            row = {}
            for k in range(s):
                sub = s_sorted[:k] + s_sorted[k + 1:]
                if s_set.intersection(T) - {s_sorted[k]}:
                    continue
                sign = (1 if k % 2 == 0 else -1) * wedge_sign(T, sub)
                mono = merge_support(T, sub)
                row[mono] = row.get(mono, 0) + sign
            row = {m: c for m, c in row.items() if c}
            if row:
                rows.append(row)
    return rows


def ideal_generator_rows(M, p, max_circuit_size=None, all_dependents=False):
    """Sparse integer rows spanning I^p (or J_r^p via max_circuit_size = r+1).

    With all_dependents=True the generating set runs over every dependent set
    instead of just circuits; this is the oracle side of the span-equality
    check and is never used by the production path.
    """
    if all_dependents:
        deps = []
        for size in range(3, min(p + 1, M.n) + 1):
            for combo in itertools.combinations(range(1, M.n + 1), size):
                if M.rank_mask(mask_of(combo, M.n)) < size:
                    deps.append(combo)
    else:
        deps = [tuple(sorted(c)) for c in M.circuits()]
        if max_circuit_size is not None:
            deps = [c for c in deps if len(c) <= max_circuit_size]
    return _boundary_product_rows(M.n, p, deps)


def _ideal_basis(M, field, p, max_circuit_size):
    """Echelon basis of I^p or J_r^p; cached per matroid, field and degree."""
    if max_circuit_size is None or max_circuit_size > M.full_rank + 1:
        max_circuit_size = M.full_rank + 1
    key = ("osbasis", field, p, max_circuit_size)
    got = M._memos.get(key)
    if got is not None:
        return got
    monos = exterior_monomials(M.n, p)
    index = {m: i for i, m in enumerate(monos)}
    basis = EchelonBasis(len(monos), field)
    for row in ideal_generator_rows(M, p, max_circuit_size):
        vec = [field.zero] * len(monos)
        for mono, c in row.items():
            vec[index[mono]] = field.coerce(c)
        basis.insert(vec, coerce=False)
    M._memos[key] = basis
    return basis


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A graded subspace of the degree-p component, in reduced echelon form.

    Columns follow the lexicographic monomial list; equal spans have equal
    echelon rows, making the representation canonical.
    """

    degree: int
    monomials: tuple
    basis: EchelonBasis

    @property
    def dim(self):
        return self.basis.dim

    def rows(self):
        return self.basis.snapshot()

    def contains(self, element):
        index = {m: i for i, m in enumerate(self.monomials)}
        return self.basis.contains(element.dense(index))


def ideal_subspace(M, field, p, r=None) -> SubspaceBasis:
    """I^p when r is None, else J_r^p (circuits of size at most r+1)."""
    maxc = None if r is None else r + 1
    basis = _ideal_basis(M, field, p, maxc)
    return SubspaceBasis(p, tuple(exterior_monomials(M.n, p)), basis)


def ideal_dim(M, field, p) -> int:
    if p > M.n:
        return 0
    return _ideal_basis(M, field, p, None).dim


def ideal_r_dim(M, field, p, r) -> int:
    if r < 1:
        raise OscalcError(f"degree-r closure needs r >= 1, got {r}")
    if p > M.n:
        return 0
    return _ideal_basis(M, field, p, r + 1).dim


def dim_A(M, field, p) -> int:
    if p > M.n:
        return 0
    return comb(M.n, p) - ideal_dim(M, field, p)


def dim_Abar(M, field, p, r=2) -> int:
    if p > M.n:
        return 0
    return comb(M.n, p) - ideal_r_dim(M, field, p, r)


def phi3(M, field=QQ) -> int:
    """Nullity of the multiplication map from E^1 x I^2 into E^3."""
    i2 = _ideal_basis(M, field, 2, None)
    if i2.dim == 0:
        return 0
    mon2 = exterior_monomials(M.n, 2)
    mon3 = exterior_monomials(M.n, 3)
    idx3 = {m: i for i, m in enumerate(mon3)}
    delta = EchelonBasis(len(mon3), field)
    rank = 0
    for i in range(1, M.n + 1):
        for row in i2.rows:
            vec = [field.zero] * len(mon3)
            for col, c in enumerate(row):
                if not c:
                    continue
                (a, b) = mon2[col]
                if i == a or i == b:
                    continue
                sign = wedge_sign((i,), (a, b))
                vec[idx3[merge_support((i,), (a, b))]] = (
                    c if sign > 0 else field.neg(c)
                )
            if delta.insert(vec, coerce=False):
                rank += 1
    return M.n * i2.dim - rank


def gamma3(M, field=QQ) -> int:
    """dim A^3 + n dim I^2 - C(n,3); the lower-central-series prediction."""
    return dim_A(M, field, 3) + M.n * ideal_dim(M, field, 2) - comb(M.n, 3)


def is_quadratic(M, field=QQ) -> bool:
    """Whether the degree-2 part of the ideal already generates all of it."""
    for p in range(3, M.n + 1):
        if ideal_r_dim(M, field, p, 2) != ideal_dim(M, field, p):
            return False
    return True


def nbb_rank_in_Abar(M, field, order, p) -> int:
    """Rank of the nbb monomials of size p in the quadratic quotient."""
    cx = nbb(M, order)
    span = _ideal_basis(M, field, p, 3).copy()
    base_dim = span.dim
    monos = exterior_monomials(M.n, p)
    index = {m: i for i, m in enumerate(monos)}
    for face in sorted(cx.faces(p), key=sorted):
        vec = [field.zero] * len(monos)
        vec[index[tuple(sorted(face))]] = field.one
        span.insert(vec, coerce=False)
    return span.dim - base_dim


def lc_grading_dims(M, field, p) -> dict:
    """Dimension of each line-closure-graded block of the quadratic quotient.

    Keys are line-closed sets X owning at least one degree-p monomial; the
    values sum to the full degree-p dimension of the quotient.
    """
    monos = exterior_monomials(M.n, p)
    blocks = {}
    for mono in monos:
        X = set_of(line_closure_mask(M, mask_of(mono, M.n)))
        blocks.setdefault(X, []).append(mono)
    rows_by_block = {}
    for row in ideal_generator_rows(M, p, max_circuit_size=3):
        support = next(iter(row))
        X = set_of(line_closure_mask(M, mask_of(support, M.n)))
        for other in row:
            if set_of(line_closure_mask(M, mask_of(other, M.n))) != X:
                raise InternalCheckError(
                    "quadratic generator not homogeneous in the line-closure grading"
                )
        rows_by_block.setdefault(X, []).append(row)
    out = {}
    for X, mlist in blocks.items():
        index = {m: i for i, m in enumerate(mlist)}
        basis = EchelonBasis(len(mlist), field)
        for row in rows_by_block.get(X, []):
            vec = [field.zero] * len(mlist)
            for mono, c in row.items():
                vec[index[mono]] = field.coerce(c)
            basis.insert(vec, coerce=False)
        out[X] = len(mlist) - basis.dim
    return out


@dataclass(frozen=True, eq=True)
class OSReport:
    """Aggregate exact invariants of one matroid over one field."""

    n: int
    rank: int
    field: str
    dims_A: tuple
    dims_Abar: tuple  # quadratic closure, degrees 0..n
    dim_I2: int
    phi3: int
    gamma3: int
    quadratic: bool
    line_closed: bool


def os_report(M, field=QQ) -> OSReport:
    """Populate the full report and verify the built-in identities.

    Raises InternalCheckError when any cross-identity fails; that signals a
    defect in the computation core, never bad user input.
    """
    n = M.n
    dims_a = tuple(dim_A(M, field, p) for p in range(n + 1))
    dims_abar = tuple(dim_Abar(M, field, p, 2) for p in range(n + 1))
    d_i2 = ideal_dim(M, field, 2)
    f3 = phi3(M, field)
    g3 = gamma3(M, field)
    quad = is_quadratic(M, field)
    lc = bool(is_line_closed(M))
    w = whitney_numbers(M).whitney
    for p in range(n + 1):
        expect = w[p] if p < len(w) else 0
        if dims_a[p] != expect:
            raise InternalCheckError(
                f"dim A^{p} = {dims_a[p]} differs from Whitney number {expect}"
            )
        if dims_a[p] > dims_abar[p]:
            raise InternalCheckError(f"dim A^{p} exceeds quadratic-closure dim")
    if f3 != dims_abar[3] + n * d_i2 - comb(n, 3):
        raise InternalCheckError("phi3 identity (first form) fails")
    if f3 != 2 * comb(n + 1, 3) - n * dims_a[2] + dims_abar[3]:
        raise InternalCheckError("phi3 identity (second form) fails")
    if f3 - g3 != dims_abar[3] - dims_a[3]:
        raise InternalCheckError("phi3 - gamma3 does not match the quotient gap")
    if quad and not lc:
        raise InternalCheckError("quadratic algebra on a non-line-closed matroid")
    return OSReport(
        n=n,
        rank=M.full_rank,
        field=field.name,
        dims_A=dims_a,
        dims_Abar=dims_abar,
        dim_I2=d_i2,
        phi3=f3,
        gamma3=g3,
        quadratic=quad,
        line_closed=lc,
    )
