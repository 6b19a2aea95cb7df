"""Formality of explicit realizations and its combinatorial relatives.

A realization is formal when the kernel of the evaluation map e_i -> alpha_i
is spanned by vectors of weight at most three.  The weight-3 span F is built
from one relation vector per rank-2 point triple; for a simple essential
matrix this equals the span of all weight<=3 kernel vectors (lower weights
would force loops or parallel columns).  The formalization realizes the
arrangement cut out by the orthogonal complement of F.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import NotSimpleError, OscalcError, SectionError
from .lines import line_closure_mask
from .linalg import EchelonBasis, kernel_basis, mat_mul
from .matroid import from_matrix, ranks_equal
from .realization import Realization
from .util import mask_of


@dataclass(frozen=True, eq=False)
class RelationSpace:
    """Canonical echelon bases of the full kernel K and its weight-3 span F."""

    kernel: tuple
    weight3: tuple

    @property
    def dim_K(self):
        return len(self.kernel)

    @property
    def dim_F(self):
        return len(self.weight3)


def _triple_relation_vectors(real, matroid, labels=None):
    """One kernel vector per rank-2 triple among the given column labels,
    embedded into coordinates indexed by those labels."""
    field = real.field
    labels = list(labels) if labels is not None else list(range(1, real.ncols + 1))
    pos = {lab: k for k, lab in enumerate(labels)}
    out = []
    for triple in itertools.combinations(labels, 3):
        if matroid.rank_mask(mask_of(triple, matroid.n)) != 2:
            continue
        sub = real.column_submatrix(triple)
        kern = kernel_basis(sub, 3, field)
        for kv in kern.rows:
            vec = [field.zero] * len(labels)
            for slot, lab in enumerate(triple):
                vec[pos[lab]] = kv[slot]
            out.append(vec)
    return out


def relation_space(real, matroid=None) -> RelationSpace:
    field = real.field
    M = matroid if matroid is not None else from_matrix(real)
    kern = kernel_basis([list(r) for r in real.rows], real.ncols, field)
    f_basis = EchelonBasis(real.ncols, field)
    for vec in _triple_relation_vectors(real, M):
        f_basis.insert(vec, coerce=False)
    return RelationSpace(kern.snapshot(), f_basis.snapshot())


def low_weight_kernel_span(real, max_weight=3) -> EchelonBasis:
    """Span of every kernel vector of weight <= max_weight, by brute force.

    Oracle counterpart of the triple-based construction in relation_space.
    """
    field = real.field
    span = EchelonBasis(real.ncols, field)
    for size in range(1, max_weight + 1):
        for cols in itertools.combinations(range(1, real.ncols + 1), size):
            sub = real.column_submatrix(cols)
            kern = kernel_basis(sub, size, field)
            for kv in kern.rows:
                vec = [field.zero] * real.ncols
                for slot, lab in enumerate(cols):
                    vec[lab - 1] = kv[slot]
                span.insert(vec, coerce=False)
    return span


def is_formal(real) -> bool:
    rs = relation_space(real)
    return rs.dim_F == rs.dim_K


def formalization(real) -> Realization:
    """The realization cut out by the orthogonal complement of the weight-3 span.

    Rows are a canonical basis of F-perp; column i is the i-th coordinate
    form restricted to it.  A zero column would mean a degenerate coordinate
    and raises rather than being dropped silently.
    """
    rs = relation_space(real)
    perp = kernel_basis([list(r) for r in rs.weight3], real.ncols, real.field)
    return Realization([list(r) for r in perp.rows], real.field)


def is_locally_formal(real) -> bool:
    """Formality of the subarrangement of every flat (rank <= 2 is automatic)."""
    field = real.field
    M = from_matrix(real)
    for level in M.flats().flats_by_rank[3:]:
        for flat in level:
            labels = sorted(flat)
            sub = real.column_submatrix(labels)
            kern = kernel_basis(sub, len(labels), field)
            f_basis = EchelonBasis(len(labels), field)
            for vec in _triple_relation_vectors(real, M, labels):
                f_basis.insert(vec, coerce=False)
            if f_basis.dim != kern.dim:
                return False
    return True


def has_lc_spanning_basis(M):
    """A basis whose line-closure is the whole ground set, if one exists."""
    full = M.full_mask
    r = M.full_rank
    for combo in itertools.combinations(range(1, M.n + 1), r):
        m = mask_of(combo, M.n)
        if M.rank_mask(m) == r and line_closure_mask(M, m) == full:
            return frozenset(combo)
    return None


def locally_lc_spanning(M) -> bool:
    """Whether every flat has a basis whose line-closure equals the flat.

    Flats of rank <= 2 qualify automatically: two points line-close to their
    line, and points and the bottom are their own closures.
    """
    for level in M.flats().flats_by_rank[3:]:
        for flat in level:
            fm = mask_of(flat, M.n)
            r = M.rank_mask(fm)
            if not any(
                M.rank_mask(mask_of(b, M.n)) == r
                and line_closure_mask(M, mask_of(b, M.n)) == fm
                for b in itertools.combinations(sorted(flat), r)
            ):
                return False
    return True


def _disjoint_pair_closures_meet(M, circuit):
    labels = sorted(circuit)
    for pair in itertools.combinations(labels, 2):
        rest = [x for x in labels if x not in pair]
        cl1 = M.closure_mask(mask_of(pair, M.n))
        for pair2 in itertools.combinations(rest, 2):
            if cl1 & M.closure_mask(mask_of(pair2, M.n)):
                return True
    return False


def parallel_condition(M, variant="auto") -> bool:
    """Whether every large circuit has two disjoint point pairs with meeting
    closures -- a sufficient condition for line-closedness.

    variant="full" checks every circuit of size >= 4.  variant="weak" (rank 3
    only) checks the circuits through one distinguished point, trying every
    choice of that point; this weaker test still suffices in rank 3.
    variant="auto" accepts either: the full test, or the weak one when the
    rank is 3.
    """
    big = [c for c in M.circuits() if len(c) >= 4]
    if variant not in ("auto", "full", "weak"):
        raise OscalcError(f"unknown variant {variant!r}")
    if variant in ("auto", "full"):
        if all(_disjoint_pair_closures_meet(M, c) for c in big):
            return True
        if variant == "full":
            return False
    if M.full_rank != 3:
        if variant == "weak":
            raise OscalcError("the weakened test applies to rank-3 matroids only")
        return False
    for t in range(1, M.n + 1):
        if all(
            _disjoint_pair_closures_meet(M, c) for c in big if t in c
        ):
            return True
    return False


def doublepoint_witness(M):
    """A basis all of whose point pairs are closed, if the matroid has one.

    When n exceeds the rank, such a basis is line-closed but not closed, so
    the algebra of the matroid cannot be quadratic.
    """
    r = M.full_rank
    for combo in itertools.combinations(range(1, M.n + 1), r):
        m = mask_of(combo, M.n)
        if M.rank_mask(m) != r:
            continue
        if all(
            M.closure_mask(mask_of(pair, M.n)) == mask_of(pair, M.n)
            for pair in itertools.combinations(combo, 2)
        ):
            return frozenset(combo)
    return None


SECTION_ATTEMPTS = 40


def generic_section(real, r, seed) -> Realization:
    """Restrict the forms to a pseudo-random r-dimensional subspace.

    The result is certified: its matroid must equal the rank-r truncation of
    the input's matroid, otherwise another subspace is drawn.  Deterministic
    for a fixed seed.
    """
    if not 3 <= r <= real.nrows:
        raise OscalcError(f"section rank {r} outside 3..{real.nrows}")
    field = real.field
    base = from_matrix(real)
    target = base.truncation(r)
    a_rows = [list(row) for row in real.rows]
    for attempt in range(SECTION_ATTEMPTS):
        rng = random.Random(seed * 1009 + attempt)
        proj = [
            [field.coerce(rng.randrange(-9, 10)) for _ in range(real.nrows)]
            for _ in range(r)
        ]
        rows = mat_mul(proj, a_rows, field)
        try:
            cand = Realization(rows, field)
        except (NotSimpleError, OscalcError):
            continue
        if ranks_equal(from_matrix(cand), target):
            return cand
    raise SectionError(
        f"no certified generic section after {SECTION_ATTEMPTS} draws (seed={seed})"
    )
