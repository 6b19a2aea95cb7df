"""Simple matroids on ground set {1, .., n} backed by a memoized rank oracle.

A matroid is constructed from one of three presentations: a rank-3 list of
nontrivial lines, a complete list of circuits, or an exact matrix of column
forms.  Truncation, duality (matrix presentations), restriction to a flat,
and graphic matroids are derived constructions.  All matroids here are
simple: no loops, no multiple points.

Matroids are immutable after construction; rank values are memoized per
instance and the memo is safe for concurrent idempotent writes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import AxiomError, GuardError, NotSimpleError, OscalcError
from .fields import QQ
from .linalg import kernel_basis, rank_of_rows
from .realization import Realization, essential_rows
from .util import bits_of, check_ground_size, mask_of, popcount, set_of


@dataclass(frozen=True)
class LinearOrder:
    """A total precedence order on 1..n: seq[0] is the smallest element."""

    seq: tuple

    def __post_init__(self):
        if sorted(self.seq) != list(range(1, len(self.seq) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.seq)}: {self.seq}")

    @classmethod
    def natural(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text):
        return cls(tuple(int(t) for t in text.replace(",", " ").split()))

    @cached_property
    def _pos(self):
        return {label: k for k, label in enumerate(self.seq)}

    @property
    def n(self):
        return len(self.seq)

    def position(self, label):
        return self._pos[label]

    def min(self, items):
        return min(items, key=self._pos.__getitem__)

    def sort(self, items):
        return tuple(sorted(items, key=self._pos.__getitem__))

    def is_natural(self):
        return all(self.seq[k] == k + 1 for k in range(len(self.seq)))


class Matroid:
    """A simple matroid with rank, closure and derived constructions."""

    def __init__(self, n, presentation, rank_mask_fn, name=None, allow_large=False,
                 check_simple=True):
        check_ground_size(n, allow_large, "matroid construction")
        self.n = n
        self.presentation = presentation
        self.name = name
        self._allow_large = allow_large
        self._rank_mask_fn = rank_mask_fn
        self._rank_memo = {}
        self._memos = {}
        if check_simple:
            self._check_simple()

    # -- rank oracle -------------------------------------------------------

    def rank_mask(self, mask) -> int:
        memo = self._rank_memo
        r = memo.get(mask)
        if r is None:
            r = self._rank_mask_fn(mask)
            memo[mask] = r
        return r

    def rank(self, subset) -> int:
        return self.rank_mask(mask_of(subset, self.n))

    @cached_property
    def full_rank(self) -> int:
        return self.rank_mask((1 << self.n) - 1)

    @property
    def ground(self) -> frozenset:
        return frozenset(range(1, self.n + 1))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_independent(self, subset) -> bool:
        m = mask_of(subset, self.n)
        return self.rank_mask(m) == popcount(m)

    def closure_mask(self, mask) -> int:
        memo = self._memos.setdefault("closure", {})
        c = memo.get(mask)
        if c is None:
            r = self.rank_mask(mask)
            c = mask
            for i in range(1, self.n + 1):
                b = 1 << (i - 1)
                if not mask & b and self.rank_mask(mask | b) == r:
                    c |= b
            memo[mask] = c
        return c

    def closure(self, subset) -> frozenset:
        return set_of(self.closure_mask(mask_of(subset, self.n)))

    def is_flat(self, subset) -> bool:
        m = mask_of(subset, self.n)
        return self.closure_mask(m) == m

    def _check_simple(self):
        for i in range(1, self.n + 1):
            if self.rank_mask(1 << (i - 1)) != 1:
                raise NotSimpleError(f"element {i} is a loop")
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                if self.rank_mask((1 << (i - 1)) | (1 << (j - 1))) != 2:
                    raise NotSimpleError(f"elements {i},{j} are parallel")

    # -- enumeration -------------------------------------------------------

    def circuits(self, max_size=None):
        """All circuits of size <= max_size (default: full rank + 1), sorted."""
        check_ground_size(self.n, self._allow_large, "circuit enumeration")
        if max_size is None:
            max_size = self.full_rank + 1
        found = []
        found_masks = []
        for size in range(1, max_size + 1):
            for combo in itertools.combinations(range(1, self.n + 1), size):
                m = mask_of(combo, self.n)
                if any(cm & m == cm for cm in found_masks):
                    continue
                if self.rank_mask(m) < size:
                    found.append(frozenset(combo))
                    found_masks.append(m)
        return found

    def flats(self):
        """The lattice of flats with Moebius values and covering relation."""
        memo = self._memos.get("flats")
        if memo is not None:
            return memo
        check_ground_size(self.n, self._allow_large, "flat enumeration")
        bottom = self.closure_mask(0)
        by_rank = [[bottom]]
        seen = {bottom}
        while True:
            current = by_rank[-1]
            nxt = set()
            for fm in current:
                for i in range(1, self.n + 1):
                    b = 1 << (i - 1)
                    if not fm & b:
                        nxt.add(self.closure_mask(fm | b))
            nxt -= seen
            if not nxt:
                break
            seen |= nxt
            by_rank.append(sorted(nxt))
        lattice = FlatLattice._build(self, by_rank)
        self._memos["flats"] = lattice
        return lattice

    # -- derived matroids ----------------------------------------------------

    def truncation(self, r):
        """Cap the rank at r (1 <= r <= rk); dependents gain every set of size > r."""
        if not 1 <= r <= self.full_rank:
            raise OscalcError(f"truncation rank {r} outside 1..{self.full_rank}")
        if r == self.full_rank:
            return self
        base = self
        return Matroid(
            self.n,
            ("truncation", base, r),
            lambda mask: min(base.rank_mask(mask), r),
            name=f"{self.name}^[{r}]" if self.name else None,
            allow_large=self._allow_large,
            check_simple=False,
        )

    def dual(self):
        """Linear dual: the matroid of a kernel basis of the realization."""
        if self.presentation[0] != "matrix":
            raise OscalcError("dual() requires a matrix presentation")
        real = self.presentation[1]
        kern = kernel_basis([list(r) for r in real.rows], real.ncols, real.field)
        if kern.dim == 0:
            raise NotSimpleError("dual is the rank-0 matroid: every element a loop")
        dual_real = Realization([list(r) for r in kern.rows], real.field)
        return from_matrix(
            dual_real,
            name=f"{self.name}*" if self.name else None,
            allow_large=self._allow_large,
        )

    def restriction(self, X):
        """The matroid induced on a flat X, relabelled to 1..|X| in increasing order."""
        xm = mask_of(X, self.n)
        if self.closure_mask(xm) != xm:
            raise OscalcError(f"restriction target {sorted(X)} is not a flat")
        labels = sorted(bits_of(xm))
        base = self

        def ranker(mask):
            parent = 0
            for k, lab in enumerate(labels):
                if mask & (1 << k):
                    parent |= 1 << (lab - 1)
            return base.rank_mask(parent)

        return Matroid(
            len(labels),
            ("restriction", base, tuple(labels)),
            ranker,
            name=f"{self.name}|{''.join(map(str, labels))}" if self.name else None,
            allow_large=self._allow_large,
            check_simple=False,
        )

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"Matroid(n={self.n}, rank={self.full_rank}, {self.presentation[0]}{tag})"


@dataclass(frozen=True, eq=False)
class FlatLattice:
    """The geometric lattice of flats, with Moebius values for intervals [0^, X]."""

    flats_by_rank: tuple
    mobius: dict
    covers: dict

    @classmethod
    def _build(cls, matroid, by_rank_masks):
        flats_by_rank = tuple(
            tuple(set_of(m) for m in level) for level in by_rank_masks
        )
        ordered = [(m, set_of(m)) for level in by_rank_masks for m in level]
        mobius = {}
        for k, (xm, xs) in enumerate(ordered):
            acc = 0
            for ym, ys in ordered[:k]:
                if ym & xm == ym:
                    acc += mobius[ys]
            mobius[xs] = 1 if k == 0 else -acc
        covers = {}
        for r in range(len(flats_by_rank) - 1):
            for low in flats_by_rank[r]:
                covers[low] = tuple(
                    up for up in flats_by_rank[r + 1] if low <= up
                )
        for top in flats_by_rank[-1]:
            covers[top] = ()
        return cls(flats_by_rank, mobius, covers)

    def all_flats(self):
        for level in self.flats_by_rank:
            yield from level

    def rank_of(self, flat):
        for r, level in enumerate(self.flats_by_rank):
            if flat in level:
                return r
        raise KeyError(flat)

    def __contains__(self, flat):
        return flat in self.mobius

    @property
    def top(self):
        return self.flats_by_rank[-1][0]

    @property
    def bottom(self):
        return self.flats_by_rank[0][0]

    def whitney_abs(self):
        """|mu| summed per rank: the unsigned Whitney numbers."""
        return tuple(
            sum(abs(self.mobius[f]) for f in level) for level in self.flats_by_rank
        )


# -- constructors ------------------------------------------------------------


def from_lines(n, lines, name=None, allow_large=False):
    """Rank-3 matroid on [n] with the given nontrivial lines (each >= 3 points).

    Any two listed lines may share at most one point; every pair of points not
    inside a listed line is independent of any third point outside it.
    """
    if n < 3:
        raise OscalcError(f"rank-3 line presentation needs n >= 3, got {n}")
    line_masks = []
    for line in lines:
        pts = sorted(set(line))
        if len(pts) < 3:
            raise AxiomError(f"line {pts} has fewer than 3 points")
        m = mask_of(pts, n)
        line_masks.append(m)
    for a in range(len(line_masks)):
        for b in range(a + 1, len(line_masks)):
            inter = line_masks[a] & line_masks[b]
            if popcount(inter) >= 2:
                raise NotSimpleError(
                    f"lines {sorted(set_of(line_masks[a]))} and "
                    f"{sorted(set_of(line_masks[b]))} share two points"
                )
    masks = tuple(line_masks)

    def ranker(mask):
        pc = popcount(mask)
        if pc <= 1:
            return pc
        if any(mask & lm == mask for lm in masks):
            return 2
        return min(pc, 3)

    return Matroid(n, ("lines", tuple(sorted(masks))), ranker,
                   name=name, allow_large=allow_large)


def from_circuits(n, circuits, name=None, allow_large=False):
    """Matroid on [n] whose independent sets contain none of the given circuits.

    The list must be the complete set of circuits; the circuit axioms
    (incomparability and weak elimination) are validated pairwise for n <= 12.
    """
    circuit_masks = []
    seen = set()
    for c in circuits:
        pts = sorted(set(c))
        m = mask_of(pts, n)
        if popcount(m) <= 2:
            raise NotSimpleError(f"circuit {pts} of size <= 2 (loop or multiple point)")
        if m not in seen:
            seen.add(m)
            circuit_masks.append(m)
    for a in range(len(circuit_masks)):
        for b in range(len(circuit_masks)):
            if a != b and circuit_masks[a] & circuit_masks[b] == circuit_masks[a]:
                raise AxiomError(
                    f"circuit {sorted(set_of(circuit_masks[a]))} contained in "
                    f"{sorted(set_of(circuit_masks[b]))}"
                )
    if n <= 12:
        _check_weak_elimination(circuit_masks)
    masks = tuple(circuit_masks)

    def independent(mask):
        return not any(cm & mask == cm for cm in masks)

    def ranker(mask):
        basis = 0
        for i in bits_of(mask):
            cand = basis | (1 << (i - 1))
            if independent(cand):
                basis = cand
        return popcount(basis)

    return Matroid(n, ("circuits", tuple(sorted(masks))), ranker,
                   name=name, allow_large=allow_large)


def _check_weak_elimination(circuit_masks):
    for a in range(len(circuit_masks)):
        for b in range(a + 1, len(circuit_masks)):
            ca, cb = circuit_masks[a], circuit_masks[b]
            common = ca & cb
            if not common:
                continue
            for e in bits_of(common):
                union_minus = (ca | cb) & ~(1 << (e - 1))
                if not any(cm & union_minus == cm for cm in circuit_masks):
                    raise AxiomError(
                        "weak elimination fails for circuits "
                        f"{sorted(set_of(ca))}, {sorted(set_of(cb))} at element {e}"
                    )


def from_matrix(realization, name=None, allow_large=False):
    """The matroid of the realization's columns; rank = exact column rank."""
    real = realization
    field = real.field

    def ranker(mask):
        labels = list(bits_of(mask))
        if not labels:
            return 0
        return rank_of_rows(real.column_submatrix(labels), len(labels), field)

    return Matroid(real.ncols, ("matrix", real), ranker,
                   name=name, allow_large=allow_large)


def from_graph(vertices, edges, name=None, allow_large=False):
    """Graphic matroid via the signed vertex-edge incidence matrix over Q.

    Edges are (u, v) vertex pairs; the smaller endpoint gets +1, the larger -1.
    Loops and repeated edges are rejected.
    """
    seen = set()
    cols = []
    for (u, v) in edges:
        if u == v:
            raise NotSimpleError(f"loop at vertex {u}")
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise OscalcError(f"edge ({u},{v}) outside vertex range 1..{vertices}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NotSimpleError(f"repeated edge {key}")
        seen.add(key)
        cols.append(key)
    rows = []
    for vtx in range(1, vertices + 1):
        row = []
        for (tail, head) in cols:
            row.append(1 if vtx == tail else (-1 if vtx == head else 0))
        rows.append(row)
    reduced = essential_rows(rows, QQ)
    real = Realization(reduced, QQ)
    return from_matrix(real, name=name, allow_large=allow_large)


def ranks_equal(m1, m2, allow_large=False):
    """Whether two matroids have identical rank tables (same n, all subsets)."""
    if m1.n != m2.n:
        return False
    check_ground_size(m1.n, allow_large or m1._allow_large, "rank table comparison")
    return all(
        m1.rank_mask(mask) == m2.rank_mask(mask) for mask in range(1 << m1.n)
    )
