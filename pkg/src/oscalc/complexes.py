"""Broken circuits, nbc and nbb complexes, r-nbb sets, and no-bounded-below
sets for partial atom orders, together with the signed Moebius sums.

All face predicates work on a fixed linear precedence order.  A sorted set
(i_1, .., i_p) is nbc when each i_k is the order-minimum of the closure of
the suffix {i_k, .., i_p}; nbb replaces closure by line-closure, and r-nbb by
r-closure.  Faces are plain frozensets; the order only affects which sets
qualify, never attaches signs here.
"""

from __future__ import annotations

import itertools
from functools import cached_property

from .errors import OscalcError
from .lines import line_closed_sets, line_closure_mask, r_closure_mask
from .matroid import LinearOrder
from .util import Verdict, bits_of, check_ground_size, mask_of, popcount, set_of


class SimplicialComplex:
    """A finite simplicial complex on 1..n, held by its facets."""

    def __init__(self, n, facets):
        self.n = n
        fs = [frozenset(f) for f in facets]
        maximal = [f for f in fs if not any(f < g for g in fs)]
        self.facets = frozenset(maximal) if maximal else frozenset([frozenset()])

    @classmethod
    def from_predicate(cls, n, pred, allow_large=False):
        """Build from a face predicate over bitmasks; enumerates 2^n subsets."""
        check_ground_size(n, allow_large, "face enumeration")
        faces = [m for m in range(1 << n) if pred(m)]
        face_set = set(faces)
        facets = [
            set_of(m)
            for m in faces
            if not any(
                (m | (1 << i)) in face_set
                for i in range(n)
                if not m & (1 << i)
            )
        ]
        cx = cls(n, facets)
        cx._faces = frozenset(set_of(m) for m in faces)
        return cx

    @cached_property
    def _faces(self):
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(map(frozenset, itertools.combinations(f, k)))
        return frozenset(out)

    def faces(self, size=None):
        if size is None:
            return self._faces
        return frozenset(f for f in self._faces if len(f) == size)

    def face_counts(self):
        """Count of faces of each cardinality 0..n."""
        counts = [0] * (self.n + 1)
        for f in self._faces:
            counts[len(f)] += 1
        return tuple(counts)

    @property
    def dim(self):
        return max(len(f) for f in self.facets) - 1

    def __contains__(self, S):
        S = frozenset(S)
        return any(S <= f for f in self.facets)

    def __le__(self, other):
        return all(f in other for f in self.facets)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        shown = sorted(tuple(sorted(f)) for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets={shown})"


def broken_circuits(M, order) -> list:
    """The sets C - min(C) over all circuits C, deduplicated and sorted."""
    out = {frozenset(c) - {order.min(c)} for c in M.circuits()}
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _suffix_pred(M, order, closure_of_mask):
    """Face predicate: each element is the order-min of the closure of its suffix."""
    pos = [0] * (M.n + 1)
    for k, label in enumerate(order.seq):
        pos[label] = k

    def pred(mask):
        labels = sorted(bits_of(mask), key=lambda i: pos[i])
        suffix = 0
        for i in reversed(labels):
            suffix |= 1 << (i - 1)
            cl = closure_of_mask(suffix)
            if min(bits_of(cl), key=lambda j: pos[j]) != i:
                return False
        return True

    return pred


def nbc(M, order=None) -> SimplicialComplex:
    """The broken-circuit-free complex for the given precedence order."""
    order = order or LinearOrder.natural(M.n)
    pred = _suffix_pred(M, order, M.closure_mask)
    return SimplicialComplex.from_predicate(M.n, pred, allow_large=M._allow_large)


def nbb(M, order=None) -> SimplicialComplex:
    """Like nbc but with line-closure in place of matroid closure."""
    order = order or LinearOrder.natural(M.n)
    pred = _suffix_pred(M, order, lambda m: line_closure_mask(M, m))
    return SimplicialComplex.from_predicate(M.n, pred, allow_large=M._allow_large)


def r_nbb(M, order, r) -> SimplicialComplex:
    """The r-closure variant; r=2 coincides with nbb, r=1 keeps every subset."""
    order = order or LinearOrder.natural(M.n)
    pred = _suffix_pred(M, order, lambda m: r_closure_mask(M, m, r))
    return SimplicialComplex.from_predicate(M.n, pred, allow_large=M._allow_large)


def nbc_by_flat(M, order, X) -> list:
    """nbc faces whose closure is exactly the flat X; there are |mu(X)| of them."""
    xm = mask_of(X, M.n)
    if M.closure_mask(xm) != xm:
        raise OscalcError(f"{sorted(X)} is not a flat")
    cx = nbc(M, order)
    return sorted(
        (f for f in cx.faces() if M.closure_mask(mask_of(f, M.n)) == xm),
        key=lambda s: (len(s), sorted(s)),
    )


class PartialOrder:
    """A partial precedence order on 1..n, stored as its full relation."""

    def __init__(self, n, pairs):
        self.n = n
        below = {i: {i} for i in range(1, n + 1)}  # below[b]: all a with a <= b
        for a, b in pairs:
            if not (1 <= a <= n and 1 <= b <= n):
                raise OscalcError(f"pair ({a},{b}) outside 1..{n}")
            below[b].add(a)
        changed = True
        while changed:
            changed = False
            for b in range(1, n + 1):
                merged = set(below[b])
                for a in list(below[b]):
                    merged |= below[a]
                if merged != below[b]:
                    below[b] = merged
                    changed = True
        for a in range(1, n + 1):
            for b in below[a]:
                if b != a and a in below[b]:
                    raise OscalcError(f"antisymmetry fails: {a} and {b}")
        self._below = {b: frozenset(s) for b, s in below.items()}

    @classmethod
    def from_linear(cls, order):
        pairs = [
            (order.seq[k], order.seq[k + 1]) for k in range(len(order.seq) - 1)
        ]
        return cls(order.n, pairs)

    @classmethod
    def trivial(cls, n):
        return cls(n, [])

    def le(self, a, b):
        return a in self._below[b]

    def lt(self, a, b):
        return a != b and a in self._below[b]

    def unique_min(self, items):
        items = list(items)
        for m in items:
            if all(self.le(m, x) for x in items):
                return m
        return None

    def linear_extensions(self, limit=None):
        """Deterministic topological orders (ascending tie-break), up to limit."""
        out = []

        def grow(prefix, remaining):
            if limit is not None and len(out) >= limit:
                return
            if not remaining:
                out.append(LinearOrder(tuple(prefix)))
                return
            for x in sorted(remaining):
                if all(not self.lt(y, x) for y in remaining if y != x):
                    grow(prefix + [x], remaining - {x})

        grow([], set(range(1, self.n + 1)))
        return out


def nbb_partial(M, porder) -> list:
    """No-bounded-below subsets of the line-closed-set lattice under a partial
    atom order; requires every nonempty line-closed set to have a unique
    smallest element.
    """
    lattice = line_closed_sets(M)
    for X in lattice.sets:
        if X and porder.unique_min(X) is None:
            raise OscalcError(
                f"line-closed set {sorted(X)} has no unique smallest element"
            )
    n = M.n
    bad = set()
    for mask in range(1, 1 << n):
        lc = line_closure_mask(M, mask)
        members = list(bits_of(mask))
        if any(
            all(porder.lt(a, t) for t in members)
            for a in bits_of(lc & ~mask)
        ):
            bad.add(mask)
    good = [True] * (1 << n)
    order_masks = sorted(range(1 << n), key=popcount)
    for mask in order_masks:
        if mask == 0:
            continue
        if mask in bad:
            good[mask] = False
            continue
        m = mask
        while m:
            low = m & (-m)
            if not good[mask & ~low]:
                good[mask] = False
                break
            m &= ~low
    return sorted(
        (set_of(m) for m in range(1 << n) if good[m]),
        key=lambda s: (len(s), sorted(s)),
    )


def nbb_mobius_sum(M, order, X) -> int:
    """Sum of (-1)^|S| over nbb sets S with line-closure X; equals mu-bar(X)."""
    xm = mask_of(X, M.n)
    if line_closure_mask(M, xm) != xm:
        raise OscalcError(f"{sorted(X)} is not line-closed")
    cx = nbb(M, order)
    return sum(
        (-1) ** len(f)
        for f in cx.faces()
        if line_closure_mask(M, mask_of(f, M.n)) == xm
    )


def nbb_equals_nbc_all_orders(M, exhaustive_limit=7) -> Verdict:
    """Whether nbb(M, o) = nbc(M, o) for every linear order o.

    Exhaustive over all n! orders for n <= exhaustive_limit.  For larger n the
    answer follows from the line-closedness decision: a line-closed witness set
    X yields a constructive order separating the complexes, and line-closed
    matroids satisfy the equality for every order.
    """
    from .lines import is_line_closed

    if M.n <= exhaustive_limit:
        for perm in itertools.permutations(range(1, M.n + 1)):
            order = LinearOrder(perm)
            if nbc(M, order) != nbb(M, order):
                return Verdict(False, order)
        return Verdict(True)
    lc_verdict = is_line_closed(M)
    if lc_verdict.ok:
        return Verdict(True)
    order = _separating_order(M, lc_verdict.witness)
    if nbc(M, order) != nbb(M, order):
        return Verdict(False, order)
    raise AssertionError("separating order failed to distinguish nbb from nbc")


def _separating_order(M, witness):
    """An order putting a point of cl(X)-X before min(X), for a line-closed
    non-closed witness X."""
    xm = mask_of(witness, M.n)
    outside = M.closure_mask(xm) & ~xm
    i = next(bits_of(outside))
    rest = [j for j in range(1, M.n + 1) if j != i]
    return LinearOrder(tuple([i] + rest))
