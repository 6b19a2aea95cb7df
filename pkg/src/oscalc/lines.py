"""Line-closure and r-closure operators, the lattice of line-closed sets,
line-closedness tests, Whitney numbers and the characteristic polynomial.

The line-closure lc(S) is the least set containing S that also contains the
matroid closure of each of its 2-point subsets; it is idempotent, monotone,
extensive, and satisfies lc(S) <= cl(S).  A matroid is line-closed when every
line-closed set is a flat.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import OscalcError
from .util import Verdict, bits_of, check_ground_size, mask_of, popcount, set_of


def _pair_closure_table(M):
    table = M._memos.get("cl2")
    if table is None:
        table = {}
        for i in range(1, M.n + 1):
            for j in range(i + 1, M.n + 1):
                m = (1 << (i - 1)) | (1 << (j - 1))
                table[m] = M.closure_mask(m)
        M._memos["cl2"] = table
    return table


def line_closure_mask(M, mask) -> int:
    memo = M._memos.setdefault("lc", {})
    out = memo.get(mask)
    if out is not None:
        return out
    table = _pair_closure_table(M)
    cur = mask
    while True:
        nxt = cur
        labels = list(bits_of(cur))
        for a in range(len(labels)):
            for b in range(a + 1, len(labels)):
                nxt |= table[(1 << (labels[a] - 1)) | (1 << (labels[b] - 1))]
        if nxt == cur:
            break
        cur = nxt
    memo[mask] = cur
    return cur


def line_closure(M, S) -> frozenset:
    return set_of(line_closure_mask(M, mask_of(S, M.n)))


def r_closure_mask(M, mask, r) -> int:
    if r < 1:
        raise OscalcError(f"r-closure needs r >= 1, got {r}")
    if r == 1:
        return mask  # singleton closures are singletons in a simple matroid
    if r == 2:
        return line_closure_mask(M, mask)
    memo = M._memos.setdefault(("rc", r), {})
    out = memo.get(mask)
    if out is not None:
        return out
    cur = mask
    while True:
        nxt = line_closure_mask(M, cur)
        labels = list(bits_of(nxt))
        for size in range(3, min(r, len(labels)) + 1):
            for combo in itertools.combinations(labels, size):
                nxt |= M.closure_mask(mask_of(combo, M.n))
        if nxt == cur:
            break
        cur = nxt
    memo[mask] = cur
    return cur


def r_closure(M, S, r) -> frozenset:
    return set_of(r_closure_mask(M, mask_of(S, M.n), r))


def is_line_closed(M, method="bases") -> Verdict:
    """Decide whether every line-closed set is a flat.

    method="bases": for every flat X and every basis B of X, check
    lc(B) = X; a failing basis yields the witness lc(B), which is
    line-closed but not closed.  method="exhaustive" scans all subsets
    and serves as the independent oracle.
    """
    if method == "exhaustive":
        check_ground_size(M.n, M._allow_large, "line-closed scan")
        for mask in range(1 << M.n):
            if line_closure_mask(M, mask) == mask and M.closure_mask(mask) != mask:
                return Verdict(False, set_of(mask))
        return Verdict(True)
    if method != "bases":
        raise OscalcError(f"unknown method {method!r}")
    for level in M.flats().flats_by_rank:
        for flat in level:
            fm = mask_of(flat, M.n)
            r = M.rank_mask(fm)
            for basis in itertools.combinations(sorted(flat), r):
                bm = mask_of(basis, M.n)
                if M.rank_mask(bm) != r:
                    continue
                lc = line_closure_mask(M, bm)
                if lc != fm:
                    return Verdict(False, set_of(lc))
    return Verdict(True)


def is_r_closed(M, r) -> bool:
    """Whether every r-closed subset is a flat; r=2 agrees with is_line_closed."""
    check_ground_size(M.n, M._allow_large, "r-closed scan")
    for mask in range(1 << M.n):
        if r_closure_mask(M, mask, r) == mask and M.closure_mask(mask) != mask:
            return False
    return True


@dataclass(frozen=True, eq=False)
class LcLattice:
    """All line-closed sets ordered by inclusion, with Moebius values.

    The join of two members is the line-closure of their union.  The lattice
    need not be graded; chain lengths can differ.
    """

    matroid: object
    sets: tuple
    mobius_bar: dict
    _covers: dict = field(default_factory=dict)

    def __contains__(self, X):
        return frozenset(X) in self.mobius_bar

    def __len__(self):
        return len(self.sets)

    def join(self, A, B):
        return line_closure(self.matroid, frozenset(A) | frozenset(B))

    def upper_covers(self, X):
        X = frozenset(X)
        got = self._covers.get(X)
        if got is None:
            above = [Y for Y in self.sets if X < Y]
            got = tuple(
                Y for Y in above if not any(X < Z < Y for Z in above)
            )
            self._covers[X] = got
        return got

    def maximal_chains(self):
        """Yield every maximal chain from the bottom to the top, as tuples."""
        top = frozenset(range(1, self.matroid.n + 1))

        def walk(chain):
            here = chain[-1]
            if here == top:
                yield tuple(chain)
                return
            for up in self.upper_covers(here):
                yield from walk(chain + [up])

        yield from walk([frozenset()])


def line_closed_sets(M) -> LcLattice:
    check_ground_size(M.n, M._allow_large, "line-closed lattice enumeration")
    masks = [m for m in range(1 << M.n) if line_closure_mask(M, m) == m]
    masks.sort(key=lambda m: (popcount(m), m))
    sets = tuple(set_of(m) for m in masks)
    mobius = {}
    for k, xm in enumerate(masks):
        acc = 0
        for j in range(k):
            if masks[j] & xm == masks[j]:
                acc += mobius[sets[j]]
        mobius[sets[k]] = 1 if k == 0 else -acc
    return LcLattice(M, sets, mobius)


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial data: unsigned Whitney numbers w_0..w_rk.

    chi(t) = sum_p (-1)^p w_p t^(rk-p).
    """

    whitney: tuple

    @property
    def degree(self):
        return len(self.whitney) - 1

    def signed_coefficients(self):
        """Coefficients of chi(t), leading term first."""
        return tuple(
            (w if p % 2 == 0 else -w) for p, w in enumerate(self.whitney)
        )

    def evaluate(self, t):
        acc = 0
        for c in self.signed_coefficients():
            acc = acc * t + c
        return acc


def whitney_numbers(M) -> CharPoly:
    return CharPoly(M.flats().whitney_abs())


def integer_roots(cp) -> list | None:
    """The multiset of roots when chi factors over the integers, else None."""
    coeffs = list(cp.signed_coefficients())
    roots = []
    while len(coeffs) > 1:
        const = coeffs[-1]
        if const == 0:
            root = 0
        else:
            root = None
            for cand in _divisor_candidates(const):
                if _eval_int(coeffs, cand) == 0:
                    root = cand
                    break
            if root is None:
                return None
        coeffs = _synthetic_division(coeffs, root)
        roots.append(root)
    return sorted(roots)


def _divisor_candidates(const):
    a = abs(const)
    divs = sorted(d for d in range(1, a + 1) if a % d == 0)
    for d in divs:
        yield d
        yield -d


def _eval_int(coeffs, t):
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _synthetic_division(coeffs, root):
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + root * out[-1])
    return out


def lc_dimension(M) -> int:
    """Size of the smallest point set whose line-closure is the full ground set."""
    full = M.full_mask
    for size in range(1, M.n + 1):
        for combo in itertools.combinations(range(1, M.n + 1), size):
            if line_closure_mask(M, mask_of(combo, M.n)) == full:
                return size
    raise AssertionError("unreachable: lc([n]) = [n]")
