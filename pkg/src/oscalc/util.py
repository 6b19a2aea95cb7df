"""Bitmask helpers for subsets of {1, .., n}, plus small shared utilities.

Ground-set labels are 1-based everywhere in the public API; internally a
subset is an int whose bit (i-1) encodes membership of label i.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import GuardError

DEFAULT_MAX_N = 14


def enumeration_limit() -> int:
    """Largest ground-set size accepted without an explicit override.

    Overridden by the OSCALC_MAX_N environment variable.
    """
    raw = os.environ.get("OSCALC_MAX_N")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_N


def check_ground_size(n, allow_large, what="enumeration"):
    limit = enumeration_limit()
    if n > limit and not allow_large:
        raise GuardError(
            f"{what} refused for n={n} > {limit}; pass allow_large=True "
            "or set OSCALC_MAX_N"
        )


def mask_of(items, n=None) -> int:
    """Pack labels into a bitmask; labels must lie in 1..n when n is given."""
    m = 0
    for i in items:
        if i < 1 or (n is not None and i > n):
            raise ValueError(f"label {i} outside 1..{n}")
        m |= 1 << (i - 1)
    return m


def set_of(mask) -> frozenset:
    return frozenset(bits_of(mask))


def bits_of(mask):
    """Yield the labels of a mask in increasing order."""
    i = 1
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask) -> int:
    return mask.bit_count() if hasattr(mask, "bit_count") else bin(mask).count("1")


def submasks_of_size(mask, k):
    """All k-element submasks of mask, in increasing numeric order."""
    bits = [1 << (i - 1) for i in bits_of(mask)]
    if k > len(bits):
        return
    if k == 0:
        yield 0
        return
    idx = list(range(k))
    while True:
        m = 0
        for j in idx:
            m |= bits[j]
        yield m
        for pos in range(k - 1, -1, -1):
            if idx[pos] != pos + len(bits) - k:
                break
        else:
            return
        idx[pos] += 1
        for q in range(pos + 1, k):
            idx[q] = idx[q - 1] + 1


@dataclass(frozen=True)
class Verdict:
    """A boolean decision carrying a witness explaining a negative answer.

    Truthiness matches ``ok``, so verdicts drop into boolean contexts.
    """

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok
