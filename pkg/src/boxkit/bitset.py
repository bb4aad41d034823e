"""Integer-bitmask helpers shared by the search modules."""

from __future__ import annotations

from typing import Iterable


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def maximal_masks(masks: Iterable[int]) -> set[int]:
    """Inclusion-wise maximal members of a family of sets.

    Duplicates collapse.  Sets are visited by decreasing size; for each one
    the candidates containing it are the AND of per-element occurrence
    bitmasks over the strictly larger sets seen so far.
    """
    by_size: dict[int, list[int]] = {}
    for m in set(masks):
        by_size.setdefault(m.bit_count(), []).append(m)
    occ: dict[int, int] = {}
    seen_count = 0
    kept: set[int] = set()
    for size in sorted(by_size, reverse=True):
        group = by_size[size]
        everyone = (1 << seen_count) - 1
        for m in group:
            c = everyone
            r = m
            while c and r:
                low = r & -r
                c &= occ.get(low.bit_length() - 1, 0)
                r ^= low
            if not c:
                kept.add(m)
        for m in group:
            bit = 1 << seen_count
            for e in bits(m):
                occ[e] = occ.get(e, 0) | bit
            seen_count += 1
    return kept
