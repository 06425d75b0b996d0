"""Bit-set helpers and the down-closure / join-closure fixpoint engine.

Subsets of a structure with n elements are Python ints used as bit masks
(bit i set = element i present).  Masks are arbitrary width, so nothing
here caps n at 64; the numpy fast paths elsewhere do their own bounds
checks and fall back to these routines.
"""

from __future__ import annotations


def bits_of(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


class IdealClosure:
    """Closure under down-sets and the joins of designated pairs.

    Parameters
    ----------
    down_masks:
        ``down_masks[i]`` is the mask of all elements <= i (including i).
    join_pairs:
        iterable of ``(pair_mask, join_index)``: whenever both elements of
        ``pair_mask`` are present the element ``join_index`` must be added.
    bottom:
        mask forced into every closed set (the empty join), usually ``{0}``.

    The fixpoint always terminates: masks only grow and the carrier is finite.
    """

    def __init__(self, down_masks, join_pairs, bottom=0):
        self.down_masks = list(down_masks)
        self.join_pairs = [(pm, 1 << j) for pm, j in join_pairs]
        self.bottom = bottom

    def close(self, mask: int) -> int:
        mask |= self.bottom
        while True:
            grown = mask
            acc = grown
            for i in bits_of(grown):
                acc |= self.down_masks[i]
            for pair_mask, join_bit in self.join_pairs:
                if pair_mask & ~acc == 0:
                    acc |= join_bit
            if acc == mask:
                return mask
            mask = acc

    def is_closed(self, mask: int) -> bool:
        return self.close(mask) == mask


def generate_join_family(generators, close, max_size=None):
    """All joins of subsets of ``generators`` in a closure system.

    ``close`` maps a mask to its closure; the family returned is the closure
    of the generator closures under binary join (= closure of union), plus
    the bottom ``close(0)``.  For finite closure systems in which every
    closed set is the join of the generator closures below it — the case for
    all carriers built in this package — this enumerates the whole carrier.
    """
    family = {close(0)}
    gens = [close(g) for g in generators]
    family.update(gens)
    frontier = list(family)
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                if g & ~w == 0:
                    continue
                j = close(w | g)
                if j not in family:
                    family.add(j)
                    new.append(j)
                    if max_size is not None and len(family) > max_size:
                        return None
        frontier = new
    return family
