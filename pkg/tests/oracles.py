"""Independent brute-force models used to cross-check the kernel.

Everything here is deliberately naive: the lamination is grown by
iterated preimages under angle doubling, with the correct preimage
pairing selected by planarity alone.
"""

from fractions import Fraction

from basilica.circle import mod1

SEED_LEAF = frozenset((Fraction(1, 3), Fraction(2, 3)))


def crosses(p: frozenset, q: frozenset) -> bool:
    """Do the chords with these endpoint sets interleave on the circle?"""
    a, b = sorted(p)
    inside = sum(1 for t in q if a < t < b)
    return inside == 1


def _short(leaf) -> bool:
    # leaves never exceed the longest (major) leaf length of 1/3
    a, b = sorted(leaf)
    return min(b - a, 1 - (b - a)) <= Fraction(1, 3)


def _compatible(leaf, others) -> bool:
    if not _short(leaf):
        return False
    for other in others:
        if other == leaf:
            continue
        if crosses(leaf, other) or (leaf & other):
            return False
    return True


def preimage_closure(levels: int) -> set:
    """All leaves obtained from {1/3,2/3} by `levels` rounds of preimages.

    Each leaf has two candidate preimage pairings; exactly one avoids
    crossings and shared endpoints with everything accumulated so far.
    """
    leaves = {SEED_LEAF}
    frontier = {SEED_LEAF}
    for _ in range(levels):
        new: set = set()
        for leaf in frontier:
            a, b = sorted(leaf)
            ha = (mod1(a / 2), mod1(a / 2 + Fraction(1, 2)))
            hb = (mod1(b / 2), mod1(b / 2 + Fraction(1, 2)))
            straight = {frozenset((ha[0], hb[0])), frozenset((ha[1], hb[1]))}
            crossed = {frozenset((ha[0], hb[1])), frozenset((ha[1], hb[0]))}
            valid = []
            for pairing in (straight, crossed):
                pool = leaves | new | pairing
                if all(_compatible(piece, pool) for piece in pairing):
                    valid.append(pairing)
            assert len(valid) == 1, f"pairing of preimages of {leaf} not forced"
            new |= valid[0]
        frontier = new - leaves
        leaves |= new
    return leaves
