"""Ready-made groups and tables used as fixtures and CLI building blocks."""

from __future__ import annotations

import itertools

from . import perm
from .group import FiniteGroup, group_from_elements


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_elements(range(n), lambda a, b: (a + b) % n, 0, labels=[str(i) for i in range(n)])


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    elems = [(a, b) for a in range(g1.order) for b in range(g2.order)]
    labels = [f"({g1.label(a)},{g2.label(b)})" for a, b in elems]

    def mul(x, y):
        return (g1.mul(x[0], y[0]), g2.mul(x[1], y[1]))

    return group_from_elements(elems, mul, (g1.identity, g2.identity), labels=labels)


def klein_four_group() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2))


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; elements (rotation, flip)."""
    elems = [(r, s) for s in range(2) for r in range(n)]
    labels = [("r%d" % r if s == 0 else "sr%d" % r) for s in range(2) for r in range(n)]

    def mul(x, y):
        r1, s1 = x
        r2, s2 = y
        r = (r1 + (n - r2 if s1 else r2)) % n
        return (r, s1 ^ s2)

    return group_from_elements(elems, mul, (0, 0), labels=labels)


def quaternion_group() -> FiniteGroup:
    """Order 8: signed units 1, i, j, k; element (sign, axis)."""
    axes = "1ijk"
    elems = [(s, x) for s in range(2) for x in range(4)]
    labels = [("" if s == 0 else "-") + axes[x] for s, x in elems]
    # product of pure units i, j, k: table over axis indices with result sign
    unit = {
        (0, 0): (0, 0),
        (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
        (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
        (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2),
    }

    def mul(x, y):
        s1, a1 = x
        s2, a2 = y
        if a1 == 0:
            return ((s1 + s2) % 2, a2)
        if a2 == 0:
            return ((s1 + s2) % 2, a1)
        s, a = unit[(a1, a2)]
        return ((s1 + s2 + s) % 2, a)

    return group_from_elements(elems, mul, (0, 0), labels=labels)


def symmetric_group(m: int) -> FiniteGroup:
    """Sym({0..m-1}) with elements in lexicographic order (identity first)."""
    elems = [tuple(p) for p in itertools.permutations(range(m))]
    labels = [perm.cycle_notation(p) for p in elems]
    return group_from_elements(elems, perm.compose, perm.identity(m), labels=labels)


def heisenberg_group() -> FiniteGroup:
    """Unitriangular 3x3 matrices over F3, order 27, exponent 3.

    Element (x, y, z) is indexed as 9x + 3y + z; the product is
    (x1+x2, y1+y2, z1+z2+x1*y2) mod 3. Generators a=(1,0,0), b=(0,1,0)
    sit at indices 9 and 3 and satisfy a^3=b^3=e with [a,b] central.
    """
    elems = [(x, y, z) for x in range(3) for y in range(3) for z in range(3)]
    labels = [f"({x},{y},{z})" for x, y, z in elems]

    def mul(u, v):
        return ((u[0] + v[0]) % 3, (u[1] + v[1]) % 3, (u[2] + v[2] + u[0] * v[1]) % 3)

    return group_from_elements(elems, mul, (0, 0, 0), labels=labels)


HEISENBERG_A = 9
HEISENBERG_B = 3


# First non-associative table emitted by the order-8 search (lexicographic
# order); revalidated by tests. A twisted copy of the xor table on {0..7}.
PROPER_GYROGROUP_8 = (
    (0, 1, 2, 3, 4, 5, 6, 7),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (2, 3, 0, 1, 6, 7, 4, 5),
    (3, 2, 1, 0, 7, 6, 5, 4),
    (4, 5, 6, 7, 0, 1, 2, 3),
    (5, 4, 7, 6, 1, 0, 3, 2),
    (6, 7, 4, 5, 3, 2, 1, 0),
    (7, 6, 5, 4, 2, 3, 0, 1),
)
