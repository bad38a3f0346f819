"""Permutations of {0..n-1} stored as image tuples.

The composition convention is fixed package-wide: ``compose(p, q)`` applies
q first, then p, so ``compose(p, q)[x] == p[q[x]]``.
"""

from __future__ import annotations

from typing import Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(seq: Sequence[int]) -> bool:
    n = len(seq)
    seen = [False] * n
    for v in seq:
        if not isinstance(v, int) or v < 0 or v >= n or seen[v]:
            return False
        seen[v] = True
    return True


def compose(p: Perm, q: Perm) -> Perm:
    """(p*q)(x) = p(q(x))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Perm:
    out = list(range(n))
    out[i], out[j] = j, i
    return tuple(out)


def from_cycle(n: int, points: Sequence[int]) -> Perm:
    out = list(range(n))
    for k, x in enumerate(points):
        out[x] = points[(k + 1) % len(points)]
    return tuple(out)


def cycles(p: Perm, skip_fixed: bool = True) -> list[tuple[int, ...]]:
    """Disjoint cycle decomposition, each cycle starting at its least point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        if len(cyc) > 1 or not skip_fixed:
            out.append(tuple(cyc))
    return out


def cycle_notation(p: Perm, one_based: bool = True) -> str:
    """Display string such as '(1 2)(3 4)'; 'I' for the identity."""
    cyc = cycles(p)
    if not cyc:
        return "I"
    off = 1 if one_based else 0
    return "".join("(" + " ".join(str(x + off) for x in c) + ")" for c in cyc)


def sign(p: Perm) -> int:
    """Parity: 0 for even permutations, 1 for odd."""
    return sum(len(c) - 1 for c in cycles(p)) % 2


def perm_order(p: Perm) -> int:
    k = 1
    q = p
    ident = identity(len(p))
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


def random_fixing_zero(n: int, rng) -> Perm:
    """Random permutation of {0..n-1} with 0 fixed, drawn from ``rng``."""
    tail = list(range(1, n))
    rng.shuffle(tail)
    return (0, *tail)
