"""Gyrogroups: validation, gyrations, subgyrogroups and homomorphisms.

A gyrogroup table is an n x n Cayley table with identity pinned to index 0.
Row 0 must be the identity row, every element needs a left inverse, and the
gyration maps

    gyr[a,b](z) = (a+b)' + (a + (b + z))        (a' the left inverse of a)

must be table automorphisms making the operation gyroassociative,
    a + (b + c) = (a + b) + gyr[a,b](c),
with gyr[a+b, b] = gyr[a,b] for all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import perm
from .errors import TableFormatError
from .group import FiniteGroup
from .perm import Perm
from .report import AxiomReport, make_report


@dataclass(frozen=True, eq=False)
class Gyrogroup:
    """Validated gyrogroup; construct through load_gyrogroup only."""

    table: tuple[tuple[int, ...], ...]
    left_inverse: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None
    _gyr_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.left_inverse[a]

    def row(self, a: int) -> Perm:
        """Left translation z -> a + z."""
        return self.table[a]

    def gyr(self, a: int, b: int) -> Perm:
        """Cached gyration gyr[a,b]; fixes 0."""
        got = self._gyr_cache.get((a, b))
        if got is None:
            got = gyration(self.table, self.left_inverse, a, b)
            self._gyr_cache[(a, b)] = got
        return got

    def all_gyrations(self) -> list[Perm]:
        """Force the full cache; distinct gyrations in first-seen order."""
        seen = []
        for a in range(self.order):
            for b in range(self.order):
                g = self.gyr(a, b)
                if g not in seen:
                    seen.append(g)
        return seen

    def is_associative(self) -> bool:
        t = np.array(self.table)
        return all(np.array_equal(t[t[a], :], t[a, t]) for a in range(self.order))

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)


def gyration(table: Sequence[Sequence[int]], left_inverse: Sequence[int], a: int, b: int) -> Perm:
    ab = table[a][b]
    inv_ab = left_inverse[ab]
    return tuple(table[inv_ab][table[a][table[b][z]]] for z in range(len(table)))


def load_gyrogroup(
    table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None
) -> Union[Gyrogroup, AxiomReport]:
    """Validate a raw table; the Gyrogroup on success, a report otherwise.

    Malformed input (non-square, out-of-range entries) raises
    TableFormatError instead of producing a report. The report carries the
    first witness per violated axiom. Cost is O(n^3) for gyroassociativity
    plus O(n^4) for the automorphism checks; fine for n <= 64.
    """
    arr = _check_shape(table)
    n = len(arr)
    violations = []
    for b in range(n):
        if arr[0][b] != b:
            violations.append(("left-identity", (b,)))
            break
    # left translations must be bijections for gyrations to be well defined;
    # not an axiom verbatim but forced, so its failure is reported as its own id
    for a in range(n):
        if not perm.is_perm([int(x) for x in arr[a]]):
            violations.append(("left-translation-bijective", (a,)))
            break
    left_inverse = []
    for a in range(n):
        col = list(arr[:, a])
        if 0 not in col:
            violations.append(("left-inverse", (a,)))
            break
        left_inverse.append(col.index(0))
    if violations:
        return make_report("gyrogroup", violations)

    linv = left_inverse
    t = [tuple(int(x) for x in row) for row in arr]
    gyrs = {}
    first = {}
    for a in range(n):
        for b in range(n):
            g = gyration(t, linv, a, b)
            gyrs[(a, b)] = g
            if not perm.is_perm(g) and "gyration-bijective" not in first:
                first["gyration-bijective"] = (a, b)
    # gyroassociativity: a+(b+c) == (a+b) + gyr[a,b](c)
    tt = np.array(t)
    for a in range(n):
        if "gyroassociativity" in first:
            break
        for b in range(n):
            g = np.array(gyrs[(a, b)])
            lhs = tt[a, tt[b]]
            rhs = tt[tt[a][b], g]
            if not np.array_equal(lhs, rhs):
                c = int(np.argwhere(lhs != rhs)[0][0])
                first["gyroassociativity"] = (a, b, c)
                break
    # automorphism: gyr[a,b](x+y) == gyr[a,b](x) + gyr[a,b](y)
    for a in range(n):
        if "gyration-automorphism" in first:
            break
        for b in range(n):
            g = np.array(gyrs[(a, b)])
            lhs = g[tt]
            rhs = tt[np.ix_(g, g)]
            if not np.array_equal(lhs, rhs):
                x, y = np.argwhere(lhs != rhs)[0]
                first["gyration-automorphism"] = (a, b, int(x), int(y))
                break
    # left loop property: gyr[a+b, b] == gyr[a, b]
    for a in range(n):
        if "left-loop" in first:
            break
        for b in range(n):
            if gyrs[(t[a][b], b)] != gyrs[(a, b)]:
                first["left-loop"] = (a, b)
                break
    if first:
        order = ["gyration-bijective", "gyroassociativity", "gyration-automorphism", "left-loop"]
        return make_report("gyrogroup", [(k, first[k]) for k in order if k in first])
    g = Gyrogroup(table=tuple(t), left_inverse=tuple(linv), labels=tuple(labels) if labels else None)
    g._gyr_cache.update(gyrs)
    return g


def _check_shape(table) -> np.ndarray:
    n = len(table)
    if n == 0:
        raise TableFormatError("empty table")
    rows = []
    for i, row in enumerate(table):
        row = list(row)
        if len(row) != n:
            raise TableFormatError(f"row {i} has length {len(row)}, expected {n}")
        for x in row:
            if not isinstance(x, (int, np.integer)) or x < 0 or x >= n:
                raise TableFormatError(f"row {i}: entry {x!r} out of range 0..{n - 1}")
        rows.append([int(x) for x in row])
    return np.array(rows, dtype=np.int64)


def as_gyrogroup(group: FiniteGroup) -> Gyrogroup:
    """View a finite group (identity at index 0) as a gyrogroup."""
    if group.identity != 0:
        raise ValueError("group identity must be index 0")
    got = load_gyrogroup(group.table, labels=group.labels)
    if isinstance(got, AxiomReport):
        raise ValueError("group table failed gyrogroup validation: " + got.summary())
    return got


def check_identities(g: Gyrogroup) -> AxiomReport:
    """Derived gyration identities, exhaustively.

    Checks gyr[b,a] = gyr[a,b]^-1, the composition identity
    gyr[a+b, gyr[a,b](c)] gyr[a,b] = gyr[a, b+c] gyr[b,c], and
    gyr[a, a'] = I. Reads the gyration cache, so a corrupted cache fails.
    """
    n = g.order
    violations = []
    for a in range(n):
        for b in range(n):
            if g.gyr(b, a) != perm.inverse(g.gyr(a, b)):
                violations.append(("gyration-inverse-swap", (a, b)))
    for a in range(n):
        for b in range(n):
            gab = g.gyr(a, b)
            for c in range(n):
                lhs = perm.compose(g.gyr(g.mul(a, b), gab[c]), gab)
                rhs = perm.compose(g.gyr(a, g.mul(b, c)), g.gyr(b, c))
                if lhs != rhs:
                    violations.append(("gyration-composition", (a, b, c)))
    ident = perm.identity(n)
    for a in range(n):
        if g.gyr(a, g.inv(a)) != ident:
            violations.append(("gyration-inverse-pair", (a,)))
    return make_report("gyration-identities", violations)


def is_subgyrogroup(g: Gyrogroup, subset: Iterable[int]) -> bool:
    sub = set(subset)
    if 0 not in sub:
        return False
    return all(g.mul(a, b) in sub for a in sub for b in sub) and all(
        g.inv(a) in sub for a in sub
    )


def is_l_subgyrogroup(g: Gyrogroup, subset: Iterable[int]) -> bool:
    """Subgyrogroup invariant under every gyration.

    Containment gyr[a,b](X) <= X already forces equality because gyrations
    are bijections; both are computed as a self-check.
    """
    sub = set(subset)
    if not is_subgyrogroup(g, sub):
        return False
    for a in range(g.order):
        for b in range(g.order):
            image = {g.gyr(a, b)[x] for x in sub}
            contained = image <= sub
            assert contained == (image == sub)
            if not contained:
                return False
    return True


def gyro_hom_verify(g: Gyrogroup, target: FiniteGroup, mapping: Sequence[int]) -> AxiomReport:
    """Check mapping(a+b) = mapping(a) * mapping(b) and identity goes to identity."""
    violations = []
    if mapping[0] != target.identity:
        violations.append(("identity", (0,)))
    for a in range(g.order):
        for b in range(g.order):
            if mapping[g.mul(a, b)] != target.mul(mapping[a], mapping[b]):
                violations.append(("multiplicative", (a, b)))
    return make_report("gyrogroup-hom", violations)


def enumerate_gyro_homs(g: Gyrogroup, target: FiniteGroup) -> list[tuple[int, ...]]:
    """Every homomorphism map from g into the group, by backtracking.

    Assigns images in element order with product propagation, so the result
    is complete and deterministic (lexicographic in the image tuple).
    """
    n = g.order
    results: list[tuple[int, ...]] = []

    def propagate(mapping: dict[int, int]) -> bool:
        frontier = list(mapping)
        while frontier:
            x = frontier.pop()
            for y in list(mapping):
                for u, v in ((x, y), (y, x)):
                    p = g.mul(u, v)
                    q = target.mul(mapping[u], mapping[v])
                    if p in mapping:
                        if mapping[p] != q:
                            return False
                    else:
                        mapping[p] = q
                        frontier.append(p)
        return True

    def extend(mapping: dict[int, int]):
        if len(mapping) == n:
            results.append(tuple(mapping[x] for x in range(n)))
            return
        x = min(i for i in range(n) if i not in mapping)
        for y in range(target.order):
            trial = dict(mapping)
            trial[x] = y
            if propagate(trial):
                extend(trial)

    start = {0: target.identity}
    if propagate(start):
        extend(start)
    return results
