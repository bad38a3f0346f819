"""Finite groups given by multiplication tables over indices 0..m-1.

Closure generation, normal closure, quotients, homomorphism checks and
small-order isomorphism testing. Algorithms work on indices only; labels
and concrete element values are display metadata.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import BudgetError, TableFormatError
from .report import AxiomReport, make_report

DEFAULT_BUDGET = 1_000_000


def closure_budget() -> int:
    """Element budget for closures; override with the GYK_BUDGET env var."""
    raw = os.environ.get("GYK_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group: product table, identity index, inverse array.

    ``elements`` optionally holds the concrete values (permutation tuples,
    pairs, coset tuples) the indices stand for; ``labels`` are display names.
    Neither is consulted by any algorithm.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None
    elements: Optional[tuple] = None

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def index_of(self, value) -> int:
        if self.elements is None:
            raise ValueError("group carries no element values")
        return self.elements.index(value)


def check_group_table(table: Sequence[Sequence[int]]) -> AxiomReport:
    """Report on the group axioms for a raw table (first witness each)."""
    m = len(table)
    arr = _as_table_array(table)
    violations = []
    ident = np.arange(m)
    for a in range(m):
        if sorted(arr[a]) != list(range(m)):
            violations.append(("row-bijective", (a,)))
            break
    for b in range(m):
        if sorted(arr[:, b]) != list(range(m)):
            violations.append(("column-bijective", (b,)))
            break
    e = _find_identity(arr)
    if e is None:
        violations.append(("identity", ()))
    if not violations:
        for a in range(m):
            lhs = arr[arr[a], :]
            rhs = arr[a, arr]
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                violations.append(("associativity", (a, int(b), int(c))))
                break
        for a in range(m):
            row = list(arr[a])
            if e not in row or arr[row.index(e)][a] != e:
                violations.append(("inverse", (a,)))
                break
    return make_report("group", violations)


def group_from_table(
    table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    elements: Optional[Sequence] = None,
    validate: bool = True,
) -> FiniteGroup:
    arr = _as_table_array(table)
    m = len(arr)
    if validate:
        rep = check_group_table(table)
        if not rep.passed:
            raise ValueError("not a group: " + rep.summary())
    e = _find_identity(arr)
    inverse = tuple(int(list(arr[a]).index(e)) for a in range(m))
    return FiniteGroup(
        table=tuple(tuple(int(x) for x in row) for row in arr),
        identity=int(e),
        inverse=inverse,
        labels=tuple(labels) if labels else None,
        elements=tuple(elements) if elements is not None else None,
    )


def group_from_elements(
    elements: Sequence,
    mul: Callable,
    identity_elem,
    labels: Optional[Sequence[str]] = None,
    validate: bool = True,
) -> FiniteGroup:
    """Index a concrete element list and build its product table."""
    elems = list(elements)
    index = {x: i for i, x in enumerate(elems)}
    if len(index) != len(elems):
        raise ValueError("duplicate elements")
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    g = group_from_table(table, labels=labels, elements=elems, validate=validate)
    if g.identity != index[identity_elem]:
        raise ValueError("identity element mismatch")
    return g


def _as_table_array(table) -> np.ndarray:
    m = len(table)
    if m == 0:
        raise TableFormatError("empty table")
    rows = []
    for i, row in enumerate(table):
        row = list(row)
        if len(row) != m:
            raise TableFormatError(f"row {i} has length {len(row)}, expected {m}")
        for x in row:
            if not isinstance(x, (int, np.integer)) or x < 0 or x >= m:
                raise TableFormatError(f"row {i}: entry {x!r} out of range 0..{m - 1}")
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def _find_identity(arr: np.ndarray) -> Optional[int]:
    m = len(arr)
    ident = np.arange(m)
    for e in range(m):
        if np.array_equal(arr[e], ident) and np.array_equal(arr[:, e], ident):
            return e
    return None


# ---------------------------------------------------------------------------
# closure machinery


def generate_closure(generators: Iterable, mul: Callable, identity_elem, budget: Optional[int] = None) -> list:
    """Smallest set containing the identity and generators, closed under mul.

    Elements must be hashable and orderable. Ordering is deterministic:
    identity first, then the sorted generators, then products in BFS
    discovery order (each known element multiplied by each generator on the
    right). The ambient operation must be a group product for the result to
    be product-closed.
    """
    if budget is None:
        budget = closure_budget()
    elems = [identity_elem]
    index = {identity_elem: 0}
    gens = [g for g in sorted(set(generators)) if g != identity_elem]
    for g in gens:
        if g not in index:
            index[g] = len(elems)
            elems.append(g)
    if len(elems) > budget:
        raise BudgetError(f"closure exceeded budget {budget}")
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                if len(elems) > budget:
                    raise BudgetError(f"closure exceeded budget {budget}")
        i += 1
    return elems


def subgroup_closure(group: FiniteGroup, gens: Iterable[int], budget: Optional[int] = None) -> tuple[int, ...]:
    """Sorted index set of the subgroup generated by ``gens``."""
    got = generate_closure(gens, group.mul, group.identity, budget)
    return tuple(sorted(got))


def normal_closure(group: FiniteGroup, gens: Iterable[int], budget: Optional[int] = None) -> tuple[int, ...]:
    """Smallest normal subgroup of ``group`` containing ``gens``.

    Alternates subgroup closure with conjugation by every group element
    until a fixpoint is reached.
    """
    current = set(gens)
    while True:
        sub = set(subgroup_closure(group, current, budget))
        conj = {group.conj(g, s) for g in range(group.order) for s in sub}
        if conj <= sub:
            return tuple(sorted(sub))
        current = sub | conj


def is_subgroup(group: FiniteGroup, subset: Iterable[int]) -> bool:
    sub = set(subset)
    if group.identity not in sub:
        return False
    return all(group.mul(a, b) in sub for a in sub for b in sub) and all(
        group.inv(a) in sub for a in sub
    )


def is_normal(group: FiniteGroup, subset: Iterable[int]) -> bool:
    sub = set(subset)
    return all(group.conj(g, s) in sub for g in range(group.order) for s in sub)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]


def hom_verify(h: GroupHom) -> AxiomReport:
    """Report every violated pair; passes iff h is a homomorphism."""
    violations = []
    if h.image[h.source.identity] != h.target.identity:
        violations.append(("identity", (h.source.identity,)))
    for a in range(h.source.order):
        for b in range(h.source.order):
            if h.image[h.source.mul(a, b)] != h.target.mul(h.image[a], h.image[b]):
                violations.append(("multiplicative", (a, b)))
    return make_report("group-hom", violations)


def hom_kernel(h: GroupHom) -> tuple[int, ...]:
    return tuple(a for a in range(h.source.order) if h.image[a] == h.target.identity)


def hom_image(h: GroupHom) -> tuple[int, ...]:
    return tuple(sorted(set(h.image)))


# ---------------------------------------------------------------------------
# quotients


def quotient(group: FiniteGroup, normal: Iterable[int]) -> tuple[FiniteGroup, GroupHom]:
    """Coset group by a verified normal subgroup, with the projection hom.

    Canonical coset representative is the least member index, so the
    identity coset sits at quotient index 0 whenever group identity is 0.
    """
    sub = sorted(set(normal))
    if not is_subgroup(group, sub):
        raise ValueError("subset is not a subgroup")
    if not is_normal(group, sub):
        raise ValueError("subgroup is not normal")
    rep_of = {}
    for x in range(group.order):
        if x in rep_of:
            continue
        coset = sorted(group.mul(x, s) for s in sub)
        for y in coset:
            rep_of[y] = coset[0]
    reps = sorted(set(rep_of.values()))
    pos = {r: i for i, r in enumerate(reps)}
    table = [[pos[rep_of[group.mul(a, b)]] for b in reps] for a in reps]
    cosets = tuple(tuple(x for x in range(group.order) if rep_of[x] == r) for r in reps)
    labels = None
    if group.labels:
        labels = tuple("{" + " ".join(group.label(x) for x in c) + "}" for c in cosets)
    q = group_from_table(table, labels=labels, elements=cosets)
    proj = GroupHom(group, q, tuple(pos[rep_of[x]] for x in range(group.order)))
    assert q.order * len(sub) == group.order
    return q, proj


# ---------------------------------------------------------------------------
# isomorphism testing


def generating_sequence(group: FiniteGroup) -> list[int]:
    """Greedy small generating set (deterministic)."""
    gens: list[int] = []
    span = {group.identity}
    for x in range(group.order):
        if x not in span:
            gens.append(x)
            span = set(subgroup_closure(group, gens))
        if len(span) == group.order:
            break
    return gens


def isomorphic(a: FiniteGroup, b: FiniteGroup, bound: int = 256) -> Optional[GroupHom]:
    """Witness isomorphism a -> b, or None.

    Backtracks over images of a greedy generating set of ``a``, pruning by
    element order, and extends each partial choice by product propagation.
    """
    if a.order > bound or b.order > bound:
        raise ValueError(f"order exceeds isomorphism bound {bound}")
    if a.order != b.order:
        return None
    orders_a = sorted(a.element_order(x) for x in range(a.order))
    orders_b = sorted(b.element_order(x) for x in range(b.order))
    if orders_a != orders_b:
        return None
    gens = generating_sequence(a)
    by_order: dict[int, list[int]] = {}
    for y in range(b.order):
        by_order.setdefault(b.element_order(y), []).append(y)

    def extend(k: int, mapping: dict[int, int], used: set[int]) -> Optional[tuple[int, ...]]:
        if k == len(gens):
            if len(mapping) != a.order:
                return None
            image = tuple(mapping[x] for x in range(a.order))
            if len(set(image)) != a.order:
                return None
            return image
        g = gens[k]
        for y in by_order.get(a.element_order(g), []):
            if y in used:
                continue
            trial = dict(mapping)
            trial[g] = y
            if _propagate(a, b, trial):
                got = extend(k + 1, trial, set(trial.values()))
                if got is not None:
                    return got
        return None

    image = extend(0, {a.identity: b.identity}, {b.identity})
    if image is None:
        return None
    hom = GroupHom(a, b, image)
    assert hom_verify(hom).passed
    return hom


def _propagate(a: FiniteGroup, b: FiniteGroup, mapping: dict[int, int]) -> bool:
    """Close a partial map under products; False on contradiction."""
    frontier = list(mapping)
    while frontier:
        x = frontier.pop()
        for y in list(mapping):
            for u, v in ((x, y), (y, x)):
                p = a.mul(u, v)
                q = b.mul(mapping[u], mapping[v])
                if p in mapping:
                    if mapping[p] != q:
                        return False
                else:
                    mapping[p] = q
                    frontier.append(p)
    values = list(mapping.values())
    return len(set(values)) == len(values)


def table_isomorphism(
    ta: Sequence[Sequence[int]], tb: Sequence[Sequence[int]]
) -> Optional[tuple[int, ...]]:
    """Witness isomorphism between two magma tables fixing 0 -> 0.

    Generic backtracking with product propagation; intended for small
    tables (groups, gyrogroup-like structures) whose identity is index 0.
    """
    n = len(ta)
    if n != len(tb):
        return None

    def profile(t, x):
        # iterated left powers x, x*x, (x*x)*x, ... until repeat
        seen = []
        p = x
        while p not in seen:
            seen.append(p)
            p = t[p][x]
        return (len(seen), seen.index(p), 0 in seen)

    prof_a = [profile(ta, x) for x in range(n)]
    prof_b = [profile(tb, x) for x in range(n)]
    if sorted(prof_a) != sorted(prof_b):
        return None

    def prop(mapping: dict[int, int]) -> bool:
        frontier = list(mapping)
        while frontier:
            x = frontier.pop()
            for y in list(mapping):
                for u, v in ((x, y), (y, x)):
                    p = ta[u][v]
                    q = tb[mapping[u]][mapping[v]]
                    if p in mapping:
                        if mapping[p] != q:
                            return False
                    else:
                        if prof_a[p] != prof_b[q]:
                            return False
                        mapping[p] = q
                        frontier.append(p)
        vals = list(mapping.values())
        return len(set(vals)) == len(vals)

    def extend(mapping: dict[int, int]) -> Optional[dict[int, int]]:
        if len(mapping) == n:
            return mapping
        x = min(i for i in range(n) if i not in mapping)
        used = set(mapping.values())
        for y in range(n):
            if y in used or prof_a[x] != prof_b[y]:
                continue
            trial = dict(mapping)
            trial[x] = y
            if prop(trial):
                got = extend(trial)
                if got is not None:
                    return got
        return None

    start = {0: 0}
    if not prop(start):
        return None
    got = extend(start)
    if got is None:
        return None
    image = tuple(got[x] for x in range(n))
    assert all(image[ta[x][y]] == tb[image[x]][image[y]] for x in range(n) for y in range(n))
    return image


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks covering {0..domain_size-1}, each sorted, ordered by least member."""

    domain_size: int
    blocks: tuple[tuple[int, ...], ...]

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"{x} not in domain")


def partition_from_blocks(domain_size: int, blocks: Iterable[Iterable[int]]) -> Partition:
    norm = sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0])
    covered = [x for b in norm for x in b]
    if sorted(covered) != list(range(domain_size)):
        raise ValueError("blocks do not partition the domain")
    return Partition(domain_size, tuple(norm))


def subgroups_up_to_order(group: FiniteGroup, max_generators: int = 2) -> list[tuple[int, ...]]:
    """All subgroups generated by up to ``max_generators`` elements, sorted.

    For groups whose every subgroup is 2-generated (true for all fixtures
    used here, order <= 27) this is the full subgroup lattice.
    """
    found = {subgroup_closure(group, ())}
    gens_pool = [()]
    for _ in range(max_generators):
        gens_pool = [g + (x,) for g in gens_pool for x in range(group.order)]
        for gens in gens_pool:
            found.add(subgroup_closure(group, gens))
    return sorted(found, key=lambda s: (len(s), s))
