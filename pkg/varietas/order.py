"""
Finite posets, finite distributive lattices and the finite Birkhoff duality.

Posets and lattices hold read-only boolean order matrices (`leq[i, j]` iff
i ≤ j) and integer join/meet tables. Elements are opaque indices; `labels`
carries an optional decoding such as the subset a down-set stands for.
"""

import logging
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

import numpy as np

from .enums import VarietasConstants
from .exceptions import BoundExceededError, LatticeError, StructureError
from .monoid import frozen_array

logger = logging.getLogger(__name__)


class FinitePoset:
    """Finite partial order on 0..n-1."""

    def __init__(self, leq: object, labels: Optional[Sequence[Hashable]] = None):
        matrix = np.array(leq, dtype=bool)
        if matrix.size == 0:
            matrix = np.zeros((0, 0), dtype=bool)
        n = matrix.shape[0]
        if matrix.shape != (n, n):
            raise StructureError(f"Order matrix must be square, got {matrix.shape}", "leq")
        matrix.flags.writeable = False
        self.leq = matrix
        if labels is not None and len(labels) != n:
            raise StructureError("One label per element expected", "labels")
        self.labels = tuple(labels) if labels is not None else None

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(size={self.size})"

    @property
    def size(self) -> int:
        return int(self.leq.shape[0])

    @classmethod
    def from_relation(
        cls, size: int, pairs: Iterable[tuple[int, int]], labels: Optional[Sequence] = None
    ) -> "FinitePoset":
        """Reflexive-transitive closure of the given (x ≤ y) pairs."""
        leq = np.eye(size, dtype=bool)
        for x, y in pairs:
            leq[x, y] = True
        for k in range(size):
            leq |= leq[:, k, None] & leq[None, k, :]
        poset = cls(leq, labels)
        poset.validate()
        return poset

    @classmethod
    def antichain(cls, size: int) -> "FinitePoset":
        return cls(np.eye(size, dtype=bool))

    @classmethod
    def chain(cls, size: int) -> "FinitePoset":
        return cls(np.triu(np.ones((size, size), dtype=bool)))

    def order_violations(self) -> list[str]:
        rel = self.leq
        found = []
        if not rel[np.diag_indices_from(rel)].all():
            found.append("reflexivity")
        if ((rel & rel.T) & ~np.eye(self.size, dtype=bool)).any():
            found.append("antisymmetry")
        composed = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
        if (composed & ~rel).any():
            found.append("transitivity")
        return found

    def validate(self) -> None:
        found = self.order_violations()
        if found:
            raise LatticeError(f"Not a partial order: {', '.join(found)} fails")

    @cached_property
    def covers(self) -> np.ndarray:
        """covers[i, j] iff j covers i."""
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        result = lt & ~between
        result.flags.writeable = False
        return result

    @cached_property
    def linear_extension(self) -> list[int]:
        """Elements sorted by the size of their principal down-set."""
        below = self.leq.sum(axis=0)
        return sorted(range(self.size), key=lambda i: (int(below[i]), i))

    def reversed(self) -> "FinitePoset":
        return FinitePoset(self.leq.T, self.labels)

    def subposet(self, elements: Sequence[int]) -> "FinitePoset":
        idx = np.array(elements, dtype=np.int64)
        labels = None if self.labels is None else [self.labels[i] for i in elements]
        return FinitePoset(self.leq[np.ix_(idx, idx)], labels)

    def downset_masks(self) -> list[int]:
        """All down-sets as bitmasks, in increasing numeric order."""
        n = self.size
        strictly_below = [
            sum(1 << j for j in range(n) if j != i and self.leq[j, i]) for i in range(n)
        ]
        order = self.linear_extension
        masks: list[int] = []

        def extend(position: int, mask: int) -> None:
            if position == len(order):
                masks.append(mask)
                return
            element = order[position]
            extend(position + 1, mask)
            if strictly_below[element] & mask == strictly_below[element]:
                extend(position + 1, mask | (1 << element))

        extend(0, 0)
        return sorted(masks)

    def is_monotone(self, target: "FinitePoset", mapping: Sequence[int]) -> bool:
        f = np.asarray(mapping, dtype=np.int64)
        if len(f) != self.size:
            return False
        if self.size == 0:
            return True
        return bool(np.all(~self.leq | target.leq[f[:, None], f[None, :]]))


class Fdl(FinitePoset):
    """
    Finite distributive lattice.

    Join and meet tables are computed from the order when not supplied; the
    least upper bound of i and j is the element whose up-set equals the
    intersection of the up-sets of i and j.
    """

    def __init__(
        self,
        leq: object,
        join: object = None,
        meet: object = None,
        labels: Optional[Sequence[Hashable]] = None,
        validate: bool = True,
    ):
        super().__init__(leq, labels)
        if self.size == 0:
            raise LatticeError("A lattice needs at least one element")
        self.join = frozen_array(join) if join is not None else self._bound_table(self.leq)
        self.meet = frozen_array(meet) if meet is not None else self._bound_table(self.leq.T)
        tables_ok = self.join.shape == (self.size, self.size) == self.meet.shape
        if not tables_ok:
            raise StructureError("Join/meet tables must match the order size", "join")
        below = self.leq.sum(axis=0)
        self.bottom = int(np.argmin(below))
        self.top = int(np.argmax(below))
        if validate:
            self.validate()

    def _bound_table(self, leq: np.ndarray) -> np.ndarray:
        n = self.size
        by_upset = {tuple(leq[i, :]): i for i in range(n)}
        table = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                above = tuple(leq[i, :] & leq[j, :])
                if above not in by_upset:
                    raise LatticeError(f"Elements {i} and {j} have no least bound", (i, j))
                table[i, j] = table[j, i] = by_upset[above]
        table.flags.writeable = False
        return table

    def lattice_violations(self) -> list[tuple[str, tuple[int, ...]]]:
        """Order, bound and distributivity failures, each with one witness."""
        found: list[tuple[str, tuple[int, ...]]] = [(v, ()) for v in self.order_violations()]
        if found:
            return found
        leq, join, meet = self.leq, self.join, self.meet
        n = self.size
        if join.min() < 0 or join.max() >= n or meet.min() < 0 or meet.max() >= n:
            return [("table-range", ())]
        idx = np.arange(n)
        # join[i, j] is an upper bound below every common upper bound
        upper = leq[idx[:, None], join] & leq[idx[None, :], join]
        common = leq[:, None, :] & leq[None, :, :]
        least = ~common | leq[join[:, :, None], idx[None, None, :]]
        bad = np.argwhere(~upper)
        if len(bad):
            found.append(("join-upper-bound", tuple(int(x) for x in bad[0])))
        bad = np.argwhere(~least)
        if len(bad):
            found.append(("join-least", tuple(int(x) for x in bad[0])))
        lower = leq[meet, idx[:, None]] & leq[meet, idx[None, :]]
        common_below = leq.T[:, None, :] & leq.T[None, :, :]
        greatest = ~common_below | leq[idx[None, None, :], meet[:, :, None]]
        bad = np.argwhere(~lower)
        if len(bad):
            found.append(("meet-lower-bound", tuple(int(x) for x in bad[0])))
        bad = np.argwhere(~greatest)
        if len(bad):
            found.append(("meet-greatest", tuple(int(x) for x in bad[0])))
        if found:
            return found
        # x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)
        lhs = meet[idx[:, None, None], join[None, :, :]]
        rhs = join[meet[:, :, None], meet[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            found.append(("distributivity", tuple(int(x) for x in bad[0])))
        return found

    def validate(self) -> None:
        found = self.lattice_violations()
        if found:
            law, witness = found[0]
            raise LatticeError(f"Not a distributive lattice: {law} fails at {witness}", witness)

    @classmethod
    def from_leq(cls, leq: object, labels: Optional[Sequence[Hashable]] = None) -> "Fdl":
        return cls(leq, labels=labels)

    @classmethod
    def chain(cls, size: int) -> "Fdl":
        return cls(np.triu(np.ones((size, size), dtype=bool)))

    @classmethod
    def trivial(cls) -> "Fdl":
        return cls([[True]])

    def join_all(self, elements: Iterable[int]) -> int:
        result = self.bottom
        for element in elements:
            result = int(self.join[result, element])
        return result

    def meet_all(self, elements: Iterable[int]) -> int:
        result = self.top
        for element in elements:
            result = int(self.meet[result, element])
        return result

    def closure(self, generators: Iterable[int]) -> list[int]:
        """Sorted closure of generators ∪ {⊥, ⊤} under binary join and meet."""
        found = {self.bottom, self.top} | {int(g) for g in generators}
        frontier = list(found)
        while frontier:
            fresh = []
            current = list(found)
            for a in frontier:
                for b in current:
                    for c in (int(self.join[a, b]), int(self.meet[a, b])):
                        if c not in found:
                            found.add(c)
                            fresh.append(c)
            frontier = fresh
        return sorted(found)

    def is_join_prime(self, element: int) -> bool:
        if element == self.bottom:
            return False
        above = self.leq[element, :]
        return bool(np.all(~above[self.join] | above[:, None] | above[None, :]))


TWO = Fdl.chain(2)


class LatticeMorphism:
    """Map between finite lattices given by its element table."""

    def __init__(self, source: Fdl, target: Fdl, mapping: Sequence[int]):
        self.source = source
        self.target = target
        self.mapping = frozen_array(mapping)
        if self.mapping.shape != (source.size,):
            raise StructureError("Morphism table must have one entry per source element", "mapping")
        if source.size and (self.mapping.min() < 0 or self.mapping.max() >= target.size):
            raise StructureError("Morphism table entries out of range", "mapping")

    def __call__(self, element: int) -> int:
        return int(self.mapping[element])

    def __repr__(self) -> str:
        return f"LatticeMorphism({self.mapping.tolist()})"

    def violations(self) -> list[str]:
        f, s, t = self.mapping, self.source, self.target
        found = []
        if np.any(f[s.join] != t.join[f[:, None], f[None, :]]):
            found.append("join")
        if np.any(f[s.meet] != t.meet[f[:, None], f[None, :]]):
            found.append("meet")
        if f[s.bottom] != t.bottom:
            found.append("bottom")
        if f[s.top] != t.top:
            found.append("top")
        return found

    def is_morphism(self) -> bool:
        return not self.violations()

    def then(self, after: "LatticeMorphism") -> "LatticeMorphism":
        """The composite `after ∘ self`."""
        return LatticeMorphism(self.source, after.target, after.mapping[self.mapping])

    @classmethod
    def identity(cls, lattice: Fdl) -> "LatticeMorphism":
        return cls(lattice, lattice, np.arange(lattice.size))


def is_lattice_morphism(morphism: LatticeMorphism) -> bool:
    return morphism.is_morphism()


def compose(after: LatticeMorphism, first: LatticeMorphism) -> LatticeMorphism:
    """`after ∘ first`; the codomain of `first` must be the domain of `after`."""
    if first.target.size != after.source.size:
        raise StructureError(
            f"Cannot compose: codomain of size {first.target.size} "
            f"vs domain of size {after.source.size}",
            "mapping",
        )
    return first.then(after)


def _mask_lattice(masks: list[int], labels: list[frozenset]) -> Fdl:
    values = np.array(masks, dtype=np.int64)
    leq = (values[:, None] & values[None, :]) == values[:, None]
    join = np.searchsorted(values, values[:, None] | values[None, :])
    meet = np.searchsorted(values, values[:, None] & values[None, :])
    return Fdl(leq, join, meet, labels=labels, validate=False)


def _decode(mask: int, size: int) -> frozenset[int]:
    return frozenset(i for i in range(size) if mask >> i & 1)


def downset_lattice(poset: FinitePoset) -> tuple[Fdl, list[frozenset[int]]]:
    """Lattice of down-sets ordered by inclusion, with each element's decoding."""
    masks = poset.downset_masks()
    decoding = [_decode(m, poset.size) for m in masks]
    return _mask_lattice(masks, decoding), decoding


def upset_lattice(poset: FinitePoset) -> tuple[Fdl, list[frozenset[int]]]:
    """Lattice of up-sets ordered by inclusion (the down-sets of the reversed order)."""
    return downset_lattice(poset.reversed())


def join_primes(lattice: Fdl) -> tuple[FinitePoset, list[int]]:
    """Nonzero join-prime elements with the order induced from the lattice."""
    embedding = [c for c in range(lattice.size) if lattice.is_join_prime(c)]
    sub = lattice.subposet(embedding)
    return FinitePoset(sub.leq, sub.labels), embedding


def points(lattice: Fdl) -> list[LatticeMorphism]:
    """All lattice morphisms into TWO, one per nonzero join-prime c: d ↦ [c ≤ d]."""
    _, primes = join_primes(lattice)
    return [
        LatticeMorphism(lattice, TWO, lattice.leq[c, :].astype(np.int64)) for c in primes
    ]


def free_cdl(
    generators: Sequence[Hashable],
    max_generators: int = VarietasConstants.MAX_FREE_GENERATORS,
) -> tuple[Fdl, dict[Hashable, int]]:
    """
    Free bounded distributive lattice on `generators`.

    Built as the down-sets of the powerset of the generators ordered by
    reverse inclusion; generator x is the principal down-set ↓{x}, i.e. the
    family of subsets containing x. Element labels are the families of
    subsets (as bitmasks over the generator order) the element consists of,
    each subset S standing for the meet of its members.
    """
    k = len(generators)
    if k > max_generators:
        raise BoundExceededError(
            f"Free lattice on {k} generators exceeds the bound of {max_generators}", max_generators
        )
    subsets = np.arange(1 << k, dtype=np.int64)
    powerset = FinitePoset((subsets[:, None] & subsets[None, :]) == subsets[None, :])
    lattice, decoding = downset_lattice(powerset)
    index = {family: i for i, family in enumerate(decoding)}
    embedding = {
        g: index[frozenset(int(s) for s in subsets if s >> bit & 1)]
        for bit, g in enumerate(generators)
    }
    logger.debug(f"Free lattice on {k} generators has {lattice.size} elements")
    return lattice, embedding


def extend_free(
    free: Fdl,
    generators: Sequence[Hashable],
    valuation: Callable[[Hashable], int],
    target: Fdl,
) -> LatticeMorphism:
    """The unique lattice morphism free -> target extending `valuation` on the generators."""
    values = [valuation(g) for g in generators]
    meets = [
        target.meet_all(values[b] for b in range(len(generators)) if subset >> b & 1)
        for subset in range(1 << len(generators))
    ]
    if free.labels is None:
        raise StructureError("Free lattice elements carry no decoding", "labels")
    mapping = [target.join_all(meets[s] for s in family) for family in free.labels]
    return LatticeMorphism(free, target, mapping)


def dualize_monotone(
    source: FinitePoset, target: FinitePoset, mapping: Sequence[int]
) -> LatticeMorphism:
    """For monotone f: P -> Q, the preimage map 𝒟(Q) -> 𝒟(P) on down-sets."""
    if not source.is_monotone(target, mapping):
        raise LatticeError("Map is not monotone")
    domain, domain_sets = downset_lattice(target)
    codomain, codomain_sets = downset_lattice(source)
    index = {s: i for i, s in enumerate(codomain_sets)}
    table = [
        index[frozenset(p for p in range(source.size) if mapping[p] in downset)]
        for downset in domain_sets
    ]
    return LatticeMorphism(domain, codomain, table)


def sublattice(lattice: Fdl, generators: Iterable[int]) -> tuple[Fdl, list[int]]:
    """The sublattice generated by `generators` (with ⊥ and ⊤) and its embedding."""
    elements = lattice.closure(generators)
    position = {e: i for i, e in enumerate(elements)}
    idx = np.array(elements, dtype=np.int64)
    remap = np.vectorize(position.__getitem__, otypes=[np.int64])
    join = remap(lattice.join[np.ix_(idx, idx)])
    meet = remap(lattice.meet[np.ix_(idx, idx)])
    labels = None if lattice.labels is None else [lattice.labels[e] for e in elements]
    sub = Fdl(lattice.leq[np.ix_(idx, idx)], join, meet, labels=labels, validate=False)
    return sub, elements


def product_lattice(first: Fdl, second: Fdl) -> Fdl:
    """Componentwise product; the pair (a, b) is the element a·|second| + b."""
    n1, n2 = first.size, second.size
    n = n1 * n2
    leq = (first.leq[:, None, :, None] & second.leq[None, :, None, :]).reshape(n, n)
    join = (first.join[:, None, :, None] * n2 + second.join[None, :, None, :]).reshape(n, n)
    meet = (first.meet[:, None, :, None] * n2 + second.meet[None, :, None, :]).reshape(n, n)
    return Fdl(leq, join, meet, validate=False)


def _signature(poset: FinitePoset) -> list[tuple[int, int, int, int]]:
    below = poset.leq.sum(axis=0)
    above = poset.leq.sum(axis=1)
    covers = poset.covers
    return [
        (int(below[i]), int(above[i]), int(covers[:, i].sum()), int(covers[i, :].sum()))
        for i in range(poset.size)
    ]


def poset_iso(first: FinitePoset, second: FinitePoset) -> Optional[tuple[int, ...]]:
    """
    An order isomorphism first -> second, or None.

    Candidates are restricted to elements with equal (down-set size, up-set
    size, lower covers, upper covers) signatures; assignment proceeds along a
    linear extension and backtracks on the first order conflict.
    """
    n = first.size
    if n != second.size:
        return None
    sig_a, sig_b = _signature(first), _signature(second)
    if sorted(sig_a) != sorted(sig_b):
        return None
    candidates = {i: [j for j in range(n) if sig_b[j] == sig_a[i]] for i in range(n)}
    order = first.linear_extension
    a, b = first.leq, second.leq
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def search(position: int) -> bool:
        if position == n:
            return True
        x = order[position]
        for y in candidates[x]:
            if y in used:
                continue
            if all(a[x, p] == b[y, q] and a[p, x] == b[q, y] for p, q in assignment.items()):
                assignment[x] = y
                used.add(y)
                if search(position + 1):
                    return True
                del assignment[x]
                used.discard(y)
        return False

    if not search(0):
        return None
    return tuple(assignment[i] for i in range(n))


def lattice_iso(first: Fdl, second: Fdl) -> Optional[tuple[int, ...]]:
    """An order isomorphism between two finite lattices, or None."""
    return poset_iso(first, second)


def all_posets(max_size: int) -> Iterator[FinitePoset]:
    """
    Posets of every size 0..max_size, grown by adding a new maximal element
    above a down-set of the previous poset. Every poset occurs up to
    isomorphism, some more than once.
    """
    level = [FinitePoset(np.zeros((0, 0), dtype=bool))]
    for poset in level:
        yield poset
    for size in range(1, max_size + 1):
        grown = []
        for poset in level:
            for mask in poset.downset_masks():
                leq = np.zeros((size, size), dtype=bool)
                leq[:-1, :-1] = poset.leq
                leq[size - 1, size - 1] = True
                for i in range(size - 1):
                    leq[i, size - 1] = bool(mask >> i & 1)
                grown.append(FinitePoset(leq))
        for poset in grown:
            yield poset
        level = grown
