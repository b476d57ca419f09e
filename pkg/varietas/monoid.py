"""
Finite monoids given by their multiplication tables.
"""

import logging
from collections import deque
from typing import Iterable, Optional, Sequence

import numpy as np

from .exceptions import StructureError

logger = logging.getLogger(__name__)


def frozen_array(values: object, dtype: type = np.int64) -> np.ndarray:
    """Read-only numpy copy of `values`."""
    array = np.array(values, dtype=dtype)
    array.flags.writeable = False
    return array


class FiniteMonoid:
    """
    Finite monoid (M, ·, 1) on the elements 0..n-1.

    `table[a, b]` is the product a·b. `labels` and `words` are optional
    annotations (e.g. state transformations and representative words).
    """

    def __init__(
        self,
        table: object,
        identity: int,
        labels: Optional[tuple] = None,
        words: Optional[tuple[str, ...]] = None,
    ):
        self.table = frozen_array(table)
        n = self.table.shape[0] if self.table.ndim == 2 else -1
        if self.table.shape != (n, n) or n < 1:
            raise StructureError(
                f"Monoid table must be square and non-empty, got {self.table.shape}", "table"
            )
        if self.table.min() < 0 or self.table.max() >= n:
            raise StructureError("Monoid table entries out of range", "table")
        if not 0 <= identity < n:
            raise StructureError(f"Identity {identity} out of range", "identity")
        self.identity = int(identity)
        self.labels = labels
        self.words = words

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size}, identity={self.identity})"

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, elements: Iterable[int]) -> int:
        result = self.identity
        for element in elements:
            result = int(self.table[result, element])
        return result

    def violations(self) -> list[tuple[str, tuple[int, ...]]]:
        """Associativity and identity failures, each with one witness."""
        found: list[tuple[str, tuple[int, ...]]] = []
        t = self.table
        n = self.size
        idx = np.arange(n)
        left = t[t[:, :, None], idx[None, None, :]]
        right = t[idx[:, None, None], t[None, :, :]]
        bad = np.argwhere(left != right)
        if len(bad):
            found.append(("associativity", tuple(int(x) for x in bad[0])))
        bad_identity = np.flatnonzero((t[self.identity, :] != idx) | (t[:, self.identity] != idx))
        if len(bad_identity):
            found.append(("identity", (int(bad_identity[0]),)))
        return found

    def is_valid(self) -> bool:
        return not self.violations()

    def generated(self, generators: Iterable[int]) -> list[int]:
        """Submonoid generated by `generators`, in breadth-first order from the identity."""
        gens = list(dict.fromkeys(int(g) for g in generators))
        order = [self.identity]
        seen = {self.identity}
        queue = deque(order)
        while queue:
            element = queue.popleft()
            for g in gens:
                nxt = int(self.table[element, g])
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
                    queue.append(nxt)
        return order

    def is_homomorphism(self, target: "FiniteMonoid", mapping: Sequence[int]) -> bool:
        """Whether `mapping` is a monoid morphism from self into `target`."""
        f = np.asarray(mapping)
        if f[self.identity] != target.identity:
            return False
        return bool(np.all(f[self.table] == target.table[f[:, None], f[None, :]]))

    @classmethod
    def trivial(cls) -> "FiniteMonoid":
        return cls([[0]], 0)

    @classmethod
    def cyclic_group(cls, n: int) -> "FiniteMonoid":
        """ℤ/nℤ under addition."""
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], 0)

    @classmethod
    def with_zero(cls) -> "FiniteMonoid":
        """The two-element monoid {1, 0} with 0 absorbing."""
        return cls([[0, 1], [1, 1]], 0)


def product_monoid(first: FiniteMonoid, second: FiniteMonoid) -> FiniteMonoid:
    """Direct product; the pair (a, b) is the element a·|second| + b."""
    n1, n2 = first.size, second.size
    table = (first.table[:, None, :, None] * n2 + second.table[None, :, None, :]).reshape(
        n1 * n2, n1 * n2
    )
    return FiniteMonoid(table, first.identity * n2 + second.identity)
