"""
Finite monoids (and semigroups) given by an explicit multiplication table.
"""
from dataclasses import dataclass, field
from functools import cached_property
from random import Random
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging

import numpy as np

logger = logging.getLogger(__name__)

EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64


def find_identity(rows: Sequence[Sequence[int]]) -> Optional[int]:
    """Index of the two-sided identity of a table, if any."""
    n = len(rows)
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            return e
    return None


def find_zero(rows: Sequence[Sequence[int]]) -> Optional[int]:
    """Index of the two-sided zero of a table, if any."""
    n = len(rows)
    for z in range(n):
        if all(rows[z][x] == z and rows[x][z] == z for x in range(n)):
            return z
    return None


@dataclass(frozen=True)
class FiniteMonoid:
    """
    Labelled multiplication table.

    `identity` is None for a bare semigroup (as produced by a presentation
    without an identity element); `adjoin_identity` turns it into a monoid.
    Products of direct products keep their `factors`.
    """

    labels: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    identity: Optional[int]
    zero: Optional[int] = None
    provenance: str = ''
    factors: Tuple['FiniteMonoid', ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise ValueError("A monoid needs at least one element")
        if len(set(self.labels)) != n:
            raise ValueError(f"Duplicate element labels in {self.provenance or 'table'}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"Table must be {n}x{n}")
        if any(not 0 <= x < n for row in self.table for x in row):
            raise ValueError("Table entries out of range")
        if self.identity is not None and any(
            self.table[self.identity][x] != x or self.table[x][self.identity] != x for x in range(n)
        ):
            raise ValueError(f"Element '{self.labels[self.identity]}' is not an identity")
        if self.zero is not None and any(
            self.table[self.zero][x] != self.zero or self.table[x][self.zero] != self.zero for x in range(n)
        ):
            raise ValueError(f"Element '{self.labels[self.zero]}' is not a zero")

    @classmethod
    def from_rows(
        cls,
        labels: Sequence[str],
        rows: Sequence[Sequence[int]],
        provenance: str = '',
        factors: Tuple['FiniteMonoid', ...] = (),
    ) -> 'FiniteMonoid':
        """Build from a table, detecting identity and zero."""
        table = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(
            labels=tuple(labels),
            table=table,
            identity=find_identity(table),
            zero=find_zero(table),
            provenance=provenance,
            factors=factors,
        )

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    @cached_property
    def array(self) -> np.ndarray:
        dtype = np.uint8 if len(self) <= 256 else np.int32
        return np.array(self.table, dtype=dtype)

    @cached_property
    def _label_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"No element labelled '{label}' in {self.provenance or 'monoid'}") from None

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def evaluate(self, elements: Iterable[int]) -> int:
        """Product of a sequence of elements; the empty product is the identity."""
        result: Optional[int] = None
        for x in elements:
            result = x if result is None else self.table[result][x]
        if result is None:
            if self.identity is None:
                raise ValueError("Empty product in a semigroup without identity")
            return self.identity
        return result

    def is_associative(self, samples: Optional[int] = None, seed: int = 0) -> bool:
        """
        Check associativity exhaustively up to 64 elements, else on random triples.

        Args:
            samples: Number of random triples for large tables (default 20000)
            seed: Seed for the random triples
        """
        n = len(self)
        t = self.array.astype(np.intp)
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT and samples is None:
            left = t[t, :]               # left[a, b, c] = (ab)c
            right = t[:, t]              # right[a, b, c] = a(bc)
            return bool(np.array_equal(left, right))
        rng = Random(seed)
        for _ in range(samples or 20000):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if t[t[a, b], c] != t[a, t[b, c]]:
                return False
        return True

    def two_sided_ideal(self, x: int) -> FrozenSet[int]:
        """S^1 x S^1."""
        t = self.array.astype(np.intp)
        left = set(t[:, x].tolist()) | {x}
        found = set(left)
        for y in left:
            found.update(t[y, :].tolist())
        return frozenset(found)

    def left_ideal(self, x: int) -> FrozenSet[int]:
        return frozenset(self.array[:, x].tolist()) | {x}

    def right_ideal(self, x: int) -> FrozenSet[int]:
        return frozenset(self.array[x, :].tolist()) | {x}

    def index_and_period(self, x: int) -> Tuple[int, int]:
        """Index and period of the cyclic subsemigroup generated by x."""
        seen: Dict[int, int] = {}
        power, k = x, 1
        while power not in seen:
            seen[power] = k
            power = self.table[power][x]
            k += 1
        return seen[power], k - seen[power]

    def relabel(self, provenance: str) -> 'FiniteMonoid':
        return FiniteMonoid(self.labels, self.table, self.identity, self.zero, provenance, self.factors)

    def __str__(self) -> str:
        return f"{self.provenance or 'monoid'} ({len(self)} elements)"


@dataclass(frozen=True)
class Morphism:
    """Map between the element sets of two finite monoids."""

    source: FiniteMonoid
    target: FiniteMonoid
    mapping: Tuple[int, ...]

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def surjective(self) -> bool:
        return set(self.mapping) == set(range(len(self.target)))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def is_homomorphism(self) -> bool:
        """Products preserved, and the identity too when both sides have one."""
        s, t, f = self.source.table, self.target.table, self.mapping
        n = len(self.source)
        if any(f[s[a][b]] != t[f[a]][f[b]] for a in range(n) for b in range(n)):
            return False
        if self.source.identity is not None and self.target.identity is not None:
            return f[self.source.identity] == self.target.identity
        return True

    def inverse(self) -> 'Morphism':
        if not (self.injective and self.surjective):
            raise ValueError("Only bijections can be inverted")
        inverse = [0] * len(self.mapping)
        for a, b in enumerate(self.mapping):
            inverse[b] = a
        return Morphism(self.target, self.source, tuple(inverse))

    def compose(self, other: 'Morphism') -> 'Morphism':
        """self after other."""
        return Morphism(other.source, self.target, tuple(self.mapping[x] for x in other.mapping))

    def as_labels(self) -> Dict[str, str]:
        return {
            self.source.labels[a]: self.target.labels[b] for a, b in enumerate(self.mapping)
        }


def identity_morphism(M: FiniteMonoid) -> Morphism:
    return Morphism(M, M, tuple(range(len(M))))


def element_indices(M: FiniteMonoid, labels: Iterable[str]) -> List[int]:
    return [M.index(label) for label in labels]
