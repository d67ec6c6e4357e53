"""
Constructions on finite monoids: adjoined identity, products, duals,
submonoids, quotients and the one-generator monoids.
"""
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple
import logging

from src.core.congruence import CongruenceKind, Tag
from src.core.errors import UnsupportedKindError
from src.monoids.finite_monoid import FiniteMonoid, Morphism, find_identity, find_zero

logger = logging.getLogger(__name__)

CONGRUENCE = 'congruence'
ZERO_GLUE = 'zero-glue'


def adjoin_identity(S: FiniteMonoid) -> FiniteMonoid:
    """
    S^1: a fresh identity placed first, even when S already has one.

    The new element is labelled "1" (primed until the label is free).
    """
    label = '1'
    while label in S.labels:
        label += "'"
    n = len(S) + 1
    rows = [list(range(n))]
    for a in range(len(S)):
        rows.append([a + 1] + [S.table[a][b] + 1 for b in range(len(S))])
    zero = None if S.zero is None else S.zero + 1
    return FiniteMonoid(
        labels=(label,) + S.labels,
        table=tuple(tuple(row) for row in rows),
        identity=0,
        zero=zero,
        provenance=f"{S.provenance}^1",
    )


def direct_product(M1: FiniteMonoid, M2: FiniteMonoid) -> FiniteMonoid:
    """Componentwise product; element (a, b) has index a * |M2| + b."""
    n2 = len(M2)
    labels = tuple(f"({a},{b})" for a in M1.labels for b in M2.labels)
    rows = []
    for a1 in range(len(M1)):
        for b1 in range(n2):
            rows.append(tuple(
                M1.table[a1][a2] * n2 + M2.table[b1][b2]
                for a2 in range(len(M1)) for b2 in range(n2)
            ))
    identity = None
    if M1.identity is not None and M2.identity is not None:
        identity = M1.identity * n2 + M2.identity
    zero = None
    if M1.zero is not None and M2.zero is not None:
        zero = M1.zero * n2 + M2.zero
    return FiniteMonoid(
        labels=labels,
        table=tuple(rows),
        identity=identity,
        zero=zero,
        provenance=f"{M1.provenance} x {M2.provenance}",
        factors=(M1, M2),
    )


def _strip_dual(provenance: str) -> str:
    if provenance.startswith('dual(') and provenance.endswith(')'):
        return provenance[5:-1]
    return f"dual({provenance})"


def dual(M: FiniteMonoid) -> FiniteMonoid:
    """The anti-isomorphic monoid: transposed table."""
    n = len(M)
    table = tuple(tuple(M.table[b][a] for b in range(n)) for a in range(n))
    return FiniteMonoid(M.labels, table, M.identity, M.zero, _strip_dual(M.provenance))


def _generated(M: FiniteMonoid, seeds: Iterable[int]) -> List[int]:
    found: Set[int] = set(seeds)
    frontier = list(found)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(found):
                for z in (M.table[x][y], M.table[y][x]):
                    if z not in found:
                        found.add(z)
                        fresh.append(z)
        frontier = fresh
    return sorted(found)


def restrict(M: FiniteMonoid, elements: Sequence[int], provenance: str) -> Tuple[FiniteMonoid, Morphism]:
    """
    The sub-table on a product-closed set of elements, with its inclusion.

    Raises:
        ValueError: If the set is not closed under products
    """
    ordered = sorted(set(elements))
    position = {x: i for i, x in enumerate(ordered)}
    rows = []
    for a in ordered:
        row = []
        for b in ordered:
            c = M.table[a][b]
            if c not in position:
                raise ValueError(
                    f"{M.labels[a]} * {M.labels[b]} = {M.labels[c]} leaves the subset"
                )
            row.append(position[c])
        rows.append(tuple(row))
    table = tuple(rows)
    sub = FiniteMonoid(
        labels=tuple(M.labels[x] for x in ordered),
        table=table,
        identity=position.get(M.identity) if M.identity is not None else find_identity(table),
        zero=find_zero(table),
        provenance=provenance,
    )
    return sub, Morphism(sub, M, tuple(ordered))


def is_product_closed(M: FiniteMonoid, elements: Iterable[int]) -> bool:
    subset = set(elements)
    return all(M.table[a][b] in subset for a in subset for b in subset)


def submonoid(M: FiniteMonoid, gens: Iterable[int]) -> Tuple[FiniteMonoid, Morphism]:
    """
    Closure of gens and the identity under multiplication.

    Returns:
        The submonoid (elements in the order of M) and its embedding into M

    Raises:
        ValueError: If gens is empty or M has no identity
    """
    gens = list(gens)
    if not gens:
        raise ValueError("submonoid needs at least one generator")
    if M.identity is None:
        raise ValueError(f"{M.provenance} has no identity")
    elements = _generated(M, gens + [M.identity])
    provenance = f"<{', '.join(M.labels[g] for g in gens)}> in {M.provenance}"
    sub, embedding = restrict(M, elements, provenance)
    logger.debug(f"Submonoid {provenance}: {len(sub)} elements")
    return sub, embedding


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def _congruence_classes(M: FiniteMonoid, pairs: Sequence[Tuple[int, int]]) -> _UnionFind:
    n = len(M)
    classes = _UnionFind(n)
    queue = list(pairs)
    while queue:
        x, y = queue.pop()
        if classes.union(x, y):
            for z in range(n):
                queue.append((M.table[z][x], M.table[z][y]))
                queue.append((M.table[x][z], M.table[y][z]))
    return classes


def _zero_glued_classes(M: FiniteMonoid, pairs: Sequence[Tuple[int, int]]) -> _UnionFind:
    if M.zero is None:
        raise ValueError("zero-glue identification needs a monoid with zero")
    n = len(M)
    classes = _UnionFind(n)
    for x, y in pairs:
        classes.union(x, y)
    changed = True
    while changed:
        changed = False
        members: Dict[int, List[int]] = {}
        for x in range(n):
            members.setdefault(classes.find(x), []).append(x)
        for left in members.values():
            for right in members.values():
                products = {
                    classes.find(M.table[a][b])
                    for a in left for b in right
                    if M.table[a][b] != M.zero
                }
                products = sorted(products)
                for other in products[1:]:
                    changed |= classes.union(products[0], other)
    return classes


def quotient_identify(
    M: FiniteMonoid,
    pairs: Sequence[Tuple[int, int]],
    mode: str = CONGRUENCE,
) -> FiniteMonoid:
    """
    Identify the given pairs of elements.

    In "congruence" mode this is the quotient by the congruence generated by
    the pairs. In "zero-glue" mode products equal to zero are ignored while
    saturating, and the product of two classes is the class of their nonzero
    products (zero when there are none); the result must be associative.

    Each class is labelled by its first member, or by its members joined with
    '=' when several nonzero elements merged.

    Raises:
        ValueError: On an unknown mode, or a zero-glue result that is not associative
    """
    if mode == CONGRUENCE:
        classes = _congruence_classes(M, pairs)
    elif mode == ZERO_GLUE:
        classes = _zero_glued_classes(M, pairs)
    else:
        raise ValueError(f"Unknown identification mode: '{mode}'")

    n = len(M)
    roots = sorted({classes.find(x) for x in range(n)})
    position = {r: i for i, r in enumerate(roots)}
    members: Dict[int, List[int]] = {r: [] for r in roots}
    for x in range(n):
        members[classes.find(x)].append(x)

    def class_label(root: int) -> str:
        group = members[root]
        if M.zero in group:
            return M.labels[M.zero]
        return '='.join(M.labels[x] for x in group)

    rows = []
    for r in roots:
        row = []
        for s in roots:
            if mode == CONGRUENCE:
                row.append(position[classes.find(M.table[r][s])])
                continue
            nonzero = {
                classes.find(M.table[a][b])
                for a in members[r] for b in members[s]
                if M.table[a][b] != M.zero
            }
            target = nonzero.pop() if nonzero else classes.find(M.zero)
            row.append(position[target])
        rows.append(tuple(row))

    pair_text = ', '.join(f"{M.labels[x]}={M.labels[y]}" for x, y in pairs)
    quotient = FiniteMonoid.from_rows(
        [class_label(r) for r in roots], rows, provenance=f"{M.provenance} / ({pair_text})"
    )
    if mode == ZERO_GLUE and not quotient.is_associative():
        raise ValueError(f"Identifying {pair_text} does not give an associative product")
    return quotient


def _monogenic_shape(kind: CongruenceKind) -> Tuple[int, int]:
    """Threshold k and period m of a one-letter congruence."""
    if kind.tag is Tag.GAMMA_K:
        return kind.param, 1
    if kind.tag is Tag.TAU_M:
        return 0, kind.param
    if kind.tag is Tag.MEET and len(kind.members) == 2:
        tags = {member.tag: member.param for member in kind.members}
        if set(tags) == {Tag.GAMMA_K, Tag.TAU_M}:
            return tags[Tag.GAMMA_K], tags[Tag.TAU_M]
    raise UnsupportedKindError(f"No one-letter monoid for {kind}")


def monogenic(kind: CongruenceKind) -> FiniteMonoid:
    """
    The monoid of {a}* modulo `kind` with a zero adjoined.

    gamma_k(k) keeps a, ..., a^k apart and merges all higher powers into
    a^(k+1)+; tau_m(m) keeps exponents modulo m (a cyclic group of order m
    with identity and zero adjoined); meet(gamma_k(k), tau_m(m)) combines both.

    Raises:
        UnsupportedKindError: For any other kind
    """
    threshold, period = _monogenic_shape(kind)
    top = threshold + period
    labels = ['1']
    for e in range(1, top + 1):
        if kind.tag is Tag.GAMMA_K and e == top:
            labels.append('a+' if e == 2 else f"a^{e}+")
        else:
            labels.append('a' if e == 1 else f"a^{e}")
    labels.append('0')
    zero = top + 1

    def add(i: int, j: int) -> int:
        e = i + j
        if e > top:
            e = threshold + 1 + (e - threshold - 1) % period
        return e

    rows = []
    for i in range(top + 2):
        row = []
        for j in range(top + 2):
            if i == zero or j == zero:
                row.append(zero)
            else:
                row.append(add(i, j))
        rows.append(tuple(row))
    return FiniteMonoid(tuple(labels), tuple(rows), identity=0, zero=zero, provenance=f"M({kind}, a)")
