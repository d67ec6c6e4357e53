"""
Registry of parametrised identity families.

Variables are named x, y1..yn, t1..tn, declared in that order.
"""
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from src.core.errors import UnknownFamilyError
from src.core.words import Alphabet, Word
from src.identities.identity import Identity

Permutation = Tuple[int, ...]


def family_alphabet(n: int) -> Alphabet:
    names = ['x'] + [f"y{i}" for i in range(1, n + 1)] + [f"t{i}" for i in range(1, n + 1)]
    return Alphabet(tuple(names))


def _word(alphabet: Alphabet, names: Sequence[str]) -> Word:
    return alphabet.word(alphabet.index(name) for name in names)


def _squares(indices: Sequence[int]) -> List[str]:
    return [name for i in indices for name in (f"y{i}", f"y{i}")]


def _links(n: int) -> List[str]:
    """t1 y1 t2 y2 ... tn yn."""
    return [name for i in range(1, n + 1) for name in (f"t{i}", f"y{i}")]


def u_word(n: int) -> Word:
    """x y1^2 y2^2 ... yn^2 x."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return _word(family_alphabet(n), ['x'] + _squares(range(1, n + 1)) + ['x'])


def _lee(n: int, perm: Permutation) -> Identity:
    alphabet = family_alphabet(n)
    lhs = ['x'] + _squares(range(1, n + 1)) + ['x']
    rhs = ['x'] + _squares(range(n, 0, -1)) + ['x']
    return Identity(_word(alphabet, lhs), _word(alphabet, rhs))


def _gusev(n: int, perm: Permutation) -> Identity:
    alphabet = family_alphabet(n)
    ys = [f"y{i}" for i in range(1, n + 1)]
    lhs = ['x'] + ys + ['x'] + _links(n)
    rhs = ['x', 'x'] + ys + _links(n)
    return Identity(_word(alphabet, lhs), _word(alphabet, rhs))


def _j_scheme(n: int, perm: Permutation) -> Identity:
    alphabet = family_alphabet(n)
    ys = [f"y{perm[i]}" for i in range(n)]
    lhs = ['x'] + ys + ['x'] + _links(n)
    rhs = ['x', 'x'] + ys + _links(n)
    return Identity(_word(alphabet, lhs), _word(alphabet, rhs))


def _u_word_left(n: int, perm: Permutation) -> Identity:
    alphabet = family_alphabet(n)
    rhs = ['x', 'y1', 'y1', 'x'] + _squares(range(2, n + 1)) + ['x']
    return Identity(u_word(n), _word(alphabet, rhs))


def _u_word_right(n: int, perm: Permutation) -> Identity:
    alphabet = family_alphabet(n)
    rhs = ['x'] + _squares(range(1, n)) + [f"y{n}", 'x', f"y{n}"]
    return Identity(u_word(n), _word(alphabet, rhs))


@dataclass(frozen=True)
class IdentityFamily:
    name: str
    minimum: int
    build: Callable[[int, Permutation], Identity]
    description: str
    takes_permutation: bool = False

    def __call__(self, n: int, perm: Optional[Sequence[int]] = None) -> Identity:
        if n < self.minimum:
            raise ValueError(f"Family '{self.name}' starts at n = {self.minimum}, got {n}")
        if perm is None:
            perm = tuple(range(1, n + 1))
        elif not self.takes_permutation:
            raise ValueError(f"Family '{self.name}' takes no permutation")
        perm = tuple(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"{list(perm)} is not a permutation of 1..{n}")
        return self.build(n, perm)


FAMILIES: Dict[str, IdentityFamily] = {
    f.name: f for f in (
        IdentityFamily('lee', 2, _lee, "x y1^2 ... yn^2 x ~ x yn^2 ... y1^2 x"),
        IdentityFamily('gusev', 1, _gusev, "x y1..yn x t1y1..tnyn ~ x^2 y1..yn t1y1..tnyn"),
        IdentityFamily(
            'j-scheme', 0, _j_scheme,
            "x y1p..ynp x t1y1..tnyn ~ x^2 y1p..ynp t1y1..tnyn for a permutation p",
            takes_permutation=True,
        ),
        IdentityFamily('u-word-left', 2, _u_word_left, "x y1^2..yn^2 x ~ x y1^2 x y2^2..yn^2 x"),
        IdentityFamily('u-word-right', 2, _u_word_right, "x y1^2..yn^2 x ~ x y1^2..y(n-1)^2 yn x yn"),
    )
}


def family(name: str, n: int, perm: Optional[Sequence[int]] = None) -> Identity:
    """
    The n-th member of a registered family.

    Raises:
        UnknownFamilyError: If no family has that name
        ValueError: If n is below the family minimum or perm is not a permutation of 1..n
    """
    try:
        chosen = FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(f"Unknown identity family '{name}'; known: {sorted(FAMILIES)}") from None
    return chosen(n, perm)


def j_scheme_members(n: int) -> Iterator[Identity]:
    """The j-scheme identities at n, one for every permutation of 1..n."""
    for perm in permutations(range(1, n + 1)):
        yield family('j-scheme', n, perm)
