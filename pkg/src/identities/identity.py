"""
Identities u ~ v between words, their parsing and enumeration.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from src.core.errors import NotationError
from src.core.words import Alphabet, Word, enumerate_words

IDENTITY_SEPARATORS = ('≈', '~')


@dataclass(frozen=True)
class Identity:
    """u ~ v with both sides over one variable alphabet."""

    lhs: Word
    rhs: Word

    def __post_init__(self):
        if self.lhs.alphabet != self.rhs.alphabet:
            raise ValueError("Both sides of an identity must share one alphabet")

    @property
    def alphabet(self) -> Alphabet:
        return self.lhs.alphabet

    @property
    def variables(self) -> Tuple[int, ...]:
        """Variables occurring on either side, in alphabet order."""
        return tuple(sorted(set(self.lhs.letters) | set(self.rhs.letters)))

    @property
    def is_trivial(self) -> bool:
        return self.lhs.letters == self.rhs.letters

    def swapped(self) -> 'Identity':
        return Identity(self.rhs, self.lhs)

    def __str__(self) -> str:
        return f"{self.lhs.power_notation()} ~ {self.rhs.power_notation()}"


def parse_identity(text: str, alphabet: Optional[Alphabet] = None) -> Identity:
    """
    Parse "u ~ v" (or "u ≈ v"); sides may use powers such as xy^2tx.

    Args:
        text: Identity literal
        alphabet: Variable alphabet; by default the letters in order of appearance

    Raises:
        NotationError: If there is not exactly one separator or a side is malformed
    """
    normalised = text.replace('≈', '~')
    sides = normalised.split('~')
    if len(sides) != 2 or not sides[0].strip() or not sides[1].strip():
        raise NotationError(f"Identity must look like 'u ~ v': '{text}'")
    if alphabet is None:
        alphabet = Alphabet.from_text(sides[0], sides[1])
    return Identity(alphabet.parse(sides[0]), alphabet.parse(sides[1]))


def variable_alphabet(nvars: int) -> Alphabet:
    """x1, ..., x_nvars."""
    if nvars < 1:
        raise ValueError(f"nvars must be at least 1, got {nvars}")
    return Alphabet(tuple(f"x{i}" for i in range(1, nvars + 1)))


def _renamed(u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    names: Dict[int, int] = {}
    for x in u + v:
        names.setdefault(x, len(names))
    return tuple(names[x] for x in u), tuple(names[x] for x in v)


def canonical_pair(u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Representative of (u, v) up to renaming of variables and swapping the sides."""
    def key(pair):
        return tuple((len(side), side) for side in pair)
    return min(_renamed(u, v), _renamed(v, u), key=key)


def enumerate_identities(nvars: int, maxlen: int) -> Iterator[Identity]:
    """
    Nontrivial identities over x1..x_nvars with sides of length <= maxlen.

    One identity is produced per class under renaming and side swap.
    """
    alphabet = variable_alphabet(nvars)
    words: List[Word] = list(enumerate_words(alphabet, range(nvars), maxlen))
    for i, u in enumerate(words):
        for v in words[i + 1:]:
            if canonical_pair(u.letters, v.letters) == (u.letters, v.letters):
                yield Identity(u, v)
