"""
Letters, words and the occurrence statistics used throughout the library.

A word is a finite sequence of letters drawn from a declared Alphabet. Words
are stored as tuples of letter indices; the alphabet supplies names and the
letter order used for shortlex comparisons.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Sequence, Set, Tuple
import re

from src.core.errors import NotationError

LETTER_PATTERN = re.compile(r'[a-z][0-9]*')
_TOKEN_PATTERN = re.compile(r'([a-z][0-9]*)(?:\^([0-9]+))?')


@dataclass(frozen=True)
class Alphabet:
    """
    Finite, ordered set of letter names.

    Letter names are one lowercase character optionally followed by digits
    (a, t, y1). The declaration order is the letter order.
    """

    letters: Tuple[str, ...]

    def __post_init__(self):
        seen: Set[str] = set()
        for name in self.letters:
            if not LETTER_PATTERN.fullmatch(name):
                raise NotationError(f"Invalid letter name: '{name}'")
            if name in seen:
                raise NotationError(f"Duplicate letter name: '{name}'")
            seen.add(name)

    @classmethod
    def of(cls, *names: str) -> 'Alphabet':
        """Declare an alphabet from letter names given in order."""
        return cls(tuple(names))

    @classmethod
    def from_text(cls, *texts: str) -> 'Alphabet':
        """
        Collect the letters of one or more literals in first-occurrence order.

        Args:
            texts: Word, tau-word or identity literals

        Returns:
            Alphabet containing every letter name found
        """
        names: List[str] = []
        for text in texts:
            for name in LETTER_PATTERN.findall(text):
                if name not in names:
                    names.append(name)
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise NotationError(f"Letter '{name}' is not in alphabet {list(self.letters)}") from None

    @property
    def _positions(self) -> Dict[str, int]:
        cache = self.__dict__.get('_position_cache')
        if cache is None:
            cache = {name: i for i, name in enumerate(self.letters)}
            object.__setattr__(self, '_position_cache', cache)
        return cache

    def word(self, indices: Iterable[int] = ()) -> 'Word':
        """Build a word from letter indices."""
        return Word(self, tuple(indices))

    def parse(self, text: str) -> 'Word':
        """
        Parse a plain word literal such as "xy^2tx" or "1" (the empty word).

        Raises:
            NotationError: On characters outside the grammar or unknown letters
        """
        stripped = ''.join(text.split())
        if stripped in ('', '1'):
            return Word(self, ())
        indices: List[int] = []
        pos = 0
        while pos < len(stripped):
            match = _TOKEN_PATTERN.match(stripped, pos)
            if match is None:
                raise NotationError(f"Cannot parse word '{text}' at position {pos}")
            exponent = int(match.group(2)) if match.group(2) else 1
            if exponent < 1:
                raise NotationError(f"Exponent must be positive in '{text}'")
            indices.extend([self.index(match.group(1))] * exponent)
            pos = match.end()
        return Word(self, tuple(indices))


@dataclass(frozen=True)
class Word:
    """Element of the free monoid over an alphabet; the empty word is 1."""

    alphabet: Alphabet
    letters: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: 'Word') -> 'Word':
        if other.alphabet != self.alphabet:
            raise ValueError("Cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __str__(self) -> str:
        if not self.letters:
            return '1'
        return ''.join(self.alphabet.letters[i] for i in self.letters)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.alphabet.letters[i] for i in self.letters)

    def power_notation(self) -> str:
        """Render with island exponents, e.g. xy^2x."""
        if not self.letters:
            return '1'
        parts = []
        for island in islands(self):
            name = self.alphabet.letters[island.letter]
            parts.append(name if island.exponent == 1 else f"{name}^{island.exponent}")
        return ''.join(parts)

    def shortlex_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.letters), self.letters)


class Content(NamedTuple):
    """Letters occurring exactly once and at least twice."""
    simple: FrozenSet[int]
    multiple: FrozenSet[int]


class OccurrenceProfile(NamedTuple):
    """con_i(w) for 1 <= i <= k (index i-1) together with con(w)."""
    by_count: Tuple[FrozenSet[int], ...]
    content: FrozenSet[int]

    def con(self, i: int) -> FrozenSet[int]:
        return self.by_count[i - 1]


class Island(NamedTuple):
    letter: int
    exponent: int


class IslandDecomposition(NamedTuple):
    """Maximal power runs of a word, in order."""
    islands: Tuple[Island, ...]

    @property
    def skeleton(self) -> Tuple[int, ...]:
        return tuple(island.letter for island in self.islands)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(island.exponent for island in self.islands)

    def expand(self) -> Tuple[int, ...]:
        letters: List[int] = []
        for island in self.islands:
            letters.extend([island.letter] * island.exponent)
        return tuple(letters)

    def __iter__(self):
        return iter(self.islands)

    def __len__(self) -> int:
        return len(self.islands)


def letter_counts(letters: Sequence[int]) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for letter in letters:
        counts[letter] = counts.get(letter, 0) + 1
    return counts


def content(w: Word) -> Content:
    """
    Split con(w) into simple and multiple letters.

    Args:
        w: Word to inspect

    Returns:
        Content with the letters occurring once and at least twice
    """
    counts = letter_counts(w.letters)
    return Content(
        simple=frozenset(x for x, n in counts.items() if n == 1),
        multiple=frozenset(x for x, n in counts.items() if n >= 2),
    )


def occurrence_profile(w: Word, k: int) -> OccurrenceProfile:
    """Return con_1(w), ..., con_k(w) and con(w)."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    counts = letter_counts(w.letters)
    by_count = tuple(
        frozenset(x for x, n in counts.items() if n == i) for i in range(1, k + 1)
    )
    return OccurrenceProfile(by_count=by_count, content=frozenset(counts))


def islands_of(letters: Sequence[int]) -> IslandDecomposition:
    runs: List[Island] = []
    for letter in letters:
        if runs and runs[-1].letter == letter:
            runs[-1] = Island(letter, runs[-1].exponent + 1)
        else:
            runs.append(Island(letter, 1))
    return IslandDecomposition(tuple(runs))


def islands(w: Word) -> IslandDecomposition:
    """Decompose w into its islands (maximal runs of one letter)."""
    return islands_of(w.letters)


def is_factor(small: Sequence, big: Sequence) -> bool:
    n, m = len(small), len(big)
    if n == 0:
        return True
    small = tuple(small)
    big = tuple(big)
    return any(big[i:i + n] == small for i in range(m - n + 1))


def is_subword(v: Word, u: Word) -> bool:
    """True iff v is a contiguous factor of u."""
    return is_factor(v.letters, u.letters)


def factors_of(letters: Sequence) -> Set[Tuple]:
    letters = tuple(letters)
    found: Set[Tuple] = {()}
    for i in range(len(letters)):
        for j in range(i + 1, len(letters) + 1):
            found.add(letters[i:j])
    return found


def all_subwords(u: Word) -> Set[Word]:
    """All factors of u, the empty word included."""
    return {Word(u.alphabet, f) for f in factors_of(u.letters)}


def reverse(w: Word) -> Word:
    return Word(w.alphabet, tuple(reversed(w.letters)))


def k_island_limited(w: Word, k: int) -> bool:
    """True iff every letter forms at most k islands in w."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    counts = letter_counts(islands(w).skeleton)
    return all(n <= k for n in counts.values())


def enumerate_words(alphabet: Alphabet, letters: Sequence[int], maxlen: int) -> Iterator[Word]:
    """
    Yield every word over the given letters of length <= maxlen in shortlex order.

    Args:
        alphabet: Alphabet the letters belong to
        letters: Letter indices to use, in the desired order
        maxlen: Maximum word length
    """
    ordered = sorted(set(letters))
    level: List[Tuple[int, ...]] = [()]
    yield Word(alphabet, ())
    for _ in range(maxlen):
        level = [w + (x,) for w in level for x in ordered]
        for w in level:
            yield Word(alphabet, w)
