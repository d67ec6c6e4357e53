"""
Rewriting systems on the doubled alphabet {a, a+}.

Symbols are encoded as integers: letter index i maps to 2*i (plain) and
2*i + 1 (starred). Each rewritable congruence has one conditional star rule
a -> a+ and the three merge rules a+a+ -> a+, aa+ -> a+, a+a -> a+:

    tau1    star every plain letter
    gamma   star a when another a or a+ occurs anywhere in the word
    lambda  star a when an a or a+ occurs to its left
    rho     star a when an a or a+ occurs to its right
"""
from dataclasses import dataclass
from random import Random
from typing import Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple
import re

from src.core.congruence import CongruenceKind, Tag
from src.core.errors import NotationError, UnsupportedKindError
from src.core.words import Alphabet, Word

_SEGMENT_PATTERN = re.compile(r'([a-z][0-9]*)(\+?)')

STAR = 'star'
MERGE = 'merge'


class ExtLetter(NamedTuple):
    base: int
    starred: bool


class Redex(NamedTuple):
    """A rule application site: `star` at position, or `merge` of position and position+1."""
    position: int
    rule: str


@dataclass(frozen=True)
class ExtWord:
    """Word over the doubled alphabet; symbols use the 2*i + starred encoding."""

    alphabet: Alphabet
    symbols: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[ExtLetter]:
        return (ExtLetter(s >> 1, bool(s & 1)) for s in self.symbols)

    def __add__(self, other: 'ExtWord') -> 'ExtWord':
        if other.alphabet != self.alphabet:
            raise ValueError("Cannot concatenate words over different alphabets")
        return ExtWord(self.alphabet, self.symbols + other.symbols)

    def __str__(self) -> str:
        if not self.symbols:
            return '1'
        names = self.alphabet.letters
        return ''.join(names[s >> 1] + ('+' if s & 1 else '') for s in self.symbols)

    def shortlex_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.symbols), self.symbols)

    @property
    def has_stars(self) -> bool:
        return any(s & 1 for s in self.symbols)


def parse_ext_word(alphabet: Alphabet, text: str) -> ExtWord:
    """
    Parse a literal such as "atba+sb+" into an ExtWord without reducing it.

    Raises:
        NotationError: On characters outside the segment grammar
    """
    stripped = ''.join(text.split())
    if stripped in ('', '1'):
        return ExtWord(alphabet, ())
    symbols: List[int] = []
    pos = 0
    while pos < len(stripped):
        match = _SEGMENT_PATTERN.match(stripped, pos)
        if match is None:
            raise NotationError(f"Bad segment in '{text}' at position {pos}")
        symbols.append(2 * alphabet.index(match.group(1)) + (1 if match.group(2) else 0))
        pos = match.end()
    return ExtWord(alphabet, tuple(symbols))


def embed(w: Word) -> ExtWord:
    """Map each letter of a plain word to its unstarred symbol."""
    return ExtWord(w.alphabet, tuple(2 * x for x in w.letters))


def expand(kind: CongruenceKind, w: ExtWord) -> Word:
    """
    A plain word in the class named by w: a+ becomes aa (a for tau1).

    For a reduced w the canonical form of the result is w again.
    """
    plus = 1 if kind.tag is Tag.TAU1 else 2
    letters: List[int] = []
    for s in w.symbols:
        letters.extend([s >> 1] * (plus if s & 1 else 1))
    return Word(w.alphabet, tuple(letters))


def reverse_ext(w: ExtWord) -> ExtWord:
    return ExtWord(w.alphabet, tuple(reversed(w.symbols)))


def _check_kind(kind: CongruenceKind) -> None:
    if not (kind.rewritable or kind.tag is Tag.TRIVIAL):
        raise UnsupportedKindError(f"No rewriting system for {kind}")


def _star_applies(tag: Tag, symbols: Sequence[int], i: int) -> bool:
    base = symbols[i] >> 1
    if tag is Tag.TAU1:
        return True
    if tag is Tag.GAMMA:
        return any((s >> 1) == base for j, s in enumerate(symbols) if j != i)
    if tag is Tag.LAMBDA:
        return any((s >> 1) == base for s in symbols[:i])
    if tag is Tag.RHO:
        return any((s >> 1) == base for s in symbols[i + 1:])
    return False


def redexes(kind: CongruenceKind, symbols: Sequence[int]) -> List[Redex]:
    """All rule applications available in `symbols`, leftmost first."""
    _check_kind(kind)
    if kind.tag is Tag.TRIVIAL:
        return []
    found: List[Redex] = []
    for i, s in enumerate(symbols):
        if i + 1 < len(symbols):
            t = symbols[i + 1]
            if (s >> 1) == (t >> 1) and (s & 1 or t & 1):
                found.append(Redex(i, MERGE))
        if not s & 1 and _star_applies(kind.tag, symbols, i):
            found.append(Redex(i, STAR))
    return found


def apply_redex(symbols: Tuple[int, ...], redex: Redex) -> Tuple[int, ...]:
    i = redex.position
    if redex.rule == STAR:
        return symbols[:i] + (symbols[i] | 1,) + symbols[i + 1:]
    return symbols[:i] + (symbols[i] | 1,) + symbols[i + 2:]


def reduce_with(
    kind: CongruenceKind,
    w: ExtWord,
    choose: Callable[[List[Redex]], Redex],
) -> ExtWord:
    """
    Rewrite until no rule applies, letting `choose` pick among the redexes.

    Args:
        kind: Rewritable congruence
        w: Word to reduce
        choose: Strategy selecting one redex from a non-empty list
    """
    symbols = w.symbols
    while True:
        available = redexes(kind, symbols)
        if not available:
            return ExtWord(w.alphabet, symbols)
        symbols = apply_redex(symbols, choose(available))


def _leftmost(available: List[Redex]) -> Redex:
    return available[0]


def normal_form(kind: CongruenceKind, w: ExtWord) -> ExtWord:
    """
    Reduce w with the leftmost rule application strategy.

    Raises:
        UnsupportedKindError: For kinds without a rewriting system
    """
    return reduce_with(kind, w, _leftmost)


def random_normal_form(kind: CongruenceKind, w: ExtWord, rng: Random) -> ExtWord:
    """Reduce w choosing a random redex at each step."""
    return reduce_with(kind, w, rng.choice)


def canonical(kind: CongruenceKind, w: Word) -> ExtWord:
    """Canonical name of the class of a plain word."""
    return normal_form(kind, embed(w))


def diamond(kind: CongruenceKind, u: ExtWord, v: ExtWord) -> ExtWord:
    """Product of two reduced words: the normal form of their concatenation."""
    return normal_form(kind, u + v)


def is_reduced(kind: CongruenceKind, w: ExtWord) -> bool:
    if kind.tag is Tag.TRIVIAL:
        return not w.has_stars
    return not redexes(kind, w.symbols)


def random_ext_word(alphabet: Alphabet, rng: Random, max_length: int, star_probability: float = 0.3) -> ExtWord:
    """Random ExtWord used by the confluence sweeps."""
    length = rng.randint(0, max_length)
    symbols = tuple(
        2 * rng.randrange(len(alphabet)) + (1 if rng.random() < star_probability else 0)
        for _ in range(length)
    )
    return ExtWord(alphabet, symbols)


def check_confluence(
    kind: CongruenceKind,
    alphabet: Alphabet,
    samples: int,
    orders: int,
    seed: int,
    max_length: int = 12,
) -> List[Tuple[ExtWord, ExtWord, ExtWord]]:
    """
    Reduce random words along random rule orders and compare with the leftmost result.

    Returns:
        List of (word, leftmost normal form, differing normal form); empty when confluent
    """
    rng = Random(seed)
    failures: List[Tuple[ExtWord, ExtWord, ExtWord]] = []
    for _ in range(samples):
        w = random_ext_word(alphabet, rng, max_length)
        expected = normal_form(kind, w)
        for _ in range(orders):
            other = random_normal_form(kind, w, rng)
            if other != expected:
                failures.append((w, expected, other))
                break
    return failures


def first_redex(kind: CongruenceKind, w: ExtWord) -> Optional[Redex]:
    available = redexes(kind, w.symbols)
    return available[0] if available else None
