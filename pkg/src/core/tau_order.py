"""
Tau-words, the order <=_tau and downward closures of finite sets of tau-words.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Set, Tuple
import logging

from src.core.congruence import CongruenceKind, Tag, class_representatives
from src.core.errors import KindMismatchError, UnsupportedKindError
from src.core.rewrite import ExtWord, canonical, diamond, embed, expand, is_reduced, normal_form
from src.core.words import Alphabet, Word, factors_of

logger = logging.getLogger(__name__)

CLOSURE_KINDS = (Tag.TRIVIAL, Tag.TAU1, Tag.GAMMA, Tag.LAMBDA, Tag.RHO)


@dataclass(frozen=True)
class TauWord:
    """A class of the free monoid modulo `kind`, named by its reduced ExtWord."""

    kind: CongruenceKind
    canon: ExtWord

    def __post_init__(self):
        if self.kind.tag not in CLOSURE_KINDS:
            raise UnsupportedKindError(f"Tau-words are not named for {self.kind}")
        if not is_reduced(self.kind, self.canon):
            raise ValueError(f"'{self.canon}' is not reduced for {self.kind}")

    @classmethod
    def of_word(cls, kind: CongruenceKind, w: Word) -> 'TauWord':
        """The tau-word containing the plain word w."""
        if kind.tag is Tag.TRIVIAL:
            return cls(kind, embed(w))
        return cls(kind, canonical(kind, w))

    @property
    def alphabet(self) -> Alphabet:
        return self.canon.alphabet

    @property
    def label(self) -> str:
        return str(self.canon)

    @property
    def is_empty(self) -> bool:
        return not self.canon.symbols

    def representative(self) -> Word:
        """A plain word of the class (for trivial kind, the word itself)."""
        return expand(self.kind, self.canon)

    def shortlex_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.canon.shortlex_key()

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class TauWordSet:
    """Finite set of tau-words of one kind, kept in shortlex order."""

    kind: CongruenceKind
    members: Tuple[TauWord, ...]

    @classmethod
    def of(cls, kind: CongruenceKind, words: Iterable[TauWord]) -> 'TauWordSet':
        unique: Set[TauWord] = set()
        for w in words:
            if w.kind != kind:
                raise KindMismatchError(f"'{w}' is a {w.kind} word, expected {kind}")
            unique.add(w)
        return cls(kind, tuple(sorted(unique, key=TauWord.shortlex_key)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[TauWord]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        return item in set(self.members)

    def labels(self) -> List[str]:
        return [w.label for w in self.members]


def _normalise(kind: CongruenceKind, alphabet: Alphabet, symbols: Tuple[int, ...]) -> TauWord:
    ext = ExtWord(alphabet, symbols)
    if kind.tag is Tag.TRIVIAL:
        return TauWord(kind, ext)
    return TauWord(kind, normal_form(kind, ext))


def _closure_of(u: TauWord) -> Set[TauWord]:
    kind = u.kind
    if kind.tag in (Tag.TRIVIAL, Tag.TAU1):
        return {_normalise(kind, u.alphabet, f) for f in factors_of(u.canon.symbols)}
    found: Set[TauWord] = set()
    for member in class_representatives(kind, u.representative()):
        for f in factors_of(member.letters):
            found.add(TauWord.of_word(kind, Word(u.alphabet, f)))
    return found


def closure(W: TauWordSet) -> TauWordSet:
    """
    Downward <=_tau closure of W.

    Trivial and tau1 closures take the factors of the names directly; gamma,
    lambda and rho closures take the canonical forms of the factors of the
    K-set words of each member.

    Raises:
        UnsupportedKindError: For kinds without tau-word names
    """
    if W.kind.tag not in CLOSURE_KINDS:
        raise UnsupportedKindError(f"Closures are not defined for {W.kind}")
    found: Set[TauWord] = set()
    for u in W:
        found |= _closure_of(u)
    result = TauWordSet.of(W.kind, found)
    logger.debug(f"closure of {W.labels()} under {W.kind}: {len(result)} tau-words")
    return result


def _same_kind(v: TauWord, u: TauWord) -> None:
    if v.kind != u.kind:
        raise KindMismatchError(f"Cannot compare a {v.kind} word with a {u.kind} word")


def leq(v: TauWord, u: TauWord) -> bool:
    """
    True iff v <=_tau u.

    Raises:
        KindMismatchError: If v and u have different kinds
    """
    _same_kind(v, u)
    return v in _closure_of(u)


def _product(kind: CongruenceKind, u: ExtWord, v: ExtWord) -> ExtWord:
    if kind.tag is Tag.TRIVIAL:
        return u + v
    return diamond(kind, u, v)


def leq_by_factorization(v: TauWord, u: TauWord) -> bool:
    """Search p, s in the closure of u with p * v * s = u."""
    _same_kind(v, u)
    below = _closure_of(u)
    for p in below:
        left = _product(u.kind, p.canon, v.canon)
        for s in below:
            if _product(u.kind, left, s.canon) == u.canon:
                return True
    return False
