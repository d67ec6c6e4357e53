"""
Tau-word literals.

A literal is a sequence of segments, each a letter name optionally followed
by '+'. Under gamma, lambda and rho a bare letter names {a} and a+ names
{a^2, a^3, ...}; under tau1 only starred segments are legal and a+ names
{a, a^2, ...}; plain (t0) literals carry no stars at all.
"""
from typing import Iterable, List, Optional

from src.core.congruence import CongruenceKind, Tag
from src.core.errors import IllegalSegmentError, NotReducedError
from src.core.rewrite import is_reduced, normal_form, parse_ext_word
from src.core.tau_order import TauWord, TauWordSet
from src.core.words import LETTER_PATTERN, Alphabet


def literal_alphabet(*literals: str) -> Alphabet:
    """The letters of the literals in name order."""
    names = set()
    for text in literals:
        names.update(LETTER_PATTERN.findall(text))
    return Alphabet(tuple(sorted(names)))


def parse_tau_word(kind: CongruenceKind, literal: str, alphabet: Optional[Alphabet] = None) -> TauWord:
    """
    Parse a reduced tau-word literal such as "atba+sb+".

    Raises:
        NotationError: On a malformed segment or unknown letter
        IllegalSegmentError: Bare letter under tau1, or a star in a plain word
        NotReducedError: Literal is not the canonical name of its class
    """
    if alphabet is None:
        alphabet = literal_alphabet(literal)
    ext = parse_ext_word(alphabet, literal)
    if kind.tag is Tag.TAU1 and any(not s & 1 for s in ext.symbols):
        raise IllegalSegmentError(f"'{literal}': only starred segments such as 'a+' are allowed under {kind}")
    if kind.tag is Tag.TRIVIAL and ext.has_stars:
        raise IllegalSegmentError(f"'{literal}': starred segments are not allowed in plain words")
    if kind.tag is not Tag.TRIVIAL and kind.rewritable and not is_reduced(kind, ext):
        raise NotReducedError(literal, str(normal_form(kind, ext)))
    return TauWord(kind, ext)


def render(w: TauWord) -> str:
    return w.label


def split_words(text: str) -> List[str]:
    return [part.strip() for part in text.split(',') if part.strip()]


def parse_word_list(kind: CongruenceKind, literals: Iterable[str], alphabet: Optional[Alphabet] = None) -> TauWordSet:
    """Parse several literals over one shared alphabet."""
    literals = list(literals)
    if alphabet is None:
        alphabet = literal_alphabet(*literals)
    return TauWordSet.of(kind, [parse_tau_word(kind, text, alphabet) for text in literals])
