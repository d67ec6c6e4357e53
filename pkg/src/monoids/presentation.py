"""
Finite semigroups and monoids from presentations.

A presentation is completed by shortlex Knuth-Bendix, then its irreducible
words are enumerated level by level. A formal zero is modelled as one more
generator z with zx = xz = zz = z for every generator x; it is labelled "0".
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple
import logging

from src.core.errors import CapExceededError, NotationError
from src.core.words import Alphabet, Word, islands
from src.monoids.finite_monoid import FiniteMonoid, find_identity, find_zero

logger = logging.getLogger(__name__)

DEFAULT_MAX_RULES = 200
DEFAULT_MAX_RULE_LENGTH = 12
DEFAULT_CAP = 500
MAX_EQUATIONS = 20_000
PRESENTATION_SUFFIX = '.pres'

_FIRST_CHAR = 0x4E00


class Relation(NamedTuple):
    """lhs = rhs; rhs None stands for the formal zero."""
    lhs: Word
    rhs: Optional[Word]


@dataclass(frozen=True)
class Presentation:
    generators: Alphabet
    relations: Tuple[Relation, ...]
    name: str = ''

    @property
    def has_zero(self) -> bool:
        return any(r.rhs is None for r in self.relations)

    def render(self) -> str:
        lines = [' '.join(self.generators.letters)]
        for relation in self.relations:
            rhs = '0' if relation.rhs is None else relation.rhs.power_notation()
            lines.append(f"{relation.lhs.power_notation()} = {rhs}")
        return '\n'.join(lines) + '\n'


def parse_presentation(text: str, name: str = '') -> Presentation:
    """
    Parse the presentation format.

    The first non-comment line lists the generators (whitespace or comma
    separated, optionally prefixed by "generators:"). Every further line is a
    chain of equal words such as "ef = ce = 0"; "0" is the formal zero, "1" the
    empty word, and powers are written x^2. Text after '#' is ignored.

    Raises:
        NotationError: On malformed lines or unknown generators
    """
    lines = [line.split('#', 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise NotationError("Presentation has no generators line")
    header = lines[0]
    if header.lower().startswith('generators:'):
        header = header.split(':', 1)[1]
    generators = Alphabet(tuple(header.replace(',', ' ').split()))
    if not len(generators):
        raise NotationError("Presentation declares no generators")

    relations: List[Relation] = []
    for line in lines[1:]:
        sides = [side.strip() for side in line.split('=')]
        if len(sides) < 2 or any(not side for side in sides):
            raise NotationError(f"Relation line needs at least two sides: '{line}'")
        parsed = [None if side == '0' else generators.parse(side) for side in sides]
        anchor = next((side for side in parsed if side is not None), None)
        if anchor is None:
            continue
        for side in parsed:
            if side is anchor:
                continue
            relations.append(Relation(anchor, side))
    return Presentation(generators, tuple(relations), name)


def validate_presentation_file(path: Path) -> Path:
    """
    Check that a presentation file exists and has the expected suffix.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the suffix is wrong
    """
    if not path.exists():
        raise FileNotFoundError(f"Presentation file not found: {path}")
    if path.suffix != PRESENTATION_SUFFIX:
        raise ValueError(f"Presentation file must end in {PRESENTATION_SUFFIX}: {path}")
    return path


def load_presentation_file(path: Path) -> Presentation:
    path = validate_presentation_file(Path(path))
    logger.info(f"Loading presentation from {path}")
    return parse_presentation(path.read_text(encoding='utf-8'), name=path.stem)


def lee_presentation(ell: int) -> Presentation:
    """<e, f | e^2 = e, f^2 = f, efef... (length ell) = 0>."""
    if ell < 2:
        raise ValueError(f"Lee semigroups need length >= 2, got {ell}")
    generators = Alphabet.of('e', 'f')
    e, f = generators.parse('e'), generators.parse('f')
    alternating = generators.word(tuple(i % 2 for i in range(ell)))
    relations = (
        Relation(e + e, e),
        Relation(f + f, f),
        Relation(alternating, None),
    )
    return Presentation(generators, relations, name=f"L{ell}")


class _Encoding:
    """Generators as single characters so rewriting can use str operations."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.chars = [chr(_FIRST_CHAR + i) for i in range(len(presentation.generators))]
        self.zero = chr(_FIRST_CHAR + len(self.chars)) if presentation.has_zero else None

    def encode(self, w: Optional[Word]) -> str:
        if w is None:
            return self.zero
        return ''.join(self.chars[i] for i in w.letters)

    @property
    def alphabet(self) -> List[str]:
        return self.chars + ([self.zero] if self.zero else [])

    def label(self, word: str) -> str:
        if word == '':
            return '1'
        if self.zero is not None and word == self.zero:
            return '0'
        letters = tuple(ord(c) - _FIRST_CHAR for c in word)
        return Word(self.presentation.generators, letters).power_notation()


def _orient(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if (len(a), a) > (len(b), b) else (b, a)


def _reduce(word: str, rules: Dict[str, str]) -> str:
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules.items():
            at = word.find(lhs)
            if at >= 0:
                word = word[:at] + rhs + word[at + len(lhs):]
                changed = True
                break
    return word


def knuth_bendix(
    equations: Sequence[Tuple[str, str]],
    max_rules: int = DEFAULT_MAX_RULES,
    max_rule_length: int = DEFAULT_MAX_RULE_LENGTH,
) -> Dict[str, str]:
    """
    Complete a string rewriting system under the shortlex order.

    Args:
        equations: Pairs of equal words
        max_rules: Cap on the number of rules
        max_rule_length: Cap on the length of a left-hand side

    Returns:
        Inter-reduced confluent rules, lhs -> rhs

    Raises:
        CapExceededError: If a cap is hit before completion
    """
    rules: Dict[str, str] = {}
    pending: List[Tuple[str, str]] = list(reversed(list(equations)))
    processed = 0
    while True:
        while pending:
            processed += 1
            if processed > MAX_EQUATIONS:
                raise CapExceededError(f"Completion processed more than {MAX_EQUATIONS} equations")
            a, b = pending.pop()
            a, b = _reduce(a, rules), _reduce(b, rules)
            if a == b:
                continue
            lhs, rhs = _orient(a, b)
            if len(lhs) > max_rule_length:
                raise CapExceededError(f"Rule left-hand side longer than {max_rule_length}")
            rules[lhs] = rhs
            for other_lhs, other_rhs in list(rules.items()):
                if other_lhs == lhs:
                    continue
                if lhs in other_lhs:
                    del rules[other_lhs]
                    pending.append((other_lhs, other_rhs))
                else:
                    rules[other_lhs] = _reduce(other_rhs, rules)
            if len(rules) > max_rules:
                raise CapExceededError(f"Completion needs more than {max_rules} rules")

        critical: List[Tuple[str, str]] = []
        items = list(rules.items())
        for l1, r1 in items:
            for l2, r2 in items:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] != l2[:k]:
                        continue
                    x = _reduce(r1 + l2[k:], rules)
                    y = _reduce(l1[:-k] + r2, rules)
                    if x != y:
                        critical.append((x, y))
        if not critical:
            logger.debug(f"Completion finished with {len(rules)} rules")
            return rules
        pending = list(reversed(critical))


def from_presentation_with_generators(
    p: Presentation,
    cap: int = DEFAULT_CAP,
    max_rules: int = DEFAULT_MAX_RULES,
    max_rule_length: int = DEFAULT_MAX_RULE_LENGTH,
) -> Tuple[FiniteMonoid, Dict[str, int]]:
    """
    Enumerate the semigroup presented by p.

    Returns:
        The table and the element each generator evaluates to

    Raises:
        CapExceededError: If completion or enumeration exceeds its cap
    """
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    encoding = _Encoding(p)
    equations = [(encoding.encode(r.lhs), encoding.encode(r.rhs)) for r in p.relations]
    if encoding.zero is not None:
        z = encoding.zero
        for c in encoding.alphabet:
            equations.append((z + c, z))
            equations.append((c + z, z))
    rules = knuth_bendix(equations, max_rules, max_rule_length)
    lhs_list = list(rules)

    def irreducible(word: str) -> bool:
        return not any(word.endswith(lhs) for lhs in lhs_list)

    elements: List[str] = []
    if any(len(r.lhs) == 0 or (r.rhs is not None and len(r.rhs) == 0) for r in p.relations):
        elements.append('')
    level = [c for c in encoding.alphabet if c not in rules]
    while level:
        elements.extend(level)
        if len(elements) > cap:
            raise CapExceededError(
                f"Presentation {p.name or ''} has more than {cap} elements (or is infinite)"
            )
        level = [w + c for w in level for c in encoding.alphabet if irreducible(w + c)]

    position = {w: i for i, w in enumerate(elements)}
    rows = [[position[_reduce(a + b, rules)] for b in elements] for a in elements]
    table = tuple(tuple(row) for row in rows)
    labels = tuple(encoding.label(w) for w in elements)
    zero = position.get(encoding.zero) if encoding.zero is not None else find_zero(table)
    monoid = FiniteMonoid(
        labels=labels,
        table=table,
        identity=find_identity(table),
        zero=zero,
        provenance=p.name or 'presentation',
    )
    images = {
        name: position[_reduce(encoding.chars[i], rules)]
        for i, name in enumerate(p.generators.letters)
    }
    logger.info(f"[OK] Presentation {p.name or ''}: {len(rules)} rules, {len(monoid)} elements")
    return monoid, images


def from_presentation(
    p: Presentation,
    cap: int = DEFAULT_CAP,
    max_rules: int = DEFAULT_MAX_RULES,
    max_rule_length: int = DEFAULT_MAX_RULE_LENGTH,
) -> FiniteMonoid:
    """The finite semigroup presented by p (see from_presentation_with_generators)."""
    return from_presentation_with_generators(p, cap, max_rules, max_rule_length)[0]


def relation_holds(M: FiniteMonoid, images: Dict[str, int], p: Presentation, relation: Relation) -> bool:
    """Evaluate both sides of a relation under the generator images."""
    def value(w: Optional[Word]) -> int:
        if w is None:
            return M.zero
        return M.evaluate(images[name] for name in w.names)
    return value(relation.lhs) == value(relation.rhs)
