"""
Monoid specs: one-line descriptions of the monoids used on the command line.

    gamma:a+b+ta+,a+tb+a+     M_gamma(W)   (also t0, t1, lambda, rho)
    pres:A^1                  bundled presentation or .pres file, ^1 adjoins an identity
    lee:3                     Lee semigroup L_3 (^1 allowed)
    prod:(SPEC)x(SPEC)        direct product of parenthesised factors, two or more
    dual:SPEC                 transposed table
    sub:SPEC{l1,l2}           submonoid generated by the labelled elements
    quot:SPEC{l1=l2}          quotient by the generated congruence
    glue:SPEC{l1=l2}          identification ignoring zero products
    mono:gamma_k(1)           one-letter monoid
    zoo:NAME                  named generator (see src.identities.varieties)
    json:FILE                 monoid dump written by `build --save`
"""
from pathlib import Path
from typing import Dict, List, Optional, Tuple
import json
import logging

from src.core.congruence import CongruenceKind
from src.core.errors import NotationError
from src.monoids.constructions import (
    CONGRUENCE,
    ZERO_GLUE,
    adjoin_identity,
    direct_product,
    dual,
    monogenic,
    quotient_identify,
    submonoid,
)
from src.monoids.finite_monoid import FiniteMonoid
from src.monoids.presentation import (
    DEFAULT_CAP,
    DEFAULT_MAX_RULE_LENGTH,
    DEFAULT_MAX_RULES,
    PRESENTATION_SUFFIX,
    from_presentation,
    lee_presentation,
    load_presentation_file,
)
from src.monoids.rees import build
from src.utils.notation import parse_word_list, split_words

logger = logging.getLogger(__name__)

KIND_PREFIXES = ('t0', 'trivial', 't1', 'tau1', 'gamma', 'lambda', 'rho')
BUNDLED_PRESENTATIONS = Path(__file__).resolve().parent.parent.parent / 'presentations'


def _strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith('(') and text.endswith(')') and _depth_closes_at_end(text):
        text = text[1:-1].strip()
    return text


def _depth_closes_at_end(text: str) -> bool:
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == '('
        depth -= ch == ')'
        if depth == 0 and i < len(text) - 1:
            return False
    return True


def _split_braces(text: str) -> Tuple[str, List[str]]:
    """SPEC{a,b} -> (SPEC, [a, b]); commas inside nested parentheses are kept."""
    if not text.endswith('}'):
        raise NotationError(f"Expected '{{labels}}' at the end of '{text}'")
    depth = 0
    for i in range(len(text) - 1, -1, -1):
        depth += text[i] == '}'
        depth -= text[i] == '{'
        if depth == 0:
            inner, base = text[i + 1:-1], text[:i]
            break
    else:
        raise NotationError(f"Unbalanced braces in '{text}'")
    parts, current, level = [], '', 0
    for ch in inner:
        level += ch in '({'
        level -= ch in ')}'
        if ch == ',' and level == 0:
            parts.append(current.strip())
            current = ''
        else:
            current += ch
    if current.strip():
        parts.append(current.strip())
    return base, parts


def _split_factors(body: str) -> List[str]:
    """(SPEC)x(SPEC)[x(SPEC)...] -> the parenthesised factor specs."""
    factors: List[str] = []
    i = 0
    while True:
        if i >= len(body) or body[i] != '(':
            raise NotationError(f"Product factors must be parenthesised, as in '(SPEC)x(SPEC)': '{body}'")
        depth = 0
        for j in range(i, len(body)):
            depth += body[j] == '('
            depth -= body[j] == ')'
            if depth == 0:
                break
        else:
            raise NotationError(f"Unbalanced parentheses in product '{body}'")
        factors.append(body[i + 1:j])
        i = j + 1
        if i == len(body):
            break
        if body[i] != 'x':
            raise NotationError(f"Expected 'x' between product factors at position {i} of '{body}'")
        i += 1
    if len(factors) < 2:
        raise NotationError(f"A product needs at least two factors: '{body}'")
    return factors


def _split_identity_suffix(text: str) -> Tuple[str, bool]:
    if text.endswith('^1'):
        return text[:-2], True
    return text, False


class MonoidResolver:
    """Turns monoid specs into FiniteMonoid tables, caching each spec."""

    def __init__(
        self,
        presentations_dir: Optional[Path] = None,
        cap: int = DEFAULT_CAP,
        max_rules: int = DEFAULT_MAX_RULES,
        max_rule_length: int = DEFAULT_MAX_RULE_LENGTH,
    ):
        self.presentations_dir = Path(presentations_dir) if presentations_dir else BUNDLED_PRESENTATIONS
        self.cap = cap
        self.max_rules = max_rules
        self.max_rule_length = max_rule_length
        self._cache: Dict[str, FiniteMonoid] = {}
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    @classmethod
    def from_config(cls, config) -> 'MonoidResolver':
        return cls(config.presentations_dir, config.presentation_cap, config.kb_max_rules, config.kb_max_rule_length)

    def resolve(self, spec: str) -> FiniteMonoid:
        """
        Build the monoid a spec describes.

        Raises:
            NotationError: If the spec is malformed
            FileNotFoundError: If a referenced file does not exist
        """
        spec = _strip_parens(spec)
        if spec not in self._cache:
            self.logger.debug(f"Resolving monoid spec '{spec}'")
            self._cache[spec] = self._resolve(spec)
        return self._cache[spec]

    def _resolve(self, spec: str) -> FiniteMonoid:
        if ':' not in spec:
            raise NotationError(f"Monoid spec needs a 'kind:' prefix: '{spec}'")
        prefix, body = spec.split(':', 1)
        prefix = prefix.strip().lower()
        body = body.strip()
        if prefix in KIND_PREFIXES:
            kind = CongruenceKind.parse(prefix)
            return build(kind, parse_word_list(kind, split_words(body)))
        handler = getattr(self, f"_resolve_{prefix}", None)
        if handler is None:
            raise NotationError(f"Unknown monoid spec prefix '{prefix}' in '{spec}'")
        return handler(body)

    def _resolve_pres(self, body: str) -> FiniteMonoid:
        name, unital = _split_identity_suffix(body)
        path = self._presentation_path(name)
        S = from_presentation(load_presentation_file(path), self.cap, self.max_rules, self.max_rule_length)
        return adjoin_identity(S) if unital else S

    def _presentation_path(self, name: str) -> Path:
        candidates = [Path(name), Path(name + PRESENTATION_SUFFIX), self.presentations_dir / f"{name}{PRESENTATION_SUFFIX}"]
        for path in candidates:
            if path.is_file():
                return path
        raise FileNotFoundError(f"No presentation '{name}' (looked in {self.presentations_dir})")

    def _resolve_lee(self, body: str) -> FiniteMonoid:
        text, unital = _split_identity_suffix(body)
        if not text.isdigit():
            raise NotationError(f"lee: expects a length, got '{body}'")
        S = from_presentation(lee_presentation(int(text)), self.cap, self.max_rules, self.max_rule_length)
        return adjoin_identity(S) if unital else S

    def _resolve_prod(self, body: str) -> FiniteMonoid:
        factors = _split_factors(body)
        M = self.resolve(factors[0])
        for factor in factors[1:]:
            M = direct_product(M, self.resolve(factor))
        return M

    def _resolve_dual(self, body: str) -> FiniteMonoid:
        return dual(self.resolve(body))

    def _resolve_sub(self, body: str) -> FiniteMonoid:
        base, labels = _split_braces(body)
        M = self.resolve(base)
        return submonoid(M, [self._element(M, label) for label in labels])[0]

    def _identify(self, body: str, mode: str) -> FiniteMonoid:
        base, equations = _split_braces(body)
        M = self.resolve(base)
        pairs = []
        for equation in equations:
            sides = equation.split('=')
            if len(sides) != 2:
                raise NotationError(f"Expected 'label=label', got '{equation}'")
            pairs.append((self._element(M, sides[0].strip()), self._element(M, sides[1].strip())))
        return quotient_identify(M, pairs, mode)

    def _resolve_quot(self, body: str) -> FiniteMonoid:
        return self._identify(body, CONGRUENCE)

    def _resolve_glue(self, body: str) -> FiniteMonoid:
        return self._identify(body, ZERO_GLUE)

    def _resolve_mono(self, body: str) -> FiniteMonoid:
        return monogenic(CongruenceKind.parse(body))

    def _resolve_zoo(self, body: str) -> FiniteMonoid:
        from src.identities.varieties import GENERATOR_ZOO
        if body not in GENERATOR_ZOO:
            raise NotationError(f"Unknown zoo monoid '{body}'; known: {sorted(GENERATOR_ZOO)}")
        return self.resolve(GENERATOR_ZOO[body]).relabel(body)

    def _resolve_json(self, body: str) -> FiniteMonoid:
        from src.formatters.json_formatter import monoid_from_dict
        path = Path(body)
        if not path.is_file():
            raise FileNotFoundError(f"Monoid dump not found: {path}")
        with open(path, 'r', encoding='utf-8') as f:
            return monoid_from_dict(json.load(f))

    @staticmethod
    def _element(M: FiniteMonoid, label: str) -> int:
        try:
            return M.index(label)
        except KeyError as error:
            raise NotationError(str(error.args[0])) from None


def resolve_monoid(spec: str, resolver: Optional[MonoidResolver] = None) -> FiniteMonoid:
    return (resolver or MonoidResolver()).resolve(spec)
