"""
Bounded check of the hypotheses of the non-finite-basis criterion.

For each n the word U_n = x y1^2 ... yn^2 x must fail to be a tau-term (some
satisfied identity U_n ~ V_n has sides that are not tau-related), while each
required tau-word must stay a tau-term up to the length bound. The report
records the bounds; it is evidence for the hypotheses, not a proof.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from src.core.congruence import GAMMA, CongruenceKind, Tag, class_representatives, related
from src.core.tau_order import TauWord
from src.core.words import Word
from src.identities.evaluation import DEFAULT_VECTOR_LIMIT, satisfies
from src.identities.families import family, u_word
from src.identities.search import is_tau_term_bounded
from src.monoids.finite_monoid import FiniteMonoid

logger = logging.getLogger(__name__)

CANDIDATE_FAMILIES = ('u-word-left', 'u-word-right')
MAX_FALLBACK_WORDS = 200_000
LIMITATION = (
    "Bounded search only: a passing report corroborates the hypotheses up to the "
    "stated bounds and proves nothing beyond them."
)


@dataclass(frozen=True)
class NfbConfig:
    monoid: FiniteMonoid
    required_words: Tuple[TauWord, ...] = ()
    kind: CongruenceKind = GAMMA
    n_min: int = 2
    n_max: int = 4
    tau_term_maxlen: int = 8
    search_maxlen: Optional[int] = None
    candidates: Tuple[str, ...] = CANDIDATE_FAMILIES
    vector_limit: int = DEFAULT_VECTOR_LIMIT
    jobs: int = 1

    def __post_init__(self):
        if self.n_min < 2 or self.n_max < self.n_min:
            raise ValueError(f"Invalid range n = {self.n_min}..{self.n_max}")


@dataclass
class NfbReport:
    monoid: str
    kind: str
    clauses: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(clause['passed'] for clause in self.clauses)

    def to_dict(self) -> dict:
        return {
            'monoid': self.monoid,
            'kind': self.kind,
            'passed': self.passed,
            'clauses': self.clauses,
            'note': LIMITATION,
        }


def _witness_u_word(config: NfbConfig, n: int) -> Dict:
    M, kind = config.monoid, config.kind
    u = u_word(n)
    clause = {'clause': 'u-word', 'n': n, 'word': u.power_notation(), 'passed': False, 'witness': None}
    for name in config.candidates:
        identity = family(name, n)
        if related(kind, identity.lhs, identity.rhs):
            continue
        if satisfies(M, identity, config.vector_limit):
            clause.update(passed=True, witness=str(identity), source=name)
            return clause

    maxlen = config.search_maxlen if config.search_maxlen is not None else len(u)
    letters = len(set(u.letters))
    if letters ** maxlen > MAX_FALLBACK_WORDS:
        clause['source'] = f"search skipped ({letters}^{maxlen} candidate words)"
        return clause
    verdict = is_tau_term_bounded(M, kind, u, maxlen, config.vector_limit, config.jobs)
    clause['source'] = f"search up to length {maxlen}"
    if not verdict.holds:
        clause.update(passed=True, witness=f"{u.power_notation()} ~ {verdict.counterexample.power_notation()}")
    return clause


def _members(kind: CongruenceKind, word: TauWord) -> List[Word]:
    if kind.tag in (Tag.GAMMA, Tag.LAMBDA, Tag.RHO):
        return sorted(class_representatives(kind, word.representative()), key=Word.shortlex_key)
    return [word.representative()]


def _required_word(config: NfbConfig, word: TauWord) -> Dict:
    verdicts = [
        is_tau_term_bounded(config.monoid, config.kind, member, config.tau_term_maxlen, config.vector_limit, config.jobs)
        for member in _members(config.kind, word)
    ]
    return {
        'clause': 'tau-term',
        'word': word.label,
        'passed': all(v.holds for v in verdicts),
        'bound': config.tau_term_maxlen,
        'members': [v.to_dict() for v in verdicts],
    }


def check_nfb_hypotheses(config: NfbConfig) -> NfbReport:
    """
    Check both hypotheses for n in n_min..n_max and every required tau-word.

    Returns:
        Report with one clause per U_n and one per required word
    """
    report = NfbReport(config.monoid.provenance, str(config.kind))
    for n in range(config.n_min, config.n_max + 1):
        clause = _witness_u_word(config, n)
        logger.info(f"{'[OK]' if clause['passed'] else '[FAIL]'} U_{n}: {clause.get('witness') or clause.get('source')}")
        report.clauses.append(clause)
    for word in config.required_words:
        clause = _required_word(config, word)
        logger.info(f"{'[OK]' if clause['passed'] else '[FAIL]'} {word.label} as a {config.kind}-term")
        report.clauses.append(clause)
    return report
