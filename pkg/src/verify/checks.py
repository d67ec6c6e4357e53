"""
Concrete verification checks, one class per fixture "check" name.
"""
from itertools import combinations
from typing import Any, Dict, List, Tuple

from src.core.congruence import CongruenceKind, class_representatives, related
from src.core.rewrite import canonical, check_confluence
from src.core.words import Alphabet, enumerate_words
from src.identities.evaluation import satisfies
from src.identities.identity import parse_identity
from src.identities.nfb import NfbConfig, check_nfb_hypotheses
from src.identities.search import equationally_equivalent_bounded, gamma_k_oracle_check, is_tau_term_bounded
from src.identities.varieties import variety
from src.monoids.constructions import is_product_closed, monogenic, submonoid
from src.monoids.isomorphism import extend_generator_map, isomorphic
from src.monoids.rees import ZERO_LABEL, build, has_star_idempotents, is_j_trivial
from src.utils.notation import literal_alphabet, parse_tau_word, parse_word_list
from src.verify.base_check import BaseCheck, register_check

Result = Tuple[bool, Dict[str, Any]]


def _kind(text: str) -> CongruenceKind:
    return CongruenceKind.parse(text)


@register_check
class SizeCheck(BaseCheck):
    """Cardinality of a monoid, and optionally its exact label set."""

    name = 'size'

    def execute(self) -> Result:
        M = self.monoid(self.params['spec'])
        details: Dict[str, Any] = {'size': len(M), 'expected_size': self.expected['size']}
        passed = len(M) == self.expected['size']
        if 'labels' in self.expected:
            missing = sorted(set(self.expected['labels']) - set(M.labels))
            unexpected = sorted(set(M.labels) - set(self.expected['labels']))
            details.update(missing=missing, unexpected=unexpected)
            passed = passed and not missing and not unexpected
        return passed, details


@register_check
class PrintedClosureCheck(BaseCheck):
    """
    A printed element list against the computed closure.

    Passes when every printed label is computed and the computed extras are
    exactly the expected ones.
    """

    name = 'printed_closure'

    def execute(self) -> Result:
        kind = _kind(self.params['kind'])
        M = build(kind, parse_word_list(kind, self.params['words']))
        computed = set(M.labels) - {ZERO_LABEL}
        printed = set(self.expected['printed'])
        missing = sorted(printed - computed)
        extra = sorted(computed - printed)
        passed = not missing and extra == sorted(self.expected['extra']) and len(M) == self.expected['size']
        return passed, {
            'size': len(M),
            'printed_count': len(printed),
            'computed_nonzero': len(computed),
            'missing_from_computed': missing,
            'computed_not_printed': extra,
        }


@register_check
class ClosureCheck(BaseCheck):
    name = 'closure'

    def execute(self) -> Result:
        kind = _kind(self.params['kind'])
        M = build(kind, parse_word_list(kind, self.params['words']))
        computed = [label for label in M.labels if label != ZERO_LABEL]
        return set(computed) == set(self.expected), {'closure': computed}


@register_check
class KSetCheck(BaseCheck):
    """The words without cubes in the class of a word."""

    name = 'k_set'

    def execute(self) -> Result:
        kind = _kind(self.params['kind'])
        word = Alphabet.from_text(self.params['word']).parse(self.params['word'])
        found = sorted(w.power_notation() for w in class_representatives(kind, word))
        return found == sorted(self.expected), {'k_set': found}


@register_check
class SubmonoidSizeCheck(BaseCheck):
    name = 'submonoid_size'

    def execute(self) -> Result:
        M = self.monoid(self.params['spec'])
        gens = [M.index(label) for label in self.params['generators']]
        sub, _ = submonoid(M, gens)
        return len(sub) == self.expected, {'size': len(sub), 'labels': list(sub.labels)}


@register_check
class ProductClosedCheck(BaseCheck):
    name = 'product_closed'

    def execute(self) -> Result:
        M = self.monoid(self.params['spec'])
        elements = {M.index(label) for label in self.params['labels']}
        closed = is_product_closed(M, elements)
        passed = closed and len(elements) == self.expected['size']
        return passed, {'closed': closed, 'size': len(elements)}


@register_check
class IsomorphicCheck(BaseCheck):
    """
    Isomorphism between two monoid specs.

    With a "map" parameter the prescribed generator images must extend to an
    isomorphism; otherwise any isomorphism is searched for.
    """

    name = 'isomorphic'

    def execute(self) -> Result:
        M1, M2 = self.monoid(self.params['a']), self.monoid(self.params['b'])
        expected = True if self.expected is None else bool(self.expected)
        if 'map' in self.params:
            images = {M1.index(k): M2.index(v) for k, v in self.params['map'].items()}
            witness = extend_generator_map(M1, M2, images)
        else:
            witness = isomorphic(M1, M2)
        details = {'sizes': [len(M1), len(M2)], 'map': witness.as_labels() if witness else None}
        return (witness is not None) == expected, details


@register_check
class IdentityCheck(BaseCheck):
    name = 'identity'

    def execute(self) -> Result:
        M = self.monoid(self.params['spec'])
        result = satisfies(M, parse_identity(self.params['identity']), self.config.vector_limit)
        return result.holds == bool(self.expected), result.to_dict()


@register_check
class BasisCheck(BaseCheck):
    """The generator of a named variety satisfies each identity of its basis."""

    name = 'basis'

    def execute(self) -> Result:
        v = variety(self.params['variety'])
        M = self.monoid(self.params.get('spec', v.generator))
        identities = v.identities(max_n=self.params.get('max_n', 3))
        failures: List[Dict[str, Any]] = []
        for identity in identities:
            result = satisfies(M, identity, self.config.vector_limit)
            if not result:
                failures.append({'identity': str(identity), **result.to_dict()})
        return not failures, {'checked': len(identities), 'failures': failures}


@register_check
class NfbCheck(BaseCheck):
    name = 'nfb'

    def execute(self) -> Result:
        M = self.monoid(self.params['spec'])
        kind = _kind(self.params.get('kind', 'gamma'))
        literals = self.params.get('required_words', [])
        alphabet = literal_alphabet(*literals)
        config = NfbConfig(
            monoid=M,
            required_words=tuple(parse_tau_word(kind, text, alphabet) for text in literals),
            kind=kind,
            n_min=self.params.get('n_min', 2),
            n_max=self.params.get('n_max', 4),
            tau_term_maxlen=self.params.get('maxlen', self.config.tau_term_maxlen),
            vector_limit=self.config.vector_limit,
            jobs=self.config.jobs,
        )
        report = check_nfb_hypotheses(config)
        return report.passed == bool(self.expected), report.to_dict()


@register_check
class TauTermCheck(BaseCheck):
    name = 'tau_term'

    def execute(self) -> Result:
        M = self.monoid(self.params['spec'])
        kind = _kind(self.params['kind'])
        u = Alphabet.from_text(self.params['word']).parse(self.params['word'])
        verdict = is_tau_term_bounded(M, kind, u, self.params['maxlen'], self.config.vector_limit, self.config.jobs)
        return verdict.status == self.expected, verdict.to_dict()


@register_check
class ConfluenceCheck(BaseCheck):
    """Random rule orders reach the same normal form."""

    name = 'confluence'

    def execute(self) -> Result:
        alphabet = Alphabet.of(*self.params.get('letters', ['a', 'b', 'c']))
        details: Dict[str, Any] = {'samples': self.config.confluence_samples, 'orders': self.config.confluence_orders}
        passed = True
        for text in self.params['kinds']:
            failures = check_confluence(
                _kind(text), alphabet, self.config.confluence_samples, self.config.confluence_orders, self.config.seed
            )
            details[text] = [[str(w), str(a), str(b)] for w, a, b in failures[:5]]
            passed = passed and not failures
        return passed, details


@register_check
class KernelCheck(BaseCheck):
    """Equal canonical forms exactly when the words are related."""

    name = 'kernel'

    def execute(self) -> Result:
        alphabet = Alphabet.of(*self.params.get('letters', ['a', 'b']))
        words = list(enumerate_words(alphabet, range(len(alphabet)), self.params.get('maxlen', 6)))
        details: Dict[str, Any] = {'words': len(words)}
        passed = True
        for text in self.params['kinds']:
            kind = _kind(text)
            canon = [canonical(kind, w) for w in words]
            disagreements = [
                [str(words[i]), str(words[j])]
                for i, j in combinations(range(len(words)), 2)
                if (canon[i] == canon[j]) != related(kind, words[i], words[j])
            ]
            details[text] = disagreements[:5]
            passed = passed and not disagreements
        return passed, details


@register_check
class JTrivialCheck(BaseCheck):
    """J-triviality of every listed monoid, and the idempotent shape of the built ones."""

    name = 'j_trivial'

    def execute(self) -> Result:
        not_j_trivial = [spec for spec in self.params['specs'] if not is_j_trivial(self.monoid(spec))]
        bad_idempotents = [
            spec for spec in self.params.get('star_idempotents', []) if not has_star_idempotents(self.monoid(spec))
        ]
        details = {
            'checked': len(self.params['specs']),
            'not_j_trivial': not_j_trivial,
            'unexpected_idempotents': bad_idempotents,
        }
        return not not_j_trivial and not bad_idempotents, details


@register_check
class GammaKOracleCheck(BaseCheck):
    name = 'gamma_k_oracle'

    def execute(self) -> Result:
        details: Dict[str, Any] = {}
        passed = True
        for k in self.params['ks']:
            result = gamma_k_oracle_check(k, self.params['nvars'], self.params['maxlen'])
            details[f"k={k}"] = {
                'passed': result.passed,
                'checked': result.checked,
                'counterexample': str(result.counterexample) if result.counterexample else None,
            }
            passed = passed and result.passed
        return passed, details


@register_check
class EquationalEquivalenceCheck(BaseCheck):
    name = 'eq_equiv'

    def execute(self) -> Result:
        M1, M2 = self.monoid(self.params['a']), self.monoid(self.params['b'])
        result = equationally_equivalent_bounded(
            M1, M2, self.params['nvars'], self.params['maxlen'], self.config.vector_limit
        )
        return result.equivalent == bool(self.expected), result.to_dict()


@register_check
class MonogenicCheck(BaseCheck):
    """
    One-letter monoids satisfy their threshold and period identities.

    gamma_k(k): x^(k+1) ~ x^(k+2) and xy ~ yx hold, x^k ~ x^(k+1) fails
    (read as 1 ~ x when k = 0).
    tau_m(m): x ~ x^(1+m) and xy ~ yx hold.
    """

    name = 'monogenic'

    def _holds(self, M, text: str) -> bool:
        return satisfies(M, parse_identity(text)).holds

    def execute(self) -> Result:
        details: Dict[str, Any] = {}
        passed = True
        for k in self.params.get('gamma_k', []):
            M = monogenic(CongruenceKind.gamma_k(k))
            facts = {
                f"x^{k + 1} ~ x^{k + 2}": self._holds(M, f"x^{k + 1} ~ x^{k + 2}"),
                'xy ~ yx': self._holds(M, 'xy ~ yx'),
            }
            below_threshold = f"x^{k} ~ x^{k + 1}" if k else "1 ~ x"
            facts[f"not {below_threshold}"] = not self._holds(M, below_threshold)
            details[f"gamma_k({k})"] = facts
            passed = passed and all(facts.values())
        for m in self.params.get('tau_m', []):
            M = monogenic(CongruenceKind.tau_m(m))
            facts = {
                f"x ~ x^{1 + m}": self._holds(M, f"x ~ x^{1 + m}"),
                'xy ~ yx': self._holds(M, 'xy ~ yx'),
            }
            details[f"tau_m({m})"] = facts
            passed = passed and all(facts.values())
        return passed, details
