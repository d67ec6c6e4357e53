"""
Command-line entry point for the monoid laboratory.

Usage:
    python -m src.main build --tau lambda --words atba+sb+ --out table
    python -m src.main closure --tau gamma --word ab+
    python -m src.main nf --tau gamma --input aabaa
    python -m src.main related --tau gamma xyyx xy
    python -m src.main check-id --monoid pres:B0^1 --id "xtsx ~ xtxsx"
    python -m src.main check-id --monoid lambda:atba+sb+ --family j-scheme --n 3 --perm 2,3,1
    python -m src.main tau-term --monoid t0:ab --tau gamma --word tx^2 --maxlen 6
    python -m src.main iso pres:E^1 "sub:gamma:ta+{a+,ta+}"
    python -m src.main eq-equiv "prod:(gamma:ta+)x(gamma:a+t)" gamma:ta+,a+t --nvars 3 --maxlen 6
    python -m src.main presentation --file presentations/A.pres --adjoin-identity
    python -m src.main verify --section s8 --report reports/verify.json

Data goes to standard output, diagnostics to standard error.
Exit codes: 0 success, 1 negative answer or failed check, 2 usage or parse error.
"""
import argparse
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Callable, Dict, List, Optional

from src.core.config import LabConfig
from src.core.congruence import CongruenceKind, Tag, related
from src.core.errors import LabError
from src.core.report_writer import ReportWriter
from src.core.rewrite import normal_form, parse_ext_word
from src.core.tau_order import closure
from src.core.words import Alphabet
from src.formatters import DotFormatter, JsonFormatter, TableFormatter, monoid_to_dict
from src.identities.evaluation import satisfies
from src.identities.families import FAMILIES, family
from src.identities.identity import parse_identity
from src.identities.search import equationally_equivalent_bounded, is_tau_term_bounded
from src.monoids.constructions import adjoin_identity
from src.monoids.finite_monoid import FiniteMonoid
from src.monoids.isomorphism import anti_isomorphic, isomorphic
from src.monoids.presentation import from_presentation, load_presentation_file
from src.monoids.rees import build
from src.monoids.spec import MonoidResolver
from src.utils.notation import literal_alphabet, parse_word_list, split_words
from src.verify.runner import ALL, SECTIONS, VerifyRunner

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

OUTPUTS = ('json', 'table', 'dot')

logger = logging.getLogger(__name__)


def setup_logging(config: LabConfig) -> logging.Logger:
    """
    Configure the root logger: a rotating log file (when enabled) and stderr.

    Handlers from an earlier call are replaced, so repeated calls do not
    duplicate output.
    """
    root = logging.getLogger()
    root.setLevel(config.log_level)
    for handler in [h for h in root.handlers if getattr(h, 'monoid_lab', False)]:
        root.removeHandler(handler)
        handler.close()

    if config.enable_file_logging:
        config.logs_dir.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            config.log_file,
            maxBytes=config.log_max_bytes,
            backupCount=config.log_backup_count,
        )
        file_handler.setFormatter(logging.Formatter('%(asctime)s [%(levelname)s] %(name)s: %(message)s'))
        file_handler.monoid_lab = True
        root.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter('%(asctime)s [%(levelname)s] %(message)s'))
    console_handler.monoid_lab = True
    root.addHandler(console_handler)
    return root


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def _emit_json(payload) -> None:
    _emit(JsonFormatter().format(payload))


def _emit_monoid(M: FiniteMonoid, out: str) -> None:
    if out == 'table':
        _emit(TableFormatter().format(M))
    elif out == 'dot':
        _emit(DotFormatter().format(M))
    else:
        _emit_json(M)


def _kind(text: str) -> CongruenceKind:
    return CongruenceKind.parse(text)


def _permutation(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ValueError(f"--perm expects comma separated integers, got '{text}'") from None


# Commands


def cmd_build(args, config: LabConfig, resolver: MonoidResolver) -> int:
    kind = _kind(args.tau)
    M = build(kind, parse_word_list(kind, split_words(args.words)))
    if args.save:
        ReportWriter(Path(args.save)).write(monoid_to_dict(M))
    _emit_monoid(M, args.out)
    return EXIT_OK


def cmd_closure(args, config: LabConfig, resolver: MonoidResolver) -> int:
    kind = _kind(args.tau)
    labels = [label or '1' for label in closure(parse_word_list(kind, split_words(args.word))).labels()]
    if args.out == 'json':
        _emit_json(labels)
    else:
        _emit('\n'.join(labels))
    return EXIT_OK


def cmd_nf(args, config: LabConfig, resolver: MonoidResolver) -> int:
    kind = _kind(args.tau)
    word = parse_ext_word(literal_alphabet(args.input), args.input)
    result = word if kind.tag is Tag.TRIVIAL else normal_form(kind, word)
    _emit(str(result) or '1')
    return EXIT_OK


def cmd_related(args, config: LabConfig, resolver: MonoidResolver) -> int:
    kind = _kind(args.tau)
    alphabet = Alphabet.from_text(args.u, args.v)
    answer = related(kind, alphabet.parse(args.u), alphabet.parse(args.v))
    _emit('true' if answer else 'false')
    return EXIT_OK if answer else EXIT_NEGATIVE


def cmd_check_id(args, config: LabConfig, resolver: MonoidResolver) -> int:
    if (args.id is None) == (args.family is None):
        raise ValueError("Give exactly one of --id or --family")
    if args.family is not None:
        if args.n is None:
            raise ValueError("--family needs --n")
        identity = family(args.family, args.n, _permutation(args.perm))
    else:
        identity = parse_identity(args.id)
    M = resolver.resolve(args.monoid)
    result = satisfies(M, identity, config.vector_limit)
    _emit_json({'monoid': M.provenance, 'identity': str(identity), **result.to_dict()})
    return EXIT_OK if result.holds else EXIT_NEGATIVE


def cmd_tau_term(args, config: LabConfig, resolver: MonoidResolver) -> int:
    M = resolver.resolve(args.monoid)
    u = Alphabet.from_text(args.word).parse(args.word)
    maxlen = config.tau_term_maxlen if args.maxlen is None else args.maxlen
    verdict = is_tau_term_bounded(M, _kind(args.tau), u, maxlen, config.vector_limit, config.jobs)
    _emit_json(verdict)
    return EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_iso(args, config: LabConfig, resolver: MonoidResolver) -> int:
    M1, M2 = resolver.resolve(args.m1), resolver.resolve(args.m2)
    witness = (anti_isomorphic if args.anti else isomorphic)(M1, M2)
    _emit_json({
        'source': M1.provenance,
        'target': M2.provenance,
        'anti': args.anti,
        'isomorphic': witness is not None,
        'map': witness.as_labels() if witness is not None else None,
    })
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def cmd_eq_equiv(args, config: LabConfig, resolver: MonoidResolver) -> int:
    M1, M2 = resolver.resolve(args.m1), resolver.resolve(args.m2)
    nvars = config.default_nvars if args.nvars is None else args.nvars
    maxlen = config.default_maxlen if args.maxlen is None else args.maxlen
    result = equationally_equivalent_bounded(M1, M2, nvars, maxlen, config.vector_limit)
    _emit_json(result)
    return EXIT_OK if result.equivalent else EXIT_NEGATIVE


def cmd_presentation(args, config: LabConfig, resolver: MonoidResolver) -> int:
    cap = config.presentation_cap if args.cap is None else args.cap
    S = from_presentation(load_presentation_file(Path(args.file)), cap, config.kb_max_rules, config.kb_max_rule_length)
    M = adjoin_identity(S) if args.adjoin_identity else S
    if args.save:
        ReportWriter(Path(args.save)).write(monoid_to_dict(M))
    _emit_monoid(M, args.out)
    return EXIT_OK


def cmd_verify(args, config: LabConfig, resolver: MonoidResolver) -> int:
    runner = VerifyRunner(config)
    report = runner.run(args.section)
    if args.report:
        ReportWriter(Path(args.report)).write(report)
    _emit_json(report)
    return EXIT_OK if report['passed'] else EXIT_NEGATIVE


COMMANDS: Dict[str, Callable] = {
    'build': cmd_build,
    'closure': cmd_closure,
    'nf': cmd_nf,
    'related': cmd_related,
    'check-id': cmd_check_id,
    'tau-term': cmd_tau_term,
    'iso': cmd_iso,
    'eq-equiv': cmd_eq_equiv,
    'presentation': cmd_presentation,
    'verify': cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='monoid-lab', description='Rees quotient monoids of tau-words')
    parser.add_argument('--jobs', type=int, default=None, help='Worker threads for long searches (overrides JOBS)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('build', help='Build M_tau(W)')
    p.add_argument('--tau', required=True, help='t0, t1, gamma, lambda or rho')
    p.add_argument('--words', required=True, help='Comma separated tau-word literals')
    p.add_argument('--out', choices=OUTPUTS, default='json')
    p.add_argument('--save', help='Also write the JSON dump to this path')

    p = sub.add_parser('closure', help='Downward closure of tau-words')
    p.add_argument('--tau', required=True)
    p.add_argument('--word', required=True, help='Tau-word literal(s), comma separated')
    p.add_argument('--out', choices=('json', 'table'), default='table')

    p = sub.add_parser('nf', help='Normal form of an extended word')
    p.add_argument('--tau', required=True)
    p.add_argument('--input', required=True)

    p = sub.add_parser('related', help='Whether two words are related')
    p.add_argument('--tau', required=True)
    p.add_argument('u')
    p.add_argument('v')

    p = sub.add_parser('check-id', help='Whether a monoid satisfies an identity')
    p.add_argument('--monoid', required=True, help='Monoid spec')
    p.add_argument('--id', help='Identity such as "xtsx ~ xtxsx"')
    p.add_argument('--family', choices=sorted(FAMILIES))
    p.add_argument('--n', type=int)
    p.add_argument('--perm', help='Permutation of 1..n, e.g. 2,3,1')

    p = sub.add_parser('tau-term', help='Bounded search for a word that is not a tau-term')
    p.add_argument('--monoid', required=True)
    p.add_argument('--tau', required=True)
    p.add_argument('--word', required=True)
    p.add_argument('--maxlen', type=int)

    p = sub.add_parser('iso', help='Isomorphism between two monoids')
    p.add_argument('m1')
    p.add_argument('m2')
    p.add_argument('--anti', action='store_true', help='Look for an anti-isomorphism instead')

    p = sub.add_parser('eq-equiv', help='Bounded comparison of the identities of two monoids')
    p.add_argument('m1')
    p.add_argument('m2')
    p.add_argument('--nvars', type=int)
    p.add_argument('--maxlen', type=int)

    p = sub.add_parser('presentation', help='Monoid from a finite presentation file')
    p.add_argument('--file', required=True)
    p.add_argument('--adjoin-identity', action='store_true')
    p.add_argument('--cap', type=int)
    p.add_argument('--out', choices=OUTPUTS, default='json')
    p.add_argument('--save')

    p = sub.add_parser('verify', help='Replay the stored fact suite')
    p.add_argument('--section', choices=(ALL,) + SECTIONS, default=ALL)
    p.add_argument('--seed', type=int)
    p.add_argument('--report', help='Write the JSON report to this path')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        config = LabConfig.from_env()
        if args.jobs is not None:
            config.jobs = args.jobs
        if getattr(args, 'seed', None) is not None:
            config.seed = args.seed
        setup_logging(config)
        config.validate()
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE

    resolver = MonoidResolver.from_config(config)
    try:
        return COMMANDS[args.command](args, config, resolver)
    except (LabError, ValueError, KeyError, FileNotFoundError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        logger.debug(f"{args.command} rejected its input: {message}")
        sys.stderr.write(f"error: {message}\n")
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Fatal error in main(): {e}")
        return EXIT_NEGATIVE


if __name__ == '__main__':
    sys.exit(main())
