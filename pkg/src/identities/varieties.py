"""
Displayed identity bases of the small monoid varieties and their generators.

Generators are given as monoid specs (see src.monoids.spec) so that they can
be built on demand.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.core.errors import UnknownFamilyError
from src.identities.families import j_scheme_members
from src.identities.identity import Identity, parse_identity


@dataclass(frozen=True)
class Variety:
    name: str
    generator: str
    basis: Tuple[str, ...]
    with_j_scheme: bool = False

    def identities(self, max_n: int = 3) -> List[Identity]:
        """The basis as identities; a chain u ~ v ~ w gives u ~ v and u ~ w."""
        found: List[Identity] = []
        for text in self.basis:
            sides = [side.strip() for side in text.replace('≈', '~').split('~')]
            for other in sides[1:]:
                found.append(parse_identity(f"{sides[0]} ~ {other}"))
        if self.with_j_scheme:
            for n in range(1, max_n + 1):
                found.extend(j_scheme_members(n))
        return found


_COMMON = ('xtx ~ xtx^2', 'x^2y^2 ~ y^2x^2', 'xytxy ~ yxtxy', 'xt1xt2t3x ~ xt1xt2xt3x')

VARIETIES: Dict[str, Variety] = {
    v.name: v for v in (
        Variety('E', 'pres:E^1', ('x^2 ~ x^3', 'xyx ~ x^2y', 'x^2y^2 ~ y^2x^2')),
        Variety('F', 'lambda:ata+', ('x^2y^2 ~ y^2x^2', 'xytxy ~ yxtxy', 'xtxs ~ xtxsx')),
        Variety('H', 'lambda:abta+sb+', _COMMON + ('x^2yty ~ xyxty ~ yx^2ty',)),
        Variety('I', 'lambda:ba+sb+', _COMMON + ('xtxysy ~ xtyxsy',)),
        Variety('J', 'lambda:atba+sb+', _COMMON, with_j_scheme=True),
        Variety(
            'B', 'dual:pres:F^1',
            ('xtysxy ~ xtysyx', 'xtxysy ~ xtyxsy', 'xytxsy ~ yxtxsy', 'txsx ~ xtxsx'),
        ),
    )
}

# Generators of the lattice varieties. The word monoids M(W) are listed as
# themselves; var(N) is an M_gamma or M_lambda monoid generating the same
# variety as N, so it is usually larger than N.
GENERATOR_ZOO: Dict[str, str] = {
    'M(empty)': 't0:',
    'M(1)': 't0:1',
    'M(a)': 't0:a',
    'M(ab)': 't0:ab',
    'var(E^1)': 'gamma:ta+',
    'var(dual E^1)': 'gamma:a+t',
    'var(A0^1)': 'gamma:a+b+',
    'var(B0^1)': 'gamma:ta+,b+t',
    'var(Q^1)': 'gamma:a+tsa+',
    'var(A^1)': 'gamma:a+b+ta+',
    'var(dual A^1)': 'gamma:a+tb+a+',
    'var(F)': 'lambda:ata+',
    'var(H)': 'lambda:abta+sb+',
    'var(I)': 'lambda:ba+sb+',
    'var(J)': 'lambda:atba+sb+',
}


def variety(name: str) -> Variety:
    try:
        return VARIETIES[name]
    except KeyError:
        raise UnknownFamilyError(f"Unknown variety '{name}'; known: {sorted(VARIETIES)}") from None
