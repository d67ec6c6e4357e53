"""
Graphviz DOT for the J-order Hasse diagram (zero at the bottom, identity at the top).
"""
from src.monoids.finite_monoid import FiniteMonoid
from src.monoids.rees import is_j_trivial, j_order_covers


def _quote(label: str) -> str:
    return '"' + label.replace('\\', '\\\\').replace('"', '\\"') + '"'


class DotFormatter:

    def format(self, M: FiniteMonoid) -> str:
        """
        Raises:
            ValueError: If M is not J-trivial (the J-order is then not a partial order)
        """
        if not is_j_trivial(M):
            raise ValueError(f"{M.provenance} is not J-trivial; no Hasse diagram")
        lines = ['digraph J {', '  rankdir=BT;', '  node [shape=plaintext];']
        for label in M.labels:
            lines.append(f"  {_quote(label)};")
        for lower, upper in j_order_covers(M):
            lines.append(f"  {_quote(M.labels[lower])} -> {_quote(M.labels[upper])};")
        lines.append('}')
        return '\n'.join(lines) + '\n'
