"""DOT export of the order diagram and the open-set lattice.

Hasse mode draws the specialization order of the Kolmogorov quotient
(transitive reduction, classes labeled by their members); lattice mode
draws the cover graph of the open family under inclusion.  Node statements
come in canonical set order and edges sorted, so output is byte-stable.
"""

from __future__ import annotations

from .order import kolmogorov_quotient, specialization_preorder
from .spaces import FinSpace


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _set_name(members: tuple[str, ...]) -> str:
    return "{" + ",".join(members) + "}"


def export_dot(space: FinSpace, mode: str = "hasse") -> str:
    if mode == "hasse":
        return _hasse(space)
    if mode == "lattice":
        return _lattice(space)
    raise ValueError(f"unknown dot mode {mode!r}")


def _hasse(space: FinSpace) -> str:
    quotient = kolmogorov_quotient(space).space
    names = [
        _set_name(tuple(lab.split("|"))) for lab in quotient.labels
    ]
    order = specialization_preorder(quotient)
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for name in names:
        lines.append(f"  {_quote(name)};")
    for lower, upper in order.covers():
        lines.append(f"  {_quote(names[lower])} -> {_quote(names[upper])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _lattice(space: FinSpace) -> str:
    family = list(space.open_family)
    names = {o: _set_name(space.members(o)) for o in family}
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for o in family:
        lines.append(f"  {_quote(names[o])};")
    for a in family:
        for b in family:
            if a == b or (a & ~b):
                continue
            # b strictly contains a; keep only covering pairs
            between = any(
                w != a and w != b and not (a & ~w) and not (w & ~b) for w in family
            )
            if not between:
                lines.append(f"  {_quote(names[a])} -> {_quote(names[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
