from __future__ import annotations

from .canonical import canonical_code, sorted_children, vertex_codes
from .models import MarkedTree, VertexKind


def render(t: MarkedTree, indent: str = "  ") -> str:
    """
    One line per vertex, children indented below their parent:

        O |v|=2
          S |v|=0
          A[1] |v|=0
    """
    codes = vertex_codes(t)
    lines = [f"# {canonical_code(t)}"]

    def visit(v: int, level: int) -> None:
        kind = t.kind(v)
        tag = f"A[{t.arg_label(v)}]" if kind is VertexKind.ARG else kind.value
        lines.append(f"{indent * level}{tag} |v|={t.tree.valence(v)}")
        for child in sorted_children(t, v, codes):
            visit(child, level + 1)

    visit(t.tree.root, 0)
    return "\n".join(lines)
