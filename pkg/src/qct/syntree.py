"""Level-by-level decomposition of a sentence.

The tree of a sentence is the sequence of levels obtained by repeatedly
unfolding every node one connective deep: an atomic node reproduces
itself, a negation (plain or square root) exposes its body, and a
ternary conjunction exposes its three components.  Unfolding stops at
the first all-atomic level, which lists the sentence's atomic
occurrences in order.  Height counts the levels, root included.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lang import Conj3, Neg, Sentence, SqrtNeg, atoms_of, is_atomic, pretty


@dataclass(frozen=True)
class SyntacticTree:
    """Levels from the root down; levels[0] is the one-node root level."""

    levels: tuple[tuple[Sentence, ...], ...]

    @property
    def height(self) -> int:
        return len(self.levels)

    @property
    def root(self) -> Sentence:
        return self.levels[0][0]


def _unfold(node: Sentence) -> tuple[Sentence, ...]:
    if is_atomic(node):
        return (node,)
    if isinstance(node, (Neg, SqrtNeg)):
        return (node.body,)
    if isinstance(node, Conj3):
        return (node.left, node.right, node.third)
    raise TypeError(f"not a sentence: {node!r}")


def build_tree(s: Sentence) -> SyntacticTree:
    """Unfold s level by level until every node is atomic."""
    levels = [(s,)]
    while not all(is_atomic(node) for node in levels[-1]):
        levels.append(tuple(child for node in levels[-1] for child in _unfold(node)))
    tree = SyntacticTree(tuple(levels))
    assert tree.levels[-1] == atoms_of(s)
    return tree


def height(tree: SyntacticTree) -> int:
    """Number of levels, root included."""
    return tree.height


def render_tree(tree: SyntacticTree) -> str:
    """One line per level, root first, nodes pretty-printed."""
    lines = []
    for i, level in enumerate(tree.levels, start=1):
        nodes = ", ".join(pretty(node) for node in level)
        lines.append(f"Level {i}: ({nodes})")
    return "\n".join(lines)
