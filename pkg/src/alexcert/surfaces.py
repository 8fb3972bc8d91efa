"""
Seifert matrices of fiber surfaces, built combinatorially.

For a positive braid word the surface is one disk per strand joined by one twisted
band per letter; its first homology has one generator ("brick") for every pair of
consecutive letters in the same column. For a plane tree the surface is a positive
Hopf band per vertex, plumbed along the edges.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator

from .braid import PositiveBraidWord, missing_generators


@dataclasses.dataclass(frozen=True)
class Brick:
    column: int
    top: int     # 1-based letter position
    bottom: int  # next occurrence of the same generator


@dataclasses.dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]
    components: int
    euler: int

    @property
    def dim(self) -> int:
        return len(self.entries)

    def transpose(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.entries)) if self.entries else ()

    def permuted(self, order: list[int]) -> SeifertMatrix:
        """Simultaneous row/column permutation: new index k is old index order[k]."""
        e = self.entries
        return SeifertMatrix(
            tuple(tuple(e[i][j] for j in order) for i in order), self.components, self.euler
        )


def bricks(w: PositiveBraidWord) -> list[Brick]:
    out = []
    for i in range(1, w.strands):
        pos = [p + 1 for p, x in enumerate(w.letters) if x == i]
        out.extend(Brick(i, a, b) for a, b in zip(pos, pos[1:]))
    return out


def _interleaved(x: Brick, y: Brick) -> bool:
    return x.top < y.top < x.bottom < y.bottom or y.top < x.top < y.bottom < x.bottom


def surface_components(w: PositiveBraidWord) -> int:
    if not w.letters:
        return w.strands
    return 1 + len(missing_generators(w))


def seifert_from_braid(w: PositiveBraidWord) -> SeifertMatrix:
    bs = bricks(w)
    n = len(bs)
    V = [[0] * n for _ in range(n)]
    for a in range(n):
        V[a][a] = -1
    for a, x in enumerate(bs):
        for b, y in enumerate(bs):
            if a == b:
                continue
            if x.column == y.column and x.bottom == y.top:
                V[a][b] = 1
            elif y.column == x.column + 1 and _interleaved(x, y):
                # Only the left-column row carries the entry; its sign records
                # which brick starts first.
                V[a][b] = 1 if x.top < y.top else -1
    return SeifertMatrix(
        tuple(map(tuple, V)), surface_components(w), w.strands - len(w.letters)
    )


def betti_data(w: PositiveBraidWord) -> tuple[int, int]:
    """(b1, components) of the braid fiber surface; b1 equals the brick count."""
    c = surface_components(w)
    return len(w.letters) - w.strands + c, c


@dataclasses.dataclass(frozen=True)
class PlaneTree:
    """Rooted ordered tree; a vertex is the tuple of its child subtrees."""
    children: tuple[PlaneTree, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)

    def __str__(self):
        return "v" + "".join(f"({c})" for c in self.children)

    def preorder(self) -> Iterator[tuple[int, PlaneTree, int | None, int]]:
        """Yield (index, subtree, parent_index, depth) in depth-first order."""
        counter = 0
        stack: list[tuple[PlaneTree, int | None, int]] = [(self, None, 0)]
        while stack:
            node, parent, depth = stack.pop()
            idx = counter
            counter += 1
            yield idx, node, parent, depth
            for c in reversed(node.children):
                stack.append((c, idx, depth + 1))

    def edges(self) -> list[tuple[int, int]]:
        return [(p, i) for i, _, p, _ in self.preorder() if p is not None]


def parse_tree(text: str) -> PlaneTree:
    """
    Parse the nested-parentheses form: ``v(v(v))`` is a path on three vertices,
    ``v(v)(v)(v)`` a star with three leaves.
    """
    s = text.replace(" ", "")
    pos = 0

    def node() -> PlaneTree:
        nonlocal pos
        if pos >= len(s) or s[pos] != "v":
            raise ValueError(f"expected 'v' at position {pos} in {text!r}")
        pos += 1
        kids = []
        while pos < len(s) and s[pos] == "(":
            pos += 1
            kids.append(node())
            if pos >= len(s) or s[pos] != ")":
                raise ValueError(f"expected ')' at position {pos} in {text!r}")
            pos += 1
        return PlaneTree(tuple(kids))

    tree = node()
    if pos != len(s):
        raise ValueError(f"unexpected {s[pos]!r} at position {pos} in {text!r}")
    return tree


def tree_from_edges(m: int, edges: list[tuple[int, int]], root: int = 0) -> PlaneTree:
    """Build the plane tree on vertices 0..m-1 rooted at ``root``; children keep edge order."""
    adj: dict[int, list[int]] = {v: [] for v in range(m)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)

    def build(v: int, parent: int | None) -> PlaneTree:
        return PlaneTree(tuple(build(c, v) for c in adj[v] if c != parent))

    return build(root, None)


def seifert_from_tree(T: PlaneTree) -> SeifertMatrix:
    m = T.size()
    V = [[0] * m for _ in range(m)]
    for a in range(m):
        V[a][a] = -1
    for parent, child in T.edges():
        V[parent][child] = 1
    return SeifertMatrix(tuple(map(tuple, V)), 1, 1 - m)
