"""Elimination trees: construction, validation, swaps, projection, encoding.

An elimination tree of a connected graph G has a root v whose children
subtrees are elimination trees of the connected components of G - v.
Swapping a vertex with its parent is the edge relation of the
G-associahedron.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IllegalMove, InvalidArgument, ParseError
from .graph import Graph, induced_subgraph, iter_bits

__all__ = [
    "SwapMove",
    "ElimTree",
    "is_valid",
    "project",
    "parse_tree",
    "format_tree",
    "parse_ordering",
    "format_ordering",
]


@dataclass(frozen=True)
class SwapMove:
    """The move swap(u, v): u is the parent and v the child before the move."""

    u: str
    v: str

    def reversed(self) -> "SwapMove":
        return SwapMove(self.v, self.u)


class ElimTree:
    """Immutable rooted tree on the vertices of a host graph.

    Stored as a parent array over the host's dense indices (-1 at the
    root); children lists are derived once and kept sorted by index so
    all traversals are deterministic.
    """

    __slots__ = ("graph", "parent", "root", "children", "_key")

    def __init__(self, graph: Graph, parent: Sequence[int]):
        n = graph.n
        if len(parent) != n:
            raise InvalidArgument("parent array does not span the vertex set")
        self.graph = graph
        self.parent: tuple[int, ...] = tuple(parent)
        roots = [i for i, p in enumerate(self.parent) if p < 0]
        if len(roots) != 1:
            raise InvalidArgument(f"expected exactly one root, found {len(roots)}")
        self.root = roots[0]
        kids: list[list[int]] = [[] for _ in range(n)]
        for i, p in enumerate(self.parent):
            if p >= 0:
                kids[p].append(i)
        self.children: tuple[tuple[int, ...], ...] = tuple(tuple(k) for k in kids)
        # Reject parent maps with cycles (they never reach the root).
        seen = 1 << self.root
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in self.children[v]:
                seen |= 1 << c
                stack.append(c)
        if seen != graph.full_mask:
            raise InvalidArgument("parent pointers do not form a spanning tree")
        self._key: bytes | None = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_ordering(cls, g: Graph, sigma: Sequence[str]) -> "ElimTree":
        """The unique elimination tree in which every ancestor precedes its
        descendants in ``sigma`` (the vertex-removal construction)."""
        if len(sigma) != g.n:
            raise InvalidArgument("ordering must be a permutation of V")
        rank = [0] * g.n
        seen = 0
        for pos, lab in enumerate(sigma):
            i = g.index(lab)
            if seen >> i & 1:
                raise InvalidArgument(f"duplicate label in ordering: {lab!r}")
            seen |= 1 << i
            rank[i] = pos
        parent = [-1] * g.n
        if g.n == 0:
            raise InvalidArgument("empty graph has no elimination tree")
        stack: list[tuple[int, int]] = [(g.full_mask, -1)]
        while stack:
            mask, par = stack.pop()
            r = min(iter_bits(mask), key=rank.__getitem__)
            parent[r] = par
            rest = mask & ~(1 << r)
            for comp in g.component_masks(rest):
                stack.append((comp, r))
        return cls(g, parent)

    # -- queries ------------------------------------------------------

    def parent_of(self, label: str) -> str | None:
        p = self.parent[self.graph.index(label)]
        return None if p < 0 else self.graph.labels[p]

    def children_of(self, label: str) -> tuple[str, ...]:
        labs = self.graph.labels
        return tuple(labs[c] for c in self.children[self.graph.index(label)])

    def root_label(self) -> str:
        return self.graph.labels[self.root]

    def subtree_mask(self, i: int) -> int:
        mask = 1 << i
        stack = [i]
        while stack:
            v = stack.pop()
            for c in self.children[v]:
                mask |= 1 << c
                stack.append(c)
        return mask

    def depth(self, i: int) -> int:
        d = 0
        while self.parent[i] >= 0:
            i = self.parent[i]
            d += 1
        return d

    def ancestors(self, label: str) -> frozenset[str]:
        """Strict ancestors of ``label`` (the vertex itself excluded)."""
        i = self.graph.index(label)
        out = []
        while self.parent[i] >= 0:
            i = self.parent[i]
            out.append(self.graph.labels[i])
        return frozenset(out)

    def descendants(self, label: str) -> frozenset[str]:
        """Strict descendants of ``label``."""
        i = self.graph.index(label)
        return self.graph.labels_from_mask(self.subtree_mask(i) & ~(1 << i))

    def comparable(self, a: str, b: str) -> bool:
        ia, ib = self.graph.index(a), self.graph.index(b)
        if ia == ib:
            raise InvalidArgument("comparability is defined for distinct vertices")
        return bool(
            self.subtree_mask(ia) >> ib & 1 or self.subtree_mask(ib) >> ia & 1
        )

    def anc_mask(self, i: int) -> int:
        mask = 0
        while self.parent[i] >= 0:
            i = self.parent[i]
            mask |= 1 << i
        return mask

    # -- moves ----------------------------------------------------------

    def enumerate_swaps(self) -> list[SwapMove]:
        """The n-1 applicable moves (parent(v), v), one per non-root vertex."""
        labs = self.graph.labels
        return [
            SwapMove(labs[p], labs[i])
            for i, p in enumerate(self.parent)
            if p >= 0
        ]

    def apply_swap(self, move: SwapMove) -> "ElimTree":
        """Apply swap(u, v), exchanging child v with its parent u.

        Child subtrees of v stay below v unless they are connected to u
        inside the subtree of u minus v, in which case they move below u.
        """
        g = self.graph
        iu, iv = g.index(move.u), g.index(move.v)
        if self.parent[iv] != iu:
            raise IllegalMove(f"{move.v!r} is not a child of {move.u!r}")
        w_mask = self.subtree_mask(iu)
        comp_u = g.component_of(iu, w_mask & ~(1 << iv))
        parent = list(self.parent)
        parent[iv] = self.parent[iu]
        parent[iu] = iv
        for c in self.children[iv]:
            if comp_u >> c & 1:
                parent[c] = iu
        return ElimTree(g, parent)

    # -- encodings ------------------------------------------------------

    def canonical_key(self) -> bytes:
        """Injective byte encoding: the parent array in fixed vertex order."""
        if self._key is None:
            self._key = array("l", self.parent).tobytes()
        return self._key

    def to_ordering(self) -> tuple[str, ...]:
        """A deterministic linear extension (smallest available index first)."""
        import heapq

        out = []
        ready = [self.root]
        heapq.heapify(ready)
        remaining_children = {i: list(self.children[i]) for i in range(self.graph.n)}
        while ready:
            v = heapq.heappop(ready)
            out.append(self.graph.labels[v])
            for c in remaining_children[v]:
                heapq.heappush(ready, c)
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ElimTree)
            and self.graph is other.graph
            and self.parent == other.parent
        )

    def __hash__(self) -> int:
        return hash((id(self.graph), self.parent))

    def __repr__(self) -> str:
        return f"ElimTree(root={self.root_label()!r}, n={self.graph.n})"


def is_valid(g: Graph, t: ElimTree) -> bool:
    """Check the recursive component decomposition at every vertex."""
    if t.graph.labels != g.labels:
        return False
    for v in range(g.n):
        sub = t.subtree_mask(v)
        comps = g.component_masks(sub & ~(1 << v))
        child_masks = sorted(t.subtree_mask(c) for c in t.children[v])
        if sorted(comps) != child_masks:
            return False
    return True


def project(g: Graph, t: ElimTree, u: Iterable[str]) -> ElimTree:
    """The projection T|_U: the elimination tree of G[U] in which a is an
    ancestor of b iff a is an ancestor of b in T and a, b are connected in
    G[U] minus the T-ancestors of a."""
    u_mask = g.mask(u)
    subg = induced_subgraph(g, (lab for i, lab in enumerate(g.labels) if u_mask >> i & 1))
    if not subg.is_connected():
        raise InvalidArgument("projection target must induce a connected subgraph")
    members = [g.index(lab) for lab in subg.labels]
    anc_pairs: dict[int, list[int]] = {b: [] for b in members}
    for a in members:
        allowed = u_mask & ~t.anc_mask(a)
        comp_a = g.component_of(a, allowed)
        des_a = t.subtree_mask(a)
        for b in members:
            if b != a and des_a >> b & 1 and comp_a >> b & 1:
                anc_pairs[b].append(a)
    parent = []
    for b in members:
        anc = anc_pairs[b]
        if not anc:
            parent.append(-1)
        else:
            deepest = max(anc, key=t.depth)
            parent.append(subg.index(g.labels[deepest]))
    return ElimTree(subg, parent)


# -- text formats -----------------------------------------------------


def parse_tree(g: Graph, text: str) -> ElimTree:
    """Parse the tree format: one ``label parent-label`` line per vertex,
    with ``-`` marking the root."""
    parent = [None] * g.n
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"bad tree line {line!r}")
        child, par = parts
        try:
            ci = g.index(child)
            parent[ci] = -1 if par == "-" else g.index(par)
        except InvalidArgument as exc:
            raise ParseError(str(exc)) from None
    if any(p is None for p in parent):
        missing = [g.labels[i] for i, p in enumerate(parent) if p is None]
        raise ParseError(f"missing tree lines for: {missing}")
    try:
        return ElimTree(g, parent)  # type: ignore[arg-type]
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from None


def format_tree(t: ElimTree) -> str:
    g = t.graph
    lines = []
    for i, lab in enumerate(g.labels):
        p = t.parent[i]
        lines.append(f"{lab} {'-' if p < 0 else g.labels[p]}")
    return "\n".join(lines) + "\n"


def parse_ordering(g: Graph, text: str) -> tuple[str, ...]:
    labels = text.split()
    for lab in labels:
        g.index(lab)
    return tuple(labels)


def format_ordering(sigma: Sequence[str]) -> str:
    return " ".join(sigma) + "\n"
