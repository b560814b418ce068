"""The comparison tree a total edge coloring induces on an initial segment
of the naturals, and monochromatic-set extraction from its branches.

Node ``n`` is inserted by walking from the root: at node ``x`` look up the
color ``i`` of the edge ``{x, n}``; descend into x's ``i``-child if one
exists, otherwise attach ``n`` there.  The construction forces the defining
property of these trees: whenever ``y`` sits anywhere below the ``i``-child
of ``x``, the edge ``{x, y}`` has color ``i``.  Consequently any chain in
the tree is colored, pair by pair, by the edge colors along it, and the
smaller endpoints of same-colored chain edges form a monochromatic set.

Translating nodes to the words of their root-path edge colors turns the
structure into a finite color tree (children are color-unique, so the
translation is a bijection); the priority visit then picks out a branch
whose edges yield the extracted sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .colorings import Coloring
from .stability import branch_approx, branch_census
from .trees import FiniteColorTree
from .visit import Visit, enumerate_visit
from .words import ROOT, Word, full_priority, is_prefix, validate_priority


class ErdosError(ValueError):
    """Base class for comparison-tree errors."""


class NonContiguousInsert(ErdosError):
    def __init__(self, n: int, size: int) -> None:
        super().__init__(f"expected insertion of {size}, got {n}")


class WordNotInIndex(ErdosError):
    def __init__(self, w: Word) -> None:
        self.word = w
        super().__init__(f"word {w} does not name a tree node")


@dataclass
class ErdosTree:
    """Rooted tree on 0..size-1 with at most one child per color per node.

    Grown strictly by :func:`insert`; parents always precede children
    numerically.  Treat instances as immutable once construction finishes.
    """

    k: int
    parent: list[Optional[int]] = field(default_factory=lambda: [None])
    edge_color: list[Optional[int]] = field(default_factory=lambda: [None])
    children: list[dict[int, int]] = field(default_factory=lambda: [{}])

    @property
    def size(self) -> int:
        return len(self.parent)

    def path_to_root(self, n: int) -> list[int]:
        """Nodes from the root down to ``n`` inclusive."""
        path = []
        current: Optional[int] = n
        while current is not None:
            path.append(current)
            current = self.parent[current]
        path.reverse()
        return path


def insert(tree: ErdosTree, n: int, coloring: Coloring) -> ErdosTree:
    """Attach node ``n`` by root-to-leaf descent along edge colors.

    ``n`` must equal the current size (nodes are inserted contiguously) and
    the coloring must be total on pairs from 0..n.  Mutates and returns the
    tree.
    """
    if n != tree.size:
        raise NonContiguousInsert(n, tree.size)
    x = 0
    while True:
        i = coloring(x, n)
        nxt = tree.children[x].get(i)
        if nxt is None:
            tree.children[x][i] = n
            tree.parent.append(x)
            tree.edge_color.append(i)
            tree.children.append({})
            return tree
        x = nxt


def build_erdos(coloring: Coloring, size: int) -> ErdosTree:
    """Insert 1..size-1 in order, starting from the singleton tree {0}."""
    if size < 1:
        raise ErdosError(f"size {size} must be at least 1")
    tree = ErdosTree(k=coloring.k)
    for n in range(1, size):
        insert(tree, n, coloring)
    return tree


def check_erdos_property(tree: ErdosTree, coloring: Coloring) -> bool:
    """Direct check of the defining property: for every node ``y`` and every
    proper ancestor ``x``, the edge ``{x, y}`` has the color of the tree
    edge leaving ``x`` toward ``y``.  Quadratically many coloring queries.
    """
    for y in range(1, tree.size):
        z = y
        while tree.parent[z] is not None:
            p = tree.parent[z]
            if coloring(p, y) != tree.edge_color[z]:
                return False
            z = p
    return True


@dataclass(frozen=True)
class WordIndex:
    """Bijection between tree nodes and their root-path color words."""

    node_word: tuple[Word, ...]
    word_node: dict[Word, int]

    def word_of(self, n: int) -> Word:
        return self.node_word[n]

    def node_of(self, w: Word) -> int:
        try:
            return self.word_node[w]
        except KeyError:
            raise WordNotInIndex(w) from None


def to_word_tree(tree: ErdosTree) -> tuple[FiniteColorTree, WordIndex]:
    """The finite color tree of root-path color words, plus the bijection.

    Children are color-unique, so distinct nodes get distinct words and any
    word-tree subtree translates back to a node-tree subtree.
    """
    node_word: list[Word] = [ROOT] * tree.size
    for n in range(1, tree.size):
        node_word[n] = node_word[tree.parent[n]] + (tree.edge_color[n],)
    word_node = {w: n for n, w in enumerate(node_word)}
    color_tree = FiniteColorTree(k=tree.k, nodes=frozenset(node_word))
    return color_tree, WordIndex(tuple(node_word), word_node)


@dataclass(frozen=True)
class HomogeneousReport:
    """Candidate monochromatic sets read off one branch.

    ``classes[i]`` holds the smaller endpoints of branch edges with color
    ``i``; the classes are pairwise disjoint and their union is the branch
    minus its last node.  ``verified`` records an explicit pairwise check of
    every class against the source coloring.  The report presents all k
    candidates because deciding which one extends unboundedly is exactly
    what a finite run cannot do.
    """

    k: int
    size: int
    branch_nodes: tuple[int, ...]
    classes: tuple[frozenset[int], ...]
    verified: bool
    census: dict[int, int]


def extract_homogeneous(
    tree: ErdosTree,
    branch_words: Sequence[Word],
    index: WordIndex,
    coloring: Coloring,
) -> HomogeneousReport:
    """Split a branch into per-color candidate sets and verify them.

    ``branch_words`` must be a one-letter-at-a-time prefix chain in the word
    tree (as produced by the branch approximation); each consecutive pair
    of branch nodes ``x`` below ``y`` with edge color ``i`` puts ``x`` into
    class ``i``.  Verification re-checks every pair inside every class
    against the coloring and never hides a failure.
    """
    for earlier, later in zip(branch_words, branch_words[1:]):
        if len(later) != len(earlier) + 1 or not is_prefix(earlier, later):
            raise ErdosError(
                f"branch words must grow one letter at a time: {earlier} -> {later}"
            )
    nodes = tuple(index.node_of(w) for w in branch_words)
    classes: list[set[int]] = [set() for _ in range(tree.k)]
    for w, x in zip(branch_words[1:], nodes):
        classes[w[-1]].add(x)
    verified = True
    for i, cls in enumerate(classes):
        members = sorted(cls)
        for a_idx, a in enumerate(members):
            for b in members[a_idx + 1 :]:
                if coloring(a, b) != i:
                    verified = False
    return HomogeneousReport(
        k=tree.k,
        size=tree.size,
        branch_nodes=nodes,
        classes=tuple(frozenset(c) for c in classes),
        verified=verified,
        census=branch_census(tuple(branch_words), tree.k),
    )


def homog_pipeline(
    coloring: Coloring,
    size: int,
    budget: int,
    priority: Optional[Sequence[int]] = None,
) -> tuple[HomogeneousReport, Visit]:
    """Build the comparison tree, visit its word tree, approximate the
    branch, and extract the candidate sets.

    The priority must list all k colors (default ``<0, ..., k-1>``); the
    visit always starts at the empty word.
    """
    if priority is None:
        prio = full_priority(coloring.k)
    else:
        prio = validate_priority(priority, coloring.k)
        if len(prio) != coloring.k:
            raise ErdosError(
                f"pipeline priority must list all {coloring.k} colors, got {prio}"
            )
    tree = build_erdos(coloring, size)
    word_tree, index = to_word_tree(tree)
    visit = enumerate_visit(word_tree, prio, ROOT, budget)
    branch = branch_approx(visit)
    report = extract_homogeneous(tree, branch, index, coloring)
    return report, visit


def horizon_comparison(
    small: HomogeneousReport, large: HomogeneousReport
) -> dict[str, object]:
    """Compare two runs of growing horizon.

    When the smaller run's branch is a prefix of the larger one's, the
    largest class can only grow; when it is not, the runs disagree about
    the branch and the instability is reported instead of hidden.
    """
    prefix = small.branch_nodes == large.branch_nodes[: len(small.branch_nodes)]
    return {
        "branch_prefix": prefix,
        "max_class_small": max(len(c) for c in small.classes),
        "max_class_large": max(len(c) for c in large.classes),
    }
