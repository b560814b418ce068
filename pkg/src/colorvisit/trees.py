"""Prefix-closed color trees.

Two representations share one interface (``k``, ``contains``, ``nodes``):

* :class:`FiniteColorTree` -- an explicit, validated node set; ``contains``
  is a set lookup and ``nodes`` is the full frozenset.
* :class:`OracleColorTree` -- a membership predicate over an unbounded word
  space; ``nodes`` is ``None``.  The predicate must be pure and the word set
  it accepts must contain the root and be closed under prefix; neither
  property is checkable here, so they are the caller's contract.

All trees are immutable after construction and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .words import ROOT, Word, word


class TreeError(ValueError):
    """Base class for malformed trees and bad tree queries."""


class MissingRoot(TreeError):
    def __init__(self) -> None:
        super().__init__("tree does not contain the empty word")


class NotPrefixClosed(TreeError):
    """A node's immediate prefix is absent; ``witness`` is the missing prefix."""

    def __init__(self, witness: Word, extension: Word) -> None:
        self.witness = witness
        self.extension = extension
        super().__init__(
            f"node {extension} present but its prefix {witness} is missing"
        )


class ColorOutOfRange(TreeError):
    def __init__(self, letter: int, offending: Word, k: int) -> None:
        self.letter = letter
        self.offending = offending
        super().__init__(f"letter {letter} in node {offending} not below k={k}")


class NodeNotInTree(TreeError):
    def __init__(self, node: Word) -> None:
        self.node = node
        super().__init__(f"node {node} is not in the tree")


class RootNotInTree(TreeError):
    def __init__(self, root: Word) -> None:
        self.root = root
        super().__init__(f"root {root} is not in the tree")


@dataclass(frozen=True)
class FiniteColorTree:
    """Explicit finite tree: a validated, prefix-closed set of words."""

    k: int
    nodes: frozenset[Word]

    def contains(self, w: Word) -> bool:
        return w in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class OracleColorTree:
    """Possibly infinite tree given by a pure membership predicate."""

    k: int
    membership: Callable[[Word], bool]
    nodes: None = None

    def contains(self, w: Word) -> bool:
        return bool(self.membership(w))


ColorTree = Union[FiniteColorTree, OracleColorTree]


def validate_tree(nodes: Iterable[Iterable[int]], k: int) -> FiniteColorTree:
    """Build a finite tree from an explicit node set.

    Raises :class:`MissingRoot`, :class:`ColorOutOfRange` or
    :class:`NotPrefixClosed` (reporting the missing prefix as witness);
    checks run in a deterministic order over the lexicographically sorted
    node set.
    """
    if k < 1:
        raise TreeError(f"color count k={k} must be at least 1")
    node_set = frozenset(word(n) for n in nodes)
    if ROOT not in node_set:
        raise MissingRoot()
    for w in sorted(node_set):
        for letter in w:
            if not 0 <= letter < k:
                raise ColorOutOfRange(letter, w, k)
    for w in sorted(node_set):
        if w and w[:-1] not in node_set:
            raise NotPrefixClosed(w[:-1], w)
    return FiniteColorTree(k=k, nodes=node_set)


def children(tree: ColorTree, node: Word) -> list[tuple[int, Word]]:
    """All present children of ``node`` in increasing color order.

    One membership probe validates the node, then exactly ``k`` probes test
    the candidate children.
    """
    if not tree.contains(node):
        raise NodeNotInTree(node)
    out: list[tuple[int, Word]] = []
    for c in range(tree.k):
        child = node + (c,)
        if tree.contains(child):
            out.append((c, child))
    return out


def in_restricted(
    tree: ColorTree, priority: Iterable[int], root: Word, node: Word
) -> bool:
    """Membership in the subtree above ``root`` whose extra letters all come
    from the priority list's color set."""
    if not tree.contains(root):
        raise RootNotInTree(root)
    if len(node) < len(root) or node[: len(root)] != root:
        return False
    allowed = set(priority)
    if any(letter not in allowed for letter in node[len(root) :]):
        return False
    return tree.contains(node)


@dataclass(frozen=True)
class RestrictedTree:
    """The subtree of ``base`` above ``root`` whose extra letters all come
    from the priority list's color set, as a membership view.

    Words stay absolute (spelled from the base tree's root), so the view can
    be visited directly with ``root`` as the visit root.
    """

    base: "ColorTree"
    root: Word
    priority: Word
    nodes: None = None

    @property
    def k(self) -> int:
        return self.base.k

    def contains(self, w: Word) -> bool:
        return in_restricted(self.base, self.priority, self.root, w)


# --- built-in oracle families -------------------------------------------------

def unary_tree() -> OracleColorTree:
    """The infinite single-color chain: every word over {0}."""
    return OracleColorTree(k=1, membership=lambda w: all(c == 0 for c in w))


def full_tree(k: int) -> OracleColorTree:
    """The complete infinite k-ary tree: every word over 0..k-1."""
    if k < 1:
        raise TreeError(f"color count k={k} must be at least 1")
    return OracleColorTree(k=k, membership=lambda w: all(0 <= c < k for c in w))


_BUILTIN_TREES = {"unary": unary_tree}


def builtin_tree(name: str) -> OracleColorTree:
    """Resolve a builtin tree name: ``unary`` or ``full:<k>``."""
    if name in _BUILTIN_TREES:
        return _BUILTIN_TREES[name]()
    if name.startswith("full:"):
        try:
            return full_tree(int(name.split(":", 1)[1]))
        except ValueError:
            raise TreeError(f"bad color count in builtin tree {name!r}") from None
    raise TreeError(f"unknown builtin tree {name!r}")


# --- JSON file format ---------------------------------------------------------

def tree_to_dict(tree: FiniteColorTree) -> dict:
    """Serializable form: ``{"k": int, "nodes": [[int...], ...]}``."""
    return {"k": tree.k, "nodes": [list(w) for w in sorted(tree.nodes)]}


def tree_from_dict(data: dict) -> FiniteColorTree:
    if not isinstance(data, dict) or "k" not in data or "nodes" not in data:
        raise TreeError("tree file must be an object with 'k' and 'nodes'")
    return validate_tree(data["nodes"], int(data["k"]))


def load_tree(path: str) -> FiniteColorTree:
    with open(path, "r", encoding="utf-8") as fh:
        return tree_from_dict(json.load(fh))


def save_tree(tree: FiniteColorTree, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tree_to_dict(tree), fh, sort_keys=True)
        fh.write("\n")
