"""Priority-driven visits of color trees.

A visit with priority list ``<d0, d1, ..., d_{h-1}>`` from a root node
enumerates a subtree one node at a time.  The first color ``d0`` has the
lowest priority: the visit first runs a full ``<d1, ..., d_{h-1}>``-visit
from the root, and only once that inner visit is complete (no child with a
color in ``<d1, ..., d_{h-1}>`` of an enumerated node is missing) does it
expand in color ``d0``.  Expansion j picks the j-th ``d0``-child of the
inner segment's nodes, bases taken in lexicographic order, and starts a
sub-visit there with ``d0`` rotated to the top priority.  Each sub-visit
must be finished completely before the next expansion starts.

Two faces of the same discipline live here:

* :func:`check_visit` decides the recursive acceptance predicate directly,
  by searching decompositions.  It is the specification-level reference,
  intended for small inputs.
* :class:`VisitMachine` / :func:`enumerate_visit` generate the enumeration
  efficiently with an explicit decomposition stack.  Their only correctness
  contract is agreement with :func:`check_visit`, which the test suite
  checks exhaustively at desk scale.

Every step of the machine needs only finitely many membership probes, so
oracle-backed (potentially infinite) trees can be visited under a budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .trees import ColorTree, RootNotInTree
from .words import ROOT, Word, rotate, validate_priority


class VisitError(ValueError):
    """Base class for visit-level errors."""


class EntryNotInTree(VisitError):
    def __init__(self, entry: Word) -> None:
        self.entry = entry
        super().__init__(f"entry {entry} is not in the tree")


class InvalidVisit(VisitError):
    """The supplied node list is not a valid visit prefix."""


# --- completeness -------------------------------------------------------------

def is_color_complete(
    tree: ColorTree,
    entries: Sequence[Word],
    color: int,
    *,
    check_entries: bool = True,
) -> bool:
    """True iff every ``color``-child (in the tree) of an entry is an entry.

    The completeness scan itself uses exactly ``len(entries)`` membership
    probes, one per candidate child.  With ``check_entries`` (the default)
    an extra validation pass raises :class:`EntryNotInTree` on entries
    outside the tree; internal callers that construct entries from the tree
    skip it.
    """
    if check_entries:
        for w in entries:
            if not tree.contains(w):
                raise EntryNotInTree(w)
    entry_set = set(entries)
    for w in entries:
        child = w + (color,)
        if tree.contains(child) and child not in entry_set:
            return False
    return True


def is_complete_for(
    tree: ColorTree,
    entries: Sequence[Word],
    priority: Iterable[int],
    *,
    check_entries: bool = True,
) -> bool:
    """Completeness for every color in the priority list (vacuous if empty)."""
    if check_entries:
        for w in entries:
            if not tree.contains(w):
                raise EntryNotInTree(w)
    return all(
        is_color_complete(tree, entries, c, check_entries=False)
        for c in priority
    )


# --- expansions ---------------------------------------------------------------

def nth_expansion(
    tree: ColorTree,
    bases: Sequence[Word],
    n: int,
    color: int,
    *,
    check_entries: bool = True,
) -> Optional[Word]:
    """The n-th (0-indexed) word ``base + (color,)`` present in the tree,
    scanning bases in lexicographic order; ``None`` if fewer than n+1 exist.

    At most ``len(bases)`` membership probes; the scan stops as soon as the
    n-th hit is found.
    """
    if n < 0:
        return None
    if check_entries:
        seen: set[Word] = set()
        for w in bases:
            if w in seen:
                raise VisitError(f"duplicate base {w}")
            seen.add(w)
            if not tree.contains(w):
                raise EntryNotInTree(w)
    hits = 0
    for base in sorted(bases):
        child = base + (color,)
        if tree.contains(child):
            if hits == n:
                return child
            hits += 1
    return None


# --- the declarative checker ----------------------------------------------------

def check_visit(
    tree: ColorTree,
    entries: Sequence[Iterable[int]],
    priority: Sequence[int],
    root: Word,
) -> bool:
    """Decide whether ``entries`` is a priority-visit from ``root``.

    Direct recursion on the priority length and the entry list: the empty
    priority accepts exactly ``[root]``; otherwise some split
    ``M * L_0 * ... * L_{n-1}`` must exist where M is a visit for the tail
    priority (and complete for it when n >= 1), each ``L_j`` starts at the
    j-th lowest-color expansion of M and is a visit for the rotated
    priority, and every ``L_j`` but the last is complete for the full color
    set.  Returns False on any malformed input (duplicates, entries outside
    the tree, bad priority); never raises.  Exponential in the worst case;
    meant for small inputs.
    """
    L = tuple(tuple(int(c) for c in e) for e in entries)
    root = tuple(int(c) for c in root)
    try:
        prio = validate_priority(priority, tree.k)
    except ValueError:
        return False
    if not L or len(set(L)) != len(L):
        # A visit is a nonempty, repetition-free enumeration; duplicated or
        # empty lists can never satisfy the recursive definition.
        return False
    if any(not tree.contains(w) for w in L):
        return False
    if not tree.contains(root):
        return False
    return _Checker(tree, L).accepts(0, len(L), prio, root)


class _Checker:
    """Decomposition search over contiguous sublists, memoized by content."""

    def __init__(self, tree: ColorTree, entries: tuple[Word, ...]) -> None:
        self.tree = tree
        self.entries = entries
        self.memo: dict[tuple[int, int, Word, Word], bool] = {}

    def accepts(self, lo: int, hi: int, prio: Word, root: Word) -> bool:
        if hi <= lo:
            return False
        if self.entries[lo] != root:
            # every visit starts with its root
            return False
        key = (lo, hi, prio, root)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        self.memo[key] = False  # cycle guard; recomputed below
        result = self._compute(lo, hi, prio, root)
        self.memo[key] = result
        return result

    def _compute(self, lo: int, hi: int, prio: Word, root: Word) -> bool:
        if not prio:
            return hi - lo == 1
        d0, rest = prio[0], prio[1:]
        rotated = rest + (d0,)
        for m in range(lo + 1, hi + 1):
            if not self.accepts(lo, m, rest, root):
                continue
            if m == hi:
                return True  # n = 0: no expansion happened yet
            segment = self.entries[lo:m]
            if not is_complete_for(self.tree, segment, rest, check_entries=False):
                continue
            if self._segments(m, hi, segment, d0, rotated, prio):
                return True
        return False

    def _segments(
        self,
        start: int,
        hi: int,
        m_entries: tuple[Word, ...],
        d0: int,
        rotated: Word,
        all_colors: Word,
    ) -> bool:
        """Parse ``entries[start:hi]`` as L_0 * ... * L_{n-1}."""

        def parse(j: int, lo: int) -> bool:
            if lo == hi:
                return True
            head = nth_expansion(
                self.tree, m_entries, j, d0, check_entries=False
            )
            if head is None or self.entries[lo] != head:
                return False
            for end in range(lo + 1, hi + 1):
                if not self.accepts(lo, end, rotated, head):
                    continue
                if end == hi:
                    return True  # last segment needs no completeness
                if not is_complete_for(
                    self.tree, self.entries[lo:end], all_colors,
                    check_entries=False,
                ):
                    continue
                if parse(j + 1, end):
                    return True
            return False

        return parse(0, start)


# --- the efficient generator ----------------------------------------------------

@dataclass(frozen=True)
class Visit:
    """A finished (or budget-truncated) enumeration.

    ``order`` starts at the root, has no repetitions, is prefix-closed above
    the root, stays inside the restricted subtree of the priority's colors,
    and every entry after the first is a child (by one letter, with a
    priority color) of an earlier entry.  ``terminated`` is True iff the
    enumeration ended because the visit got complete, not because the budget
    ran out.  Immutable and safe to share.
    """

    tree: ColorTree
    root: Word
    priority: Word
    order: tuple[Word, ...]
    terminated: bool


@dataclass
class _Frame:
    """One open visit on the decomposition stack.

    While the inner visit for the tail priority is running, the frame sits
    below it and ``m_entries`` is None.  Once the inner visit completes, its
    entry list is frozen into ``m_entries``, all expansions in the lowest
    color are precomputed, and segments are opened one at a time.
    """

    priority: Word
    root: Word
    entries: list[Word] = field(default_factory=list)
    m_entries: Optional[tuple[Word, ...]] = None
    expansions: Optional[list[Word]] = None
    seg_index: int = 0


class VisitMachine:
    """Incremental generator of the unique priority-visit, one node per step.

    The machine mirrors the recursive structure of the visit as a stack of
    open frames; every emitted word is appended to the enclosing frames'
    entry lists through absorption when inner frames close.  Determinism is
    structural: the one-step extension of a visit is unique, and no step
    iterates over an unordered container.
    """

    def __init__(self, tree: ColorTree, priority: Iterable[int], root: Word = ROOT):
        self.tree = tree
        self.priority = validate_priority(priority, tree.k)
        self.root = tuple(root)
        if not tree.contains(self.root):
            raise RootNotInTree(self.root)
        self._stack: list[_Frame] = []
        self._complete = False
        self._push_chain(self.priority, self.root)

    @property
    def complete(self) -> bool:
        return self._complete

    def _push_chain(self, priority: Word, root: Word) -> None:
        # Opening a visit opens its inner visit too, down to the empty
        # priority whose whole enumeration is just the root.
        for i in range(len(priority) + 1):
            self._stack.append(_Frame(priority=priority[i:], root=root))
        self._stack[-1].entries = [root]

    def next_word(self) -> Optional[Word]:
        """Emit the next node of the enumeration, or None once complete."""
        if self._complete:
            return None
        stack = self._stack
        while stack:
            top = stack[-1]
            if top.priority:
                if top.expansions is None:
                    d0 = top.priority[0]
                    top.expansions = [
                        base + (d0,)
                        for base in sorted(top.m_entries)
                        if self.tree.contains(base + (d0,))
                    ]
                if top.seg_index < len(top.expansions):
                    head = top.expansions[top.seg_index]
                    top.seg_index += 1
                    self._push_chain(rotate(top.priority), head)
                    return head
            # top is complete: close it and absorb its entries upward
            closed = stack.pop()
            if not stack:
                self._complete = True
                return None
            parent = stack[-1]
            if parent.m_entries is None:
                parent.m_entries = tuple(closed.entries)
                parent.entries = closed.entries
            else:
                parent.entries.extend(closed.entries)
        self._complete = True
        return None


def enumerate_visit(
    tree: ColorTree,
    priority: Iterable[int],
    root: Word = ROOT,
    budget: int = 1000,
) -> Visit:
    """Run the unique visit until complete or ``budget`` entries are emitted.

    Deterministic: identical inputs give identical outputs.  ``terminated``
    is True only when completion was actually observed within the budget.
    """
    if budget < 1:
        raise VisitError(f"budget {budget} must be at least 1")
    machine = VisitMachine(tree, priority, root)
    order: list[Word] = [machine.root]
    terminated = False
    while len(order) < budget:
        w = machine.next_word()
        if w is None:
            terminated = True
            break
        order.append(w)
    return Visit(
        tree=tree,
        root=machine.root,
        priority=machine.priority,
        order=tuple(order),
        terminated=terminated,
    )


def extend_visit(
    tree: ColorTree,
    entries: Sequence[Iterable[int]],
    priority: Iterable[int],
    root: Word = ROOT,
) -> Optional[Word]:
    """The unique word extending a valid visit prefix, or None if complete.

    Implemented by replaying the deterministic generator against the given
    prefix; any mismatch means the precondition (``entries`` is a valid
    visit from ``root``) fails and raises :class:`InvalidVisit`.
    """
    L = [tuple(int(c) for c in e) for e in entries]
    machine = VisitMachine(tree, priority, tuple(root))
    if not L or L[0] != machine.root:
        raise InvalidVisit(f"visit must start at the root {machine.root}")
    for expected in L[1:]:
        got = machine.next_word()
        if got != expected:
            raise InvalidVisit(
                f"{expected} diverges from the unique visit (expected {got})"
            )
    return machine.next_word()
