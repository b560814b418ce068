"""Seeded property suites behind the ``check`` command.

Each suite draws a deterministic corpus from its seed, replays the package
invariants on it, and reports the first failure with a shrunk input dump.
The suites mirror the pytest properties so the same checks can run from an
installed CLI without the test tree.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .colorings import Coloring, builtin_coloring
from .dsl import dsl_coloring
from .erdos import build_erdos, check_erdos_property, homog_pipeline, to_word_tree
from .oracles import (
    ALL_VISITS_NODE_CAP,
    TreeGenParams,
    all_visits,
    ancestor_formula_relation,
    chain_tree,
    complete_tree,
    naive_nth_expansion,
    random_coloring,
    random_tree,
    restricted_nodes,
    star_tree,
)
from .trees import FiniteColorTree, tree_to_dict
from .visit import enumerate_visit, is_complete_for, nth_expansion
from .words import ROOT, Word


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    cases: int
    failure: Optional[str] = None


def tree_corpus(
    seed: int, count: int, k_max: int = 4, max_nodes: int = 40
) -> Iterator[tuple[FiniteColorTree, Word]]:
    """Deterministic stream of (tree, priority) cases mixing random shapes
    with chains, stars and complete trees."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        k = rng.randint(1, k_max)
        shape = rng.randrange(8)
        if shape == 0:
            tree = chain_tree(k, rng.randrange(k), rng.randint(0, max_nodes - 1))
        elif shape == 1:
            tree = star_tree(k)
        elif shape == 2:
            depth = 1
            while _complete_size(k, depth + 1) <= max_nodes:
                depth += 1
            tree = complete_tree(k, depth)
        else:
            tree = random_tree(
                TreeGenParams(
                    k=k,
                    max_depth=rng.randint(1, 7),
                    max_nodes=rng.randint(1, max_nodes),
                    branching=rng.uniform(0.2, 1.0),
                    seed=rng.randrange(2**32),
                )
            )
        colors = list(range(k))
        rng.shuffle(colors)
        priority = tuple(colors[: rng.randint(0, k)])
        produced += 1
        yield tree, priority


def _complete_size(k: int, depth: int) -> int:
    return depth + 1 if k == 1 else (k ** (depth + 1) - 1) // (k - 1)


def _shrink_tree(
    tree: FiniteColorTree, failing: Callable[[FiniteColorTree], bool]
) -> FiniteColorTree:
    """Greedy leaf removal keeping the failure alive."""
    nodes = set(tree.nodes)
    changed = True
    while changed:
        changed = False
        for leaf in sorted(nodes, key=len, reverse=True):
            if leaf == ROOT:
                continue
            if any(w[: len(leaf)] == leaf for w in nodes if w != leaf):
                continue  # not a leaf
            candidate = FiniteColorTree(tree.k, frozenset(nodes - {leaf}))
            if failing(candidate):
                nodes.discard(leaf)
                changed = True
                break
    return FiniteColorTree(tree.k, frozenset(nodes))


def _tree_failure(
    tree: FiniteColorTree,
    priority: Word,
    reason: str,
    failing: Callable[[FiniteColorTree], bool],
) -> str:
    small = _shrink_tree(tree, failing)
    return (
        f"{reason}\npriority={list(priority)}\n"
        f"tree={tree_to_dict(small)}"
    )


def suite_visits(seed: int, cases: int) -> SuiteResult:
    """Enumeration invariants plus checker agreement on small instances."""
    ran = 0
    for tree, priority in tree_corpus(seed, cases):
        ran += 1

        def bad(t: FiniteColorTree, _p: Word = priority) -> bool:
            try:
                v = enumerate_visit(t, _p, ROOT, budget=len(t.nodes) + 1)
            except Exception:
                return False
            entries = set(v.order)
            return (
                len(entries) != len(v.order)
                or any(w != ROOT and w[:-1] not in entries for w in v.order)
                or not v.terminated
                or not is_complete_for(t, v.order, _p)
                or entries != restricted_nodes(t, _p, ROOT)
            )

        if bad(tree):
            return SuiteResult(
                "visits", False, ran,
                _tree_failure(tree, priority, "enumeration invariant failed", bad),
            )
        if len(tree.nodes) <= min(ALL_VISITS_NODE_CAP, 12):
            accepted = all_visits(tree, priority, ROOT)
            run = enumerate_visit(tree, priority, ROOT, budget=len(tree.nodes) + 1)
            chain_ok = all(
                b[: len(a)] == a
                for a, b in itertools.combinations(sorted(accepted, key=len), 2)
            )
            if not chain_ok or max(accepted, key=len) != run.order:
                return SuiteResult(
                    "visits", False, ran,
                    f"checker/generator disagreement\npriority={list(priority)}\n"
                    f"tree={tree_to_dict(tree)}",
                )
    return SuiteResult("visits", True, ran)


def suite_expansions(seed: int, cases: int) -> SuiteResult:
    """Agreement of the scanning and the sort-filter-index expansion routes."""
    rng = random.Random(seed)
    ran = 0
    for tree, _priority in tree_corpus(seed + 1, cases):
        nodes = sorted(tree.nodes)
        for _ in range(10):
            ran += 1
            size = rng.randint(1, min(len(nodes), 12))
            bases = tuple(rng.sample(nodes, size))
            n = rng.randint(0, size + 1)
            c = rng.randrange(tree.k)
            fast = nth_expansion(tree, bases, n, c)
            slow = naive_nth_expansion(tree, bases, n, c)
            if fast != slow:
                return SuiteResult(
                    "expansions", False, ran,
                    f"expansion routes disagree: bases={bases} n={n} c={c} "
                    f"fast={fast} slow={slow}\ntree={tree_to_dict(tree)}",
                )
    return SuiteResult("expansions", True, ran)


def suite_erdos(seed: int, cases: int) -> SuiteResult:
    """Construction property, formula agreement, and word-index bijection."""
    rng = random.Random(seed)
    ran = 0
    for _ in range(cases):
        ran += 1
        k = rng.choice([2, 3, 4])
        size = rng.randint(2, 64)
        coloring = random_coloring(rng.randrange(2**32), k, size)
        tree = build_erdos(coloring, size)
        if not check_erdos_property(tree, coloring):
            return SuiteResult(
                "erdos", False, ran,
                f"construction violates the edge-color property: "
                f"k={k} size={size} coloring={coloring.name}",
            )
        word_tree, index = to_word_tree(tree)
        if any(index.node_of(index.word_of(n)) != n for n in range(tree.size)):
            return SuiteResult(
                "erdos", False, ran, f"word index not a bijection: {coloring.name}"
            )
        small = min(size, 20)
        descent = {
            (x, y)
            for y in range(small)
            for x in _ancestors(tree, y)
        }
        formula = ancestor_formula_relation(coloring, small)
        if descent != formula:
            return SuiteResult(
                "erdos", False, ran,
                f"ancestor formula disagrees with descent: {coloring.name} "
                f"size={small}",
            )
    return SuiteResult("erdos", True, ran)


def _ancestors(tree, y: int) -> Iterator[int]:
    z = tree.parent[y]
    while z is not None:
        yield z
        z = tree.parent[z]


def suite_homog(seed: int, cases: int) -> SuiteResult:
    """End-to-end pipeline verification across coloring sources."""
    rng = random.Random(seed)
    sources: list[Coloring] = [
        builtin_coloring("constant:0", 2),
        builtin_coloring("sum-mod", 2),
        builtin_coloring("sum-mod", 3),
        builtin_coloring("diff-mod", 3),
        builtin_coloring("block:4", 2),
        dsl_coloring("(x + y) % 2", 2),
        dsl_coloring("if x < y then x else y", 3),
        dsl_coloring("(x * y + x) % 4", 4),
    ]
    ran = 0
    for i in range(cases):
        ran += 1
        if i < len(sources):
            coloring = sources[i]
            size = rng.randint(10, 120)
        else:
            k = rng.choice([2, 3, 4])
            size = rng.randint(2, 120)
            coloring = random_coloring(rng.randrange(2**32), k, size)
        report, _visit = homog_pipeline(coloring, size, budget=4 * size + 4)
        if not report.verified:
            return SuiteResult(
                "homog", False, ran,
                f"unverified report: {coloring.name} size={size} "
                f"classes={[sorted(c) for c in report.classes]}",
            )
    return SuiteResult("homog", True, ran)


def suite_restricted(seed: int, cases: int) -> SuiteResult:
    """Restricted-membership coherence on random trees."""
    rng = random.Random(seed)
    ran = 0
    for tree, priority in tree_corpus(seed + 2, cases):
        ran += 1
        nodes = sorted(tree.nodes)
        root = nodes[rng.randrange(len(nodes))]
        inside = restricted_nodes(tree, priority, root)
        for w in inside:
            # prefix-closed above the root
            for i in range(len(root), len(w)):
                if w[:i] not in inside:
                    return SuiteResult(
                        "restricted", False, ran,
                        f"restricted set not prefix-closed above {root}: "
                        f"{w} in, {w[:i]} out\ntree={tree_to_dict(tree)}",
                    )
        full = tuple(range(tree.k))
        if root == ROOT and set(priority) == set(full):
            if inside != tree.nodes:
                return SuiteResult(
                    "restricted", False, ran,
                    f"full-priority restriction differs from membership\n"
                    f"tree={tree_to_dict(tree)}",
                )
    return SuiteResult("restricted", True, ran)


SUITES: dict[str, Callable[[int, int], SuiteResult]] = {
    "visits": suite_visits,
    "expansions": suite_expansions,
    "erdos": suite_erdos,
    "homog": suite_homog,
    "restricted": suite_restricted,
}


def run_suite(name: str, seed: int, cases: int) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](seed, cases)
