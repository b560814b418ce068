from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import pytest

from colorvisit.oracles import complete_tree
from colorvisit.trees import FiniteColorTree, OracleColorTree, validate_tree


@dataclass
class CountingTree:
    """Tree wrapper that counts membership probes."""

    inner: object
    probes: int = 0

    @property
    def k(self) -> int:
        return self.inner.k

    @property
    def nodes(self):
        return self.inner.nodes

    def contains(self, w) -> bool:
        self.probes += 1
        return self.inner.contains(w)


@pytest.fixture
def binary_depth2() -> FiniteColorTree:
    return complete_tree(2, 2)


@pytest.fixture
def binary_depth1() -> FiniteColorTree:
    return validate_tree([(), (0,), (1,)], 2)


@pytest.fixture
def counting_binary_depth2() -> CountingTree:
    return CountingTree(complete_tree(2, 2))
