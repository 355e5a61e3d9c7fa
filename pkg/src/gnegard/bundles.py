"""Split bundles on P^r and the tangent bundle marker."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class SplitBundle:
    """Direct sum of line bundles O(a_1) + ... + O(a_k)."""

    twists: tuple

    def __init__(self, twists):
        tw = tuple(sorted(int(a) for a in twists))
        if not tw:
            raise ValueError("a split bundle needs rank >= 1")
        object.__setattr__(self, "twists", tw)

    @classmethod
    def parse(cls, text: str) -> SplitBundle:
        """Parse a comma-separated twist list such as ``"0,0,1"``."""
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def c1(self) -> int:
        return sum(self.twists)

    def dual(self) -> SplitBundle:
        return SplitBundle(-a for a in self.twists)

    def twisted(self, k: int) -> SplitBundle:
        return SplitBundle(a + k for a in self.twists)

    def exterior(self, k: int) -> list:
        """Twists of the k-th exterior power."""
        return sorted(sum(c) for c in itertools.combinations(self.twists, k))

    def __str__(self):
        groups = []
        for a, grp in itertools.groupby(self.twists):
            n = len(list(grp))
            base = "O" if a == 0 else "O(%d)" % a
            groups.append(base if n == 1 else (("O^%d" % n) if a == 0 else "O^%d(%d)" % (n, a)))
        return " + ".join(groups)


@dataclass(frozen=True)
class TangentBundle:
    """The tangent bundle of P^r, known through the Euler sequence."""

    r: int

    @property
    def rank(self) -> int:
        return self.r

    @property
    def c1(self) -> int:
        return self.r + 1

    def __str__(self):
        return "T_P^%d" % self.r


def tensor_twists(*twist_lists) -> list:
    return sorted(sum(c) for c in itertools.product(*twist_lists))
