"""Stability index and stable semigroup of a recognized language."""

from __future__ import annotations

from ..errors import InternalError
from ..algebra.core import restriction


class StableData:
    def __init__(self, index, stable, inclusion, morphism):
        self.index = index              # stability index s
        self.stable = stable            # FiniteSemigroup on eta(Sigma^s)
        self.inclusion = inclusion      # stable id -> monoid id
        self.to_stable = {m: i for i, m in enumerate(inclusion)}
        self._morphism = morphism
        self._block_cache = {}

    def block_image(self, block):
        """Stable id of a length-s block of alphabet symbols (memoized)."""
        block = tuple(block)
        hit = self._block_cache.get(block)
        if hit is None:
            if len(block) != self.index:
                raise InternalError(f"block length {len(block)} != stability index")
            hit = self.to_stable[self._morphism.image(block)]
            self._block_cache[block] = hit
        return hit


def stable_data(m):
    """Iterate X -> X * eta(Sigma) in the powerset monoid until X^s is idempotent."""
    letters = frozenset(m.eta[a] for a in m.alphabet)
    t = m.target.table
    current = letters
    s = 1
    limit = 2 ** m.target.size + 1
    while True:
        square = frozenset(t[x][y] for x in current for y in current)
        if square == current:
            break
        s += 1
        if s > limit:
            raise InternalError("powerset iteration exceeded 2^|M| steps")
        current = frozenset(t[x][y] for x in current for y in letters)
    stable, inclusion = restriction(m.target, sorted(current))
    return StableData(s, stable, inclusion, m)
