"""Engine contract and the linear-scan oracle.

Every engine maintains a fixed-length word of semigroup element ids under
letter substitutions (0-based positions) and answers evaluation queries.
query() returns None exactly when the word is empty. op_count is a monotone
counter of elementary steps and structure probes, used by the complexity
assertions; it never feeds back into the answers.
"""

from __future__ import annotations

from ..errors import PositionOutOfRange, RangeError


class Engine:
    kind = "abstract"

    def __init__(self, semigroup, word):
        self.semigroup = semigroup
        self.word = list(word)
        self.n = len(self.word)
        self._steps = 0
        for a in self.word:
            if not (0 <= a < semigroup.size):
                raise RangeError(f"letter {a} out of range")

    def _check(self, pos, letter):
        if not (0 <= pos < self.n):
            raise PositionOutOfRange(f"position {pos} outside 0..{self.n - 1}")
        if not (0 <= letter < self.semigroup.size):
            raise RangeError(f"letter {letter} out of range")

    def update(self, pos, letter):
        raise NotImplementedError

    def query(self):
        raise NotImplementedError

    @property
    def op_count(self):
        return self._steps

    def snapshot(self):
        return tuple(self.word)


class NaiveEngine(Engine):
    """Re-reads the whole word at each query; the differential-test oracle."""

    kind = "naive"

    def update(self, pos, letter):
        self._check(pos, letter)
        self.word[pos] = letter
        self._steps += 1

    def query(self):
        self._steps += self.n
        return self.semigroup.eval_word(self.word)

    def prefix(self, length):
        if not (0 <= length <= self.n):
            raise PositionOutOfRange(f"prefix length {length} outside 0..{self.n}")
        self._steps += length
        if length == 0:
            return self.semigroup.identity
        return self.semigroup.eval_word(self.word[:length])

    def infix(self, i, j):
        if not (0 <= i <= j < self.n):
            raise PositionOutOfRange(f"infix ({i},{j}) invalid for n={self.n}")
        self._steps += j - i + 1
        return self.semigroup.eval_word(self.word[i : j + 1])


def make_naive_engine(semigroup, word):
    return NaiveEngine(semigroup, word)
