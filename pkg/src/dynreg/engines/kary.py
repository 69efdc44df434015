"""Fenwick-style tree with branching k ~ log n and packed node codes.

Nodes hold up to k child values packed as a base-|M| integer. Node values and
all inner factor products are precomputed for every code, so one update
rewrites one digit per level via integer arithmetic and one query reads the
root table. The branching factor is the largest k >= 2 with |M|^k * k^2
bounded by ceil(sqrt(n)); tiny n degrade to a binary tree.
"""

from __future__ import annotations

import math

from ..algebra.core import adjoin_identity
from ..errors import PositionOutOfRange
from .base import Engine


class KAryConfig:
    def __init__(self, msize, n):
        cap = math.isqrt(max(n - 1, 0)) + 1  # ceil(sqrt(n))
        k = 2
        while (k + 1) ** 2 * msize ** (k + 1) <= cap:
            k += 1
        self.k = k
        self.msize = msize
        self.table_cells = msize**k * k * k

    def __repr__(self):
        return f"KAryConfig(k={self.k}, cells~{self.table_cells})"


_table_cache = {}


def _tables(monoid, k):
    """value[l][code]: product of the l digits; inf[l][code][i*l+j]: d_i..d_j.

    Cached per (table, k): the flat arrays realize the O(1) per-level lookups
    and are shared by every engine over the same monoid.
    """
    key = (tuple(tuple(r) for r in monoid.table), k)
    hit = _table_cache.get(key)
    if hit is not None:
        return hit
    b, t = monoid.size, monoid.table
    value = [None, list(range(b))]
    inf = [None, [(v,) for v in range(b)]]
    for l in range(2, k + 1):
        cnt = b**l
        val = [0] * cnt
        infl = [None] * cnt
        for c in range(cnt):
            digits = []
            x = c
            for _ in range(l):
                digits.append(x % b)
                x //= b
            out = [0] * (l * l)
            for i in range(l):
                acc = digits[i]
                out[i * l + i] = acc
                for j in range(i + 1, l):
                    acc = t[acc][digits[j]]
                    out[i * l + j] = acc
            val[c] = out[l - 1]
            infl[c] = tuple(out)
        value.append(val)
        inf.append(infl)
    _table_cache[key] = (value, inf)
    return value, inf


class _Scheme:
    __slots__ = ("chunk", "children", "code", "length")

    def __init__(self, chunk, children, code, length):
        self.chunk = chunk        # letters per child (a power of k), 0 at leaves
        self.children = children  # list of _Scheme, or None at leaves
        self.code = code          # packed child values (or letters, at leaves)
        self.length = length      # number of digits in code


class KaryEngine(Engine):
    kind = "kary"

    def __init__(self, monoid, word, config=None):
        monoid = adjoin_identity(monoid)
        super().__init__(monoid, word)
        self.config = config or KAryConfig(monoid.size, max(self.n, 1))
        self.k = self.config.k
        self._b = monoid.size
        self.value, self.inf = _tables(monoid, self.k)
        self.root = self._build(0, self.n) if self.n else None

    def _build(self, lo, size):
        k, b = self.k, self._b
        if size <= k:
            code = 0
            for i in range(size):
                code += self.word[lo + i] * b**i
            return _Scheme(0, None, code, size)
        chunk = k
        while chunk * k < size:
            chunk *= k
        children = []
        code = 0
        pos = lo
        i = 0
        while pos < lo + size:
            csize = min(chunk, lo + size - pos)
            child = self._build(pos, csize)
            children.append(child)
            code += self.value[child.length][child.code] * b**i
            pos += csize
            i += 1
        return _Scheme(chunk, children, code, len(children))

    def update(self, pos, letter):
        self._check(pos, letter)
        self.word[pos] = letter
        b = self._b
        node = self.root
        off = pos
        path = []
        while node.children is not None:
            self._steps += 1
            i = off // node.chunk
            path.append((node, i))
            off -= i * node.chunk
            node = node.children[i]
        self._steps += 1
        d = b**off
        old = (node.code // d) % b
        node.code += (letter - old) * d
        child_val = self.value[node.length][node.code]
        for parent, i in reversed(path):
            self._steps += 1
            d = b**i
            old = (parent.code // d) % b
            if old == child_val:
                break
            parent.code += (child_val - old) * d
            child_val = self.value[parent.length][parent.code]

    def query(self):
        self._steps += 1
        if self.root is None:
            return None
        return self.value[self.root.length][self.root.code]

    def prefix(self, length):
        """Evaluation of the first `length` letters (identity for length 0)."""
        if not (0 <= length <= self.n):
            raise PositionOutOfRange(f"prefix length {length} outside 0..{self.n}")
        self._steps += 1
        if length == 0:
            return self.semigroup.identity
        return self.infix(0, length - 1)

    def infix(self, i, j):
        """Evaluation of letters i..j inclusive (0-based)."""
        if not (0 <= i <= j < self.n):
            raise PositionOutOfRange(f"infix ({i},{j}) invalid for n={self.n}")
        return self._infix(self.root, i, j)

    def _infix(self, node, i, j):
        self._steps += 1
        if node.children is None:
            return self.inf[node.length][node.code][i * node.length + j]
        t = self.semigroup.table
        ci, cj = i // node.chunk, j // node.chunk
        if ci == cj:
            return self._infix(node.children[ci], i - ci * node.chunk, j - ci * node.chunk)
        left = self._suffix(node.children[ci], i - ci * node.chunk)
        right = self._prefix_in(node.children[cj], j - cj * node.chunk)
        if cj - ci >= 2:
            mid = self.inf[node.length][node.code][(ci + 1) * node.length + (cj - 1)]
            return t[t[left][mid]][right]
        return t[left][right]

    def _prefix_in(self, node, j):
        self._steps += 1
        if node.children is None:
            return self.inf[node.length][node.code][j]
        cj = j // node.chunk
        right = self._prefix_in(node.children[cj], j - cj * node.chunk)
        if cj == 0:
            return right
        mid = self.inf[node.length][node.code][cj - 1]
        return self.semigroup.table[mid][right]

    def _suffix(self, node, i):
        self._steps += 1
        if node.children is None:
            l = node.length
            return self.inf[node.length][node.code][i * l + (l - 1)]
        ci = i // node.chunk
        left = self._suffix(node.children[ci], i - ci * node.chunk)
        if ci == node.length - 1:
            return left
        l = node.length
        mid = self.inf[node.length][node.code][(ci + 1) * l + (l - 1)]
        return self.semigroup.table[left][mid]


def make_kary_engine(semigroup, word, config=None):
    """Dynamic word engine with prefix/infix queries; adjoins an identity if
    the input is not a monoid (letters keep their original ids)."""
    return KaryEngine(semigroup, word, config=config)
