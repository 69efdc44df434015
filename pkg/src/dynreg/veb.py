"""Labeled van Emde Boas predecessor structure with linear-time build.

Layout: keys live in 1..span. An outer array T of size span+1 holds the
labels directly, keys are grouped into buckets of width ceil(log2 log2 span),
and a classic recursive vEB over the bucket indices answers prev/next across
buckets. Bucket indices come from a precomputed division table (shared per
span), so every step is a table lookup. This brings both memory and
initialization down to O(span) while keeping all operations O(log log span).

The recursive tree bottoms out at universes of at most 64 in a single machine
word (Python int) scanned with bit tricks.

probes counts memory-cell-level accesses; writes counts cells written during
construction. Both exist so tests can assert the complexity claims.
"""

from __future__ import annotations

import math

from .errors import DuplicateKey, KeyOrderError, KeyRangeError, MissingKey

_MISSING = object()

_division_tables = {}


def _bucket_table(span, width):
    """K(x) = ceil(x / width) for x in 0..span, filled sequentially."""
    key = (span, width)
    tab = _division_tables.get(key)
    if tab is None:
        tab = [0] * (span + 1)
        k = 0
        for x in range(1, span + 1):
            if (x - 1) % width == 0:
                k += 1
            tab[x] = k
        _division_tables[key] = tab
    return tab


class _Bits:
    """Bitmask leaf for universes of size <= 64."""

    __slots__ = ("mask",)

    def __init__(self):
        self.mask = 0

    def insert(self, x, owner):
        owner.probes += 1
        self.mask |= 1 << x

    def delete(self, x, owner):
        owner.probes += 1
        self.mask &= ~(1 << x)

    def member(self, x, owner):
        owner.probes += 1
        return (self.mask >> x) & 1 == 1

    def min(self, owner):
        owner.probes += 1
        m = self.mask
        if m == 0:
            return None
        return (m & -m).bit_length() - 1

    def max(self, owner):
        owner.probes += 1
        if self.mask == 0:
            return None
        return self.mask.bit_length() - 1

    def pred_lt(self, x, owner):
        owner.probes += 1
        m = self.mask & ((1 << x) - 1)
        if m == 0:
            return None
        return m.bit_length() - 1

    def succ_gt(self, x, owner):
        owner.probes += 1
        m = self.mask >> (x + 1)
        if m == 0:
            return None
        return (m & -m).bit_length() - 1 + x + 1


class _Node:
    """Classic vEB node over universe 2**bits (bits > 6)."""

    __slots__ = ("bits", "lo_bits", "lo_mask", "min", "max", "summary", "clusters")

    def __init__(self, bits):
        self.bits = bits
        self.lo_bits = bits // 2
        self.lo_mask = (1 << self.lo_bits) - 1
        self.min = None
        self.max = None
        hi_bits = bits - self.lo_bits
        self.summary = _make(hi_bits)
        self.clusters = [_make(self.lo_bits) for _ in range(1 << hi_bits)]

    def insert(self, x, owner):
        owner.probes += 1
        if self.min is None:
            self.min = self.max = x
            return
        if x < self.min:
            x, self.min = self.min, x
        if x > self.max:
            self.max = x
        h, l = x >> self.lo_bits, x & self.lo_mask
        cluster = self.clusters[h]
        if _min(cluster, owner) is None:
            self.summary.insert(h, owner)
        cluster.insert(l, owner)

    def delete(self, x, owner):
        owner.probes += 1
        if self.min == self.max:
            self.min = self.max = None
            return
        if x == self.min:
            h = _min(self.summary, owner)
            l = _min(self.clusters[h], owner)
            x = (h << self.lo_bits) | l
            self.min = x
        h, l = x >> self.lo_bits, x & self.lo_mask
        cluster = self.clusters[h]
        cluster.delete(l, owner)
        if _min(cluster, owner) is None:
            self.summary.delete(h, owner)
        if x == self.max:
            hs = _max(self.summary, owner)
            if hs is None:
                self.max = self.min
            else:
                self.max = (hs << self.lo_bits) | _max(self.clusters[hs], owner)

    def member(self, x, owner):
        owner.probes += 1
        if x == self.min or x == self.max:
            return True
        if self.min is None or x < self.min or x > self.max:
            return False
        h, l = x >> self.lo_bits, x & self.lo_mask
        return self.clusters[h].member(l, owner)

    def min_(self):
        return self.min

    def max_(self):
        return self.max

    def pred_lt(self, x, owner):
        owner.probes += 1
        if self.min is None or x <= self.min:
            return None
        if x > self.max:
            return self.max
        h, l = x >> self.lo_bits, x & self.lo_mask
        cluster = self.clusters[h]
        lo_min = _min(cluster, owner)
        if lo_min is not None and l > lo_min:
            return (h << self.lo_bits) | cluster.pred_lt(l, owner)
        hp = self.summary.pred_lt(h, owner)
        if hp is None:
            return self.min
        return (hp << self.lo_bits) | _max(self.clusters[hp], owner)

    def succ_gt(self, x, owner):
        owner.probes += 1
        if self.max is None or x >= self.max:
            return None
        if x < self.min:
            return self.min
        h, l = x >> self.lo_bits, x & self.lo_mask
        cluster = self.clusters[h]
        lo_max = _max(cluster, owner)
        if lo_max is not None and l < lo_max:
            return (h << self.lo_bits) | cluster.succ_gt(l, owner)
        hs = self.summary.succ_gt(h, owner)
        if hs is None:
            # x < max but no later cluster: max sits in x's cluster? no --
            # max is tracked here, so answer is the stored max
            return self.max
        return (hs << self.lo_bits) | _min(self.clusters[hs], owner)


def _make(bits):
    return _Bits() if bits <= 6 else _Node(bits)


def _min(node, owner):
    return node.min(owner) if isinstance(node, _Bits) else node.min


def _max(node, owner):
    return node.max(owner) if isinstance(node, _Bits) else node.max


class _InnerVeb:
    """Unlabeled integer set over 0..universe-1 with min/max at the node."""

    def __init__(self, universe, owner):
        bits = max(1, (max(universe - 1, 1)).bit_length())
        self.root = _make(bits)
        self.owner = owner
        self.size = 0

    def insert(self, x):
        self.root.insert(x, self.owner)
        self.size += 1

    def delete(self, x):
        self.root.delete(x, self.owner)
        self.size -= 1

    def pred_le(self, x):
        return self.root.pred_lt(x + 1, self.owner)

    def succ_ge(self, x):
        # x - 1 may be -1; both node kinds answer succ_gt(-1) correctly
        # since a non-empty node returns its min before any bit arithmetic
        return self.root.succ_gt(x - 1, self.owner)


class VebMap:
    """Span-n predecessor structure mapping keys in 1..span to labels."""

    def __init__(self, span):
        if span < 1:
            raise KeyRangeError("span must be >= 1")
        self.span = span
        self.probes = 0
        self.writes = 0
        lg = math.log2(max(span, 4))
        self.width = max(1, math.ceil(math.log2(lg)))  # ceil(log2 log2), >= 1
        self.ktab = _bucket_table(span, self.width)
        self.n_buckets = self.ktab[span]
        self.labels = [_MISSING] * (span + 1)
        self.bucket_count = [0] * (self.n_buckets + 1)
        self.inner = _InnerVeb(self.n_buckets + 1, self)
        self.size = 0
        self.writes += span + self.n_buckets + 1     # label + bucket arrays

    # -- core operations ---------------------------------------------------

    def _check_key(self, key):
        if not (1 <= key <= self.span):
            raise KeyRangeError(f"key {key} outside 1..{self.span}")

    def insert(self, key, label):
        self._check_key(key)
        self.probes += 1
        if self.labels[key] is not _MISSING:
            raise DuplicateKey(f"key {key} already present")
        self.labels[key] = label
        self.writes += 1
        b = self.ktab[key]
        self.probes += 1
        if self.bucket_count[b] == 0:
            self.inner.insert(b)
        self.bucket_count[b] += 1
        self.size += 1

    def delete(self, key):
        self._check_key(key)
        self.probes += 1
        if self.labels[key] is _MISSING:
            raise MissingKey(f"key {key} not present")
        self.labels[key] = _MISSING
        self.writes += 1
        b = self.ktab[key]
        self.probes += 1
        self.bucket_count[b] -= 1
        if self.bucket_count[b] == 0:
            self.inner.delete(b)
        self.size -= 1

    def retrieve(self, key):
        self._check_key(key)
        self.probes += 1
        v = self.labels[key]
        return None if v is _MISSING else v

    def update(self, key, label):
        """Relabel an existing key in O(1)."""
        self._check_key(key)
        self.probes += 1
        if self.labels[key] is _MISSING:
            raise MissingKey(f"key {key} not present")
        self.labels[key] = label
        self.writes += 1

    def find_prev(self, key):
        """Largest present key <= key, or None."""
        if key < 1:
            return None
        key = min(key, self.span)
        b = self.ktab[key]
        lo = (b - 1) * self.width + 1
        for x in range(key, lo - 1, -1):
            self.probes += 1
            if self.labels[x] is not _MISSING:
                return x
        p = self.inner.pred_le(b - 1)
        if p is None or p == 0:
            return None
        hi = min(p * self.width, self.span)
        for x in range(hi, (p - 1) * self.width, -1):
            self.probes += 1
            if self.labels[x] is not _MISSING:
                return x
        return None

    def find_next(self, key):
        """Smallest present key >= key, or None."""
        if key > self.span:
            return None
        key = max(key, 1)
        b = self.ktab[key]
        hi = min(b * self.width, self.span)
        for x in range(key, hi + 1):
            self.probes += 1
            if self.labels[x] is not _MISSING:
                return x
        s = self.inner.succ_ge(b + 1)
        if s is None:
            return None
        lo = (s - 1) * self.width + 1
        for x in range(lo, min(s * self.width, self.span) + 1):
            self.probes += 1
            if self.labels[x] is not _MISSING:
                return x
        return None

    # -- bulk construction ---------------------------------------------------

    @classmethod
    def build(cls, span, entries):
        """O(span) construction from strictly increasing (key, label) pairs."""
        m = cls(span)
        prev = 0
        buckets = []
        for key, label in entries:
            if not (1 <= key <= span):
                raise KeyRangeError(f"key {key} outside 1..{span}")
            if key <= prev:
                raise KeyOrderError("keys must be strictly increasing")
            prev = key
            m.labels[key] = label
            m.writes += 1
            b = m.ktab[key]
            if m.bucket_count[b] == 0:
                buckets.append(b)
            m.bucket_count[b] += 1
            m.writes += 1
            m.size += 1
        for b in buckets:
            m.inner.insert(b)
        return m

    # -- helpers -------------------------------------------------------------

    def items(self):
        """All (key, label) pairs in key order (linear scan; debug/tests)."""
        out = []
        for x in range(1, self.span + 1):
            if self.labels[x] is not _MISSING:
                out.append((x, self.labels[x]))
        return out

    def __len__(self):
        return self.size
