"""Constant-time engine from local statistics, verified at build time.

The engine maintains exact occurrence counters for a family of local features
of the word plus its last letter, and answers queries by projecting the
counters through a threshold-plus-period cap and consulting a recovery table.
A substitution touches O(1) features, so updates and queries are constant
time with word-length-independent step counts.

Feature families, tried in order:

  pairs     one counter per letter value and one per value of a product of
            two adjacent letters
  windows   one counter per (context, letter) pair, the context being the
            previous letter or the word start

Whether the statistic determines the evaluation is decided by exhaustive
reachability over the capped-statistic automaton, carrying the true
evaluation along: if no two reachable states share (capped counters, last
letter) with different evaluations, the recovery table is total and the
engine is exact for every word length. This covers stable semigroups whose
local monoids are in ZG but which are not in ZG themselves (the counters
play the commutative part, the last letter the definite part); when every
tier fails, callers fall back to the vEB engine.
"""

from __future__ import annotations

from math import lcm

from .base import Engine


class WindowStatsPlan:
    def __init__(self, semigroup, stat_kind, threshold, period, nslots, recovery):
        self.semigroup = semigroup
        self.stat_kind = stat_kind
        self.threshold = threshold
        self.period = period
        self.nslots = nslots
        self.recovery = recovery  # (capped counts, last letter) -> element

    def cap(self, c):
        t, p = self.threshold, self.period
        return c if c < t else t + (c - t) % p


def _exponent(s):
    """lcm of the cycle lengths of all elements."""
    out = 1
    for x in range(s.size):
        e = s.omega_data(x).element
        p = 1
        v = s.table[e][x]
        while v != e:
            v = s.table[v][x]
            p += 1
            if p > s.size + 1:
                break
        out = lcm(out, p)
    return out


def _slots_of_append(s, kind, last, a):
    """Feature slots incremented when letter a follows a word ending in last."""
    if kind == "pairs":
        slots = [a]
        if last is not None:
            slots.append(s.size + s.table[last][a])
        return slots
    # windows: context is the previous letter, or the word start
    ctx = s.size if last is None else last
    return [ctx * s.size + a]


def _nslots(s, kind):
    return 2 * s.size if kind == "pairs" else (s.size + 1) * s.size


_plan_cache = {}


def synthesize_window_plan(s, tiers=None, state_cap=300_000):
    """Search the tier ladder for a verified plan; None if all tiers fail."""
    default = tiers is None
    key = tuple(tuple(r) for r in s.table)
    if default and key in _plan_cache:
        return _plan_cache[key]
    if default:
        exp = _exponent(s)
        tiers = [
            ("pairs", 1, 1),
            ("pairs", s.size + 1, exp),
            ("windows", 1, 1),
            ("windows", s.size + 1, exp),
        ]
    plan = None
    for kind, threshold, period in tiers:
        plan = _verify_tier(s, kind, threshold, period, state_cap)
        if plan is not None:
            break
    if default:
        _plan_cache[key] = plan
    return plan


def _verify_tier(s, kind, threshold, period, state_cap):
    nslots = _nslots(s, kind)

    def cap(c):
        return c if c < threshold else threshold + (c - threshold) % period

    recovery = {}
    seen = set()
    frontier = []
    for a in range(s.size):
        counts = [0] * nslots
        for slot in _slots_of_append(s, kind, None, a):
            counts[slot] = cap(counts[slot] + 1)
        st = (tuple(counts), a, a)
        recovery[(st[0], a)] = a
        seen.add(st)
        frontier.append(st)
    t = s.table
    while frontier:
        if len(seen) > state_cap:
            return None
        nxt = []
        for counts, last, ev in frontier:
            for a in range(s.size):
                c2 = list(counts)
                for slot in _slots_of_append(s, kind, last, a):
                    c2[slot] = cap(c2[slot] + 1)
                ev2 = t[ev][a]
                st = (tuple(c2), a, ev2)
                if st in seen:
                    continue
                key = (st[0], a)
                if key in recovery:
                    if recovery[key] != ev2:
                        return None
                else:
                    recovery[key] = ev2
                seen.add(st)
                nxt.append(st)
        frontier = nxt
    return WindowStatsPlan(s, kind, threshold, period, nslots, recovery)


class WindowStatsEngine(Engine):
    kind = "windowstats"

    def __init__(self, semigroup, word, plan):
        super().__init__(semigroup, word)
        self.plan = plan
        self.counts = [0] * plan.nslots
        for i in range(self.n):
            for slot in self._slots(i):
                self.counts[slot] += 1

    def _slots(self, i):
        last = self.word[i - 1] if i > 0 else None
        return _slots_of_append(self.semigroup, self.plan.stat_kind, last, self.word[i])

    def update(self, pos, letter):
        self._check(pos, letter)
        self._steps += 4
        hi = min(pos + 1, self.n - 1)
        for j in range(pos, hi + 1):
            for slot in self._slots(j):
                self.counts[slot] -= 1
        self.word[pos] = letter
        for j in range(pos, hi + 1):
            for slot in self._slots(j):
                self.counts[slot] += 1

    def query(self):
        if self.n == 0:
            return None
        plan = self.plan
        self._steps += plan.nslots + 1
        capped = tuple(plan.cap(c) for c in self.counts)
        return plan.recovery[(capped, self.word[-1])]


def make_windowstats_engine(semigroup, word, plan=None):
    if plan is None:
        plan = synthesize_window_plan(semigroup)
        if plan is None:
            raise ValueError("no verified statistics plan for this semigroup")
    return WindowStatsEngine(semigroup, word, plan)
