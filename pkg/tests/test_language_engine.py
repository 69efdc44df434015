import random

import pytest

from dynreg.engines import (
    WindowStatsEngine,
    make_language_engine,
    make_naive_engine,
    synthesize_window_plan,
)
from dynreg.gallery import ab_star_semigroup
from dynreg.syntactic import analyze_regex


def test_window_plan_for_ab_star_semigroup():
    s = ab_star_semigroup()
    plan = synthesize_window_plan(s)
    assert plan is not None
    assert plan.stat_kind == "pairs" and (plan.threshold, plan.period) == (1, 1)


def test_window_engine_differential():
    s = ab_star_semigroup()
    plan = synthesize_window_plan(s)
    rng = random.Random(2)
    for n in (1, 2, 5, 16, 33):
        word = [rng.randrange(s.size) for _ in range(n)]
        eng = WindowStatsEngine(s, list(word), plan)
        ora = make_naive_engine(s, list(word))
        for _ in range(500):
            p, a = rng.randrange(n), rng.randrange(s.size)
            eng.update(p, a)
            ora.update(p, a)
            assert eng.query() == ora.query()


def test_paper_trace_ab_star():
    m, sd, rep = analyze_regex("a*b*", "ab")
    eng = make_language_engine(m, sd, rep, list("aaaa"))
    assert eng.kind == "language[window]"
    assert eng.query() is True
    eng.update(2, "b")
    assert eng.query() is False  # aaba
    eng.update(3, "b")
    assert eng.query() is True  # aabb


def test_trace_even_a_before_b():
    m, sd, rep = analyze_regex("(aa)*ba*", "ab")
    eng = make_language_engine(m, sd, rep, list("aab"))
    assert eng.kind == "language[zg]"
    assert eng.query() is True
    eng.update(2, "a")
    assert eng.query() is False  # aaa


def test_empty_word_membership():
    for rx, want in [("a*b*", True), ("(aa)*ba*", False)]:
        m, sd, rep = analyze_regex(rx, "ab")
        eng = make_language_engine(m, sd, rep, [])
        assert eng.query() is want


def test_engine_kinds_by_class():
    cases = {
        ("a*b*", "ab"): "language[window]",
        ("(aa)*ba*", "ab"): "language[zg]",
        ("(a+b+c)*bc*x(a+b+c)*", "abcx"): "language[sg]",
        ("c*x(a+c)*", "acx"): "language[sg]",
    }
    for (rx, alpha), want in cases.items():
        m, sd, rep = analyze_regex(rx, alpha)
        eng = make_language_engine(m, sd, rep, list(alpha * 3))
        assert eng.kind == want, rx


def test_s3_language_routes_to_kary():
    import itertools

    from dynreg.syntactic import classify_language, minimize_dfa, stable_data, syntactic_monoid
    from dynreg.syntactic.dfa import Dfa

    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    a, b = (1, 0, 2), (1, 2, 0)
    delta = [
        [idx[tuple(g[p[k]] for k in range(3))] for g in (a, b)] for p in perms
    ]
    d = minimize_dfa(Dfa("ab", delta, idx[(0, 1, 2)], {idx[(0, 1, 2)]}))
    m = syntactic_monoid(d)
    sd = stable_data(m)
    rep = classify_language(m, sd)
    rng = random.Random(3)
    word = [rng.choice("ab") for _ in range(50)]
    eng = make_language_engine(m, sd, rep, word)
    assert eng.kind == "language[kary]"
    naive = list(word)
    for _ in range(400):
        p, c = rng.randrange(50), rng.choice("ab")
        eng.update(p, c)
        naive[p] = c
        assert eng.query() == m.member(naive)


@pytest.mark.parametrize("rx,alpha", [
    ("a*b*", "ab"),
    ("(aa)*ba*", "ab"),
    ("(a+b+c)*bc*x(a+b+c)*", "abcx"),
    ("c*x(a+c)*", "acx"),
])
def test_language_differential_random(rx, alpha):
    m, sd, rep = analyze_regex(rx, alpha)
    rng = random.Random(len(rx))
    for n in (0, 1, 2, 3, 5, 8, 21):
        word = [rng.choice(alpha) for _ in range(n)]
        eng = make_language_engine(m, sd, rep, list(word))
        naive = list(word)
        assert eng.query() == m.member(naive)
        for _ in range(250 if n else 0):
            p, c = rng.randrange(n), rng.choice(alpha)
            eng.update(p, c)
            naive[p] = c
            assert eng.query() == m.member(naive), (rx, n)


def test_language_constant_cost_for_q_lzg():
    worst_by_lang = {}
    for rx in ("a*b*", "(aa)*ba*"):
        m, sd, rep = analyze_regex(rx, "ab")
        worst = []
        for n in (2**10, 2**14, 2**18):
            rng = random.Random(14)
            word = [rng.choice("ab") for _ in range(n)]
            eng = make_language_engine(m, sd, rep, word)
            mx_u = mx_q = 0
            for _ in range(1200):
                before = eng.op_count
                eng.update(rng.randrange(n), rng.choice("ab"))
                mx_u = max(mx_u, eng.op_count - before)
                before = eng.op_count
                eng.query()
                mx_q = max(mx_q, eng.op_count - before)
            worst.append((mx_u, mx_q))
        assert worst[0] == worst[1] == worst[2], (rx, worst)
        worst_by_lang[rx] = worst[0]
