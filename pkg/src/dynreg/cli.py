"""Command-line surface: classify, run, bench, algebra.

Exit codes: 0 ok, 1 oracle mismatch, 2 input error. All randomness flows from
--seed (fixed default), so reports are reproducible byte for byte; wall-clock
timings go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .algebra.core import adjoin_identity
from .algebra.green import green_j, local_monoids
from .algebra.rees import rees_decompose
from .algebra.varieties import check_variety
from .engines.base import make_naive_engine
from .engines.dispatch import make_auto_engine
from .engines.counting import CountEngine, NilpotentEngine
from .engines.kary import make_kary_engine
from .engines.language import make_language_engine
from .engines.prefix import make_prefix_engine
from .engines.sg import make_sg_engine
from .engines.zg import make_zg_engine
from .errors import EngineError, PositionOutOfRange
from .gallery import gallery
from .jsonio import language_from_json, load_json, semigroup_from_json
from .syntactic.classify import classify_language
from .syntactic.monoid import syntactic_monoid
from .syntactic.stable import stable_data

DEFAULT_SEED = 20114

VARIETY_FLAGS = [
    "COM",
    "APERIODIC",
    "ZE",
    "ZG",
    "SG",
    "NILPOTENT",
    "DEFINITE",
    "NIL_PLUS_ONE",
]


def _analyze_language(obj):
    dfa = language_from_json(obj)
    m = syntactic_monoid(dfa)
    sd = stable_data(m)
    return dfa, m, sd, classify_language(m, sd)


def cmd_classify(args):
    obj = load_json(args.input)
    _, m, sd, report = _analyze_language(obj)
    out = report.to_dict()
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


def _resolve_input(obj):
    """Returns ('language', dfa, m, sd, report) or ('semigroup', s)."""
    if "table" in obj:
        return ("semigroup", semigroup_from_json(obj))
    return ("language",) + _analyze_language(obj)


def _semigroup_engine(s, word, kind):
    if kind == "auto":
        return make_auto_engine(s, word)
    makers = {
        "naive": make_naive_engine,
        "kary": make_kary_engine,
        "count": CountEngine,
        "nilpotent": NilpotentEngine,
        "zg": make_zg_engine,
        "sg": make_sg_engine,
        "prefix": make_prefix_engine,
    }
    return makers[kind](s, word)


def cmd_run(args):
    obj = load_json(args.input)
    resolved = _resolve_input(obj)
    t0 = time.perf_counter()
    answers = []
    mismatches = 0
    op_costs = []

    if resolved[0] == "language":
        _, m, sd, report = resolved[1:]
        word = list(args.word)
        engine = make_language_engine(m, sd, report, word)
        shadow = list(word) if args.check else None

        def apply_update(pos, letter):
            engine.update(pos, letter)
            if shadow is not None:
                shadow[pos] = letter

        def answer_query(parts):
            if parts[0] != "Q":
                raise ValueError("language runs support only Q queries")
            got = engine.query()
            answers.append("true" if got else "false")
            if shadow is not None and got != m.member(shadow):
                return 1
            return 0

        def decode(tok):
            return tok
    else:
        s = resolved[1]
        word = [s.id_of(tok) for tok in args.word.split()]
        engine = _semigroup_engine(s, word, args.engine)
        oracle = make_naive_engine(s, list(word)) if args.check else None

        def apply_update(pos, letter):
            engine.update(pos, letter)
            if oracle is not None:
                oracle.update(pos, letter)

        def answer_query(parts):
            needed = {"P": "prefix", "I": "infix"}.get(parts[0])
            if needed and not hasattr(engine, needed):
                raise ValueError(
                    f"engine kind {engine.kind!r} does not answer {parts[0]} queries"
                )
            if parts[0] == "Q":
                got = engine.query()
                want = oracle.query() if oracle else got
            elif parts[0] == "P":
                got = engine.prefix(int(parts[1]))
                want = oracle.prefix(int(parts[1])) if oracle else got
            else:
                got = engine.infix(int(parts[1]), int(parts[2]))
                want = oracle.infix(int(parts[1]), int(parts[2])) if oracle else got
            answers.append("none" if got is None else s.names[got])
            return 0 if got == want else 1

        def decode(tok):
            return s.id_of(tok)

    with open(args.stream) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            before = engine.op_count
            if parts[0] == "U":
                apply_update(int(parts[1]), decode(parts[2]))
            elif parts[0] in ("Q", "P", "I"):
                mismatches += answer_query(parts)
            else:
                raise ValueError(f"bad stream record {line!r}")
            op_costs.append(engine.op_count - before)

    wall = time.perf_counter() - t0
    for a in answers:
        print(a)
    max_ops = max(op_costs) if op_costs else 0
    mean_ops = sum(op_costs) / len(op_costs) if op_costs else 0.0
    print(f"# report answers={len(answers)} mismatches={mismatches} "
          f"max_ops={max_ops} mean_ops={mean_ops:.2f}")
    print(f"wall_s={wall:.3f}", file=sys.stderr)
    return 1 if mismatches else 0


def _bench_cell(engine_kind, n, ops, seed, target):
    rng = random.Random(seed)
    if engine_kind.startswith("language:"):
        name = engine_kind.split(":", 1)[1]
        from .syntactic import analyze_regex

        regexes = {
            "abstar": ("a*b*", "ab"),
            "evenba": ("(aa)*ba*", "ab"),
        }
        rx, alpha = regexes[name]
        m, sd, report = analyze_regex(rx, alpha)
        word = [rng.choice(alpha) for _ in range(n)]
        eng = make_language_engine(m, sd, report, word)
        letters = alpha
        pick = lambda: rng.choice(letters)
    else:
        s = target
        word = [rng.randrange(s.size) for _ in range(n)]
        eng = _semigroup_engine(s, word, engine_kind)
        pick = lambda: rng.randrange(s.size)
    max_upd = 0
    max_qry = 0
    for _ in range(ops):
        before = eng.op_count
        eng.update(rng.randrange(n), pick())
        max_upd = max(max_upd, eng.op_count - before)
        before = eng.op_count
        eng.query()
        max_qry = max(max_qry, eng.op_count - before)
    return eng.kind, max_upd, max_qry


def cmd_bench(args):
    cfg = load_json(args.config)
    seed = args.seed
    rows = ["# dynreg-bench v1", "n,engine,max_ops_update,max_probes_query"]
    gal = gallery()
    for cell in cfg["cells"]:
        kind = cell["engine"]
        target = None
        if "gallery" in cell:
            target = gal[cell["gallery"]]
        elif "semigroup" in cell:
            target = semigroup_from_json(cell["semigroup"])
        for n in cell["ns"]:
            tag, mu, mq = _bench_cell(
                kind, n, cell.get("ops", 1000), seed, target
            )
            rows.append(f"{n},{tag},{mu},{mq}")
    out = "\n".join(rows) + "\n"
    if args.csv_out:
        with open(args.csv_out, "w") as f:
            f.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_algebra(args):
    s = semigroup_from_json(load_json(args.input))
    print(f"size: {s.size}")
    print(f"identity: {s.names[s.identity] if s.identity is not None else '-'}")
    print(f"zero: {s.names[s.zero] if s.zero is not None else '-'}")
    print(f"idempotents: {' '.join(s.names[e] for e in s.idempotents)}")
    print("omega:")
    for x in range(s.size):
        d = s.omega_data(x)
        print(
            f"  {s.names[x]}: exponent={d.exponent} omega={s.names[d.element]} "
            f"omega_plus_one={s.names[d.plus_one]} group={d.is_group_element}"
        )
    js = green_j(s)
    print("j-classes:")
    for cid, cls in enumerate(js.classes):
        marks = []
        if cid in js.maximal_classes:
            marks.append("maximal")
        if js.regular[cid]:
            marks.append("regular")
        above = sorted(d for d in range(len(js.classes)) if (cid, d) in js.less)
        rel = f" < {above}" if above else ""
        print(f"  C{cid} {{{' '.join(s.names[x] for x in cls)}}} "
              f"[{' '.join(marks)}]{rel}")
    print("varieties:")
    for v in VARIETY_FLAGS:
        print(f"  {v}: {'yes' if check_variety(s, v) else 'no'}")
    print(f"  LOCAL(ZG): {'yes' if check_variety(s, ('LOCAL', 'ZG')) else 'no'}")
    print(f"  LOCAL(SG): {'yes' if check_variety(s, ('LOCAL', 'SG')) else 'no'}")
    print("local monoids:")
    for e, local, incl in local_monoids(s):
        print(f"  e={s.names[e]}: {{{' '.join(s.names[x] for x in incl)}}}")
    print("rees coordinates of regular maximal classes:")
    for cid in js.maximal_classes:
        if not js.regular[cid]:
            continue
        r = rees_decompose(s, cid, js)
        print(f"  C{cid}: |G|={r.group.size} I={r.i_count} J={r.j_count}")
        for j in range(r.j_count):
            row = [
                "0" if v is None else r.group.names[v] for v in r.matrix[j]
            ]
            print(f"    P[{j}] = [{' '.join(row)}]")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(prog="dynreg")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="trichotomy report for a language")
    p.add_argument("input", help="language JSON file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("run", help="drive an engine with an update stream")
    p.add_argument("input", help="language or semigroup JSON file")
    p.add_argument("--word", required=True,
                   help="initial word (string for languages, names for semigroups)")
    p.add_argument("--stream", required=True, help="update/query stream file")
    p.add_argument("--check", action="store_true",
                   help="shadow with the naive oracle; exit 1 on mismatch")
    p.add_argument("--engine", default="auto",
                   choices=["auto", "naive", "kary", "count", "nilpotent",
                            "zg", "sg", "prefix"])
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("bench", help="operation-count benchmarks to CSV")
    p.add_argument("config", help="bench config JSON")
    p.add_argument("--csv-out", default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("algebra", help="structure report for a semigroup")
    p.add_argument("input", help="semigroup JSON file")
    p.set_defaults(func=cmd_algebra)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (EngineError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
