"""JSON wire formats for semigroups, congruences, and languages."""

from __future__ import annotations

import json

from .algebra.congruence import Congruence
from .algebra.core import FiniteSemigroup, build_semigroup
from .errors import RangeError
from .syntactic.dfa import Dfa, minimize_dfa, regex_to_dfa
from .syntactic.regex import parse_regex


def semigroup_to_json(s):
    return {"elements": list(s.names), "table": [list(r) for r in s.table]}


def semigroup_from_json(obj):
    if "table" not in obj:
        raise RangeError("semigroup JSON needs a 'table'")
    names = obj.get("elements")
    return build_semigroup(obj["table"], names=names)


def congruence_from_json(obj):
    return Congruence(obj["blocks"])


def language_from_json(obj):
    """Returns a minimal complete Dfa from {'alphabet', 'regex'} or
    {'alphabet', 'dfa': {states, delta, initial, finals}}."""
    alphabet = obj.get("alphabet")
    if not alphabet:
        raise RangeError("language JSON needs an 'alphabet'")
    if "regex" in obj:
        ast = parse_regex(obj["regex"], alphabet)
        return minimize_dfa(regex_to_dfa(ast, alphabet))
    if "dfa" in obj:
        d = obj["dfa"]
        dfa = Dfa(alphabet, d["delta"], d["initial"], set(d["finals"]))
        if dfa.states != d["states"]:
            raise RangeError("dfa state count mismatch")
        return minimize_dfa(dfa)
    raise RangeError("language JSON needs 'regex' or 'dfa'")


def load_json(path):
    with open(path) as f:
        return json.load(f)
