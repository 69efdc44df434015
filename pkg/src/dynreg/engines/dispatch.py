"""Pick the best maintenance engine a semigroup's structure allows."""

from __future__ import annotations

from ..algebra.varieties import check_variety
from .counting import CountEngine, NilpotentEngine
from .kary import make_kary_engine
from .sg import make_sg_engine
from .zg import make_zg_engine


def make_auto_engine(semigroup, word):
    """count < nilpotent < zg < sg < kary, first whose precondition holds."""
    if check_variety(semigroup, "COM"):
        return CountEngine(semigroup, word)
    if semigroup.identity is not None and check_variety(semigroup, "NIL_PLUS_ONE"):
        return NilpotentEngine(semigroup, word)
    if check_variety(semigroup, "ZG"):
        return make_zg_engine(semigroup, word)
    if check_variety(semigroup, "SG"):
        return make_sg_engine(semigroup, word)
    return make_kary_engine(semigroup, word)
