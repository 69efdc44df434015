"""Constant-time engine for ZG monoids via subdirect certificates.

The certificate splits the monoid into commutative and nilpotent-plus-identity
quotients; each factor gets its O(1) engine, glued back with product and
division combinators. When the certificate search fails (the decomposition is
only guaranteed to exist as a variety statement) we fall back to the vEB
engine, keeping answers exact but losing the O(1) bound; the kind tag records
the downgrade so benchmarks can exclude such runs.
"""

from __future__ import annotations

import logging

from ..algebra.core import adjoin_identity
from ..algebra.varieties import check_variety
from ..algebra.zg import FACTOR_COM, find_zg_certificate
from ..errors import NotZg
from .combinators import DivisionEngine, ProductEngine
from .counting import CountEngine, NilpotentEngine

logger = logging.getLogger(__name__)


_cert_cache = {}


def _certificate(monoid, cong_bound):
    key = (tuple(tuple(r) for r in monoid.table), cong_bound)
    if key not in _cert_cache:
        _cert_cache[key] = find_zg_certificate(monoid, bound=cong_bound)
    return _cert_cache[key]


def make_zg_engine(semigroup, word, cong_bound=12):
    if not check_variety(semigroup, "ZG"):
        raise NotZg("semigroup does not satisfy x^(w+1) y = y x^(w+1)")
    monoid = adjoin_identity(semigroup)
    cert = _certificate(monoid, cong_bound)
    if cert is None:
        from .sg import make_sg_engine

        logger.warning(
            "no subdirect ZG certificate found (size %d); falling back to the "
            "vEB engine, answers stay exact", monoid.size,
        )
        eng = make_sg_engine(semigroup, word)
        eng.kind = "zg-downgraded-sg"
        return eng
    if len(cert.factors) == 1:
        factory = CountEngine if cert.kinds[0] == FACTOR_COM else NilpotentEngine
        return factory(monoid, word)
    component_words = [
        [cert.embedding[a][i] for a in word] for i in range(len(cert.factors))
    ]
    parts = [
        CountEngine(f, w) if kind == FACTOR_COM else NilpotentEngine(f, w)
        for f, kind, w in zip(cert.factors, cert.kinds, component_words)
    ]
    inner = ProductEngine(parts)
    eng = DivisionEngine(rep=cert.embedding, project=cert.projection, inner=inner)
    eng.kind = "zg"
    return eng
