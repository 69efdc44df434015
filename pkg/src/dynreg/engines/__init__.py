from .base import Engine, NaiveEngine, make_naive_engine
from .combinators import (
    DivisionEngine,
    ProductEngine,
    make_division_engine,
    make_product_engine,
)
from .counting import CountEngine, NilpotentEngine, make_count_engine, make_nilpotent_engine
from .dispatch import make_auto_engine
from .kary import KAryConfig, KaryEngine, make_kary_engine
from .language import LanguageEngine, make_language_engine
from .prefix import VebPrefixEngine, make_prefix_engine
from .semidirect import SemidirectEngine, SemidirectSpec, make_semidirect_engine
from .sg import SgEngine, make_sg_engine
from .windowstats import (
    WindowStatsEngine,
    WindowStatsPlan,
    make_windowstats_engine,
    synthesize_window_plan,
)
from .zg import make_zg_engine

__all__ = [
    "CountEngine",
    "DivisionEngine",
    "Engine",
    "KAryConfig",
    "KaryEngine",
    "LanguageEngine",
    "NaiveEngine",
    "NilpotentEngine",
    "ProductEngine",
    "SemidirectEngine",
    "SemidirectSpec",
    "SgEngine",
    "VebPrefixEngine",
    "WindowStatsEngine",
    "WindowStatsPlan",
    "make_auto_engine",
    "make_count_engine",
    "make_division_engine",
    "make_kary_engine",
    "make_language_engine",
    "make_naive_engine",
    "make_nilpotent_engine",
    "make_prefix_engine",
    "make_product_engine",
    "make_semidirect_engine",
    "make_sg_engine",
    "make_windowstats_engine",
    "make_zg_engine",
    "synthesize_window_plan",
]
