"""dynreg: dynamic membership for regular languages via finite semigroups.

Classify a regular language by the structure of its stable semigroup and
instantiate a maintenance engine with the matching per-operation cost:
constant, doubly-logarithmic, or log / log log.
"""

__version__ = "0.1.0"
