"""Self-dual codes over Z_{2^m} built from shadows and generalized shadows."""

from .zring import RingParams, RingVector, dot, euclidean_weight, additive_order
from .lincode import LinearCode, TypeVerdict, canonicalize, classify, dual, contains, augment, codewords

__version__ = "0.1.0"

__all__ = [
    "RingParams",
    "RingVector",
    "dot",
    "euclidean_weight",
    "additive_order",
    "LinearCode",
    "TypeVerdict",
    "canonicalize",
    "classify",
    "dual",
    "contains",
    "augment",
    "codewords",
]
