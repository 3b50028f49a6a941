"""Quantitative invariants of finite simple groups.

Exact factored orders for the standard families, element-order censuses of
permutation realizations, prime graphs, Sylow normalizer orders, and search
routines for order/census collisions between nonisomorphic simple groups.
"""

from .factored import FactoredInteger, factor_integer, is_prime, totient_of_prime_power
from .catalog import (
    Alternating,
    CatalogMember,
    Classical,
    Exceptional,
    GroupDescriptor,
    Sporadic,
    SporadicQuantRecord,
    canonicalize_descriptor,
    descriptor_text,
    enumerate_catalog,
    order_of_descriptor,
    parse_group,
    sporadic_quant_record,
    validate_descriptor,
)

__version__ = "0.1.0"

__all__ = [
    "FactoredInteger",
    "factor_integer",
    "is_prime",
    "totient_of_prime_power",
    "Alternating",
    "Sporadic",
    "Classical",
    "Exceptional",
    "GroupDescriptor",
    "CatalogMember",
    "SporadicQuantRecord",
    "parse_group",
    "descriptor_text",
    "validate_descriptor",
    "canonicalize_descriptor",
    "order_of_descriptor",
    "enumerate_catalog",
    "sporadic_quant_record",
    "__version__",
]
