"""Fundamental groups of homogeneous spaces G/H from character lattices."""

from .abgroup import AbMap, FgAbGroup, PrimeToPAbGroup, tensor_prime_to_p
from .complexes import ThreeTermCocharComplex, TwoTermComplex, ext0_to_Z, h_minus1
from .homspace import (
    ConsistencyError,
    HomSpaceInput,
    HypothesisError,
    HypothesisFlags,
    auxiliary_pipeline,
    pi0_h,
    pi1_alg,
    pi1_connected,
    pi1_etale_prime_to_p,
    pi1_sequence,
    pi1_top,
    pi2_top,
)
from .intlin import IntMatrix

__all__ = [
    "AbMap", "FgAbGroup", "PrimeToPAbGroup", "tensor_prime_to_p",
    "ThreeTermCocharComplex", "TwoTermComplex", "ext0_to_Z", "h_minus1",
    "ConsistencyError", "HomSpaceInput", "HypothesisError", "HypothesisFlags",
    "auxiliary_pipeline", "pi0_h", "pi1_alg", "pi1_connected", "pi1_etale_prime_to_p",
    "pi1_sequence", "pi1_top", "pi2_top", "IntMatrix",
]
