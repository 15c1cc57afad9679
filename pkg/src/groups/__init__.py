"""Root data and finite Weyl groups of the supported families."""

from .root_datum import (
    GroupDatum,
    GroupKind,
    Root,
    build_group,
    pair,
    dominantize,
    leq_dominance,
    pi1,
    pi1_coinvariants,
)
from .weyl import (
    CosetDecomposition,
    enumerate_group,
    length_finite,
    min_coset_rep,
    reduced_word,
    stabilizer_simples,
    weyl_orbit,
    word_to_element,
)

__all__ = [
    "GroupDatum",
    "GroupKind",
    "Root",
    "build_group",
    "pair",
    "dominantize",
    "leq_dominance",
    "pi1",
    "pi1_coinvariants",
    "CosetDecomposition",
    "enumerate_group",
    "length_finite",
    "min_coset_rep",
    "reduced_word",
    "stabilizer_simples",
    "weyl_orbit",
    "word_to_element",
]
