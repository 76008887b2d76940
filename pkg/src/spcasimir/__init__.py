"""Exact construction and verification of the Casimir elements of sp_m(C)."""

from .casimir import build_reference, build_theorem, centrality_check, oracle_equivalent
from .envelope import NcPoly, pbw_normalize
from .io import json_decode, json_encode, to_latex, to_text
from .lie import B, Em, Ep, GeneratorId, list_basis, structure_selftest
from .words import enumerate_words, enumerate_words_claim, sign_exponent, trace, word_sign

__all__ = [
    "B",
    "Em",
    "Ep",
    "GeneratorId",
    "NcPoly",
    "build_reference",
    "build_theorem",
    "centrality_check",
    "enumerate_words",
    "enumerate_words_claim",
    "json_decode",
    "json_encode",
    "list_basis",
    "oracle_equivalent",
    "pbw_normalize",
    "sign_exponent",
    "structure_selftest",
    "to_latex",
    "to_text",
    "trace",
    "word_sign",
]
