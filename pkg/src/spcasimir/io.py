"""JSON, plain-text and LaTeX forms of :class:`~spcasimir.envelope.NcPoly`."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

import jsonschema

from .envelope import NcPoly
from .lambdapoly import LambdaPoly
from .lie import BGEN, EMINUS, EPLUS, GeneratorId


class DecodeError(ValueError):
    pass


_RATIONAL = {
    "type": "object",
    "properties": {
        "num": {"type": "string", "pattern": r"^-?[0-9]+$"},
        "den": {"type": "string", "pattern": r"^[1-9][0-9]*$"},
    },
    "required": ["num", "den"],
    "additionalProperties": False,
}

JSON_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "rank": {"type": "integer", "minimum": 1},
        "coeff_ring": {"enum": ["rational", "lambda"]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "coeff": {
                        "oneOf": [
                            _RATIONAL,
                            {
                                "type": "array",
                                "items": {
                                    "type": "object",
                                    "properties": {
                                        "exponents": {
                                            "type": "array",
                                            "items": {"type": "integer", "minimum": 0},
                                        },
                                        "rational": _RATIONAL,
                                    },
                                    "required": ["exponents", "rational"],
                                    "additionalProperties": False,
                                },
                            },
                        ]
                    },
                    "monomial": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {
                                "kind": {"enum": [EPLUS, EMINUS, BGEN]},
                                "k": {"type": "integer", "minimum": 1},
                                "l": {"type": "integer", "minimum": 1},
                            },
                            "required": ["kind", "k", "l"],
                            "additionalProperties": False,
                        },
                    },
                },
                "required": ["coeff", "monomial"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["rank", "coeff_ring", "terms"],
    "additionalProperties": False,
}


def _rat(c: Fraction) -> Dict[str, str]:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def _coeff_doc(c, ring: str):
    if ring == "rational":
        return _rat(c)
    poly = LambdaPoly.coerce(c)
    return [
        {"exponents": list(e), "rational": _rat(v)}
        for e, v in sorted(poly.terms.items(), key=lambda t: (len(t[0]), t[0]))
    ]


def to_document(p: NcPoly) -> Dict[str, Any]:
    ring = p.coeff_ring
    return {
        "rank": p.rank,
        "coeff_ring": ring,
        "terms": [
            {
                "coeff": _coeff_doc(c, ring),
                "monomial": [{"kind": g.kind, "k": g.k, "l": g.l} for g in mono],
            }
            for mono, c in p.sorted_terms()
        ],
    }


def json_encode(p: NcPoly, indent: Optional[int] = None) -> str:
    separators = (",", ":") if indent is None else None
    return json.dumps(to_document(p), indent=indent, ensure_ascii=False, separators=separators)


def _location(path) -> str:
    out = "$"
    for part in path:
        out += f"[{part}]" if isinstance(part, int) else f".{part}"
    return out


def from_document(doc: Any) -> NcPoly:
    try:
        jsonschema.validate(doc, JSON_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise DecodeError(f"{_location(exc.absolute_path)}: {exc.message}") from None
    m = doc["rank"]
    ring = doc["coeff_ring"]
    terms = {}
    for i, term in enumerate(doc["terms"]):
        where = f"$.terms[{i}]"
        coeff = term["coeff"]
        if ring == "rational":
            if not isinstance(coeff, dict):
                raise DecodeError(f"{where}.coeff: expected a rational for a rational ring")
            c = Fraction(int(coeff["num"]), int(coeff["den"]))
        else:
            if not isinstance(coeff, list):
                raise DecodeError(f"{where}.coeff: expected a λ-polynomial term list")
            c = LambdaPoly(
                [
                    (tuple(t["exponents"]), Fraction(int(t["rational"]["num"]), int(t["rational"]["den"])))
                    for t in coeff
                ]
            )
        mono = []
        for j, g in enumerate(term["monomial"]):
            if g["k"] > m or g["l"] > m:
                raise DecodeError(f"{where}.monomial[{j}]: index out of range for rank {m}")
            mono.append(GeneratorId(g["kind"], g["k"], g["l"]))
        mono = tuple(mono)
        if mono in terms:
            raise DecodeError(f"{where}.monomial: duplicate monomial")
        terms[mono] = c
    return NcPoly(m, terms)


def json_decode(text: str) -> NcPoly:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


# ---------------------------------------------------------------------------
# human-readable forms
# ---------------------------------------------------------------------------

MINUS = "−"


def _lex_terms(p: NcPoly):
    # reading order of printed formulas: lexicographic in the generator order
    for mono in sorted(p.terms, key=lambda mono: tuple(g.key for g in mono)):
        yield mono, p.terms[mono]


def gen_text(g: GeneratorId) -> str:
    kind = {EPLUS: "E+", EMINUS: "E" + MINUS, BGEN: "B"}[g.kind]
    return f"{kind}[{g.k},{g.l}]"


def to_text(p: NcPoly) -> str:
    """``2·E+[1,1]E−[1,1] − 4·B[1,1] + 2·B[1,1]B[1,1]``."""
    if not p:
        return "0"
    pieces: List[str] = []
    for n, (mono, c) in enumerate(_lex_terms(p)):
        body = "".join(gen_text(g) for g in mono)
        if isinstance(c, LambdaPoly):
            sign = "+"
            coef = f"({str(c).replace('-', MINUS)})"
            text = f"{coef}·{body}" if body else coef
        else:
            sign = MINUS if c < 0 else "+"
            a = abs(c)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = f"{a}·{body}"
        if n == 0:
            pieces.append(text if sign == "+" else MINUS + text)
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces)


def _idx(k: int, l: int) -> str:
    return f"{k}{l}" if k < 10 and l < 10 else f"{k},{l}"


def gen_latex(g: GeneratorId) -> str:
    if g.kind == EPLUS:
        return f"E_{{+{_idx(g.k, g.l)}}}"
    if g.kind == EMINUS:
        return f"E_{{-{_idx(g.k, g.l)}}}"
    return f"B_{{{_idx(g.k, g.l)}}}"


def _frac_latex(a: Fraction) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"\\frac{{{a.numerator}}}{{{a.denominator}}}"


def lambda_latex(c: LambdaPoly) -> str:
    parts = []
    for n, (e, v) in enumerate(c.sorted_terms()):
        mono = ""
        for j, x in enumerate(e):
            if not x:
                continue
            name = "\\lambda" if j == 0 else f"\\lambda_{{{j}}}"
            mono += name if x == 1 else f"{name}^{{{x}}}"
        a = abs(v)
        coef = "" if (a == 1 and mono) else _frac_latex(a)
        sign = "-" if v < 0 else "+"
        text = coef + mono
        parts.append((sign + text) if n == 0 and sign == "-" else (text if n == 0 else f" {sign} {text}"))
    return "".join(parts)


def to_latex(p: NcPoly) -> str:
    """``E_{+11}E_{-11} - 4B_{11}``."""
    if not p:
        return "0"
    pieces: List[str] = []
    for n, (mono, c) in enumerate(_lex_terms(p)):
        body = "".join(gen_latex(g) for g in mono)
        if isinstance(c, LambdaPoly):
            sign = "+"
            coef = f"\\left({lambda_latex(c)}\\right)"
            text = coef + body
        else:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            text = body if (a == 1 and body) else _frac_latex(a) + body
        if n == 0:
            pieces.append(text if sign == "+" else "-" + text)
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces)


latex_emit = to_latex
