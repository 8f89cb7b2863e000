"""Canonical JSON encoding for specs and verification artifacts.

Two rules keep every artifact reproducible and consumable by arbitrary
JSON parsers:

* integers of unbounded size are encoded as decimal strings, never as
  JSON numbers;
* serialization is deterministic: sorted keys, two-space indent, a
  single trailing newline.

Decoding validates shapes and re-runs the spec constructors, so a
hand-edited file that violates an invariant is rejected instead of
producing a quietly wrong object.
"""

from __future__ import annotations

import hashlib
import json
import sys
from fractions import Fraction
from typing import Any

from .errors import InvalidParameterError
from .sequences import (
    Affine,
    Explicit,
    ExplicitIndices,
    FactorialExponent,
    IndexMap,
    PowerRecurrence,
    SequenceSpec,
    Subseries,
)

_LOG10_2 = 0.30102999566398119


def int_to_str(value: int) -> str:
    """Decimal string of an arbitrary-size integer.

    CPython caps int->str conversions by default; the cap is raised on
    demand so budget-scale integers serialize instead of raising.
    """
    needed = int(abs(value).bit_length() * _LOG10_2) + 3
    if hasattr(sys, "get_int_max_str_digits") and sys.get_int_max_str_digits() < needed:
        sys.set_int_max_str_digits(needed)
    return str(value)


def str_to_int(text: str, name: str = "integer") -> int:
    if not isinstance(text, str):
        raise InvalidParameterError(f"{name} must be a decimal string, got {text!r}")
    needed = len(text) + 3
    if hasattr(sys, "get_int_max_str_digits") and sys.get_int_max_str_digits() < needed:
        sys.set_int_max_str_digits(needed)
    try:
        return int(text, 10)
    except ValueError as exc:
        raise InvalidParameterError(f"{name} is not a decimal string: {text!r}") from exc


def decimal_digits(value: int) -> int:
    """Exact count of decimal digits of ``abs(value)``."""
    return len(int_to_str(abs(value)))


def canonical_dumps(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, indent 2, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def canonical_bytes(obj: Any) -> bytes:
    return canonical_dumps(obj).encode("ascii")


# ---------------------------------------------------------------------------
# Rationals
# ---------------------------------------------------------------------------


def rational_obj(value: Fraction) -> dict:
    return {"num": int_to_str(value.numerator), "den": int_to_str(value.denominator)}


def rational_from_obj(obj: Any, name: str = "rational") -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise InvalidParameterError(f"{name} must be an object with num/den strings")
    num = str_to_int(obj["num"], f"{name}.num")
    den = str_to_int(obj["den"], f"{name}.den")
    if den <= 0:
        raise InvalidParameterError(f"{name} denominator must be positive")
    return Fraction(num, den)


def parse_rational(text: str, name: str = "rational") -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"cannot parse {name} from {text!r}") from exc


# ---------------------------------------------------------------------------
# Sequence specs
# ---------------------------------------------------------------------------


def _index_map_obj(index_map: IndexMap) -> dict:
    if isinstance(index_map, Affine):
        return {"kind": "affine", "s": int_to_str(index_map.s), "t": int_to_str(index_map.t)}
    return {"kind": "explicit", "indices": [int_to_str(i) for i in index_map.indices]}


def _index_map_from_obj(obj: Any) -> IndexMap:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise InvalidParameterError("index map must be an object with a 'kind'")
    if obj["kind"] == "affine":
        return Affine(s=str_to_int(obj["s"], "s"), t=str_to_int(obj["t"], "t"))
    if obj["kind"] == "explicit":
        return ExplicitIndices(tuple(str_to_int(i, "index") for i in obj["indices"]))
    raise InvalidParameterError(f"unknown index map kind {obj['kind']!r}")


def spec_obj(spec: SequenceSpec) -> dict:
    if isinstance(spec, PowerRecurrence):
        return {
            "family": "power",
            "a1": int_to_str(spec.a1),
            "e": int_to_str(spec.e),
            "startOffset": spec.start_offset,
        }
    if isinstance(spec, FactorialExponent):
        return {
            "family": "factorialExp",
            "base": int_to_str(spec.base),
            "offset": int_to_str(spec.offset),
            "startOffset": spec.start_offset,
        }
    if isinstance(spec, Explicit):
        return {
            "family": "explicit",
            "terms": [int_to_str(t) for t in spec.terms],
            "startOffset": spec.start_offset,
        }
    if isinstance(spec, Subseries):
        return {
            "family": "subseries",
            "inner": spec_obj(spec.inner),
            "indexMap": _index_map_obj(spec.index_map),
            "startOffset": spec.start_offset,
        }
    raise InvalidParameterError(f"not a sequence spec: {spec!r}")


def spec_from_obj(obj: Any) -> SequenceSpec:
    if not isinstance(obj, dict) or "family" not in obj:
        raise InvalidParameterError("spec must be an object with a 'family'")
    offset = obj.get("startOffset", 1)
    if not isinstance(offset, int):
        raise InvalidParameterError("startOffset must be a JSON integer")
    family = obj["family"]
    if family == "power":
        return PowerRecurrence(
            a1=str_to_int(obj["a1"], "a1"),
            e=str_to_int(obj["e"], "e"),
            start_offset=offset,
        )
    if family == "factorialExp":
        return FactorialExponent(
            base=str_to_int(obj["base"], "base"),
            offset=str_to_int(obj.get("offset", "0"), "offset"),
            start_offset=offset,
        )
    if family == "explicit":
        return Explicit(
            terms=tuple(str_to_int(t, "term") for t in obj["terms"]),
            start_offset=offset,
        )
    if family == "subseries":
        return Subseries(
            inner=spec_from_obj(obj["inner"]),
            index_map=_index_map_from_obj(obj["indexMap"]),
            start_offset=offset,
        )
    raise InvalidParameterError(f"unknown sequence family {family!r}")


def spec_fingerprint(spec: SequenceSpec) -> str:
    """SHA-256 of the compact canonical spec encoding."""
    compact = json.dumps(spec_obj(spec), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(compact.encode("ascii")).hexdigest()


# ---------------------------------------------------------------------------
# Artifacts (duck-typed: the encoders read attributes, so this module does
# not need to import the modules that define the artifact types)
# ---------------------------------------------------------------------------


def convergent_obj(conv) -> dict:
    return {"m": conv.m, "p": int_to_str(conv.p), "q": int_to_str(conv.q)}


def enclosure_obj(enc) -> dict:
    return {
        "m": enc.terms_used,
        "lo": rational_obj(enc.lo),
        "hi": rational_obj(enc.hi),
    }


def witness_obj(wit) -> dict:
    return {
        "m": wit.convergent.m,
        "p": int_to_str(wit.convergent.p),
        "q": int_to_str(wit.convergent.q),
        "tailBound": rational_obj(wit.tail_bound),
        "verified": wit.verified,
    }


def certificate_obj(cert) -> dict:
    return {
        "version": 1,
        "spec": spec_obj(cert.spec),
        "alpha": rational_obj(cert.alpha),
        "startOffset": cert.start_offset,
        "rationalPrefix": rational_obj(cert.rational_prefix),
        "witnesses": [witness_obj(w) for w in cert.witnesses],
        "conclusion": cert.conclusion,
        "caveat": cert.caveat,
    }


def polynomial_obj(poly) -> dict:
    return {"coeffs": [int_to_str(c) for c in poly.coeffs]}


def polynomial_from_obj(obj: Any):
    from .measure import PolynomialInt

    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise InvalidParameterError("polynomial must be an object with 'coeffs'")
    return PolynomialInt(tuple(str_to_int(c, "coefficient") for c in obj["coeffs"]))


def measure_bound_obj(b) -> dict:
    return {
        "degree": b.degree,
        "height": b.height,
        "base": int_to_str(b.base),
        "exponent": rational_obj(b.exponent),
    }


def evidence_obj(ev) -> dict:
    return {
        "version": 1,
        "polynomial": polynomial_obj(ev.polynomial),
        "bound": measure_bound_obj(ev.bound),
        "enclosure": enclosure_obj(ev.enclosure_used),
        "absLower": rational_obj(ev.abs_lower),
        "verified": ev.verified,
        "refinements": ev.refinements,
    }


def brute_force_obj(result) -> dict:
    return {
        "argmin": polynomial_obj(result.argmin),
        "minLower": rational_obj(result.min_lower),
        "minUpper": rational_obj(result.min_upper),
        "count": result.count,
    }
