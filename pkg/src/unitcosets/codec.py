"""JSON-ready encodings of the exact types.

Rationals are strings ``"p/q"`` (``"p"`` when q = 1); polynomials are
ascending coefficient arrays; rational functions are ``{"num", "den"}``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exact_arith import (
    FactoredRationalFunction,
    Polynomial,
    RationalFunction,
    format_rational,
    parse_rational,
)
from .series import TruncatedSeries


class MalformedInput(ValueError):
    pass


def rat_to_json(x: Fraction) -> str:
    return format_rational(x)


def rat_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise MalformedInput(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return parse_rational(v)
        except ValueError as e:
            raise MalformedInput(str(e)) from None
    raise MalformedInput(f"not a rational: {v!r}")


def poly_to_json(p: Polynomial) -> list[str]:
    return [rat_to_json(c) for c in p.coeffs]


def poly_from_json(v) -> Polynomial:
    if not isinstance(v, list):
        raise MalformedInput(f"polynomial must be an array, got {v!r}")
    return Polynomial(rat_from_json(c) for c in v)


def rf_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def rf_from_json(v) -> RationalFunction:
    if not isinstance(v, dict) or "num" not in v:
        raise MalformedInput(f"rational function must be an object with num/den, got {v!r}")
    num = poly_from_json(v["num"])
    den = poly_from_json(v.get("den", [1]))
    if den.is_zero():
        raise MalformedInput("zero denominator")
    return RationalFunction(num, den)


def factored_to_json(g: FactoredRationalFunction) -> dict:
    return {
        "constant": rat_to_json(g.constant),
        "factors": [{"poly": poly_to_json(p), "exp": e} for p, e in g.factors],
    }


def factored_from_json(v) -> FactoredRationalFunction:
    if not isinstance(v, dict):
        raise MalformedInput(f"factored rational function must be an object, got {v!r}")
    try:
        factors = []
        for item in v.get("factors", []):
            exp = item["exp"]
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise MalformedInput(f"factor exponent must be an integer, got {exp!r}")
            factors.append((poly_from_json(item["poly"]), exp))
        return FactoredRationalFunction(rat_from_json(v.get("constant", "1")), tuple(factors))
    except (KeyError, TypeError) as e:
        raise MalformedInput(f"bad factor record: {e}") from None
    except MalformedInput:
        raise
    except ValueError as e:
        raise MalformedInput(str(e)) from None


def series_to_json(s: TruncatedSeries) -> dict:
    return {"coeffs": [rat_to_json(c) for c in s.coeffs], "order": s.order}


def series_from_json(v) -> TruncatedSeries:
    try:
        return TruncatedSeries([rat_from_json(c) for c in v["coeffs"]], int(v["order"]))
    except (KeyError, TypeError) as e:
        raise MalformedInput(f"bad series record: {e}") from None


def canonical_dumps(obj) -> str:
    """Sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
