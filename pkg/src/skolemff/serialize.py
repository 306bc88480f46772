"""Instance-file and report serialization.

One instance per JSON file.  Every number travels as a decimal string so
arbitrary-precision values survive any JSON implementation.  Constants are
little-endian power-basis vectors ("a/b" strings over Q(zeta_M), decimal
residues over F_p); polynomials are little-endian arrays of constants;
epsilons are [order, exponent] pairs meaning zeta_order^exponent in
characteristic 0, or {"order", "value"} with an explicitly declared (and
verified) order in characteristic p.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .constants import ConstantValue, Field, FieldSpec, RootOfUnity, field_for, zeta
from .errors import InvalidInstance
from .funfield import INFINITY, Place, PlaceSet, Polynomial, RationalFunction
from .powersum import PowerSumInstance

__all__ = [
    "instance_to_json",
    "instance_from_json",
    "load_instance",
    "save_instance",
    "canonical_dumps",
    "instance_digest",
    "stringify_numbers",
]


def stringify_numbers(obj):
    """Deep-copy obj with every int/Fraction rendered as a decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        raise InvalidInstance("floating point values are not serializable here")
    if isinstance(obj, dict):
        return {k: stringify_numbers(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify_numbers(v) for v in obj]
    return str(obj)


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def instance_digest(doc: dict) -> str:
    return "sha256:" + hashlib.sha256(canonical_dumps(doc).encode()).hexdigest()


# -- field -------------------------------------------------------------------


def fieldspec_to_json(spec: FieldSpec) -> dict:
    out = {"characteristic": str(spec.characteristic)}
    if spec.characteristic == 0:
        out["cyclotomic_order"] = str(spec.cyclotomic_order)
    else:
        out["extension_degree"] = str(spec.extension_degree)
    return out


def fieldspec_from_json(obj: dict) -> FieldSpec:
    ch = int(obj.get("characteristic", "0"))
    if ch == 0:
        return FieldSpec(0, int(obj.get("cyclotomic_order", "1")), 1)
    return FieldSpec(ch, 1, int(obj.get("extension_degree", "1")))


# -- constants / polynomials / functions ---------------------------------------


def poly_to_json(p: Polynomial) -> list:
    return [c.to_strings() for c in p.coeffs]


def poly_from_json(field: Field, items) -> Polynomial:
    if not isinstance(items, list):
        raise InvalidInstance("polynomial must be an array of constants")
    return Polynomial(field, [ConstantValue.from_strings(field, c) for c in items])


def ratfunc_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfunc_from_json(field: Field, obj) -> RationalFunction:
    if not isinstance(obj, dict) or "num" not in obj:
        raise InvalidInstance("rational function must be {num, den}")
    num = poly_from_json(field, obj["num"])
    den = poly_from_json(field, obj.get("den", [["1"]]))
    if den.is_zero:
        raise InvalidInstance("zero denominator")
    return RationalFunction(num, den)


def place_to_json(p: Place) -> dict:
    if p.is_infinite:
        return {"type": "infinity"}
    return {"type": "finite", "poly": poly_to_json(p.poly)}


def place_from_json(field: Field, obj) -> Place:
    if obj.get("type") == "infinity":
        return INFINITY
    if obj.get("type") != "finite":
        raise InvalidInstance(f"unknown place type {obj.get('type')!r}")
    poly = poly_from_json(field, obj["poly"])
    if poly.degree < 1:
        raise InvalidInstance("finite place needs positive degree")
    if not poly.lc().is_one:
        raise InvalidInstance("finite place polynomial must be monic")
    from .factor import factor_poly

    _, factors = factor_poly(poly)
    if len(factors) != 1 or factors[0][1] != 1:
        raise InvalidInstance(f"place polynomial {poly!r} is not irreducible")
    return Place(poly)


def epsilon_to_json(eps: RootOfUnity, field: Field) -> object:
    if field.char == 0:
        g = zeta(field, eps.order)
        cur = ConstantValue(field, field.one_raw)
        for j in range(eps.order):
            if cur == eps.value:
                return [str(eps.order), str(j)]
            cur = cur * g
        raise InvalidInstance("epsilon is not a power of the canonical root")
    return {"order": str(eps.order), "value": eps.value.to_strings()}


def epsilon_from_json(field: Field, obj) -> RootOfUnity:
    if isinstance(obj, list):
        if len(obj) != 2:
            raise InvalidInstance("epsilon pair must be [order, exponent]")
        order, exponent = int(obj[0]), int(obj[1])
        if order < 1:
            raise InvalidInstance("epsilon order must be positive")
        root = zeta(field, order) ** (exponent % order)
        true_order = root.order()
        return RootOfUnity(order=true_order, value=root)
    if isinstance(obj, dict):
        value = ConstantValue.from_strings(field, obj["value"])
        declared = int(obj["order"])
        return RootOfUnity(order=declared, value=value)  # verifies exactness
    raise InvalidInstance("epsilon must be a pair or {order, value}")


# -- instances -----------------------------------------------------------------


def instance_to_json(inst: PowerSumInstance, metadata: dict | None = None) -> dict:
    field = inst.field
    out = {
        "field": fieldspec_to_json(field.spec),
        "f": ratfunc_to_json(inst.f),
        "lambdas": [ratfunc_to_json(lam) for lam in inst.lambdas],
        "epsilons": [epsilon_to_json(e, field) for e in inst.epsilons],
        "r": [str(r) for r in inst.exponents],
        "S": [place_to_json(p) for p in inst.places],
    }
    if inst.genus:
        out["genus"] = str(inst.genus)
    if metadata:
        out["metadata"] = metadata
    return out


def instance_from_json(obj: dict) -> PowerSumInstance:
    if not isinstance(obj, dict):
        raise InvalidInstance("instance file must hold a JSON object")
    try:
        spec = fieldspec_from_json(obj.get("field", {}))
        field = field_for(spec)
        f = ratfunc_from_json(field, obj["f"])
        lambdas = tuple(ratfunc_from_json(field, x) for x in obj["lambdas"])
        epsilons = tuple(epsilon_from_json(field, x) for x in obj["epsilons"])
        exponents = tuple(int(x) for x in obj["r"])
        places = PlaceSet([place_from_json(field, x) for x in obj["S"]])
        genus = int(obj.get("genus", "0"))
    except KeyError as exc:
        raise InvalidInstance(f"missing instance field: {exc}") from exc
    except (ValueError, TypeError) as exc:
        raise InvalidInstance(f"malformed instance value: {exc}") from exc
    return PowerSumInstance(
        lambdas=lambdas,
        epsilons=epsilons,
        exponents=exponents,
        f=f,
        places=places,
        genus=genus,
    )


def load_instance(path: str) -> tuple[PowerSumInstance, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInstance(f"invalid JSON: {exc}") from exc
    return instance_from_json(doc), doc


def save_instance(inst: PowerSumInstance, path: str, metadata: dict | None = None) -> dict:
    doc = instance_to_json(inst, metadata)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return doc
