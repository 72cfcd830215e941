"""JSON Schema documents for the ``--format json`` output of each command.

Every document carries ``"schema": "origami-toolkit/1"`` and the command name.
"""

from __future__ import annotations

from .origami import SCHEMA

_INT = {"type": "integer"}
_STR = {"type": "string"}
_BOOL = {"type": "boolean"}
_INTS = {"type": "array", "items": _INT}
_STRS = {"type": "array", "items": _STR}
_POINT = {"type": "array", "items": _STR, "minItems": 2, "maxItems": 2}

ORIGAMI = {
    "type": "object",
    "required": ["name", "d", "h", "v"],
    "properties": {"name": {"type": ["string", "null"]}, "d": _INT, "h": _STR, "v": _STR},
}

DUAL_GRAPH = {
    "type": "object",
    "required": ["genera", "edges"],
    "properties": {
        "genera": _INTS,
        "edges": {"type": "array", "items": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2}},
    },
}


def _doc(command: str, required: dict) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["schema", "command", *required],
        "properties": {"schema": {"const": SCHEMA}, "command": {"const": command}, **required},
    }


def _obj(props: dict) -> dict:
    return {"type": "object", "required": list(props), "properties": props}


_POINT_DATA = _obj({"point": _POINT, "orbit_size": _INT, "stabilizer_order": _INT, "stabilizer": _STRS})

SCHEMAS = {
    "info": _doc(
        "info",
        {
            "origami": ORIGAMI,
            "genus": _INT,
            "stratum": _INTS,
            "n_vertices": _INT,
            "vertices": {"type": "array", "items": _obj({"squares": _INTS, "cone_angle": _INT})},
            "translations": _STRS,
            "automorphism_order": _INT,
            "has_minus_identity": _BOOL,
            "canonical_form": _INTS,
        },
    ),
    "cylinders": _doc(
        "cylinders",
        {
            "origami": ORIGAMI,
            "direction": {"enum": ["h", "v"]},
            "cylinders": {"type": "array", "items": _obj({"width": _INT, "height": _INT, "squares": _INTS})},
        },
    ),
    "veech": _doc(
        "veech",
        {
            "origami": ORIGAMI,
            "index": _INT,
            "psl_index": _INT,
            "contains_minus_identity": _BOOL,
            "coset_representatives": _STRS,
            "generators": {
                "type": "array",
                "items": _obj({"word": _STR, "matrix": {"type": "array", "items": _INTS}, "verified": _BOOL}),
            },
            "cusps": {"type": "array", "items": _obj({"width": _INT, "representative": _STR})},
            "e2": _INT,
            "e3": _INT,
            "quotient_genus": _INT,
        },
    ),
    "domain": _doc(
        "domain",
        {
            "origami": ORIGAMI,
            "triangles": _INT,
            "edges": _INT,
            "vertices": _INT,
            "cusp_vertices": _INT,
            "fold_points": _INT,
            "euler_characteristic": _INT,
            "genus": _INT,
            "tiles": {"type": "array", "items": _obj({"word": _STR, "vertices": _STRS})},
            "pairings": {"type": "array", "items": _obj({"from": {"type": "array"}, "to": {"type": "array"}, "element": _STR})},
        },
    ),
    "boundary": _doc(
        "boundary",
        {
            "origami": ORIGAMI,
            "cusps": {
                "type": "array",
                "items": _obj({"width": _INT, "representative": _STR, "graph": DUAL_GRAPH, "arithmetic_genus": _INT}),
            },
            "distinct_boundary_points": _INT,
            "all_distinct": _BOOL,
        },
    ),
    "curve-verify": _doc(
        "curve-verify",
        {
            "relation": _STR,
            "mu": _STR,
            "curve": {"type": "object"},
            "checks": {"type": "array", "items": _obj({"identity": _STR, "passed": _BOOL, "value": _STR})},
            "negative_control": {"type": "object"},
            "polynomial_identities": {"type": "object"},
        },
    ),
    "locus": _doc(
        "locus",
        {
            "group_order": _INT,
            "relations": {"type": "array", "items": _obj({"relation": _STR, "holds": _BOOL})},
            "v4_normal": _BOOL,
            "quotient_order": _INT,
            "orbit_of_V": {"type": "array", "items": _obj({"name": _STR, "equation": _STR})},
            "stabilizer_of_V": _obj({"order": _INT, "abelian": _BOOL, "elements": _STRS}),
            "intersections": {"type": "array", "items": _obj({"with": _STR, "points": {"type": "array", "items": _POINT}})},
            "special_points": {"type": "object", "additionalProperties": _POINT_DATA},
            "same_orbit_q1_sqrt3_point": _BOOL,
            "points": {"type": "array", "items": _POINT_DATA},
        },
    ),
    "catalog": _doc(
        "catalog",
        {
            "catalog": {
                "type": "array",
                "items": _obj({"name": _STR, "text": _STR, "d": _INT, "genus": _INT, "stratum": _INTS}),
            }
        },
    ),
}
