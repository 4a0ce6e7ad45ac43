"""Published JSON schemas for the wire formats."""

_SCALAR = {"type": "string"}

DECOMPOSITION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "waring/decomposition.json",
    "type": "object",
    "required": ["degree", "summands", "exactness"],
    "properties": {
        "degree": {"type": "integer", "minimum": 0},
        "summands": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["lambda", "alpha", "beta"],
                "properties": {"lambda": _SCALAR, "alpha": _SCALAR, "beta": _SCALAR},
            },
        },
        "exactness": {
            "oneOf": [
                {"const": "exact"},
                {
                    "type": "object",
                    "required": ["numeric"],
                    "properties": {
                        "numeric": {
                            "type": "object",
                            "required": ["residual"],
                            "properties": {"residual": {"type": "string"}},
                        }
                    },
                },
            ]
        },
    },
}

CERTIFICATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "waring/certificate.json",
    "type": "object",
    "required": ["claim", "witness", "lower_bound_evidence"],
    "properties": {
        "claim": {
            "type": "object",
            "required": ["type"],
            "properties": {
                "type": {"enum": ["complex_rank", "real_rank", "real_rank_in"]},
                "value": {"type": "integer"},
                "lo": {"type": "integer"},
                "hi": {"type": "integer"},
            },
        },
        "witness": {"type": ["string", "null"]},
        "witness_real_rooted": {"type": "boolean"},
        "lower_bound_evidence": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind"],
                "properties": {"kind": {"type": "string"}},
            },
        },
    },
}

RESPONSE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "waring/response.json",
    "type": "object",
    "required": ["status"],
    "properties": {
        "status": {"enum": ["ok", "error"]},
        "result": {"type": "object"},
        "error": {"type": "string"},
        "diagnostics": {"type": "array", "items": {"type": "string"}},
    },
    "allOf": [
        {
            "if": {"properties": {"status": {"const": "ok"}}},
            "then": {"required": ["result", "diagnostics"]},
        },
        {
            "if": {"properties": {"status": {"const": "error"}}},
            "then": {"required": ["error"]},
        },
    ],
}
