"""Published JSON schemas for every CLI report payload.

The envelope carries schema_version "1"; payloads validate against the
per-subcommand schema below. Kept as plain dicts so downstream tooling can
import them without extra dependencies.
"""

SCHEMA_VERSION = "1"

_INT_ARRAY = {"type": "array", "items": {"type": "integer", "minimum": 0}}

PERIOD_PAYLOAD = {
    "type": "object",
    "properties": {
        "status": {"enum": ["tiles", "does_not_tile", "inconclusive"]},
        "period": {"type": "integer", "minimum": 1},
        "complement": _INT_ARRAY,
        "cap_used": {"type": "integer", "minimum": 0},
        "explored": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "integer"}, {"type": "string"}],
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "required": ["status", "cap_used", "explored"],
    "additionalProperties": False,
}

ANALYZE_PAYLOAD = {
    "type": "object",
    "properties": {
        "spectrum": _INT_ARRAY,
        "t1": {"type": "boolean"},
        "t2": {"type": "boolean"},
        "lcm_sa": {"type": "integer", "minimum": 1},
        "phi_lcm_divides": {"type": "boolean"},
        "diam": {"type": "integer", "minimum": 0},
        "half_bound_holds": {"type": "boolean"},
        "eq3_holds": {"type": "boolean"},
    },
    "required": ["spectrum", "t1", "t2", "lcm_sa", "phi_lcm_divides", "diam"],
    "additionalProperties": False,
}

CHECK_TILING_PAYLOAD = {
    "type": "object",
    "properties": {
        "tiles": {"type": "boolean"},
        "direct_route": {"type": "boolean"},
        "cyclotomic_route": {"type": "boolean"},
        "first_undercovered": {"type": "integer"},
        "first_overcovered": {"type": "integer"},
        "failing_divisor": {"type": "integer"},
    },
    "required": ["tiles", "direct_route", "cyclotomic_route"],
    "additionalProperties": False,
}

THEOREM2_PAYLOAD = {
    "type": "object",
    "properties": {
        "params": {
            "type": "object",
            "properties": {
                "p1": {"type": "integer"},
                "p2": {"type": "integer"},
                "p3": {"type": "integer"},
                "n": {"type": "integer"},
                "target_beta": {"type": "string"},
                "epsilon": {"type": "string"},
            },
            "required": ["p1", "p2", "p3", "n"],
        },
        "M": {"type": "integer"},
        "a": {"type": "integer"},
        "b": {"type": "integer"},
        "A": _INT_ARRAY,
        "B0": _INT_ARRAY,
        "B": _INT_ARRAY,
        "diam_A": {"type": "integer"},
        "log_ratio": {"type": "number"},
        "alpha": {"type": "string"},
        "checks": {"type": "object"},
        "exponent_report": {"type": "object"},
    },
    "required": ["params", "M", "a", "b", "A", "B0", "B", "diam_A", "checks"],
    "additionalProperties": False,
}

BOX_PAYLOAD = {
    "type": "object",
    "properties": {"set": _INT_ARRAY, "modulus": {"type": "integer", "minimum": 1}},
    "required": ["set", "modulus"],
    "additionalProperties": False,
}

COUNTEREXAMPLE_PAYLOAD = {
    "type": "object",
    "properties": {
        "set": _INT_ARRAY,
        "p": {"type": "integer"},
        "q": {"type": "integer"},
        "modulus": {"type": "integer"},
        "diam": {"type": "integer"},
        "eq3_threshold": {"type": "integer"},
        "eq3_holds": {"type": "boolean"},
    },
    "required": ["set", "p", "q", "modulus", "diam", "eq3_threshold", "eq3_holds"],
    "additionalProperties": False,
}

CORPUS_RECORD = {
    "type": "object",
    "properties": {
        "set": _INT_ARRAY,
        "period": PERIOD_PAYLOAD,
        "analysis": ANALYZE_PAYLOAD,
    },
    "required": ["set", "period", "analysis"],
    "additionalProperties": False,
}

ENVELOPE = {
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "subcommand": {"type": "string"},
        "normalization": {
            "type": "object",
            "properties": {"offset": {"type": "integer", "minimum": 0}},
            "required": ["offset"],
        },
        "payload": {"type": "object"},
        "timing_ms": {"type": "number"},
    },
    "required": ["schema_version", "subcommand", "payload", "timing_ms"],
    "additionalProperties": False,
}

PAYLOAD_SCHEMAS = {
    "analyze": ANALYZE_PAYLOAD,
    "check-tiling": CHECK_TILING_PAYLOAD,
    "min-period": PERIOD_PAYLOAD,
    "construct-theorem2": THEOREM2_PAYLOAD,
    "construct-box": BOX_PAYLOAD,
    "counterexample": COUNTEREXAMPLE_PAYLOAD,
    "corpus": CORPUS_RECORD,
}
