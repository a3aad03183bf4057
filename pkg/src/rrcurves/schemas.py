"""JSON Schemas (draft 2020-12) for every CLI report, keyed by subcommand."""

_int_or_null = {"type": ["integer", "null"]}
_str_or_null = {"type": ["string", "null"]}
_verdict = {"enum": ["primitive", "proper_power", "neither"]}

_form = {
    "type": "object",
    "required": ["family", "params"],
    "properties": {
        "family": {"type": "string"},
        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
    },
}

_substitution = {
    "type": "object",
    "required": ["A", "B"],
    "properties": {"A": {"type": "string"}, "B": {"type": "string"}},
}


def _report(props: dict, required: list[str]) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["schema_version", "command", "elapsed_ms", *required],
        "properties": {
            "schema_version": {"const": 1},
            "command": {"type": "string"},
            "elapsed_ms": {"type": "number", "minimum": 0},
            **props,
        },
    }


REPORT_SCHEMAS = {
    "classify": _report(
        {
            "input": {"type": "string"},
            "verdict": _verdict,
            "exponent": _int_or_null,
            "root": _str_or_null,
            "trace": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["word", "unit", "e", "substitution", "result"],
                    "properties": {
                        "word": {"type": "string"},
                        "invert_a": {"type": "boolean"},
                        "invert_b": {"type": "boolean"},
                        "unit": {"enum": ["A", "B"]},
                        "e": {"type": "integer", "minimum": 1},
                        "substitution": _substitution,
                        "result": {"type": "string"},
                    },
                },
            },
        },
        ["input", "verdict", "exponent", "trace"],
    ),
    "oracle": _report(
        {
            "input": {"type": "string"},
            "verdict": _verdict,
            "exponent": _int_or_null,
            "root": _str_or_null,
            "minimal_word": {"type": "string"},
            "minimal_length": {"type": "integer", "minimum": 1},
            "trace": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "A", "B"],
                    "properties": {"name": {"type": "string"}, "A": {"type": "string"}, "B": {"type": "string"}},
                },
            },
        },
        ["input", "verdict", "exponent", "minimal_word", "trace"],
    ),
    "reduce": _report(
        {"input": {"type": "string"}, "reduced": {"type": "string"}, "cyclic": _str_or_null},
        ["input", "reduced", "cyclic"],
    ),
    "classify-form": _report(
        {
            "input": _form,
            "class": {
                "type": "object",
                "required": ["kind"],
                "properties": {
                    "kind": {"enum": ["primitive", "proper_power", "seifert_d", "seifert_m", "neither"]},
                    "indexes": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                    "index": _int_or_null,
                    "exponent": _int_or_null,
                    "root": _str_or_null,
                    "note": {"type": "string"},
                },
            },
            "word": _str_or_null,
        },
        ["input", "class", "word"],
    ),
    "realize": _report(
        {
            "input": _form,
            "word": {"type": "string"},
            "abelianization": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        ["input", "word", "abelianization"],
    ),
    "fiber-types": _report(
        {
            "input": _form,
            "fiber_types": {
                "type": "array",
                "minItems": 2,
                "maxItems": 2,
                "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            },
        },
        ["input", "fiber_types"],
    ),
    "homology": _report(
        {
            "input": {"type": "array", "items": {"type": "string"}},
            "h1": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
        },
        ["input", "h1"],
    ),
    "sweep": _report(
        {
            "max_len": {"type": "integer", "minimum": 1},
            "mode": {"const": "equivalence"},
            "checked": {"type": "integer", "minimum": 0},
            "by_length": {"type": "object", "additionalProperties": {"type": "integer"}},
            "verdict_counts": {"type": "object", "additionalProperties": {"type": "integer"}},
            "mismatches": {"type": "integer", "minimum": 0},
            "counterexamples": {"type": "array"},
        },
        ["max_len", "mode", "checked", "mismatches"],
    ),
}

ERROR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "command", "error", "message"],
    "properties": {
        "schema_version": {"const": 1},
        "command": {"type": "string"},
        "error": {"type": "string"},
        "message": {"type": "string"},
        "offset": {"type": "integer"},
        "expected": {"type": "array", "items": {"type": "string"}},
    },
}
