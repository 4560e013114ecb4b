#!/usr/bin/env python3
"""Validates fixtures and golden CLI transcripts against the published schemas."""

import argparse
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

# Fixture and golden-case names mapped to the schema their JSON must satisfy.
DATA = {
    "TRI.json": "theory", "UM1.json": "theory", "P5.json": "theory", "TRI_bad_neutral.json": "theory",
    "CVX1.json": "convex_theory",
    "f.json": "valuation", "g.json": "valuation", "root.json": "valuation", "p5_f.json": "valuation",
    "um1_f.json": "valuation", "um1_g.json": "valuation",
    "copy2_map.json": "mediating_map", "aug_b_map.json": "mediating_map", "swap_map.json": "mediating_map",
    "product_spec.json": "family_spec",
}

GOLDEN_PREFIXES = [
    ("validate_", "validation_report"),
    ("order_", "order_report"),
    ("yield_", "monotone"), ("cost_", "monotone"), ("pullback_", "monotone"), ("contraction_", "monotone"),
    ("convex_classify", "classify_report"),
    ("convex_", "monotone"),
    ("compare_", "comparison_report"),
    ("dist_", "dist_report"),
    ("gen_convex", "convex_theory"),
    ("gen_valuation", "valuation"), ("gen_monotone_valuation", "valuation"),
    ("gen_", "theory"),
    ("check_", "check_report"),
]


def schema_for(name):
    for prefix, schema in GOLDEN_PREFIXES:
        if name.startswith(prefix):
            return schema
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--data", required=True, type=pathlib.Path)
    ap.add_argument("--golden", required=True, type=pathlib.Path)
    args = ap.parse_args()

    schemas = {}
    registry = Registry()
    for path in sorted(args.schemas.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.name.removesuffix(".schema.json")] = doc
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))

    def check(label, doc, schema):
        errors = list(jsonschema.Draft202012Validator(schemas[schema], registry=registry).iter_errors(doc))
        for e in errors:
            print(f"{label}: {schema}: {e.message} at {list(e.absolute_path)}")
        return not errors

    ok = True
    checked = 0
    for name, schema in DATA.items():
        ok &= check(name, json.loads((args.data / name).read_text()), schema)
        checked += 1
    for path in sorted(args.golden.glob("*.out")):
        text = path.read_text()
        if not text.startswith("{"):
            continue  # error transcripts and DOT output
        schema = schema_for(path.stem)
        if schema is None:
            print(f"{path.name}: no schema assigned")
            ok = False
            continue
        ok &= check(path.name, json.loads(text.split("--- stderr ---")[0]), schema)
        checked += 1
    print(f"{checked} documents checked")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
