#!/usr/bin/env python3
"""Validate a JSON report emitted by the adr CLI against the shipped schema.

Usage: validate_report.py [report.json]   (reads stdin when no file is given)
Exits 0 when the document validates.
"""

import json
import pathlib
import sys

import jsonschema

SCHEMA = pathlib.Path(__file__).resolve().parent.parent / "schemas" / "report.schema.json"


def main() -> int:
    if len(sys.argv) > 1:
        doc = json.loads(pathlib.Path(sys.argv[1]).read_text())
    else:
        doc = json.load(sys.stdin)
    schema = json.loads(SCHEMA.read_text())
    jsonschema.validate(doc, schema)
    print(f"valid: kind={doc.get('kind')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
