"""Validate coisocap --format json output against docs/output.schema.json."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

CASES = [
    (["kfun", "K", "16"], "kfun_value"),
    (["kfun", "keq", "3", "2"], "kfun_value"),
    (["kfun", "kk", "4", "9/2"], "kfun_value"),
    (["table", "K", "1", "20"], "table_value"),
    (["table", "keq", "1", "6", "--d", "7"], "table_value"),
    (["table", "kk", "2", "5", "--d", "11/2"], "table_value"),
    (["bound", "energy", "S(2;pi) x S(2;pi)"], None),
    (["bound", "energy", "S(2;pi) x V(2,3;pi)"], None),
    (["bound", "energy", "C(T2,1;0;asph)"], None),
    (["bound", "capacity", "4", "4"], None),
    (["bound", "squeeze", "9", "9"], None),
    (["bound", "width", "2pi", "--closed-aspherical"], None),
    (["bound", "lagrangian", "4", "4"], "lagrangian_value"),
    (["spectrum", "S(2;pi/2) x S(3;pi/3)"], "spectrum_value"),
    (["spectrum", "C(T2,1;0;asph)"], "spectrum_value"),
    (["verify", "all", "--nmax", "5"], "verify_value"),
]

failed = 0
for args, value_def in CASES:
    proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
    label = " ".join(args)
    try:
        if proc.returncode != 0:
            raise ValueError(f"exit {proc.returncode}: {proc.stderr.strip()}")
        doc = json.loads(proc.stdout)
        validator.validate(doc)
        if value_def is not None:
            jsonschema.validate(doc["value"], {"$ref": f"#/$defs/{value_def}", "$defs": schema["$defs"]})
        print(f"ok   {label}")
    except (ValueError, jsonschema.ValidationError) as e:
        failed += 1
        print(f"FAIL {label}: {e}")
sys.exit(1 if failed else 0)
