"""Validate CLI output against the shipped JSON schemas."""
import glob
import json
import os
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], sys.argv[2]
worked = ["--zeros", "18,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16", "--set", "17=6"]
ray = ["--zeros", ",".join(str(i) for i in range(18)), "--set", "18=2"]

schemas, registry = {}, Registry()
for path in glob.glob(os.path.join(schema_dir, "*.json")):
    with open(path) as f:
        s = json.load(f)
    schemas[s["$id"]] = s
    registry = registry.with_resource(s["$id"], Resource.from_contents(s))

cases = [
    (["ias", "build", *worked], "ias.schema.json", None),
    (["ias", "build", *ray], "ias.schema.json", None),
    (["label", *worked], "label.schema.json", None),
    (["kulikov", *worked], "kulikov.schema.json", None),
    (["kulikov", *ray], "kulikov.schema.json", None),
    (["classify", "0,1,5"], "classify.schema.json", None),
    (["reduce", *worked], "avector.schema.json", "result"),
]
for args, schema, key in cases:
    out = json.loads(subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout)
    if key:
        out = out[key]
    jsonschema.Draft7Validator(schemas[schema], registry=registry).validate(out)
    print("valid:", " ".join(args[:2]), "->", schema)
