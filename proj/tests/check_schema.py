"""Run every divcalc subcommand with --json and validate the output.

usage: check_schema.py <divcalc binary> <schema dir>
"""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

binary = sys.argv[1]
schema_dir = Path(sys.argv[2])


def load(name):
    return json.loads((schema_dir / name).read_text())


report_schema = load("run_report.schema.json")
lattice_schema = load("lattice.schema.json")
config_schema = load("isotropic_config.schema.json")
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in (report_schema, lattice_schema, config_schema)
)
validator = jsonschema.Draft202012Validator(report_schema, registry=registry)

tmp = Path(tempfile.mkdtemp())
config = {"name": "g8", "labels": ["E", "E1", "E2"], "pairs": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]}
jsonschema.validate(config, config_schema)
(tmp / "g8.json").write_text(json.dumps(config))
lattice = {
    "name": "cone",
    "basis": ["E", "Delta"],
    "gram": [[0, 1], [1, -2]],
    "canonical": [0, 0],
    "ample_ref": [3, 1],
    "chi": 1,
    "effective": ["E"],
    "kind": "enriques",
}
jsonschema.validate(lattice, lattice_schema)
(tmp / "cone.json").write_text(json.dumps(lattice))
cfg = str(tmp / "g8.json")

runs = [
    ["pair", "H", "G1", "--surface", "sigma2"],
    ["self", "-2K", "--surface", "sigma3"],
    ["genus", "--surface", "sigma3", "--curve", "6H-2G1-2G2-2G3"],
    ["chi", "3E+2E1"],
    ["reflect", "E+E1+R1", "R1"],
    ["hodge", "2E+E1", "--curve", "3E+E1+E2", "--config", cfg],
    ["lemma10", "E", "2E"],
    ["mod4", "H", "--curve", "6H-2G1", "--surface", "sigma1"],
    ["phi", "3E+E1+E2", "--config", cfg],
    ["phi", "2E+E1+R2", "--box", "2"],
    ["isotropic", "E+Delta", "--box", "1", "--surface", "cone"],
    ["quasinef", "2E+2Delta", "--nodal", "Delta", "--surface", "cone"],
    ["enumerate", "--surface", "sigma3", "--k", "6"],
    ["enumerate", "--surface", "blq", "--curve", "4C0+7f", "--k", "4", "--rejections"],
    ["destab"],
    ["gonality", "--l2", "30", "--phi", "5"],
    ["cliff", "--cliff", "3", "--h0-2k-minus-m", "1"],
    ["gaussian", "--l2", "12", "--h0-residual", "1"],
    ["gaussian", "--l2", "10", "--h0-residual", "1"],
    ["corank", "--g", "3", "--h0", "4K-M=5", "--cork-mu", "0", "--h1-m", "0"],
    ["bel", "--g", "7", "--deg-m", "8", "--h1-m", "0", "--h0-2k-minus-m", "0", "--cliff", "2"],
    ["degree", "--g", "10", "--deg-m", "36", "--type", "trigonal"],
    ["tetragonal", "--h0-2k-minus-m", "0", "--h0-b2", "2", "--h1-zero", "--mu-surjective"],
    ["scroll", "--g", "9", "--b1", "3"],
    ["b2rule", "--l2", "12", "--phi", "2"],
    ["verify", "--all"],
    ["catalog"],
    ["surface", "list"],
    ["surface", "show", "enriques"],
    ["surface", "show", "--surface", "cone"],
]

env = dict(os.environ, DIVCALC_SURFACE_PATH=str(tmp))
failures = 0
for args in runs:
    proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True, env=env)
    label = " ".join(args)
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    try:
        report = json.loads(proc.stdout)
    except json.JSONDecodeError as exc:
        print(f"FAIL {label}: not JSON ({exc})")
        failures += 1
        continue
    errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
    if errors:
        failures += 1
        print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
    else:
        print(f"ok   {label}")

sys.exit(1 if failures else 0)
