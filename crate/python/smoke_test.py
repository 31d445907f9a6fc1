"""Smoke test for the Python extension and the CLI JSON output.

Build first:
    cargo build -p bcdmod-py --features extension-module
    cargo build -p bcdmod
then run `python3 python/smoke_test.py`.
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
TARGET = ROOT / "target" / os.environ.get("BCDMOD_PROFILE", "debug")


def load_module():
    lib = os.environ.get("BCDMOD_PY_LIB")
    if lib is None:
        for name in ("libbcdmod_py.so", "libbcdmod_py.dylib", "bcdmod_py.dll"):
            if (TARGET / name).exists():
                lib = str(TARGET / name)
                break
    if lib is None:
        sys.exit("extension not built; run cargo build -p bcdmod-py --features extension-module")
    tmp = tempfile.mkdtemp()
    ext = ".pyd" if lib.endswith(".dll") else ".so"
    shutil.copy(lib, os.path.join(tmp, "bcdmod" + ext))
    sys.path.insert(0, tmp)
    import bcdmod

    return bcdmod


def check_module(bm):
    z = bm.root(12, 1)
    assert (z ** 12) == bm.integer(12, 1)
    assert (z ** 6) == bm.integer(12, -1)
    assert ((z + z) / z) == bm.integer(12, 2)

    assert [bm.verlinde_c(1, 2, g) for g in range(7)] == ["1", "3", "10", "36", "136", "528", "2080"]

    c12 = bm.Spec("C", 1, 2)
    assert c12.labels() == [[], [1], [2]]
    assert c12.verdict() == "modular"
    assert c12.refinement() == "spin"
    assert c12.qdim([]).to_int() == "1"
    assert c12.verlinde(3, "generic") == "36"
    lhs, rhs, ok = c12.graded_hopf(0)
    assert ok and lhs == rhs

    s11 = bm.Spec("C", 1, 1).smatrix()
    assert [[x.to_int() for x in r] for r in s11] == [["1", "-1"], ["-1", "-1"]]

    assert bm.Spec("B-", 1, 1).verdict() == "not_modularizable"
    d22 = bm.Spec("D", 2, 2)
    assert d22.verdict() == "modularizable"
    assert len(d22.transparent()) == 4
    assert d22.verlinde(2, "closed", 4) == d22.verlinde(2, "generic", 4)
    kinds = {k for _, k, _ in d22.modularize()}
    assert "undetermined" in kinds

    assert all(p for _, p, _ in bm.Spec("C", 2, 1).check())

    try:
        bm.Spec("C", 0, 1)
    except ValueError:
        pass
    else:
        raise AssertionError("n = 0 accepted")


def check_cli():
    exe = TARGET / "bcdmod"
    if not exe.exists():
        print("skipping CLI checks: binary not built")
        return
    try:
        import jsonschema
    except ImportError:
        jsonschema = None
    schema = json.loads((ROOT / "crates" / "bcdmod" / "schema" / "output.schema.json").read_text())
    runs = [
        ["labels", "--series", "C", "--n", "1", "--k", "2"],
        ["dims", "--series", "BD", "--n", "2", "--k", "1"],
        ["verlinde", "--series", "C", "--n", "1", "--k", "2", "--genus", "0..6"],
        ["modularize", "--series", "D", "--n", "1", "--k", "2", "--m-choice", "all=4"],
        ["smatrix", "--series", "C", "--n", "1", "--k", "1"],
        ["refine", "--series", "C", "--n", "2", "--k", "2"],
    ]
    for args in runs:
        out = [subprocess.run([str(exe), *args, "--format", "json"], capture_output=True, check=True).stdout
               for _ in range(2)]
        assert out[0] == out[1], f"nondeterministic output for {args}"
        doc = json.loads(out[0])
        if jsonschema is not None:
            jsonschema.validate(doc, schema)
    rows = json.loads(subprocess.run([str(exe), *runs[2], "--format", "json", "--method", "closed"],
                                     capture_output=True, check=True).stdout)["rows"]
    assert [r["d_g"] for r in rows] == ["1", "3", "10", "36", "136", "528", "2080"]
    bad = subprocess.run([str(exe), "labels", "--series", "Q", "--n", "1", "--k", "1"], capture_output=True)
    assert bad.returncode == 1


if __name__ == "__main__":
    check_module(load_module())
    check_cli()
    print("smoke test passed")
