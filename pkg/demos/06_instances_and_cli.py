"""Instance files and the command-line workflow.

Instances travel as JSON documents (schema_version "1") with every
scalar a pair of exact "p/q" strings, so serialization round-trips
bit-exactly.  The `monadcalc` CLI wraps the library with a stable
exit-code contract: 0 success, 1 I/O or document error, 2 domain
invalidity.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from monadcalc import GenSpec, generate, jsonio


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "monadcalc", *args],
                          capture_output=True, text=True)
    print(f"$ monadcalc {' '.join(args)}\n  exit {proc.returncode}: "
          f"{proc.stdout.strip() or proc.stderr.strip()}")
    return proc


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    # Seeded generation is deterministic down to the byte.
    inst = generate(GenSpec(k=2, r=2, seed=42, family="blowup_generic"))
    text = jsonio.dumps(inst)
    print("document head:")
    print("\n".join(text.splitlines()[:6]), "\n  ...")
    assert jsonio.dumps(jsonio.loads(text)) == text
    print("round trip is bit-exact\n")

    run("generate", str(tmp / "good.json"), "--family", "blowup_generic",
        "--k", "2", "--r", "2", "--seed", "42")
    run("generate", str(tmp / "bad.json"), "--family", "invalid_integrability",
        "--k", "2", "--r", "1", "--seed", "1")

    run("validate", str(tmp / "good.json"))      # exit 0
    run("validate", str(tmp / "bad.json"))       # exit 2
    (tmp / "broken.json").write_text("{")
    run("validate", str(tmp / "broken.json"))    # exit 1

    run("classify", str(tmp / "good.json"), "--oracle-maxlen", "4")
    run("pushforward", str(tmp / "good.json"), str(tmp / "pushed.json"))
    run("reduce", str(tmp / "pushed.json"), "--float")
    run("batch", str(tmp), "--jobs", "2")
