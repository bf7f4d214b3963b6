"""Command-line front end.

Exit codes are a stable contract:
  0  success
  1  I/O, JSON or document-shape error (including wrong document kind)
  2  domain invalidity (integrability/surjectivity violation, infeasible
     generator spec, irrational spectrum in exact mode, ...)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import jsonio
from .blowup import MonadDataBlowup, validate
from .errors import (DocumentError, InfeasibleSpec, IntegrabilityViolation,
                     IrrationalSpectrum, MonadcalcError, SurjectivityViolation)
from .generate import FAMILIES, GenSpec, generate
from .jsonio import _matrix_to_obj  # canonical matrix encoding for reports
from .p2 import MonadDataP2, canonical_reduction, validate_p2
from .stratify import classify_s0, classify_s0_oracle, pushforward
from .trivialize import NotConcentrated, verify_trivialization

EXIT_OK = 0
EXIT_IO = 1
EXIT_DOMAIN = 2


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _fail_io(message: str) -> int:
    print(json.dumps({"error": message}, sort_keys=True), file=sys.stderr)
    return EXIT_IO


def _load(path, kind=None):
    """Returns the instance or raises DocumentError (incl. kind mismatch)."""
    inst = jsonio.read_file(path)
    if kind == "p2" and not isinstance(inst, MonadDataP2):
        raise DocumentError("expected a 'p2' document")
    if kind == "blowup" and not isinstance(inst, MonadDataBlowup):
        raise DocumentError("expected a 'blowup' document")
    return inst


def _validate_instance(inst):
    """(report dict, exit code) for either document kind."""
    try:
        if isinstance(inst, MonadDataBlowup):
            validate(inst)
        else:
            validate_p2(inst)
    except IntegrabilityViolation as exc:
        return ({"valid": False, "error": "IntegrabilityViolation",
                 "defect": _matrix_to_obj(exc.defect)}, EXIT_DOMAIN)
    except SurjectivityViolation as exc:
        return ({"valid": False, "error": "SurjectivityViolation",
                 "cokernel_dim": exc.cokernel_dim}, EXIT_DOMAIN)
    return ({"valid": True}, EXIT_OK)


def cmd_validate(args) -> int:
    try:
        inst = _load(args.path)
    except DocumentError as exc:
        return _fail_io(str(exc))
    report, code = _validate_instance(inst)
    _emit(report)
    return code


def _witness_obj(witness):
    if witness is None:
        return None
    if isinstance(witness, tuple):
        return list(witness)
    return witness


def cmd_classify(args) -> int:
    try:
        mt = _load(args.path, kind="blowup")
    except DocumentError as exc:
        return _fail_io(str(exc))
    report, code = _validate_instance(mt)
    if code != EXIT_OK:
        _emit(report)
        return code
    sr = classify_s0(mt)
    out = {
        "is_s0": sr.is_s0,
        "nilpotency": {name: idx for name, idx in sr.nilpotency},
        "krylov_dim": sr.krylov_dim,
        "witness": _witness_obj(sr.witness),
    }
    if args.oracle_maxlen is not None:
        oracle = classify_s0_oracle(mt, args.oracle_maxlen)
        out["oracle"] = oracle
        out["oracle_agrees"] = (oracle == sr.is_s0)
    _emit(out)
    return EXIT_OK


def cmd_pushforward(args) -> int:
    try:
        mt = _load(args.path, kind="blowup")
    except DocumentError as exc:
        return _fail_io(str(exc))
    report, code = _validate_instance(mt)
    if code != EXIT_OK:
        _emit(report)
        return code
    m = pushforward(mt)
    jsonio.write_file(args.out, m)
    _emit({"written": str(args.out), "kind": "p2", "k": m.k, "r": m.r})
    return EXIT_OK


def _point_obj(p, approx: bool):
    if approx:
        z1, z2 = complex(p[0]), complex(p[1])
        return [[z1.real, z1.imag], [z2.real, z2.imag]]
    return [{"re": p[0].re_str(), "im": p[0].im_str()},
            {"re": p[1].re_str(), "im": p[1].im_str()}]


def cmd_reduce(args) -> int:
    try:
        m = _load(args.path, kind="p2")
    except DocumentError as exc:
        return _fail_io(str(exc))
    report, code = _validate_instance(m)
    if code != EXIT_OK:
        _emit(report)
        return code
    mode = "float" if args.use_float else "exact"
    try:
        du = canonical_reduction(m, eigen_mode=mode)
    except IrrationalSpectrum as exc:
        _emit({"error": "IrrationalSpectrum", "detail": str(exc)})
        return EXIT_DOMAIN
    _emit({
        "l": du.l,
        "total_charge": du.total_charge,
        "points": [_point_obj(p, du.approx) for p in du.points],
        "approx": du.approx,
    })
    return EXIT_OK


def cmd_trivialize(args) -> int:
    try:
        m = _load(args.path, kind="p2")
    except DocumentError as exc:
        return _fail_io(str(exc))
    report, code = _validate_instance(m)
    if code != EXIT_OK:
        _emit(report)
        return code
    try:
        ok = verify_trivialization(m, n_samples=args.samples)
    except NotConcentrated as exc:
        _emit({"ok": False, "error": "NotConcentrated", "detail": str(exc)})
        return EXIT_DOMAIN
    _emit({"ok": ok, "samples": args.samples})
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_generate(args) -> int:
    try:
        spec = GenSpec(k=args.k, r=args.r, seed=args.seed, family=args.family)
        inst = generate(spec)
    except InfeasibleSpec as exc:
        _emit({"error": "InfeasibleSpec", "detail": str(exc)})
        return EXIT_DOMAIN
    jsonio.write_file(args.out, inst)
    _emit({"written": str(args.out), "family": args.family,
           "k": args.k, "r": args.r, "seed": args.seed})
    return EXIT_OK


def _process_one(path: str) -> dict:
    """Batch worker: validate, then classify when the kind allows it."""
    out = {"file": os.path.basename(path)}
    try:
        inst = _load(path)
    except DocumentError as exc:
        out.update(status="parse_error", error=str(exc))
        return out
    report, code = _validate_instance(inst)
    if code != EXIT_OK:
        out.update(status="invalid", error=report.get("error"))
        return out
    out["status"] = "valid"
    if isinstance(inst, MonadDataBlowup):
        sr = classify_s0(inst)
        out["is_s0"] = sr.is_s0
        out["witness"] = _witness_obj(sr.witness)
    return out


def cmd_batch(args) -> int:
    try:
        files = sorted(
            os.path.join(args.dir, f) for f in os.listdir(args.dir)
            if f.endswith(".json"))
    except OSError as exc:
        return _fail_io(str(exc))
    if not files:
        return _fail_io(f"no .json documents in {args.dir}")
    jobs = args.jobs or os.cpu_count() or 1
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_process_one, files))
    else:
        results = [_process_one(f) for f in files]
    for res in results:
        _emit(res)
    counts = {"valid": 0, "invalid": 0, "parse_error": 0}
    for res in results:
        counts[res["status"]] += 1
    print(f"summary: {counts['valid']} valid, {counts['invalid']} invalid, "
          f"{counts['parse_error']} errors in {len(files)} files")
    if counts["parse_error"]:
        return EXIT_IO
    if counts["invalid"]:
        return EXIT_DOMAIN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monadcalc",
        description="Exact monad calculus for framed sheaves on P2 and its blowup")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document's validity conditions")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="stratum classification of blowup data")
    p.add_argument("path")
    p.add_argument("--oracle-maxlen", type=int, default=None,
                   help="also run the exhaustive word oracle up to this length")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pushforward", help="push blowup data down to the plane")
    p.add_argument("path")
    p.add_argument("out")
    p.set_defaults(func=cmd_pushforward)

    p = sub.add_parser("reduce", help="canonical reduction to bundle + points")
    p.add_argument("path")
    p.add_argument("--float", dest="use_float", action="store_true",
                   help="approximate eigenvalue fallback (points marked approx)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("trivialize", help="verify the explicit trivialization")
    p.add_argument("path")
    p.add_argument("--samples", type=int, default=10)
    p.set_defaults(func=cmd_trivialize)

    p = sub.add_parser("generate", help="write a seeded family instance")
    p.add_argument("out")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("batch", help="validate/classify a directory of documents")
    p.add_argument("dir")
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers (default: number of processors)")
    p.set_defaults(func=cmd_batch)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MonadcalcError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
