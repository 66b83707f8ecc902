"""
Command line front end.

    qtdouble verify FILE            Lie axioms, CYBE, classification
    qtdouble double FILE --model direct|extension --out OUT
    qtdouble check FILE [--double-files DIRECT EXTENSION]
    qtdouble classify FILE

Exit status: 0 pass, 1 mathematical failure, 2 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ParseError, QTDoubleError
from .fileio import dump, load
from .pipeline import MODELS, check_all, check_double_files, double_file, verify_stage

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


def _emit(rep, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(rep.to_dict(), indent=2, ensure_ascii=False) + "\n")
    else:
        out.write("\n".join(rep.lines()) + "\n")
    bad = rep.first_failure()
    if bad is not None:
        out.write(f"first failing invariant: {bad.name}\n")
        if bad.details and not as_json:
            out.write(json.dumps(bad.to_dict()["details"], ensure_ascii=False) + "\n")


def _read(path, err):
    try:
        return load(path)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
    except OSError as e:
        err.write(f"cannot read {path}: {e.strerror or e}\n")
    return None


def _staged(path, err):
    f = _read(path, err)
    if f is None:
        return None, None, None
    rep, B = verify_stage(f.lie(), f.r_tensor())
    return f, rep, B


def cmd_verify(path, as_json=False, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    f, rep, B = _staged(path, err)
    if f is None:
        return EXIT_INPUT
    _emit(rep, as_json, out)
    if B is not None and not as_json:
        out.write(f"classification: {rep['classification'].details['kind']}\n")
    return EXIT_OK if B is not None else EXIT_MATH


def cmd_classify(path, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    f, rep, B = _staged(path, err)
    if f is None:
        return EXIT_INPUT
    if B is None:
        _emit(rep, False, err)
        return EXIT_MATH
    out.write(rep["classification"].details["kind"] + "\n")
    return EXIT_OK


def cmd_double(path, model, out_path, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    f, rep, B = _staged(path, err)
    if f is None:
        return EXIT_INPUT
    if B is None:
        _emit(rep, False, err)
        return EXIT_MATH
    try:
        doc = double_file(B, model)
    except QTDoubleError as e:
        err.write(f"construction failed: {e}\n")
        return EXIT_MATH
    try:
        dump(doc, out_path)
    except OSError as e:
        err.write(f"cannot write {out_path}: {e.strerror or e}\n")
        return EXIT_INPUT
    out.write(f"wrote {model} double of dimension {doc.dim} to {out_path}\n")
    return EXIT_OK


def cmd_check(path, double_files=None, as_json=False, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    f, rep, B = _staged(path, err)
    if f is None:
        return EXIT_INPUT
    if B is None:
        _emit(rep, as_json, out)
        return EXIT_MATH
    try:
        full = check_all(B, f.form_tensor())
    except QTDoubleError as e:
        err.write(f"check failed: {type(e).__name__}: {e}\n")
        return EXIT_MATH
    rep.extend(full)
    if double_files:
        files = [_read(p, err) for p in double_files]
        if any(x is None for x in files):
            return EXIT_INPUT
        rep.extend(check_double_files(*files))
        fresh = [double_file(B, m) for m in MODELS]
        for m, got, want in zip(MODELS, files, fresh):
            rep.add(f"{m} file matches a fresh construction", got == want)
    _emit(rep, as_json, out)
    return EXIT_OK if rep.passed else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtdouble",
                                description="Drinfeld doubles of quasitriangular Lie bialgebras")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="Lie axioms, CYBE and classification")
    v.add_argument("file")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    d = sub.add_parser("double", help="write the double's structure constants")
    d.add_argument("file")
    d.add_argument("--model", choices=MODELS, required=True)
    d.add_argument("--out", required=True)
    c = sub.add_parser("check", help="run every invariant")
    c.add_argument("file")
    c.add_argument("--double-files", nargs=2, metavar=("DIRECT", "EXTENSION"),
                   help="also check two files written by 'double'")
    c.add_argument("--json", action="store_true")
    k = sub.add_parser("classify", help="triangular, factorizable or general")
    k.add_argument("file")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args.file, args.json)
    if args.command == "double":
        return cmd_double(args.file, args.model, args.out)
    if args.command == "check":
        return cmd_check(args.file, args.double_files, args.json)
    return cmd_classify(args.file)


if __name__ == "__main__":
    sys.exit(main())
