"""Command-line interface: ``hadamard6 <verb> ...``."""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import catalog
from .equivalence import EQUIV_TOL, are_equivalent, is_self_adjoint, partition
from .family import (FamilyVariant, all_quadruples, all_variants, h_block_from_alpha,
                     x6_from_alpha)
from .linalg import (DEFAULT_TOL, MatrixFormatError, format_matrix, hadamard_residual,
                     load_matrix, save_matrix)
from .region import discriminant, in_region, region_csv, sample_region
from .zauner import mub_from_alpha

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _floats(text: str, count: int | None, what: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated decimals, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"{what}: expected {count} values, got {len(vals)}")
    return vals


def _alpha(text: str) -> complex:
    re, im = _floats(text, 2, "--alpha")
    return complex(re, im)


def _require_region(a: complex) -> None:
    if in_region(a):
        return
    parts = []
    for label, val in (("D[a]", discriminant(a)), ("D[-a]", discriminant(-a))):
        if val > 1e-12:
            parts.append(f"{label}={val!r}")
    raise ValidationError("alpha outside region: " + ", ".join(parts))


def _ints(text: str, count: int, what: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if len(vals) != count:
        raise UsageError(f"{what}: expected {count} values, got {len(vals)}")
    return vals


def _emit(text: str, path: str | None, out) -> None:
    if path is None:
        out.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_construct(args, out) -> int:
    a = _alpha(args.alpha)
    _require_region(a)
    if args.block:
        m = h_block_from_alpha(a)
        if args.transpose:
            m = m.T.copy()
    else:
        m = x6_from_alpha(a, FamilyVariant.TRANSPOSE if args.transpose else FamilyVariant.STANDARD)
    text = f"# hadamard_residual {hadamard_residual(m):.3e}\n" + format_matrix(m)
    _emit(text, args.output, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    m = load_matrix(args.input)
    if m.shape[0] != m.shape[1]:
        raise ValidationError(f"matrix is not square: {m.shape[0]}x{m.shape[1]}")
    res = hadamard_residual(m)
    out.write(f"hadamard_residual {res:.3e}\n")
    out.write(f"hadamard {'yes' if res <= args.tol else 'no'} (tol={args.tol:g})\n")
    out.write(f"self_adjoint {'yes' if is_self_adjoint(m, args.tol) else 'no'}\n")
    return EXIT_OK if res <= args.tol else EXIT_INVALID


def cmd_region(args, out) -> int:
    xmin, xmax, ymin, ymax = _floats(args.bounds, 4, "--bounds")
    nx, ny = _ints(args.grid, 2, "--grid")
    try:
        samples = sample_region(xmin, xmax, ymin, ymax, nx, ny)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(region_csv(samples), args.output, out)
    return EXIT_OK


def format_witness(w) -> str:
    lines = [
        "row_perm " + " ".join(str(i) for i in w.row_perm),
        "col_perm " + " ".join(str(j) for j in w.col_perm),
        "# left_diag",
        format_matrix(w.left_diag).rstrip("\n"),
        "# right_diag",
        format_matrix(w.right_diag).rstrip("\n"),
    ]
    return "\n".join(lines) + "\n"


def cmd_equiv(args, out) -> int:
    h = load_matrix(args.a)
    k = load_matrix(args.b)
    if h.shape != k.shape or h.shape[0] != h.shape[1]:
        raise ValidationError(f"matrices must be square and of equal size: {h.shape} vs {k.shape}")
    w = are_equivalent(h, k, args.tol)
    if w is None:
        out.write(f"INEQUIVALENT at tol={args.tol:g}\n")
    else:
        out.write("EQUIVALENT\n" + format_witness(w))
    return EXIT_OK


_CATALOG_ARITY = {"dita_d": 1, "bn_b": 3, "fourier": 0, "gfourier": 2}


def cmd_catalog(args, out) -> int:
    n = _CATALOG_ARITY[args.name]
    params = _floats(args.params, n, "--params") if n else []
    if not n and args.params:
        raise UsageError(f"--params is not accepted for {args.name}")
    ph = [complex(np.exp(1j * p)) for p in params]
    if args.name == "dita_d":
        m, w = catalog.dita_D(*ph), (catalog.dita_circulant_witness(*ph) if args.witness else None)
    elif args.name == "bn_b":
        m, w = catalog.bn_B(*ph), (catalog.bn_circulant_witness(*ph) if args.witness else None)
    elif args.name == "fourier":
        m, w = catalog.fourier6(), None
    else:
        m, w = catalog.generalized_fourier(*params), None
    if args.witness and w is None:
        raise UsageError("--witness is only available for dita_d and bn_b")
    out.write(format_matrix(m))
    if w is not None:
        out.write("# witness\n" + format_witness(w) + "# expected\n" + format_matrix(w.expected))
    return EXIT_OK


def cmd_mub(args, out) -> int:
    a = _alpha(args.alpha)
    _require_region(a)
    triplet = mub_from_alpha(a)
    save_matrix(triplet.z1, f"{args.output}z1.mat")
    save_matrix(triplet.z2, f"{args.output}z2.mat")
    for line in triplet.report.lines(["I", "Z1", "Z2"]):
        out.write(line + "\n")
    out.write(f"reconstruction |Z1^-1 Z2 - T|: {triplet.reconstruction_error:.3e}\n")
    return EXIT_OK if triplet.is_valid() else EXIT_INVALID


def cmd_variants(args, out) -> int:
    a = _alpha(args.alpha)
    _require_region(a)
    quads = all_quadruples(a)
    mats = all_variants(a)
    if args.output:
        os.makedirs(args.output, exist_ok=True)
    for idx, m in enumerate(mats):
        if args.output:
            save_matrix(m, os.path.join(args.output, f"variant_{idx:02d}.mat"))
        else:
            out.write(f"# variant {idx}\n" + format_matrix(m))
    std = x6_from_alpha(a)
    tr = x6_from_alpha(a, FamilyVariant.TRANSPOSE)
    classes = partition(mats + [std, tr], args.tol)
    out.write(f"# {len(quads)} variants, {len([c for c in classes if any(i < 36 for i in c)])} classes\n")
    for cls in classes:
        tags = []
        if 36 in cls:
            tags.append("standard")
        if 37 in cls:
            tags.append("transpose")
        members = [i for i in cls if i < 36]
        label = "+".join(tags) if tags else "other"
        out.write(f"class {label}: {' '.join(str(i) for i in members)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hadamard6", description="Order-6 complex Hadamard family X6(alpha) toolkit")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("construct", help="build X6(alpha)")
    c.add_argument("--alpha", required=True, help="re,im")
    c.add_argument("--transpose", action="store_true")
    c.add_argument("--block", action="store_true", help="emit the 2-circulant block form instead")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="Hadamard residual and self-adjointness of a matrix file")
    v.add_argument("-i", "--input", required=True)
    v.add_argument("--tol", type=float, default=DEFAULT_TOL)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("region", help="classify a grid of alpha values, CSV output")
    r.add_argument("--bounds", required=True, help="xmin,xmax,ymin,ymax")
    r.add_argument("--grid", required=True, help="nx,ny")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_region)

    e = sub.add_parser("equiv", help="exhaustive Hadamard equivalence test")
    e.add_argument("-a", required=True)
    e.add_argument("-b", required=True)
    e.add_argument("--tol", type=float, default=EQUIV_TOL)
    e.set_defaults(func=cmd_equiv)

    k = sub.add_parser("catalog", help="known matrices; parameters are phase angles in radians")
    k.add_argument("--name", required=True, choices=sorted(_CATALOG_ARITY))
    k.add_argument("--params", default="")
    k.add_argument("--witness", action="store_true")
    k.set_defaults(func=cmd_catalog)

    m = sub.add_parser("mub", help="MUB triplet from X6(alpha)")
    m.add_argument("--alpha", required=True)
    m.add_argument("-o", "--output", default="", help="prefix for z1.mat and z2.mat")
    m.set_defaults(func=cmd_mub)

    s = sub.add_parser("variants", help="all 36 root choices and their equivalence classes")
    s.add_argument("--alpha", required=True)
    s.add_argument("-o", "--output", help="directory for variant_NN.mat files")
    s.add_argument("--tol", type=float, default=EQUIV_TOL)
    s.set_defaults(func=cmd_variants)
    return p


_VALUE_FLAGS = ("--alpha", "--bounds", "--params")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "--bounds -1,1,-1,1" as two flags
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and (nxt[1:2].isdigit() or nxt[1:2] == "."):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except ValidationError as exc:
        err.write(f"{exc}\n")
        return EXIT_INVALID
    except (OSError, MatrixFormatError) as exc:
        err.write(f"{exc}\n")
        return EXIT_IO
    except ValueError as exc:
        err.write(f"{exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
