"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import cyclic as cyc
from . import grm, oracle, trace_codes
from .errors import (
    EnumerationTooLarge,
    InvalidParameters,
    NotFree,
    OrderOutOfRange,
    PreconditionViolated,
)
from .galois_ring import GaloisTower, build_tower, minimal_polynomial
from .ring_base import RingParams, UPoly
from .ring_linalg import Matrix, howell, kernel, rank_free
from .verify import FAIL, SUITES, format_report, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def element_ints(ring, a) -> list[int]:
    return list(ring.to_ints(a))


def format_matrix(M: Matrix) -> str:
    return M.fmt()


def poly_json(f: UPoly) -> list:
    return [element_ints(f.ring, c) for c in f.coeffs]


def matrix_json(tower: GaloisTower, M: Matrix, nu: Optional[int], labels: list, extra: dict | None = None) -> str:
    try:
        rank = rank_free(M)
    except NotFree:
        rank = None
    doc = {
        "params": {"p": tower.p, "s": tower.s, "r": tower.r, "m": tower.m},
        "nu": nu,
        "column_labels": [oracle.column_label_str(c) for c in labels],
        "rows": [[element_ints(M.ring, a) for a in row] for row in M.rows],
        "rank": rank,
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=False)


def _tower(args) -> GaloisTower:
    return build_tower(RingParams(args.p, args.s, args.r), args.m)


def cmd_tower(args) -> tuple[int, str]:
    t = _tower(args)
    h = minimal_polynomial(t, t.xi)
    lines = [
        f"L = GR({t.p}^{t.s}, {t.r})  R = GR({t.p}^{t.s}, {t.r * t.m})  q = {t.q}",
        f"h_r: {t.h_r}",
        f"g0: {t.g0}",
        f"xi: {t.R.fmt(t.xi)}",
        f"minpoly(xi): {h}",
        f"n: {t.n}",
        f"rm>=s: {str(t.rm_ge_s).lower()}",
    ]
    if not t.rm_ge_s:
        lines.append(f"warning: rm = {t.r * t.m} < s = {t.s}; zero-sum, dual, cyclic and trace results do not apply")
    if args.emit == "json":
        doc = {
            "params": {"p": t.p, "s": t.s, "r": t.r, "m": t.m},
            "h_r": list(t.h_r.coeffs),
            "g0": poly_json(t.g0),
            "minpoly": poly_json(h),
            "n": t.n,
            "rm_ge_s": t.rm_ge_s,
        }
        return EXIT_OK, json.dumps(doc, indent=2)
    return EXIT_OK, "\n".join(lines)


def _require_nu(args):
    if args.nu is None:
        raise InvalidParameters("--nu is required")


def cmd_code(args) -> tuple[int, str]:
    _require_nu(args)
    t = _tower(args)
    code = grm.standard_genmat(t, args.nu)
    M = code.genmat
    labels = code.column_labels
    if args.shortened:
        M = grm.puncture_first(M)
        labels = labels[1:]
    if args.emit == "json":
        return EXIT_OK, matrix_json(t, M, args.nu, labels)
    return EXIT_OK, format_matrix(M)


def cmd_cyclic(args) -> tuple[int, str]:
    _require_nu(args)
    t = _tower(args)
    code = cyc.grm_generator_poly(t, args.nu)
    delta = cyc.bch_root_run(t, code)
    if args.emit == "json":
        M = cyc.cyclic_genmat(code)
        extra = {"generator_poly": poly_json(code.gen), "check_poly": poly_json(code.check),
                 "bch_designed_distance": delta}
        return EXIT_OK, matrix_json(t, M, args.nu, list(range(t.n)), extra)
    return EXIT_OK, "\n".join([
        f"generator: {code.gen}",
        f"check: {code.check}",
        f"rank: {code.rank}",
        f"bch_designed_distance: {delta}",
    ])


def cmd_kerdock(args) -> tuple[int, str]:
    t = _tower(args)
    K = trace_codes.kerdock_code(t)
    if args.emit == "json":
        extra = {"generator_poly": poly_json(K.shortened.gen)}
        return EXIT_OK, matrix_json(t, K.extended, 1, grm.column_labels(t), extra)
    return EXIT_OK, "\n".join([
        f"generator: {K.shortened.gen}",
        f"rank: {K.shortened.rank}",
        "extended:",
        format_matrix(K.extended),
    ])


def cmd_dual(args) -> tuple[int, str]:
    _require_nu(args)
    t = _tower(args)
    if not t.rm_ge_s:
        raise PreconditionViolated(f"rm = {t.r * t.m} < s = {t.s}")
    mu = grm.dual_order(args.nu, t.m, t.q)
    A = grm.standard_genmat(t, args.nu).genmat
    B = grm.standard_genmat(t, mu).genmat
    ok = oracle.verify_dual(A, B) and howell(kernel(A)) == howell(B)
    verdict = "PASS" if ok else "FAIL"
    if args.emit == "json":
        return (EXIT_OK if ok else EXIT_FAIL), json.dumps({"nu": args.nu, "mu": mu, "verdict": verdict})
    return (EXIT_OK if ok else EXIT_FAIL), f"mu={mu}\nverdict: {verdict}"


def cmd_mindist(args) -> tuple[int, str]:
    _require_nu(args)
    t = _tower(args)
    if args.method == "formula":
        dp = grm.distance_params(args.nu, t.m, t.q)
        if args.emit == "json":
            return EXIT_OK, json.dumps({"Q": dp.Q, "rem": dp.rem, "designed": dp.designed})
        return EXIT_OK, f"Q={dp.Q} rem={dp.rem} designed={dp.designed}"
    M = grm.standard_genmat(t, args.nu).genmat
    if args.shortened:
        M = grm.puncture_first(M)
    report = oracle.brute_min_weight(M, guard=args.guard, distribution=args.distribution)
    if args.emit == "json":
        doc = {"min_weight": report.min_weight, "method": report.method, "enumerated": report.enumerated}
        if report.distribution is not None:
            doc["distribution"] = {str(k): v for k, v in report.distribution.items()}
        return EXIT_OK, json.dumps(doc, indent=2)
    lines = [str(report.min_weight)]
    if report.distribution is not None:
        lines += [f"{w} {c}" for w, c in report.distribution.items()]
    return EXIT_OK, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    t = _tower(args)
    checks = run_suites(t, args.suite, guard=args.guard)
    text = format_report(t, checks).rstrip("\n")
    return (EXIT_FAIL if any(c.status == FAIL for c in checks) else EXIT_OK), text


COMMANDS = {
    "tower": cmd_tower,
    "code": cmd_code,
    "cyclic": cmd_cyclic,
    "kerdock": cmd_kerdock,
    "dual": cmd_dual,
    "mindist": cmd_mindist,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galoisrm", description="Generalized Reed-Muller codes over Galois rings")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--s", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--guard", type=int, default=oracle.DEFAULT_GUARD)
        sp.add_argument("--output", "-o", default=None, help="write the artifact to this file")
        if name in ("code", "cyclic", "dual", "mindist"):
            sp.add_argument("--nu", type=int, default=None)
        emit = ["plain", "json"] + (["genmat"] if name == "code" else [])
        sp.add_argument("--emit", choices=emit, default="plain")
        if name in ("code", "mindist"):
            sp.add_argument("--shortened", action="store_true")
        if name == "mindist":
            sp.add_argument("--method", choices=["formula", "brute"], default="brute")
            sp.add_argument("--distribution", action="store_true")
        if name == "verify":
            sp.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        code, text = COMMANDS[args.command](args)
    except (InvalidParameters, OrderOutOfRange, PreconditionViolated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except EnumerationTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
