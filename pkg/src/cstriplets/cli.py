"""Command-line surface: generate tables, expand kernels, run the
verification suite, and emit machine-readable artifacts.

Output is byte-deterministic for a fixed configuration: canonical JSON with
sorted keys, exact rationals rendered as "num/den" strings, pi powers as
explicit integer fields.  Exit codes: 0 ok, 1 verification failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from functools import partial

from .groups import Family
from .kernels import KernelSpec, capelli_norm_squared, expand_kernel, hook_length_dimension
from .rankone import su11_wigner, su2_dmatrix
from .so3 import D2Character, RotorLabel, rotor_norms, rotor_wavefunction, su3_k_matrix
from . import verification

DEFAULT_CUTOFF = 6
DEFAULT_TOL = 1e-10
DEFAULT_BETA_GRID = [k * math.pi / 6 for k in range(7)]

_VECTOR_FAMILIES = {Family.SP, Family.SPR, Family.SO2N, Family.SOSTAR,
                    Family.SOP2, Family.SOPPLUS2}


class UsageError(ValueError):
    pass


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, sort_keys=True, indent=2) + "\n", out)


def _emit_csv(rows: list[list], header: list[str], out: str | None) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(v) for v in row))
    _emit("\n".join(lines) + "\n", out)


def _beta_grid(arg: str | None) -> list[float]:
    if arg is None:
        return list(DEFAULT_BETA_GRID)
    try:
        return [float(v) for v in arg.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --beta-grid: {exc}") from exc


def cmd_su2_dmatrix(args) -> int:
    if not (0 <= args.two_j <= 40):
        raise UsageError("--two-j must be between 0 and 40")
    betas = _beta_grid(args.beta_grid)
    two_m_order = list(range(args.two_j, -args.two_j - 1, -2))
    tables = [
        {"beta": beta, "d": [list(map(float, row)) for row in su2_dmatrix(args.two_j, beta)]}
        for beta in betas
    ]
    if args.format == "csv":
        rows = []
        for entry in tables:
            for i, two_m in enumerate(two_m_order):
                for j, two_n in enumerate(two_m_order):
                    rows.append([repr(entry["beta"]), two_m, two_n, repr(entry["d"][i][j])])
        _emit_csv(rows, ["beta", "two_m", "two_n", "value"], args.out)
    else:
        _emit_json(
            {
                "command": "su2-dmatrix",
                "two_j": args.two_j,
                "two_m_order": two_m_order,
                "tables": tables,
            },
            args.out,
        )
    return 0


def cmd_su11_wigner(args) -> int:
    if args.lam < 1:
        raise UsageError("--lam must be a positive integer")
    if args.max_weight < 0:
        raise UsageError("--max-weight must be >= 0")
    betas = _beta_grid(args.beta_grid)
    dim = args.max_weight + 1
    tables = [
        {
            "beta": beta,
            "matrix": [
                [su11_wigner(args.lam, mu, nu, beta) for nu in range(dim)]
                for mu in range(dim)
            ],
        }
        for beta in betas
    ]
    if args.format == "csv":
        rows = []
        for entry in tables:
            for mu in range(dim):
                for nu in range(dim):
                    rows.append([repr(entry["beta"]), mu, nu, repr(entry["matrix"][mu][nu])])
        _emit_csv(rows, ["beta", "mu", "nu", "value"], args.out)
    else:
        _emit_json(
            {
                "command": "su11-wigner",
                "lam": args.lam,
                "max_weight": args.max_weight,
                "tables": tables,
            },
            args.out,
        )
    return 0


def cmd_su3_smatrix(args) -> int:
    if args.lam < 0 or args.mu < 0 or args.lam + args.mu > 12:
        raise UsageError("need lam, mu >= 0 with lam + mu <= 12")
    if args.format == "csv":
        # CSV export is the (lam, 0) |K(L)|^2 table over all L.
        if args.mu != 0:
            raise UsageError("csv output is the (lam,0) K(L) table; requires --mu 0")
        rows = []
        for L in range(0, args.lam + 1):
            block = su3_k_matrix(args.lam, 0, L)
            if block.allowed_K:
                value = block.entry(0, 0)
                k2_over_4pi2 = value.coeff / 4
            else:
                k2_over_4pi2 = Fraction(0)
            rows.append([L, k2_over_4pi2])
        _emit_csv(rows, ["L", "K2_over_4pi2"], args.out)
        return 0
    if args.L is None:
        raise UsageError("--L is required for json output")
    if not (0 <= args.L <= 12):
        raise UsageError("need 0 <= L <= 12")
    block = su3_k_matrix(args.lam, args.mu, args.L)
    obj = block.to_json_obj()
    obj["command"] = "su3-smatrix"
    obj["null_K"] = list(block.null_K)
    _emit_json(obj, args.out)
    return 0


def cmd_rotor_basis(args) -> int:
    if args.eps2 not in (1, -1) or args.eps3 not in (1, -1):
        raise UsageError("--eps2/--eps3 must be +1 or -1")
    if args.lmax < 0:
        raise UsageError("--lmax must be >= 0")
    chi = D2Character(args.eps2, args.eps3)
    norms = rotor_norms(chi, args.lmax)
    entries = []
    for (K, L), norm in sorted(norms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        plus, minus = rotor_wavefunction(RotorLabel(K, L, 0), chi)
        entries.append(
            {
                "K": K,
                "L": L,
                "norm_squared": str(norm),
                "coeff_on_phi_K": str(plus),
                "coeff_on_phi_minus_K": str(minus),
            }
        )
    if args.format == "csv":
        rows = [
            [e["K"], e["L"], e["norm_squared"], e["coeff_on_phi_K"], e["coeff_on_phi_minus_K"]]
            for e in entries
        ]
        _emit_csv(rows, ["K", "L", "norm_squared", "coeff_on_phi_K", "coeff_on_phi_minus_K"], args.out)
    else:
        _emit_json(
            {
                "command": "rotor-basis",
                "eps2": args.eps2,
                "eps3": args.eps3,
                "l_max": args.lmax,
                "basis": entries,
            },
            args.out,
        )
    return 0


def _parse_shape(family: Family, arg: str | None) -> tuple:
    if family in (Family.SU2, Family.SU11):
        return (1, 1)
    if arg is None:
        raise UsageError(f"--shape is required for {family.value}")
    parts = tuple(int(v) for v in arg.split(",") if v.strip())
    if family in (Family.SUN, Family.SUPQ):
        if len(parts) != 2:
            raise UsageError("SU-series shapes are p,q")
        return parts
    if len(parts) != 1:
        raise UsageError(f"{family.value} shape is a single integer")
    return parts


def cmd_kernel_expand(args) -> int:
    try:
        family = Family(args.family)
    except ValueError as exc:
        raise UsageError(f"unknown family {args.family!r}") from exc
    shape = _parse_shape(family, args.shape)
    if args.cutoff < 0 or args.cutoff > 8:
        raise UsageError("kernel expansion supports 0 <= cutoff <= 8")
    try:
        sigma = Fraction(args.sigma)
    except ValueError as exc:
        raise UsageError(f"bad --sigma: {exc}") from exc
    try:
        spec = KernelSpec(family, sigma, shape, args.cutoff)
        from .kernels import spec_variables

        if len(spec_variables(spec)) > 4:
            raise UsageError("kernel expansion on the CLI is limited to four chart variables")
        kernel = expand_kernel(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    obj = kernel.to_json_obj()
    obj["command"] = "kernel-expand"
    obj["family"] = family.value
    obj["sigma"] = str(sigma)
    obj["family_shape"] = list(shape)
    _emit_json(obj, args.out)
    return 0


def cmd_capelli(args) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    rows = []
    for kappa in sorted(verification.partitions_up_to(args.max_n, 3)):
        n = sum(kappa)
        n2 = capelli_norm_squared(kappa)
        dim = hook_length_dimension(kappa)
        rows.append(
            {
                "kappa": list(kappa),
                "norm_squared": str(n2),
                "dimension": dim,
                "identity_holds": bool(Fraction(math.factorial(n)) * n2 == dim),
            }
        )
    if args.format == "csv":
        csv_rows = [
            ["|".join(map(str, r["kappa"])), r["norm_squared"], r["dimension"], r["identity_holds"]]
            for r in rows
        ]
        _emit_csv(csv_rows, ["kappa", "norm_squared", "dimension", "identity_holds"], args.out)
    else:
        _emit_json({"command": "capelli", "max_n": args.max_n, "partitions": rows}, args.out)
    return 0


def cmd_verify(args) -> int:
    tol = args.tol
    checks = list(verification.ALL_CHECKS)
    if tol != DEFAULT_TOL:
        overrides = {
            verification.check_cocycle: partial(verification.check_cocycle, tol=max(tol, 1e-12)),
            verification.check_iwasawa: partial(verification.check_iwasawa, tol=tol),
            verification.check_algebra_unitarity: partial(
                verification.check_algebra_unitarity, tol=tol
            ),
        }
        checks = [overrides.get(c, c) for c in checks]
    results = [check() for check in checks]
    report = []
    failed = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"[{mark}] {r.name}: {r.detail}")
        report.append({"name": r.name, "passed": r.passed, "detail": r.detail})
        failed += 0 if r.passed else 1
    print(f"{len(results) - failed}/{len(results)} verification suites passed")
    if args.out not in (None, "-"):
        _emit_json({"command": "verify", "results": report}, args.out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cstriplets",
        description="Coherent-state triplet tables: Wigner functions, Elliott "
        "S^L matrices, rotor bases, kernel expansions, Capelli norms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--out", default="-", help="output path ('-' for stdout)")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("su2-dmatrix", help="Wigner d^j tables on a beta grid")
    p.add_argument("--two-j", type=int, required=True)
    p.add_argument("--beta-grid", help="comma-separated beta values (default 0..pi step pi/6)")
    common(p)
    p.set_defaults(func=cmd_su2_dmatrix)

    p = sub.add_parser("su11-wigner", help="SU(1,1) discrete-series matrix elements")
    p.add_argument("--lam", type=int, required=True, help="lowest weight lambda >= 1")
    p.add_argument("--max-weight", type=int, default=4, help="largest mu, nu in the table")
    p.add_argument("--beta-grid")
    common(p)
    p.set_defaults(func=cmd_su11_wigner)

    p = sub.add_parser("su3-smatrix", help="exact Elliott overlap block S^L with its K matrix")
    p.add_argument("--lam", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--L", type=int)
    common(p)
    p.set_defaults(func=cmd_su3_smatrix)

    p = sub.add_parser("rotor-basis", help="allowed rotor labels, norms and wave-function coefficients")
    p.add_argument("--eps2", type=int, required=True, choices=(1, -1))
    p.add_argument("--eps3", type=int, required=True, choices=(1, -1))
    p.add_argument("--lmax", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_rotor_basis)

    p = sub.add_parser("kernel-expand", help="exact truncated overlap-kernel expansion")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--sigma", required=True, help="signed weight (integer or fraction)")
    p.add_argument("--shape", help="p,q for SU-series; n or p otherwise")
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    common(p, fmt=False)
    p.set_defaults(func=cmd_kernel_expand)

    p = sub.add_parser("capelli", help="Capelli norm factors and S_N dimensions")
    p.add_argument("--max-n", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_capelli)

    p = sub.add_parser("verify", help="run every module's invariant suite")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", default="-", help="also write a JSON report here")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
