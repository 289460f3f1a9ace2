"""Command-line front end: ``mixoa {verify,bounds,cr,additive,polybound}``.

Exit status: 0 verified/computed, 1 verification failed, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import additive as add
from .alphabet import (FormatError, check_strength, format_levels, format_oa, is_simple,
                       max_strength, parse_levels, parse_oa, q_t_modulus)
from .bounds import bf_mixed, diestelkamp, generic_design_bound
from .design import DEFAULT_TOL, is_algebraic_design
from .multigraph import GuardError, check_cr1, eigenvalue, graph_params, is_independent
from .polybound import (KrawtchoukContext, LPError, cubic_closed_form, lp_bound)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def rational(x: Fraction | int | None) -> dict | None:
    if x is None:
        return None
    x = Fraction(x)
    text = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return {"value": text, "decimal": float(x)}


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _args_digest(params: dict) -> str:
    return _digest(json.dumps(params, sort_keys=True).encode())


def _read(path: str) -> tuple[str, str]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return raw.decode(), _digest(raw)


# --- subcommands: each returns (results, exit status, digest) ---------------

def cmd_verify(args) -> tuple[dict, int, str]:
    text, digest = _read(args.file)
    C = parse_oa(text)
    res: dict[str, Any] = {"file": args.file, "levels": list(C.alphabet.levels),
                           "levels_grouped": format_levels(C.alphabet), "N": C.N}
    t = args.strength
    if t is None:
        t = max_strength(C)
        res["max_strength"] = t
    if not 0 <= t <= C.alphabet.n:
        raise UsageError(f"--strength must lie in [0, {C.alphabet.n}]")
    rep = check_strength(C, t)
    res["strength"] = {"t": t, "holds": rep.holds, "witness": None}
    if not rep.holds:
        res["strength"]["witness"] = {"columns": list(rep.columns), "values": list(rep.values),
                                      "observed": rep.observed, "expected": rational(rep.expected)}
    if t >= 1:
        Qt = q_t_modulus(C.alphabet, t)
        res["Q_t"] = Qt
        res["N_divisible_by_Q_t"] = C.N % Qt == 0
    status = EXIT_OK if rep.holds else EXIT_FAIL
    if args.design:
        ok, profile = is_algebraic_design(C, t, args.tol)
        res["design"] = {"holds": ok, "tol": args.tol,
                         "max_relative_modulus": list(profile.relative())}
        res["consistent"] = ok == rep.holds
        if ok != rep.holds:
            res["alarm"] = "counting strength and character test disagree"
            status = EXIT_FAIL
    return res, status, digest


def cmd_bounds(args) -> tuple[dict, int, str]:
    try:
        alphabet = parse_levels(args.levels)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t = args.strength
    if not 1 <= t <= alphabet.n:
        raise UsageError(f"--strength must lie in [1, {alphabet.n}]")
    bf, di = bf_mixed(alphabet, t), diestelkamp(alphabet, t)
    params = graph_params(alphabet)
    res = {
        "levels": list(alphabet.levels), "levels_grouped": format_levels(alphabet),
        "n": alphabet.n, "t": t,
        "harmonic_mean": rational(bf.harmonic_mean), "q_min": bf.q_min,
        "q_mean": rational(bf.q_mean), "q_max": bf.q_max,
        "Q": params.Q, "k": params.k,
        "theta_t_plus_1": eigenvalue(params, t + 1) if t < alphabet.n else None,
        "Q_t": q_t_modulus(alphabet, t),
        "bf_mixed": {"value": rational(bf.raw), "rounded": bf.rounded},
        "diestelkamp": {"applicable": di.applicable, "value": rational(di.raw),
                        "rounded": di.rounded},
    }
    digest = _args_digest({"levels": list(alphabet.levels), "t": t})
    return res, EXIT_OK, digest


def cmd_cr(args) -> tuple[dict, int, str]:
    text, digest = _read(args.file)
    C = parse_oa(text)
    if not is_simple(C):
        raise UsageError("CR-1 is defined for simple sets; the array has repeated rows")
    if len(C.counts) == C.alphabet.size:
        raise UsageError("CR-1 is undefined when C is the whole vertex set")
    params = graph_params(C.alphabet)
    rep = check_cr1(C, params, force=args.force)
    res: dict[str, Any] = {
        "file": args.file, "levels": list(C.alphabet.levels), "N": C.N,
        "k": params.k, "Q": params.Q,
        "independent": is_independent(C, params),
        "is_cr": rep.is_cr, "b": rep.b, "c": rep.c,
        "violator": None if rep.violator is None else
        {"word": list(rep.violator), "count": rep.violator_count},
    }
    expected = []
    for t in range(0, min(max_strength(C), C.alphabet.n - 1) + 1):
        c = -eigenvalue(params, t + 1)
        bound = generic_design_bound(params.k, -c, C.alphabet.size)
        expected.append({"t": t, "b": params.k, "c": c, "bound": rational(bound),
                         "matches": rep.is_cr and rep.b == params.k and rep.c == c})
    res["expected_by_strength"] = expected
    return res, EXIT_OK if rep.is_cr else EXIT_FAIL, digest


def _write_atomic(path: str, text: str):
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=".mixoa-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def cmd_additive(args) -> tuple[dict, int, str]:
    text, digest = _read(args.matrix)
    H = add.parse_check_matrix(text)
    res: dict[str, Any] = {"matrix": args.matrix, "action": args.action, "p": H.p, "m": H.m,
                           "blocks": list(H.block_sizes)}
    if args.action == "emit-oa":
        C = add.null_space_array(H, force=args.force)
        oa = format_oa(C)
        res.update(levels=list(C.alphabet.levels), N=C.N)
        if args.output:
            _write_atomic(args.output, oa)
            res["output"] = args.output
        else:
            res["oa"] = oa
        return res, EXIT_OK, digest

    rep = add.additive_audit(H, force=args.force)
    res.update({
        "s": rep.s, "N": rep.N, "k": rep.k, "mu": rational(rep.mu), "t": rational(rep.t),
        "nu": rational(rep.nu), "weight": rational(rep.weight), "lambda": rep.multispread.lam,
        "parameters_compatible": rep.parameters_compatible,
        "verdicts": rep.verdicts, "consistent": rep.consistent,
        "attained_t": rep.attained_t,
        "cr": {"is_cr": rep.cr.is_cr, "b": rep.cr.b, "c": rep.cr.c},
        "block_dims": list(rep.multispread.dims),
        "dual_dims": list(rep.dual.dual_dims),
        "codeword_weights": list(rep.one_weight.weights),
        "alphabet_effective": rep.one_weight.alphabet_effective,
    })
    return res, EXIT_OK if rep.consistent else EXIT_FAIL, digest


def _degrees(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree list {text!r}") from None


def cmd_polybound(args) -> tuple[dict, int, str]:
    n, q, t = args.n, args.q, args.t
    if n < 1 or q < 2 or not 0 <= t < n:
        raise UsageError("need n >= 1, q >= 2 and 0 <= t < n")
    if not args.degrees or any(not 1 <= i <= n for i in args.degrees):
        raise UsageError(f"--degrees must be a nonempty subset of 1..{n}")
    r = lp_bound(n, q, t, args.degrees)
    ctx = KrawtchoukContext(n, q)
    theta = ctx.eigenvalues[t + 1]
    k = ctx.eigenvalues[0]
    res: dict[str, Any] = {
        "n": n, "q": q, "t": t, "degrees": sorted(set(args.degrees)),
        "alpha": {str(i): rational(a) for i, a in enumerate(r.alpha, start=1) if a},
        "values": [rational(v) for v in r.values],
        "mu_star": rational(r.mu_star), "nontrivial": r.nontrivial,
        "bound_ratio": rational(r.bound_ratio), "bound_N": rational(r.bound_N),
        "unique_maximizer": r.unique_maximizer,
        "bf_ratio": rational(Fraction(-theta, k - theta)) if theta < 0 else None,
    }
    if args.compare_cubic is not None:
        m = args.compare_cubic
        if m < 1:
            raise UsageError("--compare-cubic needs m >= 1")
        cubic = cubic_closed_form(m)
        res["cubic"] = {"m": m, "closed_form": cubic,
                        "lp_at_least_cubic": r.bound_ratio is not None
                        and float(r.bound_ratio) >= cubic - 1e-12}
    digest = _args_digest({"n": n, "q": q, "t": t, "degrees": res["degrees"]})
    return res, EXIT_OK, digest


# --- rendering ---------------------------------------------------------------

def _render_text(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, v in value.items():
        if isinstance(v, dict) and set(v) == {"value", "decimal"}:
            lines.append(f"{pad}{key}: {v['value']}  (~{v['decimal']:.6g})")
        elif isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_text(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) and set(x) == {"value", "decimal"}
                                               for x in v):
            lines.append(f"{pad}{key}: [" + ", ".join(x["value"] for x in v) + "]")
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{key}:")
            for item in v:
                lines.append(f"{pad}  -")
                lines.extend(_render_text(item, indent + 2))
        elif isinstance(v, str) and "\n" in v:
            lines.append(f"{pad}{key}:")
            lines.extend(pad + "  " + s for s in v.rstrip("\n").split("\n"))
        else:
            lines.append(f"{pad}{key}: {v}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a single JSON object")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help="override enumeration guards")

    parser = argparse.ArgumentParser(prog="mixoa", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")
    parser.add_argument("--force", action="store_true", help="override enumeration guards")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check orthogonal-array strength")
    p.add_argument("file")
    p.add_argument("--strength", type=int, help="strength t (default: report maximum)")
    p.add_argument("--design", action="store_true", help="cross-check with character sums")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="lower bounds for given levels")
    p.add_argument("--levels", required=True, help='e.g. "2^1 4^4" or "2 4 4 4 4"')
    p.add_argument("--strength", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cr", parents=[common], help="radius-1 completely regular code check")
    p.add_argument("file")
    p.set_defaults(func=cmd_cr)

    p = sub.add_parser("additive", parents=[common], help="audit a GF(p) check matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("action", choices=["audit", "emit-oa"])
    p.add_argument("-o", "--output", help="emit-oa: write the array here instead of stdout")
    p.set_defaults(func=cmd_additive)

    p = sub.add_parser("polybound", parents=[common], help="Krawtchouk LP bound in H(n, q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--degrees", type=_degrees, required=True, help="comma list, e.g. 1,2,3")
    p.add_argument("--compare-cubic", type=int, metavar="M")
    p.set_defaults(func=cmd_polybound)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        results, status, digest = args.func(args)
    except (UsageError, FormatError, GuardError, LPError, ValueError) as exc:
        status, results, digest = EXIT_USAGE, {"error": str(exc)}, None
        if isinstance(exc, GuardError):
            results["hint"] = "rerun with --force to lift the guard"
    report = {"command": args.command, "argv": argv, "inputs_digest": digest,
              "results": results, "exit_status": status}
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        stream = sys.stderr if status == EXIT_USAGE else sys.stdout
        if args.command == "additive" and args.action == "emit-oa" and "oa" in results:
            stream.write(results["oa"])
        else:
            print(f"mixoa {args.command}", file=stream)
            print("\n".join(_render_text(results, 1)), file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
