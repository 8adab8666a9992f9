"""Command-line frontend.  Every invocation prints one JSON document on stdout.

The document is an envelope {"subcommand", "params", "result", "diagnostics"}.
Exit status is 0 on success, 1 when the parameters are rejected or a check
fails, and 2 for an unknown subcommand.
"""

import argparse
import json
import sys

from . import bott, cartier, obstruction, projective, selftest, toric, trunc_sym


class ParameterError(ValueError):
    pass


class _SubParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParameterError(message)


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _scan_range(text):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None


# options whose values may start with "-" (e.g. --divisor -1,0 or --scan -5..10)
_SIGNED_VALUE_OPTIONS = {"--divisor", "--scan", "--subspace", "--ci"}


def _join_signed_values(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _SIGNED_VALUE_OPTIONS:
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def build_parser():
    parser = argparse.ArgumentParser(prog="frobcok", description=__doc__.splitlines()[0])
    parser.add_argument("--human", action="store_true", help="render the result as aligned text instead of JSON")
    sub = parser.add_subparsers(dest="subcommand", parser_class=_SubParser)

    p = sub.add_parser("trunc", help="truncated symmetric powers")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--basis", action="store_true", help="also list the monomial basis")
    p.add_argument("--filtration", action="store_true", help="filtration ranks of I/I^[p] instead of one power")
    p.add_argument("--n", type=int, help="ambient dimension for --filtration")

    p = sub.add_parser("cartier", help="ranks in the Cartier exact sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("toric", help="toric fans, divisor positivity and Frobenius pushforwards")
    p.add_argument("--fan", required=True, help="fan JSON file, or a built-in name: " + ", ".join(toric.STANDARD_FANS))
    p.add_argument("--p", type=int)
    p.add_argument("--divisor", type=_int_list)
    p.add_argument("--op", required=True,
                   choices=["validate", "positivity", "pushforward", "cokernel", "bx-dual-ample", "bx-ample"])

    p = sub.add_parser("pn", help="F_* O(d) on projective space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--scan", type=_scan_range, help="threshold scan over d in lo..hi (inclusive)")

    p = sub.add_parser("bott", help="cohomology of twisted forms on P^n and wedge T_X ranges")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--d", type=int, help="hypersurface degree for --wedge-range hypersurface")
    p.add_argument("--dim-x", type=int, help="dim X for --wedge-range index")
    p.add_argument("--a", type=int, help="index a for --wedge-range index")
    p.add_argument("--regularity", action="store_true")
    p.add_argument("--wedge-range", choices=["hypersurface", "index"])

    p = sub.add_parser("obstruct", help="obstructions to ampleness of B_X^dual")
    p.add_argument("--curve-deg", type=int, help="-K_X.C of a smooth rational curve")
    p.add_argument("--subspace", type=_int_list, help="r,degree of a linear P^r in X")
    p.add_argument("--ci", help="complete intersection n:d1,d2,...:p")
    p.add_argument("--fano3", help="Fano threefold kind:p with kind in P3, Quadric, Other")

    sub.add_parser("selftest", help="run the full oracle suite")
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise ParameterError("missing required option(s): " + ", ".join("--" + m for m in missing))


def cmd_trunc(args):
    if args.filtration:
        return trunc_sym.filtration_ranks(args.c, args.p, args.n).to_dict()
    _need(args, "l")
    params = trunc_sym.TruncParams(args.c, args.p, args.l)
    out = {"dim": trunc_sym.trunc_dim(params)}
    if args.basis:
        out["basis"] = [list(a) for a in trunc_sym.enumerate_basis(params)]
    return out


def cmd_cartier(args):
    table = cartier.cartier_rank_table(args.n, args.p)
    out = table.to_dict()
    out["consistent"] = cartier.verify_cartier_consistency(table)
    return out


def cmd_toric(args):
    try:
        fan = toric.load_fan(args.fan)
    except OSError as exc:
        raise ParameterError(f"cannot read fan file: {exc}") from None
    if args.op == "validate":
        violations = toric.validate_fan(fan)
        return {"fan": fan.to_dict(), "valid": not violations, "violations": violations}
    fan.require_valid()
    if args.op == "positivity":
        _need(args, "divisor")
        return {"divisor": args.divisor, **toric.divisor_positivity(fan, args.divisor).to_dict()}
    _need(args, "p")
    if args.op == "pushforward":
        divisor = args.divisor if args.divisor is not None else [0] * fan.nrays
        return {"divisor": divisor, **toric.frobenius_pushforward(fan, divisor, args.p).to_dict()}
    if args.op == "cokernel":
        return toric.frobenius_cokernel(fan, args.p).to_dict()
    if args.op == "bx-dual-ample":
        return toric.bx_dual_ample(fan, args.p).to_dict()
    return toric.bx_ample(fan, args.p).to_dict()


def cmd_pn(args):
    if args.scan is not None:
        lo, hi = args.scan
        return projective.threshold_scan(args.n, args.p, range(lo, hi + 1)).to_dict()
    _need(args, "d")
    out = projective.fstar_decompose_pn(args.n, args.p, args.d).to_dict()
    out["positivity"] = projective.fstar_positivity(args.n, args.p, args.d).value
    return out


def cmd_bott(args):
    if args.wedge_range == "hypersurface":
        _need(args, "n", "d")
        return bott.wedge_t_range_hypersurface(args.n, args.d).to_dict()
    if args.wedge_range == "index":
        _need(args, "dim-x", "a")
        return bott.wedge_t_range_index(args.dim_x, args.a).to_dict()
    if args.regularity:
        _need(args, "n", "k")
        return bott.cm_regular(args.n, args.k).to_dict()
    _need(args, "n", "k", "j", "i")
    return {"h": bott.bott_dim(bott.BottQuery(args.n, args.k, args.j, args.i))}


def _parse_ci(text):
    try:
        n, degrees, p = text.split(":")
        return obstruction.CompleteIntersectionInput(int(n), tuple(_int_list(degrees)), int(p))
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise ParameterError(f"--ci expects n:d1,d2,...:p ({exc})") from None


def cmd_obstruct(args):
    out = {}
    curve = None
    if args.curve_deg is not None:
        curve = obstruction.CurveWitness(args.curve_deg)
        out["curve"] = obstruction.curve_obstruction(curve).to_dict()
    if args.subspace is not None:
        if len(args.subspace) != 2:
            raise ParameterError("--subspace expects r,degree")
        out["subspace"] = obstruction.subspace_obstruction(obstruction.SubspaceWitness(*args.subspace)).to_dict()
    if args.ci is not None:
        ci = _parse_ci(args.ci)
        out["ci"] = obstruction.ci_verdict(ci).to_dict()
        out["ci"]["lines"] = obstruction.ci_line_exists(ci.n, ci.degrees).to_dict()
    if args.fano3 is not None:
        kind, _, p = args.fano3.partition(":")
        try:
            out["fano3"] = obstruction.fano3_verdict(kind, int(p), curve).to_dict()
        except ValueError as exc:
            raise ParameterError(f"--fano3 expects kind:p with kind in P3, Quadric, Other ({exc})") from None
    if not out:
        raise ParameterError("give at least one of --curve-deg, --subspace, --ci, --fano3")
    return out


def cmd_selftest(args):
    results = selftest.run_all()
    return {"passed": all(r.passed for r in results), "checks": [r.to_dict() for r in results]}


COMMANDS = {
    "trunc": cmd_trunc,
    "cartier": cmd_cartier,
    "toric": cmd_toric,
    "pn": cmd_pn,
    "bott": cmd_bott,
    "obstruct": cmd_obstruct,
    "selftest": cmd_selftest,
}


def _render_human(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        width = max((len(str(k)) for k in obj), default=0)
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and any(isinstance(v, (dict, list)) for v in
                                                             (val.values() if isinstance(val, dict) else val)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_human(val, indent + 1))
            else:
                lines.append(f"{pad}{str(key).ljust(width)}  {json.dumps(val, sort_keys=True)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_human(item, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(item)}")
    else:
        lines.append(pad + json.dumps(obj))
    return lines


def _emit(envelope, human):
    if human:
        print("\n".join(_render_human(envelope)))
    else:
        print(json.dumps(envelope, sort_keys=True, indent=2))


def run(argv=None):
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # accepted anywhere on the command line, not only before the subcommand
    human = "--human" in argv
    argv = _join_signed_values([a for a in argv if a != "--human"])
    try:
        args = parser.parse_args(argv)
    except ParameterError as exc:
        sub = next((a for a in argv if a in COMMANDS), None)
        _emit({"subcommand": sub, "params": {}, "result": None,
               "diagnostics": [{"level": "error", "message": str(exc)}]}, human)
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return 2
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("subcommand", "human") and v is not None}
    diagnostics = []
    try:
        result = COMMANDS[args.subcommand](args)
    except (ValueError, RuntimeError) as exc:
        result = None
        diagnostics.append({"level": "error", "message": str(exc)})
    if args.subcommand == "selftest" and result is not None and not result["passed"]:
        diagnostics.append({"level": "error", "message": "selftest failed"})
    _emit({"subcommand": args.subcommand, "params": params, "result": result, "diagnostics": diagnostics}, human)
    return 1 if diagnostics else 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
