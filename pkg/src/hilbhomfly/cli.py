"""Command-line front end.

Exit codes: 0 success or pass, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import conjecture, homfly, staircase
from . import semigroup as sg
from .errors import HilbHomflyError
from .poly import ZPoly, from_z, parse_poly, render, to_z

DEFAULT_TRUNC = 120


def _series_text(s) -> str:
    return f"{render(s.poly)} + O(q^{s.order})"


def _series_json(s) -> dict:
    return {
        "order": s.order,
        "coefficients": {str(e): render(c) for e, c in s.coefficients().items()},
    }


def _parse_series_list(text: str, order: int) -> list:
    return [sg.SeriesElement.parse(part) for part in text.split(",") if part.strip()]


def _gamma(args) -> sg.NumSemigroup:
    if getattr(args, "series", None):
        return sg.semigroup_from_series(_parse_series_list(args.series, args.order), args.order)
    return sg.semigroup(args.generators or [4, 6, 13])


# -- handlers: each returns (exit_code, text, json_payload) --------------------------

def cmd_homfly_torus(args):
    J = homfly.jones_torus(args.k, args.n)
    payload = {"k": args.k, "n": args.n, "homfly": render(J), "z_form": render(to_z(J))}
    return 0, render(J) if args.form == "q" else render(to_z(J)), payload


def cmd_skein_t2(args):
    zp = homfly.t2_skein(args.n)
    payload = {"n": args.n, "z_form": render(zp)}
    try:
        payload["homfly"] = render(from_z(zp))
    except HilbHomflyError:
        payload["homfly"] = None
    return 0, render(zp), payload


def cmd_semigroup(args):
    g = _gamma(args)
    d = g.to_dict()
    text = "\n".join(f"{k}: {v}" for k, v in d.items())
    return 0, text, d


def cmd_modules_table(args):
    g = _gamma(args)
    rows = sg.module_table(g)
    lines = []
    for r in rows:
        sh = sg.ShiftSet(tuple(r["shifts"]["exceptional"]), r["shifts"]["threshold"])
        mod = "(" + ",".join(map(str, r["module"])) + ")"
        lines.append(f"{mod:<14} {r['value']:>3}   {sh}")
    return 0, "\n".join(lines), {"semigroup": g.to_dict(), "modules": rows}


def cmd_staircase_series(args):
    s = staircase.series_direct(args.k, args.n, args.trunc)
    hist = staircase.histogram(args.k, args.n, (args.trunc - 1) // 2)
    by_len: dict[int, dict[str, int]] = {}
    for (l, m), c in sorted(hist.items()):
        by_len.setdefault(l, {})[str(m)] = c
    payload = {"k": args.k, "n": args.n, "series": _series_json(s),
               "histogram": {str(l): v for l, v in by_len.items()}}
    return 0, _series_text(s), payload


def cmd_residue_series(args):
    s = staircase.series_residue(args.k, args.n, args.trunc)
    direct = staircase.series_direct(args.k, args.n, args.trunc)
    payload = {"k": args.k, "n": args.n, "series": _series_json(s), "matches_direct": s.agrees_with(direct)}
    return 0, _series_text(s), payload


def cmd_alexander(args):
    if args.torus:
        k, n = args.torus
        g = sg.semigroup([k, n])
        via_homfly = homfly.alexander_from_homfly(homfly.jones_torus(k, n), (k - 1) * (n - 1))
    elif args.cable_4613:
        g = conjecture.cable_4613_semigroup()
        via_homfly = homfly.alexander_from_homfly(conjecture.assemble_4613(args.trunc), g.milnor)
    else:
        g = _gamma(args)
        via_homfly = None
    via_sg = homfly.alexander_from_semigroup(g)
    payload = {"semigroup": list(g.generators), "alexander": str(via_sg), "coefficients": list(via_sg.coeffs)}
    code = 0
    text = str(via_sg)
    if via_homfly is not None:
        payload["from_homfly"] = str(via_homfly)
        payload["consistent"] = via_homfly == via_sg
        code = 0 if via_homfly == via_sg else 1
        text = f"semigroup: {via_sg}\nhomfly:    {via_homfly}"
    return code, text, payload


def _report(r: conjecture.Report):
    code = 0 if r.passed else 1
    text = f"{r.check} {r.parameters}: {r.status.upper()}"
    if r.first_mismatch:
        text += f"\nfirst mismatch: {r.first_mismatch}"
    return code, text, r.to_dict()


def cmd_verify_torus(args):
    return _report(conjecture.verify_torus(args.k, args.n, args.trunc))


def cmd_verify_cable(args):
    r = conjecture.verify_cable_4613(args.trunc)
    code, text, payload = _report(r)
    payload["n0"] = r.details["n0_at_a0"]
    text += f"\nn0 = {r.details['n0_at_a0']}\n{r.details['homfly']}"
    return code, text, payload


def _a2_poly(coeffs) -> str:
    # coefficient list in a^2 rendered through the shared grammar
    return render(ZPoly({(2 * r, 0): c for r, c in enumerate(coeffs) if c}))


def cmd_genus(args):
    mult = None
    if args.torus:
        k, n = args.torus
        J, mu, b = homfly.jones_torus(k, n), (k - 1) * (n - 1), 1
        mult = min(k, n)
    elif args.cable_4613:
        J, mu, b = conjecture.assemble_4613(args.trunc), 16, 1
        mult = 4
    elif args.poly is not None:
        if args.mu is None:
            raise HilbHomflyError("--poly requires --mu")
        cls = ZPoly if "z" in args.poly else None
        J = parse_poly(args.poly, cls) if cls else parse_poly(args.poly)
        mu, b = args.mu, args.b
    else:
        raise HilbHomflyError("one of --torus, --cable-4613, --poly is required")
    gx = conjecture.genus_expansion(J, mu, b)
    payload = gx.to_dict()
    payload["bounds"] = conjecture.genus_bounds(gx, mult)
    lines = [f"n_{h}(a^2) = {_a2_poly(nh)}" for h, nh in enumerate(gx.n)]
    lines.append(f"n_h(0) = {gx.at_a0()}")
    return 0, "\n".join(lines), payload


def cmd_sl1(args):
    return _report(conjecture.sl1_check(args.k, args.n, args.trunc))


def cmd_qbinom_check(args):
    return _report(conjecture.qbinom_corollary(args.k, args.n, args.trunc))


def cmd_euler_jacobian(args):
    v = conjecture.euler_jacobian(args.k, args.n)
    return 0, str(v), {"k": args.k, "n": args.n, "euler_number": v}


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--trunc", type=int, default=DEFAULT_TRUNC, help="q-series truncation order")

    p = argparse.ArgumentParser(prog="hilbhomfly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def kn(sp):
        sp.add_argument("k", type=int)
        sp.add_argument("n", type=int)

    def gamma_args(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--generators", type=int, nargs="+")
        g.add_argument("--series", help='comma-separated series, e.g. "t^4, t^6+t^7"')
        sp.add_argument("--order", type=int, default=40, help="t-adic working precision for --series")

    sp = sub.add_parser("homfly-torus", parents=[common], help="HOMFLY of the (k,n) torus knot")
    kn(sp)
    sp.add_argument("--form", choices=["q", "z"], default="q")
    sp.set_defaults(func=cmd_homfly_torus)

    sp = sub.add_parser("skein-t2", parents=[common], help="HOMFLY of T(2,n) by skein recurrence")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_skein_t2)

    sp = sub.add_parser("semigroup", parents=[common], help="numerical or value semigroup")
    gamma_args(sp)
    sp.set_defaults(func=cmd_semigroup)

    sp = sub.add_parser("modules-table", parents=[common], help="Mod(Gamma) with shifts")
    gamma_args(sp)
    sp.set_defaults(func=cmd_modules_table)

    sp = sub.add_parser("staircase-series", parents=[common], help="refined series by enumeration")
    kn(sp)
    sp.set_defaults(func=cmd_staircase_series)

    sp = sub.add_parser("residue-series", parents=[common], help="refined series by residue formula")
    kn(sp)
    sp.set_defaults(func=cmd_residue_series)

    sp = sub.add_parser("alexander", parents=[common], help="Alexander polynomial")
    gamma_args(sp)
    sp.add_argument("--torus", type=int, nargs=2, metavar=("K", "N"))
    sp.add_argument("--cable-4613", action="store_true")
    sp.set_defaults(func=cmd_alexander)

    sp = sub.add_parser("verify-torus", parents=[common], help="check the torus knot identity")
    kn(sp)
    sp.set_defaults(func=cmd_verify_torus)

    sp = sub.add_parser("verify-cable-4613", parents=[common], help="assemble and check the <4,6,13> germ")
    sp.set_defaults(func=cmd_verify_cable)

    sp = sub.add_parser("genus", parents=[common], help="genus expansion n_h(a^2)")
    sp.add_argument("--torus", type=int, nargs=2, metavar=("K", "N"))
    sp.add_argument("--cable-4613", action="store_true")
    sp.add_argument("--poly")
    sp.add_argument("--mu", type=int)
    sp.add_argument("--b", type=int, default=1)
    sp.set_defaults(func=cmd_genus)

    sp = sub.add_parser("sl1", parents=[common], help="a := q triviality check")
    kn(sp)
    sp.set_defaults(func=cmd_sl1)

    sp = sub.add_parser("qbinom-check", parents=[common], help="q-binomial corollary check")
    kn(sp)
    sp.set_defaults(func=cmd_qbinom_check)

    sp = sub.add_parser("euler-jacobian", parents=[common], help="C(k+n,k)/(k+n)")
    kn(sp)
    sp.set_defaults(func=cmd_euler_jacobian)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        code, text, payload = args.func(args)
    except (HilbHomflyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
