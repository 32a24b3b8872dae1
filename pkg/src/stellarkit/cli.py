"""Command-line front end.

Structured output is JSON on stdout (or ``--out``); diagnostics go to stderr.
Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import complex_core as cc
from .errors import StellarKitError
from .hochster import betti_oracle
from .homology import PrimeField, is_gorenstein_star, reduced_homology
from .resolutions import (
    stacked_betti_closed,
    stacked_betti_recursive,
    theta,
)
from .sr_algebra import (
    MonomialIdeal,
    annihilator_of_ideal,
    colon_ideal_j_sigma,
    stanley_reisner_ideal,
    unprojection_presentation,
    unprojection_presentation_deg1,
)
from .toric_fan import Fan, build_fan, check_fan, embedded_example_p3
from .verify import SUITES, km_table_for_subdivision, run_suite


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _ideal(text: str) -> list[list[int]]:
    return [_int_list(part) for part in text.split(";")]


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _load(args, attr="input") -> cc.SimplicialComplex:
    _need(args, attr)
    try:
        return cc.load_complex(getattr(args, attr))
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _field(args) -> PrimeField:
    return PrimeField(args.p)


def _ideal_json(ideal: MonomialIdeal) -> dict:
    return {"generators": [list(g) for g in ideal.supports], "text": str(ideal)}


def _complex_output(delta: cc.SimplicialComplex, fmt: str):
    return cc.write_cplx(delta) if fmt == "text" else cc.complex_to_dict(delta)


def cmd_complex(args):
    action = args.action
    if action == "stacked":
        _need(args, "d", "m")
        delta = cc.stacked_complex(args.d, args.m, args.choices)
        out = _complex_output(delta, args.format)
        if isinstance(out, dict):
            out["facet_choices"] = delta.metadata["facet_choices"]
        return out
    delta = _load(args)
    if action == "info":
        return {
            "m": delta.m,
            "dim": cc.dim(delta),
            "pure": cc.is_pure(delta),
            "f_vector": cc.f_vector(delta),
            "h_polynomial": list(cc.h_polynomial(delta).coeffs),
            "reduced_homology": list(reduced_homology(delta, _field(args)).dims),
        }
    if action == "faces":
        return {"faces": [list(f) for f in cc.enumerate_faces(delta)]}
    if action == "join":
        return _complex_output(cc.join(delta, _load(args, "in2")), args.format)
    _need(args, "sigma")
    if action == "link":
        lk = cc.link(delta, args.sigma)
        out = {"vertices": list(lk.vertices), "facets": [list(f) for f in lk.facets],
               "index_map": {str(k): v for k, v in lk.vertex_index.items()}}
        return cc.write_cplx(lk) if args.format == "text" else out
    if action == "stellar":
        return _complex_output(cc.stellar_subdivision(delta, args.sigma), args.format)
    raise UsageError(f"unknown complex action {action}")


def cmd_gorenstein(args):
    delta = _load(args)
    res = is_gorenstein_star(delta, _field(args))
    out = {"gorenstein_star": res.ok, "p": args.p}
    if not res.ok:
        out["witness"] = list(res.witness)
        out["profile"] = list(res.profile.dims)
    return out


def cmd_ideal(args):
    delta = _load(args)
    if args.action == "sr":
        return _ideal_json(stanley_reisner_ideal(delta))
    if args.action == "colon":
        _need(args, "sigma")
        return _ideal_json(colon_ideal_j_sigma(delta, args.sigma))
    if args.ideal is not None:
        ideal = MonomialIdeal.from_supports(args.ideal)
    else:
        _need(args, "sigma")
        ideal = colon_ideal_j_sigma(delta, args.sigma)
    return _ideal_json(annihilator_of_ideal(delta, ideal))


def cmd_unproject(args):
    delta = _load(args)
    _need(args, "sigma")
    build = unprojection_presentation_deg1 if args.deg1 else unprojection_presentation
    pres = build(delta, args.sigma, field=_field(args), check_gorenstein=not args.no_check)
    return pres.to_text() if args.format == "text" else pres.to_dict()


def cmd_betti(args):
    if args.method == "closed":
        _need(args, "d", "m")
        table = stacked_betti_closed(args.d, args.m)
    elif args.method == "km":
        if args.input is not None:
            _need(args, "sigma")
            table = km_table_for_subdivision(_load(args), cc.to_mask(args.sigma))
        else:
            _need(args, "d", "m")
            table = stacked_betti_recursive(args.d, args.m)
    else:
        if args.input is not None:
            delta = _load(args)
        else:
            _need(args, "d", "m")
            delta = cc.stacked_complex(args.d, args.m, args.choices)
        table = betti_oracle(delta, _field(args))
    return table.to_text() if args.format == "text" else table.to_dict()


def cmd_theta(args):
    _need(args, "d", "m")
    if args.i is not None:
        return {"d": args.d, "m": args.m, "i": args.i, "theta": theta(args.d, args.m, args.i)}
    return {"d": args.d, "m": args.m,
            "theta": [theta(args.d, args.m, i) for i in range(args.m - args.d + 1)]}


def cmd_fan(args):
    if args.action == "example-p3":
        fan = embedded_example_p3(args.subdivided)
    elif args.action == "build":
        _need(args, "sigma")
        fan = build_fan(_load(args), args.sigma)
    else:
        _need(args, "input")
        try:
            fan = Fan.from_dict(json.loads(Path(args.input).read_text()))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(str(exc)) from None
        res = check_fan(fan)
        out = {"fan": res.ok}
        if not res.ok:
            out["violation"] = list(res.violation)
            out["reason"] = res.reason
        return out
    return fan.to_dict()


def cmd_verify(args):
    checks = run_suite(args.suite, args.seed)
    return {"suite": args.suite, "ok": all(c.ok for c in checks),
            "checks": [c.to_dict() for c in checks]}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input")
    common.add_argument("--out")
    common.add_argument("--sigma", type=_int_list)
    common.add_argument("--p", type=int, default=2)
    common.add_argument("--d", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--choices", type=_int_list)
    common.add_argument("--format", choices=["json", "text"], default="json")

    parser = argparse.ArgumentParser(prog="stellarkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("complex", parents=[common])
    p.add_argument("action", choices=["info", "faces", "link", "stellar", "join", "stacked"])
    p.add_argument("--in2")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("gorenstein", parents=[common])
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("ideal", parents=[common])
    p.add_argument("action", choices=["sr", "colon", "annihilator"])
    p.add_argument("--ideal", type=_ideal, help="supports separated by ';', e.g. '3;4,5'")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("unproject", parents=[common])
    p.add_argument("--deg1", action="store_true")
    p.add_argument("--no-check", action="store_true", help="skip the Gorenstein* test")
    p.set_defaults(func=cmd_unproject)

    p = sub.add_parser("betti", parents=[common])
    p.add_argument("--method", choices=["km", "hochster", "closed"], required=True)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("theta", parents=[common])
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("fan", parents=[common])
    p.add_argument("action", choices=["build", "check", "example-p3"])
    p.add_argument("--subdivided", action="store_true")
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", choices=["all", *SUITES])
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except StellarKitError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=stderr)
        return 1
    text = result if isinstance(result, str) else json.dumps(result)
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        stdout.write(text)
    if isinstance(result, dict) and result.get("ok") is False:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
