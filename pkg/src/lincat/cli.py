"""Command-line interface: ``lincat decompose | verify | profile``.

Exit codes: 0 success, 1 a verify suite failed, 2 non-semisimple input,
3 modular certificate failure, 64 malformed arguments or configuration.
"""

import argparse
import csv
import io
import json
import sys

from .algebra import (CertificateError, DecompositionError, NoUnit, NotSemisimpleError, SCAlgebra,
                      block_decompose, echi_kuhn_algebra, kuhn_algebra)
from .category import CapExceeded, default_cap
from .ffield import Character, CharacterOrderError, finite_field
from .profiles import CSV_COLUMNS, asymptotic_check, growth_table
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_NOT_SEMISIMPLE, EXIT_CERTIFICATE, EXIT_USAGE = 0, 1, 2, 3, 64

PROFILE_CAPS = {"vec": 8, "delannoy": 64}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _global_flags(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    g = parser.add_argument_group("global options")
    g.add_argument("--config", metavar="FILE", default=default, help="JSON run configuration")
    g.add_argument("--format", choices=("json", "csv", "md"), default=default, help="output format (default json)")
    g.add_argument("--seed", type=int, default=default, help="seed for randomized suites (default 0)")
    g.add_argument("--m", type=int, default=default, metavar="ORDER", help="cyclotomic order (default q-1)")


def _dims(text):
    try:
        dims = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("dims must be comma-separated integers, got %r" % text)
    if not dims or any(d < 0 for d in dims):
        raise argparse.ArgumentTypeError("dims must be non-negative and non-empty")
    return dims


def build_parser():
    parser = _Parser(prog="lincat", description="Linearized categories over finite fields.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_decompose(subparsers):
        p = subparsers.add_parser("decompose", help="Wedderburn blocks of R_{n1..nr}(F_q) or its e_chi corner")
        _global_flags(p, suppress=True)
        p.add_argument("--q", type=int)
        p.add_argument("--dims", type=_dims)
        p.add_argument("--chi", type=int, default=None, help="character exponent j; compress by e_chi")
        p.add_argument("--algebra", metavar="FILE", default=None,
                       help="decompose a structure-constant algebra read from JSON instead")
        return p

    add_decompose(sub)
    alg = sub.add_parser("alg", help="algebra commands")
    add_decompose(alg.add_subparsers(dest="alg_command", parser_class=_Parser, required=True))

    v = sub.add_parser("verify", help="run a named property suite")
    _global_flags(v, suppress=True)
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--q", type=int, default=None)
    v.add_argument("--d", type=int, default=2)

    prof = sub.add_parser("profile", help="growth-profile tables")
    psub = prof.add_subparsers(dest="example", parser_class=_Parser, required=True)
    pv = psub.add_parser("vec")
    _global_flags(pv, suppress=True)
    pv.add_argument("--d", type=int, required=True)
    pv.add_argument("--q", type=int, default=None)
    pv.add_argument("--n-max", type=int, required=True)
    pv.add_argument("--chi", type=int, default=0)
    pv.add_argument("--decompose", action="store_true")
    pd = psub.add_parser("delannoy")
    _global_flags(pd, suppress=True)
    pd.add_argument("--q", type=int, default=None)
    pd.add_argument("--n-max", type=int, required=True)
    pd.add_argument("--asymptotics", action="store_true", help="append the log a(2n) >= n log n report")
    return parser


# -- configuration -----------------------------------------------------------

def load_config(path):
    if not path:
        return {}
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read config %s: %s" % (path, exc))
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    return cfg


def resolve_field(args, cfg):
    """Field from --q, else from config keys field.p / field.k / field.modulus."""
    fcfg = cfg.get("field", {})
    modulus = fcfg.get("modulus")
    q = getattr(args, "q", None)
    if q is None and "p" in fcfg:
        q = fcfg["p"] ** fcfg.get("k", 1)
    if q is None:
        raise UsageError("no field given: pass --q or set field.p in the config")
    try:
        return finite_field(q, tuple(modulus) if modulus else None)
    except ValueError as exc:
        raise UsageError(str(exc))


def resolve_m(args, cfg, F):
    m = getattr(args, "m", None)
    if m is None:
        m = cfg.get("m")
    if m is None:
        m = max(F.q - 1, 1)
    if m <= 0 or m % max(F.q - 1, 1):
        raise UsageError("--m %d must be a positive multiple of q - 1 = %d" % (m, F.q - 1))
    return m


def resolve_cap(cfg):
    cap = cfg.get("cap", default_cap())
    if not isinstance(cap, int) or cap <= 0:
        raise UsageError("cap must be a positive integer")
    return cap


# -- rendering ---------------------------------------------------------------

def _md_table(header, rows):
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join("" if c is None else str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines)


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if c is None else c for c in row])
    return buf.getvalue().rstrip("\n")


def render_report(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    header, rows = ["block", "dim", "center_dim", "m", "split"], []
    for t, b in enumerate(report.get("blocks", [])):
        rows.append([t, b["dim"], b["center_dim"], b["m"], b["split"]])
    if fmt == "csv":
        return _csv(header, rows)
    head = "**dim %s**, semisimple: %s, primes: %s" % (report["dim"], report["semisimple"], report.get("primes"))
    out = head + "\n\n" + _md_table(header, rows)
    if "note" in report:
        out += "\n\n" + report["note"]
    return out


def render_suite(result, fmt):
    js = result.to_json()
    if fmt == "json":
        return json.dumps(js, indent=2, sort_keys=True)
    header = ["check", "passed"]
    rows = [[c["name"], c["passed"]] for c in js["checks"]]
    if fmt == "csv":
        return _csv(header, rows)
    out = "**%s**: %s (%d checks)\n\n" % (js["suite"], "pass" if js["passed"] else "FAIL", js["n_checks"])
    out += _md_table(header, rows)
    if js["counterexample"]:
        out += "\n\ncounterexample: `%s`" % json.dumps(js["counterexample"], sort_keys=True)
    return out


def render_rows(rows, fmt, extra=None):
    data = [r.to_json() for r in rows]
    if fmt == "json":
        payload = {"rows": data}
        if extra is not None:
            payload["asymptotics"] = extra
        return json.dumps(payload, indent=2, sort_keys=True)
    table = [[d[c] for c in CSV_COLUMNS] for d in data]
    if fmt == "csv":
        return _csv(CSV_COLUMNS, table)
    out = _md_table(CSV_COLUMNS, table)
    if extra is not None:
        out += "\n\nlog a(2n) >= n log n for all n >= %s in [%d, %d]" % (extra["threshold"], extra["n_min"], extra["n_max"])
    return out


# -- commands ----------------------------------------------------------------

def _load_algebra(path):
    try:
        with open(path) as fh:
            return SCAlgebra.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError("cannot read algebra %s: %s" % (path, exc))


def resolve_primes(cfg):
    """Prime-selection policy from config keys primes.count / primes.probe."""
    pcfg = cfg.get("primes", {})
    count, probe = pcfg.get("count", 2), pcfg.get("probe", 6)
    if not all(isinstance(x, int) and x > 0 for x in (count, probe)) or count < 2:
        raise UsageError("primes.count must be an integer >= 2 and primes.probe a positive integer")
    return {"n_primes": count, "probe": probe}


def cmd_decompose(args, cfg):
    policy = resolve_primes(cfg)
    if args.algebra:
        A = _load_algebra(args.algebra)
        return _decompose(A, {"file": args.algebra, "m": A.m}, policy)
    F = resolve_field(args, cfg)
    m = resolve_m(args, cfg, F)
    cap = resolve_cap(cfg)
    if args.dims is None:
        raise UsageError("decompose needs --dims")
    chi_exp = args.chi if args.chi is not None else cfg.get("character", {}).get("exponent")
    if chi_exp is None:
        A = kuhn_algebra(F, args.dims, m, cap).flatten()
        label = {"q": F.q, "dims": args.dims, "chi": None, "m": m}
    else:
        chi = Character(F, chi_exp, m)
        A = echi_kuhn_algebra(F, args.dims, chi, cap).flatten()
        label = {"q": F.q, "dims": args.dims, "chi": chi.to_json(), "m": m}
    return _decompose(A, label, policy)


def _decompose(A, label, policy):
    try:
        report = block_decompose(A, **policy).to_json()
    except NotSemisimpleError as exc:
        return EXIT_NOT_SEMISIMPLE, {"algebra": label, "dim": A.dim, "semisimple": False,
                                     "radical_dim": exc.radical_dim, "error": str(exc)}
    report["algebra"] = label
    if any(not b["split"] for b in report["blocks"]):
        report["note"] = "some blocks are not split over Q(zeta_m); a larger --m may split them"
    return EXIT_OK, report


def cmd_verify(args, cfg):
    q = args.q
    if q is None and args.suite not in ("segre", "gram"):
        F = resolve_field(args, cfg)
        q = F.q
    m = getattr(args, "m", None) or cfg.get("m")
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = cfg.get("seed", 0)
    result = run_suite(args.suite, q=q or 2, d=args.d, m=m, seed=seed)
    return (EXIT_OK if result.passed else EXIT_FAILED), result


def cmd_profile(args, cfg):
    cap = PROFILE_CAPS[args.example]
    if args.n_max < 1 or args.n_max > cap:
        raise UsageError("--n-max must lie in [1, %d] for %s" % (cap, args.example))
    q = args.q if args.q is not None else cfg.get("field", {}).get("p", 2) ** cfg.get("field", {}).get("k", 1)
    if args.example == "vec":
        rows = growth_table("vec", args.n_max, d=args.d, q=q, chi=args.chi, decompose=args.decompose)
        return EXIT_OK, rows, None
    rows = growth_table("delannoy", args.n_max, q=q)
    extra = asymptotic_check(1, args.n_max).to_json() if args.asymptotics else None
    return EXIT_OK, rows, extra


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        cfg = load_config(getattr(args, "config", None))
        fmt = getattr(args, "format", None) or cfg.get("format", "json")
        if fmt not in ("json", "csv", "md"):
            raise UsageError("unknown format %r" % fmt)
        if args.command in ("decompose", "alg"):
            code, report = cmd_decompose(args, cfg)
            print(render_report(report, fmt))
            return code
        if args.command == "verify":
            code, result = cmd_verify(args, cfg)
            print(render_suite(result, fmt))
            return code
        code, rows, extra = cmd_profile(args, cfg)
        print(render_rows(rows, fmt, extra))
        return code
    except (UsageError, CharacterOrderError, CapExceeded) as exc:
        print("lincat: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except NoUnit as exc:
        print("lincat: error: %s" % exc, file=sys.stderr)
        return EXIT_NOT_SEMISIMPLE
    except (CertificateError, DecompositionError) as exc:
        print(json.dumps({"error": "certificate", "detail": str(exc)}, indent=2))
        return EXIT_CERTIFICATE


if __name__ == "__main__":
    sys.exit(main())
