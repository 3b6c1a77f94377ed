"""Batch command-line interface.

Subcommands:

* ``compute``: evaluate one object (series, polynomial, shifted polynomial)
  and print its canonical JSON; results are cached content-addressed when a
  cache directory is configured (flag or YANGSYM_CACHE_DIR).
* ``verify``: run one verification suite (or ``all``) and emit a report;
  exit status is nonzero iff any check failed.
* ``list-suites``: show the available suites.
"""

import argparse
import json
import sys

from .symfun import BetheTwist, bethe_b, elem_e, h_minus, homog_h, power_p, schur_s
from .capelli import capelli_p, shifted_e_star, shifted_h_star, shifted_p_star
from .serialize import canonical_dumps, to_jsonable
from .cache import cache_get, cache_key, cache_put, resolve_cache_dir
from .suites import SUITES, SuiteConfig, run_suites

COMPUTE_OBJECTS = ("e", "h", "p", "b", "h_minus", "schur", "capelli_p",
                   "e_star", "h_star", "p_star")


def _parse_int_list(text, flag):
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects a comma-separated integer list")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="yangsym",
        description="exact symmetric-function calculus over the Yangian of gl_n")
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="compute one object and print canonical JSON")
    comp.add_argument("object", choices=COMPUTE_OBJECTS)
    comp.add_argument("--k", type=int, help="degree index")
    comp.add_argument("--m", type=int, help="degree index (alias of --k)")
    comp.add_argument("--n", type=int, required=True)
    comp.add_argument("--order", type=int, help="series truncation order")
    comp.add_argument("--sign", choices=["+", "-"], default="-",
                      help="sign of the shift direction for p")
    comp.add_argument("--lambda", dest="lam", help="partition, e.g. 2,1")
    comp.add_argument("--via", choices=["h", "e"], default="h")
    comp.add_argument("--mu", help="weight for p_star, e.g. 1,0")
    comp.add_argument("--z", choices=["identity", "random"], default="identity")
    comp.add_argument("--seed", type=int, default=20240811)
    comp.add_argument("--format", choices=["json", "text"], default="json")
    comp.add_argument("--cache-dir")
    comp.add_argument("--out")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", nargs="?", default="all",
                     help="suite name or 'all'")
    ver.add_argument("--n", type=int)
    ver.add_argument("--order", type=int)
    ver.add_argument("--max-m", dest="max_m", type=int)
    ver.add_argument("--max-k", dest="max_k", type=int)
    ver.add_argument("--tau-order", dest="tau_order", type=int)
    ver.add_argument("--seed", type=int, default=20240811)
    ver.add_argument("--format", choices=["json", "text"], default="text")
    ver.add_argument("--cache-dir")
    ver.add_argument("--out")

    sub.add_parser("list-suites", help="list verification suites")
    return parser


def _compute_value(args, parser):
    obj = args.object
    deg = args.k if args.k is not None else args.m

    def need(cond, msg):
        if not cond:
            parser.error(msg)

    if obj in ("e", "h", "p", "b", "h_minus"):
        need(deg is not None, f"compute {obj} needs --k")
        need(args.order is not None, f"compute {obj} needs --order")
    if obj == "e":
        return elem_e(deg, args.n, args.order), {"k": deg, "n": args.n, "order": args.order}
    if obj == "h":
        return homog_h(deg, args.n, args.order), {"k": deg, "n": args.n, "order": args.order}
    if obj == "p":
        sign = 1 if args.sign == "+" else -1
        return (power_p(deg, sign, args.n, args.order),
                {"k": deg, "n": args.n, "order": args.order, "sign": args.sign})
    if obj == "b":
        if args.z == "identity":
            Z = BetheTwist.identity(args.n)
        else:
            import random
            Z = BetheTwist.random(args.n, random.Random(args.seed))
        params = {"k": deg, "n": args.n, "order": args.order, "z": args.z}
        if args.z == "random":
            params["seed"] = args.seed
        return bethe_b(deg, Z, args.n, args.order), params
    if obj == "h_minus":
        return h_minus(deg, args.n, args.order), {"m": deg, "n": args.n, "order": args.order}
    if obj == "schur":
        need(args.lam, "compute schur needs --lambda")
        need(args.order is not None, "compute schur needs --order")
        lam = _parse_int_list(args.lam, "--lambda")
        return (schur_s(lam, args.via, args.n, args.order),
                {"lambda": lam, "via": args.via, "n": args.n, "order": args.order})
    if obj == "capelli_p":
        need(deg is not None, "compute capelli_p needs --m")
        return capelli_p(deg, args.n), {"m": deg, "n": args.n}
    if obj == "e_star":
        need(deg is not None, "compute e_star needs --k")
        return shifted_e_star(deg, args.n), {"k": deg, "n": args.n}
    if obj == "h_star":
        need(deg is not None, "compute h_star needs --k")
        return shifted_h_star(deg, args.n), {"k": deg, "n": args.n}
    if obj == "p_star":
        need(deg is not None, "compute p_star needs --k")
        need(args.mu, "compute p_star needs --mu")
        mu = _parse_int_list(args.mu, "--mu")
        need(len(mu) == args.n, "--mu must have n entries")
        return shifted_p_star(deg, mu), {"k": deg, "n": args.n, "mu": mu}
    parser.error(f"unknown object {obj}")


def cmd_compute(args, parser):
    value, params = _compute_value(args, parser)
    cache_dir = resolve_cache_dir(args.cache_dir)
    out_bytes = None
    if cache_dir:
        key = cache_key(args.object, params)
        out_bytes = cache_get(cache_dir, key)
        if out_bytes is None:
            out_bytes = cache_put(cache_dir, key, args.object, params, to_jsonable(value))
            print(f"cache miss ({key[:12]})", file=sys.stderr)
        else:
            print(f"cache hit ({key[:12]})", file=sys.stderr)
    if out_bytes is None:
        out_bytes = canonical_dumps(to_jsonable(value)).encode("utf-8")
    text = out_bytes.decode("utf-8")
    if args.format == "text":
        text = json.dumps(json.loads(text), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_verify(args, parser):
    if args.suite != "all" and args.suite not in SUITES:
        parser.error(f"unknown suite {args.suite!r}; see 'yangsym list-suites'")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = SuiteConfig(n=args.n, order=args.order, max_m=args.max_m,
                      max_k=args.max_k, tau_order=args.tau_order, seed=args.seed)
    records = run_suites(names, cfg)
    report = [r.jsonable() for r in records]
    failed = [r for r in records if r.status == "fail"]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(canonical_dumps(report) + "\n")
    if args.format == "json":
        print(canonical_dumps(report))
    else:
        for r in records:
            mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r.status]
            params = json.dumps(r.params, sort_keys=True)
            line = f"[{mark}] {r.suite}: {r.name} {params}"
            if r.detail:
                line += f" detail={json.dumps(r.detail, sort_keys=True)}"
            if r.failure:
                line += f" failure={json.dumps(r.failure, sort_keys=True)}"
            print(line)
        n_pass = sum(1 for r in records if r.status == "pass")
        n_skip = sum(1 for r in records if r.status == "skipped")
        print(f"{n_pass} passed, {len(failed)} failed, {n_skip} skipped")
    return 1 if failed else 0


def cmd_list_suites(args, parser):
    for name, (_, desc) in SUITES.items():
        print(f"{name:20s} {desc}")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return cmd_compute(args, parser)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "list-suites":
        return cmd_list_suites(args, parser)
    parser.error("unknown command")


if __name__ == "__main__":
    sys.exit(main())
