"""Command-line front end: ``egoenergy {generate,analyze,sweep,energies}``.

Exit codes: 0 success, 2 invalid arguments or input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys

from .centrality import CLUSTERING_VARIANTS, FEATURES, feature_matrix
from .generators import GenSpec, InvalidParam, generate, validate, write_manifest
from .graph import GraphError, read_edgelist, write_edgelist
from .spectral import ego_energies
from .sweep import ConfigInvalid, default_sweep, format_real, run_sweep, write_sweep

log = logging.getLogger("egoenergy")

EXIT_INVALID = 2
EXIT_IO = 3

MODEL_NAMES = {"er": "ER", "ws": "WS", "hk": "HK", "waxman": "WAXMAN"}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("EGONET_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise CliError(f"EGONET_SEED={env!r} is not an integer", EXIT_INVALID) from None


def _read_graph(path):
    try:
        return read_edgelist(path)
    except GraphError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INVALID) from exc
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc


def _gen_spec(args) -> GenSpec:
    model = MODEL_NAMES[args.model]
    if model == "ER":
        params = {"p": args.p}
    elif model == "WS":
        params = {"k": args.k, "p": args.p}
    elif model == "HK":
        params = {"m": args.m, "p_triangle": args.p_triangle}
    else:
        params = {"alpha": args.alpha, "beta": args.beta}
    missing = [k for k, v in params.items() if v is None]
    if missing:
        raise CliError(f"--model {args.model} needs {', '.join('--' + k.replace('_', '-') for k in missing)}",
                       EXIT_INVALID)
    try:
        spec = GenSpec(model, args.n, params, _seed(args.seed))
        validate(spec)
    except InvalidParam as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    return spec


def cmd_generate(args) -> None:
    spec = _gen_spec(args)
    g = generate(spec)
    try:
        write_edgelist(g, args.out)
        write_manifest(spec, f"{args.out}.manifest.json")
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from exc
    log.info("wrote %s (n=%d, m=%d)", args.out, g.n, g.m)


def cmd_analyze(args) -> None:
    g = _read_graph(args.input)
    table = feature_matrix(g, args.clustering)
    rows = [[v, int(r[0]), *(format_real(float(x)) for x in r[1:])] for v, r in enumerate(table)]
    header = ["vertex", *FEATURES]
    try:
        if args.out is None:
            w = csv.writer(sys.stdout, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(header)
                w.writerows(rows)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}", EXIT_IO) from exc


def cmd_energies(args) -> None:
    g = _read_graph(args.input)
    if args.all:
        vertices = range(g.n)
    else:
        if not 0 <= args.vertex < g.n:
            raise CliError(f"vertex {args.vertex} outside [0, {g.n})", EXIT_INVALID)
        vertices = [args.vertex]
    for v in vertices:
        e = ego_energies(g, v)
        print(v, *(f"{x:.12f}" for x in e))


def cmd_sweep(args) -> None:
    model = MODEL_NAMES[args.model]
    fixed = {}
    if model == "WS" and args.k is not None:
        fixed["k"] = args.k
    if model == "HK" and args.m is not None:
        fixed["m"] = args.m
    if model == "WAXMAN" and args.beta is not None:
        fixed["beta"] = args.beta
    try:
        cfg = default_sweep(model, steps=args.steps, n=args.n, replicates=args.replicates,
                            base_seed=_seed(args.seed), bins=args.bins, **fixed)
    except ConfigInvalid as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    jobs = args.jobs or os.cpu_count() or 1
    result = run_sweep(cfg, jobs=jobs)
    for r in result.failures():
        log.warning("instance %s replicate %d failed: %s", r.param_value, r.replicate, r.error)
    try:
        write_sweep(result, args.outdir)
    except OSError as exc:
        raise CliError(f"cannot write {args.outdir}: {exc}", EXIT_IO) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="egoenergy", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a random graph as an edge list")
    gen.add_argument("--model", choices=sorted(MODEL_NAMES), required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, help="ER edge / WS rewiring probability")
    gen.add_argument("--k", type=int, default=4, help="WS lattice degree")
    gen.add_argument("--m", type=int, default=2, help="HK edges per new vertex")
    gen.add_argument("--p-triangle", type=float, help="HK triangle-closure probability")
    gen.add_argument("--alpha", type=float, help="Waxman alpha")
    gen.add_argument("--beta", type=float, default=0.1, help="Waxman beta")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="per-vertex features of an edge list as CSV")
    ana.add_argument("--in", dest="input", required=True)
    ana.add_argument("--out")
    ana.add_argument("--clustering", choices=CLUSTERING_VARIANTS, default="standard")
    ana.set_defaults(func=cmd_analyze)

    sw = sub.add_parser("sweep", help="run a parameter sweep and write CSV tables")
    sw.add_argument("--model", choices=sorted(MODEL_NAMES), required=True)
    sw.add_argument("--steps", type=int, default=100)
    sw.add_argument("--replicates", type=int, default=5)
    sw.add_argument("--n", type=int, default=100)
    sw.add_argument("--seed", type=int)
    sw.add_argument("--bins", type=int, default=32)
    sw.add_argument("--jobs", type=int, default=0, help="worker processes (default: all CPUs)")
    sw.add_argument("--k", type=int)
    sw.add_argument("--m", type=int)
    sw.add_argument("--beta", type=float)
    sw.add_argument("--outdir", required=True)
    sw.set_defaults(func=cmd_sweep)

    en = sub.add_parser("energies", help="egonet energies of one or all vertices")
    en.add_argument("--in", dest="input", required=True)
    pick = en.add_mutually_exclusive_group(required=True)
    pick.add_argument("--vertex", type=int)
    pick.add_argument("--all", action="store_true")
    en.set_defaults(func=cmd_energies)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except CliError as exc:
        print(f"egoenergy: error: {exc}", file=sys.stderr)
        return exc.code
    return 0


if __name__ == "__main__":
    sys.exit(main())
