"""
lvc-tester: command-line entry point

    main.py dim       --class intervals:k=2 --domain line:size=10 [--certificate]
    main.py distance  --class intervals:k=1 --instance inst.txt [--labels 0110|@file]
    main.py test      --tester one-sided --class halfspace:n=2 --instance inst.txt --eps 0.1 --seed 7
    main.py sweep     --generator monotone-chain:n=64 --eps 0.2 --grid 20,40,80 --trials 100 --out runs.csv
    main.py hardgen   ssd --class intervals:k=2 --domain line:size=20 --side no --out inst.txt
    main.py verify    dims sauer | all | --list
    main.py emit      --input runs.csv --format svg --out runs.svg
"""
import sys
import os
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import argparse
import json
from typing import Any, Dict, List, Optional, Tuple

from app.classes import Junta, Monotone, SymmetricThreshold, parse_class_spec
from app.core import Labelling
from app.dimension import classify_extremal, lvc_dim, lvc_dim_with_certificate, vc_dim, vc_dim_with_certificate
from app.distance import METHOD_AUTO, METHOD_GENERIC, exact_distance
from app.emit import convert, emit, records_to_csv
from app.hardness import cluster_instance, lp_hard_instance, ssd_instance, ssd_parameters
from app.instance_io import format_point, parse_domain_spec, read_instance, write_instance
from app.sweep import SweepConfig, sweep
from app.testers import (
    TesterConfig, cluster_test, monotone_test, run_birthday_ssd, run_junta_test, run_lp_feasibility_test,
    run_one_sided_vc_test, symmetric_test,
)
from app.utils.config.config_constants import (
    CFG_CLASS, CFG_EPS, CFG_GENERATOR, CFG_GRID, CFG_SEED, CFG_TARGET, CFG_THREADS, CFG_TRIALS, FORMAT_CSV,
    VALID_FORMATS, VALID_SIDES, VALID_SUITES,
)
from app.utils.config.settings import get_default_seed, get_threads, load_config_file, merge_cli_overrides
from app.utils.constants import DEFAULT_SSD_MULTIPLIER, DEFAULT_TARGET, SYMMETRIC_FRACTION
from app.utils.error_handler import (
    DegenerateInputError, LvcError, SpecParseError, format_error_for_logging, handle_cli_exception,
)
from app.utils.metrics import write_metrics
from app.verify import SUITE_ALL, verify_many

# ========== LOGGING CONFIGURATION ==========
from app.utils.logger_config import get_logger, set_log_level

logger = get_logger()
# ===========================================

TESTERS = ["one-sided", "junta", "monotone", "symmetric", "lp", "cluster", "birthday"]
HARDGEN_KINDS = ["ssd", "lp", "cluster"]


def _print_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2, default=str))


def _seed(args) -> int:
    return args.seed if args.seed is not None else get_default_seed()


def _read_labels(text: str, domain) -> Labelling:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = "".join(fh.read().split())
    return Labelling.from_string(domain, text)


# ========== DIM ==========

def _certificate_payload(certificate, kind: str) -> Optional[Dict[str, Any]]:
    if certificate is None:
        return None
    return {"subset": [format_point(p, kind) for p in certificate.subset],
            "labelling": list(certificate.labelling)}


def _print_table(rows: List[Tuple[str, Any]]) -> None:
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"  {name.ljust(width)}  {value}")


def cmd_dim(args) -> int:
    C = parse_class_spec(args.class_spec)
    S = parse_domain_spec(args.domain)
    report = classify_extremal(C, S)
    payload: Dict[str, Any] = {"class": C.spec, "domain": args.domain, **report.model_dump()}
    if args.certificate:
        _, vc_cert = vc_dim_with_certificate(C, S)
        _, lvc_cert = lvc_dim_with_certificate(C, S)
        payload["vc_certificate"] = _certificate_payload(vc_cert, S.kind)
        payload["lvc_certificate"] = _certificate_payload(lvc_cert, S.kind)
    _print_json(payload)
    print()
    rows = [(name, value) for name, value in payload.items() if not name.endswith("_certificate")]
    for name in ("vc_certificate", "lvc_certificate"):
        if name in payload:
            cert = payload[name]
            value = "-" if cert is None else (
                f"{{{', '.join(cert['subset'])}}} ↦ {''.join(str(b) for b in cert['labelling'])}")
            rows.append((name, value))
    _print_table(rows)
    return 0


# ========== DISTANCE ==========

def cmd_distance(args) -> int:
    C = parse_class_spec(args.class_spec)
    D, f = read_instance(args.instance)
    if args.labels is not None:
        f = _read_labels(args.labels, D.domain)
    if f is None:
        raise SpecParseError(f"{args.instance} has no [labels] block and --labels was not given")
    value = exact_distance(f, C, D, method=args.method)
    _print_json({"class": C.spec, "distance": str(value), "distance_float": float(value)})
    return 0


# ========== TEST ==========

def cmd_test(args) -> int:
    D, f = read_instance(args.instance)
    if args.labels is not None:
        f = _read_labels(args.labels, D.domain)
    cfg = TesterConfig(epsilon=args.eps, m=args.m, s=args.s, seed=_seed(args))
    tester = args.tester

    if tester == "birthday":
        if args.d is None:
            raise DegenerateInputError("--d is required for the birthday tester")
        answer = run_birthday_ssd(D, args.d, cfg.seed, m=cfg.m)
        _print_json({"tester": tester, "answer": answer})
        return 0
    if tester == "cluster":
        verdict = cluster_test(D, args.k if args.k is not None else 1, cfg)
        _print_json(verdict.model_dump())
        return 0

    if f is None:
        raise SpecParseError(f"{args.instance} has no [labels] block and --labels was not given")
    if tester == "lp":
        verdict = run_lp_feasibility_test(D, f, cfg)
    else:
        if args.class_spec is None:
            raise SpecParseError(f"--class is required for the {tester} tester")
        C = parse_class_spec(args.class_spec)
        if tester == "one-sided":
            verdict = run_one_sided_vc_test(C, D, f, cfg)
        elif tester == "junta":
            if not isinstance(C, Junta):
                raise SpecParseError("the junta tester needs a junta:n=..,k=.. class")
            verdict = run_junta_test(D, f, C.n, C.k, cfg)
        elif tester == "monotone":
            if not isinstance(C, Monotone):
                raise SpecParseError("the monotone tester needs a monotone:poset=@file class")
            verdict = monotone_test(C.poset, D, f, cfg)
        else:
            if not isinstance(C, SymmetricThreshold):
                raise SpecParseError("the symmetric tester needs a symmetric:n=.. class")
            t = None if C.t == C.n // SYMMETRIC_FRACTION else C.t
            verdict = symmetric_test(C.n, f, cfg, t=t)
    _print_json(verdict.model_dump())
    return 0


# ========== SWEEP ==========

def _sweep_config(args) -> SweepConfig:
    file_values = load_config_file(args.config) if args.config else {}
    merged = merge_cli_overrides(file_values, {
        CFG_CLASS: args.class_spec, CFG_GENERATOR: args.generator, CFG_EPS: args.eps, CFG_GRID: args.grid,
        CFG_TRIALS: args.trials, CFG_TARGET: args.target, CFG_SEED: args.seed, CFG_THREADS: args.threads,
    })
    if CFG_GENERATOR not in merged or CFG_EPS not in merged or CFG_GRID not in merged:
        raise SpecParseError("sweep needs generator, eps and grid (flags or config file)")
    grid = merged[CFG_GRID]
    if isinstance(grid, str):
        grid = [int(v) for v in grid.replace(" ", "").split(",") if v]
    return SweepConfig(
        class_spec=merged.get(CFG_CLASS),
        generator=str(merged[CFG_GENERATOR]),
        eps=float(merged[CFG_EPS]),
        grid=grid,
        trials=int(merged.get(CFG_TRIALS, 100)),
        target=float(merged.get(CFG_TARGET, DEFAULT_TARGET)),
        seed=int(merged.get(CFG_SEED, get_default_seed())),
        threads=int(merged.get(CFG_THREADS, get_threads())),
    )


def cmd_sweep(args) -> int:
    cfg = _sweep_config(args)
    result = sweep(cfg)
    if args.out:
        emit(result.records, args.format, args.out)
    else:
        sys.stdout.write(records_to_csv(result.records))
    logger.info(f"📊 m mínimo con objetivo {cfg.target:.3f}: {result.minimal_m}")
    return 0


# ========== HARDGEN ==========

def cmd_hardgen(args) -> int:
    seed = _seed(args)
    side = args.side
    header = [f"hardgen {args.kind} side={side} seed={seed}"]
    if args.kind == "ssd":
        if args.class_spec is None or args.domain is None:
            raise SpecParseError("hardgen ssd needs --class and --domain")
        C = parse_class_spec(args.class_spec)
        S = parse_domain_spec(args.domain)
        params = ssd_parameters(vc_dim(C, S), lvc_dim(C, S), len(S), K=args.K)
        instance = ssd_instance(C, S, side, params, seed)
        header.append(f"class {C.spec} alpha={params.alpha} beta={params.beta}")
        write_instance(args.out, instance.pushforward, instance.f, header)
    elif args.kind == "lp":
        instance = lp_hard_instance(args.n, side, seed)
        write_instance(args.out, instance.distribution(), instance.labels, header)
    else:
        instance = cluster_instance(args.n, args.k, args.eta, args.m, side, seed)
        header.append(f"n={args.n} k={args.k} eta={args.eta} m={args.m}")
        write_instance(args.out, instance.distribution(), None, header)
    return 0


# ========== VERIFY ==========

def cmd_verify(args) -> int:
    if args.list:
        for name in VALID_SUITES:
            print(name)
        return 0
    suites = args.suites or [SUITE_ALL]
    reports = verify_many(suites, seed=args.seed, threads=args.threads)
    if args.json:
        _print_json([r.model_dump() for r in reports])
    else:
        for report in reports:
            print(f"[{report.suite}] {'PASS' if report.passed else 'FAIL'} ({report.elapsed:.1f}s)")
            for c in report.checks:
                mark = "✅" if c.passed else "❌"
                print(f"  {mark} {c.name}\n      expected: {c.expected}\n      observed: {c.observed}")
    return 0 if all(r.passed for r in reports) else 1


# ========== EMIT ==========

def cmd_emit(args) -> int:
    count = convert(args.input, args.format, args.out)
    logger.info(f"✅ {count} registros convertidos a {args.format}")
    return 0


# ========== PARSER ==========

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lvc-tester", description="VC / LVC dimensions and sample-based testers")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default LVC_THREADS)")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument("--config", default=None, help="key=value config file; flags override it")
    parser.add_argument("--metrics-out", default=None, help="write Prometheus counters to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="VC / LVC dimension, growth and shattering number")
    p.add_argument("--class", dest="class_spec", required=True)
    p.add_argument("--domain", required=True)
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("distance", help="exact distance of a labelling to a class")
    p.add_argument("--class", dest="class_spec", required=True)
    p.add_argument("--instance", required=True)
    p.add_argument("--labels", default=None, help="0/1 string or @file")
    p.add_argument("--method", choices=[METHOD_AUTO, METHOD_GENERIC], default=METHOD_AUTO)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("test", help="run one tester on an instance file")
    p.add_argument("--tester", choices=TESTERS, default="one-sided")
    p.add_argument("--class", dest="class_spec", default=None)
    p.add_argument("--instance", required=True)
    p.add_argument("--labels", default=None)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--k", type=int, default=None, help="cluster count (cluster tester)")
    p.add_argument("--d", type=int, default=None, help="small support size (birthday tester)")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("sweep", help="Monte-Carlo acceptance rates over a grid of sample sizes")
    p.add_argument("--class", dest="class_spec", default=None)
    p.add_argument("--generator", default=None)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--grid", default=None, help="comma-separated, strictly increasing")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--target", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=sorted(VALID_FORMATS), default=FORMAT_CSV)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("hardgen", help="write a hard instance file")
    p.add_argument("kind", choices=HARDGEN_KINDS)
    p.add_argument("--side", choices=sorted(VALID_SIDES), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--class", dest="class_spec", default=None)
    p.add_argument("--domain", default=None)
    p.add_argument("--K", type=int, default=DEFAULT_SSD_MULTIPLIER)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--eta", type=float, default=0.05)
    p.add_argument("--m", type=int, default=60)
    p.set_defaults(func=cmd_hardgen)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*", help=f"suite names or {SUITE_ALL}")
    p.add_argument("--list", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("emit", help="convert experiment records between csv, json and svg")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=sorted(VALID_FORMATS), required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_emit)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        set_log_level(args.log_level)
    try:
        return args.func(args)
    except (LvcError, ValueError, OSError, RuntimeError) as exc:
        logger.error(format_error_for_logging(exc, args.command))
        detail = handle_cli_exception(exc, args.command)
        print(json.dumps(detail, indent=2, default=str), file=sys.stderr)
        return detail["exit_status"]
    finally:
        if args.metrics_out:
            write_metrics(args.metrics_out)


if __name__ == "__main__":
    sys.exit(main())
