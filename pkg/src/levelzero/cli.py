"""Command-line entry point: enumeration, export and verification reports.

Exit codes: 0 every check passed, 1 a mathematical failure (counterexample in
the report), 2 usage or configuration error, 3 inconclusive (truncation).
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import crystal as cr
from .cartan import datum as make_datum, positive_roots_up_to, random_finite_root_vector, verify_coxeter_identity
from .qmodule.verify import SUITES, suite_names, verify_suite
from .weyl import ConvexOrderSequence, period_word, validate_period_word

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

DEFAULTS = {
    "type": "A",
    "rank": 1,
    "lambda": "1",
    "band": 2,
    "nmax": 3,
    "window": 200,
    "suite": "all",
    "format": "json",
    "output": None,
    "seed": 0,
    "samples": 10,
    "jobs": 1,
    "timings": True,
    "param": (),
}
INT_KEYS = {"rank", "band", "nmax", "window", "seed", "samples", "jobs"}
COMMANDS = ("roots", "coxeter", "convex-order", "crystal", "census", "verify")


class UsageError(ValueError):
    pass


# ------------------------------------------------------------------ config


def read_config_file(path):
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (x.strip() for x in line.split("=", 1))
            key = key.lstrip("-")
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = value
    return out


def resolve_config(args) -> tuple[dict, set]:
    """Merge defaults < config file < flags; returns (config, explicitly set keys)."""
    config = dict(DEFAULTS)
    explicit = set()
    if args.config:
        try:
            file_values = read_config_file(args.config)
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        config.update(file_values)
        explicit |= set(file_values)
    for key in DEFAULTS:
        value = getattr(args, key.replace("-", "_"), None)
        if value is not None:
            config[key] = value
            explicit.add(key)
    for key in INT_KEYS:
        try:
            config[key] = int(config[key])
        except (TypeError, ValueError) as exc:
            raise UsageError(f"{key} must be an integer, got {config[key]!r}") from exc
    if isinstance(config["param"], str):
        config["param"] = [x for x in config["param"].split(",") if x.strip()]
    config["param"] = sorted(x.strip() for x in config["param"])
    if isinstance(config["timings"], str):
        config["timings"] = config["timings"].lower() not in ("0", "false", "no", "off")
    config["type"] = str(config["type"]).upper()
    if config["format"] not in ("json", "dot", "csv"):
        raise UsageError(f"unknown format {config['format']!r}")
    return config, explicit


def parse_lambda(text, rank):
    """'2' -> {1: 2}; '1,0,1' -> {1: 1, 3: 1}."""
    try:
        values = [int(x) for x in str(text).split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"--lambda must be comma-separated integers, got {text!r}") from exc
    if not values or len(values) > rank or any(v < 0 for v in values) or not any(values):
        raise UsageError(f"--lambda needs 1..{rank} nonnegative entries, not all zero")
    return {i: m for i, m in enumerate(values, 1) if m}


def get_datum(config):
    try:
        return make_datum(config["type"], config["rank"])
    except (ValueError, KeyError, AssertionError, IndexError) as exc:
        raise UsageError(f"no datum {config['type']}{config['rank']}: {exc}") from exc


def type_a_n(config):
    if config["type"] != "A":
        raise UsageError("crystal and module computations are implemented for type A only")
    return config["rank"] + 1


# ---------------------------------------------------------------- commands


def cmd_roots(config, explicit):
    d = get_datum(config)
    roots = [dict(r.to_json(), multiplicity=m) for r, m in positive_roots_up_to(d, config["band"])]
    return {"status": "pass", "datum": d.to_json(), "max_delta_degree": config["band"], "roots": roots}


def cmd_coxeter(config, explicit):
    d = get_datum(config)
    rng = random.Random(config["seed"])
    xis = [d.alpha(j) for j in d.finite_index_set]
    xis += [random_finite_root_vector(d, rng) for _ in range(config["samples"])]
    checks = [verify_coxeter_identity(d, i, xi).to_json() for i in d.finite_index_set for xi in xis]
    bad = [c for c in checks if c["status"] != "pass"]
    return {"status": "fail" if bad else "pass", "indices": list(d.finite_index_set),
            "xi_count": len(xis), "checks": checks, "counterexamples": bad}


def cmd_convex_order(config, explicit):
    d = get_datum(config)
    seq = ConvexOrderSequence(d, period_word(d))
    w = config["window"]
    report = validate_period_word(seq, -w, w)
    out = report.to_json()
    shown = min(w, 2 * seq.period)
    out["beta"] = [{"k": k, **r.to_json()} for k, r in zip(range(-shown, shown + 1), seq.window(-shown, shown))]
    return out


def cmd_crystal(config, explicit):
    n = type_a_n(config)
    shape = parse_lambda(config["lambda"], config["rank"])
    C = cr.level_zero_tensor(n, shape)
    graph = cr.connected_component(C, C.seed(), config["band"])
    bad = graph.check_axioms()
    # axioms are checked on every enumerated node, edges leaving the band included
    status = "fail" if bad else "pass"
    if config["format"] == "dot":
        return {"status": status, "_text": graph.to_dot("levelzero")}
    return {
        "status": status,
        "nodes": [{"label": cr._node_label(b), "weight": list(C.weight_key(b)[0]), "degree": C.weight_key(b)[1],
                   "boundary": b in graph.boundary} for b in graph.nodes],
        "edges": [[graph._index[s], i, graph._index[t]] for s, i, t in graph.edges],
        "truncated": graph.truncated,
        "axiom_violations": [[a, cr._node_label(b), i] for a, b, i in bad],
    }


def cmd_census(config, explicit):
    n = type_a_n(config)
    shape = parse_lambda(config["lambda"], config["rank"])
    census = cr.bijection_census(n, shape, config["nmax"], config["band"])
    body = census.to_json()
    status = "pass" if census.independent else "fail"
    if config["format"] == "csv":
        return {"status": status, "_text": _csv(["weight", "degree", "N", "count", "truncated"],
                                                [[_w(s["weight"]), s["degree"], s["N"], s["count"], s["truncated"]]
                                                 for s in body["slots"]])}
    return {"status": status, **body}


def suite_params(name, config, explicit):
    """Translate explicitly set config keys into keyword arguments of a suite."""
    accepted = inspect.signature(SUITES[name]).parameters
    params = {}
    if {"type", "rank"} & explicit:
        if "n" in accepted:
            params["n"] = type_a_n(config)
        elif "max_n" in accepted:
            params["max_n"] = type_a_n(config)
        elif "ranks" in accepted:
            params["ranks"] = [config["rank"]]
        elif "max_rank" in accepted:
            params["max_rank"] = config["rank"]
    if "lambda" in explicit and "shape" in accepted:
        params["shape"] = parse_lambda(config["lambda"], config["rank"])
    if "band" in explicit and "band" in accepted:
        params["band"] = config["band"]
    if "nmax" in explicit and "n_max" in accepted:
        params["n_max"] = config["nmax"]
    if "window" in explicit and "window" in accepted:
        params["window"] = config["window"]
    if "seed" in explicit and "seed" in accepted:
        params["seed"] = config["seed"]
    if "samples" in explicit and "random_samples" in accepted:
        params["random_samples"] = config["samples"]
    for key, value in parse_params(config["param"]).items():
        if key in accepted:
            params[key] = value
    return params


def parse_params(items):
    """'literal=false' -> {'literal': False}; values are read as JSON, else kept as text."""
    out = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--param expects key=value, got {item!r}")
        raw = raw.strip()
        try:
            value = json.loads(raw.lower() if raw.lower() in ("true", "false", "null") else raw)
        except json.JSONDecodeError:
            value = raw
        if isinstance(value, dict):
            value = {int(k) if k.isdigit() else k: v for k, v in value.items()}
        out[key.strip()] = value
    return out


def _run_suite(args):
    name, params = args
    return verify_suite(name, params).to_json()


def cmd_verify(config, explicit):
    names = suite_names() if config["suite"] == "all" else [s.strip() for s in config["suite"].split(",")]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; available: {', '.join(suite_names())}")
    extra = set(parse_params(config["param"]))
    stray = extra - {k for s in names for k in inspect.signature(SUITES[s]).parameters}
    if stray:
        raise UsageError(f"no selected suite takes {sorted(stray)}")
    jobs = [(name, suite_params(name, config, explicit)) for name in sorted(names)]
    if config["jobs"] > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config["jobs"]) as pool:
            reports = list(pool.map(_run_suite, jobs))
    else:
        reports = [_run_suite(job) for job in jobs]
    if not config["timings"]:
        for r in reports:
            r["timings"] = None
    statuses = {r["status"] for r in reports}
    status = "fail" if "fail" in statuses else ("inconclusive" if "inconclusive" in statuses else "pass")
    if config["format"] == "csv":
        return {"status": status, "_text": _suite_csv(reports)}
    if config["format"] == "dot":
        raise UsageError("verify supports json and csv output")
    if len(reports) == 1:
        return dict(reports[0])
    return {"status": status, "suites": reports}


def _suite_csv(reports):
    rows = []
    for r in reports:
        tables = [w["table"] for w in r["witnesses"] if isinstance(w, dict) and "table" in w]
        for table in tables:
            for s in table:
                rows.append([r["suite"], _w(s["weight"]), s["degree"], s["N"], s["census"], s["module"],
                             s["truncated"], s["status"]])
    if rows:
        return _csv(["suite", "weight", "degree", "N", "census", "module", "truncated", "status"], rows)
    return _csv(["suite", "status", "checks", "counterexamples"],
                [[r["suite"], r["status"], r["checks"], len(r["counterexamples"])] for r in reports])


def _w(weight):
    return " ".join(str(x) for x in weight)


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


HANDLERS = {
    "roots": cmd_roots,
    "coxeter": cmd_coxeter,
    "convex-order": cmd_convex_order,
    "crystal": cmd_crystal,
    "census": cmd_census,
    "verify": cmd_verify,
}
FORMATS = {
    "roots": ("json",),
    "coxeter": ("json",),
    "convex-order": ("json",),
    "crystal": ("json", "dot"),
    "census": ("json", "csv"),
    "verify": ("json", "csv"),
}


# -------------------------------------------------------------------- main


def build_parser():
    parser = argparse.ArgumentParser(prog="levelzero", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", help="key=value file; flags override it")
    parser.add_argument("--type", help="Dynkin family A, D or E (default A)")
    parser.add_argument("--rank", type=int, help="finite rank (default 1)")
    parser.add_argument("--lambda", dest="lambda", help="comma-separated m_i of lambda = sum m_i varpi_i")
    parser.add_argument("--band", type=int, help="z-degree band |m| <= band (delta-degree bound for roots)")
    parser.add_argument("--nmax", type=int, help="largest |degree| tabulated by census")
    parser.add_argument("--window", type=int, help="convex-order window |k| <= window")
    parser.add_argument("--suite", help=f"suite name, comma list, or all: {', '.join(suite_names())}")
    parser.add_argument("--format", choices=("json", "dot", "csv"))
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--seed", type=int, help="RNG seed for sampled identities")
    parser.add_argument("--samples", type=int, help="random xi per datum for coxeter")
    parser.add_argument("--param", action="append", metavar="KEY=VALUE",
                        help="extra keyword for the selected suites, e.g. literal=false (repeatable)")
    parser.add_argument("--jobs", type=int, help="parallel workers for verify")
    parser.add_argument("--no-timings", dest="timings", action="store_const", const=False,
                        help="omit wall time so reports are byte-reproducible")
    return parser


def run(argv=None):
    """Returns (exit code, report text, output path or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_PASS if exc.code == 0 else EXIT_USAGE), "", None
    start = time.perf_counter()
    try:
        config, explicit = resolve_config(args)
        if config["format"] not in FORMATS[args.command]:
            raise UsageError(f"{args.command} does not support --format {config['format']}")
        result = HANDLERS[args.command](config, explicit)
    except UsageError as exc:
        print(f"levelzero: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, "", None
    elapsed = time.perf_counter() - start
    status = result.pop("status")
    text = result.pop("_text", None)
    if text is None:
        echo = {k: config[k] for k in sorted(config)}
        report = {"command": args.command, "config": echo, "status": status}
        report.update(result)
        report["timings"] = {"seconds": round(elapsed, 3)} if config["timings"] else None
        text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    code = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[status]
    if config["output"]:
        with open(config["output"], "w", encoding="utf-8") as fh:
            fh.write(text)
    return code, text, config["output"]


def main(argv=None):
    code, text, path = run(argv)
    if text and not path:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
