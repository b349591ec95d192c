"""Command line: ``pathreg props|betti|verify``.

Exit codes: 0 success, 1 a claim failed, 2 bad input or configuration.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .betti import DEFAULT_ENGINE_CAP, EngineCapError, FieldSpec, betti_table, steps_str
from .corpus import MAX_BUILTIN_N, generate_all_graphs, generate_up_to
from .graph import Graph, GraphFormatError, parse_edge_list, parse_graph6, read_graph6_lines, write_graph6
from .ideal import format_ideal, graph_ideal
from .props import property_flags
from .verify import (
    CLAIM_IDS,
    CacheWriter,
    Fault,
    build_report,
    dump_report,
    load_cache,
    run_corpus,
)

log = logging.getLogger("pathreg")

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Config:
    field: str = "GF(2)"
    t_max: int = 5
    jobs: int = os.cpu_count() or 1
    cache_path: str | None = None
    engine_cap: int = DEFAULT_ENGINE_CAP

    def validate(self) -> None:
        FieldSpec.parse(self.field)
        if self.t_max < 3:
            raise ValueError("t_max must be at least 3")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)


def load_config(path: str | None, overrides: dict) -> Config:
    values = {}
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                values = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read config {path}: {exc}") from exc
        unknown = set(values) - set(Config.__dataclass_fields__)
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
    values.update({k: v for k, v in overrides.items() if v is not None})
    cfg = Config(**values)
    try:
        cfg.validate()
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return cfg


def read_graphs(source: str) -> list[Graph]:
    """A graph6 string, a graph6 file (one per line), or an edge-list file."""
    path = Path(source)
    try:
        if path.exists():
            text = path.read_text(encoding="ascii")
            first = next(
                (ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")),
                "",
            )
            if first.startswith("n ") or first == "n":
                return [parse_edge_list(text)]
            return list(read_graph6_lines(text.splitlines()))
        if source.endswith((".g6", ".txt", ".edges", ".json")) or os.sep in source:
            raise InputError(f"no such file: {source}")
        return [parse_graph6(source)]
    except (GraphFormatError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot parse {source!r}: {exc}") from exc


def _flag(b: bool) -> str:
    return "true" if b else "false"


def cmd_props(args) -> int:
    for g in read_graphs(args.input):
        flags = property_flags(g)
        fields = " ".join(f"{k}={_flag(v)}" for k, v in flags.as_dict().items())
        print(f"{write_graph6(g)} {fields}")
    return EXIT_OK


def cmd_betti(args) -> int:
    if args.t < 2:
        raise InputError("t must be at least 2 (2 = edge ideal)")
    field = FieldSpec.parse(args.field)
    out = []
    for g in read_graphs(args.input):
        ideal = graph_ideal(g, args.t)
        entry = {"graph6": write_graph6(g), "t": args.t, "field": str(field), "convention": "ideal"}
        if ideal.is_zero:
            entry["zero"] = True
            out.append(entry)
            if not args.json:
                print(f"{entry['graph6']} t={args.t}: ZERO IDEAL")
            continue
        try:
            table = betti_table(ideal, field, cap=args.engine_cap)
        except EngineCapError as exc:
            raise InputError(str(exc)) from exc
        entry.update(
            ideal=format_ideal(ideal),
            betti=table.triples(),
            regularity=table.regularity(),
            steps=steps_str(table.linearity_steps()),
        )
        out.append(entry)
        if not args.json:
            print(f"{entry['graph6']} t={args.t} over {field} (ideal convention)")
            print(f"  I = {entry['ideal']}")
            for triple in entry["betti"]:
                print(f"  {triple}")
            print(f"  regularity {entry['regularity']}")
            print(f"  linearity_steps {entry['steps']}")
    if args.json:
        print(json.dumps(out, sort_keys=True, indent=1))
    return EXIT_OK


def _parse_claims(text: str) -> list[str]:
    if text == "all":
        return list(CLAIM_IDS)
    claims = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in claims if c not in CLAIM_IDS]
    if unknown:
        raise InputError(f"unknown claims {unknown}; choose from {', '.join(CLAIM_IDS)}")
    return claims


def _load_fault(path: str) -> Fault:
    try:
        with open(path, encoding="utf-8") as fh:
            return Fault.from_dict(json.load(fh))
    except (OSError, json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"cannot load fault fixture {path}: {exc}") from exc


def cmd_verify(args) -> int:
    cfg = load_config(
        args.config,
        {
            "field": args.field,
            "t_max": args.t_max,
            "jobs": args.jobs,
            "cache_path": args.cache,
            "engine_cap": args.engine_cap,
        },
    )
    claims = _parse_claims(args.claims)
    if args.input:
        graphs = read_graphs(args.input)
        source = args.input
    elif args.gen_n is not None:
        if not 0 <= args.gen_n <= MAX_BUILTIN_N:
            raise InputError(f"--gen-n must be in [0, {MAX_BUILTIN_N}]")
        graphs = generate_all_graphs(args.gen_n)
        source = f"generated n={args.gen_n}"
    elif args.gen_max is not None:
        if not 0 <= args.gen_max <= MAX_BUILTIN_N:
            raise InputError(f"--gen-max must be in [0, {MAX_BUILTIN_N}]")
        graphs = generate_up_to(args.gen_max)
        source = f"generated n<={args.gen_max}"
    else:
        raise InputError("give --input, --gen-n or --gen-max")
    if args.filter:
        wanted = [p.strip().replace("-", "_") for p in args.filter.split(",")]
        graphs = [g for g in graphs if all(getattr(property_flags(g), p) for p in wanted)]
        source += f" filtered by {','.join(wanted)}"
    log.info("%d graphs from %s", len(graphs), source)

    fault = _load_fault(args.fault) if args.fault else None
    cache = load_cache(cfg.cache_path) if cfg.cache_path else None

    try:
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
        with open(args.output, "a", encoding="utf-8"):
            pass
    except OSError as exc:
        raise InputError(f"cannot write report to {args.output}: {exc}") from exc

    records = run_corpus(
        graphs, cfg.t_max, claims, cfg.field_spec,
        jobs=cfg.jobs, cap=cfg.engine_cap, fault=fault, cache=cache,
    )
    if cfg.cache_path:
        added = CacheWriter(cfg.cache_path).append(records)
        log.info("cache: %d new entries", added)

    # jobs and cache location do not affect results, so they stay out of the report
    config_echo = {
        "field": str(cfg.field_spec),
        "t_max": cfg.t_max,
        "engine_cap": cfg.engine_cap,
        "claims": claims,
        "source": source,
        "fault": asdict(fault) if fault else None,
    }
    report = build_report(records, config_echo, claims)
    Path(args.output).write_text(dump_report(report), encoding="utf-8")

    summary = report["summary"]
    print(f"pathreg {__version__}: {summary['graphs']} graphs, field {config_echo['field']}, t_max {cfg.t_max}")
    for claim, tally in summary["per_claim"].items():
        print(f"  {claim:6s} holds={tally['holds']:6d} vacuous={tally['vacuous']:6d} failed={tally['failed']:4d}")
    for failure in summary["failures"][:20]:
        print(f"  FAILED {failure['claim']} t={failure.get('t')} on {failure['witness']['graph6']}: {failure['witness']}")
    if summary["errors"]:
        print(f"  {summary['errors']} graphs had engine errors (see report)")
    print(f"report written to {args.output}")
    return EXIT_FAILED if summary["failed"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pathreg", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"pathreg {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("props", help="print gap/claw/cricket-freeness and chordality")
    p.add_argument("input", help="graph6 string, graph6 file, or edge-list file")
    p.set_defaults(func=cmd_props)

    b = sub.add_parser("betti", help="graded Betti table of the edge (t=2) or t-path ideal")
    b.add_argument("input")
    b.add_argument("-t", type=int, default=2)
    b.add_argument("--field", default="GF(2)")
    b.add_argument("--engine-cap", type=int, default=DEFAULT_ENGINE_CAP)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_betti)

    v = sub.add_parser("verify", help="check the regularity claims over a graph corpus")
    src = v.add_mutually_exclusive_group()
    src.add_argument("--input", help="graph6 file, edge-list file or graph6 string")
    src.add_argument("--gen-n", type=int, help="all graphs on exactly N vertices (N <= 7)")
    src.add_argument("--gen-max", type=int, help="all graphs on at most N vertices (N <= 7)")
    v.add_argument("--filter", help="comma-separated properties the graphs must have, e.g. gap_free")
    v.add_argument("--claims", default="all", help="'all' or a comma-separated list such as T3.2,T3.10")
    v.add_argument("--t-max", type=int)
    v.add_argument("--field")
    v.add_argument("--jobs", type=int)
    v.add_argument("--cache", help="JSONL Betti cache to read and extend")
    v.add_argument("--engine-cap", type=int)
    v.add_argument("--config", help="JSON config file; flags override it")
    v.add_argument("--fault", help="JSON fault fixture to inject")
    v.add_argument("-o", "--output", default="report.json")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
