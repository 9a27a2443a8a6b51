"""Command-line front end.

Subcommands map one-to-one onto library operations::

    nodeloc analyze topo.json --oracle --format text
    nodeloc oracle topo.json --models CAP,CSP
    nodeloc localize topo.json outcomes.json --k-max 2
    nodeloc gen topo --model er --nodes 6 --edge-prob 0.5 --monitors 2 --seed 1
    nodeloc gen paths topo.json --per-pair 2
    nodeloc report analysis.json --format text

Exit codes: 0 success, 2 usage or format error, 3 capacity guard exceeded,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._version import __version__
from .document import emit_topology, parse_outcomes, parse_path_lines, parse_topology
from .errors import CapacityError, FormatError, InputError, UsageError
from .generate import generate_paths, generate_topology
from .oracle import CAP, CSP, DEFAULT_GUARD, k_identifiable, localize, max_identifiability, up_model
from .report import analyze, emit_report, reformat_report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_INTERNAL = 4


def _global_options(parser: argparse.ArgumentParser, top_level: bool) -> None:
    # On subparsers the defaults are suppressed so a flag given after the
    # subcommand wins, while the top-level default still applies otherwise.
    default = (lambda v: v) if top_level else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--seed", type=int, default=default(None), help="seed for generators")
    parser.add_argument(
        "--guard",
        type=int,
        default=default(DEFAULT_GUARD),
        help="max non-monitor count for brute-force work (default 7)",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default=default("json"), help="output format"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodeloc",
        description="Identifiability analysis for node-failure localization",
    )
    parser.add_argument("--version", action="version", version=f"nodeloc {__version__}")
    _global_options(parser, top_level=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="condition tables and identifiability bounds")
    _global_options(p, top_level=False)
    p.add_argument("topology", type=Path)
    p.add_argument("--paths", type=Path, default=None, help="text file, one path of node names per line")
    p.add_argument("--models", default=None, help="comma list among CAP,CSP,UP")
    p.add_argument("--k-range", default=None, metavar="LO:HI", help="restrict the verdict table")
    p.add_argument("--oracle", action="store_true", help="add brute-force results")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("oracle", help="brute-force identifiability results only")
    _global_options(p, top_level=False)
    p.add_argument("topology", type=Path)
    p.add_argument("--paths", type=Path, default=None, help="text file, one path of node names per line")
    p.add_argument("--models", default=None, help="comma list among CAP,CSP,UP")
    p.add_argument("--k", type=int, default=None, help="check one k instead of the maximum")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("localize", help="failure sets consistent with observations")
    _global_options(p, top_level=False)
    p.add_argument("topology", type=Path)
    p.add_argument("--paths", type=Path, default=None, help="text file, one path of node names per line")
    p.add_argument("outcomes", type=Path)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--out", type=Path, default=None)

    gen = sub.add_parser("gen", help="seeded instance generators")
    gensub = gen.add_subparsers(dest="gen_command", required=True)

    p = gensub.add_parser("topo", help="generate a random topology document")
    _global_options(p, top_level=False)
    p.add_argument("--model", choices=("er", "ba", "grid"), required=True)
    p.add_argument("--nodes", type=int, default=None)
    p.add_argument("--edge-prob", type=float, default=None)
    p.add_argument("--attach", type=int, default=None)
    p.add_argument("--width", type=int, default=None)
    p.add_argument("--height", type=int, default=None)
    p.add_argument("--monitors", type=int, default=None)
    p.add_argument("--monitor-fraction", type=float, default=None)
    p.add_argument("--out", type=Path, default=None)

    p = gensub.add_parser("paths", help="attach a shortest-path ensemble")
    _global_options(p, top_level=False)
    p.add_argument("topology", type=Path)
    p.add_argument("--per-pair", type=int, required=True)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("report", help="re-emit an analysis report")
    _global_options(p, top_level=False)
    p.add_argument("report", type=Path)
    p.add_argument("--out", type=Path, default=None)

    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _parse_models(arg: str | None) -> tuple[str, ...] | None:
    if arg is None:
        return None
    models = tuple(part.strip().upper() for part in arg.split(",") if part.strip())
    if not models:
        raise UsageError("empty --models list")
    return models


def _parse_k_range(arg: str | None) -> tuple[int, int] | None:
    if arg is None:
        return None
    try:
        lo, _, hi = arg.partition(":")
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad --k-range {arg!r}; expected LO:HI") from None


def _load_document(args: argparse.Namespace):
    doc = parse_topology(_read(args.topology))
    if getattr(args, "paths", None) is not None:
        doc = doc.with_paths(parse_path_lines(_read(args.paths), doc))
    return doc


def _cmd_analyze(args: argparse.Namespace) -> None:
    doc = _load_document(args)
    report = analyze(
        doc,
        models=_parse_models(args.models),
        oracle=args.oracle,
        guard=args.guard,
        k_range=_parse_k_range(args.k_range),
    )
    _write(emit_report(report, args.format), args.out)


def _models_for(doc, requested: tuple[str, ...] | None):
    kinds = requested or (("CAP", "CSP") + (("UP",) if doc.paths is not None else ()))
    out = []
    for kind in kinds:
        if kind == "CAP":
            out.append((kind, CAP))
        elif kind == "CSP":
            out.append((kind, CSP))
        elif kind == "UP":
            if doc.paths is None:
                raise UsageError("UP analysis requested but the document has no paths")
            out.append((kind, up_model(doc.to_ensemble())))
        else:
            raise UsageError(f"unknown probing model {kind!r}")
    return out


def _cmd_oracle(args: argparse.Namespace) -> None:
    doc = _load_document(args)
    topology = doc.to_topology()
    results = {}
    for kind, model in _models_for(doc, _parse_models(args.models)):
        if args.k is None:
            results[kind] = {"max_identifiability": max_identifiability(topology, model, guard=args.guard)}
        else:
            ok, witness = k_identifiable(topology, model, args.k, guard=args.guard)
            entry = {"k": args.k, "identifiable": ok}
            if witness is not None:
                entry["indistinguishable_pair"] = [
                    sorted(doc.names[v] for v in witness.first),
                    sorted(doc.names[v] for v in witness.second),
                ]
            results[kind] = entry
    if args.format == "json":
        _write(json.dumps(results, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = []
        for kind in sorted(results):
            entry = results[kind]
            if "max_identifiability" in entry:
                lines.append(f"{kind}: max identifiability {entry['max_identifiability']}")
            else:
                lines.append(f"{kind}: k={entry['k']} identifiable: {'yes' if entry['identifiable'] else 'no'}")
                if "indistinguishable_pair" in entry:
                    a, b = entry["indistinguishable_pair"]
                    lines.append(f"  counterexample: {{{', '.join(a)}}} vs {{{', '.join(b)}}}")
        _write("\n".join(lines) + "\n", args.out)


def _cmd_localize(args: argparse.Namespace) -> None:
    doc = _load_document(args)
    topology = doc.to_topology()
    kind, states = parse_outcomes(_read(args.outcomes), doc)
    (_, model), = _models_for(doc, (kind,))
    candidates = localize(topology, model, states, args.k_max, guard=args.guard)
    named = [sorted(doc.names[v] for v in failure) for failure in candidates]
    if args.format == "json":
        _write(json.dumps({"model": kind, "candidates": named}, indent=2, sort_keys=True) + "\n", args.out)
    else:
        body = "\n".join("{" + ", ".join(c) + "}" for c in named) or "(no consistent failure set)"
        _write(body + "\n", args.out)


def _cmd_gen_topo(args: argparse.Namespace) -> None:
    if args.seed is None:
        raise UsageError("gen topo requires --seed for reproducibility")
    doc = generate_topology(
        args.model,
        seed=args.seed,
        nodes=args.nodes,
        edge_prob=args.edge_prob,
        attach=args.attach,
        width=args.width,
        height=args.height,
        monitors=args.monitors,
        monitor_fraction=args.monitor_fraction,
    )
    _write(emit_topology(doc), args.out)


def _cmd_gen_paths(args: argparse.Namespace) -> None:
    doc = parse_topology(_read(args.topology))
    _write(emit_topology(generate_paths(doc, args.per_pair)), args.out)


def _cmd_report(args: argparse.Namespace) -> None:
    _write(reformat_report(_read(args.report), args.format), args.out)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "oracle": _cmd_oracle,
        "localize": _cmd_localize,
        "report": _cmd_report,
    }
    try:
        if args.command == "gen":
            if args.gen_command == "topo":
                _cmd_gen_topo(args)
            else:
                _cmd_gen_paths(args)
        else:
            handlers[args.command](args)
    except (UsageError, FormatError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc} (rerun without --oracle or raise --guard)", file=sys.stderr)
        return EXIT_CAPACITY
    except Exception as exc:  # noqa: BLE001 - surface as invariant violation
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
