"""Command-line front end.

Exit codes: 0 success, 1 property violation (mismatch or failed bound),
2 input error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus
from .bound import BoundReport, verify_bound
from .errors import CapExceeded, InputError
from .graph_circuits import enumerate_circuit_witnesses, witness_binomial, witness_degree
from .graph_core import DEFAULT_MAX_CYCLES, Graph, incidence_matrix, parse_graph
from .graph_graver import (
    DEFAULT_MAX_SUBGRAPHS,
    element_json,
    enumerate_primitive_subgraphs,
    graver_degree,
    primitive_binomial,
)
from .lattice_oracle import DEFAULT_MAX_GRAVER, circuits_of_matrix, graver_basis, integer_kernel_basis
from .toric_algebra import IntegerMatrix, sorted_binomials

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    matrix: str | None = None
    reports: list[str] = field(default_factory=list)
    format: str = "json"
    max_cycles: int = DEFAULT_MAX_CYCLES
    max_graver: int = DEFAULT_MAX_SUBGRAPHS
    seed: int = corpus.DEFAULT_SEED
    corpus_size: int = 200
    out: str | None = None
    inject_bug: bool = False

    def __post_init__(self):
        if self.max_cycles < 1 or self.max_graver < 1:
            raise InputError("caps must be positive")
        if self.corpus_size < 0:
            raise InputError("corpus size must be nonnegative")
        if self.format not in ("json", "text"):
            raise InputError(f"unknown format {self.format!r}")


def load_graphs(paths: list[str]) -> list[tuple[str, Graph]]:
    out = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            files = sorted(f for f in path.iterdir() if f.is_file() and not f.name.startswith("."))
        else:
            files = [path]
        for f in files:
            try:
                text = f.read_text()
            except OSError as exc:
                raise InputError(f"{f}: {exc.strerror}") from None
            try:
                out.append((str(f), parse_graph(text)))
            except InputError as exc:
                raise InputError(f"{f}: {exc}") from None
    return out


def _graphs(cfg: RunConfig) -> list[tuple[str, Graph]]:
    if cfg.inputs:
        return load_graphs(cfg.inputs)
    return corpus.acceptance_corpus(cfg.seed, cfg.corpus_size)


def _require_inputs(cfg: RunConfig):
    if not cfg.inputs:
        raise InputError(f"{cfg.command} needs --input")


def cmd_circuits(cfg: RunConfig) -> tuple[dict, int]:
    _require_inputs(cfg)
    results = []
    for name, g in load_graphs(cfg.inputs):
        ws = enumerate_circuit_witnesses(g, max_cycles=cfg.max_cycles)
        ws.sort(key=lambda w: witness_binomial(g, w))
        results.append({
            "input": name,
            "max_degree": max((witness_degree(w) for w in ws), default=0),
            "circuits": [w.to_json(g) for w in ws],
        })
    return {"command": "circuits", "results": results}, EXIT_OK


def cmd_graver(cfg: RunConfig) -> tuple[dict, int]:
    _require_inputs(cfg)
    results = []
    for name, g in load_graphs(cfg.inputs):
        subgraphs = enumerate_primitive_subgraphs(g, max_cycles=cfg.max_cycles, max_subgraphs=cfg.max_graver)
        subgraphs.sort(key=lambda P: primitive_binomial(g, P))
        results.append({
            "input": name,
            "max_degree": max((graver_degree(P) for P in subgraphs), default=0),
            "elements": [element_json(g, P) for P in subgraphs],
        })
    return {"command": "graver", "results": results}, EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    results = []
    if cfg.reports:
        for p in cfg.reports:
            try:
                doc = json.loads(Path(p).read_text())
                report = BoundReport.from_json(doc)
            except (OSError, ValueError, TypeError) as exc:
                raise InputError(f"{p}: unreadable bound report ({exc})") from None
            results.append({"input": p, "report": report.to_json(), "recomputed": report.evaluate(), "ok": report.ok})
    else:
        for name, g in _graphs(cfg):
            report = verify_bound(g, max_cycles=cfg.max_cycles, max_subgraphs=cfg.max_graver)
            results.append({"input": name, "report": report.to_json(), "ok": report.ok})
    ok = all(r["ok"] for r in results)
    return {"command": "verify", "all_hold": ok, "results": results}, EXIT_OK if ok else EXIT_VIOLATION


def cmd_oracle(cfg: RunConfig) -> tuple[dict, int]:
    if cfg.matrix and cfg.inputs:
        raise InputError("give either --input or --matrix, not both")
    if cfg.matrix:
        try:
            A = IntegerMatrix.from_json(json.loads(Path(cfg.matrix).read_text()))
        except (OSError, ValueError, TypeError) as exc:
            raise InputError(f"{cfg.matrix}: unreadable matrix ({exc})") from None
        sources = [(cfg.matrix, A)]
    elif cfg.inputs:
        sources = [(name, incidence_matrix(g)) for name, g in load_graphs(cfg.inputs)]
    else:
        raise InputError("oracle needs --input or --matrix")
    results = []
    for name, A in sources:
        kernel = integer_kernel_basis(A)
        graver = sorted_binomials(graver_basis(A, max_elements=cfg.max_graver))
        circuits = sorted_binomials(circuits_of_matrix(A))
        results.append({
            "input": name,
            "matrix": A.to_json(),
            "kernel_basis": [list(v) for v in kernel.basis],
            "graver": [b.to_json() for b in graver],
            "circuits": [b.to_json() for b in circuits],
        })
    return {"command": "oracle", "results": results}, EXIT_OK


def crosscheck_graph(g: Graph, cfg: RunConfig) -> dict:
    A = incidence_matrix(g)
    graph_graver = {
        primitive_binomial(g, P)
        for P in enumerate_primitive_subgraphs(g, max_cycles=cfg.max_cycles, max_subgraphs=cfg.max_graver)
    }
    if cfg.inject_bug and graph_graver:
        graph_graver.discard(min(graph_graver))
    graph_circuits = {witness_binomial(g, w) for w in enumerate_circuit_witnesses(g, max_cycles=cfg.max_cycles)}
    oracle_graver = graver_basis(A, max_elements=cfg.max_graver)
    oracle_circuits = circuits_of_matrix(A)
    diff = {
        "graver_only_graph": sorted_binomials(graph_graver - oracle_graver),
        "graver_only_oracle": sorted_binomials(oracle_graver - graph_graver),
        "circuits_only_graph": sorted_binomials(graph_circuits - oracle_circuits),
        "circuits_only_oracle": sorted_binomials(oracle_circuits - graph_circuits),
    }
    return {
        "graver_size": len(oracle_graver),
        "circuit_count": len(oracle_circuits),
        "match": not any(diff.values()),
        "differences": {k: [b.to_json() for b in v] for k, v in diff.items() if v},
    }


def cmd_crosscheck(cfg: RunConfig) -> tuple[dict, int]:
    results = []
    for name, g in _graphs(cfg):
        results.append({"input": name, "edges": [list(e) for e in g.edges], "vertices": g.n, **crosscheck_graph(g, cfg)})
    mismatches = [r["input"] for r in results if not r["match"]]
    doc = {"command": "crosscheck", "graphs": len(results), "mismatches": mismatches, "results": results}
    return doc, EXIT_OK if not mismatches else EXIT_VIOLATION


COMMANDS = {
    "circuits": cmd_circuits,
    "graver": cmd_graver,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "crosscheck": cmd_crosscheck,
}


def render_text(doc: dict) -> str:
    lines = []
    cmd = doc["command"]
    if cmd == "crosscheck":
        lines.append(f"{doc['graphs']} graphs, {len(doc['mismatches'])} mismatches")
        lines += [f"MISMATCH {name}" for name in doc["mismatches"]]
    elif cmd == "verify":
        for r in doc["results"]:
            rep = r["report"]
            lines.append(
                f"{r['input']}: n={rep['n']} max_graver_degree={rep['max_graver_degree']} "
                f"bound={rep['bound_value']:.6g} {'ok' if r['ok'] else 'VIOLATED'}"
            )
        lines.append("all bounds hold" if doc["all_hold"] else "BOUND VIOLATION")
    else:
        key = {"circuits": "circuits", "graver": "elements", "oracle": "graver"}[cmd]
        for r in doc["results"]:
            lines.append(f"{r['input']}: {len(r[key])} {key}")
            for item in r[key]:
                b = item.get("binomial", item)
                plus = " ".join(f"e{i}^{k}" if k > 1 else f"e{i}" for i, k in enumerate(b["plus"]) if k)
                minus = " ".join(f"e{i}^{k}" if k > 1 else f"e{i}" for i, k in enumerate(b["minus"]) if k)
                deg = f"  (degree {item['degree']})" if "degree" in item else ""
                lines.append(f"  {plus} - {minus}{deg}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", default=[], help="graph file or directory (repeatable)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)
    common.add_argument("--max-graver", type=int, default=None,
                        help=f"cap on Graver elements (default {DEFAULT_MAX_SUBGRAPHS})")
    common.add_argument("--seed", type=int, default=corpus.DEFAULT_SEED, help="seed for the random corpus")
    common.add_argument("--corpus-size", type=int, default=200, help="number of random multigraphs")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="toricgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("circuits", parents=[common], help="circuits of graph ideals")
    sub.add_parser("graver", parents=[common], help="Graver bases of graph ideals")
    p = sub.add_parser("verify", parents=[common], help="check the Graver degree bound")
    p.add_argument("--report", action="append", default=[], help="re-check a saved bound report")
    p = sub.add_parser("oracle", parents=[common], help="matrix-level Graver basis and circuits")
    p.add_argument("--matrix", help="matrix JSON {rows, cols, entries}")
    p = sub.add_parser("crosscheck", parents=[common], help="graph methods against the lattice oracle")
    p.add_argument("--inject-bug", action="store_true", help="drop one graph-side Graver element (self-test)")
    return parser


def run(argv=None) -> tuple[str, int, str | None]:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        inputs=args.input,
        matrix=getattr(args, "matrix", None),
        reports=getattr(args, "report", []),
        format=args.format,
        max_cycles=args.max_cycles,
        max_graver=args.max_graver if args.max_graver is not None else DEFAULT_MAX_GRAVER,
        seed=args.seed,
        corpus_size=args.corpus_size,
        out=args.out,
        inject_bug=getattr(args, "inject_bug", False),
    )
    doc, code = COMMANDS[cfg.command](cfg)
    if cfg.format == "json":
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(doc)
    return text, code, cfg.out


def main(argv=None) -> int:
    try:
        text, code, out = run(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
