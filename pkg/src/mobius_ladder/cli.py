"""Command-line surface.

Exit codes: 0 success / claims confirmed, 1 usage or input error,
2 claim counterexample (dimension sweep, single-spec theorem check, or a
formula-oracle mismatch).
"""

import argparse
import sys
from pathlib import Path

from .distances import all_pairs_distances
from .errors import FixtureFormatError, HypothesisError, InvalidSpecError, VertexRangeError
from .formulas import validate_formulas
from .ladder import (LadderSpec, Vertex, build_ladder, dot_text,
                     edge_list_text, vertex_of_label)
from .resolver import is_resolving, metric_dimension, representation
from .tables import (compare_fixture, emit_table, load_fixture,
                     matrix_to_csv, shipped_fixture_path)
from .theorems import claim_for, run_sweep, verdict_for

USAGE_ERROR = 1
COUNTEREXAMPLE = 2


def parse_vertex_set(spec: LadderSpec, text: str) -> list[Vertex]:
    """Parse a comma-separated landmark list.

    Canonical tokens are 'i:q' pairs; the paper-style 'v11' shorthand is
    accepted only while every label fits two digits (m-1 <= 9, n <= 9).
    """
    vertices = []
    for token in text.split(","):
        token = token.strip()
        body = token[1:] if token.startswith("v") else token
        if ":" in body:
            i_part, _, q_part = body.partition(":")
            try:
                i, q = int(i_part), int(q_part)
            except ValueError:
                raise ValueError(f"cannot parse vertex token {token!r}") from None
        elif len(body) == 2 and body.isdigit():
            if not spec.compact_labels:
                raise ValueError(
                    f"shorthand {token!r} is ambiguous for {spec.name()}; "
                    f"use the i:q form")
            i, q = int(body[0]), int(body[1])
        else:
            raise ValueError(f"cannot parse vertex token {token!r}")
        vertices.append(vertex_of_label(spec, i, q))
    return vertices


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _spec_from(args) -> LadderSpec:
    return LadderSpec(args.m, args.n)


def _cmd_build(args) -> int:
    ladder = build_ladder(_spec_from(args))
    text = dot_text(ladder) if args.format == "dot" else edge_list_text(ladder)
    _write_out(text, args.out)
    return 0


def _cmd_dist(args) -> int:
    matrix = all_pairs_distances(build_ladder(_spec_from(args)))
    if args.format == "csv":
        text = matrix_to_csv(matrix)
    else:
        split = args.split if args.split else matrix.side
        text = emit_table(matrix, split)
    _write_out(text, args.out)
    return 0


def _cmd_resolve(args) -> int:
    spec = _spec_from(args)
    matrix = all_pairs_distances(build_ladder(spec))
    landmarks = parse_vertex_set(spec, args.set)
    check = is_resolving(matrix, landmarks)
    lines = [f"resolving: {'true' if check.resolving else 'false'}\n"]
    if check.resolving:
        for idx in range(matrix.side):
            rep = representation(matrix, idx, landmarks)
            coords = ", ".join(str(c) for c in rep.coords)
            lines.append(f"r({rep.vertex.label()}) = ({coords})\n")
    else:
        lines.append(f"witness: {check.witness.describe()}\n")
    _write_out("".join(lines), args.out)
    return 0


def _cmd_dimension(args) -> int:
    matrix = all_pairs_distances(build_ladder(_spec_from(args)))
    report = metric_dimension(matrix, budget=args.budget)
    if args.format == "kv":
        text = "\n".join(report.to_kv_lines()) + "\n"
    else:
        text = report.to_text()
    _write_out(text, args.out)
    return 0


def _cmd_formulas(args) -> int:
    spec = _spec_from(args)
    report = validate_formulas(spec)
    text = report.to_csv() if args.format == "csv" else report.to_text()
    _write_out(text, args.out)
    return 0 if report.ok else COUNTEREXAMPLE


def _cmd_theorems(args) -> int:
    spec = _spec_from(args)
    claim = claim_for(spec)
    if claim.theorem is None:
        _write_out(f"{spec.name()}: no claim applies "
                   f"(parity {'mixed' if spec.mixed_parity else 'equal'}, "
                   f"m-n={spec.m - spec.n})\n", args.out)
        return 0
    verdict = verdict_for(spec)
    basis = ", ".join(v.label() for v in claim.candidate_basis)
    lines = [f"{spec.name()}: claim {claim.theorem.name.lower()} "
             f"predicts dimension {claim.predicted_dimension}\n",
             f"candidate basis {{{basis}}} resolves: "
             f"{verdict.candidate_resolves}\n",
             f"exact dimension: {verdict.exact_dimension}\n"]
    for p in verdict.possibilities:
        marks = ", ".join(w.label() for w in p.landmarks)
        lines.append(f"possibility {p.label} {{{marks}}}: "
                     f"identity {'holds' if p.identity_holds else 'FAILS'} "
                     f"over {len(p.pairs)} pair(s); "
                     f"resolves: {p.resolves}"
                     + (f"; witness {p.witness.describe()}" if p.witness else "")
                     + "\n")
    lines.append(f"prediction holds: {verdict.prediction_holds}\n")
    _write_out("".join(lines), args.out)
    return 0 if verdict.prediction_holds else COUNTEREXAMPLE


def _cmd_sweep(args) -> int:
    report = run_sweep(range(args.m_min, args.m_max + 1),
                       range(args.n_min, args.n_max + 1),
                       size_cap=args.cap)
    text = report.to_csv() if args.format == "csv" else report.to_text()
    _write_out(text, args.out)
    return COUNTEREXAMPLE if report.counterexamples else 0


def _cmd_errata(args) -> int:
    spec = _spec_from(args)
    fixture_path = args.fixture or shipped_fixture_path(spec.m, spec.n)
    fixture = load_fixture(fixture_path)
    matrix = all_pairs_distances(build_ladder(spec))
    report = compare_fixture(fixture, matrix)
    _write_out(report.to_text(), args.out)
    return 0


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, required=True,
                        help="long path length (m >= 3)")
    parser.add_argument("--n", type=int, required=True,
                        help="short path length (n >= 2)")
    parser.add_argument("--out", help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobius-ladder",
        description="Generalized Mobius ladder M(m,n): distances, "
                    "resolving sets, metric dimension, claim checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit edge list or DOT")
    _add_spec_args(p)
    p.add_argument("--format", choices=["edges", "dot"], default="edges")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("dist", help="emit distance table")
    _add_spec_args(p)
    p.add_argument("--split", type=int, default=0,
                   help="max columns per text block (default: no split)")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("resolve", help="test a landmark set")
    _add_spec_args(p)
    p.add_argument("--set", required=True,
                   help="landmarks, e.g. 'v11,v14,v61' or '1:1,1:4,6:1'")
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("dimension", help="exact metric dimension")
    _add_spec_args(p)
    p.add_argument("--budget", type=int, default=None,
                   help="cap on basis cardinality (default: greedy bound)")
    p.add_argument("--format", choices=["text", "kv"], default="text")
    p.set_defaults(func=_cmd_dimension)

    p = sub.add_parser("formulas", help="validate closed forms against search")
    _add_spec_args(p)
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=_cmd_formulas)

    p = sub.add_parser("theorems", help="check the dimension claim for one spec")
    _add_spec_args(p)
    p.set_defaults(func=_cmd_theorems)

    p = sub.add_parser("sweep", help="check claims over parameter ranges")
    p.add_argument("--m-min", type=int, default=3)
    p.add_argument("--m-max", type=int, default=14)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--cap", type=int, default=40,
                   help="skip specs with more vertices than this")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--out", help="write output to this file")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("errata", help="compare a reference table against search")
    _add_spec_args(p)
    p.add_argument("--fixture", default=None,
                   help="table CSV (default: the shipped one for M(m,n))")
    p.set_defaults(func=_cmd_errata)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors; map the latter
        # onto the input-error code.
        return 0 if exc.code == 0 else USAGE_ERROR
    try:
        return args.func(args)
    except (InvalidSpecError, VertexRangeError, HypothesisError,
            FixtureFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
