"""Command-line front end.

One verb per pipeline stage: ``ingest``, ``rescale``, ``indices``,
``classify``, ``shift``, ``factors``, ``verify``, ``export``. Exit
codes: 0 success, 1 input error, 2 numerical failure, 3 verification
mismatches (only with ``--strict-verify``).
"""

from __future__ import annotations

import argparse
import io
import json
import sys

import numpy as np

from . import factor, pillar, report
from .classify import (
    DEFAULT_EPSILON,
    DEFAULT_THRESHOLD,
    ClusterAssignment,
    classify_epoch,
    shift_report,
)
from .errors import FoiError, SingularMatrixError, UndefinedStatisticError
from .manifest import default_manifest, load_manifest
from .panel import load_panel, validate_panel, write_panel
from .reference import verify_reference
from .rescale import rescale_panel

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2
EXIT_VERIFY = 3


def _add_panel_flags(sp, panel_required=True):
    sp.add_argument("--panel", required=panel_required, help="panel CSV path")
    sp.add_argument("--manifest", help="manifest JSON path (default: built-in 24-indicator manifest)")
    sp.add_argument("--epoch", type=int, default=0, help="epoch year label")


def _add_output_flags(sp):
    sp.add_argument("--format", choices=report.FORMATS, default="table")
    sp.add_argument("--out", default="-", help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foi", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("ingest", help="load a panel and report missing-data coverage")
    _add_panel_flags(sp)
    _add_output_flags(sp)

    sp = sub.add_parser("rescale", help="min-max rescale a panel to the 1-7 scale")
    _add_panel_flags(sp)
    sp.add_argument("--out", default="-", help="rescaled panel CSV path, '-' for stdout")

    sp = sub.add_parser("indices", help="compute F/O/I pillar indices and ranks")
    _add_panel_flags(sp)
    sp.add_argument("--missing-policy", choices=pillar.MISSING_POLICIES, default="available_mean")
    _add_output_flags(sp)

    sp = sub.add_parser("classify", help="assign countries to the eight clusters")
    _add_panel_flags(sp)
    sp.add_argument("--missing-policy", choices=pillar.MISSING_POLICIES, default="available_mean")
    sp.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    sp.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    _add_output_flags(sp)

    sp = sub.add_parser("shift", help="compare cluster assignments across two epochs")
    sp.add_argument("--panel-a", required=True, help="earlier epoch panel CSV")
    sp.add_argument("--panel-b", required=True, help="later epoch panel CSV")
    sp.add_argument("--manifest")
    sp.add_argument("--epoch-a", type=int, default=0)
    sp.add_argument("--epoch-b", type=int, default=0)
    sp.add_argument("--missing-policy", choices=pillar.MISSING_POLICIES, default="available_mean")
    sp.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    sp.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    _add_output_flags(sp)

    sp = sub.add_parser("factors", help="run the factor-analysis stack on a variable CSV")
    sp.add_argument("--panel", required=True, help="variable CSV path (country,<ids...>)")
    sp.add_argument("--factors-k", type=int, default=2, help="number of retained factors")
    sp.add_argument("--auto-k", action="store_true", help="retain eigenvalues > 1 instead of --factors-k")
    sp.add_argument("--missing", choices=("pairwise", "listwise"), default="pairwise")
    sp.add_argument("--no-kaiser", action="store_true", help="rotate without Kaiser normalization")
    sp.add_argument("--out", default="-", help="model JSON path, '-' for stdout")
    sp.add_argument("--scores-out", help="optional factor-scores CSV path")

    sp = sub.add_parser("verify", help="diff the published indices against the published clusters")
    sp.add_argument("--epoch", type=int, required=True, choices=(2010, 2020))
    sp.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    sp.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    sp.add_argument("--strict-verify", action="store_true", help="exit 3 when mismatches exist")
    _add_output_flags(sp)

    sp = sub.add_parser("export", help="re-render a previously emitted JSON result")
    sp.add_argument("--in", dest="infile", required=True, help="JSON file from indices/classify/shift")
    _add_output_flags(sp)
    return parser


def _load_inputs(args):
    manifest = load_manifest(args.manifest) if args.manifest else default_manifest()
    panel = load_panel(args.panel, manifest, epoch=getattr(args, "epoch", 0))
    return manifest, panel


def _scores_for(panel_path, manifest, epoch, missing_policy):
    panel = load_panel(panel_path, manifest, epoch=epoch)
    rescaled = rescale_panel(panel, manifest)
    scores = pillar.compute_pillar_scores(rescaled, manifest, missing_policy=missing_policy)
    return pillar.rank_countries(scores)


def cmd_ingest(args) -> int:
    manifest, panel = _load_inputs(args)
    rep = validate_panel(panel)
    payload = {
        "epoch": panel.epoch,
        "countries": len(panel.countries),
        "indicators": len(panel.indicators),
        "coverage": rep.coverage,
        "missing_by_indicator": rep.missing_by_indicator,
        "missing_by_country": rep.missing_by_country,
        "warnings": list(rep.warnings),
    }
    if args.format == "json":
        text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    else:
        lines = [
            f"countries:  {payload['countries']}",
            f"indicators: {payload['indicators']}",
            f"coverage:   {rep.coverage:.4f}",
        ]
        lines += [f"warning: {w}" for w in rep.warnings]
        text = "\n".join(lines) + "\n"
    report.write_text(text, args.out)
    return EXIT_OK


def cmd_rescale(args) -> int:
    manifest, panel = _load_inputs(args)
    rescaled = rescale_panel(panel, manifest)
    if args.out in (None, "-"):
        buf = io.StringIO()
        import csv as _csv

        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(["country", *rescaled.indicators])
        for i, code in enumerate(rescaled.countries):
            writer.writerow(
                [code, *["" if np.isnan(v) else repr(float(v)) for v in rescaled.values[i]]]
            )
        sys.stdout.write(buf.getvalue())
    else:
        write_panel(rescaled, args.out)
    return EXIT_OK


def cmd_indices(args) -> int:
    manifest = load_manifest(args.manifest) if args.manifest else default_manifest()
    scores = _scores_for(args.panel, manifest, args.epoch, args.missing_policy)
    report.write_text(report.render_scores(scores, args.format), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    manifest = load_manifest(args.manifest) if args.manifest else default_manifest()
    scores = _scores_for(args.panel, manifest, args.epoch, args.missing_policy)
    assignments = classify_epoch(scores, threshold=args.threshold, epsilon=args.epsilon)
    report.write_text(report.render_assignments(assignments, args.format), args.out)
    return EXIT_OK


def cmd_shift(args) -> int:
    manifest = load_manifest(args.manifest) if args.manifest else default_manifest()
    a = classify_epoch(
        _scores_for(args.panel_a, manifest, args.epoch_a, args.missing_policy),
        threshold=args.threshold,
        epsilon=args.epsilon,
    )
    b = classify_epoch(
        _scores_for(args.panel_b, manifest, args.epoch_b, args.missing_policy),
        threshold=args.threshold,
        epsilon=args.epsilon,
    )
    rep = shift_report(a, b, epoch_from=args.epoch_a, epoch_to=args.epoch_b)
    report.write_text(report.render_shift(rep, args.format), args.out)
    return EXIT_OK


def cmd_factors(args) -> int:
    data = factor.load_variable_matrix(args.panel)
    model = factor.fit_factor_model(
        data,
        k=args.factors_k,
        missing=args.missing,
        kaiser_normalize=not args.no_kaiser,
        auto_k=args.auto_k,
    )
    report.write_text(report.factor_model_to_json(model), args.out)
    if args.scores_out:
        report.write_text(report.factor_scores_to_csv(model), args.scores_out)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify_reference(args.epoch, threshold=args.threshold, epsilon=args.epsilon)
    payload = {
        "epoch": rep.epoch,
        "matches": rep.matches,
        "countries": rep.country_count,
        "mismatches": [
            {
                "country": m.country,
                "computed": m.computed_cluster,
                "reference": m.reference_cluster,
                "borderline": m.borderline,
            }
            for m in rep.mismatches
        ],
    }
    if args.format == "json":
        text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    else:
        lines = [f"epoch {rep.epoch}: {rep.matches}/{rep.country_count} match the published clusters"]
        for m in rep.mismatches:
            kind = "borderline" if m.borderline else "hard"
            lines.append(
                f"  {m.country}: computed {m.computed_cluster}, published {m.reference_cluster} ({kind})"
            )
        text = "\n".join(lines) + "\n"
    report.write_text(text, args.out)
    if args.strict_verify and rep.mismatches:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_export(args) -> int:
    with open(args.infile, encoding="utf-8") as fh:
        payload = json.load(fh)
    if "scores" in payload:
        rows = payload["scores"]
        countries = tuple(r["country"] for r in rows)
        index = {
            p: np.array(
                [r[f"{p.lower()}_index"] if r[f"{p.lower()}_index"] is not None else np.nan for r in rows]
            )
            for p in ("F", "O", "I")
        }
        rank = None
        if all(r.get("f_rank") is not None for r in rows):
            rank = {p: np.array([r[f"{p.lower()}_rank"] for r in rows], dtype=int) for p in ("F", "O", "I")}
        scores = pillar.FoiScores(epoch=payload.get("epoch", 0), countries=countries, index=index, rank=rank)
        report.write_text(report.render_scores(scores, args.format), args.out)
        return EXIT_OK
    if "assignments" in payload:
        assignments = [
            ClusterAssignment(
                country=r["country"],
                f_level=r["levels"][0],
                o_level=r["levels"][1],
                i_level=r["levels"][2],
                cluster_id=r["cluster"],
                label=r["label"],
                borderline=frozenset(r["borderline"]),
            )
            for r in payload["assignments"]
        ]
        report.write_text(report.render_assignments(assignments, args.format), args.out)
        return EXIT_OK
    raise FoiError(f"{args.infile}: unrecognized result document (no 'scores' or 'assignments' key)")


COMMANDS = {
    "ingest": cmd_ingest,
    "rescale": cmd_rescale,
    "indices": cmd_indices,
    "classify": cmd_classify,
    "shift": cmd_shift,
    "factors": cmd_factors,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (SingularMatrixError, UndefinedStatisticError) as exc:
        print(f"foi {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (FoiError, OSError, json.JSONDecodeError) as exc:
        print(f"foi {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
