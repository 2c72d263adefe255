"""Command-line interface: seeded campaigns, JSON certificates, SVG figures."""

from __future__ import annotations

import argparse
import sys

from .campaign import (
    THEOREMS,
    CampaignSpec,
    campaign_json,
    emit_json,
    run_campaign,
    to_json,
)
from .conic import format_param, param_point, parse_param
from .errors import GeometryError, InvalidSpec
from .svg import render_svg
from .theorems import enumerate_pascal_lines


def _add_campaign_flags(sub):
    sub.add_argument("--trials", type=int, default=100)
    sub.add_argument("--seed", type=lambda s: int(s, 0), default=0)
    sub.add_argument("--n", type=int, default=1, help="moebius chain order")
    sub.add_argument("--epsilon", type=float, default=1e-12)
    sub.add_argument("--convex", action="store_true", help="sample convex hexagons")
    sub.add_argument("--json", dest="json_path", metavar="PATH")
    sub.add_argument("--svg", dest="svg_path", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mysticum",
        description="Exact verification campaigns for inscribed-hexagon "
        "incidence theorems on the unit circle.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    verify = subs.add_parser("verify", help="run a seeded verification campaign")
    verify.add_argument("theorem", choices=THEOREMS)
    _add_campaign_flags(verify)

    render = subs.add_parser("render", help="render one trial as an SVG figure")
    render.add_argument("theorem", choices=THEOREMS)
    _add_campaign_flags(render)
    render.add_argument("--trial", type=int, default=0, help="trial index to draw")

    enum = subs.add_parser(
        "enumerate-pascal-lines",
        help="the 60 Pascal lines of six points on the circle",
    )
    enum.add_argument(
        "--params",
        help="six comma-separated circle parameters, e.g. '0,1/2,1,2,inf,-1'",
    )
    enum.add_argument("--seed", type=lambda s: int(s, 0), default=0)
    enum.add_argument("--json", dest="json_path", metavar="PATH")

    return parser


def _spec_from_args(args, trials=None) -> CampaignSpec:
    return CampaignSpec(
        theorem=args.theorem,
        trials=trials if trials is not None else args.trials,
        seed=args.seed,
        n=args.n,
        epsilon=args.epsilon,
        convex=args.convex,
    )


def _cmd_verify(args) -> int:
    summary, reports = run_campaign(_spec_from_args(args))
    if args.json_path:
        emit_json(campaign_json(summary, reports), args.json_path)
    if args.svg_path and reports:
        render_svg(reports[0], args.svg_path)
    print(
        f"{summary['theorem']}: trials={summary['trials']} "
        f"pass={summary['pass']} fail={summary['fail']} "
        f"degenerate_resampled={summary['degenerate_resampled']}"
    )
    return 0 if summary["fail"] == 0 else 1


def _cmd_render(args) -> int:
    if not args.svg_path:
        print("render requires --svg PATH", file=sys.stderr)
        return 2
    spec = _spec_from_args(args, trials=args.trial + 1)
    _, reports = run_campaign(spec)
    report = reports[args.trial]
    render_svg(report, args.svg_path)
    if args.json_path:
        emit_json(report, args.json_path)
    print(f"wrote {args.svg_path} ({report.theorem}, pass={report.passed})")
    return 0


def _cmd_enumerate(args) -> int:
    if args.params:
        params = [parse_param(p) for p in args.params.split(",")]
        if len(params) != 6:
            print("need exactly six parameters", file=sys.stderr)
            return 2
    else:
        from .sampling import RandomRationalSampler, trial_rng

        sampler = RandomRationalSampler(trial_rng(args.seed, 0))
        params = sampler.distinct_params(6)
    points = [param_point(t) for t in params]
    entries = enumerate_pascal_lines(points)
    for ordering, line in entries:
        name = "".join("ABCDEF"[i] for i in ordering)
        coords = "degenerate" if line is None else ",".join(str(c) for c in line.coords)
        print(f"{name} {coords}")
    print(f"total: {len(entries)} orderings")
    if args.json_path:
        payload = {
            "theorem": "pascal-lines",
            "params": [format_param(t) for t in params],
            "orderings": [
                {
                    "ordering": list(ordering),
                    "line": None if line is None else [str(c) for c in line.coords],
                }
                for ordering, line in entries
            ],
        }
        with open(args.json_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(to_json(payload))
    return 0 if len(entries) == 60 else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "enumerate-pascal-lines":
            return _cmd_enumerate(args)
    except InvalidSpec as exc:
        print(f"invalid specification: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"geometry error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
