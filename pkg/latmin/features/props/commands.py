from argparse import _SubParsersAction

from latmin.core.config import settings
from latmin.core.errors import EXIT_OK, EXIT_REFUTED, usage_error
from latmin.core.run_config import RunConfig
from latmin.features.props.services import (
    CHECKERS,
    check_max_principle,
    check_slab_refutation,
    growth_report,
    run_all,
)
from latmin.shared.args import add_output_arg, add_pattern_args, add_window_args
from latmin.shared.io import Sink, resolve_center, resolve_pattern, resolve_window


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("props", help="property checkers over a window")
    add_pattern_args(parser)
    add_window_args(parser)
    parser.add_argument("--all", action="store_true", help="run every window checker and the slab test")
    parser.add_argument("--property", action="append", choices=sorted(CHECKERS) + ["max-principle", "slab-refutation"])
    parser.add_argument("--axis", type=int, help="axis for the maximum principle (0-based)")
    parser.add_argument("--omega", action="append", metavar="C1,C2,...", help="a point of Ω₁")
    parser.add_argument("--growth", type=int, metavar="R_MAX", help="emit the growth series")
    add_output_arg(parser)
    parser.set_defaults(handler=run)


def _omega(config: RunConfig, dim: int):
    raw = config.option("omega") or []
    points = []
    for item in raw:
        try:
            point = tuple(int(tok) for tok in str(item).split(","))
        except ValueError:
            raise usage_error(f"--omega expects comma-separated integers, got {item!r}") from None
        if len(point) != dim - 1:
            raise usage_error(f"--omega points have {dim - 1} coordinates")
        points.append(point)
    return points


def run(config: RunConfig, sink: Sink) -> int:
    pattern = resolve_pattern(config)
    center = resolve_center(config, pattern.dim)
    radius = config.radius or 10
    if config.window is not None and len(config.window) == 1:
        radius = config.window[0]

    growth = config.option("growth")
    if growth is not None:
        series = growth_report(pattern, center, int(growth))
        sink.extend(series.records())
        sink.emit(f"within_bound={'yes' if series.within_bound else 'no'}")
        return EXIT_OK if series.within_bound and series.boundary_nonempty else EXIT_REFUTED

    selected = config.option("property") or []
    if config.option("all") or not selected:
        reports = run_all(pattern, center, radius)
    else:
        window = resolve_window(config, pattern.dim, radius, center)
        reports = []
        for name in selected:
            if name == "max-principle":
                if config.option("axis") is None:
                    raise usage_error("max-principle needs --axis and --omega")
                reports.append(
                    check_max_principle(pattern, int(config.option("axis")), _omega(config, pattern.dim), window)
                )
            elif name == "slab-refutation":
                reports.append(check_slab_refutation(pattern, config.radius or settings.DEFAULT_RADIUS, center))
            else:
                reports.append(CHECKERS[name](pattern, window))
    sink.extend(report.line() for report in reports)
    return EXIT_REFUTED if any(report.violated for report in reports) else EXIT_OK
