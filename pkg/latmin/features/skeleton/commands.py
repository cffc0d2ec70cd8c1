from argparse import _SubParsersAction

from latmin.core.config import settings
from latmin.core.errors import EXIT_OK, EXIT_REFUTED, usage_error
from latmin.core.run_config import RunConfig
from latmin.features.lattice.services import dump_grid2
from latmin.features.props.schemas import format_value
from latmin.features.skeleton.services import (
    check_skeleton_reduction_3d,
    isoperimetric_decay,
    k_skeleton,
    rough_isometry_stats,
)
from latmin.shared.args import add_output_arg, add_pattern_args, add_window_args
from latmin.shared.io import Sink, resolve_center, resolve_pattern, resolve_window


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("skeleton", help="k-skeleta and the Zⁿ structure checks")
    add_pattern_args(parser)
    add_window_args(parser)
    parser.add_argument("--k", type=int)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--reduce", action="store_true", help="M³ ∪ M² certification (Z³)")
    mode.add_argument("--stats", action="store_true", help="rough-isometry ratios on B̂_radius")
    mode.add_argument("--decay", action="store_true", help="isoperimetric ratio series up to radius")
    add_output_arg(parser)
    parser.set_defaults(handler=run)


def run(config: RunConfig, sink: Sink) -> int:
    pattern = resolve_pattern(config)
    center = resolve_center(config, pattern.dim)
    radius = config.radius or settings.DEFAULT_RADIUS

    if config.option("reduce"):
        report = check_skeleton_reduction_3d(pattern, radius, center)
        sink.emit(
            f"pattern={report.pattern_id} r_max={report.r_max} "
            f"reduced_certified={'yes' if report.reduced.certified else 'no'} "
            f"restriction_valid={'yes' if report.restriction_valid else 'no'} "
            f"m3_obstructions={len(report.m3_obstructions)}"
        )
        for x in report.m3_obstructions:
            sink.emit(f"m3_obstruction vertex={format_value(x)}")
        return EXIT_OK if report.passed else EXIT_REFUTED
    if config.option("stats"):
        stats = rough_isometry_stats(pattern, center, radius)
        sink.extend(stats.records())
        return EXIT_REFUTED if stats.skeleton_empty else EXIT_OK
    if config.option("decay"):
        series = isoperimetric_decay(pattern, center, radius)
        sink.extend(series.records())
        return EXIT_OK

    if config.k is None:
        raise usage_error("skeleton needs --k, --reduce, --stats or --decay")
    window = resolve_window(config, pattern.dim, settings.DEFAULT_RADIUS, center)
    K = k_skeleton(pattern, config.k, window)
    sink.emit(f"pattern={pattern.id or 'anonymous'} k={config.k} members={len(K.interior())}")
    if K.dim == 2:
        sink.emit(dump_grid2(K))
    return EXIT_OK
