from argparse import _SubParsersAction
from pathlib import Path

from latmin.core.errors import EXIT_OK, EXIT_REFUTED, usage_error
from latmin.core.run_config import RunConfig
from latmin.features.energy.services import perimeter
from latmin.features.lattice.models import VertexSet
from latmin.features.lattice.services import dump_grid2, parse_grid2
from latmin.features.mincut.services import (
    brute_force_least_perimeter,
    is_least_perimeter,
    least_perimeter_solve,
)
from latmin.shared.args import add_output_arg, add_pattern_args, add_window_args
from latmin.shared.io import Sink, read_text, resolve_center, resolve_pattern, resolve_window


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("solve", help="least-perimeter filling of a window trace")
    parser.add_argument("--phi", "--grid", dest="grid", type=Path, help="GRID2 file; its ring is the trace φ")
    add_pattern_args(parser)
    add_window_args(parser)
    parser.add_argument("--brute", action="store_true", help="exhaustive search, all optima")
    parser.add_argument("--check", action="store_true", help="exit 1 unless the input is already optimal")
    add_output_arg(parser)
    parser.set_defaults(handler=run)


def _load(config: RunConfig) -> VertexSet:
    if config.grid is not None:
        return parse_grid2(read_text(config.grid))
    pattern = resolve_pattern(config)
    center = resolve_center(config, pattern.dim)
    if config.window is None and config.radius is None:
        raise usage_error("solve needs --phi, --window or --radius")
    window = resolve_window(config, pattern.dim, 1, center)
    return VertexSet.from_pattern(pattern, window)


def run(config: RunConfig, sink: Sink) -> int:
    K = _load(config)
    U = K.window
    given = perimeter(K)
    if config.option("brute"):
        result = brute_force_least_perimeter(U, K)
        sink.emit(f"value={result.value} optima={len(result.all_optima)} given={given}")
        for optimum in result.all_optima:
            if optimum.dim == 2:
                sink.emit(dump_grid2(optimum))
        best = result.value
    else:
        result = least_perimeter_solve(U, K)
        sink.emit(f"value={result.value} given={given}")
        if result.K_opt.dim == 2:
            sink.emit(dump_grid2(result.K_opt))
        best = result.value
    if config.option("check") and not is_least_perimeter(K):
        sink.emit(f"not least perimeter: {given} > {best}")
        return EXIT_REFUTED
    return EXIT_OK
