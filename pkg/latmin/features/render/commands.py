from argparse import _SubParsersAction
from pathlib import Path

from latmin.core.errors import EXIT_OK
from latmin.core.run_config import RunConfig
from latmin.features.currents.services import parse_certificate
from latmin.features.render.services import render_ascii, render_svg
from latmin.shared.args import add_output_arg, add_pattern_args, add_window_args
from latmin.shared.io import Sink, read_text, resolve_center, resolve_pattern, resolve_window, write_text


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("render", help="ASCII or SVG view of a Z² window")
    add_pattern_args(parser)
    add_window_args(parser)
    parser.add_argument("--svg", type=Path, help="write an SVG drawing here")
    parser.add_argument("--cert", type=Path, help="draw this certificate's current as arrows")
    add_output_arg(parser)
    parser.set_defaults(handler=run)


def run(config: RunConfig, sink: Sink) -> int:
    pattern = resolve_pattern(config)
    center = resolve_center(config, pattern.dim)
    window = resolve_window(config, pattern.dim, 8, center)
    if config.svg is not None:
        certificate = parse_certificate(read_text(config.cert)) if config.cert else None
        write_text(config.svg, render_svg(pattern, window, certificate))
        sink.emit(f"wrote {config.svg}")
    else:
        sink.emit(render_ascii(pattern, window))
    return EXIT_OK
