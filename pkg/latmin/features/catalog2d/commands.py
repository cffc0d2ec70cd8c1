from argparse import _SubParsersAction
from typing import Dict, Optional

from latmin.core.config import settings
from latmin.core.errors import EXIT_OK, EXIT_REFUTED, usage_error
from latmin.core.run_config import RunConfig
from latmin.features.catalog2d.schemas import FamilyVerification
from latmin.features.catalog2d.services import (
    classify_boundary,
    enumerate_candidates,
    family_center,
    generate,
    list_families,
    verify_family,
)
from latmin.features.lattice.models import Window
from latmin.features.lattice.services import dump_grid2, dump_pattern
from latmin.features.props.schemas import format_value
from latmin.shared.args import add_output_arg, add_pattern_args
from latmin.shared.io import Sink

ACTIONS = ("list", "gen", "verify", "classify")
CAPTION_PARAMS = ("h", "d", "a", "b")


def register(subparsers: _SubParsersAction) -> None:
    catalog = subparsers.add_parser("catalog", help="registered Z² families")
    catalog.add_argument("action", nargs="?", choices=ACTIONS, default="gen")
    catalog.add_argument("family_id", nargs="?", metavar="FAMILY")
    add_pattern_args(catalog)
    for name in CAPTION_PARAMS:
        catalog.add_argument(f"--{name}", type=int, dest=f"param_{name}", metavar="N", help=f"caption parameter {name}")
    catalog.add_argument("--all", action="store_true", help="verify every registered family")
    catalog.add_argument("--radius", type=int)
    add_output_arg(catalog)
    catalog.set_defaults(handler=run_catalog)

    enumerate_ = subparsers.add_parser("enumerate", help="window minimizers up to symmetry")
    enumerate_.add_argument("--radius", type=int, required=True)
    enumerate_.add_argument("--budget", type=int)
    enumerate_.add_argument("--seed", type=int, default=0)
    enumerate_.add_argument("--grids", action="store_true", help="print every candidate as GRID2")
    add_output_arg(enumerate_)
    enumerate_.set_defaults(handler=run_enumerate)


def _family(config: RunConfig) -> Optional[str]:
    raw = config.option("family_id")
    positional = None if raw is None else str(raw)
    if positional is not None and config.family is not None and positional != config.family:
        raise usage_error("give the family once, positionally or with --family")
    return positional or config.family


def _params(config: RunConfig) -> Dict[str, int]:
    params = dict(config.params)
    for name in CAPTION_PARAMS:
        value = config.option(f"param_{name}")
        if value is not None:
            params[name] = int(str(value))
    return params


def _verification_lines(result: FamilyVerification) -> str:
    return (
        f"FAMILY {result.pattern_id} in_constraint={'yes' if result.in_constraint else 'no'} "
        f"reconstructed={'yes' if result.reconstructed else 'no'}\n{result.report.summary()}"
    )


def run_catalog(config: RunConfig, sink: Sink) -> int:
    action = config.option("action", "gen")
    if action == "list":
        for family in list_families():
            flags = ["reconstructed"] if family.reconstructed else []
            if not family.connected:
                flags.append("disconnected")
            sink.emit(
                f"{family.id} params={','.join(family.parameters) or '-'} "
                f"caption={family.caption or '-'} flags={','.join(flags) or '-'}"
            )
        return EXIT_OK

    radius = config.radius or settings.DEFAULT_RADIUS
    family_id = _family(config)
    if action == "verify" and config.option("all"):
        if family_id is not None:
            raise usage_error("catalog verify takes a family or --all, not both")
        status = EXIT_OK
        for family in list_families():
            result = verify_family(family.id, radius=radius)
            sink.emit(_verification_lines(result))
            if not result.report.certified:
                status = EXIT_REFUTED
        return status
    if family_id is None:
        raise usage_error(f"catalog {action} needs a family id")

    params = _params(config)
    if action == "verify":
        result = verify_family(family_id, params, radius, force=config.force)
        sink.emit(_verification_lines(result))
        return EXIT_OK if result.report.certified else EXIT_REFUTED
    if action == "classify":
        pattern = generate(family_id, params, force=config.force)
        window = Window.ball(family_center(family_id, params), radius)
        analysis = classify_boundary(pattern, window)
        sink.emit(
            f"boundary_vertices={len(analysis.boundary_vertices)} corners={len(analysis.corners)} "
            f"loops={len(analysis.loops)} unit_square_loops={len(analysis.unit_square_loops)} "
            f"components={analysis.components} geodesic={analysis.geodesic} "
            f"simple={analysis.simple} oriented={analysis.oriented} surrogate={analysis.surrogate.replace(' ', '_')}"
        )
        for path in analysis.isolated_paths:
            sink.emit(f"isolated_path length={path.length} geodesic={path.geodesic} vertices={format_value(path.vertices)}")
        return EXIT_OK
    sink.emit(dump_pattern(generate(family_id, params, force=config.force)))
    return EXIT_OK


def run_enumerate(config: RunConfig, sink: Sink) -> int:
    report = enumerate_candidates(config.radius, config.budget, config.seed)
    sink.emit(
        f"radius={report.radius} traces={report.traces_checked} partial={'yes' if report.partial else 'no'} "
        f"candidates={len(report.candidates)} local_forms={len(report.local_forms)}"
    )
    for form in report.local_forms:
        sink.emit(f"FORM {format_value(list(form))}")
    if config.option("grids"):
        for K in report.candidates:
            sink.emit(dump_grid2(K))
    return EXIT_OK
