from argparse import ArgumentParser

from latmin.features.catalog2d.commands import register as register_catalog
from latmin.features.currents.commands import register as register_certify
from latmin.features.energy.commands import register as register_energy
from latmin.features.mincut.commands import register as register_solve
from latmin.features.props.commands import register as register_props
from latmin.features.render.commands import register as register_render
from latmin.features.skeleton.commands import register as register_skeleton


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="latmin",
        description="Area-minimizing subgraphs of Zⁿ: solve, certify, classify.",
    )
    parser.add_argument("--log-level", help="override LATMIN_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_solve(subparsers)
    register_certify(subparsers)
    register_energy(subparsers)
    register_catalog(subparsers)
    register_skeleton(subparsers)
    register_props(subparsers)
    register_render(subparsers)
    return parser
