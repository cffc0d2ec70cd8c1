from argparse import _SubParsersAction
from pathlib import Path

from latmin.core.errors import EXIT_OK, EXIT_REFUTED, usage_error
from latmin.core.run_config import RunConfig
from latmin.features.energy.models import VertexFunction
from latmin.features.energy.services import coarea_check, dirichlet_energy, parse_func2
from latmin.shared.args import add_output_arg
from latmin.shared.io import Sink, read_text


def register(subparsers: _SubParsersAction) -> None:
    energy = subparsers.add_parser("energy", help="1-Dirichlet energy of a FUNC2 function")
    energy.add_argument("--func", type=Path, required=True)
    add_output_arg(energy)
    energy.set_defaults(handler=run_energy)

    coarea = subparsers.add_parser("coarea", help="check the co-area identity for a FUNC2 function")
    coarea.add_argument("--func", type=Path, required=True)
    add_output_arg(coarea)
    coarea.set_defaults(handler=run_coarea)


def _load(config: RunConfig) -> VertexFunction:
    if config.func is None:
        raise usage_error("--func is required")
    return parse_func2(read_text(config.func))


def run_energy(config: RunConfig, sink: Sink) -> int:
    f = _load(config)
    sink.emit(f"energy={dirichlet_energy(f)}")
    return EXIT_OK


def run_coarea(config: RunConfig, sink: Sink) -> int:
    result = coarea_check(_load(config))
    sink.emit(f"lhs={result.lhs} rhs={result.rhs} equal={'yes' if result.equal else 'no'}")
    return EXIT_OK if result.equal else EXIT_REFUTED
