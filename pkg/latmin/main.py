import sys
from typing import List, Optional

from latmin.commands import build_parser
from latmin.core.errors import LatminError
from latmin.core.logging import setup_logging
from latmin.core.run_config import RunConfig
from latmin.shared.io import Sink


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; 0 success, 1 refutation or violation, 2 usage error."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help
        return int(exc.code or 0)
    setup_logging(ns.log_level)

    sink: Optional[Sink] = None
    try:
        config = RunConfig.from_namespace(ns)
        sink = Sink(config.output)
        status = ns.handler(config, sink)
        sink.flush()
        return status
    except LatminError as exc:
        if sink is not None:
            sink.flush()
        print(f"latmin: {exc.detail}", file=sys.stderr)
        return exc.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
