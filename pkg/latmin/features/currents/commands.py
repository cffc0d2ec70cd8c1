from argparse import _SubParsersAction
from pathlib import Path

from latmin.core.config import settings
from latmin.core.errors import EXIT_OK, EXIT_REFUTED
from latmin.core.run_config import RunConfig
from latmin.features.currents.models import Certificate
from latmin.features.currents.services import (
    certificate_digest,
    certify_up_to_radius,
    dump_certificate,
    parse_certificate,
    validate_certificate,
)
from latmin.features.lattice.services import dump_grid2
from latmin.shared.args import add_output_arg, add_pattern_args, add_window_args
from latmin.shared.io import Sink, read_text, resolve_center, resolve_pattern, write_text


def register(subparsers: _SubParsersAction) -> None:
    parser = subparsers.add_parser("certify", help="radius sweep: certificate or refutation")
    add_pattern_args(parser)
    add_window_args(parser)
    parser.add_argument("--cert", type=Path, help="validate this CERT file instead of sweeping")
    parser.add_argument("--cert-out", type=Path, help="write the largest-radius certificate here")
    add_output_arg(parser)
    parser.set_defaults(handler=run)


def _validate(config: RunConfig, sink: Sink) -> int:
    pattern = resolve_pattern(config)
    certificate = parse_certificate(read_text(config.cert))
    ok = validate_certificate(certificate, pattern)
    sink.emit(
        f"CERT pattern={certificate.pattern_id} r={certificate.radius} "
        f"valid={'yes' if ok else 'no'}"
    )
    return EXIT_OK if ok else EXIT_REFUTED


def run(config: RunConfig, sink: Sink) -> int:
    if config.cert is not None:
        return _validate(config, sink)
    pattern = resolve_pattern(config)
    center = resolve_center(config, pattern.dim)
    report = certify_up_to_radius(pattern, center, config.radius or settings.DEFAULT_RADIUS)
    for verdict in report.results:
        if isinstance(verdict, Certificate):
            sink.emit(f"CERT r={verdict.radius} pattern={verdict.pattern_id} hash={certificate_digest(verdict)}")
            continue
        sink.emit(
            f"REFUTED r={verdict.radius} pattern={verdict.pattern_id} "
            f"witness_perimeter={verdict.witness_perimeter} pattern_perimeter={verdict.pattern_perimeter}"
        )
        if verdict.witness.dim == 2:
            sink.emit(dump_grid2(verdict.witness))
        break
    sink.emit(report.summary())

    cert_out = config.option("cert_out")
    if cert_out is not None and report.certified:
        write_text(Path(cert_out), dump_certificate(report.results[-1]))
    return EXIT_OK if report.certified else EXIT_REFUTED

