from argparse import ArgumentParser
from pathlib import Path


def add_pattern_args(parser: ArgumentParser) -> None:
    parser.add_argument("--pattern", type=Path, help="pattern JSON document ('-' for stdin)")
    parser.add_argument("--family", help="registry family id instead of a pattern file")
    parser.add_argument("--param", action="append", metavar="NAME=VALUE", help="family parameter")
    parser.add_argument("--force", action="store_true", help="allow parameters outside the caption")


def add_window_args(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--window", type=int, nargs="+", metavar="N", help="lo coordinates then hi coordinates, or one radius"
    )
    parser.add_argument("--center", type=int, nargs="+", metavar="N")
    parser.add_argument("--radius", type=int)


def add_output_arg(parser: ArgumentParser) -> None:
    parser.add_argument("--output", "--out", dest="output", type=Path, help="write the report here instead of stdout")
