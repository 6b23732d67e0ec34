"""Command line wrapper: one path-export JSON in, one figure file out."""

from __future__ import annotations

import argparse
import sys

from . import DocumentError, load_document, render


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="plotviz",
        description="Render a value-path JSON export as a 3-D RGB-cube figure.",
    )
    parser.add_argument("path_json", help="path-export JSON document")
    parser.add_argument("-o", "--out", required=True, help="output figure (.png or .svg)")
    parser.add_argument("--elev", type=float, default=28.0, help="camera elevation")
    parser.add_argument("--azim", type=float, default=-60.0, help="camera azimuth")
    parser.add_argument("--point-size", type=float, default=36.0, help="marker area")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        doc = load_document(args.path_json)
        render(
            doc,
            args.out,
            elev=args.elev,
            azim=args.azim,
            point_size=args.point_size,
        )
    except (_UsageError, DocumentError, OSError) as exc:
        print(f"plotviz: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out} ({len(doc['points'])} points, {doc['order_name']})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
