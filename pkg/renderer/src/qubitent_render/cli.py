"""render CLI: one dataset CSV in, one image out.

Exit codes: 0 success, 1 schema/data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FIGURE_IDS, RenderJob, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render", description="Render a qubitent figure dataset to an image."
    )
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS)
    parser.add_argument("--in", dest="input_path", required=True, help="dataset CSV path")
    parser.add_argument("--out", dest="output_path", required=True,
                        help="output image path (.png or .svg)")
    parser.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    job = RenderJob(
        figure_id=args.figure,
        input_path=Path(args.input_path),
        output_path=Path(args.output_path),
        dpi=args.dpi,
    )
    try:
        path = render(job)
    except (SchemaError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    sys.stdout.write(f"wrote {path}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
