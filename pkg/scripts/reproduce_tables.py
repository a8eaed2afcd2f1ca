#!/usr/bin/env python3
"""Regenerate the five obstruction tables (p = 2, 3, 5, 7, 11; n < 1000)
into a directory, one file per prime, in text, csv, or json form.

Usage: python scripts/reproduce_tables.py [--out-dir tables] [--format text]
"""

import argparse
import contextlib
import io
import pathlib
import sys
import time

from divmono.cli import main as cli_main


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="tables")
    parser.add_argument("--format", choices=("text", "csv", "json"), default="text")
    parser.add_argument("--n-max", type=int, default=999)
    args = parser.parse_args(argv)

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ext = {"text": "txt", "csv": "csv", "json": "json"}[args.format]

    for p in (2, 3, 5, 7, 11):
        path = out_dir / f"table_p{p}.{ext}"
        start = time.perf_counter()
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = cli_main(["table", "--p", str(p), "--n-max", str(args.n_max),
                             "--format", args.format])
        if code != 0:
            print(f"table for p={p} failed with exit code {code}", file=sys.stderr)
            return code
        path.write_text(buf.getvalue())
        print(f"wrote {path} ({time.perf_counter() - start:.1f} s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
