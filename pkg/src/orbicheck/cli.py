"""``verify <suite>``: run check suites and write JSON or markdown reports."""

import argparse
from pathlib import Path
import sys

from .suites import SUITES, ConfigError, make_config, run

EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"verify: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    p = _Parser(prog="verify", description="Exact checks for the Z/3 orbifold of the Leech lattice VOA.")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.add_argument("--order", type=int, help="character truncation weight (default 5)")
    p.add_argument("--enum-norm-bound", type=int, dest="enum_norm_bound", help="short-vector norm bound")
    p.add_argument("--seed", type=int)
    p.add_argument("--cache", help="cache directory (theta/, bsgs/, series/)")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--markdown", help="write a markdown summary here")
    p.add_argument("--sampled", action="store_true", default=None, help="sample instead of exhaustive checks")
    p.add_argument("--twist-order", type=int, dest="twist_order", help="total degree N for c^i_mn")
    p.add_argument("--config", help="flat key = value config file")
    p.add_argument("--quiet", action="store_true")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        text = Path(args.config).read_text() if args.config else None
        overrides = {k: getattr(args, k) for k in
                     ("order", "enum_norm_bound", "seed", "cache", "sampled", "twist_order")}
        cfg = make_config(overrides, text)
    except (ConfigError, OSError, TypeError) as exc:
        print(f"verify: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run(args.suite, cfg)
    if args.report:
        Path(args.report).write_text(report.to_json())
    if args.markdown:
        Path(args.markdown).write_text(report.to_markdown())
    if not args.quiet:
        for c in report.checks:
            print(f"{c.status.upper():4} {c.id:28} {c.runtimeMs:>7} ms  {c.description}")
        n = sum(c.passed for c in report.checks)
        print(f"{n}/{len(report.checks)} checks passed")
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
