"""Command-line entry point: check, generate, demo, bench.

Diagnostics go to stderr as ``file:line: code: message``; data (generated
paths, CSV, the demo trace) goes to stdout or flagged paths. Exit status
is 0 on success, 1 when violations or errors were reported, 2 on usage
errors. No command ever modifies an input file; generation is
all-or-nothing via a staging directory.
"""

import argparse
import os
import shutil
import sys
import tempfile
from pathlib import Path

from . import bench as benchmod
from . import codegen
from .demo import run_demo
from .errors import CopError, InvalidConfigError, SourceError


def _diag(path, err) -> str:
    line = err.line if isinstance(err, SourceError) else 0
    return f"{path}:{line}: {err.code}: {err}"


def _check_file(path: str):
    """Returns (manifest or None, diagnostic lines)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        return None, [f"{path}:0: io: {err}"]
    manifest, errors = codegen.diagnose(text)
    return manifest, [_diag(path, err) for err in errors]


def cmd_check(args) -> int:
    status = 0
    for path in args.inputs:
        _, diagnostics = _check_file(path)
        for line in diagnostics:
            print(line, file=sys.stderr)
        if diagnostics:
            status = 1
    return status


def cmd_generate(args) -> int:
    manifests = []
    status = 0
    for path in args.inputs:
        manifest, diagnostics = _check_file(path)
        for line in diagnostics:
            print(line, file=sys.stderr)
        if diagnostics:
            status = 1
        elif manifest is not None:
            manifests.append(manifest)
    if status:
        return status

    try:
        merged = codegen.merge(manifests)
        templates = codegen.load_templates(args.template_dir)
        outputs = codegen.generate(merged, templates)
    except CopError as err:
        print(f"generate: {err.code}: {err}", file=sys.stderr)
        return 1

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    staging = Path(tempfile.mkdtemp(prefix=".copkit-stage-", dir=out_dir.parent))
    try:
        for rel, text in outputs.items():
            target = staging / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text, encoding="utf-8")
        for rel in outputs:
            final = out_dir / rel
            final.parent.mkdir(parents=True, exist_ok=True)
            os.replace(staging / rel, final)
            print(final)
    finally:
        shutil.rmtree(staging, ignore_errors=True)
    return 0


def cmd_demo(args) -> int:
    run_demo(print)
    return 0


def cmd_bench(args, parser) -> int:
    config = benchmod.BenchConfig(
        calls=args.calls,
        k_values=tuple(range(args.k_max + 1)),
        repeats=args.repeats,
        warmup=not args.no_warmup,
    )
    try:
        config.validate()
    except InvalidConfigError as err:
        parser.error(str(err))  # exits 2

    cop = benchmod.run_cop_bench(config)
    baseline = benchmod.run_baseline_bench(config)
    rows = list(cop.rows) + list(baseline.rows)
    csv_text = benchmod.emit_csv(rows)
    if args.csv:
        Path(args.csv).write_text(csv_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text)
    print(benchmod.summary_table(rows), file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copkit",
        description="Context-oriented programming toolchain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="validate coding conventions")
    p_check.add_argument("inputs", nargs="+", metavar="FILE")

    p_gen = sub.add_parser("generate", help="generate layer files and shims")
    p_gen.add_argument("inputs", nargs="*", metavar="FILE")
    p_gen.add_argument("--out-dir", required=True)
    p_gen.add_argument("--template-dir", default=None)

    sub.add_parser("demo", help="replay the layered resource-storage trace")

    p_bench = sub.add_parser("bench", help="run the dispatch-overhead benchmark")
    p_bench.add_argument("--calls", type=int, default=10_000_000)
    p_bench.add_argument("--k-max", type=int, default=benchmod.NUM_LAYERS)
    p_bench.add_argument("--repeats", type=int, default=5)
    p_bench.add_argument("--csv", default=None, metavar="PATH")
    p_bench.add_argument("--no-warmup", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        return cmd_check(args)
    if args.command == "generate":
        return cmd_generate(args)
    if args.command == "demo":
        return cmd_demo(args)
    return cmd_bench(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
