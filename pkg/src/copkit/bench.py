"""Dispatch-overhead benchmark.

One layered method with five partials (each proceeds exactly once) is
dispatched in bulk while the number of active layers varies from 0 to 5;
a plain chain of six functions calling each other serves as the baseline.
Every body increments a shared counter, which both defeats dead-code
elimination and lets each run assert the exact amount of work performed:
calls x (k + 1) body executions for k active layers, in both modes.

Timing uses wall-clock nanoseconds with an optional full warm-up pass per
layer count (excluded from samples) and the median over repeats as the
headline statistic. Runs are single-threaded by design.

Run ``python -m copkit.bench`` to compare the compiled and pure-Python
dispatch kernels on the same sweep.
"""

import statistics
import time
from dataclasses import dataclass, field

from . import _kernel
from .context import ContextStack
from .errors import InvalidConfigError
from .runtime import DispatchTable, LayerId, MethodKey, register_layer

NUM_LAYERS = 5
WORK = MethodKey("BenchTarget", "work")

MODE_COP = "cop"
MODE_BASELINE = "baseline"


class HitCounter:
    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


@dataclass(frozen=True)
class BenchConfig:
    calls: int = 10_000_000
    k_values: tuple[int, ...] = tuple(range(NUM_LAYERS + 1))
    repeats: int = 5
    warmup: bool = True

    def validate(self) -> None:
        if self.calls < 1:
            raise InvalidConfigError(f"calls must be >= 1, got {self.calls}")
        if self.repeats < 1:
            raise InvalidConfigError(f"repeats must be >= 1, got {self.repeats}")
        for k in self.k_values:
            if not 0 <= k <= NUM_LAYERS:
                raise InvalidConfigError(f"k must be in 0..{NUM_LAYERS}, got {k}")


@dataclass(frozen=True)
class BenchRow:
    k: int
    mode: str
    samples_ns: tuple[int, ...]
    counter_deltas: tuple[int, ...]
    calls: int
    repeats: int

    @property
    def median_ns(self) -> int:
        return int(statistics.median(self.samples_ns))


@dataclass(frozen=True)
class BenchResult:
    rows: tuple[BenchRow, ...]

    def median_by_k(self) -> dict[int, int]:
        return {row.k: row.median_ns for row in self.rows}


@dataclass
class BenchFixture:
    table: DispatchTable
    layers: list[LayerId]
    counter: HitCounter
    stack: ContextStack = field(default_factory=ContextStack)


def setup_fixture() -> BenchFixture:
    """One method, a base, and five partials that count and proceed once."""
    counter = HitCounter()
    layers = [register_layer(f"bench.layers.L{i}") for i in range(1, NUM_LAYERS + 1)]

    def base(receiver, args):
        counter.count += 1

    table = DispatchTable()
    table.register_base(WORK, base)
    for layer in layers:

        def partial(receiver, args, proceed):
            counter.count += 1
            return proceed()

        table.register_partial(WORK, layer, partial)
    table.finalize()
    return BenchFixture(table, layers, counter)


def _timed_runs(config: BenchConfig, counter: HitCounter, run_calls, k: int):
    """Shared measurement loop; verifies the per-run body count exactly."""
    expected = config.calls * (k + 1)
    if config.warmup:
        run_calls()
    samples: list[int] = []
    deltas: list[int] = []
    for _ in range(config.repeats):
        before = counter.count
        t0 = time.perf_counter_ns()
        run_calls()
        elapsed = time.perf_counter_ns() - t0
        delta = counter.count - before
        if delta != expected:
            raise RuntimeError(
                f"work mismatch at k={k}: expected {expected} bodies, ran {delta}"
            )
        samples.append(elapsed)
        deltas.append(delta)
    return tuple(samples), tuple(deltas)


def run_cop_bench(config: BenchConfig, fixture: BenchFixture | None = None) -> BenchResult:
    """Sweep the layered-method dispatch over the configured layer counts."""
    config.validate()
    if fixture is None:
        fixture = setup_fixture()
    table, stack, counter = fixture.table, fixture.stack, fixture.counter
    calls = config.calls
    dispatch = table.dispatch

    def run_calls():
        for _ in range(calls):
            dispatch(WORK, None, (), stack)

    rows = []
    for k in config.k_values:
        if k:
            stack.activate(fixture.layers[:k])
        try:
            samples, deltas = _timed_runs(config, counter, run_calls, k)
        finally:
            if k:
                stack.end()
        rows.append(BenchRow(k, MODE_COP, samples, deltas, calls, config.repeats))
    return BenchResult(tuple(rows))


def _baseline_chain(counter: HitCounter):
    """Six plain functions, each counting and calling the next one down."""

    def f0():
        counter.count += 1

    chain = [f0]
    for _ in range(NUM_LAYERS):
        nxt = chain[-1]

        def fi(nxt=nxt):
            counter.count += 1
            nxt()

        chain.append(fi)
    return chain


def run_baseline_bench(
    config: BenchConfig, counter: HitCounter | None = None
) -> BenchResult:
    """Sweep the statically chained calls, entering at depth k."""
    config.validate()
    if counter is None:
        counter = HitCounter()
    chain = _baseline_chain(counter)
    calls = config.calls

    rows = []
    for k in config.k_values:
        entry = chain[k]

        def run_calls(entry=entry):
            for _ in range(calls):
                entry()

        samples, deltas = _timed_runs(config, counter, run_calls, k)
        rows.append(BenchRow(k, MODE_BASELINE, samples, deltas, calls, config.repeats))
    return BenchResult(tuple(rows))


def emit_csv(rows) -> str:
    """Fixed CSV shape: header, then rows k-ascending with cop before baseline."""
    rows = list(rows)
    if not rows:
        raise InvalidConfigError("emit_csv requires at least one result row")
    ordered = sorted(rows, key=lambda r: (r.k, 0 if r.mode == MODE_COP else 1))
    lines = ["k,mode,median_ns,calls,repeats"]
    for row in ordered:
        lines.append(f"{row.k},{row.mode},{row.median_ns},{row.calls},{row.repeats}")
    return "\n".join(lines) + "\n"


def summary_table(rows) -> str:
    ordered = sorted(rows, key=lambda r: (r.k, 0 if r.mode == MODE_COP else 1))
    lines = [f"{'k':>3} {'mode':<10} {'median_ns':>14} {'ns/call':>10}"]
    for row in ordered:
        lines.append(
            f"{row.k:>3} {row.mode:<10} {row.median_ns:>14} "
            f"{row.median_ns / row.calls:>10.1f}"
        )
    return "\n".join(lines)


def compare_kernels(config: BenchConfig) -> dict[str, BenchResult]:
    """Run the cop sweep once per available dispatch kernel."""
    results: dict[str, BenchResult] = {}
    previous = _kernel.active_kernel()
    try:
        for name in _kernel.available_kernels():
            _kernel.use_kernel(name)
            results[name] = run_cop_bench(config, setup_fixture())
    finally:
        _kernel.use_kernel(previous)
    return results


def _main(argv=None) -> int:
    import argparse

    parser = argparse.ArgumentParser(
        prog="python -m copkit.bench",
        description="Compare the compiled and pure-Python dispatch kernels.",
    )
    parser.add_argument("--calls", type=int, default=1_000_000)
    parser.add_argument("--k-max", type=int, default=NUM_LAYERS)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--no-warmup", action="store_true")
    args = parser.parse_args(argv)

    config = BenchConfig(
        calls=args.calls,
        k_values=tuple(range(args.k_max + 1)),
        repeats=args.repeats,
        warmup=not args.no_warmup,
    )
    config.validate()
    results = compare_kernels(config)
    for name, result in results.items():
        print(f"kernel: {name}")
        print(summary_table(result.rows))
    if len(results) == 2:
        py = results["python"].median_by_k()
        cy = results["compiled"].median_by_k()
        for k in sorted(py):
            if cy[k]:
                print(f"k={k}: compiled is {py[k] / cy[k]:.2f}x faster")
    return 0


if __name__ == "__main__":
    raise SystemExit(_main())
