"""Command-line front end: expansions, products, differences, sweeps and batch runs.

Exit codes: 0 on success (or a nonnegative difference), 1 when a difference
is negative or a sweep records failures, 2 on usage, parse or schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .partitions import ShapeError, format_partition, parse_shape
from .positivity import STATEMENTS, SweepBounds, evaluate, sweep_inputs
from .schur import export_lr_cache, import_lr_cache, is_schur_nonneg, schur_product
from .temperley_lieb import Permutation, TLElement, catalan_basis, permutation_of, theta_expand, tl_from_word

SCHEMA = 1


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    statement: str
    box_rows: int = 3
    box_cols: int = 3
    max_cells: int | None = None
    tuple_len: int = 3
    tuple_cells: int = 4
    n: int = 3
    trials: int = 20
    seed: int = 7
    max_cd: int = 2
    jobs: int = 1
    out: str | None = None

    def validate(self):
        if self.statement not in STATEMENTS:
            raise ConfigError(f"unknown statement {self.statement!r}; choose from {', '.join(STATEMENTS)}")
        for name in ("box_rows", "box_cols", "tuple_len", "tuple_cells", "n", "trials", "max_cd", "jobs"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        if self.max_cells is not None and self.max_cells < 1:
            raise ConfigError(f"max_cells must be positive, got {self.max_cells}")

    def bounds(self) -> SweepBounds:
        return SweepBounds(rows=self.box_rows, cols=self.box_cols, max_cells=self.max_cells,
                           tuple_len=self.tuple_len, tuple_cells=self.tuple_cells, n=self.n,
                           trials=self.trials, seed=self.seed, max_cd=self.max_cd)

    def echo(self) -> dict:
        # jobs and output path do not change results
        return {k: v for k, v in asdict(self).items() if k not in ("jobs", "out")}


@dataclass
class PositivityReport:
    config: dict
    case_count: int = 0
    skipped_count: int = 0
    failures: list = field(default_factory=list)
    min_coefficient: dict | None = None
    wall_time: float = 0.0
    tool_version: str = __version__
    schema: int = SCHEMA

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> PositivityReport:
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ConfigError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)


def _summarize(task: tuple[str, dict]) -> tuple:
    statement, inputs = task
    case = evaluate(statement, inputs)
    low = case.difference.min_term() if case.difference is not None else None
    record = None if case.ok else case.to_record()
    return case.skipped is not None, low and (list(low[0]), low[1]), record


def run_cases(tasks: Iterable[tuple[str, dict]], config: dict, jobs: int = 1) -> PositivityReport:
    """Evaluate ``(statement, inputs)`` tasks and fold them into one report."""
    start = time.perf_counter()
    report = PositivityReport(config=config)
    tasks = list(tasks)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_summarize, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    else:
        results = map(_summarize, tasks)
    for index, ((statement, inputs), (skipped, low, record)) in enumerate(zip(tasks, results)):
        report.case_count += 1
        report.skipped_count += skipped
        if record is not None:
            report.failures.append({"index": index, **record})
        if low is not None and (report.min_coefficient is None
                                or low[1] < report.min_coefficient["coefficient"]):
            report.min_coefficient = {"index": index, "statement": statement, "inputs": inputs,
                                      "partition": low[0], "coefficient": low[1]}
    report.wall_time = round(time.perf_counter() - start, 3)
    return report


def run_check(config: RunConfig) -> PositivityReport:
    config.validate()
    tasks = ((config.statement, inputs) for inputs in sweep_inputs(config.statement, config.bounds()))
    return run_cases(tasks, config.echo(), config.jobs)


def load_batch(path: str | Path) -> list[tuple[str, dict]]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise ConfigError(f"{path}: expected a JSON list of case records")
    tasks = []
    for i, rec in enumerate(data):
        if not isinstance(rec, dict) or "statement" not in rec or not isinstance(rec.get("inputs"), dict):
            raise ConfigError(f"record {i}: expected an object with 'statement' and 'inputs'")
        if rec["statement"] not in STATEMENTS:
            raise ConfigError(f"record {i}: unknown statement {rec['statement']!r}")
        tasks.append((rec["statement"], rec["inputs"]))
    return tasks


def run_batch(path: str | Path, jobs: int = 1) -> PositivityReport:
    tasks = load_batch(path)
    for i, (statement, inputs) in enumerate(tasks):
        try:
            evaluate(statement, inputs)
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"record {i}: {type(exc).__name__}: {exc}") from None
    return run_cases(tasks, {"batch": str(path)}, jobs)


# -- argument handling ---------------------------------------------------------

def _parse_box(text: str) -> tuple[int, int]:
    try:
        rows, cols = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"box must look like 3x3, got {text!r}") from None
    return rows, cols


def _parse_product(expr: str):
    return [parse_shape(atom.strip()) for atom in expr.split("*")]


def _emit_report(report: PositivityReport, out: str | None) -> int:
    text = report.to_json()
    if out:
        Path(out).write_text(text, encoding="utf-8")
    summary = f"{report.case_count} cases, {report.skipped_count} skipped, {len(report.failures)} failures"
    if report.min_coefficient:
        mc = report.min_coefficient
        summary += f"; min coefficient {mc['coefficient']} at s[{format_partition(mc['partition'])}]"
    print(summary if out else text, end="\n" if out else "")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurpos", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--cache", help="load and save the LR expansion cache at this JSON path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Schur expansion of a skew shape such as 3,1/1")
    p.add_argument("shape")

    p = sub.add_parser("product", help="expand a product such as '2,1 * 1'")
    p.add_argument("expr")

    p = sub.add_parser("diff", help="expand LHS - RHS; exit 1 if some coefficient is negative")
    p.add_argument("lhs")
    p.add_argument("rhs")

    def add_sweep_flags(p, statement: bool):
        if statement:
            p.add_argument("statement", help=", ".join(STATEMENTS))
        p.add_argument("--box", type=_parse_box, default=(3, 3), help="ROWSxCOLS bound on outer shapes")
        p.add_argument("--max-cells", type=int)
        p.add_argument("--tuple-len", type=int, default=3)
        p.add_argument("--tuple-cells", type=int, default=4)
        p.add_argument("--n", type=int, default=3)
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--max-cd", type=int, default=2)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out")

    add_sweep_flags(sub.add_parser("check", help="run a positivity sweep and write a JSON report"), True)
    add_sweep_flags(sub.add_parser("identity", help="sweep the minor-product identity"), False)

    p = sub.add_parser("batch", help="run a JSON list of {statement, inputs} records")
    p.add_argument("path")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    tl = sub.add_parser("tl", help="Temperley-Lieb utilities").add_subparsers(dest="tl_command", required=True)
    p = tl.add_parser("basis", help="list the noncrossing matchings of TL_n")
    p.add_argument("--n", type=int, required=True)
    p = tl.add_parser("mult", help="multiply generator words, e.g. 1,3,2 2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("words", nargs="+")
    p = tl.add_parser("theta", help="f-coefficients of theta(T_v) for v in one-line notation, e.g. 3,2,1")
    p.add_argument("perm")
    return parser


def _config_from(args, statement: str) -> RunConfig:
    rows, cols = args.box
    return RunConfig(statement=statement, box_rows=rows, box_cols=cols, max_cells=args.max_cells,
                     tuple_len=args.tuple_len, tuple_cells=args.tuple_cells, n=args.n, trials=args.trials,
                     seed=args.seed, max_cd=args.max_cd, jobs=args.jobs, out=args.out)


def _parse_word(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()] if text.strip() not in ("", "e") else []


def _dispatch(args) -> int:
    if args.command == "expand":
        print(schur_product([parse_shape(args.shape)]))
        return 0
    if args.command == "product":
        print(schur_product(_parse_product(args.expr)))
        return 0
    if args.command == "diff":
        diff = schur_product(_parse_product(args.lhs)) - schur_product(_parse_product(args.rhs))
        print(diff)
        ok, witness = is_schur_nonneg(diff)
        if not ok:
            print(f"negative coefficient {witness[1]} at s[{format_partition(witness[0])}]", file=sys.stderr)
        return 0 if ok else 1
    if args.command in ("check", "identity"):
        config = _config_from(args, args.statement if args.command == "check" else "identity")
        return _emit_report(run_check(config), config.out)
    if args.command == "batch":
        return _emit_report(run_batch(args.path, args.jobs), args.out)
    if args.command == "tl":
        if args.tl_command == "basis":
            for m in catalan_basis(args.n):
                print(f"{m}    w={','.join(map(str, permutation_of(m)))}")
            return 0
        if args.tl_command == "mult":
            out = TLElement.identity(args.n)
            for word in args.words:
                out = out * tl_from_word(_parse_word(word), args.n)
            print(out)
            return 0
        v = Permutation(_parse_word(args.perm))
        for m, c in sorted(theta_expand(v).items()):
            print(f"{c:+d}  {m}")
        return 0
    raise AssertionError(args.command)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cache = Path(args.cache) if args.cache else None
    if cache and cache.exists():
        data = json.loads(cache.read_text(encoding="utf-8"))
        if data.get("tool_version") == __version__:
            import_lr_cache(data["skew"])
    try:
        code = _dispatch(args)
    except (ShapeError, ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cache:
        cache.write_text(json.dumps({"tool_version": __version__, "skew": export_lr_cache()}), encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
