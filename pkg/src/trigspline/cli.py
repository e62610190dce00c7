"""Command-line front end: sample, build a spline, evaluate it on a lattice.

Examples::

    trigspline --mode paper-example --output out/
    trigspline --mode interp-1d --n 9 --order 2 --builtin coskx:2 --output s.csv
    trigspline --mode interp-2d --n 7 --n 9 --order 1 --builtin delta:4,5 \\
        --both-methods --output surface.csv

Every run writes a sidecar ``<output>.report.json`` with node checks.
"""

import argparse
import csv
import json
import logging
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .fundamental import fundamental_basis
from .grids import GridSpec, nodes
from .splinekernel import DEFAULT_EPS, SplineParams, eval_spline_1d
from .tensor import TensorSplineConfig, fundform_lattice, polyform_lattice
from .trigpoly import SampleGrid, coeffs_1d, coeffs_2d

__all__ = ["JobConfig", "SampleFileError", "ingest_samples", "builtin_samples", "run_job", "main"]

log = logging.getLogger(__name__)

MODES = ("interp-1d", "interp-2d", "interp-nd", "paper-example")
FORMATS = ("csv", "json")
NODE_TOL = 1e-7
METHOD_TOL = 1e-8
PAPER_NODES = (7, 9)
PAPER_DELTA = (4, 5)
PAPER_SWEEP = ((1, 0), (1, 1), (2, 0), (2, 1))
PAPER_ENVELOPE = 1.5


class SampleFileError(ValueError):
    """Malformed sample input."""


def fmt(v) -> str:
    """17 significant digits; the fixed output number format."""
    return f"{float(v):.17g}"


@dataclass
class JobConfig:
    mode: str
    n_nodes: tuple = ()
    indicator: int = 0
    stitch_indicator: int = None
    orders: tuple = (1,)
    eps: float = DEFAULT_EPS
    input: str = None
    builtin: str = None
    resolution: tuple = (200,)
    output: str = None
    format: str = "csv"
    both_methods: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {', '.join(MODES)}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected csv or json")
        if self.output is None:
            raise ValueError("an output path is required")
        if any(int(r) < 2 for r in self.resolution):
            raise ValueError(f"resolution must be >= 2 per axis, got {self.resolution}")
        if self.mode == "paper-example":
            self.n_nodes = PAPER_NODES
            return
        if not self.n_nodes:
            raise ValueError("at least one --n is required")
        d = len(self.n_nodes)
        expected = {"interp-1d": 1, "interp-2d": 2}.get(self.mode)
        if expected is not None and d != expected:
            raise ValueError(f"mode {self.mode} needs {expected} --n value(s), got {d}")
        if (self.input is None) == (self.builtin is None):
            raise ValueError("exactly one of --input and --builtin is required")
        if self.both_methods and d > 2:
            raise ValueError("--both-methods is available for 1 and 2 variables only")

    def per_axis(self, values, name):
        d = len(self.n_nodes)
        values = tuple(values)
        if len(values) == 1:
            return values * d
        if len(values) != d:
            raise ValueError(f"got {len(values)} {name} values for {d} axes")
        return values

    def tensor_config(self, n_nodes=None, indicator=None, orders=None):
        n_nodes = self.n_nodes if n_nodes is None else n_nodes
        return TensorSplineConfig(
            n_nodes=n_nodes,
            indicator=self.indicator if indicator is None else indicator,
            orders=self.per_axis(self.orders, "--order") if orders is None else orders,
            stitch_indicator=self.stitch_indicator,
            tail_tolerance=self.eps,
        )


# -- input ----------------------------------------------------------------


def _is_int(s):
    try:
        int(s)
    except ValueError:
        return False
    return True


def _ingest_csv(path, specs):
    d = len(specs)
    shape = tuple(s.n_nodes for s in specs)
    values = np.full(shape, np.nan)
    seen = np.zeros(shape, dtype=bool)
    rows = 0
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            row = [c.strip() for c in row]
            if not row or not any(row) or row[0].startswith("#"):
                continue
            if rows == 0 and not _is_int(row[0]):
                continue  # header
            rows += 1
            if len(row) != d + 1:
                raise SampleFileError(f"{path}:{lineno}: expected {d + 1} columns, got {len(row)}")
            try:
                idx = tuple(int(c) for c in row[:d])
                value = float(row[d])
            except ValueError:
                raise SampleFileError(f"{path}:{lineno}: cannot parse row {row}") from None
            for axis, (j, N) in enumerate(zip(idx, shape)):
                if not 1 <= j <= N:
                    raise SampleFileError(
                        f"{path}:{lineno}: index {j} on axis {axis + 1} out of range 1..{N}"
                    )
            if not math.isfinite(value):
                raise SampleFileError(f"{path}:{lineno}: non-finite value at node {idx}")
            pos = tuple(j - 1 for j in idx)
            if seen[pos]:
                raise SampleFileError(f"{path}:{lineno}: duplicate node {idx}")
            seen[pos] = True
            values[pos] = value
    if rows == 0:
        raise SampleFileError(f"{path}: no sample rows found")
    if not seen.all():
        missing = tuple(int(i) + 1 for i in np.argwhere(~seen)[0])
        raise SampleFileError(f"{path}: missing node {missing} ({int((~seen).sum())} nodes missing)")
    return values


def _ingest_json(path, specs):
    shape = tuple(s.n_nodes for s in specs)
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SampleFileError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "shape" not in doc or "values" not in doc:
        raise SampleFileError(f'{path}: expected an object with "shape" and "values"')
    if tuple(doc["shape"]) != shape:
        raise SampleFileError(f"{path}: shape {tuple(doc['shape'])} does not match expected {shape}")
    flat = doc["values"]
    if not isinstance(flat, list) or len(flat) != math.prod(shape):
        raise SampleFileError(f"{path}: expected {math.prod(shape)} values in row-major order")
    try:
        values = np.array(flat, dtype=float)
    except (TypeError, ValueError):
        raise SampleFileError(f"{path}: values must be numbers") from None
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        idx = tuple(int(i) + 1 for i in np.unravel_index(bad[0], shape))
        raise SampleFileError(f"{path}: non-finite value at node {idx}")
    return values.reshape(shape)


def ingest_samples(path, specs) -> SampleGrid:
    """Read samples for the grids `specs` from CSV or JSON.

    CSV rows are ``j1,...,jd,value`` with 1-based node indices, every node
    exactly once; an optional header row is skipped. JSON files hold
    ``{"shape": [...], "values": [...]}`` in row-major order.
    """
    specs = tuple(specs)
    path = Path(path)
    if not path.is_file():
        raise SampleFileError(f"{path}: no such file")
    if path.suffix.lower() == ".json":
        values = _ingest_json(path, specs)
    else:
        values = _ingest_csv(path, specs)
    return SampleGrid(values, specs)


def builtin_samples(name: str, specs) -> SampleGrid:
    """Samples of a named test function.

    ``const1``
        f = 1
    ``coskx:K``
        f = cos(K x1)
    ``delta:j1,...,jd``
        1 at the given 1-based node, 0 elsewhere
    """
    specs = tuple(specs)
    shape = tuple(s.n_nodes for s in specs)
    base, _, arg = name.partition(":")
    if base == "const1":
        return SampleGrid(np.ones(shape), specs)
    if base == "coskx":
        k = int(arg) if arg else 1
        return SampleGrid.from_function(lambda *x: np.cos(k * x[0]), specs)
    if base == "delta":
        idx = tuple(int(v) for v in arg.split(",")) if arg else (1,) * len(specs)
        if len(idx) != len(specs) or not all(1 <= j <= N for j, N in zip(idx, shape)):
            raise ValueError(f"delta node {idx} does not fit grid shape {shape}")
        values = np.zeros(shape)
        values[tuple(j - 1 for j in idx)] = 1.0
        return SampleGrid(values, specs)
    raise ValueError(f"unknown builtin {name!r}; expected const1, coskx:K or delta:j,...")


# -- output ---------------------------------------------------------------


def lattice(resolution):
    return np.arange(resolution) * (2.0 * np.pi / resolution)


def _render_csv(axes, values):
    d = len(axes)
    names = ["x"] if d == 1 else ["x", "y"] if d == 2 else [f"x{a + 1}" for a in range(d)]
    lines = [",".join(names + ["value"])]
    grids = np.meshgrid(*axes, indexing="ij")
    cols = [g.ravel() for g in grids] + [np.asarray(values).ravel()]
    for row in zip(*cols):
        lines.append(",".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _render_json(axes, values):
    def arr(a):
        return "[" + ",".join(fmt(v) for v in np.ravel(a)) + "]"

    parts = [
        '{"shape":[' + ",".join(str(len(a)) for a in axes) + "]",
        '"axes":[' + ",".join(arr(a) for a in axes) + "]",
        '"values":' + arr(values) + "}",
    ]
    return ",".join(parts) + "\n"


def _atomic_write(path, text, written):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    written.append(path)


# -- evaluation -----------------------------------------------------------


def _evaluate(samples, config, axes, both_methods):
    """Spline values on the lattice, node error and optional method gap."""
    d = config.ndim
    node_axes = [nodes(s) for s in config.specs]
    if d == 1:
        params = config.axis_params(0)
        co = coeffs_1d(samples)
        values = eval_spline_1d(co, params, axes[0])
        at_nodes = eval_spline_1d(co, params, node_axes[0])
        other = None
        if both_methods:
            other = fundamental_basis(params, config.n_nodes[0], axes[0]) @ samples.values
    elif d == 2:
        co = coeffs_2d(samples)
        values = polyform_lattice(co, config, *axes)
        at_nodes = polyform_lattice(co, config, *node_axes)
        other = fundform_lattice(samples, config, axes) if both_methods else None
    else:
        values = fundform_lattice(samples, config, axes)
        at_nodes = fundform_lattice(samples, config, node_axes)
        other = None
    report = {
        "node_max_error": float(np.max(np.abs(at_nodes - samples.values))),
        "node_tolerance": NODE_TOL,
        "value_min": float(np.min(values)),
        "value_max": float(np.max(values)),
        "finite": bool(np.all(np.isfinite(values))),
    }
    report["node_check_passed"] = report["finite"] and report["node_max_error"] <= NODE_TOL
    if other is not None:
        gap = float(np.max(np.abs(values - other)))
        report["method_max_discrepancy"] = gap
        report["method_tolerance"] = METHOD_TOL
        report["method_check_passed"] = gap <= METHOD_TOL
    return values, report


def _passed(report):
    return report["node_check_passed"] and report.get("method_check_passed", True) and report.get(
        "envelope_check_passed", True
    )


def _render(config, axes, values):
    return _render_csv(axes, values) if config.format == "csv" else _render_json(axes, values)


def _run_paper_example(job, written):
    outdir = Path(job.output)
    res = job.per_axis(job.resolution, "--resolution") if len(job.resolution) > 1 else job.resolution * 2
    axes = [lattice(int(r)) for r in res]
    surfaces = []
    for r, indicator in PAPER_SWEEP:
        config = TensorSplineConfig(
            n_nodes=PAPER_NODES,
            indicator=indicator,
            orders=(r, r),
            stitch_indicator=indicator if job.stitch_indicator is None else job.stitch_indicator,
            tail_tolerance=job.eps,
        )
        delta = ",".join(str(j) for j in PAPER_DELTA)
        samples = builtin_samples(f"delta:{delta}", config.specs)
        values, report = _evaluate(samples, config, axes, both_methods=True)
        report["envelope"] = PAPER_ENVELOPE
        report["envelope_check_passed"] = report["finite"] and (
            -PAPER_ENVELOPE <= report["value_min"] and report["value_max"] <= PAPER_ENVELOPE
        )
        name = f"paper_example_r{r}_I{indicator}.{job.format}"
        _atomic_write(outdir / name, _render(job, axes, values), written)
        surfaces.append({"file": name, "order": r, "indicator": indicator, **report})
        log.info("wrote %s (node error %.3g)", name, report["node_max_error"])
    summary = {
        "mode": job.mode,
        "n_nodes": list(PAPER_NODES),
        "delta_node": list(PAPER_DELTA),
        "resolution": [int(r) for r in res],
        "eps": job.eps,
        "surfaces": surfaces,
    }
    summary["passed"] = all(_passed(s) for s in surfaces)
    _atomic_write(outdir / "paper_example_report.json", json.dumps(summary, indent=2) + "\n", written)
    return summary["passed"]


def _run_interp(job, written):
    config = job.tensor_config()
    specs = config.specs
    if job.input is not None:
        samples = ingest_samples(job.input, specs)
    else:
        samples = builtin_samples(job.builtin, specs)
    res = job.per_axis(job.resolution, "--resolution")
    axes = [lattice(int(r)) for r in res]
    values, report = _evaluate(samples, config, axes, job.both_methods)
    _atomic_write(job.output, _render(job, axes, values), written)
    summary = {
        "mode": job.mode,
        "n_nodes": list(config.n_nodes),
        "indicator": config.indicator,
        "stitch_indicator": config.stitch_indicator,
        "orders": list(config.orders),
        "eps": job.eps,
        "resolution": [int(r) for r in res],
        "source": job.input if job.input is not None else f"builtin:{job.builtin}",
        **report,
    }
    summary["passed"] = _passed(report)
    _atomic_write(f"{job.output}.report.json", json.dumps(summary, indent=2) + "\n", written)
    return summary["passed"]


def run_job(job: JobConfig) -> int:
    """Run `job`; returns the process exit status.

    0 when every output was written and every check passed, 1 when outputs
    were written but a check failed, 2 on an error (partial outputs are
    removed).
    """
    written = []
    try:
        ok = _run_paper_example(job, written) if job.mode == "paper-example" else _run_interp(job, written)
    except Exception as exc:
        for path in written:
            Path(path).unlink(missing_ok=True)
        log.error("%s: %s", type(exc).__name__, exc)
        return 2
    if not ok:
        log.error("embedded checks failed; see the report file")
        return 1
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="trigspline", description=__doc__.splitlines()[0])
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--n", dest="n_nodes", type=int, action="append", default=[], help="node count per axis")
    p.add_argument("--indicator", type=int, default=0, choices=(0, 1), help="interpolation grid indicator")
    p.add_argument("--stitch-indicator", type=int, choices=(0, 1), help="stitching grid indicator")
    p.add_argument("--order", dest="orders", type=int, action="append", help="order r per axis")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS, help="series tail tolerance")
    p.add_argument("--input", help="CSV or JSON samples")
    p.add_argument("--builtin", help="const1, coskx:K or delta:j1,...")
    p.add_argument("--resolution", type=int, action="append", help="output lattice points per axis")
    p.add_argument("--output", required=True, help="output file (directory for paper-example)")
    p.add_argument("--format", default="csv", choices=FORMATS)
    p.add_argument("--both-methods", action="store_true", help="also evaluate the fundamental form")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        job = JobConfig(
            mode=args.mode,
            n_nodes=tuple(args.n_nodes),
            indicator=args.indicator,
            stitch_indicator=args.stitch_indicator,
            orders=tuple(args.orders or (1,)),
            eps=args.eps,
            input=args.input,
            builtin=args.builtin,
            resolution=tuple(args.resolution or (200,)),
            output=args.output,
            format=args.format,
            both_methods=args.both_methods,
        )
    except ValueError as exc:
        log.error("%s", exc)
        return 2
    return run_job(job)


if __name__ == "__main__":
    sys.exit(main())
