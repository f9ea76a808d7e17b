"""Command-line interface exposing every operation with file-based I/O.

Output is plot-ready CSV by default (JSON via --format json); every output
begins with a header comment carrying the package version, the seed and the
parameters, so identical invocations produce byte-identical files.  Exit
codes: 0 success, 1 usage error, 2 domain error, 3 claim falsified (a
structural claim the data was expected to witness did not hold).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .covariogram import (
    Polyomino,
    canonical_polyominoes,
    covariogram,
    covariogram_grid,
    covariogram_oracle,
    covariogram_scaled,
    support_box,
)
from .estimators import (
    block_entropy,
    empirical_autocorr,
    periodogram_average,
    periodogram_grid,
)
from .octagonal import (
    DEFAULT_WINDOW_SHIFT,
    SINGULAR,
    Cyc8,
    HalfCyc8,
    SchemeConfig,
    WitnessNotFound,
    additivity_witness,
    amplitude_ratio,
    autocorr_coefficient,
    diffraction_amplitude,
    diffraction_intensity,
    embed_internal,
    embed_physical,
    generate_model_set,
    mld_witness,
    select_verification_lags,
    three_point_correlation,
    find_three_point_witness,
    empirical_autocorr as patch_autocorr,
)
from .pointsets import FinitePointSet, are_homometric, canonical_pair, difference_multiset
from .sequences import RandomSpec, bernoulli_comb, bernoullise, entropy, rs_fixed_point, theoretical_autocorr
from .tensor import brute_force_autocorr, product_autocorr, product_comb, rank_k_bernoullise

USAGE_EXIT = 1
DOMAIN_EXIT = 2
FALSIFIED_EXIT = 3

DEFAULT_RADIUS = 50.0
DEFAULT_N = 1 << 20
DEFAULT_P = 0.5
DEFAULT_SEED = 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_EXIT)


class _Claim(Exception):
    """A --check assertion failed; maps to exit code 3."""


def worker_count() -> int:
    """Parallelism cap from HOMOMETRY_THREADS (defaults to 1)."""
    raw = os.environ.get("HOMOMETRY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _chunked_rows(evaluate, chunks) -> list:
    """Evaluate chunks (in order) with at most worker_count() threads."""
    workers = worker_count()
    if workers == 1 or len(chunks) <= 1:
        return [evaluate(ch) for ch in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, chunks))


class _Output:
    def __init__(self, args, command: str, params: dict):
        self.fmt = args.format
        self.path = args.out
        items = " ".join(f"{k}={v}" for k, v in params.items())
        self.header = f"# homometry {__version__} | {command} {items}".rstrip()
        self.lines: list[str] = [self.header]
        if "seed" in params and params["seed"] == DEFAULT_SEED:
            self.lines.append(f"# default seed {DEFAULT_SEED} in use")

    def comment(self, text: str):
        self.lines.append(f"# {text}")

    def row(self, text: str):
        self.lines.append(text)

    def json_payload(self, obj):
        self.lines.append(json.dumps(obj))

    def flush(self):
        text = "\n".join(self.lines) + "\n"
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _load_pointset(spec: str) -> FinitePointSet:
    f1, f2 = canonical_pair()
    if spec == "F1":
        return f1
    if spec == "F2":
        return f2
    with open(spec) as fh:
        return FinitePointSet.from_json(fh.read())


def _load_window(spec: str) -> Polyomino:
    p1, p2 = canonical_polyominoes()
    if spec == "P1":
        return p1
    if spec == "P2":
        return p2
    with open(spec) as fh:
        return Polyomino.from_json(fh.read())


def _parse_lags(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in spec.split(",")]


def _build_comb(kind: str, p: float, seed: int, n: int):
    if kind == "rs":
        return rs_fixed_point(n)
    if kind == "bernoulli":
        return bernoulli_comb(RandomSpec(p, seed), n)
    if kind == "bernoullised":
        return bernoullise(rs_fixed_point(n), RandomSpec(p, seed))
    raise ValueError(f"unknown comb kind {kind!r}")


def _parse_cyc(text: str) -> Cyc8:
    parts = [int(v) for v in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected 4 comma-separated coefficients, got {text!r}")
    return Cyc8(*parts)


# ---------------------------------------------------------------- commands


def _cmd_homometry(args) -> int:
    if args.builtin:
        f, g = canonical_pair()
    else:
        if not (args.set_a and args.set_b):
            raise ValueError("provide --builtin or both --set-a and --set-b")
        f = _load_pointset(args.set_a)
        g = _load_pointset(args.set_b)
    verdict = are_homometric(f, g)
    ms = difference_multiset(f)
    out = _Output(args, "homometry", {"builtin": args.builtin})
    out.comment(f"total_multiplicity={ms.total()} zero_lag={ms[(0,) * f.dim]}")
    out.row(f"homometric: {'true' if verdict else 'false'}")
    out.flush()
    if args.builtin and not verdict:
        raise _Claim("builtin pair failed homometry")
    return 0


def _cmd_covariogram(args) -> int:
    window = _load_window(args.window)
    other = _load_window(args.compare) if args.compare else None
    params = {
        "window": args.window,
        "compare": args.compare,
        "alpha": args.alpha,
        "seed": args.seed,
    }
    out = _Output(args, "covariogram", params)

    if args.at is not None:
        x = np.array(args.at)
        value = covariogram_scaled(window, args.alpha, x) if args.alpha != 1.0 else covariogram(window, x)
        out.row(f"{value:.12g}")
        out.flush()
        return 0

    xs = np.arange(args.grid[0], args.grid[1] + args.step / 2, args.step)
    ys = np.arange(args.grid[2], args.grid[3] + args.step / 2, args.step)

    def _grid_for(poly):
        if args.alpha == 1.0:
            chunks = np.array_split(np.arange(len(xs)), max(1, min(worker_count() * 4, len(xs))))
            parts = _chunked_rows(lambda ii: covariogram_grid(poly, xs[ii], ys), chunks)
            return np.vstack(parts)
        grid = np.empty((len(xs), len(ys)))
        for i, xv in enumerate(xs):
            for j, yv in enumerate(ys):
                grid[i, j] = covariogram_scaled(poly, args.alpha, (xv, yv))
        return grid

    grid = _grid_for(window)
    if other is not None:
        diff = float(np.abs(grid - _grid_for(other)).max())
        out.comment(f"max_abs_difference={diff:.6g}")
        out.row(f"max_abs_difference: {diff:.6g}")
        out.flush()
        if args.check and diff > args.tol:
            raise _Claim(f"covariograms differ by {diff} > {args.tol}")
        return 0

    if args.oracle:
        rng = np.random.default_rng(args.seed)
        box = support_box(window)
        worst = 0.0
        for _ in range(args.points):
            x = rng.uniform([box[0], box[2]], [box[1], box[3]])
            worst = max(worst, abs(covariogram(window, x) - covariogram_oracle(window, x, args.oracle)))
        out.comment(f"oracle_resolution={args.oracle} points={args.points}")
        out.row(f"max_oracle_deviation: {worst:.6g}")
        out.flush()
        if args.check and worst > 0.05:
            raise _Claim(f"oracle deviation {worst} > 0.05")
        return 0

    if args.format == "json":
        out.json_payload(
            {"x": xs.tolist(), "y": ys.tolist(), "cov": [[float(v) for v in row] for row in grid]}
        )
    else:
        out.row("x1,x2,cov")
        for i, xv in enumerate(xs):
            for j, yv in enumerate(ys):
                out.row(f"{xv:.6g},{yv:.6g},{grid[i, j]:.12g}")
    out.flush()
    return 0


def _cmd_modelset(args) -> int:
    window = _load_window(args.window)
    scheme = SchemeConfig(window, tuple(args.shift))
    patch = generate_model_set(scheme, args.radius)
    params = {"window": args.window, "radius": args.radius, "shift": tuple(args.shift)}
    out = _Output(args, "modelset", params)
    density = patch.density()
    expected = scheme.point_density
    out.comment(f"points={len(patch)} density={density:.6g} expected_density={expected:.6g}")

    if args.verify_autocorr:
        lags = select_verification_lags(scheme, args.verify_autocorr)
        out.row("a,b,c,d,eta,empirical,relative_error")
        worst = 0.0
        for z in lags:
            eta = autocorr_coefficient(scheme, z)
            emp = patch_autocorr(patch, z)
            rel = abs(emp - eta) / eta
            worst = max(worst, rel)
            out.row(f"{z.a},{z.b},{z.c},{z.d},{eta:.8g},{emp:.8g},{rel:.6g}")
        out.comment(f"worst_relative_error={worst:.6g}")
        out.flush()
        if args.check and worst > 0.03:
            raise _Claim(f"autocorrelation deviation {worst} > 3%")
        return 0

    if args.format == "json":
        out.json_payload(json.loads(patch.to_json()))
    else:
        out.row("a,b,c,d,px,py,ix,iy")
        for row in patch.csv_rows():
            out.row(row)
    out.flush()
    if args.check and abs(density / expected - 1.0) > 0.02:
        raise _Claim(f"patch density {density} deviates from {expected} by more than 2%")
    return 0


def _cmd_diffraction(args) -> int:
    window = _load_window(args.window)
    scheme = SchemeConfig(window)
    params = {"window": args.window, "kmax": args.kmax, "coeff_bound": args.coeff_bound, "seed": args.seed}
    out = _Output(args, "diffraction", params)

    if args.compare:
        other_scheme = SchemeConfig(_load_window(args.compare))
        rng = np.random.default_rng(args.seed)
        max_idiff = 0.0
        max_reldiff = 0.0
        for _ in range(args.samples):
            h = Cyc8(*(int(v) for v in rng.integers(-4, 5, 4)))
            k = HalfCyc8(h)
            i1 = diffraction_intensity(scheme, k)
            i2 = diffraction_intensity(other_scheme, k)
            max_idiff = max(max_idiff, abs(i1 - i2))
            a1 = diffraction_amplitude(scheme, k)
            a2 = diffraction_amplitude(other_scheme, k)
            if abs(a1) > 1e-12:
                max_reldiff = max(max_reldiff, abs(a1 - a2) / abs(a1))
        out.comment(f"samples={args.samples}")
        out.row(f"max_intensity_difference: {max_idiff:.6g}")
        out.row(f"max_relative_amplitude_difference: {max_reldiff:.6g}")
        out.flush()
        if args.check and (max_idiff > 1e-10 or max_reldiff <= 0.1):
            raise _Claim("intensity/amplitude comparison failed")
        return 0

    bound = args.coeff_bound
    rows = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                for d in range(-bound, bound + 1):
                    h = Cyc8(a, b, c, d)
                    k_phys = embed_physical(h) / 2.0
                    if float(np.hypot(*k_phys)) > args.kmax:
                        continue
                    half = int(any(v % 2 for v in h.coeffs))
                    rows.append((h.coeffs, half))

    def _intensity(batch):
        return [(coeffs, half, diffraction_intensity(scheme, HalfCyc8(Cyc8(*coeffs)))) for coeffs, half in batch]

    chunks = np.array_split(np.arange(len(rows)), max(1, min(worker_count() * 4, max(len(rows), 1))))
    results = _chunked_rows(lambda ii: _intensity([rows[i] for i in ii]), chunks)
    out.row("ka,kb,kc,kd,half,intensity")
    for part in results:
        for coeffs, half, value in part:
            out.row(f"{coeffs[0]},{coeffs[1]},{coeffs[2]},{coeffs[3]},{half},{value:.12g}")
    out.flush()
    return 0


def _cmd_ratio(args) -> int:
    params = {"at": args.at, "scan": args.scan, "witness": args.witness}
    out = _Output(args, "ratio", params)
    if args.witness:
        witness = additivity_witness()  # raises WitnessNotFound -> exit 3
        out.row(
            "y=({:.6g},{:.6g}) y'=({:.6g},{:.6g}) chi={:.6g} chi'={:.6g} chi_sum={:.6g} violation={:.6g}".format(
                *witness.y, *witness.y_prime, witness.chi_y, witness.chi_y_prime, witness.chi_sum, witness.violation
            )
        )
        out.flush()
        return 0
    if args.scan:
        n = args.scan
        worst = 0.0
        singular = 0
        for i in range(n):
            for j in range(n):
                y = (i / n + 0.5 / n, j / n + 0.5 / n)
                r = amplitude_ratio(y)
                if r is SINGULAR:
                    singular += 1
                else:
                    worst = max(worst, abs(abs(r) - 1.0))
        out.row(f"grid={n}x{n} max_modulus_deviation={worst:.3g} singular_points={singular}")
        out.flush()
        if args.check and worst > 1e-9:
            raise _Claim(f"|ratio| deviates from 1 by {worst}")
        return 0
    if args.at is None:
        raise ValueError("provide --at, --scan or --witness")
    r = amplitude_ratio(np.array(args.at))
    out.row("SINGULAR" if r is SINGULAR else f"{r.real:.12g}{r.imag:+.12g}j")
    out.flush()
    return 0


def _cmd_mld(args) -> int:
    t = tuple(args.t)
    ok = mld_witness(t)
    out = _Output(args, "mld", {"t": t})
    out.row(f"mld: {'true' if ok else 'false'}")
    out.flush()
    if not ok:
        raise _Claim(f"cell-set identity fails for t={t}")
    return 0


def _cmd_threepoint(args) -> int:
    p1, p2 = canonical_polyominoes()
    params = {"radius": args.radius, "radii": args.radii, "search": args.search}
    out = _Output(args, "threepoint", params)
    if args.search:
        radii = [float(v) for v in args.radii.split(",")]
        patches_1 = {r: generate_model_set(SchemeConfig(p1), r) for r in radii}
        patches_2 = {r: generate_model_set(SchemeConfig(p2), r) for r in radii}
        w = find_three_point_witness(patches_1, patches_2, base_radius=args.radius)
        out.row(
            "z1=({},{},{},{}) z2=({},{},{},{}) est1={:.6g} est2={:.6g} diff={:.6g} var1={:.6g} var2={:.6g}".format(
                *w.z1.coeffs, *w.z2.coeffs, w.estimate_1, w.estimate_2, w.difference, w.variation_1, w.variation_2
            )
        )
        out.flush()
        return 0
    if not (args.z1 and args.z2):
        raise ValueError("provide --search or both --z1 and --z2")
    z1 = _parse_cyc(args.z1)
    z2 = _parse_cyc(args.z2)
    window = _load_window(args.window)
    patch = generate_model_set(SchemeConfig(window), args.radius)
    value = three_point_correlation(patch, z1, z2)
    out.row(f"{value:.12g}")
    out.flush()
    return 0


def _rs_digit_signs(indices: np.ndarray) -> np.ndarray:
    """Binary digit-pair signs, the closed form independent of substitution."""
    n = indices.astype(np.int64)
    k = np.where(n >= 0, n, -n - 1)
    pairs = np.bitwise_count((k & (k >> 1)).astype(np.uint64)).astype(np.int64)
    parity = np.where(n >= 0, pairs, k + pairs + 1) % 2
    return np.where(parity == 0, 1, -1).astype(np.int8)


def _cmd_comb(args) -> int:
    comb = _build_comb(args.kind, args.p, args.seed, args.n)
    out = _Output(args, "comb", {"kind": args.kind, "p": args.p, "n": args.n, "seed": args.seed})
    if args.check:
        if args.kind != "rs":
            raise ValueError("--check compares against the digit formula; rs only")
        matches = bool(np.array_equal(comb.weights, _rs_digit_signs(comb.indices)))
        out.row(f"digit_oracle_match: {'true' if matches else 'false'}")
        out.flush()
        if not matches:
            raise _Claim("substitution output disagrees with the digit formula")
        return 0
    if args.format == "json":
        out.json_payload({"lo": comb.lo, "weights": comb.weights.tolist()})
    else:
        out.row("index,weight")
        for i, w in zip(comb.indices, comb.weights):
            out.row(f"{i},{int(w)}")
    out.flush()
    return 0


def _cmd_autocorr(args) -> int:
    comb = _build_comb(args.kind, args.p, args.seed, args.n)
    lags = _parse_lags(args.lags)
    out = _Output(args, "autocorr", {"kind": args.kind, "p": args.p, "n": args.n, "seed": args.seed, "lags": args.lags})
    out.row("m,value,N")
    worst = 0.0
    tol = args.tol if args.tol is not None else 3.0 / math.sqrt(len(comb))
    for m in lags:
        est = empirical_autocorr(comb, m)
        target = theoretical_autocorr(args.kind, m, p=args.p)
        worst = max(worst, abs(est.value - target))
        out.row(f"{est.m},{est.value:.10g},{est.N}")
    out.comment(f"worst_abs_deviation_from_limit={worst:.6g} tolerance={tol:.6g}")
    out.flush()
    if args.check and worst > tol:
        raise _Claim(f"autocorrelation deviates from the limit by {worst} > {tol}")
    return 0


def _cmd_periodogram(args) -> int:
    comb = _build_comb(args.kind, args.p, args.seed, args.n)
    out = _Output(args, "periodogram", {"kind": args.kind, "p": args.p, "n": args.n, "seed": args.seed, "bins": args.bins})
    values = periodogram_grid(comb, args.bins)
    if args.average:
        avg = float(values.mean())
        out.row(f"average: {avg:.8g}")
        out.flush()
        if args.check and abs(avg - 1.0) > 0.05:
            raise _Claim(f"periodogram average {avg} outside 1 +- 0.05")
        return 0
    out.row("k,value")
    for j, v in enumerate(values):
        out.row(f"{j / args.bins:.8g},{v:.10g}")
    out.flush()
    return 0


def _cmd_entropy(args) -> int:
    out = _Output(args, "entropy", {"kind": args.kind, "p": args.p, "n": args.n, "seed": args.seed, "L": args.L})
    if args.analytic:
        out.row(f"{entropy(args.p):.10g}")
        out.flush()
        return 0
    comb = _build_comb(args.kind, args.p, args.seed, args.n)
    out.row("L,entropy")
    for L in _parse_lags(args.L):
        out.row(f"{L},{block_entropy(comb, L):.8g}")
    out.flush()
    return 0


def _cmd_tensor(args) -> int:
    kinds = args.factors.split(",")
    ns = [int(v) for v in args.n.split(",")]
    if len(ns) == 1:
        ns = ns * len(kinds)
    factors = [_build_comb(kind, args.p, args.seed + i, n) for i, (kind, n) in enumerate(zip(kinds, ns))]
    grid = product_comb(factors)
    if args.rank:
        grid = rank_k_bernoullise(grid, args.rank, RandomSpec(args.p, args.seed))
    params = {"factors": args.factors, "n": args.n, "rank": args.rank, "p": args.p, "seed": args.seed}
    out = _Output(args, "tensor", params)

    if args.autocorr:
        lag = tuple(int(v) for v in args.autocorr.split(","))
        brute = brute_force_autocorr(grid, lag)
        out.row(f"brute_force: {brute:.10g}")
        if not args.rank:
            out.row(f"factorised: {product_autocorr(factors, lag):.10g}")
        out.flush()
        return 0

    if args.line_entropy is not None:
        axis = args.line_entropy
        fixed = tuple(0 for _ in range(grid.dim - 1))
        value = block_entropy(grid.line(axis, fixed), args.block_length)
        out.row(f"axis={axis} L={args.block_length} entropy={value:.8g}")
        out.flush()
        return 0

    if grid.dim != 2:
        raise ValueError("grid export is implemented for 2-d boxes; use --autocorr for higher d")
    if args.format == "json":
        out.json_payload({"los": list(grid.los), "weights": grid.weights.tolist()})
    else:
        for row in grid.weights:
            out.row(",".join(str(int(v)) for v in row))
    out.flush()
    return 0


# ---------------------------------------------------------------- parser


def _add_common(sp, *, seed=True):
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    if seed:
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homometry", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("homometry", help="verify homometry of two point sets")
    sp.add_argument("--builtin", action="store_true", help="use the canonical 15-point pair")
    sp.add_argument("--set-a")
    sp.add_argument("--set-b")
    _add_common(sp, seed=False)
    sp.set_defaults(func=_cmd_homometry)

    sp = sub.add_parser("covariogram", help="evaluate or export polyomino covariograms")
    sp.add_argument("--window", default="P1")
    sp.add_argument("--compare", default=None)
    sp.add_argument("--at", type=float, nargs=2, default=None)
    sp.add_argument("--grid", type=float, nargs=4, default=[-6.0, 6.0, -6.0, 6.0],
                    metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    sp.add_argument("--step", type=float, default=0.25)
    sp.add_argument("--alpha", type=float, default=1.0)
    sp.add_argument("--oracle", type=int, default=0, help="rasterisation oracle resolution")
    sp.add_argument("--points", type=int, default=20)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--check", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=_cmd_covariogram)

    sp = sub.add_parser("modelset", help="generate a cut-and-project patch")
    sp.add_argument("--window", default="P1")
    sp.add_argument("--radius", type=float, default=DEFAULT_RADIUS)
    sp.add_argument("--shift", type=float, nargs=2, default=list(DEFAULT_WINDOW_SHIFT))
    sp.add_argument("--verify-autocorr", type=int, default=0, metavar="COUNT")
    sp.add_argument("--check", action="store_true")
    _add_common(sp, seed=False)
    sp.set_defaults(func=_cmd_modelset)

    sp = sub.add_parser("diffraction", help="Bragg intensity tables over the half lattice")
    sp.add_argument("--window", default="P1")
    sp.add_argument("--compare", default=None)
    sp.add_argument("--kmax", type=float, default=3.0)
    sp.add_argument("--coeff-bound", type=int, default=4)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--check", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=_cmd_diffraction)

    sp = sub.add_parser("ratio", help="amplitude ratio, modulus scan, additivity witness")
    sp.add_argument("--at", type=float, nargs=2, default=None)
    sp.add_argument("--scan", type=int, default=0)
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--check", action="store_true")
    _add_common(sp, seed=False)
    sp.set_defaults(func=_cmd_ratio)

    sp = sub.add_parser("mld", help="local-derivability cell-set witness")
    sp.add_argument("--t", type=int, nargs=2, default=[4, 5])
    _add_common(sp, seed=False)
    sp.set_defaults(func=_cmd_mld)

    sp = sub.add_parser("threepoint", help="3-point correlations and discrimination search")
    sp.add_argument("--window", default="P1")
    sp.add_argument("--radius", type=float, default=DEFAULT_RADIUS)
    sp.add_argument("--radii", default="40,50,60")
    sp.add_argument("--search", action="store_true")
    sp.add_argument("--z1", default=None)
    sp.add_argument("--z2", default=None)
    _add_common(sp, seed=False)
    sp.set_defaults(func=_cmd_threepoint)

    for name, func, extra in (
        ("comb", _cmd_comb, ("rs-check",)),
        ("autocorr", _cmd_autocorr, ("lags",)),
        ("periodogram", _cmd_periodogram, ("bins",)),
        ("entropy", _cmd_entropy, ("L",)),
    ):
        sp = sub.add_parser(name, help=f"{name} of a deterministic or stochastic comb")
        sp.add_argument("--kind", choices=("rs", "bernoulli", "bernoullised"), default="rs")
        sp.add_argument("--p", type=float, default=DEFAULT_P)
        sp.add_argument("--n", type=int, default=DEFAULT_N)
        if "rs-check" in extra:
            sp.add_argument("--check", action="store_true",
                            help="compare the substitution output with the digit formula")
        if "lags" in extra:
            sp.add_argument("--lags", default="1..8")
            sp.add_argument("--tol", type=float, default=None)
            sp.add_argument("--check", action="store_true")
        if "bins" in extra:
            sp.add_argument("--bins", type=int, default=512)
            sp.add_argument("--average", action="store_true")
            sp.add_argument("--check", action="store_true")
        if "L" in extra:
            sp.add_argument("--L", default="10")
            sp.add_argument("--analytic", action="store_true")
        _add_common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("tensor", help="product combs and rank-k bernoullisation")
    sp.add_argument("--factors", default="rs,rs")
    sp.add_argument("--n", default="128")
    sp.add_argument("--rank", type=int, default=0)
    sp.add_argument("--p", type=float, default=DEFAULT_P)
    sp.add_argument("--autocorr", default=None, metavar="M1,M2")
    sp.add_argument("--line-entropy", type=int, default=None, metavar="AXIS")
    sp.add_argument("--block-length", type=int, default=10)
    _add_common(sp)
    sp.set_defaults(func=_cmd_tensor)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Claim as exc:
        sys.stderr.write(f"claim falsified: {exc}\n")
        return FALSIFIED_EXIT
    except WitnessNotFound as exc:
        sys.stderr.write(f"claim falsified: {exc}\n")
        return FALSIFIED_EXIT
    except (ValueError, OSError, IndexError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return DOMAIN_EXIT


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
