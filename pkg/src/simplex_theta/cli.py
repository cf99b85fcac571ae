"""Command-line front end: bounds, theta(R^n, k) grid, curves, constants, certificates."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, Decimal
from typing import Optional

import numpy as np

from . import asymptotics, bounds, oracle
from .bounds import EUCLIDEAN, SPHERE, BoundCertificate, ChainLevel, SimplexInstance
from .errors import DomainError
from .minima import BesselMinimum, PolynomialMinimum
from .specfun import PrecisionConfig

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2
DASH = "---"
CURVE_SAMPLES = 512
CURVE_NUDGE = 1e-3
MAX_WORKERS = 4


def round_display(value: float, decimals: int = 5, rounding: str = ROUND_HALF_EVEN) -> str:
    """Round at ``decimals`` places (half to even unless told otherwise)."""
    q = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(float(value))).quantize(q, rounding=rounding))


@dataclass(frozen=True)
class ReportRow:
    n: int
    k: int
    t: Optional[float]
    value: float
    value_display: str
    certified: bool


def _row(cert: BoundCertificate, decimals: int) -> ReportRow:
    inst = cert.instance
    return ReportRow(inst.n, inst.k, inst.t, cert.value, round_display(cert.value, decimals),
                     cert.all_certified)


# -- certificate (de)serialization ---------------------------------------------

def certificate_to_dict(cert: BoundCertificate) -> dict:
    inst = cert.instance
    d = {
        "instance": {"n": inst.n, "k": inst.k, "t": inst.t, "space": inst.space},
        "value": cert.value,
        "all_certified": cert.all_certified,
        "chain": [
            {
                "level": lvl.level,
                "dimension": lvl.dimension,
                "inner_product": lvl.inner_product,
                "minimum": {
                    "value": lvl.minimum.value,
                    "argmin_j": lvl.minimum.argmin_j,
                    "scanned_J": lvl.minimum.scanned_J,
                    "certified": lvl.minimum.certified,
                    "tail_bound_delta": lvl.minimum.tail_bound_delta,
                    "warning": lvl.minimum.warning,
                },
            }
            for lvl in cert.chain
        ],
        "bessel": None,
    }
    if cert.bessel is not None:
        b = cert.bessel
        d["bessel"] = {"n": b.n, "value": b.value, "location": b.location,
                       "grid_verified": b.grid_verified}
    return d


def certificate_from_dict(d: dict) -> BoundCertificate:
    i = d["instance"]
    inst = SimplexInstance(i["n"], i["k"], i["t"], i["space"])
    chain = tuple(
        ChainLevel(c["level"], c["dimension"], c["inner_product"],
                   PolynomialMinimum(c["dimension"], c["inner_product"], **c["minimum"]))
        for c in d["chain"]
    )
    bessel = BesselMinimum(**d["bessel"]) if d.get("bessel") else None
    return BoundCertificate(inst, d["value"], chain, bessel, d["all_certified"])


# -- output helpers ---------------------------------------------------------------

def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _config(args) -> PrecisionConfig:
    j_max = args.j_max
    if j_max is None and os.environ.get("THETA_JMAX"):
        j_max = int(os.environ["THETA_JMAX"])
    return PrecisionConfig(j_max=j_max) if j_max is not None else PrecisionConfig()


def _certificate(args, cfg) -> BoundCertificate:
    if args.space == SPHERE:
        if args.t is None:
            raise DomainError("sphere bounds need --t")
        return bounds.theta_sphere(args.n, args.k, args.t, cfg)
    return bounds.theta_euclidean(args.n, args.k, cfg)


# -- subcommands ------------------------------------------------------------------

def cmd_bound(args) -> int:
    cfg = _config(args)
    cert = _certificate(args, cfg)
    row = _row(cert, args.decimals)
    if args.format == "json":
        text = json.dumps(certificate_to_dict(cert), indent=2) + "\n"
    elif args.format == "csv":
        text = _csv_text(["n", "k", "t", "theta", "certified"],
                         [[row.n, row.k, "" if row.t is None else _num(row.t), _num(row.value),
                           str(row.certified).lower()]])
    else:
        lines = [row.value_display]
        if args.verbose:
            for lvl in cert.chain:
                m = lvl.minimum
                lines.append(f"level {lvl.level}: n={lvl.dimension} F={_num(lvl.inner_product)} "
                             f"M={_num(m.value)} j*={m.argmin_j} J={m.scanned_J} "
                             f"certified={str(m.certified).lower()}")
            if cert.bessel is not None:
                b = cert.bessel
                lines.append(f"bessel: m={_num(b.value)} z*={_num(b.location)} "
                             f"grid_verified={str(b.grid_verified).lower()}")
            lines.append(f"all_certified={str(cert.all_certified).lower()}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def table_rows(n_max: int, k_max: int, cfg: PrecisionConfig) -> list:
    """Cells ``(n, k, cert-or-None)`` in row-major order; None marks k > n + 1."""
    cells = [(n, k) for n in range(2, n_max + 1) for k in range(3, k_max + 1)]

    def work(cell):
        n, k = cell
        return (n, k, bounds.theta_euclidean(n, k, cfg) if k <= n + 1 else None)

    with ThreadPoolExecutor(max_workers=MAX_WORKERS) as pool:
        return list(pool.map(work, cells))


def cmd_table(args) -> int:
    if args.n_max < 2:
        raise DomainError("--n-max must be >= 2")
    if args.k_max < 3:
        raise DomainError("--k-max must be >= 3")
    cfg = _config(args)
    rows = table_rows(args.n_max, args.k_max, cfg)
    if args.format == "csv":
        text = _csv_text(["n", "k", "theta", "certified"], [
            [n, k, _num(c.value), str(c.all_certified).lower()] if c else [n, k, DASH, ""]
            for n, k, c in rows
        ])
    elif args.format == "json":
        text = json.dumps([
            {"n": n, "k": k, "theta": c.value if c else None,
             "display": round_display(c.value, args.decimals) if c else DASH,
             "certified": c.all_certified if c else None}
            for n, k, c in rows
        ], indent=2) + "\n"
    else:
        ks = list(range(3, args.k_max + 1))
        lines = ["n / k " + " ".join(f"{k:>{args.decimals + 2}}" for k in ks)]
        by_n: dict = {}
        for n, k, c in rows:
            by_n.setdefault(n, []).append(round_display(c.value, args.decimals) if c else DASH)
        for n, cells in by_n.items():
            lines.append(f"{n:>5} " + " ".join(f"{s:>{args.decimals + 2}}" for s in cells))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _curve_grid(lo: float, hi: float, samples: int) -> np.ndarray:
    if samples < 2:
        raise DomainError("--samples must be >= 2")
    if not lo < hi:
        raise DomainError("curve range must satisfy t-min < t-max")
    return np.linspace(lo, hi, samples)


def cmd_curve(args) -> int:
    cfg = _config(args)
    if args.kind == "sphere":
        if args.n is None or args.k is None:
            raise DomainError("sphere curves need --n and --k")
        k = args.k
        SimplexInstance(args.n, k, 0.0, SPHERE)
        lo = -1.0 / (k - 1) if args.t_min is None else args.t_min
        hi = 1.0 - CURVE_NUDGE if args.t_max is None else args.t_max
        ts = _curve_grid(lo, hi, args.samples)
        SimplexInstance(args.n, k, float(ts[0]), SPHERE)
        SimplexInstance(args.n, k, float(ts[-1]), SPHERE)

        def work(t):
            return bounds.theta_sphere(args.n, k, float(t), cfg).value
    else:
        lo = CURVE_NUDGE if args.t_min is None else args.t_min
        hi = 1.0 - CURVE_NUDGE if args.t_max is None else args.t_max
        if not (0.0 < lo and hi < 1.0):
            raise DomainError("best-c curves need 0 < t < 1")
        ts = _curve_grid(lo, hi, args.samples)

        def work(t):
            return asymptotics.best_constant(float(t)).c

    with ThreadPoolExecutor(max_workers=MAX_WORKERS) as pool:
        values = list(pool.map(work, ts))
    _emit(_csv_text(["t", "value"], [[_num(t), _num(v)] for t, v in zip(ts, values)]), args.out)
    return EXIT_OK


def cmd_chromatic(args) -> int:
    cfg = _config(args)
    cert = bounds.theta_euclidean(args.n, args.k, cfg)
    chi = bounds.chromatic_lower(args.n, args.k, cfg)
    if args.format == "json":
        text = json.dumps({"n": args.n, "k": args.k, "theta": cert.value,
                           "chromatic_lower": chi, "certified": cert.all_certified}, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv_text(["n", "k", "theta", "chromatic_lower"],
                         [[args.n, args.k, _num(cert.value), chi]])
    else:
        text = f"{chi}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    if args.k is None:
        raise DomainError("asymptotics needs --k")
    if args.t is None:
        base = asymptotics.euclidean_decay_constant(args.k)
        terms = [("bessel", None, asymptotics.BESSEL_DECAY_BASE)] + [
            (f"M(1/{2 + i})", 1.0 / (2 + i), asymptotics.best_constant(1.0 / (2 + i)).c)
            for i in range(args.k - 2)
        ]
        space = EUCLIDEAN
    else:
        base = asymptotics.sphere_decay_constant(args.k, args.t)
        terms = [
            (f"M(F_{i})", args.t / (1 + i * args.t),
             asymptotics.best_constant(args.t / (1 + i * args.t)).c)
            for i in range(args.k - 1)
        ]
        space = SPHERE
    rough = 1.0 - 1.0 / (9.0 * (args.k - 1) ** 2) if space == EUCLIDEAN else None
    if args.format == "json":
        d = {"space": space, "k": args.k, "t": args.t, "base": base,
             "terms": [{"term": name, "t": t, "c": c} for name, t, c in terms]}
        if rough is not None:
            d["chromatic_base"] = 1.0 / base
            d["rough_bound"] = rough
        text = json.dumps(d, indent=2) + "\n"
    elif args.format == "csv":
        text = _csv_text(["term", "t", "c"],
                         [[name, "" if t is None else _num(t), _num(c)] for name, t, c in terms]
                         + [["base", "", _num(base)]])
    else:
        # upper-bound bases round up, the chromatic lower-bound base rounds down
        lines = [f"base {round_display(base, args.decimals, ROUND_CEILING)}"]
        if rough is not None:
            lines.append(f"chromatic base {round_display(1.0 / base, args.decimals, ROUND_FLOOR)}")
            lines.append(f"rough bound {round_display(rough, args.decimals, ROUND_CEILING)}")
        if args.verbose:
            lines += [f"  {name}: c={_num(c)}" for name, _, c in terms]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_certify(args) -> int:
    cfg = _config(args)
    cert = _certificate(args, cfg)
    report = oracle.verify_chain(cert, args.J, cfg)
    if args.format == "json":
        text = json.dumps({
            "passed": report.passed,
            "failed_level": report.failed_level,
            "value": cert.value,
            "levels": [{"level": c.level, "kind": c.kind, "closed_form": c.closed_form,
                        "lp_value": c.lp_value, "truncation": c.truncation, "tol": c.tol,
                        "ok": c.ok} for c in report.levels],
        }, indent=2) + "\n"
    else:
        lines = [f"level {c.level} ({c.kind}): closed={_num(c.closed_form)} "
                 f"lp={_num(c.lp_value)} J={c.truncation} {'ok' if c.ok else 'MISMATCH'}"
                 for c in report.levels] if args.verbose else []
        lines.append("pass" if report.passed else f"fail (level {report.failed_level})")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simplex-theta",
                                description="Recursive theta bounds for simplex-avoiding sets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "text"])
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--decimals", type=int, default=5)
    common.add_argument("--j-max", dest="j_max", type=int)
    common.add_argument("--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_args(sp, space_flag):
        if space_flag:
            sp.add_argument("space_pos", nargs="?", choices=[SPHERE, EUCLIDEAN])
            sp.add_argument("--space", choices=[SPHERE, EUCLIDEAN])
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--t", type=float)

    sp = sub.add_parser("bound", parents=[common], help="theta bound for one instance")
    instance_args(sp, True)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("table", parents=[common], help="grid of theta(R^n, k)")
    sp.add_argument("--n-max", dest="n_max", type=int, default=10)
    sp.add_argument("--k-max", dest="k_max", type=int, default=11)
    sp.set_defaults(func=cmd_table, default_format="csv")

    sp = sub.add_parser("curve", parents=[common], help="CSV samples of a bound or of c(t)")
    sp.add_argument("kind", choices=["sphere", "best-c"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--t-min", dest="t_min", type=float)
    sp.add_argument("--t-max", dest="t_max", type=float)
    sp.add_argument("--samples", type=int, default=CURVE_SAMPLES)
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("chromatic", parents=[common], help="measurable chromatic number lower bound")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("asymptotics", parents=[common], help="exponential decay bases")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=float)
    sp.set_defaults(func=cmd_asymptotics)

    sp = sub.add_parser("certify", parents=[common], help="re-solve the chain as truncated LPs")
    instance_args(sp, True)
    sp.add_argument("--J", type=int, default=500)
    sp.set_defaults(func=cmd_certify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "space_pos"):
        space = args.space or args.space_pos
        if space is None:
            parser.error("a space is required (sphere or euclidean)")
        if args.space and args.space_pos and args.space != args.space_pos:
            parser.error("conflicting space arguments")
        args.space = space
    if args.format is None:
        args.format = getattr(args, "default_format", "text")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
