"""Command-line surface: evaluation, tabulation, and verification sweeps.

Three subcommands:

* ``jack``   -- construct a Jack polynomial, print its expansion, optionally
               evaluate it at a rational point (exactly);
* ``bessel`` -- evaluate the type-B2 Bessel function by any of its three
               representations;
* ``verify`` -- run seeded identity sweeps (the same identities the test
               suite enforces) and report per-case results.

All random sweeps draw from numpy's PCG64 generator (``np.random.default_rng``)
seeded from ``--seed`` (default 42), so an identical configuration produces
byte-identical JSON output on the same platform.  Floats are printed with 17
significant digits; exact rationals as "p/q" strings.

Exit codes: 0 all checks passed, 1 at least one identity failed, 2 invalid
usage or configuration, 3 the double-integral order resolution failed.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bessel import (
    Multiplicity,
    OrderResolutionError,
    Poly2,
    bessel_b2_double_integral,
    bessel_b2_series,
    bessel_b2_series_trunc,
    bessel_i_norm,
    bessel_product_identity,
    bessel_rotation_symmetry,
    check_rotation_intertwining,
    hyp0f1_single_integral,
    hyp0f1_two,
    limit_transition,
    resolve_double_integral_order,
)
from .jack import jack_p
from .partitions import Partition, parse_partition, parse_scalar, partitions_of_weight
from .product import make_report, product_lhs, verify_product, zonal_so2_average

VERIFY_VERBS = (
    "product",
    "zonal",
    "bessel-series-vs-integral",
    "bessel-product",
    "rotation",
    "single-integral",
    "limit",
    "all",
)

DEFAULT_PRODUCT_K = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(11, 4))
DEFAULT_BESSEL_K = (Fraction(1, 2), Fraction(1), Fraction(3, 2))
DEFAULT_KAPPAS = (
    (Fraction(1), Fraction(1)),
    (Fraction(4, 5), Fraction(13, 10)),
    (Fraction(1, 2), Fraction(1, 2)),
)
INTERTWINING_KAPPAS = (
    (Fraction(1), Fraction(1)),
    (Fraction(1, 2), Fraction(3, 2)),
    (Fraction(2), Fraction(1, 3)),
)


@dataclass
class RunConfig:
    command: str
    verb: str = ""
    lam: Partition = Partition()
    n: int = 2
    k: Fraction | None = None
    kappa: tuple | None = None
    x: tuple | None = None
    y: tuple | None = None
    method: str = "series"
    npoints: int | None = None
    max_degree: int = 30
    ntheta: int = 256
    lambda_max: int = 8
    samples: int = 50
    tol: float | None = None
    seed: int = 42
    output: str = "json"

    def to_json(self):
        return {
            "verb": self.verb or None,
            "lambda": list(self.lam),
            "n": self.n,
            "k": str(self.k) if self.k is not None else None,
            "kappa": [str(v) for v in self.kappa] if self.kappa else None,
            "x": [str(v) for v in self.x] if self.x else None,
            "y": [str(v) for v in self.y] if self.y else None,
            "method": self.method,
            "npoints": self.npoints,
            "max_degree": self.max_degree,
            "ntheta": self.ntheta,
            "lambda_max": self.lambda_max,
            "samples": self.samples,
            "tol": self.tol,
            "seed": self.seed,
            "output": self.output,
        }


# ---------------------------------------------------------------------------
# Deterministic JSON emission.

def _float_text(v):
    if not math.isfinite(v):
        return json.dumps(repr(v))
    return format(v, ".17g")


def json_text(obj):
    """Serialize with 17-significant-digit floats and "p/q" rationals."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _float_text(obj)
    if isinstance(obj, dict):
        inner = ", ".join(f"{json.dumps(str(k))}: {json_text(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(json_text(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def emit(doc, output, stream=None):
    stream = stream or sys.stdout
    if output == "json":
        stream.write(json_text(doc) + "\n")
        return
    if output == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["identity", "params", "lhs", "rhs", "abs_err", "rel_err", "pass"])
        standard = {"identity", "lhs", "rhs", "abs_err", "rel_err", "pass"}
        for case in doc["cases"]:
            params = " ".join(
                f"{key}={json_text(val)}" for key, val in case.items()
                if key not in standard)
            writer.writerow([
                case.get("identity", doc["command"]),
                params,
                _float_text(float(case["lhs"])) if "lhs" in case else "",
                _float_text(float(case["rhs"])) if "rhs" in case else "",
                _float_text(float(case["abs_err"])) if "abs_err" in case else "",
                _float_text(float(case["rel_err"])) if "rel_err" in case else "",
                str(case.get("pass", "")).lower(),
            ])
        return
    # pretty
    for case in doc["cases"]:
        status = {True: "PASS", False: "FAIL"}.get(case.get("pass"), " -- ")
        keys = [f"{k}={json_text(v)}" for k, v in case.items()
                if k not in ("pass", "lhs", "rhs", "abs_err")]
        stream.write(f"[{status}] " + " ".join(keys) + "\n")
    summary = doc.get("summary")
    if summary:
        stream.write(
            f"total {summary['total']}  passed {summary['passed']}  "
            f"failed {summary['failed']}\n")


def _document(command, config, cases):
    failed = sum(1 for c in cases if c.get("pass") is False)
    passed = sum(1 for c in cases if c.get("pass") is True)
    return {
        "command": command,
        "config": config.to_json(),
        "cases": cases,
        "summary": {"total": len(cases), "passed": passed, "failed": failed},
    }


# ---------------------------------------------------------------------------
# Verification sweeps.

def _product_cases(config):
    ks = [config.k] if config.k is not None else list(DEFAULT_PRODUCT_K)
    tol = config.tol if config.tol is not None else 1e-10
    rng = np.random.default_rng(config.seed)
    cases = []
    lams = [lam for d in range(config.lambda_max + 1)
            for lam in partitions_of_weight(d, 2)]
    for k in ks:
        for lam in lams:
            npoints = config.npoints or (lam.weight + 4)
            worst = None
            for _ in range(config.samples):
                draw = 3.0 - rng.uniform(0.0, 3.0, size=4)  # values in (0, 3]
                rep = verify_product(lam, k, draw[:2], draw[2:], npoints, tol)
                if worst is None or rep.rel_err > worst.rel_err:
                    worst = rep
            case = worst.to_json()
            case["samples"] = config.samples
            case["pass"] = worst.rel_err <= tol
            cases.append(case)
    return cases


def _zonal_cases(config):
    tol = config.tol if config.tol is not None else 1e-10
    samples = min(config.samples, 5)
    rng = np.random.default_rng(config.seed)
    cases = []
    lams = [lam for d in range(min(config.lambda_max, 6) + 1)
            for lam in partitions_of_weight(d, 2)]
    for lam in lams:
        worst = None
        for _ in range(samples):
            draw = 3.0 - rng.uniform(0.0, 3.0, size=4)
            x, y = tuple(draw[:2]), tuple(draw[2:])
            lhs = product_lhs(lam, Fraction(1, 2), x, y)
            rhs = zonal_so2_average(lam, x, y, config.ntheta)
            rep = make_report(lhs, rhs, tol,
                              identity="zonal-average",
                              **{"lambda": list(lam)},
                              x=[float(v) for v in x],
                              y=[float(v) for v in y],
                              ntheta=config.ntheta)
            if worst is None or rep.rel_err > worst.rel_err:
                worst = rep
        case = worst.to_json()
        case["samples"] = samples
        cases.append(case)
    return cases


def _series_vs_integral_cases(config):
    tol = config.tol if config.tol is not None else 1e-7
    kappas = [config.kappa] if config.kappa else list(DEFAULT_KAPPAS)
    nodes = config.npoints or 64
    rng = np.random.default_rng(config.seed)
    cases = []
    tags = []
    for pair in kappas:
        kappa = Multiplicity(*pair)
        order = resolve_double_integral_order(kappa)
        tag = int(round(float(order) - float(kappa.order_mu)))  # 0 or -1
        tags.append(tag)
        worst = None
        for _ in range(5):
            x = tuple(rng.uniform(0.1, 0.8, size=2))
            y = tuple(rng.uniform(0.1, 0.8, size=2))
            lhs = bessel_b2_series(kappa, x, y, config.max_degree)
            rhs = bessel_b2_double_integral(kappa, x, y, nodes, nodes, order=order)
            rep = make_report(lhs, rhs, tol,
                              identity="series-vs-double-integral",
                              kappa=[str(v) for v in pair],
                              x=[float(v) for v in x],
                              y=[float(v) for v in y],
                              method_a="series",
                              method_b="double-integral",
                              resolved_order=float(order),
                              nodes=nodes)
            if worst is None or rep.rel_err > worst.rel_err:
                worst = rep
        cases.append(worst.to_json())
    cases.append({
        "identity": "order-consistency",
        "kappas": [[str(v) for v in pair] for pair in kappas],
        "order_offsets": tags,
        "pass": len(set(tags)) == 1,
    })
    return cases


def _bessel_product_cases(config):
    tol = config.tol if config.tol is not None else 1e-10
    ks = [config.k] if config.k is not None else list(DEFAULT_BESSEL_K)
    nodes = config.npoints or 64
    cases = []
    points = (0.0, 0.5, 1.0, 2.0, 5.0)
    for k in ks:
        worst = None
        for xv in points:
            for yv in points:
                rep = bessel_product_identity(k, xv, yv, nodes, tol)
                if worst is None or rep.rel_err > worst.rel_err:
                    worst = rep
        case = worst.to_json()
        case["grid"] = list(points)
        cases.append(case)
    return cases


def _rotation_cases(config):
    tol = config.tol if config.tol is not None else 1e-8
    cases = []
    for pair in INTERTWINING_KAPPAS:
        kappa = Multiplicity(*pair)
        ok = True
        for d in range(7):
            for i in range(d + 1):
                p = Poly2({(i, d - i): Fraction(1)})
                if not check_rotation_intertwining(p, kappa):
                    ok = False
        cases.append({
            "identity": "dunkl-intertwining",
            "kappa": [str(v) for v in pair],
            "max_monomial_degree": 6,
            "exact": True,
            "pass": ok,
        })
    kappas = [config.kappa] if config.kappa else list(DEFAULT_KAPPAS)
    rng = np.random.default_rng(config.seed)
    for pair in kappas:
        kappa = Multiplicity(*pair)
        worst = None
        for _ in range(5):
            x = tuple(rng.uniform(0.1, 0.8, size=2))
            y = tuple(rng.uniform(0.1, 0.8, size=2))
            rep = bessel_rotation_symmetry(kappa, x, y, config.max_degree, tol)
            if worst is None or rep.rel_err > worst.rel_err:
                worst = rep
        cases.append(worst.to_json())
    return cases


def _single_integral_cases(config):
    tol = config.tol if config.tol is not None else 1e-9
    nodes = config.npoints or 64
    degree = max(config.max_degree, 40)
    cases = []
    grid = (0.0, 0.5, 1.0)
    for mu in (Fraction(1), Fraction(3, 2), Fraction(12, 5)):
        for k in (Fraction(1, 2), Fraction(1), Fraction(2)):
            worst = None
            for x1 in grid:
                for x2 in grid:
                    series, _ = hyp0f1_two(mu, k, (x1, x2), (1.0, 0.0), degree)
                    integral = hyp0f1_single_integral(mu, k, (x1, x2), nodes)
                    rep = make_report(series, integral, tol,
                                      identity="single-integral",
                                      mu=str(mu), k=str(k),
                                      x=[x1, x2],
                                      method_a="series",
                                      method_b="single-integral",
                                      nodes=nodes,
                                      max_degree=degree)
                    if worst is None or rep.rel_err > worst.rel_err:
                        worst = rep
            cases.append(worst.to_json())
    return cases


def _limit_cases(config):
    cases = []
    ells = (8, 16, 32, 64)
    for k in (Fraction(1, 2), Fraction(1)):
        for xv in (0.5, 1.0):
            target = bessel_i_norm(float(k) - 0.5, xv)
            values = [limit_transition(k, xv, ell) for ell in ells]
            errors = [abs(v - target) for v in values]
            ratios = [errors[i + 1] / errors[i] if errors[i] > 0 else 0.0
                      for i in range(len(ells) - 1)]
            ok = all(0.35 <= r <= 0.65 for r in ratios)
            cases.append({
                "identity": "limit-transition",
                "k": str(k),
                "x": xv,
                "ells": list(ells),
                "errors": errors,
                "ratios": ratios,
                "lhs": target,
                "rhs": values[-1],
                "abs_err": errors[-1],
                "rel_err": errors[-1] / abs(target),
                "pass": ok,
            })
    return cases


_VERB_RUNNERS = {
    "product": _product_cases,
    "zonal": _zonal_cases,
    "bessel-series-vs-integral": _series_vs_integral_cases,
    "bessel-product": _bessel_product_cases,
    "rotation": _rotation_cases,
    "single-integral": _single_integral_cases,
    "limit": _limit_cases,
}


def run_verify(config):
    verbs = [v for v in VERIFY_VERBS if v != "all"] if config.verb == "all" \
        else [config.verb]
    cases = []
    for verb in verbs:
        cases.extend(_VERB_RUNNERS[verb](config))
    doc = _document("verify", config, cases)
    return doc, 0 if doc["summary"]["failed"] == 0 else 1


# ---------------------------------------------------------------------------
# jack and bessel commands.

def run_jack(config):
    poly = jack_p(config.lam, config.k if config.k is not None else Fraction(1), config.n)
    case = poly.to_json()
    if config.x is not None:
        if len(config.x) != config.n:
            raise ValueError(f"expected {config.n} coordinates, got {len(config.x)}")
        case["point"] = [str(v) for v in config.x]
        case["value"] = poly.evaluate(tuple(config.x))
    case["pass"] = True
    return _document("jack", config, [case]), 0


def run_bessel(config):
    if config.kappa is None:
        raise ValueError("--kappa is required for the bessel command")
    kappa = Multiplicity(*config.kappa)
    nodes = config.npoints or 64
    x = config.x or (Fraction(0), Fraction(0))
    y = config.y or (Fraction(0), Fraction(0))
    case = {
        "method": config.method,
        "kappa": [str(v) for v in config.kappa],
        "x": [float(v) for v in x],
        "y": [float(v) for v in y],
        "mu": str(kappa.order_mu),
    }
    if config.method == "series":
        value, trunc = bessel_b2_series_trunc(kappa, x, y, config.max_degree)
        case["value"] = value
        case["truncation_estimate"] = trunc
        case["max_degree"] = config.max_degree
    elif config.method == "double-integral":
        order = resolve_double_integral_order(kappa, npoints=nodes)
        case["resolved_order"] = float(order)
        case["nodes"] = nodes
        case["value"] = bessel_b2_double_integral(kappa, x, y, nodes, nodes, order=order)
    elif config.method == "single-integral":
        # Surfaces the one-dimensional representation directly: --x is the
        # 0F1 argument pair (already halved squares), the second argument
        # being e1 = (1, 0).
        case["nodes"] = nodes
        case["value"] = hyp0f1_single_integral(kappa.order_mu, kappa.kappa2, x, nodes)
    else:
        raise ValueError(f"unknown method {config.method!r}")
    case["pass"] = True
    return _document("bessel", config, [case]), 0


# ---------------------------------------------------------------------------
# Argument parsing.

def _parse_vector(text):
    return tuple(parse_scalar(tok) for tok in text.split(","))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jackb2",
        description="Jack polynomials, the two-variable product identity, and "
                    "the generalized Bessel function of type B2.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_jack = sub.add_parser("jack", help="construct and evaluate a Jack polynomial")
    p_jack.add_argument("--lambda", dest="lam", default="", help="partition, e.g. 3,1")
    p_jack.add_argument("--k", default="1", help="parameter k as p/q or decimal")
    p_jack.add_argument("--n", type=int, default=2, help="number of variables")
    p_jack.add_argument("--x", default=None, help="evaluation point, e.g. 3,2")
    p_jack.add_argument("--output", choices=("json", "csv", "pretty"), default="json")

    p_bessel = sub.add_parser("bessel", help="evaluate the type-B2 Bessel function")
    p_bessel.add_argument("--kappa", required=True, help="multiplicity pair, e.g. 1,1")
    p_bessel.add_argument("--x", default="0,0")
    p_bessel.add_argument("--y", default="0,0")
    p_bessel.add_argument("--method", default="series",
                          choices=("series", "single-integral", "double-integral"))
    p_bessel.add_argument("--nodes", dest="npoints", type=int, default=None)
    p_bessel.add_argument("--max-degree", type=int, default=30)
    p_bessel.add_argument("--output", choices=("json", "csv", "pretty"), default="json")

    p_verify = sub.add_parser("verify", help="run seeded identity sweeps")
    p_verify.add_argument("verb", choices=VERIFY_VERBS)
    p_verify.add_argument("--k", default=None, help="restrict to one parameter value")
    p_verify.add_argument("--kappa", default=None, help="restrict to one multiplicity")
    p_verify.add_argument("--lambda-max", type=int, default=8)
    p_verify.add_argument("--samples", type=int, default=50)
    p_verify.add_argument("--npoints", type=int, default=None)
    p_verify.add_argument("--ntheta", type=int, default=256)
    p_verify.add_argument("--max-degree", type=int, default=30)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--output", choices=("json", "csv", "pretty"), default="json")
    return parser


def config_from_args(args):
    command = args.command
    if command == "jack":
        return RunConfig(
            command=command,
            lam=parse_partition(args.lam),
            n=args.n,
            k=parse_scalar(args.k),
            x=_parse_vector(args.x) if args.x else None,
            output=args.output,
        )
    if command == "bessel":
        kappa = _parse_vector(args.kappa)
        if len(kappa) != 2:
            raise ValueError("--kappa needs exactly two components")
        return RunConfig(
            command=command,
            kappa=kappa,
            x=_parse_vector(args.x),
            y=_parse_vector(args.y),
            method=args.method,
            npoints=args.npoints,
            max_degree=args.max_degree,
            output=args.output,
        )
    kappa = _parse_vector(args.kappa) if args.kappa else None
    if kappa is not None and len(kappa) != 2:
        raise ValueError("--kappa needs exactly two components")
    if args.tol is not None and not args.tol > 0:
        raise ValueError("--tol must be positive")
    return RunConfig(
        command=command,
        verb=args.verb,
        k=parse_scalar(args.k) if args.k else None,
        kappa=kappa,
        npoints=args.npoints,
        max_degree=args.max_degree,
        ntheta=args.ntheta,
        lambda_max=args.lambda_max,
        samples=args.samples,
        tol=args.tol,
        seed=args.seed,
        output=args.output,
    )


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if config.command == "jack":
            doc, code = run_jack(config)
        elif config.command == "bessel":
            doc, code = run_bessel(config)
        else:
            doc, code = run_verify(config)
    except OrderResolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(doc, config.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
