"""Command-line front end: ``cohzeta {compute,verify,oracle,table} TARGET ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Any, Callable

from . import qseries as qs
from . import zeta as zf
from .laurent import monomial, poch, qbinom
from .oracle import (
    CSV_COLUMNS,
    GuardExceeded,
    OracleResult,
    default_guard,
    hall_count_oracle,
    hall_module,
    hall_table,
    moebius_to_top,
    quot_zeta_oracle_inert_m1,
    saturating_subspace_count_oracle,
    saturation_zeta_oracle,
    write_csv,
)
from .oracle.enumerate import cotype
from .serialize import SCHEMA_VERSION, encode_value, format_value
from .verify import SUITES, run_suite

EXIT_USAGE = 64

# formulas printed in 1/q by default (the finitized Coh zeta functions and
# their s=0 values); everything else defaults to q
QINV_NATIVE = {"coh-inert-m1", "closed-form-coh", "nuhat0", "nuhat", "nuhat0-prediction"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.target}")


def _order_family(args) -> zf.OrderFamily:
    _need(args, "family", "m")
    try:
        return zf.OrderFamily(args.family.lower(), args.m)
    except ValueError as exc:
        raise UsageError(str(exc))


def _sum_family(args) -> qs.SumFamily:
    _need(args, "family", "m")
    tag = {"ag": "AG", "br": "Br"}.get(args.family.lower())
    if tag is None:
        raise UsageError(f"--family must be AG or Br for {args.target}")
    return qs.SumFamily(tag, args.m)


def _n(args) -> int:
    _need(args, "n")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    return args.n


# -- compute targets: each returns (value, conjectural flag) ---------------


def _c_g_skew(a):
    _need(a, "r", "s")
    return qs.g_skew(a.r, a.s), False


def _c_hall_g(a):
    _need(a, "lam", "mu")
    return qs.hall_g(a.lam, a.mu), False


def _c_qbinom(a):
    _need(a, "n", "k")
    return qbinom(a.n, a.k, a.base_exp), False


def _c_poch(a):
    _need(a, "base_q", "base_t", "step", "n")
    return poch(monomial(a.sign, a.base_q, a.base_t), a.step, _n(a)), False


def _c_ag(a):
    _need(a, "m")
    return qs.ag_multisum(a.m, _n(a)), False


def _c_br(a):
    _need(a, "m")
    return qs.br_multisum(a.m, _n(a), a.sign), False


def _c_singlesum(a):
    return qs.singlesum(_sum_family(a), _n(a)), False


def _c_infinite(a):
    return qs.infinite_sum(_sum_family(a), a.order), False


def _c_product(a):
    return qs.product_side(_sum_family(a), a.order), False


def _c_saturation(a):
    return zf.saturation_zeta(_order_family(a), _n(a)), False


def _c_rtilde(a):
    return zf.rtilde_zeta(_order_family(a), _n(a)), False


def _c_solomon(a):
    _need(a, "exps")
    return zf.solomon_zeta(a.exps, _n(a)), False


def _c_coh(a):
    return zf.coh_finitized(_n(a)), False


def _c_closed(a):
    cf = zf.closed_form_coh(_order_family(a), _n(a))
    return cf.value, cf.conjectural


def _c_nuhat0(a):
    fam = _order_family(a)
    return zf.nuhat_zero(fam, _n(a), a.form or "theorem"), False


def _c_nuhat0_prediction(a):
    fam = _order_family(a)
    return zf.nuhat_zero_prediction(fam, _n(a)), fam.tag == "inert"


def _c_nuhat(a):
    n = _n(a)
    return zf.normalize_nuhat(zf.coh_finitized(n), zf.OrderFamily("inert", 1), n), False


def _c_count(a):
    _need(a, "r")
    return zf.inert_m1_count(_n(a), a.r, a.form or "closed"), False


COMPUTE: dict[str, Callable[[argparse.Namespace], tuple[Any, bool]]] = {
    "g-skew": _c_g_skew,
    "hall-g": _c_hall_g,
    "qbinom": _c_qbinom,
    "poch": _c_poch,
    "ag-multisum": _c_ag,
    "br-multisum": _c_br,
    "singlesum": _c_singlesum,
    "infinite-sum": _c_infinite,
    "product-side": _c_product,
    "saturation-zeta": _c_saturation,
    "rtilde-zeta": _c_rtilde,
    "solomon-zeta": _c_solomon,
    "coh-inert-m1": _c_coh,
    "closed-form-coh": _c_closed,
    "nuhat0": _c_nuhat0,
    "nuhat0-prediction": _c_nuhat0_prediction,
    "nuhat": _c_nuhat,
    "inert-m1-count": _c_count,
}


# -- oracle targets --------------------------------------------------------


def _q(a) -> int:
    _need(a, "q")
    return a.q


def _o_hall_count(a):
    _need(a, "lam", "mu")
    return hall_count_oracle(a.lam, a.mu, _q(a), a.guard)


def _o_hall_table(a):
    _need(a, "lam")
    table = hall_table(a.lam, _q(a), a.guard)
    return [
        {"type": list(ty), "cotype": list(co), "count": c}
        for (ty, co), c in sorted(table.items(), key=lambda kv: (len(kv[0][0]), kv[0][0], kv[0][1]))
    ]


def _o_moebius(a):
    _need(a, "lam")
    q = _q(a)
    M = hall_module(a.lam, q)
    tally: dict[tuple, dict[int, int]] = {}
    for W, mu in moebius_to_top(M, a.guard).items():
        key = tuple(cotype(W, M, "T"))
        tally.setdefault(key, {})
        tally[key][mu] = tally[key].get(mu, 0) + 1
    return [
        {"cotype": list(co), "moebius": mu, "submodules": c}
        for co in sorted(tally, key=lambda k: (len(k), k))
        for mu, c in sorted(tally[co].items())
    ]


def _o_sat_count(a):
    _need(a, "r")
    return saturating_subspace_count_oracle(_q(a), _n(a), a.r, a.guard)


def _o_saturation(a):
    return saturation_zeta_oracle(_order_family(a), _n(a), _q(a), a.guard)


def _o_quot(a):
    _need(a, "K")
    return quot_zeta_oracle_inert_m1(_q(a), _n(a), a.K, a.guard)


ORACLE = {
    "hall-count": _o_hall_count,
    "hall-table": _o_hall_table,
    "moebius": _o_moebius,
    "sat-count": _o_sat_count,
    "saturation": _o_saturation,
    "quot": _o_quot,
}


# -- output ----------------------------------------------------------------


def _params(args, keys) -> dict[str, Any]:
    out = {}
    for k in keys:
        v = getattr(args, k, None)
        if v is not None:
            out[k] = v
    return out


TARGET_PARAMS = {
    "g-skew": ("r", "s"),
    "hall-g": ("lam", "mu"),
    "qbinom": ("n", "k", "base_exp"),
    "poch": ("sign", "base_q", "base_t", "step", "n"),
    "ag-multisum": ("m", "n"),
    "br-multisum": ("m", "n", "sign"),
    "singlesum": ("family", "m", "n"),
    "infinite-sum": ("family", "m", "order"),
    "product-side": ("family", "m", "order"),
    "saturation-zeta": ("family", "m", "n"),
    "rtilde-zeta": ("family", "m", "n"),
    "solomon-zeta": ("exps", "n"),
    "coh-inert-m1": ("n",),
    "closed-form-coh": ("family", "m", "n"),
    "nuhat0": ("family", "m", "n", "form"),
    "nuhat0-prediction": ("family", "m", "n"),
    "nuhat": ("n",),
    "inert-m1-count": ("n", "r", "form"),
    "hall-count": ("lam", "mu", "q"),
    "hall-table": ("lam", "q"),
    "moebius": ("lam", "q"),
    "sat-count": ("q", "n", "r"),
    "saturation": ("family", "m", "n", "q"),
    "quot": ("q", "n", "K"),
}


def _emit(obj: dict[str, Any], text: str, csv_rows: list[list[Any]] | None, header, args):
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(csv_rows or [])
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def _var_for(args) -> str:
    if args.var:
        return args.var
    return "qinv" if args.target in QINV_NATIVE else "q"


def cmd_compute(args) -> int:
    if args.target not in COMPUTE:
        raise UsageError(f"unknown compute target {args.target!r}; known: {', '.join(sorted(COMPUTE))}")
    start = time.perf_counter()
    value, conjectural = COMPUTE[args.target](args)
    elapsed = time.perf_counter() - start
    var = _var_for(args)
    params = _params(args, TARGET_PARAMS[args.target])
    obj = {
        "schema_version": SCHEMA_VERSION,
        "command": "compute",
        "target": args.target,
        "params": params,
        "value": encode_value(value, var),
        "conjectural": conjectural,
    }
    if args.timing:
        obj["seconds"] = round(elapsed, 6)
    text = format_value(value, var) + ("  [CONJECTURAL]" if conjectural else "")
    pstr = ";".join(f"{k}={params[k]}" for k in sorted(params))
    _emit(obj, text, [[args.target, pstr, format_value(value, var), int(conjectural)]],
          ("target", "params", "value", "conjectural"), args)
    return 0


def cmd_table(args) -> int:
    """Sweep a compute target over ``n = 0..n_max``."""
    if args.target not in COMPUTE:
        raise UsageError(f"unknown table target {args.target!r}; known: {', '.join(sorted(COMPUTE))}")
    _need(args, "n_max")
    var = _var_for(args)
    rows = []
    start = time.perf_counter()
    for n in range(args.n_max + 1):
        args.n = n
        value, conjectural = COMPUTE[args.target](args)
        rows.append((n, value, conjectural))
    elapsed = time.perf_counter() - start
    params = _params(args, TARGET_PARAMS[args.target])
    params.pop("n", None)
    obj = {
        "schema_version": SCHEMA_VERSION,
        "command": "table",
        "target": args.target,
        "params": params,
        "rows": [{"n": n, "value": encode_value(v, var), "conjectural": c} for n, v, c in rows],
    }
    if args.timing:
        obj["seconds"] = round(elapsed, 6)
    text = "\n".join(f"n={n:<3d} {format_value(v, var)}" for n, v, _ in rows)
    _emit(obj, text, [[n, format_value(v, var), int(c)] for n, v, c in rows],
          ("n", "value", "conjectural"), args)
    return 0


def cmd_oracle(args) -> int:
    if args.target not in ORACLE:
        raise UsageError(f"unknown oracle target {args.target!r}; known: {', '.join(sorted(ORACLE))}")
    if args.guard is None:
        args.guard = default_guard()
    start = time.perf_counter()
    try:
        value = ORACLE[args.target](args)
    except GuardExceeded as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    elapsed = time.perf_counter() - start
    params = _params(args, TARGET_PARAMS[args.target])
    obj = {
        "schema_version": SCHEMA_VERSION,
        "command": "oracle",
        "target": args.target,
        "params": params,
    }
    if isinstance(value, list) and value and isinstance(value[0], dict):
        obj["rows"] = value
        text = "\n".join(json.dumps(r, sort_keys=True) for r in value)
        csv_value = " ".join(json.dumps(r, sort_keys=True) for r in value)
    else:
        obj["value"] = encode_value(value)
        text = format_value(value)
        csv_value = value
    if args.timing:
        obj["seconds"] = round(elapsed, 6)
    if args.format == "csv":
        res = OracleResult(args.target, params, csv_value, elapsed)
        sys.stdout.write(write_csv([res], timing=args.timing))
        return 0
    _emit(obj, text, None, CSV_COLUMNS, args)
    return 0


def cmd_verify(args) -> int:
    if args.target not in SUITES:
        raise UsageError(f"unknown suite {args.target!r}; known: {', '.join(sorted(SUITES))}")
    ranges = {
        "m_max": args.m_max,
        "n_max": args.n_max,
        "order": args.order,
        "q": tuple(args.q) if args.q else None,
        "guard": args.guard if args.guard is not None else default_guard(),
    }
    report = run_suite(args.target, ranges, workers=args.workers)
    if args.format == "json":
        obj = {
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "target": args.target,
            "params": {k: v for k, v in ranges.items() if v is not None and k != "guard"},
            "report": report.to_json(args.timing),
        }
        print(json.dumps(obj, sort_keys=True, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("suite", "status", "check", "point", "outcome", "witness"))
        for p in report.points:
            point = ";".join(f"{k}={v}" for k, v in p.point)
            w.writerow((report.suite, report.status, p.check, point, p.outcome,
                        "" if p.witness is None else str(p.witness)))
        sys.stdout.write(buf.getvalue())
    else:
        print(report.to_text(args.timing))
    return report.exit_code


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "oracle": cmd_oracle, "table": cmd_table}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cohzeta", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (
        ("compute", "evaluate one formula exactly"),
        ("verify", "run a named identity suite"),
        ("oracle", "run a brute-force enumeration"),
        ("table", "sweep a formula over n = 0..n-max"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("target")
        s.add_argument("--family")
        s.add_argument("--m", type=int)
        s.add_argument("--n", type=int)
        s.add_argument("--r", type=_ints, help="integer, or comma-separated tuple for g-skew")
        s.add_argument("--s", type=_ints)
        s.add_argument("--k", type=int)
        s.add_argument("--lam", type=_ints)
        s.add_argument("--mu", type=_ints)
        s.add_argument("--exps", type=_ints)
        s.add_argument("--q", type=_ints, help="prime field size(s), comma separated")
        s.add_argument("--K", type=int, help="truncation level for the quot oracle")
        s.add_argument("--order", type=int, default=None)
        s.add_argument("--sign", type=int, default=1, choices=(1, -1))
        s.add_argument("--form", choices=("theorem", "alternative", "closed", "alternating"))
        s.add_argument("--base-exp", dest="base_exp", type=int, default=1)
        s.add_argument("--base-q", dest="base_q", type=int)
        s.add_argument("--base-t", dest="base_t", type=int)
        s.add_argument("--step", type=int)
        s.add_argument("--m-max", dest="m_max", type=int)
        s.add_argument("--n-max", dest="n_max", type=int)
        s.add_argument("--guard", type=int, help="enumeration guard (default: $COHZETA_GUARD or 10^7)")
        s.add_argument("--workers", type=int, default=1)
        s.add_argument("--var", choices=("q", "qinv"), help="variable convention of the output")
        s.add_argument("--format", choices=("text", "json", "csv"), default="text")
        s.add_argument("--no-timing", dest="timing", action="store_false",
                       help="omit wall-time fields so output is byte-reproducible")
    return p


def _normalize(args) -> None:
    # --r doubles as a scalar (codimension) and a tuple (g-skew)
    if args.target != "g-skew" and args.r is not None:
        if len(args.r) != 1:
            raise UsageError("--r must be a single integer here")
        args.r = args.r[0]
    if args.command != "verify" and args.q is not None:
        if len(args.q) != 1:
            raise UsageError("--q takes a single prime here")
        args.q = args.q[0]
    # suites carry their own default order
    if args.order is None and args.command != "verify":
        args.order = 20
    if args.target == "poch" and args.base_t is None:
        args.base_t = 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _normalize(args)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cohzeta {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"cohzeta {args.command}: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
