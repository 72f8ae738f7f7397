"""Command line interface.

Subcommands: product, coproduct, gseries, eval, expand, check.  Global
options (usable before or after the subcommand) resolve as flag, then
MES_* environment variable, then default (level 2, order 15, precision 192,
cutoff 100000, text output).  Exit codes: 0 success / all checks pass,
1 a relation check failed, 2 usage or input error.  JSON payloads carry a
"schema": "mes/1" tag and every approximate numeric value comes with an
explicit error-bound field.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from mpmath import mp

from .eisenstein import G_fourier, G_sha_fourier
from .numerics import (
    PrecisionCtx,
    psi_mono_numeric,
    psi_multi_numeric,
    zeta_numeric,
    zeta_tsha,
)
from .products import harmonic, shuffle, tast, tsha
from .qseries import g_hat, g_sha_hat
from .relations import (
    DEFAULT_TOL,
    check_antipode_zeta,
    check_distribution,
    check_gen_function_identity,
    check_restricted_double_shuffle,
    check_sum_formula,
    check_weighted_sum_formula,
    cusp_decomposition_demo,
    run_default_suite,
)
from .hopf import coproduct_mu
from .words import IndexWord, LinComb, _as_cyclo, index_to_letters, letters_to_index

SCHEMA = "mes/1"

_DEFAULTS = {"level": 2, "order": 15, "precision": 192, "cutoff": 100_000, "format": "text"}
_ENV = {
    "level": "MES_LEVEL",
    "order": "MES_ORDER",
    "precision": "MES_PRECISION",
    "cutoff": "MES_CUTOFF",
    "format": "MES_FORMAT",
}


class UsageError(Exception):
    pass


def _resolve(key: str, flag_value):
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(_ENV[key])
    if raw is None:
        return _DEFAULTS[key]
    if key == "format":
        if raw not in ("text", "json"):
            raise UsageError(f"{_ENV[key]} must be 'text' or 'json', got {raw!r}")
        return raw
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{_ENV[key]} must be an integer, got {raw!r}") from None


class Config:
    """Resolved run configuration: level, q-order, precision, cutoff, format."""

    def __init__(self, args):
        self.level = _resolve("level", args.level)
        self.order = _resolve("order", args.order)
        self.precision = _resolve("precision", args.precision)
        self.cutoff = _resolve("cutoff", args.cutoff)
        self.fmt = "json" if args.json else _resolve("format", args.format)
        if self.level < 1:
            raise UsageError("level must be >= 1")
        if self.order < 0:
            raise UsageError("order must be >= 0")
        if self.precision < 64:
            raise UsageError("precision must be >= 64")
        try:
            self.ctx = PrecisionCtx(precision=self.precision, series_cutoff=self.cutoff)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON for {what}: {exc}") from None


def _as_word(obj, level: int, what: str) -> IndexWord:
    if not isinstance(obj, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in obj
    ):
        raise UsageError(f"{what} must be a list of [n, a] pairs")
    try:
        return IndexWord(level, [(int(n), int(a)) for n, a in obj])
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad index in {what}: {exc}") from None


def _as_lincomb_json(obj, level: int, what: str) -> LinComb:
    """Accept a bare [[n,a],...] word or a full LinComb JSON object."""
    if isinstance(obj, dict):
        try:
            lc = LinComb.from_json(obj)
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad combination JSON for {what}: {exc}") from None
        if lc.level != level:
            raise UsageError(
                f"level mismatch: {what} has N={lc.level}, configured N={level}"
            )
        return lc
    return LinComb.of(_as_word(obj, level, what))


def _parse_tau(text: str):
    normalized = re.sub(r"(?<![0-9.])j", "1j", text.replace("i", "j"))
    try:
        tau = mp.mpmathify(normalized)
    except (ValueError, TypeError):
        raise UsageError(f"cannot parse tau value {text!r}") from None
    tau = mp.mpc(tau)
    if not mp.im(tau) > 0:
        raise UsageError("tau must lie in the upper half plane")
    return tau


def _digits(precision: int) -> int:
    return max(20, int(precision * 0.30103) - 2)


def _cnum(c, v):
    return [mp.nstr(mp.re(v), c), mp.nstr(mp.im(v), c)]


def _emit(cfg: Config, text_lines, payload: dict) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_product(cfg: Config, args) -> int:
    lhs = _as_lincomb_json(_parse_json(args.lhs, "--lhs"), cfg.level, "--lhs")
    rhs = _as_lincomb_json(_parse_json(args.rhs, "--rhs"), cfg.level, "--rhs")
    if args.op == "sha":
        out = shuffle(
            lhs.map_words(index_to_letters), rhs.map_words(index_to_letters)
        ).map_words(letters_to_index)
    elif args.op == "ast":
        out = harmonic(lhs, rhs)
    elif args.op == "tsha":
        out = tsha(lhs, rhs)
    else:
        out = tast(lhs, rhs)
    payload = {"schema": SCHEMA, "op": args.op, **out.to_json()}
    _emit(cfg, [f"{args.op}: {out!r}"], payload)
    return 0


def _cmd_coproduct(cfg: Config, args) -> int:
    w = _as_word(_parse_json(args.index, "--index"), cfg.level, "--index")
    tc = coproduct_mu(w)
    payload = {"schema": SCHEMA, **tc.to_json()}
    _emit(cfg, [f"coproduct of {w}:", f"{tc!r}"], payload)
    return 0


def _cmd_gseries(cfg: Config, args) -> int:
    w = _as_word(_parse_json(args.index, "--index"), cfg.level, "--index")
    regularized = args.regularized == "yes"
    nd = (g_sha_hat if regularized else g_hat)(w, cfg.order)
    coeffs = [_as_cyclo(cfg.level, c) for c in nd.series.c]
    payload = {
        "schema": SCHEMA,
        "N": cfg.level,
        "weight": nd.weight,
        "M": cfg.order,
        "regularized": regularized,
        "coeffs": [c.to_json() for c in coeffs],
    }
    lines = [f"ghat{'_sha' if regularized else ''}({w}), weight {nd.weight}:"]
    lines += [f"  q^{m}: {coeffs[m]}" for m in range(cfg.order + 1)]
    _emit(cfg, lines, payload)
    return 0


def _cmd_eval(cfg: Config, args) -> int:
    ctx = cfg.ctx
    prec = ctx.precision + 16
    what = args.what
    params: dict = {"N": cfg.level}
    with mp.workprec(prec):
        if what in ("zeta", "zeta-sha"):
            if args.index is None:
                raise UsageError(f"eval --what {what} needs --index")
            w = _as_word(_parse_json(args.index, "--index"), cfg.level, "--index")
            params["index"] = w.to_json()
            if what == "zeta":
                if not w.zeta_admissible():
                    raise UsageError("zeta needs an admissible word (last exponent >= 2)")
                value = mp.mpc(zeta_numeric(w, ctx))
            else:
                value = mp.mpc(zeta_tsha(w, ctx))
            bound = max(mp.mpf(1), abs(value)) * mp.mpf(2) ** (24 - ctx.precision)
        elif what == "mono":
            if args.n is None or args.a is None or args.tau is None:
                raise UsageError("eval --what mono needs --n, --a and --tau")
            tau = _parse_tau(args.tau)
            params.update({"n": args.n, "a": args.a % cfg.level, "tau": args.tau})
            value = mp.mpc(psi_mono_numeric(cfg.level, args.n, args.a, tau, ctx))
            bound = max(mp.mpf(1), abs(value)) * mp.mpf(2) ** (24 - ctx.precision)
        else:
            if args.index is None or args.tau is None:
                raise UsageError("eval --what multi needs --index and --tau")
            w = _as_word(_parse_json(args.index, "--index"), cfg.level, "--index")
            if not w.mes_admissible():
                raise UsageError("multi needs all exponents >= 2")
            tau = _parse_tau(args.tau)
            params.update({"index": w.to_json(), "tau": args.tau})
            ns = [n for n, _ in w.letters]
            avec = [a for _, a in w.letters]
            value = mp.mpc(psi_multi_numeric(cfg.level, ns, avec, tau, ctx))
            # windowed extrapolation: declared bound is an estimate
            bound = max(mp.mpf(1), abs(value)) * mp.mpf("1e-12")
        c = _digits(ctx.precision)
        payload = {
            "schema": SCHEMA,
            "what": what,
            "parameters": params,
            "value": _cnum(c, value),
            "error_bound": mp.nstr(bound, 3),
        }
        line = f"{what}{params} = {mp.nstr(value, c)}  (error <= {mp.nstr(bound, 3)})"
    _emit(cfg, [line], payload)
    return 0


def _cmd_expand(cfg: Config, args) -> int:
    w = _as_word(_parse_json(args.index, "--index"), cfg.level, "--index")
    regularized = args.regularized == "yes"
    if not regularized and not w.mes_admissible():
        raise UsageError("plain expansion needs all exponents >= 2; use --regularized")
    fe = (G_sha_fourier if regularized else G_fourier)(w, cfg.order, cfg.ctx)
    payload = {"schema": SCHEMA, **fe.to_json()}
    c = _digits(cfg.precision)
    with mp.workprec(cfg.precision + 16):
        lines = [
            f"G{'_sha' if regularized else ''}({w}), N={cfg.level}, order {cfg.order},"
            f" error <= {mp.nstr(fe.error_bound, 3)}:"
        ]
        lines += [f"  q^{m}: {mp.nstr(fe.coeffs[m], c)}" for m in range(cfg.order + 1)]
    _emit(cfg, lines, payload)
    return 0


def _run_relation(cfg: Config, args):
    ctx, M, N = cfg.ctx, cfg.order, cfg.level
    tol = args.tolerance
    rid = args.relation

    def need(cond, msg):
        if not cond:
            raise UsageError(msg)

    if rid == "double-shuffle":
        need(args.w1 and args.w2, "double-shuffle needs --w1 and --w2")
        w1 = _as_word(_parse_json(args.w1, "--w1"), N, "--w1")
        w2 = _as_word(_parse_json(args.w2, "--w2"), N, "--w2")
        return [check_restricted_double_shuffle(w1, w2, M, ctx, tol)]
    if rid == "distribution":
        need(args.exponents, "distribution needs --exponents")
        ns = _parse_json(args.exponents, "--exponents")
        need(
            isinstance(ns, list) and all(isinstance(n, int) for n in ns),
            "--exponents must be a JSON list of integers",
        )
        return [check_distribution(N, ns, M, ctx, tol)]
    if rid == "sum-formula":
        need(args.weight is not None, "sum-formula needs --weight")
        return [check_sum_formula(N, args.weight, args.residue or 0, M, ctx, tol)]
    if rid == "weighted-sum":
        need(args.weight is not None, "weighted-sum needs --weight")
        return [check_weighted_sum_formula(N, args.weight, args.residue or 0, M, ctx, tol)]
    if rid == "genfun":
        need(args.weight is not None, "genfun needs --weight")
        return [
            check_gen_function_identity(
                N, args.weight, args.a1 or 0, args.a2 or 0, M, ctx, tol
            )
        ]
    if rid == "antipode":
        need(args.index, "antipode needs --index")
        w = _as_word(_parse_json(args.index, "--index"), N, "--index")
        ns = [n for n, _ in w.letters]
        avec = [a for _, a in w.letters]
        return [check_antipode_zeta(N, ns, avec, ctx, tol)]
    if rid == "cusp-demo":
        return [cusp_decomposition_demo(M, ctx, tol)]
    raise UsageError(
        f"unknown relation {rid!r}; pick from double-shuffle, distribution, "
        "sum-formula, weighted-sum, genfun, antipode, cusp-demo"
    )


def _cmd_check(cfg: Config, args) -> int:
    if bool(args.relation) == bool(args.suite):
        raise UsageError("check needs exactly one of --relation or --suite")
    if args.suite:
        if args.suite != "default":
            raise UsageError(f"unknown suite {args.suite!r}; only 'default' exists")
        reports = run_default_suite(cfg.order, cfg.ctx, args.tolerance)
    else:
        reports = _run_relation(cfg, args)
    if cfg.fmt == "json":
        print(json.dumps([{"schema": SCHEMA, **r.to_json()} for r in reports]))
    else:
        for r in reports:
            extra = f"  {r.details}" if r.details else ""
            print(
                f"{r.verdict.upper():4s} {r.relation}  residual={r.residual:.3e}"
                f"  tolerance={r.tolerance:.1e}  {r.parameters}{extra}"
            )
    return 0 if all(r.passed for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("configuration")
    g.add_argument("--level", "-N", type=int, default=None, help="level N (default 2)")
    g.add_argument("--order", "-M", type=int, default=None, help="q-order M (default 15)")
    g.add_argument("--precision", type=int, default=None, help="precision bits (default 192)")
    g.add_argument("--cutoff", "-K", type=int, default=None, help="series cutoff (default 100000)")
    g.add_argument("--format", choices=("text", "json"), default=None, help="output format")
    g.add_argument("--json", action="store_true", help="shorthand for --format json")

    p = argparse.ArgumentParser(prog="mes", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("product", parents=[common], help="multiply word combinations")
    sp.add_argument("--op", choices=("sha", "ast", "tsha", "tast"), required=True)
    sp.add_argument("--lhs", required=True, help="word [[n,a],...] or LinComb JSON")
    sp.add_argument("--rhs", required=True, help="word [[n,a],...] or LinComb JSON")

    sp = sub.add_parser("coproduct", parents=[common], help="level-N coproduct of a word")
    sp.add_argument("--index", required=True, help="word as [[n,a],...]")

    sp = sub.add_parser("gseries", parents=[common], help="multiple divisor q-series")
    sp.add_argument("--index", required=True, help="word as [[n,a],...]")
    sp.add_argument("--regularized", nargs="?", const="yes", default="no", choices=("yes", "no"))

    sp = sub.add_parser("eval", parents=[common], help="numeric evaluation")
    sp.add_argument("--what", choices=("zeta", "zeta-sha", "mono", "multi"), required=True)
    sp.add_argument("--index", help="word as [[n,a],...]")
    sp.add_argument("--n", type=int, help="monotangent exponent")
    sp.add_argument("--a", type=int, help="monotangent residue")
    sp.add_argument("--tau", help="upper half plane point, e.g. '0.3+1.1j'")

    sp = sub.add_parser("expand", parents=[common], help="Fourier expansion of a series")
    sp.add_argument("--index", required=True, help="word as [[n,a],...]")
    sp.add_argument("--regularized", nargs="?", const="yes", default="no", choices=("yes", "no"))

    sp = sub.add_parser("check", parents=[common], help="verify relations")
    sp.add_argument("--relation", help="relation id")
    sp.add_argument("--suite", help="suite name (default)")
    sp.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    sp.add_argument("--w1", help="first word for double-shuffle")
    sp.add_argument("--w2", help="second word for double-shuffle")
    sp.add_argument("--index", help="word for antipode")
    sp.add_argument("--exponents", help="JSON list of exponents for distribution")
    sp.add_argument("--weight", type=int, help="weight k for sum/weighted/genfun")
    sp.add_argument("--residue", type=int, help="residue a for sum/weighted formulas")
    sp.add_argument("--a1", type=int, help="first residue for genfun")
    sp.add_argument("--a2", type=int, help="second residue for genfun")
    return p


_COMMANDS = {
    "product": _cmd_product,
    "coproduct": _cmd_coproduct,
    "gseries": _cmd_gseries,
    "eval": _cmd_eval,
    "expand": _cmd_expand,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = Config(args)
        return _COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
