"""Command line front end: ``varregion <command> ...``.

Every command prints exactly one JSON document on stdout. Exit codes:
0 success, 1 invalid input (precondition violation, infeasible data),
2 numerical failure, 3 verification failure (``verify`` only).
Field names are documented in ``docs/cli_schema.md``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .dieudonne import DieudonneData, dieudonne_disk, extremal_h_series, w_from_gamma, gamma_from_w
from .errors import InvalidInputError, NumericalError, VarRegionError
from .moebius import BlaschkeProduct
from .oracle import TrialConfig, run_roundtrips
from .schur import HyperbolicData, hyperbolic_derivatives
from .taylor import working_order
from .variability import ExtremalSpec, classify, disk_nth, extremal_series, tail_series

SEED_ENV = "VARREGION_SEED"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2
EXIT_VERIFY_FAILED = 3


class ParseError(InvalidInputError):
    kind = "parse_error"


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"``-style text (``i`` or ``j``) or a ``"[re, im]"`` pair."""
    s = text.strip()
    if not s:
        raise ParseError("empty complex number")
    try:
        if s.startswith("["):
            re_, im_ = json.loads(s)
            return complex(float(re_), float(im_))
        return complex(s.replace(" ", "").replace("i", "j"))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"cannot parse complex number {text!r}") from exc


def parse_complex_list(text: str) -> list[complex]:
    """Comma-separated complex numbers; commas inside ``[...]`` do not split."""
    s = text.strip()
    if not s:
        return []
    if s.startswith("[["):
        try:
            return [complex(float(a), float(b)) for a, b in json.loads(s)]
        except (ValueError, TypeError) as exc:
            raise ParseError(f"cannot parse complex list {text!r}") from exc
    items, depth, cur = [], 0, []
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    return [parse_complex(item) for item in items]


def cjson(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, allow_nan=False)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _check_n(n: int | None, length: int, what: str) -> int:
    if n is None:
        return length
    if n < 1:
        raise InvalidInputError("--n must be >= 1")
    if n != length:
        raise InvalidInputError(f"--n {n} needs {n} {what}, got {length}")
    return n


def cmd_disk(args) -> dict:
    gammas = parse_complex_list(args.gammas)
    n = _check_n(args.n, len(gammas), "gammas (gamma_0 .. gamma_{n-1})")
    data = HyperbolicData(parse_complex(args.z0), tuple(gammas))
    disk = disk_nth(data, n)
    return {"center": cjson(disk.center), "radius": disk.radius, "branch": classify(data).label}


def cmd_dieudonne(args) -> dict:
    z0, w0 = parse_complex(args.z0), parse_complex(args.w0)
    if args.ws is not None:
        ws = parse_complex_list(args.ws)
        n = _check_n(args.n, len(ws) + 1, "entries: w_1 .. w_{n-1} plus w0")
        chain = gamma_from_w(DieudonneData(z0, w0, ws=tuple(ws)))
        gammas, degenerate_at = chain.gammas, chain.degenerate_at
    else:
        gammas = parse_complex_list(args.gammas or "")
        n = _check_n(args.n, len(gammas) + 1, "entries: gamma_1 .. gamma_{n-1} plus w0")
        ws = None
        degenerate_at = None
    data = DieudonneData(z0, w0, gammas=tuple(gammas))
    if ws is None:
        ws = w_from_gamma(data)
    disk = dieudonne_disk(data, n)
    branch = classify(data.hyperbolic())
    if degenerate_at is None and hasattr(branch, "j"):
        degenerate_at = branch.j
    return {
        "center": cjson(disk.center),
        "radius": disk.radius,
        "branch": branch.label,
        "gamma0": cjson(data.gamma0),
        "gammas": [cjson(g) for g in gammas],
        "ws": [cjson(w) for w in ws],
        "degenerate_at": degenerate_at,
    }


def _tail(args):
    if args.tail_zeros is not None:
        return BlaschkeProduct(args.tail_theta, tuple(parse_complex_list(args.tail_zeros)))
    return parse_complex(args.eps)


def cmd_extremal(args) -> dict:
    gammas = parse_complex_list(args.gammas)
    n = _check_n(args.n, len(gammas), "gammas (gamma_0 .. gamma_{n-1})")
    z0 = parse_complex(args.z0)
    order = working_order(n) if args.order is None else args.order
    if order < 0:
        raise InvalidInputError("--order must be >= 0")
    tail = _tail(args)
    if args.h:
        data = DieudonneData(z0, gammas[0] * z0, gammas=tuple(gammas[1:]))
        return extremal_h_series(data, tail, order).to_json()
    return extremal_series(ExtremalSpec(HyperbolicData(z0, tuple(gammas)), tail), order).to_json()


def cmd_hyperbolic(args) -> dict:
    B = BlaschkeProduct(args.theta, tuple(parse_complex_list(args.zeros)))
    z0 = parse_complex(args.z0)
    if not abs(z0) < 1:
        raise InvalidInputError(f"|z0| = {abs(z0)} must be < 1")
    f = tail_series(B, args.n, z0)
    return hyperbolic_derivatives(f, args.n).to_json()


def cmd_verify(args) -> dict:
    seed = args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            seed = int(env, 0)
        except ValueError as exc:
            raise ParseError(f"{SEED_ENV}={env!r} is not an integer") from exc
    config = TrialConfig(seed=seed, trials=args.trials, n_max=args.n_max)
    return run_roundtrips(config)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="varregion", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("disk", help="variability disk of f^(n)(z0)")
    d.add_argument("--z0", required=True)
    d.add_argument("--gammas", required=True, help="gamma_0,...,gamma_{n-1}")
    d.add_argument("--n", type=int)
    d.set_defaults(func=cmd_disk)

    h = sub.add_parser("dieudonne", help="variability disk of h^(n)(z0) for h(0) = 0")
    h.add_argument("--z0", required=True)
    h.add_argument("--w0", required=True)
    grp = h.add_mutually_exclusive_group()
    grp.add_argument("--gammas", help="gamma_1,...,gamma_{n-1}")
    grp.add_argument("--ws", help="w_1,...,w_{n-1} (ordinary derivatives of h)")
    h.add_argument("--n", type=int)
    h.set_defaults(func=cmd_dieudonne)

    e = sub.add_parser("extremal", help="Taylor series of the nested extremal function")
    e.add_argument("--z0", required=True)
    e.add_argument("--gammas", required=True, help="gamma_0,...,gamma_{n-1}")
    e.add_argument("--n", type=int)
    e.add_argument("--eps", default="0", help="constant tail, |eps| <= 1")
    e.add_argument("--tail-zeros", help="Blaschke-product tail zeros (overrides --eps)")
    e.add_argument("--tail-theta", type=float, default=0.0)
    e.add_argument("--order", type=int)
    e.add_argument("--h", action="store_true", help="emit h(z) = z f(z) instead of f")
    e.set_defaults(func=cmd_extremal)

    y = sub.add_parser("hyperbolic", help="hyperbolic derivatives of a Blaschke product")
    y.add_argument("--theta", type=float, default=0.0)
    y.add_argument("--zeros", default="")
    y.add_argument("--z0", required=True)
    y.add_argument("--n", type=int, required=True)
    y.set_defaults(func=cmd_hyperbolic)

    v = sub.add_parser("verify", help="randomized cross-checks; exit 3 on failure")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--n-max", type=int, default=5)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
    except VarRegionError as exc:
        print(dumps({"error": exc.to_json()}))
        print(f"varregion: {exc}", file=sys.stderr)
        if isinstance(exc, NumericalError):
            return EXIT_NUMERICAL
        if isinstance(exc, InvalidInputError):
            return EXIT_INVALID
        return EXIT_NUMERICAL
    except (ZeroDivisionError, OverflowError, FloatingPointError) as exc:
        print(dumps({"error": {"kind": "numerical", "message": str(exc)}}))
        print(f"varregion: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    print(dumps(out))
    if args.command == "verify" and not out["pass"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
