"""Command-line front end.

Every subcommand parses its inputs, calls one library function and prints
JSON (or TSV for tables) on stdout.  Exit codes: 0 success, 1 domain error
(JSON description on stderr), 2 failed verification, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bialgebra_block as bb
from . import bialgebra_gap as bg
from . import characters as ch
from . import comodule, moments
from .block_operad import block_substitute, verify_block_operad
from .errors import CumulantKitError, UnsupportedForCrossing
from .gap_operad import compose_full, compose_partial, verify_gap_operad, check_corolla_relation
from .partitions import (
    Composition,
    enumerate_noncrossing_partitions,
    enumerate_set_partitions,
    nc_closure,
    parse_partition,
)

ENV_MAX_DEGREE = "CUMULANT_KIT_MAX_DEGREE"
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def rational(x) -> str:
    return str(Fraction(x))


def _json_arg(text: str):
    """Decode JSON arrays/objects; anything else stays a string (e.g. ``"1,2,5|3,4"``)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return text
    return data if isinstance(data, (list, dict)) else text


def _word(text: str) -> tuple:
    data = _json_arg(text)
    if isinstance(data, list) and data and all(isinstance(x, (dict, str)) for x in data):
        return tuple(parse_partition(x) for x in data)
    if isinstance(data, list) and not data:
        return ()
    return (parse_partition(data),)


def _composition(data) -> Composition:
    if isinstance(data, str):
        data = _json_arg(data)
    if isinstance(data, str):
        return Composition.from_ordered_blocks([[int(x) for x in b.split(",")] for b in data.split("|")])
    return Composition.from_ordered_blocks(data["blocks"])


def _default_degree() -> int:
    raw = os.environ.get(ENV_MAX_DEGREE, "6")
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{ENV_MAX_DEGREE}={raw!r} is not an integer") from exc
    if value < 0:
        raise UsageError(f"{ENV_MAX_DEGREE} must be non-negative")
    return value


def _parts(mode: str, n: int):
    return enumerate_noncrossing_partitions(n) if mode == "nc" else enumerate_set_partitions(n)


def _tensor_json(T, legs) -> list:
    rows = []
    for key, c in T.items():
        row = {name: [P.to_json() for P in leg] for name, leg in zip(legs, key)}
        row["coeff"] = rational(c)
        rows.append(row)
    rows.sort(key=lambda r: json.dumps(r, sort_keys=True))
    return rows


# ---------------------------------------------------------------- handlers

def cmd_enumerate(a):
    rows = _parts(a.mode, a.n)
    if a.format == "tsv":
        return "\n".join(f"{P.n}\t{P.k}\t{P.to_text()}" for P in rows)
    return [P.to_json() for P in rows]


def cmd_gap_compose(a):
    outer = parse_partition(_json_arg(a.outer))
    if a.inputs is not None:
        return compose_full(outer, [parse_partition(x) for x in _json_arg(a.inputs)]).to_json()
    if a.gap is None or a.inner is None:
        raise UsageError("gap-compose needs --gap and --inner, or --inputs")
    return compose_partial(outer, a.gap, parse_partition(_json_arg(a.inner))).to_json()


def cmd_block_compose(a):
    outer = _composition(a.outer)
    inputs = [_composition(x) for x in _json_arg(a.inputs)]
    return block_substitute(outer, inputs).to_json()


def cmd_coproduct(a):
    word = _word(a.input)
    side, _, mode = a.algebra.partition("-")
    noncrossing = mode != "sp" if side == "block" else mode == "nc"
    if noncrossing:
        for P in word:
            if P.n and nc_closure(P) != P:
                raise UnsupportedForCrossing(f"{P} is crossing")
    if side == "block":
        if a.half or a.unreduced:
            raise UsageError("--half and --unreduced apply to the gap algebra only")
        return _tensor_json(bb.delta_block(tuple(P for P in word if P.n), noncrossing), ("left", "right"))
    if a.unreduced:
        if a.half:
            raise UsageError("--half applies to the reduced coproduct")
        return _tensor_json(bg.delta0(word), ("left", "right"))
    word = bg.reduce_monomial(word)
    f = {None: bg.delta, "prec": bg.delta_prec, "succ": bg.delta_succ}[a.half]
    return _tensor_json(f(word), ("left", "right"))


def cmd_nc_closure(a):
    return nc_closure(parse_partition(_json_arg(a.input))).to_json()


def cmd_nc_star(a):
    T = bg.nc_star(_word(a.input))
    rows = [{"word": [P.to_json() for P in w], "coeff": rational(c)} for w, c in T.items()]
    return sorted(rows, key=lambda r: json.dumps(r, sort_keys=True))


def cmd_moebius(a):
    nc = a.mode == "nc"
    mu = ch.moebius(nc, a.n)
    rows = [(P, mu(P)) for n in range(1, a.n + 1) for P in _parts(a.mode, n)]
    if a.format == "tsv":
        return "\n".join(f"{P.to_text()}\t{rational(v)}" for P, v in rows)
    return [{"partition": P.to_json(), "mu": rational(v)} for P, v in rows]


def _psi_form(which: str, inverse: bool, N: int):
    base = {"prec": ch.psi_prec, "succ": ch.psi_succ, "star": ch.psi_star}[which](N)
    if not inverse:
        return base
    return ch.convolution_inverse(ch.to_block(base))


def cmd_psi(a):
    if a.input is not None:
        P = parse_partition(_json_arg(a.input))
        return rational(_psi_form(a.which, a.inverse, max(P.n, 1))(P))
    N = a.n if a.n is not None else _default_degree()
    form = _psi_form(a.which, a.inverse, N)
    return [{"partition": P.to_json(), "value": rational(form(P))}
            for n in range(1, N + 1) for P in enumerate_noncrossing_partitions(n)]


def _sequence(text: str | None, n: int | None, symbolic: bool, letter: str):
    data = _json_arg(text) if text is not None else None
    if symbolic:
        if isinstance(data, list) and len(data) == 2 and isinstance(data[0], str) and isinstance(data[1], int):
            return data[0], data[1]
        if n is None:
            raise UsageError("--symbolic needs --n or a [name, order] pair")
        return (data if isinstance(data, str) else letter), n
    if not isinstance(data, list):
        raise UsageError("expected a JSON array of rationals")
    try:
        seq = [Fraction(x) for x in data]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"not a rational sequence: {data!r}") from exc
    return seq[:n] if n is not None else seq


def symbolic_table(flavor: str, n: int, direction: str = "moments", name: str | None = None) -> list[str]:
    """Rendered polynomials: moments in graded-lex order, cumulants in the reverse order."""
    name = name or ("k" if direction == "moments" else "m")
    polys = moments.symbolic_table(flavor, n, direction)
    return [p.to_string(name, ascending=direction == "cumulants") for p in polys]


def _transform(a, direction: str, given: str, letter: str):
    parsed = _sequence(given, a.n, a.symbolic, letter)
    if a.symbolic:
        name, order = parsed
        return symbolic_table(a.flavor, order, direction, name)
    f = moments.moments if direction == "moments" else moments.cumulants
    return [rational(x) for x in f(a.flavor, parsed)]


def cmd_moments(a):
    return _transform(a, "moments", a.cumulants, "k")


def cmd_cumulants(a):
    return _transform(a, "cumulants", a.moments, "m")


def cmd_phi(a):
    iv = bb.LatticeInterval(parse_partition(_json_arg(a.lower)), parse_partition(_json_arg(a.upper)))
    return [P.to_json() for P in bb.phi(iv)]


class VerificationFailed(Exception):
    def __init__(self, report):
        self.report = report


def cmd_verify(a):
    n = a.max_degree if a.max_degree is not None else _default_degree()
    if a.suite == "comodule":
        report = comodule.verify_comodule_bialgebra(n, a.mode)
    elif a.suite == "unshuffle":
        report = comodule.verify_unshuffle_comodule(n, a.mode)
    elif a.suite == "coalgebra-maps":
        report = comodule.verify_coalgebra_maps(n, a.mode)
    else:
        gap = verify_gap_operad(n, noncrossing_only=a.mode == "nc")
        block = verify_block_operad(min(n, 5), noncrossing_only=a.mode != "sp")
        corolla = all(check_corolla_relation(m, k) for m in range(1, 9) for k in range(1, 9))
        report = {"suite": "operads", "max_degree": n, "gap": gap, "block": block,
                  "corolla_relation": corolla, "passed": gap["passed"] and block["passed"] and corolla}
    if not a.verbose:
        report.pop("checks", None)
    if a.out:
        with open(a.out, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
    if not report["passed"]:
        raise VerificationFailed(report)
    return {k: report[k] for k in ("suite", "max_degree", "passed")}


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cumulant-kit", description="Operads and incidence bialgebras on set partitions, with moment-cumulant transforms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("enumerate", help="list all (noncrossing) partitions of [n]")
    s.add_argument("--mode", choices=("nc", "sp"), default="nc")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("json", "tsv"), default="json")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("gap-compose", help="gap insertion P ⋄_i Q, or full composition with --inputs")
    s.add_argument("--outer", required=True)
    s.add_argument("--gap", type=int)
    s.add_argument("--inner")
    s.add_argument("--inputs", help="JSON array of deg(P)+1 partitions")
    s.set_defaults(func=cmd_gap_compose)

    s = sub.add_parser("block-compose", help="block substitution into a composition")
    s.add_argument("--outer", required=True, help='composition, blocks in numbering order, e.g. "1,5,6|2,3,4"')
    s.add_argument("--inputs", required=True, help="JSON array of compositions")
    s.set_defaults(func=cmd_block_compose)

    s = sub.add_parser("coproduct", help="coproduct of a partition or word of partitions")
    s.add_argument("--algebra", choices=("gap", "gap-nc", "gap-sp", "block", "block-nc", "block-sp"), default="gap-nc")
    s.add_argument("--half", choices=("prec", "succ"))
    s.add_argument("--unreduced", action="store_true", help="keep empty partitions (the coproduct of B⋄)")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_coproduct)

    s = sub.add_parser("nc-closure", help="finest noncrossing coarsening")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_nc_closure)

    s = sub.add_parser("nc-star", help="all set partitions closing to the given noncrossing partition(s)")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_nc_star)

    s = sub.add_parser("moebius", help="Möbius function on all partitions up to degree n")
    s.add_argument("--mode", choices=("nc", "sp"), default="nc")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("json", "tsv"), default="json")
    s.set_defaults(func=cmd_moebius)

    s = sub.add_parser("psi", help="the universal characters psi<, psi>, psi* or their inverses")
    s.add_argument("--which", choices=("prec", "succ", "star"), required=True)
    s.add_argument("--inverse", action="store_true")
    s.add_argument("--input")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_psi)

    for name, given in (("moments", "--cumulants"), ("cumulants", "--moments")):
        s = sub.add_parser(name, help=f"{name} from {given[2:]}")
        s.add_argument("--flavor", choices=moments.FLAVORS, default="free")
        s.add_argument(given, dest=given[2:])
        s.add_argument("--n", type=int)
        s.add_argument("--symbolic", action="store_true")
        s.set_defaults(func=cmd_moments if name == "moments" else cmd_cumulants)

    s = sub.add_parser("phi", help="fibre of the interval [lower, upper]")
    s.add_argument("--lower", required=True)
    s.add_argument("--upper", required=True)
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("verify", help="exhaustive verification sweeps")
    s.add_argument("--suite", choices=("comodule", "unshuffle", "coalgebra-maps", "operads"), required=True)
    s.add_argument("--max-degree", type=int)
    s.add_argument("--mode", choices=("nc", "sp", "both"), default="nc")
    s.add_argument("--out")
    s.add_argument("--verbose", action="store_true", help="keep per-input check records in the report")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        for name in ("n", "max_degree"):
            v = getattr(args, name, None)
            if v is not None and v < 0:
                raise UsageError(f"--{name.replace('_', '-')} must be non-negative")
        out = args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"cumulant-kit: error: {exc}\n")
        return EXIT_USAGE
    except VerificationFailed as exc:
        sys.stdout.write(json.dumps({k: exc.report[k] for k in ("suite", "max_degree", "passed")}) + "\n")
        return EXIT_VERIFY
    except CumulantKitError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return EXIT_DOMAIN
    if isinstance(out, str):
        sys.stdout.write(out + "\n")
    else:
        sys.stdout.write(json.dumps(out) + "\n")
    return 0


def main() -> None:
    raise SystemExit(run())
