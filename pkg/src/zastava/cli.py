"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Results go
to standard output (or ``--output``), diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import emit, icstalks, kernels
from .errors import ZastavaError
from .icstalks import COSTALK, STALK
from .partitions import concat, count_partitions, enumerate_partitions
from .pidhom import (
    ChainComplex,
    PrimeSpec,
    euler_characteristic,
    homology,
    smith_normal_form,
    tensor_homology_dims,
)
from .qkostant import kostant_q, kostant_q_bruteforce
from .ring import IntMatrix
from .rootdata import group_dims, root_system
from .strata import bunU_strata, drinfeld_strata, sympower_strata, zastava_strata

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def coweight_arg(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def _root_system(args):
    if getattr(args, "cartan", None):
        return root_system(args.cartan)
    if not getattr(args, "type", None):
        raise UsageError("one of --type or --cartan is required")
    return root_system(args.type)


def _write(args, text: str):
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def cmd_roots(args):
    rs = _root_system(args)
    dims = group_dims(rs, args.torus_rank)
    _write(args, emit.dumps({
        "type": rs.name,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "positive_coroots": [list(c) for c in rs.positive_coroots],
        "positive_roots": [list(c) for c in rs.positive_roots],
        "dims": {"T": dims.dim_T, "U": dims.dim_U, "B": dims.dim_B},
    }))
    return 0


def cmd_kostant(args):
    rs = _root_system(args)
    lam = rs.coweight(args.lam)
    poly = kostant_q_bruteforce(rs, lam) if args.oracle else kostant_q(rs, lam)
    _write(args, emit.polynomial(poly, args.format))
    return 0


def cmd_partitions(args):
    rs = _root_system(args)
    nu = rs.coweight(args.nu)
    if args.count_only:
        _write(args, f"{count_partitions(nu)}\n")
    else:
        _write(args, emit.partitions(enumerate_partitions(nu, cap=args.cap), args.format))
    return 0


def cmd_strata(args):
    rs = _root_system(args)
    if args.space == "zastava":
        records = zastava_strata(rs, _need(args, "mu"))
    elif args.space == "sympower":
        records = sympower_strata(rs, _need(args, "mu"))
    elif args.space == "drinfeld":
        records = drinfeld_strata(rs, _need(args, "lam"), _need(args, "genus"),
                                  _torus_rank(args, rs), _need(args, "cutoff"))
    else:
        records = bunU_strata(rs, _need(args, "genus"), _need(args, "cutoff"))
    _write(args, emit.strata(records, args.format))
    return 0


def _need(args, name):
    value = getattr(args, name, None)
    if value is None:
        flag = "--lambda" if name == "lam" else "--" + name.replace("_", "-")
        raise UsageError(f"{flag} is required here")
    return value


def _torus_rank(args, rs):
    return rs.rank if args.torus_rank is None else args.torus_rank


def _build_table(args, rs, side):
    if args.space == "zastava":
        return icstalks.zastava_stalk_table(rs, _need(args, "mu"), side, jobs=args.jobs)
    if args.space == "drinfeld":
        return icstalks.drinfeld_stalk_table(
            rs, _need(args, "lam"), _need(args, "genus"), _torus_rank(args, rs),
            _need(args, "cutoff"), side, jobs=args.jobs)
    return icstalks.bunU_stalk_table(rs, _need(args, "genus"), _need(args, "cutoff"), side,
                                     jobs=args.jobs)


def cmd_stalks(args, side=None):
    rs = _root_system(args)
    table = _build_table(args, rs, side or args.side)
    _write(args, emit.table(table, args.format))
    return 0


def _verify_table_pair(rs, stalks, costalks, lines):
    reports = [
        icstalks.reindex_check(stalks),
        icstalks.reindex_check(costalks),
        icstalks.parity_check(stalks),
        icstalks.parity_check(costalks),
        icstalks.support_condition_check(stalks),
        icstalks.duality_check(stalks, costalks),
    ]
    for r in reports:
        lines.append(str(r))
    return all(reports)


def _multiplicativity(rs, gammas, pairs, rng, lines):
    cache = {}
    bad = []
    for _ in range(pairs):
        g1, g2 = rng.choice(gammas), rng.choice(gammas)
        lhs = icstalks.stalk_poly_for_partition(rs, concat(g1, g2), cache)
        rhs = (icstalks.stalk_poly_for_partition(rs, g1, cache)
               * icstalks.stalk_poly_for_partition(rs, g2, cache))
        if lhs != rhs:
            bad.append(f"  product mismatch for {g1} and {g2}")
    lines.append(f"multiplicativity: {'pass' if not bad else 'FAIL'} ({pairs} random pairs)")
    lines += bad
    return not bad


def cmd_verify(args):
    lines = []
    if args.from_file:
        data = _read_json(args.from_file)
        try:
            table = icstalks.table_from_json(data)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed table file: {exc}")
        lines.append(f"# verify from-file={args.from_file} side={table.side}")
        reports = [icstalks.consistency_check(table), icstalks.reindex_check(table),
                   icstalks.parity_check(table)]
        if table.side == STALK:
            reports.append(icstalks.support_condition_check(table))
        lines += [str(r) for r in reports]
        ok = all(reports)
    else:
        rs = _root_system(args)
        if args.mu is not None:
            args.space = "zastava"
            head = f"mu={','.join(map(str, args.mu))}"
        elif args.cutoff is not None and args.genus is not None:
            args.space = "drinfeld" if args.lam is not None else "bunU"
            head = (f"space={args.space} genus={args.genus} cutoff={','.join(map(str, args.cutoff))}")
        else:
            raise UsageError("verify needs --mu, or --genus and --cutoff (with --lambda for Drinfeld)")
        lines.append(f"# verify type={rs.name or 'custom'} {head} seed={args.seed} "
                     f"backend={kernels.BACKEND}")
        stalks = _build_table(args, rs, STALK)
        costalks = _build_table(args, rs, COSTALK)
        ok = _verify_table_pair(rs, stalks, costalks, lines)
        bound = args.mu if args.mu is not None else args.cutoff
        positives = icstalks.all_strictly_positive(bound)
        bad = [nu for nu in positives if not icstalks.crosscheck_gaitsgory(rs, nu)]
        lines.append(f"gaitsgory: {'pass' if not bad else 'FAIL'} ({len(positives)} coweights)")
        lines += [f"  q*P^nu != P(nu, q^2) at nu={list(nu)}" for nu in bad]
        ok = ok and not bad
        gammas = [e.stratum.gamma for e in stalks.entries]
        rng = random.Random(args.seed)
        ok = _multiplicativity(rs, gammas, args.random_pairs, rng, lines) and ok
    lines.append("OK" if ok else "FAILED")
    _write(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def _load_matrix(path):
    data = _read_json(path)
    if isinstance(data, dict):
        if "rows" in data and "entries" in data:
            return IntMatrix(int(data["rows"]), int(data["cols"]), tuple(data["entries"]))
        data = data["matrix"]
    return IntMatrix.from_rows(data)


def _load_complex(path):
    return ChainComplex.from_json(_read_json(path))


def cmd_snf(args):
    form = smith_normal_form(_load_matrix(args.matrix))
    _write(args, emit.dumps({
        "U": form.U.to_rows(), "D": form.D.to_rows(), "V": form.V.to_rows(),
        "invariant_factors": list(form.invariant_factors),
    }))
    return 0


def cmd_homology(args):
    H = homology(_load_complex(args.complex))
    _write(args, emit.dumps({
        str(i): {"rank": h.rank, "torsion": list(h.torsion)} for i, h in H.items()
    }))
    return 0


def cmd_uct(args):
    M = _load_complex(args.complex)
    primes = [PrimeSpec.zero()] + [PrimeSpec.parse(p) for p in args.primes]
    out, ok = {}, True
    chis = set()
    for prime in dict.fromkeys(primes):
        dims = tensor_homology_dims(M, prime)
        chi = euler_characteristic(M, prime)
        chis.add(chi)
        ok = ok and dims.agree
        out[str(prime)] = {
            "formula": {str(k): v for k, v in dims.formula.items()},
            "direct": {str(k): v for k, v in dims.direct.items()},
            "agree": dims.agree,
            "euler_characteristic": chi,
        }
    module_chi = sum((-1) ** (i % 2) * M.rank(i) for i in M.degrees)
    ok = ok and chis == {module_chi}
    out["euler_independent"] = chis == {module_chi}
    _write(args, emit.dumps(out))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zastava", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    rsys = argparse.ArgumentParser(add_help=False)
    rsys.add_argument("--type", help="named root system, e.g. A2, B3, G2")
    rsys.add_argument("--cartan", metavar="FILE", help="JSON Cartan matrix file")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    out.add_argument("--output", metavar="FILE")

    geo = argparse.ArgumentParser(add_help=False)
    geo.add_argument("--mu", type=coweight_arg)
    geo.add_argument("--lambda", dest="lam", type=coweight_arg)
    geo.add_argument("--genus", type=nonneg_int)
    geo.add_argument("--torus-rank", type=nonneg_int)
    geo.add_argument("--cutoff", type=coweight_arg)

    p = sub.add_parser("roots", parents=[rsys, out], help="positive coroots and group dimensions")
    p.add_argument("--torus-rank", type=nonneg_int)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("kostant", parents=[rsys, out], help="q-analogue of Kostant's partition function")
    p.add_argument("--lambda", dest="lam", type=coweight_arg, required=True)
    p.add_argument("--oracle", action="store_true", help="use brute-force enumeration")
    p.set_defaults(func=cmd_kostant)

    p = sub.add_parser("partitions", parents=[rsys, out], help="partitions of a coweight")
    p.add_argument("--nu", type=coweight_arg, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--cap", type=nonneg_int, default=10**6)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("strata", parents=[rsys, out, geo], help="stratum catalogs with dimensions")
    p.add_argument("space", choices=["zastava", "drinfeld", "sympower", "bunU"])
    p.set_defaults(func=cmd_strata)

    for name, side in (("stalks", None), ("costalks", COSTALK)):
        p = sub.add_parser(name, parents=[rsys, out, geo], help=f"IC {name} tables")
        p.add_argument("space", choices=["zastava", "drinfeld", "bunU"])
        if side is None:
            p.add_argument("--side", choices=[STALK, COSTALK], default=STALK)
        p.add_argument("--jobs", type=nonneg_int, default=1)
        p.set_defaults(func=lambda a, s=side: cmd_stalks(a, s))

    p = sub.add_parser("verify", parents=[rsys, geo], help="run all table validators")
    p.add_argument("--from-file", metavar="FILE")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--random-pairs", type=nonneg_int, default=100)
    p.add_argument("--jobs", type=nonneg_int, default=1)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("homology", help="integral cohomology of a free complex")
    p.add_argument("--complex", required=True, metavar="FILE")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("uct-check", help="universal coefficients and Euler characteristic")
    p.add_argument("--complex", required=True, metavar="FILE")
    p.add_argument("--primes", type=lambda s: s.split(","), default=["2", "3", "5"])
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_uct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ZastavaError, ValueError) as exc:
        print(f"zastava {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
