"""Command line front end.

Exit status: 0 on success, 1 when a verification verb found a mismatch,
2 on usage errors (bad flags, malformed partitions, invalid moduli).
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .affine import WeightLabel, multiplicity_series, weight_basis
from .lr import lr_coefficient
from .maya import r_decompose
from .partition import Partition, partitions_of
from .reduce import basic_series, basic_set, count_no_multiples, decompose, verify_theorem
from .schur import reduced_schur, schur_in_t

MAX_SIZE_CAP = 14


def partition_arg(text: str) -> Partition:
    """Accept '3,1', '[3,1]', '[]' or '' (the empty partition)."""
    text = text.strip()
    try:
        if text.startswith("["):
            parts = json.loads(text)
        elif text:
            parts = [int(p) for p in text.split(",")]
        else:
            parts = []
        return Partition(parts)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def modulus_arg(text: str) -> int:
    r = int(text)
    if r < 2:
        raise argparse.ArgumentTypeError("r must be >= 2")
    return r


def fmt_partition(lam) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redschur",
        description="Reduced Schur functions, abacus combinatorics, and the "
        "basic-set decomposition.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, help_, **flags):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("json", "text"), default="json")
        for flag, (kind, required, default) in flags.items():
            p.add_argument(f"--{flag}", dest=flag.replace("-", "_"), type=kind,
                           required=required, default=default)
        return p

    add("core-quotient", "r-core, r-quotient and sign of a partition",
        **{"lambda": (partition_arg, True, None), "r": (modulus_arg, True, None)})
    add("schur", "Schur function in the t variables",
        **{"lambda": (partition_arg, True, None)})
    add("reduce", "reduced Schur function (t_r = t_2r = ... = 0)",
        **{"lambda": (partition_arg, True, None), "r": (modulus_arg, True, None)})
    add("lr", "Littlewood-Richardson coefficient LR^nu_{lambda,mu}",
        **{"nu": (partition_arg, True, None), "lambda": (partition_arg, True, None),
           "mu": (partition_arg, True, None)})
    add("decompose", "decomposition over the basic set",
        **{"lambda": (partition_arg, True, None), "r": (modulus_arg, True, None)})
    add("verify", "sweep the decomposition identity over all small partitions",
        **{"r": (modulus_arg, True, None), "max-size": (int, False, 8),
           "jobs": (int, False, 1)})
    add("basic-set", "basic set in a given degree",
        **{"r": (modulus_arg, True, None), "n": (int, True, None)})
    add("weights", "weight-space basis over a given core",
        **{"lambda": (partition_arg, True, None), "r": (modulus_arg, True, None),
           "n": (int, True, None)})
    add("count-check", "cross-check basic-set counts against q-series",
        **{"r": (modulus_arg, True, None), "n": (int, False, 10)})
    return parser


def _cmd_core_quotient(args):
    cq = r_decompose(getattr(args, "lambda"), args.r)
    emit(args, cq.to_dict(), [
        f"r: {cq.r}",
        f"core: {fmt_partition(cq.core)}",
        "quotient: " + " ".join(fmt_partition(q) for q in cq.quotient),
        f"sign: {cq.sign:+d}",
    ])
    return 0


def _cmd_schur(args):
    poly = schur_in_t(getattr(args, "lambda"))
    emit(args, poly.to_dict(), [repr(poly)])
    return 0


def _cmd_reduce(args):
    poly = reduced_schur(getattr(args, "lambda"), args.r)
    emit(args, poly.to_dict(), [repr(poly)])
    return 0


def _cmd_lr(args):
    c = lr_coefficient(args.nu, getattr(args, "lambda"), args.mu)
    emit(args, {
        "nu": list(args.nu),
        "lambda": list(getattr(args, "lambda")),
        "mu": list(args.mu),
        "coefficient": c,
    }, [str(c)])
    return 0


def _cmd_decompose(args):
    dec = decompose(getattr(args, "lambda"), args.r)
    emit(args, dec.to_dict(),
         [f"{fmt_partition(mu)} {c:+d}" for mu, c in dec.terms])
    return 0


def _verify_one(work):
    lam_parts, r = work
    res = verify_theorem(Partition(lam_parts), r)
    return lam_parts, res.ok, None if res.ok else res.witness.to_dict()


def _cmd_verify(args):
    if not 0 <= args.max_size <= MAX_SIZE_CAP:
        raise ValueError(f"--max-size must be between 0 and {MAX_SIZE_CAP}")
    work = [(tuple(lam), args.r)
            for n in range(args.max_size + 1) for lam in partitions_of(n)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, work))
    else:
        results = [_verify_one(w) for w in work]
    failures = [{"lambda": list(lam), "witness": witness}
                for lam, ok, witness in results if not ok]
    payload = {
        "r": args.r,
        "max_size": args.max_size,
        "checked": len(results),
        "ok": not failures,
        "failures": failures,
    }
    lines = [f"checked {len(results)} partitions of size 0..{args.max_size} "
             f"for r={args.r}"]
    if failures:
        lines += [f"FAIL lambda={fmt_partition(f['lambda'])}" for f in failures]
    else:
        lines.append("all decompositions verified")
    emit(args, payload, lines)
    return 1 if failures else 0


def _cmd_basic_set(args):
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    members = basic_set(args.r, args.n)
    emit(args, {
        "r": args.r,
        "n": args.n,
        "count": len(members),
        "partitions": [list(lam) for lam in members],
    }, [fmt_partition(lam) for lam in members])
    return 0


def _cmd_weights(args):
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    label = WeightLabel(getattr(args, "lambda"), args.n, args.r)
    basis = weight_basis(label)
    emit(args, {
        "r": args.r,
        "core": list(label.core),
        "depth": args.n,
        "multiplicity": len(basis),
        "basis": [list(lam) for lam in basis],
    }, [f"multiplicity: {len(basis)}"] + [fmt_partition(lam) for lam in basis])
    return 0


def _cmd_count_check(args):
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    series = basic_series(args.r, args.n)
    rows = []
    ok = True
    for n in range(args.n + 1):
        b, d = len(basic_set(args.r, n)), count_no_multiples(args.r, n)
        rows.append({"n": n, "basic": b, "series": series[n], "direct": d})
        ok = ok and b == series[n] == d
    emit(args, {"r": args.r, "max_n": args.n, "ok": ok, "counts": rows},
         [f"n={row['n']}: basic={row['basic']} series={row['series']} "
          f"direct={row['direct']}" for row in rows] +
         ["all counts agree" if ok else "COUNT MISMATCH"])
    return 0 if ok else 1


_HANDLERS = {
    "core-quotient": _cmd_core_quotient,
    "schur": _cmd_schur,
    "reduce": _cmd_reduce,
    "lr": _cmd_lr,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "basic-set": _cmd_basic_set,
    "weights": _cmd_weights,
    "count-check": _cmd_count_check,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.verb](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
