"""Batch command-line front end with JSON input/output.

Exit codes: 0 success, 1 domain error (error class name on stderr),
2 argument error (argparse usage message), 3 selftest failure (JSON report
of the first failing case on stdout).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bipartite import (
    BipartiteCode,
    decode_bipartite,
    encode_bipartite,
)
from .codec import HypertreeCode, decode, encode
from .counting import (
    count_bipartite,
    count_hypertrees,
    count_hypertrees_by_sizes,
    count_hypertrees_total,
    multinomial,
    split_identity_check,
    stirling2,
)
from .errors import DomainError, ProfileMismatch
from .model import BipartiteTree, DegreeVector, Hypergraph, Hypertree, SizePartition
from .oracle import (
    DEFAULT_MAX_AB,
    DEFAULT_MAX_N,
    enumerate_bipartite_trees,
    enumerate_hypertrees,
)
from .rng import SplitMix64
from .sampling import sample_bipartite_tree, sample_hypertree, sample_hypertree_uniform
from .selftest import run_selftest


def _int_vector(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read_payload(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _warn_bound(value: int, default: int, what: str) -> None:
    if value > default:
        print(
            f"warning: {what} bound {value} above default {default}; "
            "brute-force enumeration may take a long time",
            file=sys.stderr,
        )


def _cmd_count(args) -> int:
    lam = SizePartition(args.lam) if args.lam is not None else None
    mu = DegreeVector(args.mu) if args.mu is not None else None
    if lam is not None:
        if args.n is not None and args.n != lam.n:
            raise ProfileMismatch(f"--lambda sums to {lam.n}, but --n is {args.n}")
        if args.k is not None and args.k != lam.k:
            raise ProfileMismatch(f"--lambda has {lam.k} parts, but --k is {args.k}")
        result = count_hypertrees(lam, mu) if mu is not None else count_hypertrees_by_sizes(lam)
    else:
        if args.n is None:
            raise ProfileMismatch("--n is required without --lambda")
        n = args.n
        if mu is not None:
            k = mu.k
            if args.k is not None and args.k != k:
                raise ProfileMismatch(f"--mu implies k={k}, but --k is {args.k}")
            if mu.n != n:
                raise ProfileMismatch(f"--mu has {mu.n + 1} entries, expected {n + 1}")
            if not 1 <= k <= n:
                raise ProfileMismatch(f"need 1 <= k <= n, got k={k}, n={n}")
            # degree marginal: sum of the profile count over all shapes
            result = stirling2(n, k) * multinomial(k - 1, mu.mu)
        else:
            if args.k is None:
                raise ProfileMismatch("--k is required without --lambda and --mu")
            result = count_hypertrees_total(n, args.k)
    print(result)
    return 0


def _cmd_bipartite_count(args) -> int:
    a, b = args.a, args.b
    if a < 0 or b < 0:
        raise ProfileMismatch(f"class sizes must be nonnegative, got a={a}, b={b}")
    alpha, beta = args.alpha, args.beta
    if alpha is not None and len(alpha) != a + 1:
        raise ProfileMismatch(f"--alpha needs {a + 1} entries, got {len(alpha)}")
    if beta is not None and len(beta) != b + 1:
        raise ProfileMismatch(f"--beta needs {b + 1} entries, got {len(beta)}")
    if alpha is not None and beta is not None:
        result = count_bipartite(alpha, beta)
    elif alpha is not None:
        if sum(alpha) != b:
            raise ProfileMismatch(f"--alpha sums to {sum(alpha)}, expected b={b}")
        result = multinomial(b, alpha) * (a + 1) ** b
    elif beta is not None:
        if sum(beta) != a:
            raise ProfileMismatch(f"--beta sums to {sum(beta)}, expected a={a}")
        result = multinomial(a, beta) * (b + 1) ** a
    else:
        result = (a + 1) ** b * (b + 1) ** a
    print(result)
    return 0


def _cmd_encode(args) -> int:
    tree = Hypertree(Hypergraph.from_json_dict(_read_payload(args.input)))
    print(encode(tree).dumps())
    return 0


def _cmd_decode(args) -> int:
    code = HypertreeCode.from_json_dict(_read_payload(args.input))
    print(decode(code).dumps())
    return 0


def _cmd_bip_encode(args) -> int:
    tree = BipartiteTree.from_json_dict(_read_payload(args.input))
    print(encode_bipartite(tree).dumps())
    return 0


def _cmd_bip_decode(args) -> int:
    code = BipartiteCode.from_json_dict(_read_payload(args.input))
    print(decode_bipartite(code).dumps())
    return 0


def _cmd_sample(args) -> int:
    rng = SplitMix64(args.seed)
    lam = SizePartition(args.lam) if args.lam is not None else None
    mu = DegreeVector(args.mu) if args.mu is not None else None
    if lam is None and mu is not None:
        raise ProfileMismatch("--mu requires --lambda")
    if lam is not None:
        if args.n is not None and args.n != lam.n:
            raise ProfileMismatch(f"--lambda sums to {lam.n}, but --n is {args.n}")
        for _ in range(args.count):
            print(sample_hypertree(lam, rng, mu).dumps())
    else:
        if args.n is None or args.k is None:
            raise ProfileMismatch("free sampling needs both --n and --k")
        for _ in range(args.count):
            print(sample_hypertree_uniform(args.n, args.k, rng).dumps())
    return 0


def _cmd_bip_sample(args) -> int:
    rng = SplitMix64(args.seed)
    for _ in range(args.count):
        tree = sample_bipartite_tree(args.a, args.b, rng, args.alpha, args.beta)
        print(tree.dumps())
    return 0


def _cmd_enumerate(args) -> int:
    _warn_bound(args.max_n, DEFAULT_MAX_N, "enumeration")
    for tree in enumerate_hypertrees(args.n, args.k, max_n=args.max_n):
        print(tree.dumps())
    return 0


def _cmd_bip_enumerate(args) -> int:
    _warn_bound(args.max_ab, DEFAULT_MAX_AB, "enumeration")
    for tree in enumerate_bipartite_trees(args.a, args.b, max_ab=args.max_ab):
        print(tree.dumps())
    return 0


def _cmd_selftest(args) -> int:
    _warn_bound(args.max_n, DEFAULT_MAX_N, "selftest")
    _warn_bound(args.max_ab, DEFAULT_MAX_AB, "selftest")
    ok, failure, n_checks = run_selftest(
        max_n=args.max_n,
        max_ab=args.max_ab,
        report_sink=lambda report: print(report.dumps()),
    )
    if not ok:
        print(json.dumps(failure, separators=(",", ":")))
        return 3
    print(json.dumps({"status": "ok", "checks": n_checks}, separators=(",", ":")))
    return 0


def _cmd_identity(args) -> int:
    lhs, rhs = split_identity_check(args.n)
    payload = {"n": args.n, "lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs}
    print(json.dumps(payload, separators=(",", ":")))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertrees",
        description="Exact counts, bijective codecs and uniform samplers "
        "for labelled hypertrees and bipartite trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="hypertree counts")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", type=_int_vector, metavar="L1,L2,...")
    p.add_argument("--mu", type=_int_vector, metavar="M0,M1,...")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("bipartite-count", help="bipartite tree counts")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--alpha", type=_int_vector, metavar="A0,A1,...")
    p.add_argument("--beta", type=_int_vector, metavar="B0,B1,...")
    p.set_defaults(func=_cmd_bipartite_count)

    for name, func, what in [
        ("encode", _cmd_encode, "hypertree JSON -> code JSON"),
        ("decode", _cmd_decode, "code JSON -> hypertree JSON"),
        ("bip-encode", _cmd_bip_encode, "bipartite tree JSON -> code JSON"),
        ("bip-decode", _cmd_bip_decode, "code JSON -> bipartite tree JSON"),
    ]:
        p = sub.add_parser(name, help=what)
        p.add_argument("input", nargs="?", default="-", help="path or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("sample", help="sample hypertrees as JSON lines")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", type=_int_vector, metavar="L1,L2,...")
    p.add_argument("--mu", type=_int_vector, metavar="M0,M1,...")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("bip-sample", help="sample bipartite trees as JSON lines")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--alpha", type=_int_vector, metavar="A0,A1,...")
    p.add_argument("--beta", type=_int_vector, metavar="B0,B1,...")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=_cmd_bip_sample)

    p = sub.add_parser("enumerate", help="stream all hypertrees with n, k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("bip-enumerate", help="stream all bipartite trees with a, b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--max-ab", type=int, default=DEFAULT_MAX_AB)
    p.set_defaults(func=_cmd_bip_enumerate)

    p = sub.add_parser("selftest", help="run the full oracle certification")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--max-ab", type=int, default=DEFAULT_MAX_AB)
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("identity", help="both sides of the splitting identity")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_identity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"JSONDecodeError: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
