"""Oracle-vs-formula certification checks shared by the CLI and the test suite.

Each ``check_*`` function returns None on success or a JSON-ready dict
describing the first failing case.  ``run_selftest`` chains everything and
streams the census reports it produced along the way.
"""

from __future__ import annotations

from typing import Callable

from .bipartite import decode_bipartite, degree_profile, encode_bipartite
from .codec import HypertreeCode, decode, encode
from .counting import (
    count_bipartite,
    count_hypertrees,
    count_hypertrees_total,
    multinomial,
    split_identity_check,
    weighted_total,
)
from .model import DegreeVector, SetPartition, SizePartition
from .oracle import (
    EnumerationReport,
    bipartite_profile_census,
    enumerate_bipartite_trees,
    enumerate_hypertrees,
    enumerate_set_partitions,
    profile_census,
    weighted_census,
)


def _fail(check: str, params: dict, expected, actual) -> dict:
    return {
        "check": check,
        "params": params,
        "expected": str(expected),
        "actual": str(actual),
    }


def hypertree_census_cache(max_n: int) -> dict:
    """One profile census per (n, k), shared by several checks."""
    return {
        (n, k): profile_census(n, k, max_n=max_n)
        for n in range(1, max_n + 1)
        for k in range(1, n + 1)
    }


def check_profile_counts(census: dict) -> dict | None:
    """Per-profile census equals the closed-form hypertree count."""
    for (n, k), report in census.items():
        for (lam_parts, mu_vals), observed in report.profiles.items():
            expected = count_hypertrees(SizePartition(lam_parts), DegreeVector(mu_vals))
            if expected != observed:
                return _fail(
                    "profile_counts",
                    {"n": n, "k": k, "lambda": list(lam_parts), "mu": list(mu_vals)},
                    expected,
                    observed,
                )
        # no admissible profile may be missing from the census
        formula_total = count_hypertrees_total(n, k)
        if sum(report.profiles.values()) != formula_total:
            return _fail(
                "profile_counts_total",
                {"n": n, "k": k},
                formula_total,
                sum(report.profiles.values()),
            )
    return None


def check_totals(census: dict) -> dict | None:
    """Oracle totals equal (n+1)^{k-1} S2(n, k)."""
    for (n, k), report in census.items():
        expected = count_hypertrees_total(n, k)
        if report.total != expected:
            return _fail("husimi_totals", {"n": n, "k": k}, expected, report.total)
    return None


def check_weighted(max_n: int) -> dict | None:
    """Weighted census equals (n+1)^{k-1} times unsigned Stirling-1."""
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            observed = weighted_census(n, k, max_n=max_n)
            expected = weighted_total(n, k)
            if observed != expected:
                return _fail("weighted_census", {"n": n, "k": k}, expected, observed)
    return None


def check_independence(census: dict) -> dict | None:
    """count(lam, mu) * total = rowsum(lam) * colsum(mu), exactly."""
    for (n, k), report in census.items():
        rowsum: dict = {}
        colsum: dict = {}
        for (lam, mu), c in report.profiles.items():
            rowsum[lam] = rowsum.get(lam, 0) + c
            colsum[mu] = colsum.get(mu, 0) + c
        total = report.total
        for (lam, mu), c in report.profiles.items():
            if c * total != rowsum[lam] * colsum[mu]:
                return _fail(
                    "independence",
                    {"n": n, "k": k, "lambda": list(lam), "mu": list(mu)},
                    rowsum[lam] * colsum[mu],
                    c * total,
                )
    return None


def check_hypertree_roundtrip(max_n: int) -> dict | None:
    """decode(encode(T)) == T over the full enumeration."""
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for tree in enumerate_hypertrees(n, k, max_n=max_n):
                code = encode(tree)
                back = decode(code)
                if back != tree:
                    return _fail(
                        "hypertree_roundtrip",
                        {"n": n, "k": k, "tree": tree.to_json_dict()},
                        tree.dumps(),
                        back.dumps(),
                    )
    return None


def check_code_roundtrip(max_code_n: int = 4) -> dict | None:
    """encode(decode(P, W)) == (P, W) over every partition and word."""
    for n in range(1, max_code_n + 1):
        for k in range(1, n + 1):
            for blocks in enumerate_set_partitions(n, k):
                partition = SetPartition(n, blocks)
                for word in _all_words(k - 1, n + 1):
                    code = HypertreeCode(partition, word)
                    back = encode(decode(code))
                    if back != code:
                        return _fail(
                            "code_roundtrip",
                            {"n": n, "k": k, "code": code.to_json_dict()},
                            code.dumps(),
                            back.dumps(),
                        )
    return None


def _all_words(length: int, alphabet: int):
    if length == 0:
        yield ()
        return
    for prefix in _all_words(length - 1, alphabet):
        for letter in range(alphabet):
            yield prefix + (letter,)


def bipartite_census_cache(max_ab: int) -> dict:
    return {
        (a, b): bipartite_profile_census(a, b, max_ab=max_ab)
        for a in range(max_ab + 1)
        for b in range(max_ab + 1)
    }


def check_bipartite_census(census: dict) -> dict | None:
    """Per-(alpha, beta) census equals C(a, beta) C(b, alpha); totals match."""
    for (a, b), report in census.items():
        for (alpha, beta), observed in report.profiles.items():
            expected = count_bipartite(alpha, beta)
            if expected != observed:
                return _fail(
                    "bipartite_profile",
                    {"a": a, "b": b, "alpha": list(alpha), "beta": list(beta)},
                    expected,
                    observed,
                )
        expected_total = (a + 1) ** b * (b + 1) ** a
        if report.total != expected_total:
            return _fail("bipartite_total", {"a": a, "b": b}, expected_total, report.total)
    return None


def check_bipartite_roundtrip(max_ab: int) -> dict | None:
    """Both codec directions are the identity for a, b up to the bound."""
    from .bipartite import BipartiteCode

    for a in range(max_ab + 1):
        for b in range(max_ab + 1):
            for tree in enumerate_bipartite_trees(a, b, max_ab=max_ab):
                code = encode_bipartite(tree)
                alpha, beta = degree_profile(tree)
                for j in range(b + 1):
                    if code.w.count(j) != beta[j]:
                        return _fail(
                            "bipartite_degree_fidelity",
                            {"a": a, "b": b, "tree": tree.to_json_dict()},
                            f"beta={list(beta)}",
                            f"w={list(code.w)}",
                        )
                for i in range(a + 1):
                    if code.wprime.count(i) != alpha[i]:
                        return _fail(
                            "bipartite_degree_fidelity",
                            {"a": a, "b": b, "tree": tree.to_json_dict()},
                            f"alpha={list(alpha)}",
                            f"wprime={list(code.wprime)}",
                        )
                back = decode_bipartite(code)
                if back != tree:
                    return _fail(
                        "bipartite_roundtrip",
                        {"a": a, "b": b, "tree": tree.to_json_dict()},
                        tree.dumps(),
                        back.dumps(),
                    )
            for w in _all_words(a, b + 1):
                for wp in _all_words(b, a + 1):
                    code = BipartiteCode(a, b, w, wp)
                    back = encode_bipartite(decode_bipartite(code))
                    if back != code:
                        return _fail(
                            "bipartite_code_roundtrip",
                            {"a": a, "b": b, "code": code.to_json_dict()},
                            code.dumps(),
                            back.dumps(),
                        )
    return None


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, slots - 1):
            yield (head,) + rest


def check_bipartite_recursion(limit: int = 5) -> dict | None:
    """Leaf-removal recursion: summing over the vertex absorbing the last
    V-leaf reproduces C(a, beta) C(b, alpha).  Needs b >= 1 (a b-1 multinomial
    appears on the left)."""
    for a in range(limit + 1):
        for b in range(1, limit + 1):
            betas = list(_compositions(a, b + 1))
            for alpha in _compositions(b, a + 1):
                lhs_alpha = 0
                for idx in range(a + 1):
                    if alpha[idx] >= 1:
                        reduced = alpha[:idx] + (alpha[idx] - 1,) + alpha[idx + 1:]
                        lhs_alpha += multinomial(b - 1, reduced)
                rhs_alpha = multinomial(b, alpha)
                for beta in betas:
                    factor = multinomial(a, beta)
                    if factor * lhs_alpha != factor * rhs_alpha:
                        return _fail(
                            "bipartite_recursion",
                            {"a": a, "b": b, "alpha": list(alpha), "beta": list(beta)},
                            factor * rhs_alpha,
                            factor * lhs_alpha,
                        )
    return None


def check_split_identity(limit: int = 20) -> dict | None:
    """Both sides of the splitting identity agree for 1 <= n <= limit."""
    for n in range(1, limit + 1):
        lhs, rhs = split_identity_check(n)
        if lhs != rhs:
            return _fail("split_identity", {"n": n}, lhs, rhs)
    return None


def run_selftest(
    max_n: int = 5,
    max_ab: int = 3,
    report_sink: Callable[[EnumerationReport], None] | None = None,
) -> tuple[bool, dict | None, int]:
    """Run every exact certification check.

    Returns (ok, first_failure, number_of_checks).  Census reports are
    handed to ``report_sink`` as they are produced.
    """
    census = hypertree_census_cache(max_n)
    bip_census = bipartite_census_cache(max_ab)
    if report_sink is not None:
        for report in census.values():
            report_sink(report)
        for report in bip_census.values():
            report_sink(report)

    checks = [
        lambda: check_profile_counts(census),
        lambda: check_totals(census),
        lambda: check_weighted(max_n),
        lambda: check_independence(census),
        lambda: check_hypertree_roundtrip(max_n),
        lambda: check_code_roundtrip(min(max_n, 4)),
        lambda: check_bipartite_census(bip_census),
        lambda: check_bipartite_roundtrip(max_ab),
        lambda: check_bipartite_recursion(5),
        lambda: check_split_identity(20),
    ]
    for run in checks:
        failure = run()
        if failure is not None:
            return False, failure, len(checks)
    return True, None, len(checks)
