"""Verification suites: seeded instance families checked against brute force.

Every check records an instance id, a pass flag and, on failure, a JSON
payload describing the concrete instance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Any, Callable, Iterable

from .cfi import cfi_csp, cfi_filter, deleted_class_isomorphism, incident_edges, push_along_path, push_incident, ChargeFunction
from .corpus import (
    base_corpus,
    non_surjective_family,
    random_colored_graph,
    random_uncolored_graph,
    reduction_instances,
    rng_for,
    small_colorful_bases,
)
from .counting import hom_count, ind_count, make_oracle, sub_count
from .expansion import ind_hom_expansion, sub_hom_expansion
from .filters import ColorCoarsening, apply_filters, cardinality_filter, inclusion_exclusion_filter
from .graph import ColoredGraph, verify_isomorphism
from .quantum import evaluate_linear, hom_into, tensor_quantum, QuantumGraph
from .reduction import reduce_hom
from .serialize import graph_to_dict

SUITES = ("cfi", "filters", "expansion", "reduction")


@dataclass
class CheckResult:
    instance: str
    passed: bool
    payload: dict | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"instance": self.instance, "passed": self.passed}
        if self.payload is not None:
            out["counterexample"] = self.payload
        return out


@dataclass
class VerificationSuite:
    suite: str
    params: dict
    results: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def check(self, instance: str, ok: bool, payload: Callable[[], dict] | None = None) -> None:
        self.results.append(CheckResult(instance, bool(ok), None if ok or payload is None else payload()))

    def summary(self) -> str:
        n = len(self.results)
        f = len(self.failures)
        return f"{self.suite}: {n - f}/{n} passed in {self.seconds:.1f}s"

    def to_json(self, include_passes: bool = False) -> dict:
        rows = self.results if include_passes else self.failures
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": len(self.results),
            "failures": len(self.failures),
            "passed": self.passed,
            "results": [r.to_json() for r in rows],
        }


def _g(G: ColoredGraph) -> dict:
    return graph_to_dict(G, with_labels=False)


# ---------------------------------------------------------------------------
# cfi
# ---------------------------------------------------------------------------


def verify_cfi(seed: int = 0, random_count: int = 20, family_max_n: int = 5) -> VerificationSuite:
    suite = VerificationSuite("cfi", {"seed": seed, "random_count": random_count, "family_max_n": family_max_n})
    for name, S in base_corpus(seed, random_count):
        X = cfi_filter(S)
        suite.check(f"{name}/hom(S,X)=1", hom_into(S, X) == 1, lambda: {"S": _g(S)})
        free = cfi_csp(S).realized
        expect = 2 ** (S.m - S.n + 1)
        suite.check(f"{name}/solutions", hom_count(S, free) == expect, lambda: {"S": _g(S)})
        for e in S.edge_list:
            g = cfi_csp(S, ChargeFunction.indicator(S, [e])).realized
            suite.check(f"{name}/no-solution{e}", hom_count(S, g) == 0, lambda: {"S": _g(S), "edge": list(e)})
        verify_pushes(S, name, suite)
    for name, S in small_colorful_bases():
        if S.n > family_max_n:
            continue
        X = cfi_filter(S)
        bad = [H for H in non_surjective_family(S) if hom_into(H, X) != 0]
        suite.check(f"{name}/non-surjective", not bad, lambda: {"S": _g(S), "H": _g(bad[0])})
    return suite


def verify_pushes(S: ColoredGraph, name: str, suite: VerificationSuite) -> None:
    """Charge pushing at every vertex, along paths from ``e*``, and deleted classes."""
    c0 = ChargeFunction.indicator(S)
    for v in range(S.n):
        inc = incident_edges(S, v)
        for a, b in combinations(inc, 2):
            f, c1 = push_incident(S, c0, a, b)
            ok = verify_isomorphism(cfi_csp(S, c0).realized, cfi_csp(S, c1).realized, f)
            suite.check(f"{name}/push{a}{b}", ok, lambda: {"S": _g(S), "edges": [list(a), list(b)]})
    e_star = S.edge_list[0]
    src = cfi_csp(S, ChargeFunction.indicator(S, [e_star])).realized
    for e in S.edge_list:
        f = push_along_path(S, e_star, e)
        dst = cfi_csp(S, ChargeFunction.indicator(S, [e])).realized
        suite.check(f"{name}/path{e}", verify_isomorphism(src, dst, f), lambda: {"S": _g(S), "edge": list(e)})
    for e in S.edge_list:
        S2 = ColoredGraph(S.color_set, S.vertex_colors, S.edges - {e})
        f, A, B = deleted_class_isomorphism(S, S2)
        suite.check(f"{name}/deleted{e}", verify_isomorphism(A, B, f), lambda: {"S": _g(S), "deleted": list(e)})


# ---------------------------------------------------------------------------
# filters
# ---------------------------------------------------------------------------


def all_colored_graphs(max_n: int, colors: Iterable[int], loops: bool = False) -> Iterable[ColoredGraph]:
    """Every graph on ``0..max_n`` vertices with non-decreasing colors (optionally with loops)."""
    colors = tuple(colors)
    for n in range(max_n + 1):
        pairs = list(combinations(range(n), 2))
        if loops:
            pairs += [(v, v) for v in range(n)]
        for cols in combinations_with_replacement(colors, n):
            for mask in product((0, 1), repeat=len(pairs)):
                yield ColoredGraph(colors, cols, frozenset(e for e, b in zip(pairs, mask) if b))


def coarsenings(colors: tuple[int, ...], s: int, max_r: int = 2) -> list[ColorCoarsening]:
    out = []
    # every ordered split of the colors into r nonempty parts, all targets with sum <= s
    for r in range(1, max_r + 1):
        for labels in product(range(r), repeat=len(colors)):
            if set(labels) != set(range(r)) or list(labels)[: 1] != [0]:
                continue
            parts = tuple(tuple(c for c, l in zip(colors, labels) if l == i) for i in range(r))
            for ks in product(range(s + 1), repeat=r):
                if sum(ks) <= s:
                    out.append(ColorCoarsening(parts, ks))
    return out


def verify_cardinality(s: int = 4, max_colors: int = 2, max_r: int = 2) -> VerificationSuite:
    suite = VerificationSuite("cardinality", {"s": s, "max_colors": max_colors, "max_r": max_r})
    for k in range(1, max_colors + 1):
        colors = tuple(range(k))
        graphs = list(all_colored_graphs(s, colors))
        for eta in coarsenings(colors, s, max_r):
            N = cardinality_filter(eta, s)
            bad = None
            for H in graphs:
                if hom_into(H, N) != int(eta.is_coarsened(H)):
                    bad = H
                    break
            suite.check(
                f"colors={k}/parts={eta.parts}/targets={eta.targets}",
                bad is None,
                lambda: {"parts": [list(p) for p in eta.parts], "targets": list(eta.targets), "H": _g(bad)},
            )
    return suite


def verify_filters(seed: int = 0, family_max_n: int = 5, s: int = 4) -> VerificationSuite:
    suite = verify_cardinality(s)
    suite.suite = "filters"
    suite.params.update({"seed": seed, "family_max_n": family_max_n})
    for name, S in small_colorful_bases():
        if S.n > family_max_n or S.m > 8:
            continue
        X = cfi_filter(S)
        I = inclusion_exclusion_filter(S)
        suite.check(f"{name}/I(S)=X(S)=1", hom_into(S, I) == 1 == hom_into(S, X), lambda: {"S": _g(S)})
        bad = [H for H in non_surjective_family(S) if hom_into(H, I) != hom_into(H, X)]
        suite.check(f"{name}/I=X on family", not bad, lambda: {"S": _g(S), "H": _g(bad[0])})
    # streaming application agrees with materialized tensors
    for i in range(10):
        rng = rng_for(seed, "apply", i)
        S = small_colorful_bases()[rng.randrange(4)][1]
        G = random_colored_graph(rng, rng.randint(2, 5), S.color_set, 0.6, color_set=S.color_set)
        N = cardinality_filter(ColorCoarsening((S.color_set,), (S.n,)), S.n)
        X = cfi_filter(S)
        p = make_oracle("hom", S)
        streamed = apply_filters(p, [X, N], G)
        full = evaluate_linear(p, tensor_quantum(tensor_quantum(QuantumGraph.single(G), X), N))
        suite.check(f"apply#{i}", streamed == full, lambda: {"S": _g(S), "G": _g(G)})
    return suite


# ---------------------------------------------------------------------------
# expansion
# ---------------------------------------------------------------------------


def pattern_family(max_n: int) -> list[ColoredGraph]:
    """One uncolored graph per isomorphism class on ``1..max_n`` vertices."""
    from .graph import canonical_form

    seen = set()
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in product((0, 1), repeat=len(pairs)):
            G = ColoredGraph.from_edges(n, [e for e, b in zip(pairs, mask) if b])
            cert, _ = canonical_form(G)
            if cert not in seen:
                seen.add(cert)
                out.append(G)
    return out


def verify_expansion(seed: int = 0, max_pattern: int = 4, hosts: int = 30, max_host: int = 7) -> VerificationSuite:
    suite = VerificationSuite(
        "expansion", {"seed": seed, "max_pattern": max_pattern, "hosts": hosts, "max_host": max_host}
    )
    host_list = [random_uncolored_graph(rng_for(seed, "host", i), rng_for(seed, "hn", i).randint(1, max_host), 0.5) for i in range(hosts)]
    for H in pattern_family(max_pattern):
        sub = sub_hom_expansion(H)
        ind = ind_hom_expansion(H)
        tag = f"n={H.n}/edges={H.edge_list}"
        signs = all((c > 0) == ((H.n - F.n) % 2 == 0) for F, c in sub.terms)
        suite.check(f"{tag}/sign", signs, lambda: {"H": _g(H)})
        suite.check(f"{tag}/ind-size", all(F.n <= H.n for F, _ in ind.terms), lambda: {"H": _g(H)})
        for j, G in enumerate(host_list):
            ok = hom_into_expansion(sub.quantum, G) == sub_count(H, G) and hom_into_expansion(ind.quantum, G) == ind_count(H, G)
            suite.check(f"{tag}/host{j}", ok, lambda: {"H": _g(H), "G": _g(G)})
    return suite


def hom_into_expansion(Q: QuantumGraph, G: ColoredGraph) -> Fraction:
    return sum((c * hom_count(F, G) for F, c in Q.terms), Fraction(0))


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------


def verify_reduction(seed: int = 0, count: int = 10, max_host: int = 10) -> VerificationSuite:
    suite = VerificationSuite("reduction", {"seed": seed, "count": count, "max_host": max_host})
    oracles: dict = {}
    for case in ("a", "b", "c"):
        for i, inst in enumerate(reduction_instances(case, count, seed, max_host)):
            key = (inst.kind, inst.H)
            if key not in oracles:
                oracles[key] = make_oracle(inst.kind, inst.H)
            p = oracles[key]
            p.reset()
            report = reduce_hom(inst.S, inst.T, inst.s, p, case, inst.G)
            want = hom_count(inst.S, inst.G)
            suite.check(
                f"case-{case}#{i}",
                report.result == want,
                lambda: {
                    "S": _g(inst.S), "T": _g(inst.T), "G": _g(inst.G), "s": inst.s,
                    "oracle": f"{inst.kind}", "H": _g(inst.H),
                    "got": str(report.result), "want": want,
                },
            )
    return suite


def run_suite(name: str, seed: int = 0, **caps: Any) -> VerificationSuite:
    fn = {
        "cfi": verify_cfi,
        "filters": verify_filters,
        "expansion": verify_expansion,
        "reduction": verify_reduction,
    }[name]
    t = time.perf_counter()
    accepted = fn.__code__.co_varnames[: fn.__code__.co_argcount]
    suite = fn(seed=seed, **{k: v for k, v in caps.items() if k in accepted})
    suite.seconds = time.perf_counter() - t
    return suite


def run_all(seed: int = 0, **caps: Any) -> list[VerificationSuite]:
    return [run_suite(name, seed, **caps) for name in SUITES]
