"""CFI versus inclusion-exclusion filters inside the reduction.

For each pattern ``S`` the reduction recovers ``hom(S, G)`` from ``p = hom(S°, .)``
on a seeded random ``S``-colored host, once with each color-surjectivity filter.
Rows record filter constituent counts, oracle calls, the largest oracle input
and wall-clock time.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass
from typing import Iterable

from .cfi import cfi_filter
from .corpus import random_colored_graph, rng_for
from .counting import hom_count, make_oracle
from .filters import inclusion_exclusion_filter
from .graph import ColoredGraph, cycle_graph, elementary_wall, make_colorful, strip_colors
from .reduction import reduce_hom


@dataclass
class BenchRow:
    family: str
    pattern: str
    vertices: int
    edges: int
    max_degree: int
    host_vertices: int
    filter: str
    constituents: int
    max_class_size: int
    oracle_calls: int
    calls_per_evaluation: int
    call_bound: int
    max_call_size: int
    seconds: float
    correct: bool | None
    skipped: bool = False


def bench_patterns(families: Iterable[str], wall_max: int = 4) -> list[tuple[str, str, ColoredGraph]]:
    out = []
    for fam in families:
        if fam == "cycles":
            out += [("cycles", f"C{n}", make_colorful(cycle_graph(n))) for n in range(3, 9)]
        elif fam == "walls":
            out += [("walls", f"wall{r}", elementary_wall(r)) for r in range(2, wall_max + 1)]
        else:
            raise ValueError(f"unknown family {fam!r}")
    return out


def _max_class(Q) -> int:
    return max(max(g.class_sizes.values()) for g in Q.constituents)


def bench(
    families: Iterable[str] = ("cycles", "walls"),
    host_factor: int = 2,
    seed: int = 0,
    ie_cap: int = 2**9,
    wall_max: int = 4,
    check: bool = True,
) -> list[BenchRow]:
    """Run both filters on every pattern; IE rows with ``2^|E| > ie_cap`` are skipped."""
    rows = []
    for fam, name, S in bench_patterns(families, wall_max):
        rng = rng_for(seed, "bench", name)
        n_host = host_factor * S.n
        G = random_colored_graph(rng, n_host, S.color_set, 0.5, allowed=None, color_set=S.color_set)
        want = hom_count(S, G) if check else None
        s = S.n
        for kind in ("cfi", "ie"):
            base = dict(
                family=fam, pattern=name, vertices=S.n, edges=S.m, max_degree=S.max_degree,
                host_vertices=n_host, filter=kind,
            )
            if kind == "ie" and 2**S.m > ie_cap:
                rows.append(BenchRow(**base, constituents=2**S.m, max_class_size=1, oracle_calls=0,
                                     calls_per_evaluation=0, call_bound=2**S.m * (s + 1), max_call_size=0,
                                     seconds=0.0, correct=None, skipped=True))
                continue
            Q = cfi_filter(S) if kind == "cfi" else inclusion_exclusion_filter(S)
            p = make_oracle("hom", strip_colors(S))
            t = time.perf_counter()
            rep = reduce_hom(S, S, s, p, "a", G, filter_kind=kind)
            dt = time.perf_counter() - t
            rows.append(BenchRow(
                **base,
                constituents=len(Q),
                max_class_size=_max_class(Q),
                oracle_calls=rep.oracle_calls,
                calls_per_evaluation=rep.calls_per_evaluation[0],
                call_bound=len(Q) * (s + 1),
                max_call_size=rep.max_call_size,
                seconds=round(dt, 4),
                correct=None if want is None else rep.result == want,
            ))
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    fields = list(BenchRow.__dataclass_fields__)
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(asdict(r))
    return buf.getvalue()


def rows_to_json(rows: list[BenchRow]) -> list[dict]:
    return [asdict(r) for r in rows]
