"""Vertex-colored graphs with self-loops, plus isomorphism and structural helpers.

Vertices are the dense integers ``0..n-1``. Each vertex carries a color drawn
from a declared, sorted color set. Uncolored graphs are single-color graphs
(color ``0``). Edges are unordered pairs stored as ``(u, v)`` with ``u <= v``;
``(v, v)`` is a self-loop. There are no parallel edges.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Iterator, Mapping, Sequence

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True, eq=True)
class ColoredGraph:
    """Immutable vertex-colored graph.

    ``labels`` is optional per-vertex provenance (assignment bit-vectors for
    CFI graphs, factor pairs for tensor products). It does not take part in
    equality or hashing.
    """

    color_set: tuple[int, ...]
    vertex_colors: tuple[int, ...]
    edges: frozenset[Edge]
    labels: tuple[Any, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        cs = tuple(sorted(set(self.color_set)))
        object.__setattr__(self, "color_set", cs)
        object.__setattr__(self, "vertex_colors", tuple(self.vertex_colors))
        allowed = set(cs)
        for c in self.vertex_colors:
            if c not in allowed:
                raise ValueError(f"vertex color {c} not in declared color set {cs}")
        n = len(self.vertex_colors)
        edges = set()
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an undeclared endpoint")
            edges.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(edges))
        if self.labels is not None:
            if len(self.labels) != n:
                raise ValueError("labels must have one entry per vertex")
            object.__setattr__(self, "labels", tuple(self.labels))

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        colors: Sequence[int] | None = None,
        color_set: Iterable[int] | None = None,
        labels: Sequence[Any] | None = None,
    ) -> "ColoredGraph":
        if colors is None:
            colors = (0,) * n
        if len(colors) != n:
            raise ValueError("need exactly one color per vertex")
        if color_set is None:
            color_set = set(colors) or {0}
        return cls(tuple(color_set), tuple(colors), frozenset(_norm_edge(u, v) for u, v in edges), labels)

    @classmethod
    def colorful(cls, n: int, edges: Iterable[Sequence[int]]) -> "ColoredGraph":
        """Colorful graph on ``0..n-1`` with the identity coloring."""
        return cls.from_edges(n, edges, colors=range(n), color_set=range(n))

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertex_colors)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets; a looped vertex lists itself."""
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def loops(self) -> frozenset[int]:
        return frozenset(u for u, v in self.edges if u == v)

    def degree(self, v: int) -> int:
        """Number of neighbors other than ``v`` itself."""
        return len(self.adj[v] - {v})

    @property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def color_class(self, c: int) -> list[int]:
        return [v for v, col in enumerate(self.vertex_colors) if col == c]

    @cached_property
    def class_sizes(self) -> dict[int, int]:
        cnt = Counter(self.vertex_colors)
        return {c: cnt.get(c, 0) for c in self.color_set}

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    @property
    def is_colorful(self) -> bool:
        return len(set(self.vertex_colors)) == self.n

    def vertex_of_color(self, c: int) -> int:
        """The unique vertex of color ``c`` in a colorful graph."""
        vs = self.color_class(c)
        if len(vs) != 1:
            raise ValueError(f"color {c} does not name a unique vertex")
        return vs[0]

    def __repr__(self) -> str:  # compact, deterministic
        return (
            f"ColoredGraph(n={self.n}, colors={list(self.vertex_colors)}, "
            f"edges={self.edge_list})"
        )


# ---------------------------------------------------------------------------
# Elementary constructions
# ---------------------------------------------------------------------------


def complete_graph(k: int) -> ColoredGraph:
    return ColoredGraph.from_edges(k, combinations(range(k), 2))


def path_graph(k: int) -> ColoredGraph:
    return ColoredGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> ColoredGraph:
    return ColoredGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def empty_graph(k: int) -> ColoredGraph:
    return ColoredGraph.from_edges(k, [])


def matching_graph(k: int) -> ColoredGraph:
    """Disjoint union of ``k`` edges; edge ``i`` is ``(2i, 2i+1)``."""
    return ColoredGraph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def make_colorful(G: ColoredGraph) -> ColoredGraph:
    """Same graph with the identity coloring."""
    return ColoredGraph.colorful(G.n, G.edges)


def strip_colors(G: ColoredGraph) -> ColoredGraph:
    """Collapse every color to the single color 0."""
    if G.color_set == (0,):
        return G
    return ColoredGraph((0,), (0,) * G.n, G.edges, G.labels)


def apply_coloring(
    H: ColoredGraph, coloring: Mapping[int, int] | Sequence[int], color_set: Iterable[int] | None = None
) -> ColoredGraph:
    """Recolor ``H`` by ``coloring``; adjacency is unchanged."""
    if isinstance(coloring, Mapping):
        missing = [v for v in range(H.n) if v not in coloring]
        if missing:
            raise ValueError(f"coloring is partial; missing vertices {missing}")
        cols = [coloring[v] for v in range(H.n)]
    else:
        if len(coloring) != H.n:
            raise ValueError("coloring is partial")
        cols = list(coloring)
    cs = set(cols) if color_set is None else set(color_set)
    return ColoredGraph(tuple(cs or {0}), tuple(cols), H.edges, H.labels)


def with_color_set(G: ColoredGraph, color_set: Iterable[int]) -> ColoredGraph:
    """Re-declare the color set (must contain every used color)."""
    return ColoredGraph(tuple(color_set), G.vertex_colors, G.edges, G.labels)


def induced_subgraph(G: ColoredGraph, vertices: Sequence[int], color_set: Iterable[int] | None = None) -> ColoredGraph:
    """Subgraph induced on ``vertices`` (relabeled in the given order)."""
    idx = {v: i for i, v in enumerate(vertices)}
    edges = [(idx[u], idx[v]) for u, v in G.edges if u in idx and v in idx]
    labels = None if G.labels is None else [G.labels[v] for v in vertices]
    return ColoredGraph(
        tuple(G.color_set if color_set is None else color_set),
        tuple(G.vertex_colors[v] for v in vertices),
        frozenset(edges),
        labels,
    )


def restrict_to_colors(G: ColoredGraph, colors: Iterable[int]) -> ColoredGraph:
    """Keep only vertices whose color lies in ``colors``; the color set shrinks accordingly."""
    keep = set(colors)
    vs = [v for v in range(G.n) if G.vertex_colors[v] in keep]
    return induced_subgraph(G, vs, color_set=sorted(keep))


def disjoint_union(*graphs: ColoredGraph) -> ColoredGraph:
    cs: set[int] = set()
    cols: list[int] = []
    edges: list[Edge] = []
    off = 0
    for g in graphs:
        cs.update(g.color_set)
        cols.extend(g.vertex_colors)
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return ColoredGraph(tuple(cs or {0}), tuple(cols), frozenset(edges))


def subdivide_edge(G: ColoredGraph, edge: Edge, color: int | None = None) -> ColoredGraph:
    """Replace ``edge`` by a path of length two through a new vertex.

    For colorful graphs the new vertex receives a fresh color (one more than the
    current maximum) unless ``color`` is given.
    """
    u, v = _norm_edge(*edge)
    if (u, v) not in G.edges:
        raise ValueError(f"{edge} is not an edge")
    w = G.n
    if color is None:
        color = max(G.color_set) + 1 if G.is_colorful else G.vertex_colors[u]
    edges = (set(G.edges) - {(u, v)}) | {(u, w), (v, w)}
    return ColoredGraph(G.color_set + (color,), G.vertex_colors + (color,), frozenset(edges))


def is_connected(G: ColoredGraph) -> bool:
    return len(_component_vertex_sets(G)) <= 1


def _component_vertex_sets(G: ColoredGraph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for y in G.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    dq.append(y)
        comps.append(sorted(comp))
    return comps


def connected_components(G: ColoredGraph) -> list[ColoredGraph]:
    """Components in order of their smallest vertex.

    Each component keeps only the colors it uses (so a colorful component is
    again colorful); restrict a host with :func:`restrict_to_colors` on the
    component's ``color_set`` to pair the two up.
    """
    out = []
    for comp in _component_vertex_sets(G):
        cols = sorted({G.vertex_colors[v] for v in comp})
        out.append(induced_subgraph(G, comp, color_set=cols))
    return out


def isolated_vertices(G: ColoredGraph) -> list[int]:
    return [v for v in range(G.n) if not G.adj[v]]


# ---------------------------------------------------------------------------
# Walls
# ---------------------------------------------------------------------------


def elementary_wall(r: int, colorful: bool = True) -> ColoredGraph:
    """Elementary ``r x r`` wall.

    Start from the ``r x r`` grid with rows and columns indexed from 1, then
    drop the odd-indexed vertical edges of odd columns and the even-indexed
    vertical edges of even columns. Vertex ``(i, j)`` gets id ``(i-1)*r + (j-1)``.
    ``r = 1`` is taken to be a single edge.
    """
    if r < 1:
        raise ValueError("wall order must be positive")
    if r == 1:
        g = ColoredGraph.from_edges(2, [(0, 1)])
        return make_colorful(g) if colorful else g

    def vid(i: int, j: int) -> int:
        return (i - 1) * r + (j - 1)

    edges = []
    for i in range(1, r + 1):
        for j in range(1, r):
            edges.append((vid(i, j), vid(i, j + 1)))
    for j in range(1, r + 1):
        for i in range(1, r):  # vertical edge number i joins rows i and i+1
            if (j % 2 == 1) != (i % 2 == 1):
                edges.append((vid(i, j), vid(i + 1, j)))
    g = ColoredGraph.from_edges(r * r, edges)
    return make_colorful(g) if colorful else g


# ---------------------------------------------------------------------------
# S-colored structure
# ---------------------------------------------------------------------------


def _color_pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def s_edge_colors(S: ColoredGraph) -> set[tuple[int, int]]:
    """Color pairs of the edges of a colorful graph."""
    c = S.vertex_colors
    return {_color_pair(c[u], c[v]) for u, v in S.edges}


def edge_color_classes(H: ColoredGraph, S: ColoredGraph) -> dict[tuple[int, int], set[Edge]]:
    """Partition the edges of ``H`` by endpoint-color pair.

    Keys are the color pairs of the edges of ``S``; edges of ``H`` lying over
    other color pairs are collected under their own key as well.
    """
    c = H.vertex_colors
    classes: dict[tuple[int, int], set[Edge]] = {k: set() for k in sorted(s_edge_colors(S))}
    for u, v in H.edge_list:
        classes.setdefault(_color_pair(c[u], c[v]), set()).add((u, v))
    return classes


def is_s_colored(H: ColoredGraph, S: ColoredGraph) -> bool:
    """Whether ``H`` admits a color-preserving homomorphism to colorful ``S``."""
    s_colors = set(S.vertex_colors)
    if any(c not in s_colors for c in H.vertex_colors):
        return False
    allowed = s_edge_colors(S)
    c = H.vertex_colors
    return all(_color_pair(c[u], c[v]) in allowed for u, v in H.edges)


def is_surjectively_colored(H: ColoredGraph, S: ColoredGraph) -> bool:
    if not is_s_colored(H, S):
        return False
    c = H.vertex_colors
    present = {_color_pair(c[u], c[v]) for u, v in H.edges}
    return s_edge_colors(S) <= present


def split_off_edge(H: ColoredGraph, edge: Edge) -> ColoredGraph:
    """Move ``edge`` onto two fresh vertices with the same endpoint colors."""
    u, v = _norm_edge(*edge)
    if (u, v) not in H.edges:
        raise ValueError(f"{edge} is not an edge")
    a, b = H.n, H.n + 1
    edges = (set(H.edges) - {(u, v)}) | {(a, b)}
    cols = H.vertex_colors + (H.vertex_colors[u], H.vertex_colors[v])
    return ColoredGraph(H.color_set, cols, frozenset(edges))


def is_colorful_subgraph(S: ColoredGraph, T: ColoredGraph) -> bool:
    """``S <= T`` for colorful graphs, matching vertices by color."""
    if not (S.is_colorful and T.is_colorful):
        return False
    tc = {c: v for v, c in enumerate(T.vertex_colors)}
    if any(c not in tc for c in S.vertex_colors):
        return False
    sc = S.vertex_colors
    return all(T.has_edge(tc[sc[u]], tc[sc[v]]) for u, v in S.edges)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _rank(keys: Sequence[Any]) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(G: ColoredGraph, colors: list[int]) -> list[int]:
    """Color refinement until stable; ranks are isomorphism-invariant."""
    adj = G.adj
    while True:
        keys = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(G.n)]
        new = _rank(keys)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _initial_colors(G: ColoredGraph) -> list[int]:
    loops = G.loops
    return _rank([(G.vertex_colors[v], v in loops) for v in range(G.n)])


def _verify_map(G1: ColoredGraph, G2: ColoredGraph, f: Sequence[int]) -> bool:
    if G1.n != G2.n or G1.m != G2.m or G1.color_set != G2.color_set:
        return False
    if sorted(f) != list(range(G1.n)):
        return False
    if any(G1.vertex_colors[v] != G2.vertex_colors[f[v]] for v in range(G1.n)):
        return False
    return all(_norm_edge(f[u], f[v]) in G2.edges for u, v in G1.edges)


def verify_isomorphism(G1: ColoredGraph, G2: ColoredGraph, mapping: Mapping[int, int] | Sequence[int]) -> bool:
    """True iff ``mapping`` is a color- and edge-preserving bijection ``G1 -> G2``."""
    if isinstance(mapping, Mapping):
        if set(mapping) != set(range(G1.n)):
            return False
        f = [mapping[v] for v in range(G1.n)]
    else:
        f = list(mapping)
    return _verify_map(G1, G2, f)


def _iso_search(G1: ColoredGraph, G2: ColoredGraph, find_all: bool) -> Iterator[list[int]]:
    """Backtracking over color-refined cells."""
    if G1.n != G2.n or G1.m != G2.m or G1.color_set != G2.color_set:
        return
    if G1.n == 0:
        yield []
        return
    U = disjoint_union(G1, G2)
    ref = _refine(U, _initial_colors(U))
    c1, c2 = ref[: G1.n], ref[G1.n :]
    if Counter(c1) != Counter(c2):
        return
    cells: dict[int, list[int]] = defaultdict(list)
    for w, c in enumerate(c2):
        cells[c].append(w)

    # order G1 vertices: small cells first, then stay connected to mapped ones
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(range(G1.n))
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-len(G1.adj[v] & placed), len(cells[c1[v]]), -len(G1.adj[v]), v),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)

    prev = [[u for u in order[:i]] for i in range(len(order))]
    f = [-1] * G1.n
    used = [False] * G2.n
    a1, a2 = G1.adj, G2.adj

    def rec(i: int) -> Iterator[list[int]]:
        if i == len(order):
            yield list(f)
            return
        v = order[i]
        for w in cells[c1[v]]:
            if used[w]:
                continue
            ok = True
            for u in prev[i]:
                if (u in a1[v]) != (f[u] in a2[w]):
                    ok = False
                    break
            if not ok:
                continue
            f[v] = w
            used[w] = True
            yield from rec(i + 1)
            used[w] = False
            f[v] = -1

    for sol in rec(0):
        yield sol
        if not find_all:
            return


def is_isomorphic(G1: ColoredGraph, G2: ColoredGraph) -> dict[int, int] | None:
    """A color-preserving isomorphism ``G1 -> G2`` as a dict, or ``None``."""
    for f in _iso_search(G1, G2, find_all=False):
        return dict(enumerate(f))
    return None


def automorphism_count(G: ColoredGraph, cap: int = 10) -> int:
    """Number of color-preserving automorphisms by exhaustive search."""
    if G.n > cap:
        raise ValueError(f"graph has {G.n} vertices, above the automorphism search cap {cap}")
    return sum(1 for _ in _iso_search(G, G, find_all=True))


def _twin_groups(G: ColoredGraph, cell: list[int]) -> list[int]:
    """One representative per class of interchangeable vertices in ``cell``."""
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if (G.adj[v] - {r, v}) == (G.adj[r] - {r, v}) and ((v in G.loops) == (r in G.loops)):
                break
        else:
            reps.append(v)
    return reps


def canonical_form(G: ColoredGraph) -> tuple[tuple, list[int]]:
    """Canonical certificate and relabeling ``perm[old] = new``.

    Individualization-refinement with twin pruning; two graphs are isomorphic
    iff their certificates are equal.
    """
    best: list[Any] = [None, None]

    def leaf(colors: list[int]) -> None:
        perm = colors  # discrete: colors are 0..n-1
        inv = [0] * G.n
        for v, p in enumerate(perm):
            inv[p] = v
        cert = (
            G.color_set,
            tuple(G.vertex_colors[inv[i]] for i in range(G.n)),
            tuple(sorted(_norm_edge(perm[u], perm[v]) for u, v in G.edges)),
        )
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, list(perm)

    def search(colors: list[int]) -> None:
        colors = _refine(G, colors)
        cells: dict[int, list[int]] = defaultdict(list)
        for v, c in enumerate(colors):
            cells[c].append(v)
        if len(cells) == G.n:
            leaf(colors)
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        for v in _twin_groups(G, cells[target]):
            nxt = [2 * c + (1 if (c == target and u != v) else 0) for u, c in enumerate(colors)]
            search(_rank(nxt))

    search(_initial_colors(G))
    return best[0], best[1]


def canonical_graph(G: ColoredGraph) -> ColoredGraph:
    cert, _ = canonical_form(G)
    color_set, cols, edges = cert
    return ColoredGraph(color_set, cols, frozenset(edges))


def relabel(G: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    inv = [0] * G.n
    for v, p in enumerate(perm):
        inv[p] = v
    labels = None if G.labels is None else [G.labels[inv[i]] for i in range(G.n)]
    return ColoredGraph(
        G.color_set,
        tuple(G.vertex_colors[inv[i]] for i in range(G.n)),
        frozenset(_norm_edge(perm[u], perm[v]) for u, v in G.edges),
        labels,
    )
