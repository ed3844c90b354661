"""Edge rings of graphs with loops and their Gauss algebras.

Vertices are 1..d.  The edge ring of G^L is generated by x_i x_j for each
edge and x_i^2 for each looped vertex i in L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .exactcore import DimensionError, Monomial, MonomialAlgebra, canonical, det_exact

Edge = tuple[int, int]


def _edge(i: int, j: int) -> Edge:
    if i == j:
        raise ValueError(f"edge {{{i},{j}}} is a loop; loops are stored separately")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class LoopedGraph:
    d: int
    edges: tuple[Edge, ...] = ()
    loops: frozenset[int] = frozenset()

    def __post_init__(self):
        edges = [_edge(*e) for e in self.edges]
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        for i, j in edges:
            if not (1 <= i <= self.d and 1 <= j <= self.d):
                raise ValueError(f"edge {{{i},{j}}} outside vertices 1..{self.d}")
        loops = frozenset(self.loops)
        if any(not 1 <= v <= self.d for v in loops):
            raise ValueError(f"loop outside vertices 1..{self.d}")
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "loops", loops)

    def with_loops(self, loops: Iterable[int]) -> "LoopedGraph":
        return LoopedGraph(self.d, self.edges, frozenset(loops))

    def nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.d + 1))
        g.add_edges_from(self.edges)
        return g

    def components(self) -> list[set[int]]:
        return [set(c) for c in nx.connected_components(self.nx())]

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.nx())

    def is_connected(self) -> bool:
        return self.d > 0 and nx.is_connected(self.nx())


# ---------------------------------------------------------------------------
# constructors


def path_graph(d: int, loops: Iterable[int] = ()) -> LoopedGraph:
    return LoopedGraph(d, tuple((i, i + 1) for i in range(1, d)), frozenset(loops))


def cycle_graph(d: int, loops: Iterable[int] = ()) -> LoopedGraph:
    return LoopedGraph(d, tuple((i, i + 1) for i in range(1, d)) + ((1, d),), frozenset(loops))


def complete_bipartite(n: int, m: int, loops: Iterable[int] = ()) -> LoopedGraph:
    """K_{n,m} with x_1..x_n as vertices 1..n and y_1..y_m as n+1..n+m."""
    return LoopedGraph(n + m, tuple((i, n + j) for i in range(1, n + 1) for j in range(1, m + 1)), frozenset(loops))


def from_networkx(g: nx.Graph, loops: Iterable[int] = ()) -> LoopedGraph:
    """Relabel the nodes of ``g`` to 1..n in sorted order."""
    order = {v: k for k, v in enumerate(sorted(g.nodes), 1)}
    return LoopedGraph(len(order), tuple(_edge(order[a], order[b]) for a, b in g.edges), frozenset(loops))


# ---------------------------------------------------------------------------
# matrices and minors


def incidence_matrix(d: int, edges: Sequence[Edge], rows: Sequence[int] | None = None) -> list[list[int]]:
    """Rows are vertices (1..d unless ``rows`` is given), columns are edges."""
    if rows is None:
        rows = range(1, d + 1)
    return [[int(v in e) for e in edges] for v in rows]


def edge_ring(G: LoopedGraph) -> MonomialAlgebra:
    if not G.edges and not G.loops:
        raise ValueError("graph has no edges and no loops")
    gens = [Monomial.from_indices(e, G.d) for e in G.edges]
    gens += [Monomial.from_indices((v, v), G.d) for v in sorted(G.loops)]
    return MonomialAlgebra(G.d, tuple(gens))


def delta_minor(V: Iterable[int], E: Sequence[Edge]) -> int:
    """Minor of the incidence matrix with rows V and columns E."""
    V = sorted(V)
    E = list(E)
    if len(V) != len(E):
        raise ValueError("minor needs |V| = |E|")
    return det_exact([[int(v in e) for e in E] for v in V])


def odd_cycle_every_component(vertices: int | Iterable[int], edges: Iterable[Edge]) -> bool:
    """True iff every connected component of (vertices, edges) has an odd cycle.

    Isolated vertices are components without a cycle.
    """
    g = nx.Graph()
    g.add_nodes_from(range(1, vertices + 1) if isinstance(vertices, int) else vertices)
    g.add_edges_from(edges)
    return all(not nx.is_bipartite(g.subgraph(c)) for c in nx.connected_components(g))


def labeling_order(V: Iterable[int], E: Sequence[Edge]) -> tuple[Edge, ...] | None:
    """An ordering e_1..e_r of E with |V & (e_1 | ... | e_i)| = i for all i, or None."""
    V = frozenset(V)
    E = list(E)
    if len(V) != len(E):
        raise ValueError("labeling condition needs |V| = |E|")
    r = len(E)
    dead = set()

    def search(used: int, covered: frozenset, order: tuple):
        if len(order) == r:
            return order
        if used in dead:
            return None
        for k, e in enumerate(E):
            if used >> k & 1:
                continue
            new = covered | (V & set(e))
            if len(new) == len(order) + 1:
                hit = search(used | 1 << k, new, order + (e,))
                if hit is not None:
                    return hit
        dead.add(used)
        return None

    return search(0, frozenset(), ())


def labeling_condition(V: Iterable[int], E: Sequence[Edge]) -> bool:
    return labeling_order(V, E) is not None


class NoGuarantee(ValueError):
    pass


def exists_nonsingular_minor(G: LoopedGraph, V: Iterable[int]) -> tuple[Edge, ...] | None:
    """Edges E with |E| = |V| and a nonzero minor Delta_{V,E}.

    Needs |V| <= d - c and, per component, at least one vertex outside V.
    Searches for a sequence of edges each adding exactly one new vertex of V,
    which forces a nonzero minor; the result is confirmed by a determinant.
    """
    V = frozenset(V)
    comps = G.components()
    c = len(comps)
    if len(V) > G.d - c:
        raise NoGuarantee(f"|V| = {len(V)} exceeds d - c = {G.d - c}")
    # |V| <= d - c is not enough: a component lying wholly inside V has no such E
    for comp in comps:
        if comp <= V:
            raise NoGuarantee(f"V contains the whole component {sorted(comp)}")
    dead = set()

    def search(covered: frozenset, order: tuple):
        if covered == V:
            return order
        if covered in dead:
            return None
        for e in G.edges:
            new = V.intersection(e) - covered
            if len(new) == 1:
                hit = search(covered | new, order + (e,))
                if hit is not None:
                    return hit
        dead.add(covered)
        return None

    E = search(frozenset(), ())
    if E is not None:
        assert delta_minor(V, E) != 0
    return E


# ---------------------------------------------------------------------------
# rooted forests and the bipartite Gauss set


@dataclass(frozen=True)
class ForestCertificate:
    V: frozenset[int]
    T: tuple[Edge, ...]


def rooted_spanning_forests(G: LoopedGraph, V: Iterable[int]) -> list[ForestCertificate]:
    """Edge sets T with |T| = d - |V| forming a forest whose components each hold one vertex of V."""
    V = frozenset(V)
    if not V:
        raise ValueError("root set must be nonempty")
    need = G.d - len(V)
    edges = G.edges
    m = len(edges)
    out = []
    comp0 = list(range(G.d + 1))
    rooted0 = [False] + [v in V for v in range(1, G.d + 1)]

    def walk(k, chosen, comp, rooted):
        if len(chosen) == need:
            out.append(ForestCertificate(V, tuple(chosen)))
            return
        if m - k < need - len(chosen):
            return
        a, b = edges[k]
        ca, cb = comp[a], comp[b]
        if ca != cb and not (rooted[ca] and rooted[cb]):
            comp2 = [ca if x == cb else x for x in comp]
            rooted2 = rooted[:]
            rooted2[ca] = rooted[ca] or rooted[cb]
            walk(k + 1, chosen + [edges[k]], comp2, rooted2)
        walk(k + 1, chosen, comp, rooted)

    walk(0, [], comp0, rooted0)
    return out


def forest_generator(d: int, V: Iterable[int], T: Iterable[Edge]) -> Monomial:
    """g_{V,T} = x_V e_T / x_{V^c}."""
    V = set(V)
    exps = [1 if v in V else -1 for v in range(1, d + 1)]
    for a, b in T:
        exps[a - 1] += 1
        exps[b - 1] += 1
    return Monomial(tuple(exps))


def _nonempty_subsets(s):
    s = sorted(s)
    for k in range(1, len(s) + 1):
        yield from combinations(s, k)


def check_loop_cover(G: LoopedGraph) -> None:
    for comp in G.components():
        if not comp & G.loops:
            raise DimensionError(f"component {sorted(comp)} has no loop; the edge ring has dimension < d")


def gauss_from_forests(G: LoopedGraph) -> tuple[Monomial, ...]:
    """Gauss generators of K[G^L] for bipartite G, one per (V, T) pair."""
    if not G.is_bipartite():
        raise ValueError("forest description needs a bipartite graph")
    check_loop_cover(G)
    gens = set()
    for V in _nonempty_subsets(G.loops):
        for cert in rooted_spanning_forests(G, V):
            gens.add(forest_generator(G.d, V, cert.T))
    return canonical(gens)


def nonbipartite_gauss_supports(G: LoopedGraph) -> list[tuple[Edge, ...]]:
    """d-subsets of edges whose subgraph has an odd cycle in every component."""
    if G.loops:
        raise ValueError("expected a loop-less graph")
    if not G.is_connected():
        raise ValueError("expected a connected graph")
    if G.is_bipartite():
        raise ValueError("graph is bipartite: every d x d incidence minor vanishes")
    return [E for E in combinations(G.edges, G.d) if odd_cycle_every_component(G.d, E)]


def support_generator(d: int, E: Iterable[Edge]) -> Monomial:
    """(prod of edges in E) / (x_1 ... x_d)."""
    exps = [-1] * d
    for a, b in E:
        exps[a - 1] += 1
        exps[b - 1] += 1
    return Monomial(tuple(exps))


def spanning_tree_count(G: LoopedGraph) -> int:
    """Number of spanning trees (loops ignored), by the reduced Laplacian determinant."""
    d = G.d
    if d <= 1:
        return 1
    L = [[0] * d for _ in range(d)]
    for a, b in G.edges:
        a -= 1
        b -= 1
        L[a][a] += 1
        L[b][b] += 1
        L[a][b] -= 1
        L[b][a] -= 1
    return det_exact([row[1:] for row in L[1:]])


def spanning_trees(G: LoopedGraph) -> list[tuple[Edge, ...]]:
    """All spanning trees by exhaustive (d-1)-subset check; oracle for small graphs."""
    d = G.d
    out = []
    for T in combinations(G.edges, d - 1):
        g = nx.Graph()
        g.add_nodes_from(range(1, d + 1))
        g.add_edges_from(T)
        if nx.is_tree(g):
            out.append(T)
    return out


# ---------------------------------------------------------------------------
# path graphs


def path_lambda(d: int) -> int:
    """Sum over compositions of d of the product of the parts."""
    if d < 1:
        raise ValueError("d must be positive")
    total = 0
    for r in range(1, d + 1):
        for cuts in combinations(range(1, d), r - 1):
            a = (0,) + cuts + (d,)
            total += math.prod(a[i + 1] - a[i] for i in range(r))
    return total


def lambda_recursion_table(max_d: int) -> list[tuple[int, int, int | None]]:
    """Rows (d, lambda_d, 3 lambda_{d-1} - lambda_{d-2}) for d <= max_d."""
    vals = {d: path_lambda(d) for d in range(1, max_d + 1)}
    return [(d, vals[d], 3 * vals[d - 1] - vals[d - 2] if d >= 3 else None) for d in range(1, max_d + 1)]


# ---------------------------------------------------------------------------
# hypersurface scan over small bipartite graphs

SCAN_CAP = 7  # the networkx graph atlas lists every graph on at most 7 nodes


@dataclass(frozen=True)
class ScanRow:
    d: int
    edges: tuple[Edge, ...]
    loop: int
    bipartite: bool
    even_cycle: bool
    edim: int
    dim: int
    kernel_rank: int
    tree_count: int

    @property
    def hypersurface(self) -> bool:
        return self.kernel_rank == 1

    @property
    def hypersurface_dim_d_minus_1(self) -> bool:
        return self.kernel_rank == 1 and self.dim == self.d - 1

    @property
    def counterexample(self) -> bool:
        return self.bipartite and self.hypersurface_dim_d_minus_1 != self.even_cycle


@dataclass
class ScanReport:
    max_d: int
    rows: list[ScanRow] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[ScanRow]:
        return [r for r in self.rows if r.counterexample]

    def format(self) -> str:
        lines = ["d\tloop\tedim\tdim\tkrank\ttrees\thyp(d-1)\teven_cycle\tflag\tedges"]
        for r in self.rows:
            es = " ".join(f"{a}-{b}" for a, b in r.edges)
            flag = "CANDIDATE" if r.counterexample else ""
            lines.append(
                f"{r.d}\t{r.loop}\t{r.edim}\t{r.dim}\t{r.kernel_rank}\t{r.tree_count}\t"
                f"{int(r.hypersurface_dim_d_minus_1)}\t{int(r.even_cycle)}\t{flag}\t{es}"
            )
        return "\n".join(lines)


def _is_even_cycle(G: LoopedGraph) -> bool:
    g = G.nx()
    return G.d % 2 == 0 and G.is_connected() and all(deg == 2 for _, deg in g.degree)


def _loop_orbit_reps(g: nx.Graph) -> list:
    reps = []
    for v in sorted(g.nodes):
        gv = g.copy()
        nx.set_node_attributes(gv, {u: u == v for u in gv.nodes}, "loop")
        same = False
        for _, gw in reps:
            if nx.is_isomorphic(gv, gw, node_match=lambda a, b: a["loop"] == b["loop"]):
                same = True
                break
        if not same:
            reps.append((v, gv))
    return [v for v, _ in reps]


def small_connected_graphs(max_d: int, bipartite_only: bool = True):
    """Connected graphs on 2..max_d vertices, one per isomorphism class."""
    if max_d > SCAN_CAP:
        raise ValueError(f"scan cap exceeded: max_d = {max_d} > {SCAN_CAP}")
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < 2 or n > max_d or not nx.is_connected(g):
            continue
        if bipartite_only and not nx.is_bipartite(g):
            continue
        yield g


def conjecture_scan(max_d: int, bipartite_only: bool = True) -> ScanReport:
    """Tabulate dim and relation rank of the Gauss algebra for every
    (connected graph, single loop) pair on at most ``max_d`` vertices."""
    from .gauss import gauss_generators, relation_report

    report = ScanReport(max_d)
    for g in small_connected_graphs(max_d, bipartite_only):
        base = from_networkx(g)
        for v in _loop_orbit_reps(base.nx()):
            G = base.with_loops([v])
            bip = G.is_bipartite()
            if bip:
                gens = gauss_from_forests(G)
            else:
                gens = gauss_generators(edge_ring(G)).gens
            rel = relation_report(gens, witness=False)
            trees = spanning_tree_count(G)
            if bip:
                assert len(gens) <= trees, (G, len(gens), trees)
            report.rows.append(
                ScanRow(G.d, G.edges, v, bip, _is_even_cycle(G), rel.edim, rel.dim, rel.kernel_rank, trees)
            )
    return report
