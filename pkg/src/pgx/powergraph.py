"""Brute-force power graphs, the independent oracle for every spectrum formula.

The directed power graph has an arc x -> y exactly when y is a positive power
of x and y != x; the undirected power graph joins x and y when either is a
power of the other. Both are derived from one boolean membership matrix
M[i, j] = (j lies in the cyclic subgroup generated by i), built by a
vectorized successive-power scan over the dense Cayley table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .errors import InputError, InvariantError, ResourceError
from .groups import DEFAULT_TABLE_CAP, GroupTable

_CAP_HINT = ("; spectrum formulas (stats/spectrum commands) handle groups of "
             "any size without building the graph")


def _require_within_cap(g: GroupTable, cap: int) -> None:
    if g.size > cap:
        raise ResourceError(
            f"{g.name}: order {g.size} exceeds the brute-force cap {cap}" + _CAP_HINT)


def _closure_matrix(g: GroupTable, cap: int) -> tuple[np.ndarray, np.ndarray]:
    """Element orders and the membership matrix M[i, j] = (j in <i>).

    Walks g^1, g^2, ... for all elements simultaneously, compacting away
    elements whose cycle has closed.
    """
    _require_within_cap(g, cap)
    table = g.materialized(cap).table
    n = g.size
    identity = g.identity
    orders = np.zeros(n, dtype=np.int64)
    member = np.zeros((n, n), dtype=bool)
    base = np.arange(n)
    cur = np.arange(n)
    k = 1
    while base.size:
        member[base, cur] = True
        done = cur == identity
        if done.any():
            orders[base[done]] = k
            base = base[~done]
            cur = cur[~done]
            if base.size == 0:
                break
        cur = table[cur, base]
        k += 1
        if k > n:
            raise InvariantError(
                f"{g.name}: some element produced more than {n} distinct powers; "
                "the table is not a group")
    if not member.diagonal().all():
        raise InvariantError(f"{g.name}: an element fell outside its own cyclic "
                             "subgroup; the scan is corrupted")
    return orders, member


@dataclass(frozen=True, eq=False)
class DirectedPowerGraph:
    """Arc list (src, dst) plus the mutual pairs {a, b} with <a> = <b>."""

    size: int
    arcs: np.ndarray          # shape (num_arcs, 2), lexicographic
    mutual_pairs: np.ndarray  # shape (num_mutual, 2), a < b, lexicographic
    labels: tuple[str, ...] | None
    name: str

    @property
    def num_arcs(self) -> int:
        return int(self.arcs.shape[0])

    @property
    def num_mutual(self) -> int:
        return int(self.mutual_pairs.shape[0])

    def out_degrees(self) -> list[int]:
        return np.bincount(self.arcs[:, 0], minlength=self.size).tolist()


@dataclass(frozen=True, eq=False)
class UndirectedPowerGraph:
    size: int
    edges: np.ndarray         # shape (num_edges, 2), a < b, lexicographic
    labels: tuple[str, ...] | None
    name: str

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def degrees(self) -> list[int]:
        both = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        return np.bincount(both, minlength=self.size).tolist()


def build_directed(g: GroupTable, cap: int = DEFAULT_TABLE_CAP) -> DirectedPowerGraph:
    orders, member = _closure_matrix(g, cap)
    off = member.copy()
    np.fill_diagonal(off, False)
    arcs = np.argwhere(off)
    mutual = np.argwhere(np.triu(member & member.T, 1))
    labels = tuple(g.labels) if g.labels is not None else None
    return DirectedPowerGraph(g.size, arcs, mutual, labels, g.name)


def build_undirected(g: GroupTable, cap: int = DEFAULT_TABLE_CAP) -> UndirectedPowerGraph:
    _, member = _closure_matrix(g, cap)
    sym = member | member.T
    np.fill_diagonal(sym, False)
    edges = np.argwhere(np.triu(sym, 1))
    labels = tuple(g.labels) if g.labels is not None else None
    return UndirectedPowerGraph(g.size, edges, labels, g.name)


def oracle_counts(g: GroupTable, cap: int = DEFAULT_TABLE_CAP) -> tuple[int, int, int]:
    """(arcs, mutual pairs, undirected edges) counted from the explicit graph,
    without materializing pair lists. This is the check against the spectrum
    formulas, so it deliberately shares no arithmetic with them."""
    _, member = _closure_matrix(g, cap)
    n = g.size
    arcs = int(member.sum()) - n
    mutual_twice = int((member & member.T).sum()) - n
    sym_twice = int((member | member.T).sum()) - n
    if mutual_twice % 2 or sym_twice % 2:
        raise InvariantError(f"{g.name}: membership matrix gave an odd pair count")
    return arcs, mutual_twice // 2, sym_twice // 2


def degree_sequence(graph: DirectedPowerGraph | UndirectedPowerGraph) -> list[int]:
    """Degrees sorted descending; out-degrees for the directed graph, where
    the out-degree of g equals its element order minus one."""
    if isinstance(graph, DirectedPowerGraph):
        degrees = graph.out_degrees()
    elif isinstance(graph, UndirectedPowerGraph):
        degrees = graph.degrees()
    else:
        raise InputError(f"not a power graph: {graph!r}")
    return sorted(degrees, reverse=True)


def _vertex_name(graph, i: int) -> str:
    return graph.labels[i] if graph.labels is not None else str(i)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export(graph: DirectedPowerGraph | UndirectedPowerGraph,
           fmt: str, sink: TextIO) -> None:
    """Write the graph deterministically as DOT or edge CSV.

    DOT names vertices by their labels; CSV rows carry numeric indices with
    header src,dst (arcs) or a,b (edges, a < b). An empty graph yields a
    valid document with no edge rows.
    """
    directed = isinstance(graph, DirectedPowerGraph)
    if not directed and not isinstance(graph, UndirectedPowerGraph):
        raise InputError(f"not a power graph: {graph!r}")
    pairs = graph.arcs if directed else graph.edges
    if fmt == "dot":
        kind, connector = ("digraph", "->") if directed else ("graph", "--")
        sink.write(f"{kind} {_quote(graph.name)} {{\n")
        for i in range(graph.size):
            sink.write(f"  {_quote(_vertex_name(graph, i))};\n")
        for a, b in pairs.tolist():
            sink.write(f"  {_quote(_vertex_name(graph, a))} {connector} "
                       f"{_quote(_vertex_name(graph, b))};\n")
        sink.write("}\n")
    elif fmt == "edge-csv":
        sink.write("src,dst\n" if directed else "a,b\n")
        for a, b in pairs.tolist():
            sink.write(f"{a},{b}\n")
    else:
        raise InputError(f"unknown graph export format {fmt!r} (use dot or edge-csv)")
