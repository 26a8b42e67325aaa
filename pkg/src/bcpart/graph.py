"""Graph primitives: adjacency-list graphs, unit-disc construction,
articulation points and bi-connectivity tests, instance JSON I/O.

Neighbor lists keep edge insertion order; every algorithm in this package
iterates neighbors in that order, so the edge sequence passed to build_graph
is the global tie-break for all deterministic runs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


class Graph:
    """Immutable undirected graph with optional 2D coordinates."""

    __slots__ = ("node_count", "adjacency", "coords")

    def __init__(self, node_count: int, adjacency, coords=None):
        self.node_count = node_count
        self.adjacency = adjacency      # tuple of tuples, insertion-ordered
        self.coords = coords            # tuple of (x, y) or None

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in u-major order."""
        for u in range(self.node_count):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def __repr__(self):
        return f"Graph(n={self.node_count}, m={self.edge_count()})"


def build_graph(node_count: int, edges, coords=None) -> Graph:
    """Build a graph from an edge list.

    Rejects self-loops, duplicate edges (either orientation) and endpoints
    outside [0, node_count).  Neighbor order follows the edge sequence.
    """
    if node_count < 0:
        raise ValueError("node_count must be non-negative")
    adj: list[list[int]] = [[] for _ in range(node_count)]
    seen = set()
    for u, v in edges:
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise ValueError(f"edge ({u},{v}) out of range for {node_count} nodes")
        if u == v:
            raise ValueError(f"self-loop at node {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    if coords is not None:
        coords = tuple((float(x), float(y)) for x, y in coords)
        if len(coords) != node_count:
            raise ValueError("coords length must match node_count")
    return Graph(node_count, tuple(tuple(a) for a in adj), coords)


def unit_disc_graph(points, radius: float) -> Graph:
    """Disc graph on 2D points: edge iff squared distance <= radius**2.

    Comparison is done on squared values so boundary pairs are included
    exactly.  Edges are produced in lexicographic (u, v) order.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    pts = [(float(x), float(y)) for x, y in points]
    r2 = radius * radius
    edges = []
    for i in range(len(pts)):
        xi, yi = pts[i]
        for j in range(i + 1, len(pts)):
            dx = pts[j][0] - xi
            dy = pts[j][1] - yi
            if dx * dx + dy * dy <= r2:
                edges.append((i, j))
    return build_graph(len(pts), edges, coords=pts)


def _induced_adjacency(g: Graph, nodes):
    """Set-filtered view used by the DFS routines below."""
    node_set = nodes if isinstance(nodes, (set, frozenset)) else set(nodes)
    for u in node_set:
        if not (0 <= u < g.node_count):
            raise ValueError(f"node {u} not in graph")
    return node_set


def articulation_points(g: Graph, nodes) -> set[int]:
    """Cut vertices of the subgraph induced by `nodes`.

    Works per connected component of the induced subgraph; empty input
    gives an empty result.  Iterative low-link DFS.
    """
    node_set = _induced_adjacency(g, nodes)
    if not node_set:
        return set()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cut: set[int] = set()
    counter = 0
    for start in node_set:
        if start in disc:
            continue
        root_children = 0
        disc[start] = low[start] = counter
        counter += 1
        # stack entries: (node, parent, iterator over neighbors)
        stack = [(start, -1, iter(g.adjacency[start]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v not in node_set:
                    continue
                if v not in disc:
                    if u == start:
                        root_children += 1
                    disc[v] = low[v] = counter
                    counter += 1
                    stack.append((v, u, iter(g.adjacency[v])))
                    advanced = True
                    break
                elif v != parent:
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if p != start and low[u] >= disc[p]:
                    cut.add(p)
        if root_children >= 2:
            cut.add(start)
    return cut


def is_biconnected(g: Graph, nodes) -> bool:
    """True iff the induced subgraph is connected and has no cut vertex.

    Size conventions: a single node is bi-connected, an empty set is not,
    and a two-node subgraph never is.  Single low-link DFS, bails on the
    first articulation point found.
    """
    node_set = _induced_adjacency(g, nodes)
    if len(node_set) == 0:
        return False
    if len(node_set) == 1:
        return True
    if len(node_set) == 2:
        return False
    start = next(iter(node_set))
    disc = {start: 0}
    low = {start: 0}
    counter = 1
    root_children = 0
    stack = [(start, -1, iter(g.adjacency[start]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for v in it:
            if v not in node_set:
                continue
            if v not in disc:
                if u == start:
                    root_children += 1
                    if root_children >= 2:
                        return False
                disc[v] = low[v] = counter
                counter += 1
                stack.append((v, u, iter(g.adjacency[v])))
                advanced = True
                break
            elif v != parent and disc[v] < low[u]:
                low[u] = disc[v]
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if p != start and low[u] >= disc[p]:
                return False
    return len(disc) == len(node_set)


def biconnected_components(g: Graph, nodes=None) -> list[set[int]]:
    """Node sets of the bi-connected components of the induced subgraph.

    Components are edge-maximal; a bridge yields a two-node component.
    Isolated nodes yield no component.
    """
    node_set = _induced_adjacency(g, nodes if nodes is not None else range(g.node_count))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    comps: list[set[int]] = []
    counter = 0
    for start in node_set:
        if start in disc:
            continue
        disc[start] = low[start] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(start, -1, iter(g.adjacency[start]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v not in node_set:
                    continue
                if v not in disc:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = counter
                    counter += 1
                    stack.append((v, u, iter(g.adjacency[v])))
                    advanced = True
                    break
                elif v != parent and disc[v] < disc[u]:
                    # back edge to an ancestor, recorded once
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    # u cannot reach above p: edges down to (p, u) are one component
                    comp: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.add(a)
                        comp.add(b)
                        if (a, b) == (p, u):
                            break
                    comps.append(comp)
    return comps


@dataclass(frozen=True)
class Instance:
    """A problem instance: graph, one root per subgraph, size cap M.

    Feasible solutions assign each node to at most one subgraph; subgraph i
    must contain root i, hold at most `capacity` nodes and induce a
    bi-connected subgraph.
    """

    graph: Graph
    roots: tuple[int, ...]
    capacity: int
    known_optimum: int | None = None
    meta: dict | None = field(default=None)

    def __post_init__(self):
        if self.capacity < 1:
            raise ValueError("capacity must be >= 1")
        if len(set(self.roots)) != len(self.roots):
            raise ValueError("roots must be distinct")
        for r in self.roots:
            if not (0 <= r < self.graph.node_count):
                raise ValueError(f"root {r} out of range")
        if self.known_optimum is not None and self.known_optimum > self.graph.node_count:
            raise ValueError("known optimum exceeds node count")
        object.__setattr__(self, "roots", tuple(self.roots))

    @property
    def subgraph_count(self) -> int:
        return len(self.roots)


def instance_to_json(instance: Instance) -> str:
    """Serialize an instance to the canonical JSON layout.

    Nodes carry coordinates when present; edges appear once with u < v in
    lexicographic order, which is also the neighbor order after a reload.
    """
    g = instance.graph
    nodes = []
    for i in range(g.node_count):
        entry: dict = {"id": i}
        if g.coords is not None:
            entry["x"] = g.coords[i][0]
            entry["y"] = g.coords[i][1]
        nodes.append(entry)
    payload: dict = {
        "nodes": nodes,
        "edges": sorted(g.edges()),
        "roots": list(instance.roots),
        "capacity": instance.capacity,
    }
    if instance.known_optimum is not None:
        payload["optimum"] = instance.known_optimum
    if instance.meta is not None:
        payload["meta"] = instance.meta
    return json.dumps(payload)


def instance_from_json(text: str) -> Instance:
    """Parse the canonical instance JSON; edge order in the file is kept."""
    payload = json.loads(text)
    nodes = payload["nodes"]
    n = len(nodes)
    ids = [entry["id"] for entry in nodes]
    if sorted(ids) != list(range(n)):
        raise ValueError("node ids must be exactly 0..n-1")
    coords = None
    if nodes and "x" in nodes[0]:
        by_id = {entry["id"]: (entry["x"], entry["y"]) for entry in nodes}
        coords = [by_id[i] for i in range(n)]
    edges = [(int(u), int(v)) for u, v in payload["edges"]]
    graph = build_graph(n, edges, coords=coords)
    return Instance(
        graph=graph,
        roots=tuple(int(r) for r in payload["roots"]),
        capacity=int(payload["capacity"]),
        known_optimum=payload.get("optimum"),
        meta=payload.get("meta"),
    )


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return instance_from_json(fh.read())


def save_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(instance_to_json(instance))
        fh.write("\n")


def disc_radius(alpha: float, n: int, capacity: int) -> float:
    """Connectivity radius used by the generator: 1/sqrt(alpha * n * M)."""
    return 1.0 / math.sqrt(alpha * n * capacity)
