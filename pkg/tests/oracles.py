"""Independent reference implementations used to cross-check the package.

Everything here is written from the definitions, on purpose sharing no code
with src/: connectivity by plain BFS, bi-connectivity by delete-one-vertex
connectivity, optima by exhaustive labeling, distances by multi-source BFS.
Slow is fine; these only run on small inputs.
"""

from __future__ import annotations

import random
from itertools import product

from bcpart import Instance, build_graph


def connected(adjacency, nodes) -> bool:
    nodes = set(nodes)
    if not nodes:
        return False
    start = min(nodes)
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for v in adjacency[u]:
            if v in nodes and v not in seen:
                seen.add(v)
                todo.append(v)
    return len(seen) == len(nodes)


def ref_biconnected(graph, nodes) -> bool:
    """Definition-based check: connected and still connected after removing
    any single vertex.  Same size conventions as the library (0 no, 1 yes,
    2 no)."""
    nodes = set(nodes)
    if len(nodes) == 0:
        return False
    if len(nodes) == 1:
        return True
    if len(nodes) == 2:
        return False
    if not connected(graph.adjacency, nodes):
        return False
    for v in nodes:
        if not connected(graph.adjacency, nodes - {v}):
            return False
    return True


def ref_articulation_points(graph, nodes) -> set:
    """Cut vertices by the remove-and-recheck definition, per component."""
    nodes = set(nodes)
    cut = set()
    comps = []
    left = set(nodes)
    while left:
        start = left.pop()
        comp = {start}
        todo = [start]
        while todo:
            u = todo.pop()
            for v in graph.adjacency[u]:
                if v in nodes and v not in comp:
                    comp.add(v)
                    todo.append(v)
        left -= comp
        comps.append(comp)
    for comp in comps:
        if len(comp) < 3:
            continue
        for v in comp:
            rest = comp - {v}
            if not connected(graph.adjacency, rest):
                cut.add(v)
    return cut


def two_disjoint_paths(graph, nodes, s, t) -> bool:
    """Brute force: do two s-t paths with disjoint interiors exist in the
    induced subgraph?  Enumerates all simple paths; only for tiny graphs."""
    nodes = set(nodes)
    paths = []

    def extend(path):
        u = path[-1]
        if u == t:
            paths.append(tuple(path[1:-1]))
            return
        for v in graph.adjacency[u]:
            if v in nodes and v not in path:
                extend(path + [v])

    extend([s])
    for i, a in enumerate(paths):
        sa = set(a)
        for b in paths[i + 1:]:
            if sa.isdisjoint(b):
                return True
    return False


def naive_optimum(instance: Instance) -> int:
    """Exhaustive optimum by trying every labeling of non-root nodes.

    Roots are pinned to their own subgraph; every other node tries
    'unassigned' plus each subgraph index.  Exponential; keep node counts
    small (about <= 10 with 2 roots)."""
    g = instance.graph
    k = len(instance.roots)
    root_of = {r: i for i, r in enumerate(instance.roots)}
    free = [u for u in range(g.node_count) if u not in root_of]
    best = k  # roots alone are always feasible
    for labels in product(range(-1, k), repeat=len(free)):
        groups = [[r] for r in instance.roots]
        for u, lab in zip(free, labels):
            if lab != -1:
                groups[lab].append(u)
        total = 0
        ok = True
        for nodes in groups:
            if len(nodes) > instance.capacity:
                ok = False
                break
            if not ref_biconnected(g, nodes):
                ok = False
                break
            total += len(nodes)
        if ok and total > best:
            best = total
    return best


def exact_hop_layers(graph, sources, allowed) -> dict:
    """Multi-source BFS layer index over `allowed` nodes: nodes adjacent to
    a source get 0, their new neighbors 1, and so on."""
    dist = {}
    frontier = []
    for s in sources:
        for v in graph.adjacency[s]:
            if v in allowed and v not in dist:
                dist[v] = 0
                frontier.append(v)
    d = 0
    while frontier:
        nxt = []
        for u in frontier:
            for v in graph.adjacency[u]:
                if v in allowed and v not in dist:
                    dist[v] = d + 1
                    nxt.append(v)
        frontier = nxt
        d += 1
    return dist


def best_subset_sum(budget: int, values) -> int:
    """Largest achievable sum <= budget, by explicit reachable-sum set."""
    sums = {0}
    for v in values:
        sums |= {s + v for s in sums if s + v <= budget}
    return max(sums)


def unassigned_path_exists(graph, assignment, i, j) -> bool:
    """Is there a path from subgraph i to subgraph j whose interior nodes
    are all unassigned?  Direct i-j edges do not count."""
    start = [u for u, a in enumerate(assignment) if a == i]
    goal = {u for u, a in enumerate(assignment) if a == j}
    seen = set()
    todo = []
    for u in start:
        for v in graph.adjacency[u]:
            if assignment[v] == -1 and v not in seen:
                seen.add(v)
                todo.append(v)
    while todo:
        u = todo.pop()
        for v in graph.adjacency[u]:
            if v in goal:
                return True
            if assignment[v] == -1 and v not in seen:
                seen.add(v)
                todo.append(v)
    return False


def random_graph(rng: random.Random, node_count: int, edge_prob: float):
    edges = []
    for u in range(node_count):
        for v in range(u + 1, node_count):
            if rng.random() < edge_prob:
                edges.append((u, v))
    return build_graph(node_count, edges)


def random_biconnected_graph(rng: random.Random, node_count: int, chords: int):
    """Hamiltonian cycle plus random chords: bi-connected by construction."""
    order = list(range(node_count))
    rng.shuffle(order)
    edge_set = set()
    for i in range(node_count):
        u, v = order[i], order[(i + 1) % node_count]
        edge_set.add((min(u, v), max(u, v)))
    tries = 0
    while tries < chords * 4 and len(edge_set) < node_count + chords:
        u, v = rng.randrange(node_count), rng.randrange(node_count)
        tries += 1
        if u != v:
            edge_set.add((min(u, v), max(u, v)))
    return build_graph(node_count, sorted(edge_set))


def random_instance(rng: random.Random, max_nodes: int = 12) -> Instance:
    """Small random instance: sparse-ish random graph, random distinct
    roots, small capacity.  Not guaranteed solvable beyond the roots."""
    node_count = rng.randint(5, max_nodes)
    g = random_graph(rng, node_count, rng.uniform(0.25, 0.5))
    k = rng.randint(1, 3)
    roots = tuple(rng.sample(range(node_count), k))
    capacity = rng.randint(3, 7)
    return Instance(graph=g, roots=roots, capacity=capacity)
