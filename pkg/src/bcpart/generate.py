"""Random instances with a known optimal objective, plus a star-shaped
reduction from supply-constrained demand selection.

Instances are built from n unit-disc blocks, each an exactly-M-node
bi-connected disc graph sampled inside its own rectangle of area about 1/n.
Blocks are translated into the unit square so that every placement adds
enough cross edges to blur the block boundaries while keeping node degrees
balanced.  Because each block stays bi-connected and holds exactly M nodes,
assigning every block to its own root is feasible and covers all n*M
nodes, so the optimum is known by construction; the block membership
vector is kept as a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from random import Random

from .graph import (
    Graph,
    Instance,
    articulation_points,
    biconnected_components,
    build_graph,
    disc_radius,
    is_biconnected,
    unit_disc_graph,
)


class GenerationError(RuntimeError):
    """Raised when sampling budgets run out without a valid artifact."""


@dataclass(frozen=True)
class GenConfig:
    n: int                       # number of blocks / subgraphs
    capacity: int                # block size M
    alpha: float                 # density control; larger = sparser
    delta: float = 1.1           # oversampling factor per point batch
    gamma: float = 0.2           # cross-edge requirement factor
    position_trials: int = 1000  # candidate translations per block
    seed: int = 0
    block_attempt_budget: int = 100_000
    assembly_restarts: int = 20
    max_batches_per_box: int = 16

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.capacity < 3:
            raise ValueError("capacity must be >= 3 (blocks need a cycle)")
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.delta < 1.0:
            raise ValueError("delta must be >= 1")
        if not (0.0 <= self.gamma <= 1.0):
            raise ValueError("gamma must be in [0, 1]")


@dataclass
class Block:
    """One sampled building block, positioned at its box origin."""

    coords: list[tuple[float, float]]
    graph: Graph
    root: int
    box: tuple[float, float]


@dataclass(frozen=True)
class GeneratedInstance:
    instance: Instance
    block_membership: tuple[int, ...]


def _boundary_points(bw: float, bh: float, per_edge: int, rng: Random):
    """Random points pinned to each side of the box, bottom/top/left/right."""
    pts = []
    for _ in range(per_edge):
        pts.append((rng.uniform(0.0, bw), 0.0))
    for _ in range(per_edge):
        pts.append((rng.uniform(0.0, bw), bh))
    for _ in range(per_edge):
        pts.append((0.0, rng.uniform(0.0, bh)))
    for _ in range(per_edge):
        pts.append((bw, rng.uniform(0.0, bh)))
    return pts


def _trim_to_size(g: Graph, nodes: set[int], target: int, coords) -> set[int] | None:
    """Shrink a bi-connected node set to `target` nodes.

    Repeatedly removes the outermost (farthest from the current centroid)
    non-cut node whose removal keeps the set bi-connected; gives up when no
    single node can be removed safely.
    """
    nodes = set(nodes)
    while len(nodes) > target:
        # one sweep per refresh of the cut set / centroid ordering; a node
        # that fails the recheck is skipped for the rest of the sweep
        cut = articulation_points(g, nodes)
        cx = sum(coords[u][0] for u in nodes) / len(nodes)
        cy = sum(coords[u][1] for u in nodes) / len(nodes)
        cands = sorted(
            (u for u in nodes if u not in cut),
            key=lambda u: (-((coords[u][0] - cx) ** 2 + (coords[u][1] - cy) ** 2), u),
        )
        removed_any = False
        for v in cands:
            if len(nodes) == target:
                break
            nodes.discard(v)
            if is_biconnected(g, nodes):
                removed_any = True
            else:
                nodes.add(v)
        if not removed_any:
            return None
    return nodes


def generate_block(capacity: int, n: int, cfg: GenConfig, rng: Random) -> Block:
    """Sample one bi-connected disc-graph block of exactly `capacity` nodes.

    Points arrive in batches of ceil(capacity * delta) inside a random box
    of area about 1/n (the first batch pins up to 4 points per box side);
    after each batch the accumulated disc graph is checked for a
    bi-connected component of at least `capacity` nodes, which is then
    trimmed down to size.  Each batch counts against the attempt budget.
    """
    d = disc_radius(cfg.alpha, n, capacity)
    d2 = d * d
    batch_size = math.ceil(capacity * cfg.delta)
    attempts = 0
    while attempts < cfg.block_attempt_budget:
        shape = rng.uniform(0.5, 1.0)
        bw = min(1.0 / (math.sqrt(n) * shape), 1.0)
        bh = shape / math.sqrt(n)
        pts: list[tuple[float, float]] = []
        edges: list[tuple[int, int]] = []
        for _ in range(cfg.max_batches_per_box):
            if attempts >= cfg.block_attempt_budget:
                break
            attempts += 1
            if pts:
                fresh = []
            else:
                per_edge = min(4, batch_size // 4)
                fresh = _boundary_points(bw, bh, per_edge, rng)
            while len(fresh) < batch_size:
                fresh.append((rng.uniform(0.0, bw), rng.uniform(0.0, bh)))
            base = len(pts)
            # incremental edge update: new points against everything
            for li, (x, y) in enumerate(fresh):
                gi = base + li
                for j in range(gi):
                    ox, oy = pts[j] if j < base else fresh[j - base]
                    dx = x - ox
                    dy = y - oy
                    if dx * dx + dy * dy <= d2:
                        edges.append((j, gi))
            pts.extend(fresh)
            g = build_graph(len(pts), edges)
            comps = biconnected_components(g)
            big = [c for c in comps if len(c) >= capacity]
            if not big:
                continue
            big.sort(key=lambda c: (-len(c), min(c)))
            kept = _trim_to_size(g, big[0], capacity, pts)
            if kept is None:
                continue
            selected = sorted(kept)
            sel_coords = [pts[u] for u in selected]
            # renormalize to the trimmed blob's own bounding box so the
            # placement stage can slide it anywhere in the unit square
            min_x = min(x for x, _ in sel_coords)
            min_y = min(y for _, y in sel_coords)
            sel_coords = [(x - min_x, y - min_y) for x, y in sel_coords]
            span_x = max(x for x, _ in sel_coords)
            span_y = max(y for _, y in sel_coords)
            block_graph = unit_disc_graph(sel_coords, d)
            root = rng.randrange(capacity)
            return Block(coords=sel_coords, graph=block_graph, root=root,
                         box=(span_x, span_y))
    raise GenerationError(
        f"no bi-connected {capacity}-node block found within "
        f"{cfg.block_attempt_budget} sampling batches (alpha={cfg.alpha}, n={n})")


def _probe_cross(coords_abs, grid, pts, d2):
    """All (local_index, placed_index) pairs within disc radius."""
    pairs = []
    inv = 1.0 / math.sqrt(d2)
    for li, (x, y) in enumerate(coords_abs):
        gx = int(x * inv)
        gy = int(y * inv)
        for cx in (gx - 1, gx, gx + 1):
            for cy in (gy - 1, gy, gy + 1):
                bucket = grid.get((cx, cy))
                if not bucket:
                    continue
                for j in bucket:
                    ox, oy = pts[j]
                    dx = x - ox
                    dy = y - oy
                    if dx * dx + dy * dy <= d2:
                        pairs.append((li, j))
    return pairs


def assemble_instance(blocks: list[Block], cfg: GenConfig, rng: Random) -> GeneratedInstance:
    """Translate blocks into the unit square and fuse them into one instance.

    Every block after the first must gain at least max(3, ceil(gamma * its
    edge count)) cross edges to the already-placed graph; among the sampled
    positions that qualify, the one minimizing the merged maximum degree
    wins.  Node ids are randomly permuted at the end.
    """
    d = disc_radius(cfg.alpha, cfg.n, cfg.capacity)
    d2 = d * d
    inv = 1.0 / d
    for _ in range(cfg.assembly_restarts):
        pts: list[tuple[float, float]] = []
        degrees: list[int] = []
        membership: list[int] = []
        edges: list[tuple[int, int]] = []
        roots_global: list[int] = []
        grid: dict[tuple[int, int], list[int]] = {}
        global_max_deg = 0
        ok = True
        for bi, block in enumerate(blocks):
            bw, bh = block.box
            block_deg = [block.graph.degree(i) for i in range(len(block.coords))]
            placed = None
            if bi == 0:
                tx = rng.uniform(0.0, 1.0 - bw)
                ty = rng.uniform(0.0, 1.0 - bh)
                placed = (tx, ty, [])
            else:
                min_con = max(3, math.ceil(cfg.gamma * block.graph.edge_count()))
                best = None
                for _ in range(cfg.position_trials):
                    tx = rng.uniform(0.0, 1.0 - bw)
                    ty = rng.uniform(0.0, 1.0 - bh)
                    abs_coords = [(x + tx, y + ty) for x, y in block.coords]
                    cross = _probe_cross(abs_coords, grid, pts, d2)
                    if len(cross) < min_con:
                        continue
                    touched: dict[int, int] = {}
                    bcnt = [0] * len(block.coords)
                    for li, gj in cross:
                        touched[gj] = touched.get(gj, 0) + 1
                        bcnt[li] += 1
                    cand_max = max(
                        global_max_deg,
                        max(degrees[gj] + c for gj, c in touched.items()),
                        max(block_deg[li] + bcnt[li]
                            for li in range(len(block.coords))),
                    )
                    if best is None or cand_max < best[0]:
                        best = (cand_max, tx, ty, cross)
                if best is None:
                    ok = False
                    break
                placed = (best[1], best[2], best[3])
            tx, ty, cross = placed
            base = len(pts)
            for li, (x, y) in enumerate(block.coords):
                ax, ay = x + tx, y + ty
                pts.append((ax, ay))
                degrees.append(block_deg[li])
                membership.append(bi)
                grid.setdefault((int(ax * inv), int(ay * inv)), []).append(base + li)
            for u, v in block.graph.edges():
                edges.append((base + u, base + v))
            for li, gj in cross:
                edges.append((gj, base + li))
                degrees[base + li] += 1
                degrees[gj] += 1
            roots_global.append(base + block.root)
            block_max = max(degrees[base:])
            if block_max > global_max_deg:
                global_max_deg = block_max
            for li, gj in cross:
                if degrees[gj] > global_max_deg:
                    global_max_deg = degrees[gj]
        if not ok:
            continue
        total = len(pts)
        perm = list(range(total))
        rng.shuffle(perm)
        new_coords: list[tuple[float, float] | None] = [None] * total
        new_membership = [0] * total
        for old in range(total):
            new_coords[perm[old]] = pts[old]
            new_membership[perm[old]] = membership[old]
        new_edges = sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in edges
        )
        graph = build_graph(total, new_edges, coords=new_coords)
        instance = Instance(
            graph=graph,
            roots=tuple(perm[r] for r in roots_global),
            capacity=cfg.capacity,
            known_optimum=total,
            meta={"alpha": cfg.alpha, "seed": cfg.seed, "radius": d},
        )
        return GeneratedInstance(instance, tuple(new_membership))
    raise GenerationError(
        f"could not place all {cfg.n} blocks with enough cross edges after "
        f"{cfg.assembly_restarts} assembly passes")


def generate_instance(cfg: GenConfig) -> GeneratedInstance:
    """Full pipeline: sample n blocks, then assemble and permute."""
    rng = Random(cfg.seed)
    blocks = [generate_block(cfg.capacity, cfg.n, cfg, rng) for _ in range(cfg.n)]
    return assemble_instance(blocks, cfg, rng)


def certificate_solution(gen: GeneratedInstance):
    """The generator's block membership viewed as a (optimal) solution."""
    from .solver import Solution

    return Solution(gen.block_membership)


def reduce_mpgsd_star(sup: int, demands) -> Instance:
    """Encode supply-constrained demand selection as a single-root instance.

    Node 0 is the root, adjacent to hub nodes 1 and 2.  Each demand of size
    d contributes a path of d nodes from hub 1 to hub 2.  A bi-connected
    subgraph around the root must take both hubs and any set of complete
    demand paths, so with capacity sup + 3 the best objective is
    3 + (largest demand subset summing to at most sup), or 1 when no
    demand fits.
    """
    demands = [int(x) for x in demands]
    if sup < 1:
        raise ValueError("sup must be >= 1")
    if not demands or any(x < 1 for x in demands):
        raise ValueError("demands must be positive integers")
    edges = [(0, 1), (0, 2)]
    next_id = 3
    for dval in demands:
        prev = 1
        for step in range(dval):
            edges.append((prev, next_id) if prev < next_id else (next_id, prev))
            prev = next_id
            next_id += 1
        edges.append((2, prev))
    graph = build_graph(next_id, sorted(edges))
    # bitset subset-sum up to sup
    reach = 1
    for dval in demands:
        reach |= reach << dval
    reach &= (1 << (sup + 1)) - 1
    best = reach.bit_length() - 1
    optimum = 3 + best if best > 0 else 1
    return Instance(
        graph=graph,
        roots=(0,),
        capacity=sup + 3,
        known_optimum=optimum,
        meta={"sup": sup, "demands": demands},
    )
