"""Bi-connected subgraph growth by ear extension over an adapted BFS.

A subgraph S is grown from a root r.  The BFS tree tracks, per node u, the
nearest tree ancestor already inside S (ear_root) and the number of tree
steps to it (dist).  A non-tree edge (u, v) whose endpoints hang under
different ear roots closes an open ear: the path ear_root(u)..u, the edge
(u, v), and the path v..ear_root(v).  Adding the ear keeps S bi-connected;
dist gives an upper bound on how many nodes an ear through u would add, so
capacity can be checked before the ear is built.

The very first ear is special: while S == {r} every neighbor of r is its
own ear root, and a non-tree edge between two different branches closes a
cycle through r.

All queue handling is FIFO and all neighbor scans follow adjacency order,
so runs are reproducible given the caller's RNG.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph

INF = 1 << 30

TO_CAPACITY = "to-capacity"
SINGLE_EAR = "single-ear"


@dataclass
class Ear:
    """An accepted ear: node sequence endpoint..endpoint, plus the subset
    of sequence nodes that are new to S (in sequence order).  `cycle` marks
    the initial ear, which closes into a cycle through the root."""

    sequence: list[int]
    added: list[int]
    cycle: bool = False


class GrowthState:
    """Mutable per-subgraph growth state over a shared graph.

    Node-indexed arrays; `children` holds only nodes that currently have
    tree children (insertion-ordered lists, so traversals stay
    deterministic).
    """

    __slots__ = (
        "graph", "root", "capacity", "accept_prob",
        "parent", "children", "ear_root", "dist",
        "evaluate", "available", "in_s",
        "queue", "members", "last_ear",
    )

    def __init__(self, graph: Graph, root: int, capacity: int, accept_prob: float,
                 available: bytearray):
        self.graph = graph
        self.root = root
        self.capacity = capacity
        self.accept_prob = accept_prob
        n = graph.node_count
        self.parent = [-1] * n
        self.children: dict[int, list[int]] = {}
        self.ear_root = list(range(n))
        self.dist = [INF] * n
        self.evaluate = bytearray([1]) * n
        self.available = available
        self.in_s = bytearray(n)
        self.queue: deque[int] = deque()
        self.members: list[int] = [root]
        self.last_ear: Ear | None = None

    @property
    def size(self) -> int:
        return len(self.members)

    def subgraph_nodes(self) -> list[int]:
        return list(self.members)

    def can_expand(self) -> bool:
        return bool(self.queue) and self.size < self.capacity


def init_growth(g: Graph, root: int, capacity: int, accept_prob: float,
                available: bytearray | None = None) -> GrowthState:
    """Start a growth around `root`: S = {root}, every available neighbor
    becomes its own ear root at dist 0 and is queued in adjacency order.

    `available` (shared-ownership bytearray) restricts the node pool; the
    root itself must be available.
    """
    if not (0 <= root < g.node_count):
        raise ValueError(f"root {root} out of range")
    if capacity < 1:
        raise ValueError("capacity must be >= 1")
    if not (0.0 <= accept_prob <= 1.0):
        raise ValueError("accept_prob must be in [0, 1]")
    if available is None:
        available = bytearray([1]) * g.node_count
    if not available[root]:
        raise ValueError(f"root {root} marked unavailable")
    st = GrowthState(g, root, capacity, accept_prob, available)
    st.dist[root] = 0
    st.in_s[root] = 1
    kids = []
    for u in g.adjacency[root]:
        if not available[u]:
            continue
        st.dist[u] = 0
        st.ear_root[u] = u
        st.parent[u] = root
        kids.append(u)
        st.queue.append(u)
    if kids:
        st.children[root] = kids
    return st


def _walk_up(st: GrowthState, u: int) -> list[int]:
    """Tree path [u, parent(u), ..., ear_root(u)] following parent links."""
    path = [u]
    target = st.ear_root[u]
    cur = u
    while cur != target:
        cur = st.parent[cur]
        path.append(cur)
    return path


def try_make_ear(st: GrowthState, u: int, v: int) -> Ear | None:
    """Validate the non-tree edge (u, v) as an ear and build it.

    Requires different ear roots and enough remaining capacity for every
    node the ear would add (walk nodes plus any endpoint anchor not yet in
    S, which only happens before the first ear).  Ears that would add
    nothing are rejected.
    """
    ru = st.ear_root[u]
    rv = st.ear_root[v]
    if ru == rv:
        return None
    added_count = st.dist[u] + st.dist[v]
    if not st.in_s[ru]:
        added_count += 1
    if not st.in_s[rv]:
        added_count += 1
    if added_count == 0:
        return None
    if st.size + added_count > st.capacity:
        return None
    initial = st.size == 1
    if not initial and (not st.in_s[ru] or not st.in_s[rv]):
        # dangling pre-cycle anchor; cannot attach to S
        return None
    left = _walk_up(st, u)
    right = _walk_up(st, v)
    seq = left[::-1] + right
    if initial and rv != st.root:
        seq = [st.root] + seq
    added = [x for x in seq if not st.in_s[x]]
    return Ear(sequence=seq, added=added, cycle=initial)


def update_add_ear(st: GrowthState, ear: Ear) -> None:
    """Fold an accepted ear into the BFS tree.

    Ear nodes become S members at dist 0 rooted at themselves.  Tree
    descendants hanging below them (stopping at other S nodes) are re-rooted
    onto their nearest ear ancestor, get dist = steps to it, are flagged for
    re-evaluation and re-enqueued.  Enqueue order is ear sequence first,
    then descendants level by level, so shorter new ears are found first.
    """
    in_s = st.in_s
    dist = st.dist
    ear_root = st.ear_root
    evaluate = st.evaluate
    children = st.children
    members = st.members
    for x in ear.sequence:
        dist[x] = 0
        ear_root[x] = x
        if not in_s[x]:
            in_s[x] = 1
            members.append(x)
    st.queue.extend(ear.sequence)
    level = ear.sequence
    while level:
        nxt = []
        for x in level:
            kids = children.get(x)
            if not kids:
                continue
            base_root = ear_root[x]
            base_dist = dist[x] + 1
            for c in kids:
                if in_s[c]:
                    continue
                ear_root[c] = base_root
                dist[c] = base_dist
                evaluate[c] = 1
                nxt.append(c)
        st.queue.extend(nxt)
        level = nxt


def update_bfs_tree_delete(st: GrowthState, removed) -> None:
    """React to `removed` nodes being claimed by another subgraph.

    Each removed node becomes unavailable.  If it sat in this tree, the
    ancestors on its path to its ear root are re-flagged for evaluation
    (their previously same-rooted back edges may now close valid ears) and
    re-enqueued once; its whole subtree is detached and forgotten
    (dist = INF, re-discoverable later through fresh tree extension).
    """
    parent = st.parent
    children = st.children
    dist = st.dist
    evaluate = st.evaluate
    ear_root = st.ear_root
    queue = st.queue
    for u in removed:
        st.available[u] = 0
        if dist[u] == INF:
            continue
        # wake the ancestor chain up to and including the ear root
        steps = dist[u]
        a = parent[u]
        for _ in range(steps):
            if not evaluate[a]:
                evaluate[a] = 1
                queue.append(a)
            a = parent[a]
        # detach u
        p = parent[u]
        if p != -1:
            children[p].remove(u)
        parent[u] = -1
        dist[u] = INF
        evaluate[u] = 0
        ear_root[u] = u
        # drop the subtree below u
        stack = children.pop(u, [])
        while stack:
            v = stack.pop()
            stack.extend(children.pop(v, ()))
            parent[v] = -1
            dist[v] = INF
            evaluate[v] = 1
            ear_root[v] = v


def grow(st: GrowthState, mode: str, rng) -> int:
    """Run the growth loop; returns the number of nodes added to S.

    Dequeued nodes are processed only when flagged for evaluation and when
    dist still fits the remaining capacity.  Scanning a node either extends
    the tree (unvisited available neighbors) or tests non-tree edges as
    ears; each valid ear is accepted with probability accept_prob (one RNG
    draw per discovery).  `single-ear` mode returns right after the first
    accepted ear with the scan left resumable; `to-capacity` keeps going
    until the queue empties or S reaches capacity.
    """
    if mode not in (TO_CAPACITY, SINGLE_EAR):
        raise ValueError(f"unknown grow mode: {mode}")
    adj = st.graph.adjacency
    parent = st.parent
    dist = st.dist
    evaluate = st.evaluate
    available = st.available
    children = st.children
    queue = st.queue
    accept_prob = st.accept_prob
    capacity = st.capacity
    added_total = 0
    while queue:
        if st.size >= capacity:
            break
        cur = queue.popleft()
        if not evaluate[cur] or not available[cur]:
            continue
        if dist[cur] > capacity - st.size:
            # too deep to seed an ear under current capacity; a future
            # re-root would re-enqueue it with a smaller dist
            continue
        cur_kids = None
        for w in adj[cur]:
            if not available[w]:
                continue
            if parent[cur] == w or parent[w] == cur:
                continue
            if dist[w] == INF:
                parent[w] = cur
                if cur_kids is None:
                    cur_kids = children.setdefault(cur, [])
                cur_kids.append(w)
                st.ear_root[w] = st.ear_root[cur]
                dist[w] = dist[cur] + 1
                evaluate[w] = 1
                queue.append(w)
            else:
                ear = try_make_ear(st, cur, w)
                if ear is None:
                    continue
                if rng.random() <= accept_prob:
                    update_add_ear(st, ear)
                    st.last_ear = ear
                    added_total += len(ear.added)
                    if mode == SINGLE_EAR:
                        # scan unfinished: cur was re-enqueued by the update
                        # and keeps its evaluate flag
                        return added_total
                    if st.size >= capacity:
                        return added_total
        evaluate[cur] = 0
    return added_total
