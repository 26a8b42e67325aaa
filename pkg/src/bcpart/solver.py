"""Randomized construction of full solutions: many subgraphs grow in
parallel around their roots, interleaved in random bursts.

Each outer step draws a burst length MaxL in [2, max_exp_length], picks a
random still-expandable subgraph and lets it add single ears until the
burst is filled or it cannot continue.  Every accepted ear immediately
claims its new nodes in all sibling subgraphs, which prune their BFS trees
accordingly.  A subgraph retires once its queue runs dry or it is full.

RNG consumption order per outer step: burst length, subgraph pick, then
one draw per ear discovered while growing.  Identical seeds give identical
solutions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, Instance
from .growth import (
    SINGLE_EAR,
    GrowthState,
    grow,
    init_growth,
    update_bfs_tree_delete,
)

__all__ = [
    "SolverConfig", "Solution", "objective", "generate_solution",
    "solution_to_json", "solution_from_json", "save_solution", "load_solution",
    "update_bfs_tree_delete",
]


@dataclass(frozen=True)
class SolverConfig:
    """Knobs shared by construction and local search."""

    p0: float = 0.5                # ear acceptance probability
    max_exp_length: int = 12       # upper bound for burst length MaxL
    regrow_size: int = 9           # upper bound for regrown subset size
    max_iterations: int = 10_000   # generated solutions cap
    stagnation_limit: int = 2_000  # iterations without strict improvement
    grow_n_attempts: int = 50      # tries per size before the subset grows
    seed: int = 0

    def __post_init__(self):
        if not (0.0 <= self.p0 <= 1.0):
            raise ValueError("p0 must be in [0, 1]")
        if self.max_exp_length < 2:
            raise ValueError("max_exp_length must be >= 2")
        if self.regrow_size < 2:
            raise ValueError("regrow_size must be >= 2")
        if self.max_iterations < 1 or self.stagnation_limit < 1:
            raise ValueError("iteration limits must be positive")
        if self.grow_n_attempts < 1:
            raise ValueError("grow_n_attempts must be positive")


@dataclass(frozen=True)
class Solution:
    """Node-to-subgraph assignment; -1 marks unassigned nodes."""

    assignment: tuple[int, ...]
    objective: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        object.__setattr__(self, "objective", objective(self.assignment))

    def subgraph_nodes(self, i: int) -> list[int]:
        return [u for u, a in enumerate(self.assignment) if a == i]

    def sizes(self, subgraph_count: int) -> list[int]:
        out = [0] * subgraph_count
        for a in self.assignment:
            if a != -1:
                out[a] += 1
        return out


def objective(assignment) -> int:
    """Number of assigned nodes (the quantity being maximized)."""
    return sum(1 for a in assignment if a != -1)


def _grow_parallel(graph: Graph, roots, capacity: int, config: SolverConfig,
                   rng, pool: bytearray | None = None) -> list[list[int]]:
    """Grow one subgraph per root inside an optional node pool.

    Returns the grown node lists aligned with `roots`.  Nodes outside the
    pool are untouchable; every root must sit inside the pool.
    """
    n = graph.node_count
    k = len(roots)
    states: list[GrowthState] = []
    for idx in range(k):
        if pool is None:
            avail = bytearray([1]) * n
        else:
            avail = bytearray(pool)
        for other in range(k):
            if other != idx:
                avail[roots[other]] = 0
        states.append(init_growth(graph, roots[idx], capacity, config.p0, avail))
    expandable = list(range(k))
    while expandable:
        max_l = rng.randint(2, config.max_exp_length)
        i = expandable[rng.randrange(len(expandable))]
        st = states[i]
        grown = 0
        retire = False
        while grown < max_l:
            added = grow(st, SINGLE_EAR, rng)
            if added == 0:
                retire = True
                break
            grown += added
            new_nodes = st.last_ear.added
            for j in range(k):
                if j != i:
                    update_bfs_tree_delete(states[j], new_nodes)
            if st.size >= capacity:
                retire = True
                break
        if retire:
            expandable.remove(i)
    return [st.subgraph_nodes() for st in states]


def generate_solution(instance: Instance, config: SolverConfig, rng) -> Solution:
    """Build one full solution by parallel randomized growth."""
    grown = _grow_parallel(instance.graph, instance.roots, instance.capacity,
                           config, rng)
    assignment = [-1] * instance.graph.node_count
    for idx, nodes in enumerate(grown):
        for u in nodes:
            assignment[u] = idx
    return Solution(tuple(assignment))


def solution_to_json(solution: Solution, seed: int) -> str:
    payload = {
        "assignment": list(solution.assignment),
        "objective": solution.objective,
        "seed": seed,
    }
    return json.dumps(payload)


def solution_from_json(text: str) -> tuple[Solution, int | None]:
    payload = json.loads(text)
    sol = Solution(tuple(int(a) for a in payload["assignment"]))
    return sol, payload.get("seed")


def save_solution(solution: Solution, seed: int, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(solution_to_json(solution, seed))
        fh.write("\n")


def load_solution(path) -> tuple[Solution, int | None]:
    with open(path, "r", encoding="utf-8") as fh:
        return solution_from_json(fh.read())
