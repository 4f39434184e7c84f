"""Breadth-first enumeration of the exchange graph of a seed.

Seeds are identified by the multiset of their expansions in the ambient
initial torus, so seeds differing only by a permutation of indices collapse
to one node.  Each node keeps the representative reached first, together
with the mutation path from the root that produced it.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field

from .analysis import edge_reexpander
from .qtorus import TorusElement
from .seed import SCHEMA, QuantumSeed


def variable_key(f: TorusElement) -> str:
    return f.to_json()


def seed_hash(seed: QuantumSeed) -> str:
    keys = sorted(variable_key(x) for x in seed.expansions)
    return hashlib.sha256("\n".join(keys).encode()).hexdigest()


@dataclass
class ExchangeGraph:
    nodes: list[QuantumSeed] = field(default_factory=list)
    hashes: list[str] = field(default_factory=list)
    paths: list[tuple[int, ...]] = field(default_factory=list)
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    closed: bool = True
    max_depth: int = 0

    @property
    def root(self) -> int:
        return 0

    def node_of(self, seed: QuantumSeed) -> int | None:
        h = seed_hash(seed)
        try:
            return self.hashes.index(h)
        except ValueError:
            return None

    def cluster_keys(self, node: int) -> list[str]:
        return [variable_key(x) for x in self.nodes[node].expansions]

    def variables(self) -> dict[str, TorusElement]:
        """All cluster variables (initial-torus expansions) keyed canonically."""
        out = {}
        for s in self.nodes:
            for x in s.expansions:
                out.setdefault(variable_key(x), x)
        return out

    def exchangeable_variables(self) -> dict[str, TorusElement]:
        out = {}
        for s in self.nodes:
            for k in s.exchangeable:
                x = s.variable(k)
                out.setdefault(variable_key(x), x)
        return out

    def undirected_edges(self) -> list[tuple[int, int]]:
        return sorted({(min(a, b), max(a, b)) for a, _, b in self.edges})

    def reverse_edge_defects(self) -> list[tuple[int, int, int]]:
        """Directed edges whose target has no mutation leading back to the source."""
        back = {(a, b) for a, _, b in self.edges}
        return [(a, k, b) for a, k, b in self.edges if (b, a) not in back]

    def to_json_obj(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "graph",
            "node_count": len(self.nodes),
            "edge_count": len(self.undirected_edges()),
            "closed": self.closed,
            "depth_exhausted": not self.closed,
            "max_depth": self.max_depth,
            "nodes": [
                {"id": i, "hash": h, "path": list(p), "labels": list(s.labels)}
                for i, (s, h, p) in enumerate(zip(self.nodes, self.hashes, self.paths))
            ],
            "edges": [{"source": a, "k": k, "target": b} for a, k, b in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["graph exchange {"]
        for i, p in enumerate(self.paths):
            label = "root" if not p else "mu" + ",".join(map(str, p))
            lines.append(f'  n{i} [label="{i}: {label}"];')
        seen = set()
        for a, k, b in self.edges:
            if (min(a, b), max(a, b)) in seen:
                continue
            seen.add((min(a, b), max(a, b)))
            lines.append(f'  n{a} -- n{b} [label="{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_graph(seed: QuantumSeed, max_depth: int = 32) -> ExchangeGraph:
    """BFS over mutations with deterministic numbering (directions in increasing order)."""
    g = ExchangeGraph(max_depth=max_depth)
    g.nodes.append(seed)
    g.hashes.append(seed_hash(seed))
    g.paths.append(())
    index = {g.hashes[0]: 0}
    depth = {0: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        s = g.nodes[i]
        if depth[i] >= max_depth:
            g.closed = False
            continue
        for k in s.exchangeable:
            t = s.mutate(k)
            h = seed_hash(t)
            j = index.get(h)
            if j is None:
                j = len(g.nodes)
                index[h] = j
                g.nodes.append(t)
                g.hashes.append(h)
                g.paths.append(g.paths[i] + (k,))
                depth[j] = depth[i] + 1
                queue.append(j)
            g.edges.append((i, k, j))
    return g


def relative_expansions(g: ExchangeGraph) -> list[dict[str, TorusElement]]:
    """For each node, every cluster variable of the graph expanded in that node's torus.

    Expansions are carried along the BFS tree with :func:`reexpand`; the node
    representatives are exactly the seeds obtained along those paths, so
    exponent positions match each representative's index order.
    """
    keys = list(g.variables())
    n = len(g.nodes)
    out: list[dict[str, TorusElement] | None] = [None] * n
    root = g.nodes[0]
    units = root.as_initial().expansions
    out[0] = {}
    # at the root, the ambient torus is the root's own torus only if the root is initial
    if root.L_init == root.L and all(x == u for x, u in zip(root.expansions, units)):
        out[0] = dict(g.variables())
    else:
        raise ValueError("relative expansions need a graph rooted at an initial seed")
    parent = {}
    for a, k, b in g.edges:
        if b not in parent and b != 0 and g.paths[b] == g.paths[a] + (k,):
            parent[b] = (a, k)
    for b in range(1, n):
        a, k = parent[b]
        move = edge_reexpander(g.nodes[a], k)
        out[b] = {key: move(f) for key, f in out[a].items()}
    assert all(set(d) == set(keys) for d in out)
    return out
