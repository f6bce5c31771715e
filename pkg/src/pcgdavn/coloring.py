"""Projected-coloring graphs and their colorability.

A PCG has one vertex per qubit, marked filled (Z = +1) or hollow (Z = -1),
and one hyperedge per Hardy-like condition weighted by its X-product value
(-1 red, +1 green).  A coloring ``c`` in ``{+1,-1}^n`` is consistent when
``prod_{k in E} c_k = W(E)`` for every edge.  Writing ``c_k = (-1)^{x_k}``
turns this into a linear system over GF(2).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import gf2
from .hardy import ConditionSet
from .state import mask_of

Edge = tuple[tuple[int, ...], int]
BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class Pcg:
    n: int
    marks: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if len(self.marks) != self.n:
            raise ValueError(f"expected {self.n} marks, got {len(self.marks)}")
        if any(m not in (1, -1) for m in self.marks):
            raise ValueError("marks must be +1 or -1")
        for verts, w in self.edges:
            if len(set(verts)) < 2 or len(set(verts)) != len(verts):
                raise ValueError(f"edge {list(verts)} needs at least two distinct vertices")
            if any(not 1 <= v <= self.n for v in verts):
                raise ValueError(f"edge {list(verts)} has a vertex outside 1..{self.n}")
            if w not in (1, -1):
                raise ValueError(f"edge weight must be +1 or -1, got {w!r}")

    def with_edges(self, edges: Sequence[Edge]) -> "Pcg":
        return Pcg(self.n, self.marks, tuple(edges))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "marks": list(self.marks),
            "edges": [{"vertices": list(v), "weight": w} for v, w in self.edges],
        }

    @classmethod
    def from_dict(cls, raw: Mapping) -> "Pcg":
        try:
            n = raw["n"]
            marks = tuple(raw.get("marks", [1] * n))
            edges = tuple((tuple(sorted(e["vertices"])), e["weight"]) for e in raw["edges"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed PCG description: {exc}") from None
        return cls(n, marks, edges)


@dataclass(frozen=True)
class Colorable:
    witness: tuple[int, ...]

    colorable = True


@dataclass(frozen=True)
class Uncolorable:
    """``certificate`` lists edge indices whose parity equations sum to
    ``0 = 1``; it is None when the verdict comes from exhaustive search."""

    certificate: tuple[int, ...] | None = None

    colorable = False


ColorabilityResult = Colorable | Uncolorable


def _equations(pcg: Pcg) -> list[tuple[int, int]]:
    return [(mask_of(v), 1 if w == -1 else 0) for v, w in pcg.edges]


def check_colorable(pcg: Pcg) -> ColorabilityResult:
    """Decide colorability by GF(2) elimination."""
    sol = gf2.solve(_equations(pcg), pcg.n)
    if sol.x is None:
        cert = tuple(i for i in range(len(pcg.edges)) if sol.inconsistent >> i & 1)
        return Uncolorable(cert)
    return Colorable(tuple(-1 if sol.x >> k & 1 else 1 for k in range(pcg.n)))


def brute_force_colorable(pcg: Pcg) -> ColorabilityResult:
    """Try all ``2^n`` colorings; the first hit in bitstring order wins
    (``+1`` sorts before ``-1``, vertex 1 most significant)."""
    n = pcg.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force is limited to n <= {BRUTE_FORCE_LIMIT}, got {n}")
    idx = np.arange(1 << n, dtype=np.int64)
    bits = [(idx >> (n - k)) & 1 for k in range(1, n + 1)]
    ok = np.ones(1 << n, dtype=bool)
    for verts, w in pcg.edges:
        parity = np.zeros(1 << n, dtype=np.int64)
        for v in verts:
            parity ^= bits[v - 1]
        ok &= parity == (1 if w == -1 else 0)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return Uncolorable(None)
    first = int(hits[0])
    return Colorable(tuple(-1 if (first >> (n - k)) & 1 else 1 for k in range(1, n + 1)))


def satisfies(pcg: Pcg, coloring: Sequence[int]) -> bool:
    for verts, w in pcg.edges:
        prod = 1
        for v in verts:
            prod *= coloring[v - 1]
        if prod != w:
            return False
    return True


def is_valid_certificate(pcg: Pcg, certificate: Sequence[int]) -> bool:
    """Every vertex is hit an even number of times and the weights multiply to -1."""
    if not certificate:
        return False
    acc = 0
    prod = 1
    for i in certificate:
        verts, w = pcg.edges[i]
        acc ^= mask_of(verts)
        prod *= w
    return acc == 0 and prod == -1


def has_odd_red_loop(pcg: Pcg) -> list[Edge] | None:
    """A cycle of pair-edges carrying an odd number of red edges, if any.

    Builds a BFS spanning forest with parity labels; a non-tree edge that
    closes a cycle of odd red count disagrees with the labels.
    """
    adj: dict[int, list[tuple[int, int]]] = {}
    pairs = [(i, v, w) for i, (v, w) in enumerate(pcg.edges) if len(v) == 2]
    for i, (a, b), _ in pairs:
        adj.setdefault(a, []).append((b, i))
        adj.setdefault(b, []).append((a, i))
    parity: dict[int, int] = {}
    parent: dict[int, tuple[int, int] | None] = {}
    for root in sorted(adj):
        if root in parity:
            continue
        parity[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, i in adj[u]:
                if v not in parity:
                    parity[v] = parity[u] ^ (pcg.edges[i][1] == -1)
                    parent[v] = (u, i)
                    queue.append(v)
    tree = {p[1] for p in parent.values() if p is not None}
    for i, (a, b), w in pairs:
        if i in tree or parity[a] ^ parity[b] ^ (w == -1) == 0:
            continue
        return [pcg.edges[j] for j in _cycle(parent, a, b)] + [pcg.edges[i]]
    return None


def _cycle(parent, a: int, b: int) -> list[int]:
    """Tree-edge indices on the path a -> lca -> b."""
    def ancestry(v):
        path = [v]
        while parent[v] is not None:
            v = parent[v][0]
            path.append(v)
        return path

    up_a, up_b = ancestry(a), ancestry(b)
    common = set(up_a) & set(up_b)
    lca = next(v for v in up_a if v in common)
    left = [parent[v][1] for v in up_a[:up_a.index(lca)]]
    right = [parent[v][1] for v in up_b[:up_b.index(lca)]]
    return left + right[::-1]


def build_pcg(outcome: Sequence[int], conditions: ConditionSet) -> Pcg:
    return Pcg(len(outcome), tuple(outcome),
               tuple((c.edge, c.alpha) for c in conditions.conditions))


def _color(w: int) -> str:
    return "red" if w == -1 else "green"


def export_dot(pcg: Pcg, name: str = "pcg") -> str:
    """Graphviz text; hyperedges become small auxiliary nodes."""
    lines = [f"graph {name} {{", '  node [shape=circle, fontname="Helvetica"];']
    for k, m in enumerate(pcg.marks, start=1):
        style = ("style=filled, fillcolor=black, fontcolor=white" if m == 1
                 else "style=solid, fillcolor=white")
        lines.append(f'  v{k} [label="{k}", {style}];')
    for i, (verts, w) in enumerate(pcg.edges, start=1):
        color = _color(w)
        if len(verts) == 2:
            a, b = verts
            lines.append(f"  v{a} -- v{b} [color={color}, penwidth=2];")
        else:
            lines.append(f'  e{i} [shape=point, width=0.12, color={color}, label=""];')
            for v in verts:
                lines.append(f"  e{i} -- v{v} [color={color}, penwidth=2];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def result_to_dict(result: ColorabilityResult, pcg: Pcg | None = None) -> dict:
    if isinstance(result, Colorable):
        return {"colorable": True, "witness": list(result.witness)}
    out: dict = {"colorable": False}
    if result.certificate is None:
        out["certificate"] = "exhaustive"
    else:
        out["certificate"] = list(result.certificate)
        if pcg is not None:
            out["certificate_edges"] = [
                {"vertices": list(pcg.edges[i][0]), "weight": pcg.edges[i][1]}
                for i in result.certificate
            ]
    return out
