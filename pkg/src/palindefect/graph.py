"""The graph of ``n``-simple paths between reversal classes of special factors.

Vertices are classes ``{w, reverse(w)}`` of left- or right-special factors of
length ``n``; edges are classes ``{e, reverse(e)}`` of ``n``-simple paths,
i.e. factors whose only special length-``n`` factors are their prefix and
suffix.  ``T(n) = 0`` exactly when this multigraph minus its loops is a tree
and every loop is a palindrome (for reversal-closed languages).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

from .factors import FactorIndex, canonical
from .words import is_palindrome

__all__ = ["SimplePath", "SimplePathGraph", "ZeroTest", "IndeterminateGraphError",
           "enumerate_simple_paths", "build_graph", "graph_zero_test"]


class IndeterminateGraphError(RuntimeError):
    """The finite word cannot decide the graph at this ``n``."""


@dataclass(frozen=True)
class SimplePath:
    word: str
    n: int

    @property
    def start(self) -> str:
        return self.word[:self.n]

    @property
    def end(self) -> str:
        return self.word[-self.n:] if self.n else ""


@dataclass
class SimplePathGraph:
    n: int
    vertices: list[str] = field(default_factory=list)
    # (canonical path word, canonical start vertex, canonical end vertex)
    edges: list[tuple[str, str, str]] = field(default_factory=list)
    closed_under_reversal: bool = True
    indeterminate: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def loops(self) -> list[tuple[str, str, str]]:
        return [e for e in self.edges if e[1] == e[2]]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": list(self.vertices),
            "edges": [{"path": p, "u": u, "v": v, "loop": u == v,
                       "palindrome": is_palindrome(p)} for p, u, v in self.edges],
            "closed_under_reversal": self.closed_under_reversal,
            "indeterminate": self.indeterminate,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_dot(self, zero_test: "ZeroTest | None" = None) -> str:
        lines = [f"graph G_{self.n} {{"]
        if zero_test is not None:
            lines.append(f"  // zero-test: {str(zero_test.holds).lower()} ({zero_test.diagnosis})")
        for note in self.notes:
            lines.append(f"  // warning: {note}")
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for p, u, v in self.edges:
            attrs = f'label="{p}"'
            if u == v:
                attrs += f', palindrome={str(is_palindrome(p)).lower()}'
            lines.append(f'  "{u}" -- "{v}" [{attrs}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ZeroTest:
    holds: bool
    diagnosis: str
    witness: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


def enumerate_simple_paths(idx: FactorIndex, n: int, margin: int | None = None) -> list[SimplePath]:
    """All ``n``-simple paths of the indexed word, deduplicated as words.

    Each path is traced from a special factor through one of its right
    extensions; non-special factors have a single right extension, so the
    walk is forced until it reaches the next special factor.  ``margin``
    caps the path length (default ``n + idx.n_max``).
    """
    if n > idx.n_max:
        raise ValueError(f"n={n} exceeds index cap {idx.n_max}")
    limit = n + (idx.n_max if margin is None else margin)
    special = idx.special_factors(n, "any")
    right = idx._extensions(n, "right")
    paths: set[str] = set()
    for s in sorted(special):
        for a in sorted(right[s]):
            e = s + a
            while True:
                t = e[len(e) - n:]
                if t in special:
                    break
                nxt = right[t]
                if not nxt:
                    raise IndeterminateGraphError(
                        f"path from {s!r} runs off the end of the word at {t!r}")
                if len(e) >= limit:
                    raise IndeterminateGraphError(
                        f"path from {s!r} exceeds length {limit} without meeting a special factor")
                (b,) = nxt
                e += b
            paths.add(e)
    return [SimplePath(p, n) for p in sorted(paths)]


def build_graph(idx: FactorIndex, n: int, margin: int | None = None) -> SimplePathGraph:
    notes = []
    closed = idx.is_closed_under_reversal(n) and idx.is_closed_under_reversal(n + 1)
    if not closed:
        notes.append(f"language not closed under reversal at length {n} or {n + 1}")
        warnings.warn(notes[-1], stacklevel=2)
    boundary = idx.boundary_factors(n)
    indeterminate = False
    special = idx.special_factors(n, "any")
    for side, f in sorted(boundary.items()):
        if f not in special:
            indeterminate = True
            notes.append(f"boundary factor {f!r} has no {side} extension; its specialness is undecided")

    paths = enumerate_simple_paths(idx, n, margin)
    vertices = sorted({canonical(s) for s in special})
    edges = {}
    for p in paths:
        key = canonical(p.word)
        if key not in edges:
            u, v = sorted((canonical(p.start), canonical(p.end)))
            edges[key] = (key, u, v)
    return SimplePathGraph(n=n, vertices=vertices, edges=sorted(edges.values()),
                           closed_under_reversal=closed, indeterminate=indeterminate, notes=notes)


def graph_zero_test(graph: SimplePathGraph) -> ZeroTest:
    """Loopless part is a tree and every loop is a palindrome."""
    if graph.is_empty:
        return ZeroTest(True, "empty graph")
    for p, u, v in graph.loops:
        if not is_palindrome(p):
            return ZeroTest(False, "non-palindromic loop", (p,))

    parent = {v: v for v in graph.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, u, v in graph.edges:
        if u == v:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return ZeroTest(False, "cycle", (p, u, v))
        parent[ru] = rv
    roots = {find(v) for v in graph.vertices}
    if len(roots) > 1:
        return ZeroTest(False, "disconnected", tuple(sorted(roots)))
    return ZeroTest(True, "tree with palindromic loops")
