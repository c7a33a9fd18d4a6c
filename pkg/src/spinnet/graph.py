"""Undirected simple graphs whose adjacency matrices define spin networks.

Vertices are labelled 1..n everywhere in the public interface.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    ``edges`` holds each edge once as an ordered pair ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InputError(f"vertex count must be a positive integer, got {self.n!r}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise InputError(f"malformed edge {(u, v)} for n={self.n}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=int)
        for u, v in self.edges:
            a[u - 1, v - 1] = a[v - 1, u - 1] = 1
        return a

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v-1]`` (``perm`` is 1-based)."""
        perm = list(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise InputError("relabelling must be a permutation of 1..n")
        return from_edge_list(self.n, [(perm[u - 1], perm[v - 1]) for u, v in self.edges])


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from (possibly repeated, either-orientation) vertex pairs."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InputError(f"vertex count must be a positive integer, got {n!r}")
    edges = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge {(u, v)} has a vertex outside 1..{n}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    return Graph(int(n), frozenset(edges))


def path(n: int) -> Graph:
    """Open chain 1-2-...-n."""
    if n < 2:
        raise InputError("path needs n >= 2")
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    """Closed chain; vertex n is joined back to vertex 1."""
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete(n: int) -> Graph:
    if n < 2:
        raise InputError("complete graph needs n >= 2")
    return from_edge_list(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def edgeless(n: int) -> Graph:
    return from_edge_list(n, [])


FAMILIES = {"path": path, "cycle": cycle, "complete": complete, "edgeless": edgeless}


def named(family: str, n: int) -> Graph:
    try:
        build = FAMILIES[family]
    except KeyError:
        raise InputError(f"unknown topology {family!r}; choose from {sorted(FAMILIES)}") from None
    return build(n)


def has_isolated_vertex(g: Graph) -> bool:
    return bool(np.any(g.adjacency_matrix().sum(axis=1) == 0))


# -- edge-list text format ---------------------------------------------------
#
#   # comment
#   n 4
#   1 2
#   2 3


def parse_edge_list(text: str) -> Graph:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise InputError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            n = _parse_int(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {raw!r}")
        pairs.append((_parse_int(fields[0], lineno), _parse_int(fields[1], lineno)))
    if n is None:
        raise InputError("edge list has no 'n <count>' header")
    return from_edge_list(n, pairs)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: {token!r} is not an integer") from None


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path_: str | Path) -> Graph:
    return parse_edge_list(Path(path_).read_text(encoding="utf-8"))


def write_edge_list(g: Graph, path_: str | Path) -> None:
    Path(path_).write_text(format_edge_list(g), encoding="utf-8")
