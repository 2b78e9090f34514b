"""Undirected simple graphs and the edge-list text format.

Edge-list format (UTF-8, LF or CRLF)::

    # comment lines start with '#'
    # n=5            optional header fixing the node count (allows isolated nodes)
    0 1
    0 3

Each data line holds two whitespace-separated non-negative integer ids.
Duplicate lines and reversed pairs collapse to a single edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .errors import EdgeListParseError, GraphValidationError

_HEADER = re.compile(r"^#\s*n\s*=\s*(\S+)\s*$")

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph over node ids ``0..n-1``.

    Edges are stored once each, smaller id first.  Construction rejects
    self-loops and out-of-range ids unless ``strict=False`` is passed, which
    exists so that :func:`validate` can be exercised on broken input.
    """

    n: int
    edges: frozenset[Edge]
    _adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Edge] = (), *, strict: bool = True) -> None:
        if n < 0:
            raise GraphValidationError(f"node count must be non-negative, got {n}")
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", normalized)
        if strict:
            problems = validate(self)
            if problems:
                raise GraphValidationError("; ".join(p.message for p in problems))
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(normalized):
            if 0 <= u < self.n and 0 <= v < self.n and u != v:
                adj[u].append(v)
                adj[v].append(u)
        object.__setattr__(self, "_adjacency", tuple(tuple(sorted(a)) for a in adj))

    def neighbors(self, i: int) -> tuple[int, ...]:
        self._check_node(i)
        return self._adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return Graph(self.n, self.edges - drop)

    def _check_node(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"node id {i} out of range for graph with {self.n} nodes")

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def pairing(cls, n: int) -> Graph:
        """1-regular graph joining 0-1, 2-3, ...; ``n`` must be even."""
        if n % 2:
            raise ValueError("a perfect pairing needs an even node count")
        return cls(n, ((i, i + 1) for i in range(0, n, 2)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls(leaves + 1, ((0, j) for j in range(1, leaves + 1)))


@dataclass(frozen=True)
class Violation:
    kind: str
    nodes: tuple[int, ...]
    message: str


def validate(g: Graph) -> list[Violation]:
    """Return every violated graph invariant; an empty list means valid.

    The edge-set representation is symmetric by construction, so only
    self-loops and ids outside ``0..n-1`` can be reported.
    """
    report: list[Violation] = []
    for u, v in sorted(g.edges):
        if u == v:
            report.append(Violation("self_loop", (u,), f"self-loop at node {u}"))
        bad = tuple(x for x in (u, v) if not 0 <= x < g.n)
        if bad:
            report.append(
                Violation("out_of_range", bad, f"edge ({u}, {v}) uses ids outside 0..{g.n - 1}")
            )
    return report


def degrees(g: Graph) -> tuple[int, ...]:
    """Degree vector: entry ``i`` is the number of neighbours of node ``i``."""
    return tuple(len(a) for a in g._adjacency)


def parse_edge_list(source: str | TextIO) -> Graph:
    """Parse edge-list text (or an open text stream) into a :class:`Graph`."""
    text = source if isinstance(source, str) else source.read()
    declared_n: int | None = None
    edges: set[Edge] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m:
                try:
                    declared_n = int(m.group(1))
                except ValueError:
                    raise EdgeListParseError(f"bad node-count header {line!r}", lineno) from None
                if declared_n < 0:
                    raise EdgeListParseError("node count must be non-negative", lineno)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected 2 node ids, found {len(tokens)} tokens", lineno)
        try:
            u, v = (int(t) for t in tokens)
        except ValueError:
            raise EdgeListParseError(f"non-integer node id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"negative node id in {line!r}", lineno)
        if u == v:
            raise GraphValidationError(f"self-loop at node {u}", lineno)
        edges.add((min(u, v), max(u, v)))
        max_id = max(max_id, u, v)

    n = max_id + 1
    if declared_n is not None:
        if declared_n < n:
            raise EdgeListParseError(
                f"header declares n={declared_n} but node id {max_id} is used"
            )
        n = declared_n
    return Graph(n, edges)


def iter_edge_list_lines(g: Graph, *, header: bool = True) -> Iterator[str]:
    if header:
        yield f"# n={g.n}"
    for u, v in g.sorted_edges():
        yield f"{u} {v}"


def to_edge_list(g: Graph, *, header: bool = True) -> str:
    """Canonical serialization: optional ``# n=`` header, then sorted edges."""
    lines = list(iter_edge_list_lines(g, header=header))
    return "\n".join(lines) + "\n" if lines else ""


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_edge_list(fh)
