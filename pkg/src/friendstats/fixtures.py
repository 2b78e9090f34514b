"""The three five-node example networks and their published table columns.

Edge sets were recovered by enumerating all 1024 labelled graphs on five
nodes and keeping those whose degree and friends-of-friends columns match
the published tables; each table admits exactly one labelled solution.
Node ids are 0-based here; reports print them 1-based.
"""

from __future__ import annotations

from .graph import Graph

NETWORK_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    "network1": ((0, 1), (0, 3), (0, 4), (1, 2)),
    "network2": ((0, 1), (0, 4), (2, 3)),
    "network3": ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)),
}

# (F column, FF column) as printed in the tables.
TABLE_COLUMNS: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = {
    "network1": ((3, 2, 1, 1, 1), (4, 4, 2, 3, 3)),
    "network2": ((2, 1, 1, 1, 1), (2, 2, 1, 1, 2)),
    "network3": ((4, 3, 3, 3, 1), (10, 10, 10, 10, 4)),
}


def network(name: str) -> Graph:
    try:
        edges = NETWORK_EDGES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(NETWORK_EDGES)}") from None
    return Graph(5, edges)


def network1() -> Graph:
    return network("network1")


def network2() -> Graph:
    return network("network2")


def network3() -> Graph:
    return network("network3")
