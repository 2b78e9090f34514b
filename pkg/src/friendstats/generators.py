"""Seeded synthetic social graphs with institutional hubs and dormant members.

Node layout: individuals take ids ``0..n_individuals-1``, institutions
follow.  Edges are independent Bernoulli draws:

* individual-individual ``(i, j)``: probability ``edge_prob * s_i * s_j``,
  where ``s = 1`` for active and ``s = dormant_activity`` for dormant members;
* institution-individual: probability ``institution_attach_prob``;
* institution-institution: never.

Random streams
--------------
Every draw comes from numpy's PCG64 bit generator.  The stream for a given
purpose is seeded with ``SeedSequence(seed, spawn_key=(purpose,))``; the
purposes are

====  ====================  ==================================================
key   purpose               consumption order
====  ====================  ==================================================
0     roles                 one ``permutation(n_individuals)``; the first
                            ``round(dormant_fraction * n_individuals)`` ids
                            become dormant
1     individual edges      one ``random()`` per pair ``i < j``, row-major
2     institution edges     one ``random()`` per (institution, individual),
                            row-major
3     degree cap            one ``choice(neighbours, excess, replace=False)``
                            per over-cap node, ascending node id
====  ====================  ==================================================

An edge is present when its uniform draw is strictly below its probability.
Separate streams mean that two configs differing only in, say, the number
of institutions share exactly the same individual-individual subgraph.
This layout is part of the output contract; changing it changes golden files.
"""

from __future__ import annotations

import enum
import hashlib
import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .degree_stats import DistributionSummary, summarize
from .errors import ParameterError, UndefinedStatisticError
from .graph import Graph, degrees, to_edge_list
from .paradox import ParadoxSummary, paradox_summary

_ROW_BLOCK = 1 << 22  # max pair draws materialised at once


class Stream(enum.IntEnum):
    ROLES = 0
    INDIVIDUAL_EDGES = 1
    INSTITUTION_EDGES = 2
    DEGREE_CAP = 3


class Role(str, enum.Enum):
    ACTIVE = "individual_active"
    DORMANT = "individual_dormant"
    INSTITUTION = "institution"


@dataclass(frozen=True)
class GeneratorConfig:
    n_individuals: int = 1000
    edge_prob: float = 0.01
    n_institutions: int = 0
    institution_attach_prob: float = 0.5
    dormant_fraction: float = 0.0
    dormant_activity: float = 0.2
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("n_individuals", "n_institutions"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 0:
                raise ParameterError(f"{name} must be a non-negative integer, got {value!r}")
        for name in ("edge_prob", "institution_attach_prob"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ParameterError(f"{name} must lie in [0, 1], got {getattr(self, name)!r}")
        if not 0.0 <= self.dormant_fraction < 1.0:
            raise ParameterError(f"dormant_fraction must lie in [0, 1), got {self.dormant_fraction!r}")
        if not 0.0 < self.dormant_activity <= 1.0:
            raise ParameterError(f"dormant_activity must lie in (0, 1], got {self.dormant_activity!r}")
        if not 0 <= self.seed < 2**64:
            raise ParameterError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")

    @property
    def n(self) -> int:
        return self.n_individuals + self.n_institutions

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]

    @classmethod
    def from_mapping(cls, values: dict[str, str]) -> GeneratorConfig:
        kinds = {f.name: f.type for f in fields(cls)}
        parsed = {}
        for key, raw in values.items():
            if key not in kinds:
                raise ParameterError(f"unknown config key {key!r}")
            conv = float if kinds[key] == "float" else int
            try:
                parsed[key] = conv(raw)
            except ValueError:
                raise ParameterError(f"bad value for {key}: {raw!r}") from None
        return cls(**parsed)

    @classmethod
    def from_text(cls, text: str) -> GeneratorConfig:
        """Parse ``key = value`` lines; ``#`` starts a comment."""
        values = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParameterError(f"config line {lineno}: expected key = value")
            key, raw = (part.strip() for part in line.split("=", 1))
            values[key] = raw
        return cls.from_mapping(values)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[Role, ...]
    config: GeneratorConfig | None = None

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ParameterError("one label per node is required")

    @classmethod
    def from_graph(cls, g: Graph) -> LabeledGraph:
        return cls(g, (Role.ACTIVE,) * g.n)

    def nodes_with(self, *roles: Role) -> list[int]:
        return [i for i, r in enumerate(self.labels) if r in roles]

    def labels_text(self) -> str:
        return "".join(f"{i} {r.value}\n" for i, r in enumerate(self.labels))

    def write(self, path: str | Path) -> tuple[Path, Path]:
        """Write the edge list to ``path`` and labels to ``path + '.labels'``."""
        path = Path(path)
        label_path = path.with_name(path.name + ".labels")
        path.write_text(to_edge_list(self.graph), encoding="utf-8", newline="\n")
        label_path.write_text(self.labels_text(), encoding="utf-8", newline="\n")
        return path, label_path


def stream(seed: int, purpose: Stream) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(int(purpose),))))


def _individual_edges(cfg: GeneratorConfig, activity: np.ndarray) -> list[tuple[int, int]]:
    n = cfg.n_individuals
    rng = stream(cfg.seed, Stream.INDIVIDUAL_EDGES)
    edges: list[tuple[int, int]] = []
    row = 0
    while row < n - 1:
        # Collect whole rows until the block is full; draws stay row-major.
        stop, count = row, 0
        while stop < n - 1 and (count == 0 or count + (n - 1 - stop) <= _ROW_BLOCK):
            count += n - 1 - stop
            stop += 1
        iu = np.repeat(np.arange(row, stop), np.arange(n - 1 - row, n - 1 - stop, -1))
        ju = np.concatenate([np.arange(i + 1, n) for i in range(row, stop)])
        u = rng.random(count)
        hit = u < cfg.edge_prob * activity[iu] * activity[ju]
        edges.extend(zip(iu[hit].tolist(), ju[hit].tolist()))
        row = stop
    return edges


def generate(config: GeneratorConfig) -> LabeledGraph:
    n_ind = config.n_individuals
    roles = [Role.ACTIVE] * n_ind
    n_dormant = round(config.dormant_fraction * n_ind)
    if n_dormant:
        order = stream(config.seed, Stream.ROLES).permutation(n_ind)
        for i in order[:n_dormant]:
            roles[int(i)] = Role.DORMANT
    activity = np.array([config.dormant_activity if r is Role.DORMANT else 1.0 for r in roles])

    edges = _individual_edges(config, activity)
    if config.n_institutions and n_ind:
        u = stream(config.seed, Stream.INSTITUTION_EDGES).random((config.n_institutions, n_ind))
        t_idx, j_idx = np.nonzero(u < config.institution_attach_prob)
        edges.extend(zip((j_idx).tolist(), (t_idx + n_ind).tolist()))
    roles.extend([Role.INSTITUTION] * config.n_institutions)
    return LabeledGraph(Graph(config.n, edges), tuple(roles), config)


def degree_cap(lg: LabeledGraph, cap: int, seed: int | None = None) -> LabeledGraph:
    """Trim every node above ``cap`` down to ``cap`` by dropping random incident edges.

    Nodes are visited in ascending id order.  A node trimmed early can lose
    further edges when a later neighbour is trimmed, so afterwards every
    degree is at most ``cap``.  ``seed`` defaults to the generating config's.
    """
    if cap < 1:
        raise ParameterError(f"cap must be a positive integer, got {cap}")
    if seed is None:
        seed = lg.config.seed if lg.config is not None else 0
    adj = [set(lg.graph.neighbors(i)) for i in range(lg.graph.n)]
    if all(len(a) <= cap for a in adj):
        return lg
    rng = stream(seed, Stream.DEGREE_CAP)
    removed = []
    for i, nbrs in enumerate(adj):
        excess = len(nbrs) - cap
        if excess <= 0:
            continue
        for j in rng.choice(sorted(nbrs), size=excess, replace=False).tolist():
            nbrs.discard(j)
            adj[j].discard(i)
            removed.append((i, j))
    return LabeledGraph(lg.graph.without_edges(removed), lg.labels, lg.config)


@dataclass(frozen=True)
class SkewReport:
    full: DistributionSummary
    individuals: DistributionSummary | None
    paradox: ParadoxSummary

    @property
    def full_gap(self) -> float:
        return self.full.mean - self.full.median

    @property
    def individual_gap(self) -> float | None:
        return None if self.individuals is None else self.individuals.mean - self.individuals.median


def skew_report(lg: LabeledGraph) -> SkewReport:
    """Degree summaries for all nodes and for individuals only, plus paradox metrics.

    Individual degrees include their links to institutions, so differencing
    runs with and without institutions or dormancy attributes the skew.
    """
    if not lg.graph.edges:
        raise UndefinedStatisticError("skew report needs a graph with at least one edge")
    deg = degrees(lg.graph)
    people = lg.nodes_with(Role.ACTIVE, Role.DORMANT)
    return SkewReport(
        full=summarize(deg),
        individuals=summarize([deg[i] for i in people]) if people else None,
        paradox=paradox_summary(lg.graph),
    )
