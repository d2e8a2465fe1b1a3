"""Weighted bipartite graphs, matchings, and their JSON serialization.

A graph over two vertex partitions of equal size ``sigma`` is stored as a
dense sigma x sigma matrix of nonnegative integer edge weights; a zero entry
means the edge is absent. A matching is a set of matrix cells no two of which
share a row or a column. Graphs and matchings are immutable after
construction, so they are safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

INT64_MAX = 2**63 - 1


class GraphFormatError(ValueError):
    """Malformed on-disk document or invalid weight matrix."""


class MatchingError(ValueError):
    """A matching violates one of its invariants against its host graph."""


@dataclass(frozen=True, eq=False)
class WeightedBipartiteGraph:
    """Immutable sigma x sigma nonnegative integer weight matrix.

    ``weights[i][j]`` is the weight of the edge between left vertex i and
    right vertex j; 0 encodes an absent edge. Entries and the total weight
    must fit in a signed 64-bit integer so downstream arithmetic stays exact.
    """

    sigma: int
    weights: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.sigma, int) or self.sigma < 1:
            raise GraphFormatError(f"sigma must be a positive integer, got {self.sigma!r}")
        arr = np.asarray(self.weights)
        if arr.dtype.kind not in "iu":
            raise GraphFormatError("weights must be integers within the 64-bit range")
        if arr.shape != (self.sigma, self.sigma):
            raise GraphFormatError(
                f"weights must be a {self.sigma}x{self.sigma} matrix, got shape {arr.shape}"
            )
        if arr.size and int(arr.min()) < 0:
            raise GraphFormatError("weights must be nonnegative")
        if arr.dtype.kind == "u" and arr.size and int(arr.max()) > INT64_MAX:
            raise GraphFormatError("weights must be integers within the 64-bit range")
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        # exact total via Python ints only when an int64 sum could overflow
        mx = int(arr.max()) if arr.size else 0
        if mx > 0 and mx > INT64_MAX // arr.size:
            total = sum(int(x) for x in arr.flat)
            if total > INT64_MAX:
                raise GraphFormatError("total weight exceeds the 64-bit range")
        arr.setflags(write=False)
        object.__setattr__(self, "weights", arr)

    @classmethod
    def from_flat(cls, sigma: int, flat) -> "WeightedBipartiteGraph":
        """Build from a row-major sequence of sigma**2 entries."""
        values = list(flat)
        if not isinstance(sigma, int) or sigma < 1:
            raise GraphFormatError(f"sigma must be a positive integer, got {sigma!r}")
        if len(values) != sigma * sigma:
            raise GraphFormatError(
                f"weights has {len(values)} entries, expected sigma^2 = {sigma * sigma}"
            )
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
            raise GraphFormatError("weights must be integers within the 64-bit range")
        if any(v > INT64_MAX for v in values):
            raise GraphFormatError("weights must be integers within the 64-bit range")
        arr = np.array(values, dtype=np.int64).reshape(sigma, sigma)
        return cls(sigma, arr)

    def to_flat(self) -> list[int]:
        return [int(x) for x in self.weights.flat]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedBipartiteGraph):
            return NotImplemented
        return self.sigma == other.sigma and bool(np.array_equal(self.weights, other.weights))

    def __hash__(self) -> int:
        return hash((self.sigma, self.weights.tobytes()))

    def __repr__(self) -> str:
        return f"WeightedBipartiteGraph(sigma={self.sigma}, weights={self.weights.tolist()})"


@dataclass(frozen=True)
class Matching:
    """A set of row/column-disjoint cells together with its total weight."""

    pairs: frozenset[tuple[int, int]]
    weight: int

    @classmethod
    def from_pairs(cls, graph: WeightedBipartiteGraph, pairs) -> "Matching":
        """Validated construction; weight is computed from the host graph."""
        pairs = frozenset((int(i), int(j)) for i, j in pairs)
        candidate = cls(pairs, _pairs_weight(graph, pairs))
        problem = validate_matching(graph, candidate)
        if problem is not None:
            raise MatchingError(problem)
        return candidate


EMPTY_MATCHING = Matching(frozenset(), 0)


@dataclass(frozen=True)
class ClassSpec:
    """Identifies the class of graphs with total weight m and partition size sigma."""

    m: int
    sigma: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        if not isinstance(self.sigma, int) or self.sigma < 1:
            raise ValueError(f"sigma must be a positive integer, got {self.sigma!r}")


def total_weight(graph: WeightedBipartiteGraph) -> int:
    """Sum of all matrix entries."""
    return int(graph.weights.sum(dtype=np.int64))


def _pairs_weight(graph: WeightedBipartiteGraph, pairs) -> int:
    return sum(int(graph.weights[i, j]) for i, j in pairs)


def validate_matching(graph: WeightedBipartiteGraph, matching: Matching) -> str | None:
    """Return None when every matching invariant holds, else the first violation.

    Checked in order, per cell in sorted order: index range, positive weight,
    then row/column disjointness, then weight consistency.
    """
    rows_seen: set[int] = set()
    cols_seen: set[int] = set()
    for i, j in sorted(matching.pairs):
        if not (0 <= i < graph.sigma and 0 <= j < graph.sigma):
            return f"cell ({i}, {j}) out of range for sigma={graph.sigma}"
        if graph.weights[i, j] == 0:
            return f"cell ({i}, {j}) has zero weight (no edge)"
        if i in rows_seen:
            return f"shared row {i}"
        if j in cols_seen:
            return f"shared column {j}"
        rows_seen.add(i)
        cols_seen.add(j)
    expected = _pairs_weight(graph, matching.pairs)
    if matching.weight != expected:
        return f"weight {matching.weight} does not match cell sum {expected}"
    return None


def matching_weight(graph: WeightedBipartiteGraph, matching: Matching) -> int:
    """Sum of the graph's entries at the matching's cells.

    Raises MatchingError when the matching is invalid for the graph.
    """
    problem = validate_matching(graph, matching)
    if problem is not None:
        raise MatchingError(problem)
    return matching.weight


def graph_to_dict(graph: WeightedBipartiteGraph) -> dict:
    return {"sigma": graph.sigma, "weights": graph.to_flat()}


def graph_from_dict(doc, source: str = "graph document") -> WeightedBipartiteGraph:
    if not isinstance(doc, dict):
        raise GraphFormatError(f"{source}: expected a JSON object")
    if "sigma" not in doc or "weights" not in doc:
        raise GraphFormatError(f'{source}: missing "sigma" or "weights"')
    sigma = doc["sigma"]
    weights = doc["weights"]
    if not isinstance(sigma, int) or isinstance(sigma, bool):
        raise GraphFormatError(f"{source}: sigma must be an integer")
    if not isinstance(weights, list):
        raise GraphFormatError(f"{source}: weights must be an array")
    return WeightedBipartiteGraph.from_flat(sigma, weights)


def matching_to_dict(matching: Matching) -> dict:
    return {"pairs": [[i, j] for i, j in sorted(matching.pairs)], "weight": matching.weight}


def read_graph(path) -> WeightedBipartiteGraph:
    """Read a graph from a JSON file: {"sigma": n, "weights": [n*n entries]}."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: invalid JSON document: {exc}") from exc
    return graph_from_dict(doc, source=str(path))


def write_graph(graph: WeightedBipartiteGraph, path) -> None:
    """Write a graph as JSON; read_graph(write_graph(g)) round-trips exactly."""
    Path(path).write_text(json.dumps(graph_to_dict(graph)) + "\n", encoding="utf-8")
