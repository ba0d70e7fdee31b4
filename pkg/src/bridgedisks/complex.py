"""Finite truncations of the disk complex and the octahedral sphere inside it.

Vertices are compressing curves, an edge joins two disjoint non-isotopic
ones, and higher simplices are the cliques of that graph (the complex is
flag), listed up to a dimension cap.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .classifier import labelled, reference_vertex, ClassLabel
from .curve import puncture_partition
from .homology import Column, Homology, Simplex, boundary_columns, compose_is_zero, reduced_homology
from .intersection import are_disjoint
from .layout import BridgeLayout
from .tangle import DiskVertex
from .vertices import (  # noqa: F401  (re-exported: truncation builders live with the complex)
    ResourceCapExceeded,
    enumerate_curves,
    enumerate_vertices,
    merge_vertices,
    side_moves,
    twist_orbit,
)


class DimensionCapExceeded(ValueError):
    code = "DimensionCapExceeded"


class DedupeInconsistency(RuntimeError):
    code = "DedupeInconsistency"


@dataclass
class ComplexSlice:
    vertices: List[DiskVertex]
    edges: List[Tuple[int, int]]
    simplices: List[List[Simplex]]  # simplices[k]: sorted k-simplices
    dim_cap: int
    truncated: bool  # some clique has more than dim_cap + 1 vertices
    _boundaries: Dict[int, List[Column]] = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def f_vector(self) -> List[int]:
        return [len(s) for s in self.simplices]

    def boundary(self, k: int) -> List[Column]:
        """Integer boundary matrix from k-chains to (k-1)-chains, k >= 1."""
        if k < 1:
            raise ValueError("boundary maps start in degree 1")
        if k not in self._boundaries:
            if k > self.dimension:
                self._boundaries[k] = []
            else:
                self._boundaries[k] = boundary_columns(self.simplices[k], self.simplices[k - 1])
        return self._boundaries[k]

    def boundary_squares_vanish(self) -> bool:
        return all(
            compose_is_zero(self.boundary(k), self.boundary(k + 1)) for k in range(1, self.dimension)
        )

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from(self.edges)
        return g

    def components(self) -> int:
        return nx.number_connected_components(self.graph())

    def to_json(self, betti: Optional[Sequence[int]] = None) -> dict:
        data = {
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }
        if betti is not None:
            data["betti"] = list(betti)
        return data


def _disjoint_row(args) -> List[int]:
    i, vertices = args
    u = vertices[i].curve
    return [j for j in range(i + 1, len(vertices)) if are_disjoint(u, vertices[j].curve)]


def disjointness_edges(vertices: Sequence[DiskVertex], *, jobs: int = 1) -> List[Tuple[int, int]]:
    """Pairs (k, l), k < l, of disjoint vertices; order independent of ``jobs``."""
    vs = list(vertices)
    tasks = [(i, vs) for i in range(len(vs))]
    if jobs > 1 and len(vs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_disjoint_row, tasks, chunksize=max(1, len(vs) // (4 * jobs))))
    else:
        rows = [_disjoint_row(t) for t in tasks]
    return [(i, j) for i, row in enumerate(rows) for j in row]


def _flag_simplices(n_vertices: int, edges: Sequence[Tuple[int, int]], dim_cap: int):
    g = nx.Graph()
    g.add_nodes_from(range(n_vertices))
    g.add_edges_from(edges)
    by_dim: List[List[Simplex]] = [[] for _ in range(dim_cap + 1)]
    truncated = False
    for clique in nx.enumerate_all_cliques(g):  # nondecreasing size
        k = len(clique) - 1
        if k > dim_cap:
            truncated = True
            break
        by_dim[k].append(tuple(sorted(clique)))
    while len(by_dim) > 1 and not by_dim[-1]:
        by_dim.pop()
    return [sorted(s) for s in by_dim], truncated


def build_complex(
    vertices: Sequence[DiskVertex],
    dim_cap: int,
    *,
    jobs: int = 1,
    edges: Optional[Sequence[Tuple[int, int]]] = None,
) -> ComplexSlice:
    """Flag complex on the disjointness graph of ``vertices`` (canonically re-sorted).

    ``edges`` may be supplied for vertices already in canonical order.
    Raises :class:`DedupeInconsistency` if two distinct encodings turn out to
    be isotopic, which would mean the canonical form is not canonical.
    """
    if dim_cap < 0:
        raise ValueError("dim_cap must be non-negative")
    vs = sorted(vertices, key=lambda v: v.key)
    keys = [v.key for v in vs]
    if len(set(keys)) != len(keys):
        raise ValueError("vertices must be deduplicated")
    if edges is None:
        edges = disjointness_edges(vs, jobs=jobs)
    edges = sorted(tuple(e) for e in edges)
    for k, l in edges:
        if frozenset(puncture_partition(vs[k].curve)) == frozenset(puncture_partition(vs[l].curve)):
            raise DedupeInconsistency(f"vertices {k} and {l} are distinct encodings of one class")
    simplices, truncated = _flag_simplices(len(vs), edges, dim_cap)
    return ComplexSlice(vs, edges, simplices, dim_cap, truncated)


def homology_ranks(cx: ComplexSlice, max_dim: Optional[int] = None) -> Homology:
    """Reduced homology of the slice in degrees 0..max_dim.

    Degree k needs every (k+1)-simplex, so a truncated slice only answers
    below its dimension cap.
    """
    limit = cx.dim_cap - 1 if cx.truncated else max(cx.dim_cap - 1, cx.dimension)
    if max_dim is None:
        max_dim = limit
    if max_dim > limit:
        raise DimensionCapExceeded(f"degree {max_dim} needs simplices above the cap {cx.dim_cap}")
    if max_dim < 0:
        raise DimensionCapExceeded("no degree is computable at dim_cap 0 on a truncated slice")
    sizes = cx.f_vector() + [0] * (max_dim + 2)
    boundaries = [[]] + [cx.boundary(k) for k in range(1, max_dim + 2)]
    return reduced_homology(sizes, boundaries, max_dim)


def octahedron(layout: BridgeLayout) -> ComplexSlice:
    """The complex spanned by the reference vertices ∂D_i^±."""
    n = layout.n
    refs = [
        reference_vertex(n, ClassLabel(i, s)) for i in range(1, n + 1) for s in "+-"
    ]
    return build_complex(refs, dim_cap=n)


def labelled_vertices(cx: ComplexSlice) -> List[DiskVertex]:
    return [labelled(v) for v in cx.vertices]
