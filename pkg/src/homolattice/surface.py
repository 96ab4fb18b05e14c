"""Combinatorial surfaces with open/closed boundary structure.

A surface is a triple (V, E, F): a simple graph plus a list of faces, each
face being a set of edge indices that forms a single closed cycle.  Edges
carry an ``open`` flag; open edges must lie on the boundary (belong to exactly
one face).  Everything downstream (homology, duality, codes) consumes this
model, so :func:`validate` is strict about the cellulation axioms:

* no loops, no duplicate edges;
* every face is a single self-avoiding closed cycle with no repeated edge;
* two faces share at most one edge; every edge lies in one or two faces;
* every vertex has at least one incident edge, and its face-adjacency graph
  F_v is a single self-avoiding path (boundary vertex) or cycle (interior).

Two opt-in strict flags tighten this: ``no-distance-one`` forbids a non-open
edge whose endpoints are both open, and ``girth3`` (re)asserts girth >= 3.
Both are required by :func:`homolattice.dual.dualize` and are on for every
built-in generator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InvalidSurfaceError

__all__ = [
    "Edge",
    "Surface",
    "Violation",
    "ValidationReport",
    "BoundaryClassification",
    "NO_DISTANCE_ONE",
    "GIRTH3",
    "STRICT_ALL",
    "validate",
    "require_valid",
    "classify_boundary",
    "kappa_no_open_vertex",
    "kappa_no_closed_boundary_edge",
    "canonicalize",
    "to_json_dict",
    "from_json_dict",
    "to_json",
    "from_json",
    "save_surface",
    "load_surface",
]

NO_DISTANCE_ONE = "no-distance-one"
GIRTH3 = "girth3"
STRICT_ALL = frozenset({NO_DISTANCE_ONE, GIRTH3})


@dataclass(frozen=True)
class Edge:
    """An undirected edge between vertices ``u`` and ``v``; ``open`` marks type."""

    u: int
    v: int
    open: bool = False

    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ValueError(f"vertex {w} is not an endpoint of {self}")


@dataclass(frozen=True)
class Surface:
    """Immutable cellulation: ``vertex_count``, ``edges``, ``faces``, optional coords.

    Faces reference edges by index.  ``coords`` (one (x, y) pair per vertex) is
    carried for rendering only and never affects any computation.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    faces: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[float, float], ...] | None = None

    @classmethod
    def build(cls, vertex_count, edges, faces, coords=None) -> Surface:
        """Construct from loose data: edges as ``Edge`` or ``(u, v[, open])``."""
        norm_edges = []
        for e in edges:
            if isinstance(e, Edge):
                norm_edges.append(e)
            else:
                u, v, *rest = e
                norm_edges.append(Edge(int(u), int(v), bool(rest[0]) if rest else False))
        norm_faces = tuple(tuple(int(i) for i in f) for f in faces)
        norm_coords = None
        if coords is not None:
            norm_coords = tuple((c[0], c[1]) for c in coords)
        return cls(int(vertex_count), tuple(norm_edges), norm_faces, norm_coords)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class Violation:
    """One validation failure: a short machine code plus offending cell indices."""

    code: str
    cells: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        where = ",".join(str(c) for c in self.cells)
        return f"{self.code}[{where}]: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "\n".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class BoundaryClassification:
    """Index sets for the boundary partition and the non-open interiors.

    ``boundary_edges`` are the edges lying in exactly one face; they split into
    ``open_edges`` (declared) and ``closed_edges``.  A vertex is open iff it is
    incident to an open edge; a face is open iff it contains an open edge.
    ``interior_*`` are the non-open cells (complement of the open sets), which
    is what chains, stabilizers, and qubits are indexed by.
    """

    boundary_vertices: frozenset[int]
    boundary_edges: frozenset[int]
    boundary_faces: frozenset[int]
    open_vertices: frozenset[int]
    open_edges: frozenset[int]
    open_faces: frozenset[int]
    closed_vertices: frozenset[int]
    closed_edges: frozenset[int]
    closed_faces: frozenset[int]
    interior_vertices: frozenset[int]
    interior_edges: frozenset[int]
    interior_faces: frozenset[int]

    def nonboundary_vertices(self, s: Surface) -> frozenset[int]:
        """Vertices not on the boundary at all (V minus all boundary vertices)."""
        return frozenset(range(s.vertex_count)) - self.boundary_vertices


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _edge_faces(s: Surface) -> list[list[int]]:
    """For each edge index, the list of faces containing it (in face order)."""
    incidence: list[list[int]] = [[] for _ in s.edges]
    for fi, face in enumerate(s.faces):
        for ei in face:
            if 0 <= ei < len(s.edges):
                incidence[ei].append(fi)
    return incidence


def _face_is_cycle(s: Surface, face: tuple[int, ...]) -> bool:
    """True iff the face's edge set forms one self-avoiding closed cycle."""
    if not face or len(set(face)) != len(face):
        return False
    degree: dict[int, list[int]] = {}
    for ei in face:
        if not 0 <= ei < len(s.edges):
            return False
        e = s.edges[ei]
        if e.u == e.v:
            return False
        for w in (e.u, e.v):
            degree.setdefault(w, []).append(ei)
    if any(len(eids) != 2 for eids in degree.values()):
        return False
    # Connectivity: walk from the first edge; a cycle visits every edge.
    start = face[0]
    seen = {start}
    frontier = [start]
    while frontier:
        ei = frontier.pop()
        e = s.edges[ei]
        for w in (e.u, e.v):
            for nxt in degree[w]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return len(seen) == len(face)


def _face_cycle_order(s: Surface, face: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical traversal of a valid cycle face.

    Starts at the lowest edge index and proceeds toward its lower-indexed
    neighbor, yielding a deterministic cyclic order.
    """
    at_vertex: dict[int, list[int]] = {}
    for ei in face:
        e = s.edges[ei]
        at_vertex.setdefault(e.u, []).append(ei)
        at_vertex.setdefault(e.v, []).append(ei)
    start = min(face)
    e = s.edges[start]
    neighbors = []
    for w in (e.u, e.v):
        for other in at_vertex[w]:
            if other != start:
                neighbors.append((other, w))
    nxt, via = min(neighbors)
    order = [start, nxt]
    prev_vertex = via
    while len(order) < len(face):
        cur = order[-1]
        ahead = s.edges[cur].other(prev_vertex)
        for cand in at_vertex[ahead]:
            if cand != cur:
                order.append(cand)
                prev_vertex = ahead
                break
    return tuple(order)


def validate(s: Surface, strict: frozenset[str] | set[str] = frozenset()) -> ValidationReport:
    """Check all cellulation axioms; returns a report (empty means valid).

    ``strict`` may contain ``"no-distance-one"`` (a non-open edge must not have
    two open endpoints) and/or ``"girth3"`` (girth >= 3, i.e. no loops or
    parallel edges — implied by simplicity but asserted explicitly).
    """
    unknown = set(strict) - STRICT_ALL
    if unknown:
        raise ValueError(f"unknown strict flags: {sorted(unknown)}")
    out: list[Violation] = []

    if s.vertex_count < 0:
        out.append(Violation("bad-vertex-count", (), f"vertex_count = {s.vertex_count}"))
        return ValidationReport(tuple(out))
    if s.coords is not None and len(s.coords) != s.vertex_count:
        out.append(
            Violation(
                "coords-length",
                (),
                f"{len(s.coords)} coordinate pairs for {s.vertex_count} vertices",
            )
        )

    seen_pairs: dict[tuple[int, int], int] = {}
    for ei, e in enumerate(s.edges):
        if not (0 <= e.u < s.vertex_count and 0 <= e.v < s.vertex_count):
            out.append(Violation("edge-endpoint-range", (ei,), f"edge {ei} = {e}"))
            continue
        if e.u == e.v:
            out.append(Violation("loop-edge", (ei,), f"edge {ei} is a loop at {e.u}"))
            continue
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in seen_pairs:
            out.append(
                Violation(
                    "duplicate-edge",
                    (seen_pairs[key], ei),
                    f"edges {seen_pairs[key]} and {ei} both join {key}",
                )
            )
        else:
            seen_pairs[key] = ei
    if out:
        # Face/vertex checks assume a sane edge list; report what we have.
        return ValidationReport(tuple(out))

    for fi, face in enumerate(s.faces):
        bad_ref = [ei for ei in face if not 0 <= ei < len(s.edges)]
        if bad_ref:
            out.append(
                Violation("face-edge-range", (fi,), f"face {fi} references edges {bad_ref}")
            )
            continue
        dupes = sorted({ei for ei in face if face.count(ei) > 1})
        if dupes:
            out.append(
                Violation(
                    "edge-twice-in-face",
                    (fi, *dupes),
                    f"face {fi} repeats edges {dupes}",
                )
            )
            continue
        if not _face_is_cycle(s, face):
            out.append(
                Violation("face-not-cycle", (fi,), f"face {fi} is not a single closed cycle")
            )
    if out:
        return ValidationReport(tuple(out))

    incidence = _edge_faces(s)
    pair_counts: dict[tuple[int, int], int] = {}
    for faces_of_e in incidence:
        if len(faces_of_e) == 2:
            f1, f2 = sorted(faces_of_e)
            pair_counts[(f1, f2)] = pair_counts.get((f1, f2), 0) + 1
    for (f1, f2), cnt in sorted(pair_counts.items()):
        if cnt > 1:
            out.append(
                Violation(
                    "faces-share-edges",
                    (f1, f2),
                    f"faces {f1} and {f2} share {cnt} edges",
                )
            )
    for ei, faces_of_e in enumerate(incidence):
        if len(faces_of_e) == 0:
            out.append(Violation("edge-no-face", (ei,), f"edge {ei} belongs to no face"))
        elif len(faces_of_e) > 2:
            out.append(
                Violation(
                    "edge-many-faces",
                    (ei,),
                    f"edge {ei} belongs to {len(faces_of_e)} faces",
                )
            )
    for ei, e in enumerate(s.edges):
        if e.open and len(incidence[ei]) != 1:
            out.append(
                Violation(
                    "open-edge-interior",
                    (ei,),
                    f"open edge {ei} belongs to {len(incidence[ei])} faces",
                )
            )
    if out:
        return ValidationReport(tuple(out))

    edges_at: list[list[int]] = [[] for _ in range(s.vertex_count)]
    for ei, e in enumerate(s.edges):
        edges_at[e.u].append(ei)
        edges_at[e.v].append(ei)
    for v in range(s.vertex_count):
        if not edges_at[v]:
            out.append(Violation("isolated-vertex", (v,), f"vertex {v} has no incident edge"))
            continue
        # F_v: faces at v, joined when they share an edge at v.  Each valid face
        # passes v once (two of its edges meet v), so every node has two slots;
        # boundary edges at v leave stubs.  Valid iff connected with 0 or 2 stubs.
        faces_at = sorted({fi for ei in edges_at[v] for fi in incidence[ei]})
        stubs = 0
        adj: dict[int, list[int]] = {fi: [] for fi in faces_at}
        for ei in edges_at[v]:
            fs = incidence[ei]
            if len(fs) == 1:
                stubs += 1
            else:
                adj[fs[0]].append(fs[1])
                adj[fs[1]].append(fs[0])
        seen = {faces_at[0]}
        frontier = [faces_at[0]]
        while frontier:
            for nxt in adj[frontier.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        connected = len(seen) == len(faces_at)
        if not connected or stubs not in (0, 2):
            out.append(
                Violation(
                    "vertex-link-broken",
                    (v,),
                    f"face-adjacency at vertex {v} is not a single path or cycle",
                )
            )

    if NO_DISTANCE_ONE in strict:
        open_vertex = [False] * s.vertex_count
        for e in s.edges:
            if e.open:
                open_vertex[e.u] = open_vertex[e.v] = True
        for ei, e in enumerate(s.edges):
            if not e.open and open_vertex[e.u] and open_vertex[e.v]:
                out.append(
                    Violation(
                        "distance-one-edge",
                        (ei,),
                        f"non-open edge {ei} has two open endpoints",
                    )
                )
    if GIRTH3 in strict:
        # Simplicity already forbids loops (length-1) and parallel edges
        # (length-2 cycles), so a simple graph has girth >= 3; re-assert it.
        for ei, e in enumerate(s.edges):
            if e.u == e.v:
                out.append(Violation("girth", (ei,), f"loop edge {ei} gives girth 1"))
        pairs: dict[tuple[int, int], int] = {}
        for ei, e in enumerate(s.edges):
            key = (min(e.u, e.v), max(e.u, e.v))
            if key in pairs:
                out.append(
                    Violation("girth", (pairs[key], ei), "parallel edges give girth 2")
                )
            pairs[key] = ei

    return ValidationReport(tuple(out))


def require_valid(s: Surface, strict: frozenset[str] | set[str] = frozenset()) -> None:
    """Raise :class:`InvalidSurfaceError` (with the report) unless ``s`` validates."""
    report = validate(s, strict)
    if not report.ok:
        label = "strictly valid" if strict else "valid"
        raise InvalidSurfaceError(
            f"surface is not {label}:\n{report}", report=report
        )


def _classify_unchecked(s: Surface) -> BoundaryClassification:
    incidence = _edge_faces(s)
    boundary_edges = frozenset(ei for ei, fs in enumerate(incidence) if len(fs) == 1)
    open_edges = frozenset(ei for ei, e in enumerate(s.edges) if e.open)
    closed_edges = boundary_edges - open_edges

    boundary_vertices = set()
    open_vertices = set()
    for ei in boundary_edges:
        e = s.edges[ei]
        boundary_vertices.update((e.u, e.v))
    for ei in open_edges:
        e = s.edges[ei]
        open_vertices.update((e.u, e.v))
    boundary_vertices = frozenset(boundary_vertices)
    open_vertices = frozenset(open_vertices)

    boundary_faces = frozenset(
        fi for fi, face in enumerate(s.faces) if any(ei in boundary_edges for ei in face)
    )
    open_faces = frozenset(
        fi for fi, face in enumerate(s.faces) if any(ei in open_edges for ei in face)
    )

    all_v = frozenset(range(s.vertex_count))
    all_e = frozenset(range(len(s.edges)))
    all_f = frozenset(range(len(s.faces)))
    return BoundaryClassification(
        boundary_vertices=boundary_vertices,
        boundary_edges=boundary_edges,
        boundary_faces=boundary_faces,
        open_vertices=open_vertices,
        open_edges=open_edges,
        open_faces=open_faces,
        closed_vertices=boundary_vertices - open_vertices,
        closed_edges=closed_edges,
        closed_faces=boundary_faces - open_faces,
        interior_vertices=all_v - open_vertices,
        interior_edges=all_e - open_edges,
        interior_faces=all_f - open_faces,
    )


def classify_boundary(s: Surface) -> BoundaryClassification:
    """Partition cells into open/closed boundary and non-open interior sets."""
    require_valid(s)
    return _classify_unchecked(s)


def _kappa_no_open_vertex(s: Surface, cls: BoundaryClassification) -> int:
    uf = _UnionFind(s.vertex_count)
    for ei in cls.interior_edges:
        e = s.edges[ei]
        uf.union(e.u, e.v)
    tainted = {uf.find(v) for v in cls.open_vertices}
    roots = {uf.find(v) for v in range(s.vertex_count)}
    return len(roots - tainted)


def kappa_no_open_vertex(s: Surface) -> int:
    """Components of the interior graph (V, non-open edges) with no open vertex."""
    require_valid(s)
    return _kappa_no_open_vertex(s, _classify_unchecked(s))


def _kappa_no_closed_boundary_edge(s: Surface, cls: BoundaryClassification) -> int:
    uf = _UnionFind(s.vertex_count)
    for e in s.edges:
        uf.union(e.u, e.v)
    tainted = {uf.find(s.edges[ei].u) for ei in cls.closed_edges}
    roots = {uf.find(v) for v in range(s.vertex_count)}
    return len(roots - tainted)


def kappa_no_closed_boundary_edge(s: Surface) -> int:
    """Components of the full graph (V, E) containing no closed boundary edge."""
    require_valid(s)
    return _kappa_no_closed_boundary_edge(s, _classify_unchecked(s))


def canonicalize(s: Surface) -> tuple[Surface, list[int], list[int]]:
    """Normalize cell order; returns ``(surface, edge_map, face_map)``.

    Edges are stored with ``u < v`` and sorted by endpoint pair; each valid
    cycle face is rewritten in its canonical traversal (lowest edge index
    first, then the lower-indexed neighbor) and faces are sorted
    lexicographically.  ``edge_map[old] == new`` and likewise for faces, so
    callers can re-target any indices they hold.  Idempotent, and the basis of
    the bit-stable JSON format.  Faces that are not valid cycles are kept as
    sorted index lists (validation will report them).
    """
    keyed = []
    for ei, e in enumerate(s.edges):
        u, v = (e.u, e.v) if e.u <= e.v else (e.v, e.u)
        keyed.append(((u, v, e.open), ei))
    keyed.sort()
    edge_map = [0] * len(s.edges)
    new_edges = []
    for new_idx, ((u, v, is_open), old_idx) in enumerate(keyed):
        edge_map[old_idx] = new_idx
        new_edges.append(Edge(u, v, is_open))

    tmp = Surface(s.vertex_count, tuple(new_edges), (), s.coords)
    remapped = []
    for face in s.faces:
        idxs = tuple(
            edge_map[ei] if 0 <= ei < len(edge_map) else ei for ei in face
        )
        if all(0 <= ei < len(new_edges) for ei in idxs) and _face_is_cycle(tmp, idxs):
            remapped.append(_face_cycle_order(tmp, idxs))
        else:
            remapped.append(tuple(sorted(idxs)))
    order = sorted(range(len(remapped)), key=lambda fi: remapped[fi])
    face_map = [0] * len(remapped)
    for new_idx, old_idx in enumerate(order):
        face_map[old_idx] = new_idx
    new_faces = tuple(remapped[old_idx] for old_idx in order)

    return Surface(s.vertex_count, tuple(new_edges), new_faces, s.coords), edge_map, face_map


def to_json_dict(s: Surface) -> dict:
    """Canonical JSON-ready dict (fixed key order, canonical cell order)."""
    canon, _, _ = canonicalize(s)
    out: dict = {
        "vertex_count": canon.vertex_count,
        "edges": [{"u": e.u, "v": e.v, "open": e.open} for e in canon.edges],
        "faces": [list(face) for face in canon.faces],
    }
    if canon.coords is not None:
        out["coords"] = [[x, y] for (x, y) in canon.coords]
    return out


def from_json_dict(d: dict) -> Surface:
    try:
        vertex_count = int(d["vertex_count"])
        edges = [Edge(int(e["u"]), int(e["v"]), bool(e["open"])) for e in d["edges"]]
        faces = [tuple(int(i) for i in f) for f in d["faces"]]
        coords = None
        if "coords" in d and d["coords"] is not None:
            coords = tuple((c[0], c[1]) for c in d["coords"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSurfaceError(f"malformed surface JSON: {exc}") from exc
    return Surface(vertex_count, tuple(edges), tuple(faces), coords)


def to_json(s: Surface) -> str:
    """Bit-stable canonical JSON text (compact separators, trailing newline)."""
    return json.dumps(to_json_dict(s), separators=(",", ":")) + "\n"


def from_json(text: str) -> Surface:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSurfaceError(f"not valid JSON: {exc}") from exc
    if not isinstance(d, dict):
        raise InvalidSurfaceError("surface JSON must be an object")
    return from_json_dict(d)


def save_surface(s: Surface, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(s))


def load_surface(path) -> Surface:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return from_json(fh.read())
    except OSError as exc:
        raise InvalidSurfaceError(f"cannot read {path}: {exc}") from exc
