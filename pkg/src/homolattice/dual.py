"""Dual cellulation with open and closed boundary roles swapped.

``dualize`` sends a strictly valid surface G to its dual G*:

* a non-open dual vertex for every face of G;
* an open dual vertex for every closed boundary edge of G;
* a non-open dual edge for every non-open edge of G (joining the dual
  vertices of its one or two faces, using the edge's own dual vertex in the
  one-face case);
* an open dual edge for every closed boundary vertex of G (joining the dual
  vertices of its two closed boundary edges);
* a non-open dual face for every vertex of G not on the boundary (the face
  cycle F_v) and an open dual face for every closed boundary vertex (the
  completed cycle that closes the face path through the two boundary-edge
  vertices).

Both strict validation flags are prerequisites: girth >= 3 keeps the dual
graph simple, and the distance-one guard keeps every dual edge inside at
least one dual face.  Under those flags the dual is itself strictly valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSurfaceError, ModelingError
from .surface import (
    STRICT_ALL,
    Edge,
    Surface,
    ValidationReport,
    Violation,
    _classify_unchecked,
    _edge_faces,
    canonicalize,
    require_valid,
    validate,
)

__all__ = ["DualCorrespondence", "local_dual_cycle", "dualize", "check_correspondences"]


@dataclass(frozen=True)
class DualCorrespondence:
    """Index bijections between primal cell classes and dual cell classes.

    Keys are primal indices, values are indices into the (canonicalized) dual
    surface.  Each map is a bijection onto the dual cell class named in its
    field name.
    """

    face_to_dual_vertex: dict[int, int]
    closed_boundary_edge_to_dual_open_vertex: dict[int, int]
    interior_edge_to_dual_edge: dict[int, int]
    closed_boundary_vertex_to_dual_open_edge: dict[int, int]
    interior_vertex_to_dual_face: dict[int, int]
    closed_boundary_vertex_to_dual_open_face: dict[int, int]


def _edges_at_vertices(s: Surface) -> list[list[int]]:
    at: list[list[int]] = [[] for _ in range(s.vertex_count)]
    for ei, e in enumerate(s.edges):
        at[e.u].append(ei)
        at[e.v].append(ei)
    return at


def local_dual_cycle(s: Surface, v: int) -> list[tuple[str, int]]:
    """The face cycle F_v (interior vertex) or completed cycle over F_v plus
    the two boundary edges (boundary vertex), as ``("face", i)`` / ``("edge", i)``
    entries in cyclic order.

    For an interior vertex the walk starts at the lowest face index and heads
    toward its lower-indexed neighbor; for a boundary vertex it runs from the
    lower-indexed boundary edge to the other (the closing edge between the two
    boundary-edge entries is implicit in the cyclic reading).
    """
    require_valid(s)
    if not 0 <= v < s.vertex_count:
        raise ValueError(f"vertex index {v} out of range")
    incidence = _edge_faces(s)
    edges_at = [ei for ei, e in enumerate(s.edges) if v in (e.u, e.v)]
    boundary_here = sorted(ei for ei in edges_at if len(incidence[ei]) == 1)

    # Each face at v touches v through exactly two of its edges; record them.
    face_slots: dict[int, list[int]] = {}
    for ei in edges_at:
        for fi in incidence[ei]:
            face_slots.setdefault(fi, []).append(ei)

    if not boundary_here:
        start = min(face_slots)
        first_steps = []
        for ei in face_slots[start]:
            f1, f2 = incidence[ei]
            first_steps.append((f1 if f2 == start else f2, ei))
        nxt, via = min(first_steps)
        order = [start, nxt]
        prev_edge = via
        while len(order) < len(face_slots):
            cur = order[-1]
            (out_edge,) = [ei for ei in face_slots[cur] if ei != prev_edge]
            f1, f2 = incidence[out_edge]
            order.append(f1 if f2 == cur else f2)
            prev_edge = out_edge
        return [("face", fi) for fi in order]

    e_a, e_b = boundary_here
    (cur,) = incidence[e_a]
    out: list[tuple[str, int]] = [("edge", e_a), ("face", cur)]
    prev_edge = e_a
    while True:
        (out_edge,) = [ei for ei in face_slots[cur] if ei != prev_edge]
        if len(incidence[out_edge]) == 1:
            out.append(("edge", out_edge))
            return out
        f1, f2 = incidence[out_edge]
        cur = f1 if f2 == cur else f2
        out.append(("face", cur))
        prev_edge = out_edge


def dualize(s: Surface) -> tuple[Surface, DualCorrespondence]:
    """Construct the dual surface and the cell-class correspondence maps.

    Requires ``s`` to validate with both strict flags; the returned dual is
    canonicalized (so its JSON form is stable) and is itself strictly valid.

    Raises:
        InvalidSurfaceError: if ``s`` fails strict validation, or if the dual
            would contain a loop or parallel edge (a girth violation upstream).
        ModelingError: if the constructed dual fails its own validation —
            impossible on strictly valid input.
    """
    require_valid(s, STRICT_ALL)
    cls = _classify_unchecked(s)
    incidence = _edge_faces(s)
    edges_at = _edges_at_vertices(s)

    n_faces = len(s.faces)
    closed_edges = sorted(cls.closed_edges)
    dual_vertex_of_edge = {e: n_faces + i for i, e in enumerate(closed_edges)}
    dual_vertex_count = n_faces + len(closed_edges)

    closed_vertices = sorted(cls.closed_vertices)
    interior_edges = sorted(cls.interior_edges)

    raw_edges: list[Edge] = []
    dual_edge_of_edge: dict[int, int] = {}
    for ei in interior_edges:
        fs = incidence[ei]
        if len(fs) == 2:
            a, b = fs
        else:
            (a,) = fs
            b_vertex = dual_vertex_of_edge[ei]
            a, b = a, b_vertex
        dual_edge_of_edge[ei] = len(raw_edges)
        raw_edges.append(Edge(min(a, b), max(a, b), False))

    dual_edge_of_vertex: dict[int, int] = {}
    for v in closed_vertices:
        pair = sorted(ei for ei in edges_at[v] if len(incidence[ei]) == 1)
        a, b = (dual_vertex_of_edge[pair[0]], dual_vertex_of_edge[pair[1]])
        dual_edge_of_vertex[v] = len(raw_edges)
        raw_edges.append(Edge(min(a, b), max(a, b), True))

    seen_pairs: dict[tuple[int, int], int] = {}
    for de in raw_edges:
        if de.u == de.v:
            raise InvalidSurfaceError(
                "dual would contain a loop edge (primal girth violation)"
            )
        key = (de.u, de.v)
        if key in seen_pairs:
            raise InvalidSurfaceError(
                "dual would contain parallel edges (primal girth violation)"
            )
        seen_pairs[key] = 1

    nonboundary = [
        v
        for v in range(s.vertex_count)
        if v not in cls.boundary_vertices
    ]
    raw_faces: list[tuple[int, ...]] = []
    dual_face_of_vertex: dict[int, int] = {}
    for v in nonboundary:
        dual_face_of_vertex[v] = len(raw_faces)
        raw_faces.append(tuple(dual_edge_of_edge[ei] for ei in sorted(edges_at[v])))
    dual_open_face_of_vertex: dict[int, int] = {}
    for v in closed_vertices:
        dual_open_face_of_vertex[v] = len(raw_faces)
        raw_faces.append(
            tuple(dual_edge_of_edge[ei] for ei in sorted(edges_at[v]))
            + (dual_edge_of_vertex[v],)
        )

    coords = None
    if s.coords is not None:
        face_centroids = []
        for face in s.faces:
            verts = sorted({w for ei in face for w in s.edges[ei].endpoints()})
            xs = [s.coords[w][0] for w in verts]
            ys = [s.coords[w][1] for w in verts]
            face_centroids.append((sum(xs) / len(xs), sum(ys) / len(ys)))
        edge_mids = []
        for ei in closed_edges:
            e = s.edges[ei]
            edge_mids.append(
                (
                    (s.coords[e.u][0] + s.coords[e.v][0]) / 2,
                    (s.coords[e.u][1] + s.coords[e.v][1]) / 2,
                )
            )
        coords = tuple(face_centroids + edge_mids)

    raw = Surface(dual_vertex_count, tuple(raw_edges), tuple(raw_faces), coords)
    dual, edge_map, face_map = canonicalize(raw)

    report = validate(dual, STRICT_ALL)
    if not report.ok:
        raise ModelingError(f"constructed dual fails validation:\n{report}")

    corr = DualCorrespondence(
        face_to_dual_vertex={f: f for f in range(n_faces)},
        closed_boundary_edge_to_dual_open_vertex=dict(
            sorted(dual_vertex_of_edge.items())
        ),
        interior_edge_to_dual_edge={
            ei: edge_map[raw_idx] for ei, raw_idx in sorted(dual_edge_of_edge.items())
        },
        closed_boundary_vertex_to_dual_open_edge={
            v: edge_map[raw_idx] for v, raw_idx in sorted(dual_edge_of_vertex.items())
        },
        interior_vertex_to_dual_face={
            v: face_map[raw_idx] for v, raw_idx in sorted(dual_face_of_vertex.items())
        },
        closed_boundary_vertex_to_dual_open_face={
            v: face_map[raw_idx]
            for v, raw_idx in sorted(dual_open_face_of_vertex.items())
        },
    )
    return dual, corr


def check_correspondences(
    s: Surface, d: Surface, c: DualCorrespondence
) -> ValidationReport:
    """Verify the six cardinality identities between ``s`` and its dual ``d``
    and that each correspondence map is a bijection onto its stated cell class.

    Returns an empty report iff everything holds.
    """
    out: list[Violation] = []
    pc = _classify_unchecked(s)
    dc = _classify_unchecked(d)
    nonboundary_primal = frozenset(range(s.vertex_count)) - pc.boundary_vertices
    dual_nonopen_vertices = frozenset(range(d.vertex_count)) - dc.open_vertices
    dual_all_faces = frozenset(range(len(d.faces)))
    dual_open_faces_set = dual_all_faces - dc.interior_faces

    identities = [
        (
            "face-count-vs-dual-interior-vertices",
            len(s.faces),
            len(dual_nonopen_vertices),
        ),
        (
            "closed-edges-vs-dual-open-vertices",
            len(pc.closed_edges),
            len(dc.open_vertices),
        ),
        (
            "interior-edges-vs-dual-interior-edges",
            len(pc.interior_edges),
            len(dc.interior_edges),
        ),
        (
            "closed-vertices-vs-dual-open-edges",
            len(pc.closed_vertices),
            len(dc.open_edges),
        ),
        (
            "nonboundary-vertices-vs-dual-interior-faces",
            len(nonboundary_primal),
            len(dc.interior_faces),
        ),
        (
            "closed-vertices-vs-dual-open-faces",
            len(pc.closed_vertices),
            len(dual_open_faces_set),
        ),
    ]
    for code, lhs, rhs in identities:
        if lhs != rhs:
            out.append(Violation(code, (), f"{lhs} != {rhs}"))

    maps = [
        (
            "face_to_dual_vertex",
            c.face_to_dual_vertex,
            frozenset(range(len(s.faces))),
            dual_nonopen_vertices,
        ),
        (
            "closed_boundary_edge_to_dual_open_vertex",
            c.closed_boundary_edge_to_dual_open_vertex,
            pc.closed_edges,
            dc.open_vertices,
        ),
        (
            "interior_edge_to_dual_edge",
            c.interior_edge_to_dual_edge,
            pc.interior_edges,
            dc.interior_edges,
        ),
        (
            "closed_boundary_vertex_to_dual_open_edge",
            c.closed_boundary_vertex_to_dual_open_edge,
            pc.closed_vertices,
            dc.open_edges,
        ),
        (
            "interior_vertex_to_dual_face",
            c.interior_vertex_to_dual_face,
            nonboundary_primal,
            dc.interior_faces,
        ),
        (
            "closed_boundary_vertex_to_dual_open_face",
            c.closed_boundary_vertex_to_dual_open_face,
            pc.closed_vertices,
            dual_open_faces_set,
        ),
    ]
    for name, mapping, domain, codomain in maps:
        if frozenset(mapping.keys()) != domain:
            out.append(
                Violation(
                    f"map-domain-{name}", (), f"keys do not match the primal cell class"
                )
            )
        values = list(mapping.values())
        if len(set(values)) != len(values) or frozenset(values) != codomain:
            out.append(
                Violation(
                    f"map-range-{name}",
                    (),
                    f"values are not a bijection onto the dual cell class",
                )
            )
    return ValidationReport(tuple(out))
