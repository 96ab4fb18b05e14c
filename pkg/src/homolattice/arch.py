"""Lattice and hole-architecture generators, closed-form parameter
predictions, and overhead comparison.

Three qubit-per-hole architectures share the comparison interface:

* ``square-hole``: plain square lattice with a grid of t-by-t closed holes
  (margins and gaps of 4t-1 faces), one qubit per hole, distance 4t;
* ``diamond-hole``: rotated lattice punctured by radius-t balls of faces
  (distance t in the face-adjacency metric), fully closed, distance 4(2t-1);
* ``mixed-diamond-hole``: the same radius-t balls with two opposite sides of
  each rim declared open (alternating orientation on a checkerboard),
  3*h*h2 - 1 qubits total, target distance 2t.

All generators emit canonicalized, strictly valid surfaces with drawing
coordinates.  Closed forms are always reported alongside computed values with
match flags rather than being trusted.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, replace
from fractions import Fraction

from .code import distance_x, distance_z, logical_count
from .errors import HomolatticeError, ModelingError, OutOfDomainError, OverheadError
from .surface import STRICT_ALL, Surface, _classify_unchecked, canonicalize, require_valid

__all__ = [
    "FAMILIES",
    "ArchSpec",
    "ArchReport",
    "gen_plain_square",
    "gen_rotated_square",
    "gen_torus",
    "gen_square_hole",
    "gen_diamond_hole",
    "gen_mixed_diamond_hole",
    "square_hole_lattice_size",
    "diamond_hole_lattice_size",
    "mixed_diamond_pitch",
    "mixed_diamond_margin",
    "mixed_diamond_side_length",
    "mixed_diamond_lattice_size",
    "family_formulas",
    "overhead",
    "generate",
    "evaluate",
    "compare_table",
    "reports_to_csv",
    "report_to_json_dict",
]

FAMILIES = (
    "plain-square",
    "rotated-square",
    "torus",
    "square-hole",
    "diamond-hole",
    "mixed-diamond-hole",
)

_HOLE_FAMILIES = ("square-hole", "diamond-hole", "mixed-diamond-hole")


@dataclass(frozen=True)
class ArchSpec:
    """A buildable architecture: a family name plus its parameters.

    Hole families use ``h`` (holes per row), ``h2`` (per column, default
    ``h``) and ``t`` (hole size).  Direct lattices use ``L`` and ``L2``
    (default ``L``); the torus takes ``L`` only.
    """

    family: str
    h: int | None = None
    h2: int | None = None
    t: int | None = None
    L: int | None = None
    L2: int | None = None

    def resolved(self) -> ArchSpec:
        """Fill defaulted parameters and check domain constraints."""
        if self.family not in FAMILIES:
            raise OutOfDomainError(f"unknown family {self.family!r}")
        if self.family in _HOLE_FAMILIES:
            h, t = self.h, self.t
            h2 = self.h2 if self.h2 is not None else h
            if h is None or t is None:
                raise OutOfDomainError(f"{self.family} needs h and t")
            if h < 1 or h2 < 1 or t < 1:
                raise OutOfDomainError("h, h2, t must all be >= 1")
            return replace(self, h=h, h2=h2, t=t, L=None, L2=None)
        if self.family == "torus":
            if self.L is None:
                raise OutOfDomainError("torus needs L")
            if self.L < 3:
                raise OutOfDomainError(
                    "torus needs L >= 3: smaller periods create parallel edges"
                )
            return replace(self, h=None, h2=None, t=None, L=self.L, L2=None)
        L = self.L
        L2 = self.L2 if self.L2 is not None else L
        if L is None:
            raise OutOfDomainError(f"{self.family} needs L")
        if L < 1 or L2 < 1:
            raise OutOfDomainError("L, L2 must be >= 1")
        return replace(self, h=None, h2=None, t=None, L=L, L2=L2)


# ---------------------------------------------------------------------------
# Plain lattices.


def _plain_cells(L: int, L2: int):
    """Vertex grid, edge list, and face-grid edge quadruples of the plain
    square patch (L rows by L2 columns of faces)."""

    def vid(i: int, j: int) -> int:
        return i * (L2 + 1) + j

    edges: list[tuple[int, int]] = []
    eidx: dict[tuple[int, int, str], int] = {}
    for i in range(L + 1):
        for j in range(L2 + 1):
            if j < L2:
                eidx[(i, j, "h")] = len(edges)
                edges.append((vid(i, j), vid(i, j + 1)))
            if i < L:
                eidx[(i, j, "v")] = len(edges)
                edges.append((vid(i, j), vid(i + 1, j)))
    faces: dict[tuple[int, int], tuple[int, int, int, int]] = {}
    for i in range(L):
        for j in range(L2):
            faces[(i, j)] = (
                eidx[(i, j, "h")],
                eidx[(i, j, "v")],
                eidx[(i, j + 1, "v")],
                eidx[(i + 1, j, "h")],
            )
    coords = [(float(j), float(i)) for i in range(L + 1) for j in range(L2 + 1)]
    return edges, faces, coords


def gen_plain_square(L: int, L2: int) -> Surface:
    """Square patch of L x L2 faces with a fully closed outer boundary."""
    if L < 1 or L2 < 1:
        raise OutOfDomainError("L, L2 must be >= 1")
    edges, faces, coords = _plain_cells(L, L2)
    s = Surface.build(
        (L + 1) * (L2 + 1),
        [(u, v, False) for (u, v) in edges],
        list(faces.values()),
        coords,
    )
    s, _, _ = canonicalize(s)
    require_valid(s, STRICT_ALL)
    return s


def gen_torus(L: int) -> Surface:
    """Periodic L x L square lattice (closed surface, no boundary)."""
    if L < 3:
        raise OutOfDomainError(
            "torus needs L >= 3: smaller periods create parallel edges"
        )
    edges: list[tuple[int, int]] = []
    eidx: dict[tuple[int, int, str], int] = {}
    for i in range(L):
        for j in range(L):
            a = i * L + j
            eidx[(i, j, "h")] = len(edges)
            edges.append((a, i * L + (j + 1) % L))
            eidx[(i, j, "v")] = len(edges)
            edges.append((a, ((i + 1) % L) * L + j))
    faces = []
    for i in range(L):
        for j in range(L):
            faces.append(
                (
                    eidx[(i, j, "h")],
                    eidx[(i, j, "v")],
                    eidx[(i, (j + 1) % L, "v")],
                    eidx[((i + 1) % L, j, "h")],
                )
            )
    coords = [(float(j), float(i)) for i in range(L) for j in range(L)]
    s = Surface.build(L * L, [(u, v, False) for (u, v) in edges], faces, coords)
    s, _, _ = canonicalize(s)
    require_valid(s, STRICT_ALL)
    return s


# ---------------------------------------------------------------------------
# Rotated lattices.  Cells live on the integer grid [0, 2L] x [0, 2L2]:
# vertices at odd-coordinate-sum points, diamond faces centered at
# even-sum points of [1, 2L-1] x [1, 2L2-1] with corners one step away.
# Two faces are adjacent iff their centers differ by (+-1, +-1); the graph
# distance between face centers is the Chebyshev distance of their (i, j)
# coordinates.


def _rotated_cells(L: int, L2: int):
    vid: dict[tuple[int, int], int] = {}
    coords: list[tuple[float, float]] = []
    for i in range(2 * L + 1):
        for j in range(2 * L2 + 1):
            if (i + j) % 2 == 1:
                vid[(i, j)] = len(coords)
                coords.append((float(j), float(i)))
    edges: list[tuple[int, int]] = []
    epos: dict[tuple[int, int], int] = {}
    faces: dict[tuple[int, int], tuple[int, ...]] = {}
    for ci in range(1, 2 * L):
        for cj in range(1, 2 * L2):
            if (ci + cj) % 2 != 0:
                continue
            corners = [(ci + 1, cj), (ci, cj + 1), (ci - 1, cj), (ci, cj - 1)]
            face_edges = []
            for idx in range(4):
                a = vid[corners[idx]]
                b = vid[corners[(idx + 1) % 4]]
                key = (min(a, b), max(a, b))
                if key not in epos:
                    epos[key] = len(edges)
                    edges.append(key)
                face_edges.append(epos[key])
            faces[(ci, cj)] = tuple(face_edges)
    return vid, edges, faces, coords


def gen_rotated_square(L: int, L2: int) -> Surface:
    """45-degree rotated square patch: 2*L*L2 + L + L2 vertices, 4*L*L2
    edges, 2*L*L2 - L - L2 + 1 faces, fully closed."""
    if L < 1 or L2 < 1:
        raise OutOfDomainError("L, L2 must be >= 1")
    _, edges, faces, coords = _rotated_cells(L, L2)
    s = Surface.build(
        len(coords),
        [(u, v, False) for (u, v) in edges],
        list(faces.values()),
        coords,
    )
    s, _, _ = canonicalize(s)
    require_valid(s, STRICT_ALL)
    return s


# ---------------------------------------------------------------------------
# Hole families.


def _punch(
    vertex_count: int,
    edges: list[tuple[int, int]],
    faces: dict,
    coords: list[tuple[float, float]],
    dropped: set,
    open_edges: set[int] = frozenset(),
) -> Surface:
    """Remove the ``dropped`` faces, then edges left faceless, then vertices
    left edgeless; reindex densely and mark ``open_edges`` (old indices)."""
    kept_faces = [f for key, f in faces.items() if key not in dropped]
    edge_used = [0] * len(edges)
    for f in kept_faces:
        for ei in f:
            edge_used[ei] += 1
    kept_edge_ids = [ei for ei, cnt in enumerate(edge_used) if cnt > 0]
    new_edge_id = {ei: i for i, ei in enumerate(kept_edge_ids)}
    used_vertices = sorted(
        {w for ei in kept_edge_ids for w in edges[ei]}
    )
    new_vertex_id = {v: i for i, v in enumerate(used_vertices)}
    new_edges = [
        (
            new_vertex_id[edges[ei][0]],
            new_vertex_id[edges[ei][1]],
            ei in open_edges,
        )
        for ei in kept_edge_ids
    ]
    new_faces = [tuple(new_edge_id[ei] for ei in f) for f in kept_faces]
    new_coords = [coords[v] for v in used_vertices]
    s = Surface.build(len(used_vertices), new_edges, new_faces, new_coords)
    s, _, _ = canonicalize(s)
    require_valid(s, STRICT_ALL)
    return s


def square_hole_lattice_size(h: int, t: int) -> int:
    """Plain-lattice side with h holes per row: margins and gaps of 4t-1
    faces around t-by-t holes."""
    return h * (5 * t - 1) + (4 * t - 1)


def gen_square_hole(h: int, h2: int, t: int) -> Surface:
    """Plain square lattice punctured by an h x h2 grid of t x t closed
    holes; one qubit per hole, distance 4t on both sides."""
    if h < 1 or h2 < 1 or t < 1:
        raise OutOfDomainError("h, h2, t must all be >= 1")
    L = square_hole_lattice_size(h, t)
    L2 = square_hole_lattice_size(h2, t)
    edges, faces, coords = _plain_cells(L, L2)
    starts_i = [(4 * t - 1) + a * (5 * t - 1) for a in range(h)]
    starts_j = [(4 * t - 1) + b * (5 * t - 1) for b in range(h2)]
    dropped = {
        (i, j)
        for ai in starts_i
        for bj in starts_j
        for i in range(ai, ai + t)
        for j in range(bj, bj + t)
    }
    return _punch((L + 1) * (L2 + 1), edges, faces, coords, dropped)


def diamond_hole_lattice_size(h: int, t: int) -> int:
    """Rotated-lattice side for h radius-t holes per row with hole centers
    10t-4 apart and 9t-4 from the boundary (both exactly saturating the
    4(2t-1) dual-path distance)."""
    return h * (5 * t - 2) + (4 * t - 2)


def _diamond_centers(count: int, t: int, spacing: int, margin: int) -> list[int]:
    return [margin + a * spacing for a in range(count)]


def gen_diamond_hole(h: int, h2: int, t: int) -> Surface:
    """Rotated lattice punctured by an h x h2 grid of radius-t face balls
    (2t^2+2t+1 faces each), fully closed; one qubit per hole, distance
    4(2t-1)."""
    if h < 1 or h2 < 1 or t < 1:
        raise OutOfDomainError("h, h2, t must all be >= 1")
    L = diamond_hole_lattice_size(h, t)
    L2 = diamond_hole_lattice_size(h2, t)
    _, edges, faces, coords = _rotated_cells(L, L2)
    centers_i = _diamond_centers(h, t, 10 * t - 4, 9 * t - 4)
    centers_j = _diamond_centers(h2, t, 10 * t - 4, 9 * t - 4)
    dropped = {
        (ci, cj)
        for ci, cj in faces
        if any(
            max(abs(ci - ai), abs(cj - bj)) <= t
            for ai in centers_i
            for bj in centers_j
        )
    }
    return _punch(len(coords), edges, faces, coords, dropped)


def mixed_diamond_pitch(t: int) -> int:
    """Hole-center spacing for the mixed family: 4t, except that radius-1
    hole rims would touch at that pitch, so t = 1 uses 6."""
    return max(4 * t, 2 * t + 4)


def mixed_diamond_margin(t: int) -> int:
    """Center-to-boundary distance for the mixed family: 3t (giving hole-to-
    boundary X-paths of exactly 2t), except that rim vertices reach Chebyshev
    distance t+1 from the center and would land on the lattice boundary at
    t = 1, so the margin is never below t+3."""
    return max(3 * t, t + 3)


def mixed_diamond_side_length(t: int) -> int:
    """Open edges per hole side: the two axis-facing straight sides of a
    radius-t rim hold 2t edges each and are opened with one edge trimmed off
    both ends, except at t = 1 where trimming would leave nothing open (and
    drop the per-hole qubit count), so the full 2-edge sides open."""
    return 2 * t - 2 if t >= 2 else 2


def mixed_diamond_lattice_size(h: int, t: int) -> int:
    """Rotated-lattice side for the mixed family: margins around centers
    spaced by the pitch."""
    return mixed_diamond_margin(t) + (h - 1) * mixed_diamond_pitch(t) // 2


def gen_mixed_diamond_hole(h: int, h2: int, t: int) -> Surface:
    """Radius-t diamond holes with two opposite sides opened per hole.

    Each rim has four straight sides facing the four grid directions; the two
    sides along one axis are declared open (2t-2 edges each for t >= 2, the
    whole 2-edge sides at t = 1), the rest of the rim stays closed.  The open
    axis alternates on a hole checkerboard, so adjacent holes face each other
    with one open and one closed side.  Encodes 3*h*h2 - 1 qubits with target
    distance 2t.
    """
    if h < 1 or h2 < 1 or t < 1:
        raise OutOfDomainError("h, h2, t must all be >= 1")
    L = mixed_diamond_lattice_size(h, t)
    L2 = mixed_diamond_lattice_size(h2, t)
    vid, edges, faces, coords = _rotated_cells(L, L2)
    vertex_ij = {idx: ij for ij, idx in vid.items()}
    pitch = mixed_diamond_pitch(t)
    margin = mixed_diamond_margin(t)
    centers_i = _diamond_centers(h, t, pitch, margin)
    centers_j = _diamond_centers(h2, t, pitch, margin)
    dropped = {
        (ci, cj)
        for ci, cj in faces
        if any(
            max(abs(ci - ai), abs(cj - bj)) <= t
            for ai in centers_i
            for bj in centers_j
        )
    }

    trim = 1 if t >= 2 else 0
    open_ids: set[int] = set()
    for a, ai in enumerate(centers_i):
        for b, bj in enumerate(centers_j):
            open_axis_i = (a + b) % 2 == 0
            for sign in (1, -1):
                side: list[tuple[float, int]] = []
                for ei, (eu, ev) in enumerate(edges):
                    (iu, ju), (iv, jv) = vertex_ij[eu], vertex_ij[ev]
                    if open_axis_i:
                        along, off_u, off_v = (ju + jv) / 2.0, iu - ai, iv - ai
                        cross_ok = abs(ju - bj) <= t and abs(jv - bj) <= t
                    else:
                        along, off_u, off_v = (iu + iv) / 2.0, ju - bj, jv - bj
                        cross_ok = abs(iu - ai) <= t and abs(iv - ai) <= t
                    if cross_ok and {sign * off_u, sign * off_v} == {t, t + 1}:
                        side.append((along, ei))
                side.sort()
                if len(side) != 2 * t:
                    raise ModelingError(
                        f"hole ({a},{b}) side has {len(side)} edges, expected {2 * t}"
                    )
                for _, ei in side[trim : len(side) - trim]:
                    open_ids.add(ei)

    return _punch(
        len(coords),
        edges,
        faces,
        coords,
        dropped,
        open_edges=open_ids,
    )


# ---------------------------------------------------------------------------
# Formulas, reports, comparison.


def family_formulas(spec: ArchSpec) -> tuple[int, int, int | None]:
    """Closed-form (n, k, d) predictions for a resolved spec; d is None for
    the plain and rotated patches (no encoded qubits)."""
    r = spec.resolved()
    if r.family == "plain-square":
        return 2 * r.L * r.L2 + r.L + r.L2, 0, None
    if r.family == "rotated-square":
        return 4 * r.L * r.L2, 0, None
    if r.family == "torus":
        return 2 * r.L * r.L, 2, r.L
    h, h2, t = r.h, r.h2, r.t
    if r.family == "square-hole":
        L = square_hole_lattice_size(h, t)
        L2 = square_hole_lattice_size(h2, t)
        n = 2 * L * L2 + L + L2 - h * h2 * (2 * t * t - 2 * t)
        return n, h * h2, 4 * t
    if r.family == "diamond-hole":
        L = diamond_hole_lattice_size(h, t)
        L2 = diamond_hole_lattice_size(h2, t)
        return 4 * L * L2 - h * h2 * 4 * t * t, h * h2, 4 * (2 * t - 1)
    L = mixed_diamond_lattice_size(h, t)
    L2 = mixed_diamond_lattice_size(h2, t)
    n = 4 * L * L2 - h * h2 * (4 * t * t + 2 * mixed_diamond_side_length(t))
    return n, 3 * h * h2 - 1, 2 * t


def overhead(n: int, k: int, d: int) -> Fraction:
    """Exact overhead ratio n / (k d^2)."""
    if k <= 0 or d <= 0:
        raise OverheadError(f"overhead undefined for k={k}, d={d}")
    return Fraction(n, k * d * d)


def generate(spec: ArchSpec) -> Surface:
    """Build the surface described by ``spec``."""
    r = spec.resolved()
    if r.family == "plain-square":
        return gen_plain_square(r.L, r.L2)
    if r.family == "rotated-square":
        return gen_rotated_square(r.L, r.L2)
    if r.family == "torus":
        return gen_torus(r.L)
    if r.family == "square-hole":
        return gen_square_hole(r.h, r.h2, r.t)
    if r.family == "diamond-hole":
        return gen_diamond_hole(r.h, r.h2, r.t)
    return gen_mixed_diamond_hole(r.h, r.h2, r.t)


@dataclass(frozen=True)
class ArchReport:
    """Computed parameters of one architecture next to its predictions.

    Distances (and hence ``overhead``) are only present when requested.
    ``error`` carries a per-spec failure in batch comparisons.
    """

    spec: ArchSpec
    n: int | None = None
    k: int | None = None
    d_z: int | None = None
    d_x: int | None = None
    d: int | None = None
    overhead: Fraction | None = None
    formula_n: int | None = None
    formula_k: int | None = None
    formula_d: int | None = None
    match_n: bool | None = None
    match_k: bool | None = None
    match_d: bool | None = None
    error: str | None = None

    @property
    def overhead_decimal(self) -> float | None:
        return None if self.overhead is None else float(self.overhead)

    @property
    def match(self) -> bool:
        if self.error is not None:
            return False
        flags = [f for f in (self.match_n, self.match_k, self.match_d) if f is not None]
        return all(flags)


def evaluate(
    spec: ArchSpec,
    compute_distance: bool = False,
    *,
    method: str = "exact",
    budget: int | None = None,
) -> ArchReport:
    """Generate, measure, and compare one architecture against its formulas.

    For the mixed-diamond family a computed distance below 2t means the
    generated layout is faulty and raises :class:`ModelingError` rather than
    being reported as a mere mismatch.  (A distance above the target is
    possible -- t = 1 holes cannot trim their open sides, which widens the
    shortest open-to-open paths to 3 -- and is reported through the ordinary
    match flag.)
    """
    r = spec.resolved()
    s = generate(r)
    formula_n, formula_k, formula_d = family_formulas(r)
    n = len(_classify_unchecked(s).interior_edges)
    k = logical_count(s)
    d_z = d_x = d = None
    ratio = None
    if compute_distance and k > 0:
        d_z = distance_z(s, method, budget=budget).d
        d_x = distance_x(s, method, budget=budget).d
        d = min(d_z, d_x)
        ratio = overhead(n, k, d)
        if r.family == "mixed-diamond-hole" and d < 2 * r.t:
            raise ModelingError(
                f"mixed-diamond layout {r} is faulty: certified distance {d} "
                f"< target {2 * r.t}"
            )
    return ArchReport(
        spec=r,
        n=n,
        k=k,
        d_z=d_z,
        d_x=d_x,
        d=d,
        overhead=ratio,
        formula_n=formula_n,
        formula_k=formula_k,
        formula_d=formula_d,
        match_n=n == formula_n,
        match_k=k == formula_k,
        match_d=None if d is None or formula_d is None else d == formula_d,
    )


def compare_table(
    specs: list[ArchSpec],
    compute_distance: bool = False,
    *,
    method: str = "exact",
    budget: int | None = None,
) -> list[ArchReport]:
    """Evaluate each spec; per-spec failures become error rows, preserving
    batch order."""
    out = []
    for spec in specs:
        try:
            out.append(
                evaluate(spec, compute_distance, method=method, budget=budget)
            )
        except HomolatticeError as exc:
            out.append(ArchReport(spec=spec, error=str(exc)))
    return out


_CSV_COLUMNS = [
    "family",
    "h",
    "h2",
    "t",
    "n",
    "k",
    "dz",
    "dx",
    "d",
    "overhead",
    "formula_n",
    "formula_k",
    "formula_d",
    "match",
]


def _cell(value) -> str:
    return "" if value is None else str(value)


def reports_to_csv(reports: list[ArchReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(_CSV_COLUMNS)
    for r in reports:
        ov = "" if r.overhead is None else f"{float(r.overhead):.6g}"
        match = "error" if r.error is not None else ("yes" if r.match else "no")
        writer.writerow(
            [
                r.spec.family,
                _cell(r.spec.h),
                _cell(r.spec.h2),
                _cell(r.spec.t),
                _cell(r.n),
                _cell(r.k),
                _cell(r.d_z),
                _cell(r.d_x),
                _cell(r.d),
                ov,
                _cell(r.formula_n),
                _cell(r.formula_k),
                _cell(r.formula_d),
                match,
            ]
        )
    return buf.getvalue()


def report_to_json_dict(r: ArchReport) -> dict:
    return {
        "family": r.spec.family,
        "h": r.spec.h,
        "h2": r.spec.h2,
        "t": r.spec.t,
        "L": r.spec.L,
        "L2": r.spec.L2,
        "n": r.n,
        "k": r.k,
        "d_z": r.d_z,
        "d_x": r.d_x,
        "d": r.d,
        "overhead": None
        if r.overhead is None
        else {
            "numerator": r.overhead.numerator,
            "denominator": r.overhead.denominator,
            "decimal": float(r.overhead),
        },
        "formula_n": r.formula_n,
        "formula_k": r.formula_k,
        "formula_d": r.formula_d,
        "match_n": r.match_n,
        "match_k": r.match_k,
        "match_d": r.match_d,
        "match": r.match,
        "error": r.error,
    }
