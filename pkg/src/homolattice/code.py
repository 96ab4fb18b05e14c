"""CSS codes on combinatorial surfaces: stabilizers, parameters, distances,
and symplectic logical bases.

Qubits sit on the non-open edges.  X stabilizers are the non-open vertex
stars, Z stabilizers the non-open parts of face boundaries; commutation is
the statement d1 @ d2 = 0.  The logical count is dim H1 of the relative
complex; Z distances are minimum weights of non-trivial relative cycles of
the surface and X distances the same on its dual.

The exact distance method works in a signature cover: pick functionals
u_1..u_m (a basis of ker d2^T modulo the row space of d1, m = dim H1) that
vanish on trivial cycles, give every qubit edge the signature (u_i at e)_i
in F2^m, and run breadth-first searches over (vertex, accumulated signature)
states.  Open vertices are merged into one virtual terminal, so shortest
open-to-open paths and shortest closed walks with non-zero signature are both
found; the minimum over the two is the distance, and the accumulated edge set
is a certified witness.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass

from .dual import DualCorrespondence, dualize
from .errors import (
    BudgetError,
    ModelingError,
    NoLogicalsError,
    OutOfDomainError,
    UnsupportedTopologyError,
)
from .f2 import BinaryMatrix, BitVector, DegeneratePairingError, in_span, kernel_basis, rank, symplectic_pairing
from .homology import ChainComplex, _build_unchecked, boundary_maps, h1_dim
from .surface import (
    STRICT_ALL,
    Surface,
    _classify_unchecked,
    _edge_faces,
    require_valid,
)

__all__ = [
    "CssCode",
    "LogicalBasis",
    "DistanceResult",
    "Exhausted",
    "DEFAULT_COVER_BUDGET",
    "BUDGET_ENV_VAR",
    "build_css",
    "logical_count",
    "k_uniform",
    "k_mixed",
    "distance_z",
    "distance_x",
    "distance_bruteforce_oracle",
    "logical_basis_generic",
    "logical_basis_boundary_strategy",
    "verify_logical_basis",
]

DEFAULT_COVER_BUDGET = 1 << 16
BUDGET_ENV_VAR = "HOMOLATTICE_BUDGET"


@dataclass(frozen=True)
class CssCode:
    """Stabilizer data of the surface code on a valid surface.

    ``qubit_edges[i]`` is the surface edge carrying qubit ``i``;
    ``x_vertices[j]`` / ``z_faces[j]`` are the surface cells owning the j-th
    X / Z stabilizer.  Stabilizer vectors are indexed by qubit position.
    """

    n: int
    x_stabilizers: tuple[BitVector, ...]
    z_stabilizers: tuple[BitVector, ...]
    x_vertices: tuple[int, ...]
    z_faces: tuple[int, ...]
    qubit_edges: tuple[int, ...]


@dataclass(frozen=True)
class LogicalBasis:
    """Symplectic pairs (x_logical, z_logical) with <x_i, z_j> = delta_ij."""

    pairs: tuple[tuple[BitVector, BitVector], ...]

    @property
    def k(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class DistanceResult:
    """Minimum weight plus a certified witness.

    ``side`` is ``"primal"`` (Z distance, cycle on the surface) or ``"dual"``
    (X distance, cycle on the dual expressed in qubit coordinates);
    ``method`` is ``"exact-search"`` or ``"brute-force"``.
    """

    d: int
    witness: BitVector
    side: str
    method: str


@dataclass(frozen=True)
class Exhausted:
    """Brute-force enumeration found nothing up to (and including) ``w_max``."""

    w_max: int


def build_css(s: Surface) -> CssCode:
    """Extract the CSS code: X stabilizers from non-open vertices (rows of d1),
    Z stabilizers from all faces (columns of d2)."""
    cx = boundary_maps(s)
    n = len(cx.interior_edges)
    x_stabs = tuple(BitVector(n, bits) for bits in cx.d1.row_bits)
    d2t = cx.d2.transpose()
    z_stabs = tuple(BitVector(n, bits) for bits in d2t.row_bits)
    return CssCode(
        n=n,
        x_stabilizers=x_stabs,
        z_stabilizers=z_stabs,
        x_vertices=cx.interior_vertices,
        z_faces=tuple(range(cx.face_count)),
        qubit_edges=cx.interior_edges,
    )


def logical_count(s: Surface) -> int:
    """Number of logical qubits: dim H1, cross-checked against
    n - rank(X stabilizers) - rank(Z stabilizers)."""
    k = h1_dim(s)
    code = build_css(s)
    sx = BinaryMatrix.from_rows((v.bits for v in code.x_stabilizers), code.n)
    sz = BinaryMatrix.from_rows((v.bits for v in code.z_stabilizers), code.n)
    oracle = code.n - rank(sx) - rank(sz)
    if k != oracle:
        raise ModelingError(
            f"h1 dimension ({k}) disagrees with stabilizer rank count ({oracle})"
        )
    return k


def k_uniform(g: int, orientable: bool, b_c: int, b_o: int) -> int:
    """Logical count for genus-g surfaces with uniform holes: ``b_c`` holes
    with fully closed rims and ``b_o`` with fully open rims.

    Returns 2g + max(b_c - 1, 0) + max(b_o - 1, 0) for orientable surfaces
    (g instead of 2g otherwise).  The hole terms use max, not min: each extra
    hole of either kind past the first adds one qubit, and the first hole of
    a kind adds none (see the counting note in the README).
    """
    if g < 0 or b_c < 0 or b_o < 0:
        raise OutOfDomainError("genus and hole counts must be non-negative")
    handle = 2 * g if orientable else g
    return handle + max(b_c - 1, 0) + max(b_o - 1, 0)


def k_mixed(g: int, orientable: bool, b: int, m: int) -> int:
    """Logical count for genus-g surfaces with ``b`` holes whose rims are
    split by ``m > 1`` disjoint open paths in total.

    Returns 2g + b + m - 2 (orientable) or g + b + m - 2.
    """
    if g < 0 or b < 0:
        raise OutOfDomainError("genus and hole count must be non-negative")
    if m <= 1:
        raise OutOfDomainError(
            "the mixed-hole count formula needs m > 1 open paths; "
            "use logical_count on the concrete surface instead"
        )
    handle = 2 * g if orientable else g
    return handle + b + m - 2


# ---------------------------------------------------------------------------
# Shared F2 reduction helpers (pivot dict keyed by lowest set bit).


def _reduce_mod(x: int, pivots: dict[int, int]) -> int:
    while x:
        b = (x & -x).bit_length() - 1
        if b not in pivots:
            return x
        x ^= pivots[b]
    return 0


def _insert_pivot(x: int, pivots: dict[int, int]) -> int:
    """Reduce ``x`` and, if non-zero, add it to the pivot structure."""
    r = _reduce_mod(x, pivots)
    if r:
        pivots[(r & -r).bit_length() - 1] = r
    return r


def _homology_functionals(cx: ChainComplex) -> list[int]:
    """Bitmasks u_1..u_m over qubit positions: a basis of ker(d2^T) modulo
    the row space of d1.  Every u_i vanishes on trivial cycles, and together
    they separate all dim-H1 homology classes."""
    pivots: dict[int, int] = {}
    for row in cx.d1.row_bits:
        _insert_pivot(row, pivots)
    out: list[int] = []
    for u in kernel_basis(cx.d2.transpose()):
        r = _insert_pivot(u.bits, pivots)
        if r:
            out.append(r)
    expected = (cx.d1.cols - rank(cx.d1)) - rank(cx.d2)
    if len(out) != expected:
        raise ModelingError(
            f"functional basis has {len(out)} elements, expected {expected}"
        )
    return out


def _homology_representatives(cx: ChainComplex) -> list[BitVector]:
    """Independent non-trivial relative cycles, one per homology class:
    kernel basis of d1 reduced modulo the column span of d2."""
    n = cx.d1.cols
    pivots: dict[int, int] = {}
    for row in cx.d2.transpose().row_bits:
        _insert_pivot(row, pivots)
    out: list[BitVector] = []
    for z in kernel_basis(cx.d1):
        r = _insert_pivot(z.bits, pivots)
        if r:
            out.append(BitVector(n, r))
    return out


# ---------------------------------------------------------------------------
# Distance.


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from exc
    return DEFAULT_COVER_BUDGET


def _certify_witness(cx: ChainComplex, witness: BitVector, d: int, side: str) -> None:
    if witness.weight != d:
        raise ModelingError(
            f"{side} witness weight {witness.weight} does not match distance {d}"
        )
    if cx.d1.matvec(witness):
        raise ModelingError(f"{side} witness is not a relative cycle")
    if in_span(cx.d2.transpose(), witness):
        raise ModelingError(f"{side} witness is homologically trivial")


def _exact_min_cycle(s: Surface, cx: ChainComplex, budget: int | None) -> tuple[int, BitVector]:
    """Minimum weight and witness over non-trivial relative cycles of ``s``.

    Searches the signature cover: states (node, sig) where node ranges over
    the non-open vertices plus one virtual terminal standing for every open
    vertex, and sig accumulates functional values along walked edges.  A walk
    returning to its base node with non-zero signature projects to a
    non-trivial relative cycle of no greater weight; conversely every minimum
    witness contains a component traversable as such a walk.  The terminal
    search runs first to seed the bound, then per-vertex searches run with a
    strictly improving depth cutoff.
    """
    funcs = _homology_functionals(cx)
    m = len(funcs)
    if m == 0:
        raise NoLogicalsError("surface encodes no logical qubits (dim H1 = 0)")
    limit = _resolve_budget(budget)
    if 1 << m > limit:
        raise BudgetError(
            f"signature cover needs 2^{m} sheets, over the budget of {limit}; "
            f"use the brute-force method, pass a larger budget, or set "
            f"{BUDGET_ENV_VAR}"
        )

    n = len(cx.interior_edges)
    sigs = [0] * n
    for i, u in enumerate(funcs):
        bits = u
        while bits:
            low = bits & -bits
            sigs[low.bit_length() - 1] |= 1 << i
            bits ^= low

    node_of_vertex: dict[int, int] = dict(cx.vertex_row)
    terminal = len(cx.interior_vertices)
    node_count = terminal + 1
    adj: list[list[tuple[int, int, int]]] = [[] for _ in range(node_count)]
    for pos, ei in enumerate(cx.interior_edges):
        e = s.edges[ei]
        a = node_of_vertex.get(e.u, terminal)
        b = node_of_vertex.get(e.v, terminal)
        adj[a].append((b, pos, sigs[pos]))
        if b != a:
            adj[b].append((a, pos, sigs[pos]))

    sheets = 1 << m
    has_terminal = bool(adj[terminal])

    def bfs(base: int, cutoff: int | None) -> tuple[int, int] | None:
        """Shortest walk base -> base with non-zero signature; returns
        (depth, witness bitmask) or None within the cutoff."""
        start = base * sheets
        parents: dict[int, tuple[int, int]] = {start: (-1, -1)}
        frontier = [start]
        depth = 0
        while frontier:
            if cutoff is not None and depth >= cutoff:
                return None
            depth += 1
            nxt: list[int] = []
            for state in frontier:
                node, sig = divmod(state, sheets)
                for nbr, pos, sg in adj[node]:
                    new_sig = sig ^ sg
                    new_state = nbr * sheets + new_sig
                    if new_state in parents:
                        continue
                    parents[new_state] = (state, pos)
                    if nbr == base and new_sig:
                        bits = 0
                        cur = new_state
                        while cur != start:
                            prev, epos = parents[cur]
                            bits ^= 1 << epos
                            cur = prev
                        return depth, bits
                    nxt.append(new_state)
            frontier = nxt
        return None

    best: tuple[int, int] | None = None
    if has_terminal:
        best = bfs(terminal, None)
    for node in range(terminal):
        cutoff = None if best is None else best[0] - 1
        if cutoff is not None and cutoff <= 0:
            break
        found = bfs(node, cutoff)
        if found is not None and (best is None or found[0] < best[0]):
            best = found
    if best is None:
        raise ModelingError(
            "signature search found no non-trivial cycle despite dim H1 >= 1"
        )
    d, bits = best
    return d, BitVector(n, bits)


def distance_bruteforce_oracle(s: Surface, w_max: int) -> DistanceResult | Exhausted:
    """Enumerate edge subsets by increasing weight; return the first
    non-trivial relative cycle, or :class:`Exhausted` if none has weight
    <= ``w_max``.  Independent of the signature-cover machinery."""
    cx = boundary_maps(s)
    n = len(cx.interior_edges)
    d2t = cx.d2.transpose()
    columns = [cx.d1.column(j).bits for j in range(n)]
    for w in range(1, min(w_max, n) + 1):
        for combo in itertools.combinations(range(n), w):
            syndrome = 0
            bits = 0
            for pos in combo:
                syndrome ^= columns[pos]
                bits |= 1 << pos
            if syndrome:
                continue
            z = BitVector(n, bits)
            if not in_span(d2t, z):
                return DistanceResult(d=w, witness=z, side="primal", method="brute-force")
    return Exhausted(w_max=min(w_max, n))


def distance_z(s: Surface, method: str = "exact", *, budget: int | None = None) -> DistanceResult:
    """Minimum weight of a non-trivial relative cycle of ``s`` (Z distance).

    ``method`` is ``"exact"`` (signature-cover search) or ``"brute"``
    (uncapped subset enumeration; only viable for small surfaces).

    Raises:
        NoLogicalsError: if dim H1 = 0.
        BudgetError: if the cover would exceed the sheet budget
            (default 2^16; override with ``budget=`` or the
            ``HOMOLATTICE_BUDGET`` environment variable).
    """
    if method not in ("exact", "brute"):
        raise ValueError(f"unknown distance method {method!r}")
    cx = boundary_maps(s)
    if method == "brute":
        if h1_dim(s) == 0:
            raise NoLogicalsError("surface encodes no logical qubits (dim H1 = 0)")
        res = distance_bruteforce_oracle(s, len(cx.interior_edges))
        if isinstance(res, Exhausted):  # unreachable with dim H1 >= 1
            raise ModelingError("uncapped brute force exhausted with dim H1 >= 1")
        _certify_witness(cx, res.witness, res.d, "primal")
        return res
    d, witness = _exact_min_cycle(s, cx, budget)
    _certify_witness(cx, witness, d, "primal")
    return DistanceResult(d=d, witness=witness, side="primal", method="exact-search")


def _dual_machinery(
    s: Surface,
) -> tuple[Surface, DualCorrespondence, ChainComplex, list[int]]:
    """Dual surface, correspondence, dual complex, and the qubit permutation
    ``primal_pos_of_dual_pos`` induced by the non-open edge bijection."""
    dual, corr = dualize(s)
    cx = _build_unchecked(s)
    dcx = _build_unchecked(dual)
    if len(cx.interior_edges) != len(dcx.interior_edges):
        raise ModelingError("non-open edge bijection broken: qubit counts differ")
    primal_pos_of_dual_pos = [0] * len(dcx.interior_edges)
    for e, de in corr.interior_edge_to_dual_edge.items():
        primal_pos_of_dual_pos[dcx.edge_index[de]] = cx.edge_index[e]
    return dual, corr, dcx, primal_pos_of_dual_pos


def _map_to_primal(bits_dual: int, primal_pos_of_dual_pos: list[int], n: int) -> BitVector:
    bits = 0
    rest = bits_dual
    while rest:
        low = rest & -rest
        bits |= 1 << primal_pos_of_dual_pos[low.bit_length() - 1]
        rest ^= low
    return BitVector(n, bits)


def distance_x(s: Surface, method: str = "exact", *, budget: int | None = None) -> DistanceResult:
    """Minimum weight of a non-trivial relative cycle of the dual of ``s``
    (X distance), expressed in the qubit coordinates of ``s``.

    Requires ``s`` to be strictly valid (dualizable); otherwise as
    :func:`distance_z`.
    """
    dual, _, dcx, back = _dual_machinery(s)
    res = distance_z(dual, method, budget=budget)
    witness = _map_to_primal(res.witness.bits, back, len(dcx.interior_edges))
    return DistanceResult(d=res.d, witness=witness, side="dual", method=res.method)


# ---------------------------------------------------------------------------
# Logical bases.


def logical_basis_generic(s: Surface) -> LogicalBasis:
    """Symplectic basis from algebraic homology representatives.

    Z logicals are a kernel basis of d1 reduced modulo face boundaries; X
    logicals are the same on the dual, mapped back through the non-open edge
    bijection; :func:`symplectic_pairing` then normalizes the pairing to the
    identity.  k always equals dim H1.
    """
    require_valid(s, STRICT_ALL)
    k = h1_dim(s)
    if k == 0:
        return LogicalBasis(pairs=())
    cx = _build_unchecked(s)
    _, _, dcx, back = _dual_machinery(s)
    z_ops = _homology_representatives(cx)
    x_ops = [
        _map_to_primal(x.bits, back, len(cx.interior_edges))
        for x in _homology_representatives(dcx)
    ]
    if len(z_ops) != k or len(x_ops) != k:
        raise ModelingError(
            f"homology representative counts ({len(z_ops)} Z, {len(x_ops)} X) "
            f"do not match dim H1 = {k}"
        )
    try:
        pairs = symplectic_pairing(z_ops, x_ops)
    except DegeneratePairingError as exc:
        raise ModelingError(f"logical pairing is degenerate: {exc}") from exc
    return LogicalBasis(pairs=tuple(pairs))


def _boundary_holes(s: Surface) -> list[list[int]]:
    """Boundary rims as edge cycles in walk order, one list per hole,
    ordered by smallest member edge index."""
    incidence = _edge_faces(s)
    boundary = [ei for ei, fs in enumerate(incidence) if len(fs) == 1]
    if not boundary:
        return []
    bset = set(boundary)
    at_vertex: dict[int, list[int]] = {}
    for ei in boundary:
        e = s.edges[ei]
        at_vertex.setdefault(e.u, []).append(ei)
        at_vertex.setdefault(e.v, []).append(ei)
    holes: list[list[int]] = []
    unused = set(boundary)
    for seed in boundary:
        if seed not in unused:
            continue
        e = s.edges[seed]
        walk = [seed]
        unused.discard(seed)
        cur_vertex = min(e.u, e.v)
        while True:
            candidates = [x for x in at_vertex[cur_vertex] if x != walk[-1]]
            (nxt,) = [x for x in candidates if x in bset]
            if nxt == seed:
                break
            walk.append(nxt)
            unused.discard(nxt)
            cur_vertex = s.edges[nxt].other(cur_vertex)
        holes.append(walk)
    holes.sort(key=min)
    return holes


def _rim_runs(s: Surface, walk: list[int]) -> list[list[int]]:
    """Maximal runs of consecutive non-open edges in a cyclic rim walk."""
    flags = [s.edges[ei].open for ei in walk]
    if all(flags):
        return []
    if not any(flags):
        return [list(walk)]
    # Rotate so position 0 starts right after an open edge, then group
    # consecutive non-open edges.
    start = next(i for i in range(len(walk)) if flags[i - 1] and not flags[i])
    rotated = walk[start:] + walk[:start]
    runs: list[list[int]] = []
    current: list[int] = []
    for ei in rotated:
        if s.edges[ei].open:
            if current:
                runs.append(current)
                current = []
        else:
            current.append(ei)
    if current:
        runs.append(current)
    return runs


def _bfs_path(
    adjacency: list[list[tuple[int, int]]],
    sources: list[int],
    targets: set[int],
) -> list[int] | None:
    """Deterministic multi-source BFS; returns edge indices of a shortest
    source-to-target path, or None."""
    parents: dict[int, tuple[int, int]] = {}
    queue: deque[int] = deque()
    for v in sorted(sources):
        if v not in parents:
            parents[v] = (-1, -1)
            queue.append(v)
        if v in targets:
            return []
    while queue:
        v = queue.popleft()
        for w, ei in adjacency[v]:
            if w in parents:
                continue
            parents[w] = (v, ei)
            if w in targets:
                path = []
                cur = w
                while parents[cur][0] != -1:
                    prev, eidx = parents[cur]
                    path.append(eidx)
                    cur = prev
                return path[::-1]
            queue.append(w)
    return None


def logical_basis_boundary_strategy(s: Surface) -> LogicalBasis:
    """Geometric symplectic basis for genus-0 surfaces with boundary.

    Z logicals: every maximal non-open rim run but the last (in deterministic
    order) taken as a chain, plus, for every open-rim hole but the last, a
    shortest non-open path connecting it to the last open-rim hole.  X
    logicals: shortest dual paths linking each chosen run's dual terminals to
    the last run's, plus the edge cut around each chosen open hole's rim
    vertex set.  The raw pairing matrix is block-triangular with identity
    blocks, so symplectic normalization always succeeds.

    Raises:
        UnsupportedTopologyError: if the boundary structure does not account
            for all of dim H1 (e.g. positive genus or disconnected input).
    """
    require_valid(s, STRICT_ALL)
    k = h1_dim(s)
    holes = _boundary_holes(s)
    runs: list[list[int]] = []
    for walk in holes:
        runs.extend(_rim_runs(s, walk))
    runs.sort(key=min)
    open_holes = [
        walk for walk in holes if any(s.edges[ei].open for ei in walk)
    ]
    lc = len(runs)
    bo = len(open_holes)
    expected = (lc - 1 if lc >= 1 else 0) + (bo - 1 if bo >= 1 else 0)
    if expected != k:
        raise UnsupportedTopologyError(
            f"boundary structure explains {expected} logical qubits but "
            f"dim H1 = {k}; the strategy covers connected genus-0 surfaces only"
        )
    if k == 0:
        return LogicalBasis(pairs=())

    cx = _build_unchecked(s)
    n = len(cx.interior_edges)
    dual, corr, dcx, back = _dual_machinery(s)

    z_ops: list[BitVector] = []
    x_ops: list[BitVector] = []

    if lc >= 1:
        dual_adj: list[list[tuple[int, int]]] = [[] for _ in range(dual.vertex_count)]
        dclass = _classify_unchecked(dual)
        for dei in sorted(dclass.interior_edges):
            de = dual.edges[dei]
            dual_adj[de.u].append((de.v, dei))
            dual_adj[de.v].append((de.u, dei))
        run_terminals = [
            [corr.closed_boundary_edge_to_dual_open_vertex[ei] for ei in run]
            for run in runs
        ]
        last_terminals = set(run_terminals[-1])
        for i in range(lc - 1):
            z_ops.append(cx.edge_chain(runs[i]))
            dual_path = _bfs_path(dual_adj, run_terminals[i], last_terminals)
            if dual_path is None:
                raise UnsupportedTopologyError(
                    "dual lattice does not connect the boundary runs"
                )
            dual_bits = 0
            for dei in dual_path:
                dual_bits ^= 1 << dcx.edge_index[dei]
            x_ops.append(_map_to_primal(dual_bits, back, n))

    if bo >= 1:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(s.vertex_count)]
        for ei in cx.interior_edges:
            e = s.edges[ei]
            adj[e.u].append((e.v, ei))
            adj[e.v].append((e.u, ei))
        open_vertex_sets = []
        rim_vertex_sets = []
        for walk in open_holes:
            ov = set()
            rv = set()
            for ei in walk:
                e = s.edges[ei]
                rv.update((e.u, e.v))
                if e.open:
                    ov.update((e.u, e.v))
            open_vertex_sets.append(ov)
            rim_vertex_sets.append(rv)
        last_open = open_vertex_sets[-1]
        for i in range(bo - 1):
            path = _bfs_path(adj, sorted(open_vertex_sets[i]), last_open)
            if path is None:
                raise UnsupportedTopologyError(
                    "non-open edges do not connect the open-rim holes"
                )
            z_ops.append(cx.edge_chain(path))
            ring = [
                ei
                for ei in cx.interior_edges
                if (s.edges[ei].u in rim_vertex_sets[i])
                != (s.edges[ei].v in rim_vertex_sets[i])
            ]
            x_ops.append(cx.edge_chain(ring))

    try:
        pairs = symplectic_pairing(z_ops, x_ops)
    except DegeneratePairingError as exc:
        raise ModelingError(f"boundary-strategy pairing is degenerate: {exc}") from exc
    if len(pairs) != k:
        raise ModelingError(
            f"boundary strategy produced {len(pairs)} pairs, expected {k}"
        )
    return LogicalBasis(pairs=tuple(pairs))


def verify_logical_basis(s: Surface, basis: LogicalBasis) -> None:
    """Certify a LogicalBasis: counts, pairing, stabilizer commutation, and
    per-side homological non-triviality.  Raises ModelingError on any failure.
    """
    k = h1_dim(s)
    if basis.k != k:
        raise ModelingError(f"basis has {basis.k} pairs, dim H1 = {k}")
    cx = _build_unchecked(s)
    _, _, dcx, back = _dual_machinery(s)
    dual_pos_of_primal_pos = [0] * len(back)
    for dpos, ppos in enumerate(back):
        dual_pos_of_primal_pos[ppos] = dpos
    d2t = cx.d2.transpose()
    dd2t = dcx.d2.transpose()
    for i, (x, z) in enumerate(basis.pairs):
        if cx.d1.matvec(z):
            raise ModelingError(f"z logical {i} is not a relative cycle")
        if in_span(d2t, z):
            raise ModelingError(f"z logical {i} is homologically trivial")
        x_dual_bits = 0
        rest = x.bits
        while rest:
            low = rest & -rest
            x_dual_bits |= 1 << dual_pos_of_primal_pos[low.bit_length() - 1]
            rest ^= low
        x_dual = BitVector(len(back), x_dual_bits)
        if dcx.d1.matvec(x_dual):
            raise ModelingError(f"x logical {i} is not a relative cycle of the dual")
        if in_span(dd2t, x_dual):
            raise ModelingError(f"x logical {i} is homologically trivial on the dual")
        for j, (_, z2) in enumerate(basis.pairs):
            if x.dot(z2) != (1 if i == j else 0):
                raise ModelingError(
                    f"pairing <x_{i}, z_{j}> = {x.dot(z2)}, expected {int(i == j)}"
                )
    code = build_css(s)
    for i, (x, z) in enumerate(basis.pairs):
        for sv in code.z_stabilizers:
            if x.dot(sv):
                raise ModelingError(f"x logical {i} anticommutes with a Z stabilizer")
        for sv in code.x_stabilizers:
            if z.dot(sv):
                raise ModelingError(f"z logical {i} anticommutes with an X stabilizer")
