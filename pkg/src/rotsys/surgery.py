r"""Genus-preserving embedding surgery.

Edge contraction and vertex splitting are mutually inverse, as are edge
deletion (when the edge borders two distinct faces) and edge insertion
inside a face.  All five operations preserve the genus; contraction and
splitting also preserve the face count, while deletion and insertion lower
and raise it by one.  Results are rebuilt through the validating embedding
constructor.

Edge ids stay contiguous: removing edge ``k`` shifts every larger id down
by one, and inserting an edge *with* id ``k`` shifts larger ids up.  This
makes the inverse pairs label-exact: splitting with ``new_edge_id = k`` and
contracting edge ``k`` afterwards returns the original embedding verbatim.

Corners: a position ``i`` on a facial walk names the angular sector at the
vertex of ``walk[i]`` between the walk's arrival there and its departure
along ``walk[i]``; equivalently, the slot just before ``walk[i]`` in that
vertex's rotation.  A vertex of degree d has d corners, one per occurrence
on the facial walks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .canon import canonical_embedding, canonical_key, multigraph_key
from .core import (
    Embedding,
    InvalidEmbedding,
    MultiGraph,
    embedding_from_darts,
    trace_faces,
)


@dataclass(frozen=True)
class SplitSpec:
    """How to split a vertex in two.

    ``arc_start`` and ``arc_len`` select a contiguous arc of the vertex's
    normalized rotation; the arc goes to the first half of the split (which
    keeps the vertex id) and the rest to a fresh vertex ``n + 1``.  Both
    sides must be nonempty (``1 <= arc_len <= degree - 1``).
    """

    vertex: int
    arc_start: int
    arc_len: int
    new_edge_id: int


@dataclass(frozen=True)
class CornerRef:
    """A corner: a dart occurrence position on a facial walk."""

    face_index: int
    position: int


def _shift_dart_up(d: int, new_eid: int) -> int:
    """Dart relabel when an edge is inserted with id ``new_eid``."""
    return d + 2 if (d >> 1) + 1 >= new_eid else d


def _shift_dart_down(d: int, removed_eid: int) -> int:
    return d - 2 if (d >> 1) + 1 > removed_eid else d


def _rebuild(n: int, edges: Sequence[tuple[int, int]], rot: Iterable[Sequence[int]]) -> Embedding:
    return embedding_from_darts(MultiGraph(n, tuple(edges)), rot)


def contract_edge(e: Embedding, edge_id: int) -> Embedding:
    """Contract a non-parallel edge; the merged vertex keeps the smaller id.

    The merged rotation splices the two endpoint rotations at the removed
    darts.  Genus and face count are unchanged.  Contracting one of a set
    of parallel edges would create a loop and is rejected.
    """
    g = e.graph
    if not (1 <= edge_id <= g.edge_count):
        raise ValueError(f"unknown edge id {edge_id}")
    p, q = g.edges[edge_id - 1]
    if g.multiplicity(p, q) > 1:
        raise InvalidEmbedding(
            f"edge {edge_id} is parallel to another {p}-{q} edge; contracting it would create a loop"
        )
    a, b = min(p, q), max(p, q)

    def vmap(w: int) -> int:
        if w == b:
            return a
        return w - 1 if w > b else w

    d_p = 2 * (edge_id - 1)
    d_q = d_p + 1
    rot_p = list(e.rot[p - 1])
    rot_q = list(e.rot[q - 1])
    i = rot_p.index(d_p)
    j = rot_q.index(d_q)
    merged = rot_p[i + 1 :] + rot_p[:i] + rot_q[j + 1 :] + rot_q[:j]

    new_edges = []
    for eid, (u, v) in enumerate(g.edges, start=1):
        if eid == edge_id:
            continue
        new_edges.append((vmap(u), vmap(v)))
    new_rot: list[list[int]] = [[] for _ in range(g.n - 1)]
    for w in range(1, g.n + 1):
        if w == p or w == q:
            continue
        new_rot[vmap(w) - 1] = [_shift_dart_down(d, edge_id) for d in e.rot[w - 1]]
    new_rot[a - 1] = [_shift_dart_down(d, edge_id) for d in merged]
    return _rebuild(g.n - 1, new_edges, new_rot)


def split_vertex(e: Embedding, spec: SplitSpec) -> Embedding:
    """Split a vertex along a contiguous rotation arc, adding a new edge.

    The arc (plus a dart of the new edge, appended after it) stays at the
    original vertex; the remaining darts (plus the other new dart at the
    splice point) move to vertex ``n + 1``.  Inverse of
    :func:`contract_edge` applied to ``spec.new_edge_id``.
    """
    g = e.graph
    v = spec.vertex
    if not (1 <= v <= g.n):
        raise ValueError(f"unknown vertex {v}")
    rotv = e.rot[v - 1]
    k = len(rotv)
    if not (1 <= spec.arc_len <= k - 1):
        raise ValueError(f"arc_len {spec.arc_len} out of range for degree {k}")
    if not (0 <= spec.arc_start < k):
        raise ValueError(f"arc_start {spec.arc_start} out of range for degree {k}")
    m = spec.new_edge_id
    if not (1 <= m <= g.edge_count + 1):
        raise ValueError(f"new_edge_id {m} out of range")

    arc = [rotv[(spec.arc_start + t) % k] for t in range(spec.arc_len)]
    rest = [rotv[(spec.arc_start + spec.arc_len + t) % k] for t in range(k - spec.arc_len)]
    rest_set = set(rest)
    new_v2 = g.n + 1

    new_edges: list[tuple[int, int]] = []
    for eid, (x, y) in enumerate(g.edges, start=1):
        dx, dy = 2 * (eid - 1), 2 * (eid - 1) + 1
        x2 = new_v2 if (x == v and dx in rest_set) else x
        y2 = new_v2 if (y == v and dy in rest_set) else y
        new_edges.append((x2, y2))
    new_edges.insert(m - 1, (v, new_v2))

    d_new_v = 2 * (m - 1)
    d_new_v2 = d_new_v + 1
    new_rot = [
        [_shift_dart_up(d, m) for d in e.rot[w - 1]] for w in range(1, g.n + 1)
    ]
    new_rot[v - 1] = [_shift_dart_up(d, m) for d in arc] + [d_new_v]
    new_rot.append([_shift_dart_up(d, m) for d in rest] + [d_new_v2])
    return _rebuild(g.n + 1, new_edges, new_rot)


def delete_edge(e: Embedding, edge_id: int) -> tuple[Embedding, CornerRef, CornerRef]:
    """Delete an edge whose two sides lie on distinct faces.

    The two faces merge (f drops by one, genus is unchanged).  Returns the
    embedding together with the two corners, in the result's face list,
    where :func:`add_edge_in_face` re-inserts the edge label-exactly.
    """
    g = e.graph
    if not (1 <= edge_id <= g.edge_count):
        raise ValueError(f"unknown edge id {edge_id}")
    d0 = 2 * (edge_id - 1)
    d1 = d0 + 1
    face_of = {}
    for fi, walk in enumerate(trace_faces(e).faces):
        for d in walk:
            face_of[d] = fi
    if face_of[d0] == face_of[d1]:
        raise InvalidEmbedding(
            f"both sides of edge {edge_id} lie on one face; deleting it would change the genus"
        )
    s0 = e.succ[d0]
    s1 = e.succ[d1]
    if s0 == d0 or s1 == d1:
        raise InvalidEmbedding(f"edge {edge_id} ends at a degree-1 vertex")

    new_edges = [pair for eid, pair in enumerate(g.edges, start=1) if eid != edge_id]
    new_rot = []
    for w in range(1, g.n + 1):
        new_rot.append([_shift_dart_down(d, edge_id) for d in e.rot[w - 1] if d not in (d0, d1)])
    result = _rebuild(g.n, new_edges, new_rot)

    corners = {}
    target0 = _shift_dart_down(s0, edge_id)
    target1 = _shift_dart_down(s1, edge_id)
    for fi, walk in enumerate(trace_faces(result).faces):
        for pos, d in enumerate(walk):
            if d == target0:
                corners[0] = CornerRef(fi, pos)
            elif d == target1:
                corners[1] = CornerRef(fi, pos)
    return result, corners[0], corners[1]


def delete_edge_permissive(e: Embedding, edge_id: int) -> Embedding:
    """Delete an edge whose two sides lie on one face (genus drops by one).

    Exposed for experiments; the construction pipelines only ever use the
    genus-preserving :func:`delete_edge`.  Deleting a bridge would
    disconnect the graph and is rejected by the embedding constructor.
    """
    g = e.graph
    d0 = 2 * (edge_id - 1)
    d1 = d0 + 1
    face_of = {}
    for fi, walk in enumerate(trace_faces(e).faces):
        for d in walk:
            face_of[d] = fi
    if face_of[d0] != face_of[d1]:
        raise InvalidEmbedding(
            f"edge {edge_id} borders two faces; use delete_edge for the genus-preserving deletion"
        )
    new_edges = [pair for eid, pair in enumerate(g.edges, start=1) if eid != edge_id]
    new_rot = []
    for w in range(1, g.n + 1):
        new_rot.append([_shift_dart_down(d, edge_id) for d in e.rot[w - 1] if d not in (d0, d1)])
    return _rebuild(g.n, new_edges, new_rot)


def add_edge_in_face(
    e: Embedding,
    corner_u: CornerRef,
    corner_v: CornerRef,
    new_edge_id: int | None = None,
) -> Embedding:
    """Insert an edge across a face, between two corners at distinct vertices.

    The face splits in two (f rises by one, genus is unchanged).  Corners
    refer to positions in ``trace_faces(e)``.  ``new_edge_id`` defaults to
    the next free id.
    """
    g = e.graph
    faces = trace_faces(e).faces
    if corner_u.face_index != corner_v.face_index:
        raise InvalidEmbedding("corners lie on different faces")
    if not (0 <= corner_u.face_index < len(faces)):
        raise ValueError(f"face index {corner_u.face_index} out of range")
    walk = faces[corner_u.face_index]
    if not (0 <= corner_u.position < len(walk) and 0 <= corner_v.position < len(walk)):
        raise ValueError("corner position out of range")
    du = walk[corner_u.position]
    dv = walk[corner_v.position]
    x = g.dart_vertex[du]
    y = g.dart_vertex[dv]
    if x == y:
        raise InvalidEmbedding(f"both corners sit at vertex {x}")
    m = g.edge_count + 1 if new_edge_id is None else new_edge_id
    if not (1 <= m <= g.edge_count + 1):
        raise ValueError(f"new_edge_id {m} out of range")

    new_edges = list(g.edges)
    new_edges.insert(m - 1, (x, y))
    mx = 2 * (m - 1)
    my = mx + 1
    new_rot = [[_shift_dart_up(d, m) for d in e.rot[w - 1]] for w in range(1, g.n + 1)]
    new_rot[x - 1].insert(new_rot[x - 1].index(_shift_dart_up(du, m)), mx)
    new_rot[y - 1].insert(new_rot[y - 1].index(_shift_dart_up(dv, m)), my)
    return _rebuild(g.n, new_edges, new_rot)


def subdivide_edge(e: Embedding, edge_id: int) -> Embedding:
    """Replace an edge by a path of two through a new degree-2 vertex.

    The first half keeps ``edge_id`` (now ending at the new vertex
    ``n + 1``); the second half is appended as the last edge id.  Faces and
    genus are unchanged; each incident facial walk grows by one dart per
    traversal direction.
    """
    g = e.graph
    if not (1 <= edge_id <= g.edge_count):
        raise ValueError(f"unknown edge id {edge_id}")
    u, v = g.edges[edge_id - 1]
    x = g.n + 1
    m2 = g.edge_count + 1
    d1 = 2 * (edge_id - 1) + 1        # the v-side dart of edge_id, moving to x
    d2_x = 2 * (m2 - 1)               # new edge, x side
    d2_v = d2_x + 1                   # new edge, v side

    new_edges = list(g.edges)
    new_edges[edge_id - 1] = (u, x)
    new_edges.append((x, v))
    new_rot = [list(e.rot[w - 1]) for w in range(1, g.n + 1)]
    rv = new_rot[v - 1]
    rv[rv.index(d1)] = d2_v
    new_rot.append([d1, d2_x])
    return _rebuild(g.n + 1, new_edges, new_rot)


def partition_split_specs(e: Embedding, vertex: int, new_edge_id: int | None = None) -> list[SplitSpec]:
    """All splits of a vertex, one per unordered arc/complement partition.

    A spec and its complementary arc produce the same embedding up to the
    naming of the two halves, so only arcs of length at most half the
    degree are listed (and for even degree, only half the starts at exactly
    half length).
    """
    k = e.degree(vertex)
    m = e.graph.edge_count + 1 if new_edge_id is None else new_edge_id
    specs = []
    for arc_len in range(1, k // 2 + 1):
        starts = range(k // 2) if 2 * arc_len == k else range(k)
        for s in starts:
            specs.append(SplitSpec(vertex, s, arc_len, m))
    return specs


def all_splits(e: Embedding, target: MultiGraph) -> list[Embedding]:
    """Expansions of ``e`` by vertex splitting whose graph matches ``target``.

    One split when the target has one vertex more; longer chains (for path
    expansions) otherwise.  A single-step call returns the raw candidate
    list, one entry per unordered split partition; a chained call returns
    one canonical representative per isomorphism class reached.
    """
    depth = target.n - e.graph.n
    if depth < 1:
        raise ValueError("target must have more vertices than the embedding")
    if target.edge_count != e.graph.edge_count + depth:
        return []
    tkey = multigraph_key(target)
    if depth == 1:
        out = []
        for v in range(1, e.graph.n + 1):
            for spec in partition_split_specs(e, v):
                child = split_vertex(e, spec)
                if multigraph_key(child.graph) == tkey:
                    out.append(child)
        return out

    frontier = [e]
    for _ in range(depth):
        seen: set[bytes] = set()
        for emb in frontier:
            for v in range(1, emb.graph.n + 1):
                for spec in partition_split_specs(emb, v):
                    seen.add(canonical_key(split_vertex(emb, spec)))
        frontier = [canonical_embedding(k) for k in sorted(seen)]
    return [emb for emb in frontier if multigraph_key(emb.graph) == tkey]
