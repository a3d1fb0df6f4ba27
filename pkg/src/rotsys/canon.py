r"""Isomorphism, canonical keys, automorphism counts and deduplication.

Two embeddings are isomorphic when a vertex bijection together with an edge
bijection carries one rotation system to the other.  The canonical key used
here is the lexicographically least *rooted serialization* over all root
darts: starting from a root dart, a deterministic traversal relabels
vertices and edges in first-encounter order and writes the rotation system
down in those labels.  Isomorphisms permute root darts and commute with the
traversal, so two embeddings are isomorphic exactly when their least
serializations agree; and because an automorphism fixing a dart is the
identity, every distinct serialization of one embedding occurs with the
same multiplicity, which *is* the automorphism group order.

Mirror images: reversing all rotations gives the reflected embedding.  An
embedding isomorphic to its own reversal is called non-orientable (achiral);
otherwise orientable (chiral).  Equivalence-mode deduplication identifies an
embedding with its reversal by keying on the smaller of the two keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .core import (
    Embedding,
    MultiGraph,
    SizeGuardExceeded,
    dart_edge,
    embedding_from_darts,
    reverse,
    trace_faces,
)

ORIENTABLE = "orientable"
NON_ORIENTABLE = "non_orientable"

Chirality = Literal["orientable", "non_orientable"]
DedupMode = Literal["iso", "equivalence"]

MAX_VERTICES = 16
MAX_EDGES = 40


def _check_guard(n: int, m: int, max_vertices: int, max_edges: int) -> None:
    if n > max_vertices or m > max_edges:
        raise SizeGuardExceeded(
            f"instance with {n} vertices / {m} edges exceeds guard "
            f"({max_vertices} vertices / {max_edges} edges)"
        )


def _stream_from(e: Embedding, root: int) -> bytes:
    """Serialization of ``e`` relabelled by the traversal rooted at ``root``.

    Vertices receive labels in first-encounter order; the rotation of a
    newly met vertex starts at the dart through which it was discovered.
    Edges are labelled in emission order.  The output lists, per vertex in
    label order: its degree, then (neighbor label, edge label) for each dart
    of its rotation.
    """
    g = e.graph
    succ = e.succ
    dv = g.dart_vertex
    starts = [root]
    vlab = {dv[root]: 0}
    elab: dict[int, int] = {}
    out = [g.n, g.edge_count]
    i = 0
    while i < len(starts):
        d0 = starts[i]
        i += 1
        out.append(len(e.rot[dv[d0] - 1]))
        d = d0
        while True:
            p = d ^ 1
            w = dv[p]
            wl = vlab.get(w)
            if wl is None:
                wl = len(starts)
                vlab[w] = wl
                starts.append(p)
            el = elab.get(d >> 1)
            if el is None:
                el = len(elab)
                elab[d >> 1] = el
            out.append(wl)
            out.append(el)
            d = succ[d]
            if d == d0:
                break
    return bytes(out)


def _labels_from(e: Embedding, root: int) -> tuple[dict[int, int], dict[int, int]]:
    """First-encounter vertex and edge labels (1-based) of the rooted traversal."""
    g = e.graph
    succ = e.succ
    dv = g.dart_vertex
    starts = [root]
    vlab = {dv[root]: 1}
    elab: dict[int, int] = {}
    i = 0
    while i < len(starts):
        d0 = starts[i]
        i += 1
        d = d0
        while True:
            p = d ^ 1
            w = dv[p]
            if w not in vlab:
                vlab[w] = len(starts) + 1
                starts.append(p)
            eid = (d >> 1) + 1
            if eid not in elab:
                elab[eid] = len(elab) + 1
            d = succ[d]
            if d == d0:
                break
    return vlab, elab


def _all_streams(e: Embedding) -> list[bytes]:
    nd = 2 * e.graph.edge_count
    if nd == 0:
        return [bytes([e.graph.n, 0])]
    return [_stream_from(e, d) for d in range(nd)]


def canonical_key(
    e: Embedding,
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> bytes:
    """Canonical byte key: equal keys iff isomorphic embeddings."""
    _check_guard(e.graph.n, e.graph.edge_count, max_vertices, max_edges)
    return min(_all_streams(e))


def canonical_embedding(key: bytes) -> Embedding:
    """Decode a canonical key back into its representative embedding."""
    n, m = key[0], key[1]
    pos = 2
    rotations: list[list[tuple[int, int]]] = []  # (edge label, neighbor label)
    for _ in range(n):
        deg = key[pos]
        pos += 1
        tokens = []
        for _ in range(deg):
            tokens.append((key[pos + 1], key[pos]))
            pos += 2
        rotations.append(tokens)
    occurrences: dict[int, list[tuple[int, int]]] = {}  # edge -> [(vertex, nbr)]
    for v0, tokens in enumerate(rotations):
        for el, wl in tokens:
            occurrences.setdefault(el, []).append((v0, wl))
    edges = []
    for el in range(m):
        occ = occurrences[el]
        if len(occ) != 2 or occ[0][1] != occ[1][0] or occ[1][1] != occ[0][0]:
            raise ValueError("malformed canonical key")
        edges.append((occ[0][0] + 1, occ[1][0] + 1))
    graph = MultiGraph(n, tuple(edges))
    seen_once: set[int] = set()
    dart_rot: list[list[int]] = []
    for tokens in rotations:
        darts = []
        for el, _ in tokens:
            if el in seen_once:
                darts.append(2 * el + 1)
            else:
                seen_once.add(el)
                darts.append(2 * el)
        dart_rot.append(darts)
    return embedding_from_darts(graph, dart_rot)


def automorphism_group_order(
    e: Embedding,
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> int:
    """Order of the group of (vertex, edge) bijections fixing the rotations.

    Rotation-preserving maps only; maps carrying the rotations to their
    reversals are not counted.
    """
    _check_guard(e.graph.n, e.graph.edge_count, max_vertices, max_edges)
    streams = _all_streams(e)
    if 2 * e.graph.edge_count == 0:
        return 1
    least = min(streams)
    return sum(1 for s in streams if s == least)


@dataclass(frozen=True)
class IsoWitness:
    """An isomorphism between two embeddings, as explicit bijections."""

    vertex_map: dict[int, int]
    edge_map: dict[int, int]


def apply_iso(e: Embedding, witness: IsoWitness) -> Embedding:
    """Relabel ``e`` through ``witness`` (vertex and edge bijections)."""
    g = e.graph
    vm, em = witness.vertex_map, witness.edge_map
    new_edges: list[tuple[int, int]] = [(0, 0)] * g.edge_count
    for eid, (u, v) in enumerate(g.edges, start=1):
        new_edges[em[eid] - 1] = (vm[u], vm[v])
    new_graph = MultiGraph(g.n, tuple(new_edges))
    dart_rot: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(1, g.n + 1):
        darts = []
        for d in e.rot[v - 1]:
            darts.append(2 * (em[(d >> 1) + 1] - 1) + (d & 1))
        dart_rot[vm[v] - 1] = darts
    return embedding_from_darts(new_graph, dart_rot)


def _same_map(e1: Embedding, e2: Embedding) -> bool:
    """Equality as embeddings, ignoring stored endpoint order of edges."""
    g1, g2 = e1.graph, e2.graph
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    for (u1, v1), (u2, v2) in zip(g1.edges, g2.edges):
        if {u1, v1} != {u2, v2}:
            return False
    for v in range(1, g1.n + 1):
        r1 = [dart_edge(d) for d in e1.rot[v - 1]]
        r2 = [dart_edge(d) for d in e2.rot[v - 1]]
        if len(r1) != len(r2):
            return False
        if not r1:
            continue
        k = r2.index(min(r1)) if min(r1) in r2 else -1
        if k < 0 or r2[k:] + r2[:k] != _rotate_min(r1):
            return False
    return True


def _rotate_min(seq: list[int]) -> list[int]:
    k = seq.index(min(seq))
    return seq[k:] + seq[:k]


def are_isomorphic(
    e1: Embedding,
    e2: Embedding,
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> IsoWitness | None:
    """A verified isomorphism witness, or None when the keys differ."""
    for e in (e1, e2):
        _check_guard(e.graph.n, e.graph.edge_count, max_vertices, max_edges)
    if e1.graph.n != e2.graph.n or e1.graph.edge_count != e2.graph.edge_count:
        return None
    s1 = _all_streams(e1)
    s2 = _all_streams(e2)
    if min(s1) != min(s2):
        return None
    root1 = s1.index(min(s1))
    root2 = s2.index(min(s2))
    vl1, el1 = _labels_from(e1, root1)
    vl2, el2 = _labels_from(e2, root2)
    v_inv2 = {lab: v for v, lab in vl2.items()}
    e_inv2 = {lab: k for k, lab in el2.items()}
    witness = IsoWitness(
        vertex_map={v: v_inv2[lab] for v, lab in vl1.items()},
        edge_map={k: e_inv2[lab] for k, lab in el1.items()},
    )
    if not _same_map(apply_iso(e1, witness), e2):
        raise AssertionError("isomorphism witness failed verification")
    return witness


def chirality(
    e: Embedding,
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> Chirality:
    """``non_orientable`` when ``e`` is isomorphic to its own reversal."""
    key = canonical_key(e, max_vertices=max_vertices, max_edges=max_edges)
    rkey = canonical_key(reverse(e), max_vertices=max_vertices, max_edges=max_edges)
    return NON_ORIENTABLE if key == rkey else ORIENTABLE


@dataclass(frozen=True)
class EmbeddingClass:
    """An isomorphism (or mirror-equivalence) class of embeddings."""

    canonical_key: bytes
    representative: Embedding
    genus: int
    face_degrees: tuple[int, ...]
    group_order: int
    chirality: Chirality


def _class_from_key(key: bytes) -> EmbeddingClass:
    rep = canonical_embedding(key)
    faces = trace_faces(rep)
    rkey = canonical_key(reverse(rep))
    return EmbeddingClass(
        canonical_key=key,
        representative=rep,
        genus=faces.stats.genus,
        face_degrees=faces.face_lengths(),
        group_order=automorphism_group_order(rep),
        chirality=NON_ORIENTABLE if rkey == key else ORIENTABLE,
    )


def dedup(
    embeddings: Iterable[Embedding],
    mode: DedupMode = "iso",
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> list[EmbeddingClass]:
    """Group embeddings into classes, sorted by canonical key.

    ``iso`` keys each embedding by its canonical key; ``equivalence``
    additionally identifies an embedding with its reversal by keying on
    ``min(key, key of reversal)``.
    """
    if mode not in ("iso", "equivalence"):
        raise ValueError(f"unknown dedup mode {mode!r}")
    keys: set[bytes] = set()
    for e in embeddings:
        k = canonical_key(e, max_vertices=max_vertices, max_edges=max_edges)
        if mode == "equivalence":
            rk = canonical_key(reverse(e), max_vertices=max_vertices, max_edges=max_edges)
            k = min(k, rk)
        keys.add(k)
    return [_class_from_key(k) for k in sorted(keys)]


def dedup_keys(
    embeddings: Iterable[Embedding],
    mode: DedupMode = "iso",
) -> set[bytes]:
    """Just the class keys of :func:`dedup`, for cheap set comparisons."""
    return {c.canonical_key for c in dedup(embeddings, mode)}


# ---------------------------------------------------------------------------
# Multigraph (embedding-free) isomorphism helpers
# ---------------------------------------------------------------------------


def _mult_matrix(g: MultiGraph) -> list[list[int]]:
    m = [[0] * (g.n + 1) for _ in range(g.n + 1)]
    for u, v in g.edges:
        m[u][v] += 1
        m[v][u] += 1
    return m


def _vertex_profiles(g: MultiGraph) -> list[tuple]:
    mat = _mult_matrix(g)
    profiles = []
    for v in range(1, g.n + 1):
        mults = sorted(x for x in mat[v][1:] if x)
        profiles.append((g.degree(v), tuple(mults)))
    return profiles


def graph_automorphism_count(
    g: MultiGraph,
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> int:
    """Number of (vertex, edge) automorphism pairs of the multigraph.

    Rotations are ignored.  Each vertex automorphism extends to an edge
    bijection in ``prod(mult!)`` ways over the parallel classes.
    """
    _check_guard(g.n, g.edge_count, max_vertices, max_edges)
    mat = _mult_matrix(g)
    profiles = _vertex_profiles(g)
    n = g.n
    image = [0] * (n + 1)
    used = [False] * (n + 1)
    count = 0

    def extend(v: int) -> None:
        nonlocal count
        if v > n:
            count += 1
            return
        for w in range(1, n + 1):
            if used[w] or profiles[w - 1] != profiles[v - 1]:
                continue
            if any(mat[v][u] != mat[w][image[u]] for u in range(1, v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = 0

    extend(1)
    edge_factor = 1
    seen: set[tuple[int, int]] = set()
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            edge_factor *= math.factorial(g.multiplicity(u, v))
    return count * edge_factor


def multigraph_key(
    g: MultiGraph,
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
) -> bytes:
    """Canonical key of the underlying multigraph (rotations ignored).

    Minimal serialization of the multiplicity matrix over vertex orderings,
    searched with profile grouping and prefix pruning.
    """
    _check_guard(g.n, g.edge_count, max_vertices, max_edges)
    mat = _mult_matrix(g)
    profiles = _vertex_profiles(g)
    n = g.n
    best: list[int] | None = None
    order: list[int] = []
    used = [False] * (n + 1)
    prefix: list[int] = []

    def extend() -> None:
        nonlocal best
        depth = len(order)
        if depth == n:
            if best is None or prefix < best:
                best = list(prefix)
            return
        for w in range(1, n + 1):
            if used[w]:
                continue
            row = [mat[w][u] for u in order] + list(profiles[w - 1][:1])
            prefix.extend(row)
            if best is not None and prefix > best[: len(prefix)]:
                del prefix[-len(row):]
                continue
            used[w] = True
            order.append(w)
            extend()
            order.pop()
            used[w] = False
            del prefix[-len(row):]

    extend()
    assert best is not None
    return bytes([n, g.edge_count]) + bytes(best)
