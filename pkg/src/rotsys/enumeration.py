r"""Exhaustive rotation-system enumeration and the guided expansion pipelines.

The two ways to the same answer:

* scan every rotation system of a graph (all products of cyclic orders),
  filter by genus or face count, and deduplicate canonically;
* expand small one-face embeddings by genus-preserving surgery, stage by
  stage, deduplicating after every stage.

Both are implemented here and cross-checked by the verification suites.
The expansion chains start from the three one-face rotation systems of the
five-edge theta graph on the double torus (automorphism group orders 2, 10
and 5), which the chord-diagram analysis shows to be the only ones.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import get_context

from . import _kernel
from .canon import (
    DedupMode,
    EmbeddingClass,
    dedup,
    multigraph_key,
)
from .core import (
    BudgetExceeded,
    Embedding,
    MultiGraph,
    RotsysError,
    complete,
    complete_bipartite,
    k4_plus,
    k5_minus_edge,
    make_embedding,
    reverse,
    theta,
    trace_faces,
    triangle_multi,
    wheel,
)
from .surgery import (
    CornerRef,
    SplitSpec,
    add_edge_in_face,
    all_splits,
    split_vertex,
    subdivide_edge,
)

DEFAULT_BUDGET = 10**9


def _resolve_workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("ROTSYS_WORKERS")
    return max(1, int(env)) if env else 1


class RotationSpace:
    """The full space of rotation systems of a graph, indexable by integer.

    Vertex ``v`` contributes ``(deg(v) - 1)!`` cyclic orders (least dart
    pinned first); systems are numbered in mixed radix with vertex 1 as the
    fastest digit.
    """

    def __init__(self, graph: MultiGraph):
        self.graph = graph
        self.orders = _kernel.build_orders(list(graph.darts_at))
        self.counts = [len(o) for o in self.orders]
        self.total = math.prod(self.counts)

    def rotations_at(self, index: int) -> tuple[tuple[int, ...], ...]:
        rot = []
        for v in range(self.graph.n):
            index, digit = divmod(index, self.counts[v])
            rot.append(self.orders[v][digit])
        return tuple(rot)

    def embedding_at(self, index: int) -> Embedding:
        # orders are least-dart-first, i.e. already normalized
        return Embedding(self.graph, self.rotations_at(index))


def rotation_space_size(graph: MultiGraph) -> int:
    return math.prod(math.factorial(graph.degree(v) - 1) for v in range(1, graph.n + 1))


def _scan_chunk(args: tuple[int, tuple[tuple[int, int], ...], int, int, int]) -> tuple[list[int], list[int]]:
    n, edges, lo, hi, target_f = args
    space = RotationSpace(MultiGraph(n, edges))
    return _kernel.scan(space.orders, 2 * space.graph.edge_count, lo, hi, target_f)


def scan_rotation_space(
    graph: MultiGraph,
    target_f: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> tuple[dict[int, int], list[int]]:
    """Face-count histogram over all systems, plus indices with ``target_f`` faces.

    ``target_f = -1`` collects no indices (histogram only).  The histogram
    and index list are independent of the worker count.
    """
    space = RotationSpace(graph)
    if space.total > budget:
        raise BudgetExceeded(space.total, budget)
    nworkers = _resolve_workers(workers)
    nd = 2 * graph.edge_count
    if nworkers == 1 or space.total < nworkers:
        hist, matches = _kernel.scan(space.orders, nd, 0, space.total, target_f)
    else:
        step = -(-space.total // nworkers)
        chunks = [
            (graph.n, graph.edges, lo, min(lo + step, space.total), target_f)
            for lo in range(0, space.total, step)
        ]
        with get_context("fork").Pool(nworkers) as pool:
            parts = pool.map(_scan_chunk, chunks)
        hist = [0] * (nd + 2)
        matches = []
        for h, m in parts:
            for f, c in enumerate(h):
                hist[f] += c
            matches.extend(m)
    return {f: c for f, c in enumerate(hist) if c}, matches


def _target_faces(graph: MultiGraph, genus: int | None, faces: int | None) -> int:
    if genus is None and faces is None:
        raise ValueError("give a genus or a face count to filter on")
    n, m = graph.n, graph.edge_count
    if genus is not None:
        f = 2 - 2 * genus - n + m
        if faces is not None and faces != f:
            raise ValueError(f"genus {genus} forces f = {f}, not {faces}")
        return f
    assert faces is not None
    return faces


def exhaustive_classes(
    graph: MultiGraph,
    *,
    genus: int | None = None,
    faces: int | None = None,
    mode: DedupMode = "iso",
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> list[EmbeddingClass]:
    """Embedding classes of ``graph`` with the given genus or face count.

    Every rotation system is visited; matches are deduplicated canonically.
    Output is sorted by canonical key, independent of the worker count.
    """
    f = _target_faces(graph, genus, faces)
    if f < 1:
        return []
    _, matches = scan_rotation_space(graph, f, budget=budget, workers=workers)
    space = RotationSpace(graph)
    return dedup((space.embedding_at(i) for i in matches), mode)


@dataclass(frozen=True)
class GenusRecord:
    """Per-genus class counts of a genus distribution."""

    genus: int
    iso_classes: int
    equivalence_classes: int
    orientable: int
    non_orientable: int
    group_orders: tuple[int, ...]
    raw_systems: int


@dataclass(frozen=True)
class GenusDistribution:
    """Embedding classes of a graph, grouped by genus over the full space."""

    records: tuple[GenusRecord, ...]

    def equivalence_counts(self) -> dict[int, int]:
        return {r.genus: r.equivalence_classes for r in self.records}

    def spectrum(self) -> tuple[int, ...]:
        return tuple(r.genus for r in self.records)

    def total_equivalence(self) -> int:
        return sum(r.equivalence_classes for r in self.records)


def genus_distribution(
    graph: MultiGraph,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
) -> GenusDistribution:
    """Classes per genus across the whole rotation space of ``graph``."""
    hist, _ = scan_rotation_space(graph, -1, budget=budget, workers=workers)
    records = []
    for f in sorted(hist, reverse=True):
        chi = graph.n - graph.edge_count + f
        genus = (2 - chi) // 2
        classes = exhaustive_classes(
            graph, faces=f, mode="equivalence", budget=budget, workers=workers
        )
        iso = sum(1 if c.chirality == "non_orientable" else 2 for c in classes)
        records.append(
            GenusRecord(
                genus=genus,
                iso_classes=iso,
                equivalence_classes=len(classes),
                orientable=sum(1 for c in classes if c.chirality == "orientable"),
                non_orientable=sum(1 for c in classes if c.chirality == "non_orientable"),
                group_orders=tuple(sorted(c.group_order for c in classes)),
                raw_systems=hist[f],
            )
        )
    return GenusDistribution(tuple(records))


def theta_embeddings(
    m: int,
    genus: int,
    *,
    mode: DedupMode = "iso",
    budget: int = DEFAULT_BUDGET,
) -> list[EmbeddingClass]:
    """Classes of the m-edge theta graph at the given genus.

    Every embedding of a theta graph is isomorphic to one whose first
    vertex carries the identity rotation (relabel the edges), so only the
    ``(m - 1)!`` rotations of the second vertex are scanned.
    """
    f = m - 2 * genus
    if f < 1:
        return []
    if math.factorial(m - 1) > budget:
        raise BudgetExceeded(math.factorial(m - 1), budget)
    graph = theta(m)
    u_rot = tuple(2 * i for i in range(m))
    v_orders = _kernel.build_orders([graph.darts_at[1]])[0]
    nd = 2 * m
    matches = []
    stamp = [0] * nd
    succ = [0] * nd
    for i in range(m):
        succ[u_rot[i]] = u_rot[(i + 1) % m]
    cur = 0
    for idx, v_rot in enumerate(v_orders):
        for i in range(m):
            succ[v_rot[i]] = v_rot[(i + 1) % m]
        cur += 1
        count = 0
        for d0 in range(nd):
            if stamp[d0] == cur:
                continue
            count += 1
            d = d0
            while stamp[d] != cur:
                stamp[d] = cur
                d = succ[d ^ 1]
        if count == f:
            matches.append(idx)
    return dedup(
        (Embedding(graph, (u_rot, v_orders[i])) for i in matches), mode
    )


# ---------------------------------------------------------------------------
# Chord diagrams: the face pattern of one-face two-vertex embeddings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChordDiagram:
    """A perfect matching on cyclically ordered positions, canonicalized.

    Positions are 0-based around the facial walk of a one-face two-vertex
    embedding; each chord pairs the two traversals of an edge.  Chords join
    positions of opposite parity (the walk alternates between the two
    vertices) and never adjacent positions (no digon face).  The stored
    form is the lexicographic minimum over all rotations and reflections.
    """

    size: int
    chords: tuple[tuple[int, int], ...]

    @staticmethod
    def canonical(size: int, pairs: list[tuple[int, int]]) -> "ChordDiagram":
        for i, j in pairs:
            if (i - j) % 2 == 0:
                raise ValueError(f"chord {(i, j)} joins positions of equal parity")
            if (i - j) % size in (1, size - 1):
                raise ValueError(f"chord {(i, j)} joins adjacent positions")
        best = None
        for reflect in (False, True):
            for r in range(size):
                img = []
                for i, j in pairs:
                    a = ((-i if reflect else i) + r) % size
                    b = ((-j if reflect else j) + r) % size
                    img.append((min(a, b), max(a, b)))
                img.sort()
                key = tuple(img)
                if best is None or key < best:
                    best = key
        assert best is not None
        return ChordDiagram(size, best)

    def chord_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(min((i - j) % self.size, (j - i) % self.size) for i, j in self.chords))


def face_pattern(e: Embedding) -> ChordDiagram:
    """Chord diagram pairing the two traversals of each edge on the face."""
    if e.graph.n != 2:
        raise RotsysError("face_pattern needs a two-vertex embedding")
    faces = trace_faces(e)
    if faces.stats.f != 1:
        raise RotsysError(f"face_pattern needs one face, got {faces.stats.f}")
    walk = faces.faces[0]
    where: dict[int, list[int]] = {}
    for pos, d in enumerate(walk):
        where.setdefault(d >> 1, []).append(pos)
    return ChordDiagram.canonical(len(walk), [(p[0], p[1]) for p in where.values()])


def _valid_matchings(size: int) -> list[tuple[tuple[int, int], ...]]:
    """All matchings on ``size`` cyclic positions obeying the chord rules."""
    out: list[tuple[tuple[int, int], ...]] = []

    def extend(free: list[int], acc: list[tuple[int, int]]) -> None:
        if not free:
            out.append(tuple(sorted(acc)))
            return
        i = free[0]
        for j in free[1:]:
            if (i - j) % 2 == 0 or (i - j) % size in (1, size - 1):
                continue
            acc.append((i, j))
            extend([x for x in free if x not in (i, j)], acc)
            acc.pop()

    extend(list(range(size)), [])
    return out


@dataclass(frozen=True)
class ChordAnalysis:
    """Case analysis of one-face five-edge theta patterns on ten positions."""

    labelled_classes: tuple[tuple[tuple[int, int], ...], ...]
    canonical_diagrams: tuple[ChordDiagram, ...]
    realizable: tuple[ChordDiagram, ...]
    unrealized: tuple[ChordDiagram, ...]


def theta5_chord_analysis() -> ChordAnalysis:
    """Enumerate the ten-position chord diagrams and mark the realizable ones.

    Labelled classes normalize a matching by rotating a shortest chord, if
    one of length three exists, onto positions (0, 3) -- oriented forward,
    which is where reflection gets spent -- and reading the rest of the
    cycle as is; the only matching without a length-three chord pairs every
    position with its antipode.  Canonical diagrams quotient fully by
    rotation and reflection.  A diagram is realizable when some one-face
    embedding of the five-edge theta graph produces it.
    """
    size = 10
    matchings = _valid_matchings(size)

    labelled = [m for m in matchings if (0, 3) in m]
    labelled += [m for m in matchings if 3 not in ChordDiagram.canonical(size, list(m)).chord_lengths()]

    canonical = sorted(
        {ChordDiagram.canonical(size, list(m)) for m in matchings},
        key=lambda d: d.chords,
    )
    realized = {face_pattern(c.representative) for c in theta_embeddings(5, 2)}
    realizable = tuple(d for d in canonical if d in realized)
    unrealized = tuple(d for d in canonical if d not in realized)
    return ChordAnalysis(tuple(labelled), tuple(canonical), realizable, unrealized)


# ---------------------------------------------------------------------------
# Guided expansion pipelines
# ---------------------------------------------------------------------------

# The three one-face double-torus rotation systems of theta(5), written as
# edge-id rotations at the two vertices; automorphism groups have orders
# 2, 10 and 5.  The chord analysis and the exhaustive scan both confirm
# that these are the only one-face systems up to isomorphism.
THETA5_ROTATIONS: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = (
    ((1, 2, 3, 4, 5), (1, 2, 4, 5, 3)),
    ((1, 2, 3, 4, 5), (1, 2, 3, 4, 5)),
    ((1, 2, 3, 4, 5), (1, 4, 2, 5, 3)),
)


def theta5_embeddings() -> list[Embedding]:
    g = theta(5)
    return [make_embedding(g, rot) for rot in THETA5_ROTATIONS]


def _stage_iso(candidates: list[Embedding]) -> list[EmbeddingClass]:
    """Iso classes represented by a pipeline stage's candidates.

    Stages carry embeddings up to equivalence, so a chiral candidate stands
    for itself and its mirror; both chiralities enter the iso count.
    """
    return dedup(candidates + [reverse(e) for e in candidates], "iso")


def theta5_classes() -> list[EmbeddingClass]:
    """The three double-torus classes of theta(5), from the fixed systems."""
    classes = dedup(theta5_embeddings(), "equivalence")
    assert len(classes) == 3
    return classes


def _edge_additions(e: Embedding, target_key: bytes) -> list[Embedding]:
    """All single-edge insertions into faces of ``e`` whose graph matches."""
    faces = trace_faces(e).faces
    dv = e.graph.dart_vertex
    out = []
    for fi, walk in enumerate(faces):
        for i in range(len(walk)):
            for j in range(i + 1, len(walk)):
                if dv[walk[i]] == dv[walk[j]]:
                    continue
                cand = add_edge_in_face(e, CornerRef(fi, i), CornerRef(fi, j))
                if multigraph_key(cand.graph) == target_key:
                    out.append(cand)
    return out


def _subdivide_and_join(e: Embedding, target_key: bytes) -> list[Embedding]:
    """Subdivide each copy of a doubled edge, then join the new vertex in."""
    g = e.graph
    doubled = [
        eid for eid, (u, v) in enumerate(g.edges, start=1) if g.multiplicity(u, v) == 2
    ]
    out = []
    for eid in doubled:
        out.extend(_edge_additions(subdivide_edge(e, eid), target_key))
    return out


def _path_splits(e: Embedding, vertex: int) -> list[Embedding]:
    """Expand a degree-5 vertex into a path of three (2 + 1 + 2 darts)."""
    out = []
    deg = e.degree(vertex)
    if deg != 5:
        raise ValueError("path expansion expects a degree-5 vertex")
    for s in range(deg):
        first = split_vertex(e, SplitSpec(vertex, s, 2, e.graph.edge_count + 1))
        mid = first.graph.n  # the fresh vertex holding the remaining three darts
        m1_dart = 2 * first.graph.edge_count - 1
        rot_mid = first.rot[mid - 1]
        idx = rot_mid.index(m1_dart)
        out.append(split_vertex(first, SplitSpec(mid, idx, 2, first.graph.edge_count + 1)))
    return out


@dataclass(frozen=True)
class K33PipelineResult:
    """Expansion of the theta(5) classes to complete bipartite K33."""

    theta5: tuple[EmbeddingClass, ...]
    candidates_per_class: tuple[int, ...]
    classes: tuple[EmbeddingClass, ...]


def pipeline_k33_stages() -> K33PipelineResult:
    """Double path splits of the theta(5) classes, filtered to K33, deduped."""
    k33_key = multigraph_key(complete_bipartite(3, 3))
    theta5 = theta5_classes()
    counts = []
    candidates: list[Embedding] = []
    for c in theta5:
        mine = []
        for first in _path_splits(c.representative, 1):
            mine.extend(emb for emb in _path_splits(first, 2))
        mine = [emb for emb in mine if multigraph_key(emb.graph) == k33_key]
        counts.append(len(mine))
        candidates.extend(mine)
    classes = dedup(candidates, "equivalence")
    return K33PipelineResult(tuple(theta5), tuple(counts), tuple(classes))


def pipeline_k33() -> list[EmbeddingClass]:
    """The double-torus classes of K33 obtained by expansion."""
    return list(pipeline_k33_stages().classes)


@dataclass(frozen=True)
class K5PipelineResult:
    """The expansion chain from theta(5) up to K5 on the double torus."""

    theta5: tuple[EmbeddingClass, ...]
    t123_iso: tuple[EmbeddingClass, ...]
    t123: tuple[EmbeddingClass, ...]
    k4_plus: tuple[EmbeddingClass, ...]
    w4: tuple[EmbeddingClass, ...]
    k5_minus_candidates: tuple[int, int]  # (from w4, from k4_plus)
    k5_minus_iso: tuple[EmbeddingClass, ...]
    k5_minus: tuple[EmbeddingClass, ...]
    k5_iso: tuple[EmbeddingClass, ...]
    k5: tuple[EmbeddingClass, ...]


@lru_cache(maxsize=1)
def pipeline_k5_stages() -> K5PipelineResult:
    """Run the expansion chain, deduplicating after every stage."""
    theta5 = theta5_classes()

    t123_candidates: list[Embedding] = []
    for c in theta5:
        t123_candidates.extend(all_splits(c.representative, triangle_multi(1, 2, 3)))
    t123_iso = _stage_iso(t123_candidates)
    t123 = dedup(t123_candidates, "equivalence")

    k4p_graph = k4_plus()
    k4p_candidates: list[Embedding] = []
    for c in t123:
        k4p_candidates.extend(all_splits(c.representative, k4p_graph))
    k4p = dedup(k4p_candidates, "equivalence")

    w4_graph = wheel(4)
    w4_candidates: list[Embedding] = []
    for c in k4p:
        w4_candidates.extend(all_splits(c.representative, w4_graph))
    w4 = dedup(w4_candidates, "equivalence")

    k5m_key = multigraph_key(k5_minus_edge())
    from_w4: list[Embedding] = []
    for c in w4:
        from_w4.extend(_edge_additions(c.representative, k5m_key))
    from_k4p: list[Embedding] = []
    for c in k4p:
        from_k4p.extend(_subdivide_and_join(c.representative, k5m_key))
    k5m_candidates = from_w4 + from_k4p
    k5m_iso = _stage_iso(k5m_candidates)
    k5m = dedup(k5m_candidates, "equivalence")

    k5_key = multigraph_key(complete(5))
    k5_candidates: list[Embedding] = []
    for c in k5m:
        k5_candidates.extend(_edge_additions(c.representative, k5_key))
    k5_iso = _stage_iso(k5_candidates)
    k5 = dedup(k5_candidates, "equivalence")

    return K5PipelineResult(
        theta5=tuple(theta5),
        t123_iso=tuple(t123_iso),
        t123=tuple(t123),
        k4_plus=tuple(k4p),
        w4=tuple(w4),
        k5_minus_candidates=(len(from_w4), len(from_k4p)),
        k5_minus_iso=tuple(k5m_iso),
        k5_minus=tuple(k5m),
        k5_iso=tuple(k5_iso),
        k5=tuple(k5),
    )


def pipeline_k5() -> list[EmbeddingClass]:
    """The double-torus classes of K5 obtained by the expansion chain."""
    return list(pipeline_k5_stages().k5)
