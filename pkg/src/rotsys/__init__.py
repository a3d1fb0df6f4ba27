"""Rotation systems: 2-cell embeddings of loopless multigraphs on orientable surfaces."""

from .canon import (
    NON_ORIENTABLE,
    ORIENTABLE,
    EmbeddingClass,
    IsoWitness,
    apply_iso,
    are_isomorphic,
    automorphism_group_order,
    canonical_embedding,
    canonical_key,
    chirality,
    dedup,
    dedup_keys,
    graph_automorphism_count,
    multigraph_key,
)
from .core import (
    BudgetExceeded,
    Embedding,
    FaceSet,
    InvalidEmbedding,
    MultiGraph,
    RotsysError,
    SizeGuardExceeded,
    SurfaceStats,
    build_graph,
    complement,
    complete,
    complete_bipartite,
    circulant,
    cube,
    from_neighbor_lists,
    k4_plus,
    k5_minus_edge,
    make_embedding,
    octahedron,
    petersen,
    prism,
    reverse,
    surface_stats,
    theta,
    trace_faces,
    triangle_multi,
    wheel,
)
from .enumeration import (
    ChordAnalysis,
    ChordDiagram,
    GenusDistribution,
    GenusRecord,
    exhaustive_classes,
    face_pattern,
    genus_distribution,
    pipeline_k33,
    pipeline_k33_stages,
    pipeline_k5,
    pipeline_k5_stages,
    rotation_space_size,
    theta5_chord_analysis,
    theta5_classes,
    theta_embeddings,
)
from .polygon import (
    PolygonWord,
    WordError,
    boundary_word,
    format_word,
    parse_word,
    surface_from_word,
    words_equivalent,
)
from .surgery import (
    CornerRef,
    SplitSpec,
    add_edge_in_face,
    all_splits,
    contract_edge,
    delete_edge,
    delete_edge_permissive,
    split_vertex,
    subdivide_edge,
)

__version__ = "0.1.0"
