"""Finite quandles, the groups they come from, and certified embeddings into Conj(G)."""

from .constructions import (
    LabeledQuandle,
    alexander_quandle,
    conj_quandle,
    dihedral_quandle,
    embed_into_finite_witness,
    embed_into_semidirect,
    generalized_alexander_quandle,
    twisted_conj_quandle,
)
from .enveloping import (
    EmbeddabilityReport,
    QuandlePresentation,
    Status,
    as_presentation,
    inner_certificate,
    search_embedding,
    verify_certificate,
)
from .finite_group import (
    FiniteGroup,
    GroupAutomorphism,
    aut_order,
    automorphisms,
    check_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    is_automorphism,
    quaternion_group,
    symmetric_group,
)
from .quandle_core import (
    FiniteQuandle,
    QuandleMap,
    are_isomorphic,
    check_quandle,
    enumerate_quandles,
    find_homs,
    is_quandle_hom,
    trivial_quandle,
)
from .semidirect import (
    SemiZElement,
    SemiZGroup,
    build_finite_witness,
    semi_conjugate,
    semi_inv,
    semi_mul,
)

__version__ = "0.1.0"
