from .canon import CANON_MAX_N, are_isomorphic, canonical_form, canonical_masks, family_from_form
from .family import (
    SetFamily,
    binom,
    cross_intersecting,
    degree,
    is_intersecting,
    is_sperner,
    is_transversal,
    link,
    masks_intersecting,
    masks_sperner,
    max_degree,
    unlink,
)
from .io import from_json, from_text, parse_family, read_family, to_json, to_text, write_family
from .rational import Rational, as_rational, fmt_rational, parse_rational
from .transversal import min_transversal, tau, tau_exceeds, tau_masks, tau_witness
from .vertexset import MAX_N, VertexSet, iter_bits, mask_of, vertices_of

__all__ = [
    "CANON_MAX_N", "MAX_N", "Rational", "SetFamily", "VertexSet", "are_isomorphic", "binom",
    "canonical_form", "canonical_masks", "family_from_form", "cross_intersecting", "degree", "from_json",
    "from_text", "is_intersecting", "is_sperner", "is_transversal", "iter_bits", "link",
    "mask_of", "masks_intersecting", "masks_sperner", "max_degree", "min_transversal",
    "parse_family", "read_family", "tau", "tau_exceeds", "tau_masks", "tau_witness",
    "to_json", "to_text", "unlink", "vertices_of", "write_family", "as_rational", "fmt_rational", "parse_rational",
]
