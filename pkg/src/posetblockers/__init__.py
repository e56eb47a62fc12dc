"""Generalized blockers of antichains in finite bounded posets."""
from .antichains import (
    antichain_join,
    antichain_leq,
    antichain_meet,
    enumerate_antichains,
    ideal_order_leq,
)
from .blockers import (
    BlockerImage,
    blocker,
    blocker_image,
    blocker_lattice_join,
    blocker_lattice_meet,
    check_map_proposition,
    complementary,
    complementers,
    intersecters,
    intersecters_by_clutter_formula,
    intersecters_by_filter_formula,
)
from .clutter import (
    Clutter,
    antichain_to_clutter,
    boolean_lattice,
    clutter_blocker,
    clutter_to_antichain,
    is_blocking_set,
)
from .errors import *  # noqa: F401,F403
from .generate import build_corpus, catalog, random_bounded_poset, random_clutter, random_safe_map
from .poset import (
    MapCertificate,
    OrderMap,
    Poset,
    cartesian_product,
    extremes,
    hull,
    is_antichain,
    leq,
    project_antichain,
    reduced_bounded_product,
    validate_map,
)
from .products import intersecters_full_product, intersecters_reduced_product

from_cover_relations = Poset.from_cover_relations

__version__ = "0.1.0"
