from .anneal import anneal_max_dC, warm_starts
from .catalog import catalog_tau3_families
from .cliques import colex_masks, enumerate_maximal_intersecting
from .designs import enumerate_designs
from .exhaustive import exhaustive_max_dC
from .folklore import EnumerationReport, tau_is_three, verify_folklore
from .result import SearchResult

__all__ = [
    "EnumerationReport", "SearchResult", "anneal_max_dC", "catalog_tau3_families", "colex_masks",
    "enumerate_designs", "enumerate_maximal_intersecting", "exhaustive_max_dC", "tau_is_three",
    "verify_folklore", "warm_starts",
]
