"""Graph products of cyclic groups on Baire space and their group ultrametrics."""

from .baire import UltraValue, VertexPath, baire_distance, meet_length, truncate
from .embed import MetricGraphInstance, dprime, eta_of, to_graph_instance, verify_lemma
from .graphspec import INF, ClopenBoxes, Coloring, FiniteExplicit, GraphInstance, fixtures
from .oracle import closure, oracle_equal
from .ultranorm import distance, rn_key, two_sided, ultranorm
from .words import Word, canonical, concat, equal, invert, reduce, truncate_word

__all__ = [
    "INF",
    "ClopenBoxes",
    "Coloring",
    "FiniteExplicit",
    "GraphInstance",
    "MetricGraphInstance",
    "UltraValue",
    "VertexPath",
    "Word",
    "baire_distance",
    "canonical",
    "closure",
    "concat",
    "distance",
    "dprime",
    "equal",
    "eta_of",
    "fixtures",
    "invert",
    "meet_length",
    "oracle_equal",
    "reduce",
    "rn_key",
    "to_graph_instance",
    "truncate",
    "truncate_word",
    "two_sided",
    "ultranorm",
    "verify_lemma",
]
