"""Oriented diameter of complete multipartite graphs.

Thin layer over the C++ core: explicit diameter-2 constructions, an exhaustive
decision procedure, CNF export and the small combinatorial checks around them.
"""

import json

from ._core import (
    Construction,
    OdiamError,
    Orientation,
    SearchOutcome,
    brute_force_min_diameter,
    canonical_case_classes,
    case_signature,
    complete_graph_orientation,
    construct_33q,
    construct_34q,
    decide_diameter2,
    decode_model,
    encode_diameter2,
    enumerate_diameter2,
    export_cnf,
    lemma21_check,
    max_antichain,
    middle_layer_bipartite,
    orient,
    read_orientation,
    sign_partition,
)
from ._core import _verify_claims_json


def verify_claims(family, q_min=None, q_max=None, **budget):
    """Rows of the claim report for "33q", "34q" or "baselines", plus the exit code."""
    return json.loads(_verify_claims_json(family, q_min, q_max, **budget))


__all__ = [
    "Construction",
    "OdiamError",
    "Orientation",
    "SearchOutcome",
    "brute_force_min_diameter",
    "canonical_case_classes",
    "case_signature",
    "complete_graph_orientation",
    "construct_33q",
    "construct_34q",
    "decide_diameter2",
    "decode_model",
    "encode_diameter2",
    "enumerate_diameter2",
    "export_cnf",
    "lemma21_check",
    "max_antichain",
    "middle_layer_bipartite",
    "orient",
    "read_orientation",
    "sign_partition",
    "verify_claims",
]
