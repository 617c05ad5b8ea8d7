"""Independence polynomials of trees and forests.

The coefficient of x^k in I(G; x) counts the independent sets of size k.
The heavy lifting happens in the C++ extension; coefficients come back as
ordinary Python ints, so they stay exact at any size.

>>> import indpoly
>>> indpoly.independence_polynomial(3, [(0, 1), (1, 2)])
[1, 3, 1]
"""

from ._indpoly import (
    InputError,
    brute_force_polynomial,
    compute_record,
    enumerate_trees,
    evaluate,
    format_edge_list,
    independence_number,
    independence_polynomial,
    parse_edge_list,
    path_polynomial,
    prufer_decode,
    prufer_encode,
    random_tree,
    star_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "InputError",
    "brute_force_polynomial",
    "compute_record",
    "enumerate_trees",
    "evaluate",
    "format_edge_list",
    "independence_number",
    "independence_polynomial",
    "parse_edge_list",
    "path_polynomial",
    "prufer_decode",
    "prufer_encode",
    "random_tree",
    "star_polynomial",
]
