"""Exact computation in the Euclidean Picard modular groups PU(2,1; O_d), d = 2, 7, 11."""
from .qfield import KNum, RealQuad, SUPPORTED_D
from .isometry import INFINITY, GroupElem, act_boundary, isometric_sphere, is_unitary
from .generators import generators
from .words import Word, evaluate_word, format_word, parse_word
from .stabilizer import prism, prism_reduce, relators, stab_decompose, verify_side_pairings
from .covering import covering_spheres, verify_covering
from .decompose import decompose, random_element, random_word

__version__ = "0.1.0"

__all__ = [
    "KNum", "RealQuad", "SUPPORTED_D",
    "INFINITY", "GroupElem", "act_boundary", "isometric_sphere", "is_unitary",
    "generators", "Word", "evaluate_word", "format_word", "parse_word",
    "prism", "prism_reduce", "relators", "stab_decompose", "verify_side_pairings",
    "covering_spheres", "verify_covering", "decompose", "random_element", "random_word",
]
