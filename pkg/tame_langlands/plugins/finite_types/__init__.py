"""
Finite Types Plugin

Cuspidal types of GL_n over the residue field: parameters, the Green trace formula on
regular elliptic elements and an exact census against the character table oracle.
"""

from .cuspidal_census import CensusResult, cuspidal_census, cuspidal_degree, cuspidal_rows, regular_elliptic_classes
from .gl_model import elliptic_element, general_linear_group, gl_order, proper_radicals, unipotent_radical
from .green_trace import CuspidalTypeParam, conjugate_params, green_trace, twist_param, unramified_field

__all__ = [
    "CensusResult",
    "CuspidalTypeParam",
    "conjugate_params",
    "cuspidal_census",
    "cuspidal_degree",
    "cuspidal_rows",
    "elliptic_element",
    "general_linear_group",
    "gl_order",
    "green_trace",
    "proper_radicals",
    "regular_elliptic_classes",
    "twist_param",
    "unipotent_radical",
    "unramified_field",
]
