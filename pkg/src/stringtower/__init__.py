"""Exact calculator for connected-cover towers of O(p,q), U(p,q) and Sp(p,q)."""

from .abgroup import (
    FgAbGroup,
    GroupElement,
    IntegerMatrix,
    cokernel,
    direct_sum,
    ext,
    hom,
    parse_group,
    smith_normal_form,
    tensor,
    tor,
)
from .homotopy import GroupDescriptor, Unknown, parse_descriptor, pi
from .lift import evaluate_lift, evaluate_twisted, parse_profile
from .tower import build_tower, green_schwarz_spec, twisted_descriptor

__version__ = "0.1.0"
