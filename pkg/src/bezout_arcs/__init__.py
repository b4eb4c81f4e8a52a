"""Bezout transformations on coprime pairs, Bezout sets and their quadratic arcs."""

from .arcs import ArcSpec, arc_point, arc_points_in_range, build_arc, curve_residual, group_into_arcs
from .bezout import (
    BezoutPoint,
    CoprimePair,
    bezout_minus,
    bezout_plus,
    bezout_plus_via_theta,
    bezout_signed,
    bezout_zero,
    flip,
    theta,
)
from .errors import ConsistencyError, DomainError, MagnitudeError, NotCoprimeError, ZeroInputError
from .farey import farey_sequence, mediant, predecessor, successor
from .nt_core import Factorization, extended_euclid, factorize, gcd, mod_pow, squarefree_part, totient
from .set_builder import BezoutSet, build_bezout_set, set_stats

__version__ = "0.1.0"
