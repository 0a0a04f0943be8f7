"""Exact CR invariants of Sasakian eta-Einstein circle bundles from characteristic numbers."""

__version__ = "0.1.0"

from .exact import Poly, PolyRing, Variable, format_rational, to_rational  # noqa: E402
from .symfunc import Partition, partitions  # noqa: E402
from .charclass import ChVector, KEBase, bochner_ch, ch_to_chern, chern_to_ch, integrate, twist_ch  # noqa: E402
from .invariants import (  # noqa: E402
    I_phi,
    I_varsigma,
    InvPoly,
    burns_epstein,
    complete_intersection_base,
    decompose_invariant,
    validate_base,
)
from .family import conjecture_coefficients, family_I_varsigma, family_mu, leading_term_check  # noqa: E402
from .parser import parse_invariant_poly  # noqa: E402
