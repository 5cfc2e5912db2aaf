from __future__ import annotations

import logging

from core.algebra import rank, smith_normal_form

from .constructions import cone
from .models import ChainMap, Complex, HomologyProfile

logger = logging.getLogger(__name__)


def homology(c: Complex) -> HomologyProfile:
    """
    Homology of a bounded free complex.

    Over a field the rank in degree i is dim ker d_i - rank d_{i+1}. Over Z
    the Smith normal form of every differential gives its rank and, for
    d_{i+1}, the torsion of H_i.
    """
    ring = c.ring
    degrees = c.degrees()
    ranks: dict[int, int] = {}
    factors: dict[int, tuple[int, ...]] = {}
    for i in degrees:
        if i not in c.differentials:
            ranks[i] = 0
        elif ring.is_field:
            ranks[i] = rank(c.differentials[i])
        else:
            factors[i] = smith_normal_form(c.differentials[i]).invariant_factors
            ranks[i] = len(factors[i])

    free_ranks = {}
    torsion = {}
    for i in degrees:
        free_ranks[i] = c.dim(i) - ranks[i] - ranks.get(i + 1, 0)
        torsion[i] = tuple(d for d in factors.get(i + 1, ()) if d > 1)
    profile = HomologyProfile(ring, free_ranks, torsion)
    logger.debug(f"Homology | {ring} | dims={c.dims} | ranks={dict(profile.free_ranks)}")
    return profile


def is_acyclic(c: Complex) -> bool:
    return homology(c).is_zero()


def is_quasi_iso(f: ChainMap) -> bool:
    """
    f is a quasi-isomorphism exactly when its cone is acyclic
    """
    return is_acyclic(cone(f))
