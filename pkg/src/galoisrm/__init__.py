"""Generalized Reed-Muller codes over Galois rings GR(p^s, r)."""

from .errors import GaloisRMError
from .galois_ring import GaloisTower, build_tower
from .grm import GrmCode, standard_genmat
from .ring_base import RingParams


def tower(p: int, s: int, r: int, m: int) -> GaloisTower:
    """Shorthand for ``build_tower(RingParams(p, s, r), m)``."""
    return build_tower(RingParams(p, s, r), m)


__all__ = ["GaloisRMError", "GaloisTower", "GrmCode", "RingParams", "build_tower", "standard_genmat", "tower"]
