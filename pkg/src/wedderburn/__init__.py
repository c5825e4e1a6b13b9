"""Certified Wedderburn-Artin decompositions of structure-constant algebras."""
from .algebra import (Algebra, change_of_basis, direct_sum, find_unity, group_algebra_cyclic,
                      matrix_algebra, quaternion_algebra, restrict_scalars, scramble, validate)
from .certify import (prime_equivalence_probe, verify_certificate, verify_division_ring,
                      verify_isomorphism, verify_matrix_units, verify_not_prime_witness)
from .decompose import Certificate, decompose
from .fields import GF, QQ

__version__ = "0.1.0"
